#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fibcl {

enum class Errc {
  DivByZero,
  MixedAlgebras,
  NotInvertible,
  ZeroScale,
  Indeterminate,
  BelowThreshold,
  Degenerate,
  MixedForms,
  MixedBasepoints,
  InvalidParams,
  Parse,
  Internal,
};

constexpr std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DivByZero: return "EDivByZero";
    case Errc::MixedAlgebras: return "EMixedAlgebras";
    case Errc::NotInvertible: return "ENotInvertible";
    case Errc::ZeroScale: return "EZeroScale";
    case Errc::Indeterminate: return "EIndeterminate";
    case Errc::BelowThreshold: return "EBelowThreshold";
    case Errc::Degenerate: return "EDegenerate";
    case Errc::MixedForms: return "EMixedForms";
    case Errc::MixedBasepoints: return "EMixedBasepoints";
    case Errc::InvalidParams: return "EInvalidParams";
    case Errc::Parse: return "EParse";
    case Errc::Internal: return "EInternal";
  }
  return "EUnknown";
}

/// Every domain failure in the library is reported through this type. The
/// message carries the offending exact values in textual rational form.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return errc_name(code_); }
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace fibcl
