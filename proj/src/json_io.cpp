#include "fibcl/json_io.hpp"

#include "fibcl/error.hpp"

namespace fibcl {

namespace {

Rat rat_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_string()) {
    throw Error(Errc::Parse, std::string("missing string field '") + key + "'");
  }
  return Rat::parse(j.at(key).get<std::string>());
}

std::string canonical_name(const AlgebraParams& p) {
  return "H(" + p.beta1().str() + "," + p.beta2().str() + ")";
}

}  // namespace

Json to_json(const QSqrt5& x) { return Json{{"a", x.a().str()}, {"b", x.b().str()}}; }

QSqrt5 qsqrt5_from_json(const Json& j) { return {rat_field(j, "a"), rat_field(j, "b")}; }

Json to_json(const Quaternion& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(c.str());
  return Json{{"beta1", x.params().beta1().str()},
              {"beta2", x.params().beta2().str()},
              {"coeffs", std::move(coeffs)}};
}

Quaternion quaternion_from_json(const Json& j) {
  AlgebraParams params(rat_field(j, "beta1"), rat_field(j, "beta2"));
  if (!j.contains("coeffs") || !j.at("coeffs").is_array() || j.at("coeffs").size() != 4) {
    throw Error(Errc::Parse, "'coeffs' must be an array of 4 rationals");
  }
  QuatCoeffs c;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& e = j.at("coeffs").at(i);
    if (!e.is_string()) throw Error(Errc::Parse, "coefficient must be a string");
    c[i] = Rat::parse(e.get<std::string>());
  }
  return {std::move(params), c};
}

Json to_json(const ThresholdCertificate& c) {
  return Json{{"n_prime", c.n_prime}, {"horizon", c.horizon}, {"limit_sign", c.limit_sign}};
}

ThresholdCertificate certificate_from_json(const Json& j) {
  try {
    ThresholdCertificate c;
    c.n_prime = j.at("n_prime").get<std::uint64_t>();
    c.horizon = j.at("horizon").get<std::uint64_t>();
    c.limit_sign = j.at("limit_sign").get<int>();
    if (c.limit_sign != 1 && c.limit_sign != -1) throw Error(Errc::Parse, "limit_sign must be +-1");
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::Parse, e.what());
  }
}

Json to_json(const GrowthProfile& g) {
  return Json{{"S_alpha", to_json(g.S_alpha)},
              {"S_beta", to_json(g.S_beta)},
              {"S_osc", to_json(g.S_osc)},
              {"E", to_json(g.E)}};
}

Json to_json(const ClassificationReport& r) {
  return Json{{"beta1", r.params.beta1().str()},
              {"beta2", r.params.beta2().str()},
              {"E", to_json(r.E)},
              {"sign_E", r.sign_E},
              {"input_is_division", r.input_is_division},
              {"n_prime", r.certificate.n_prime},
              {"form", Json::array({r.form[0].str(), r.form[1].str()})},
              {"clifford_class", std::string(class_name(r.clifford_class))},
              {"canonical", canonical_name(r.canonical)},
              {"scaling_witness",
               Json::array({r.scaling_witness[0].str(), r.scaling_witness[1].str()})}};
}

}  // namespace fibcl
