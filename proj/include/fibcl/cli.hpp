#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "fibcl/selftest.hpp"

namespace fibcl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIndeterminate = 2;

/// Command grammar printed on usage errors.
extern const char* const kGrammar;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Renders selftest results; JSON mode emits one object per line.
void print_selftest(const SelftestResult& result, bool json, std::ostream& out);

}  // namespace fibcl::cli
