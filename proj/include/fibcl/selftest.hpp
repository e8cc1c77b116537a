#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fibcl/quaternion.hpp"

namespace fibcl {

struct SelftestOptions {
  /// Source of quaternion structure constants for the table group. Tests swap
  /// in a corrupted table here to confirm the group notices.
  std::function<StructureTable(const AlgebraParams&)> table = structure_table;
};

struct SelftestGroup {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelftestResult {
  std::vector<SelftestGroup> groups;
  bool all_passed() const;
};

/// Embedded identity suite: quaternion table, norm multiplicativity, Binet,
/// Horadam relation, polarization, PBW dimension, worked fixture algebras.
SelftestResult selftest(const SelftestOptions& options = {});

}  // namespace fibcl
