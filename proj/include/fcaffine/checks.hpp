#pragma once

#include <span>
#include <string>
#include <vector>

#include "fcaffine/golden.hpp"

namespace fcaffine {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// assemble_f against each table; optionally also the embedded checksum.
std::vector<CheckResult> golden_checks(std::span<const GoldenSeries> tables, bool check_checksum);

/// assemble_f against breadth-first enumeration through length max_len.
CheckResult oracle_check(int n, int max_len);
/// Default oracle depth: n + 2 floor(n/2) ceil(n/2) + n.
int default_oracle_length(int n);

/// Cross-module invariants at desk-scale sizes.
std::vector<CheckResult> property_checks();

}  // namespace fcaffine
