#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fcaffine/qpoly.hpp"

namespace fcaffine {

/// A reference series: coefficients of q^0 .. q^max_degree, with the
/// periodic tail marked as starting at `onset`.
struct GoldenSeries {
  int n = 0;
  int max_degree = 0;
  int onset = 0;
  std::vector<BigInt> coeffs;
  friend bool operator==(const GoldenSeries&, const GoldenSeries&) = default;
};

/// f_3 .. f_12.
const std::vector<GoldenSeries>& golden_tables();

/// FNV-1a over "n:max_degree:onset:c0,c1,...;" for every table in order.
std::uint64_t golden_checksum(std::span<const GoldenSeries> tables);
/// Checksum of the embedded tables.
inline constexpr std::uint64_t kGoldenChecksum = 0xcff2dc1aac1f99d1ull;

struct GoldenMismatch {
  int n = 0;
  int degree = 0;
  BigInt expected;
  BigInt got;
  std::string to_string() const;  // "n=6 degree=9 expected=152 got=153"
};

/// First coefficient where `computed` disagrees with the table, if any.
std::optional<GoldenMismatch> first_mismatch(const GoldenSeries& table, const QPoly& computed);

/// {"tables": [{"n": 3, "max_degree": 4, "onset": 2, "coeffs": ["1", ...]}]}
std::string golden_json(std::span<const GoldenSeries> tables);
/// Inverse of golden_json. Throws std::invalid_argument on malformed input.
std::vector<GoldenSeries> parse_golden_json(std::string_view text);

}  // namespace fcaffine
