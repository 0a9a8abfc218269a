#pragma once

#include <cstdint>
#include <vector>

namespace mixcay {

enum class ResidueFilter { All, OneMod4, ThreeMod4 };

/// G_n(d) = {k : 1 <= k <= n-1, gcd(k, n) = d}, optionally restricted to
/// d*k' with k' = 1 or 3 (mod 4); the restricted form needs 4 | n/d.
struct ResidueSet {
  std::int64_t modulus = 0;
  std::int64_t divisor = 0;
  ResidueFilter filter = ResidueFilter::All;
  std::vector<std::int64_t> members;
};

/// Throws BadDivisor unless d divides n, FilterUndefined for a mod-4 filter
/// when 4 does not divide n/d.
ResidueSet residue_set(std::int64_t n, std::int64_t d, ResidueFilter filter = ResidueFilter::All);

/// Units mod m in 1..m-1 matching the filter (G_m(1), G_m^1(1), G_m^3(1)).
std::vector<std::int64_t> units(std::int64_t m, ResidueFilter filter = ResidueFilter::All);

}  // namespace mixcay
