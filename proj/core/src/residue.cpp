#include "mixcay/residue.hpp"

#include <numeric>
#include <string>

#include "mixcay/error.hpp"

namespace mixcay {

std::vector<std::int64_t> units(std::int64_t m, ResidueFilter filter) {
  return residue_set(m, 1, filter).members;
}

ResidueSet residue_set(std::int64_t n, std::int64_t d, ResidueFilter filter) {
  if (n <= 0 || d <= 0 || n % d != 0) {
    throw Error(ErrorCode::BadDivisor,
                std::to_string(d) + " is not a positive divisor of " + std::to_string(n));
  }
  const std::int64_t q = n / d;
  if (filter != ResidueFilter::All && q % 4 != 0) {
    throw Error(ErrorCode::FilterUndefined,
                "mod-4 residue filter needs 4 | n/d, got n/d = " + std::to_string(q));
  }
  ResidueSet out{n, d, filter, {}};
  // G_n(d) = d * G_{n/d}(1)
  for (std::int64_t k = 1; k < q; ++k) {
    if (std::gcd(k, q) != 1) continue;
    if (filter == ResidueFilter::OneMod4 && k % 4 != 1) continue;
    if (filter == ResidueFilter::ThreeMod4 && k % 4 != 3) continue;
    out.members.push_back(d * k);
  }
  return out;
}

}  // namespace mixcay
