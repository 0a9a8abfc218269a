#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mixcay/group.hpp"

namespace mixcay {

/// A permutation of {0..k-1}; printed and parsed 1-based in cycle notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);
  static Permutation identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const {
    return point < images_.size() ? images_[point] : point;
  }
  Permutation padded(std::size_t degree) const;
  /// Apply *this first, then `next`.
  Permutation then(const Permutation& next) const;
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// Parses "(1 2 3)(4 5)"; "()" is the identity. `degree` pads the result.
Permutation parse_cycles(std::string_view text, std::size_t degree = 0);
/// Comma-separated generator list: "(1 2),(1 2 3)".
std::vector<Permutation> parse_generators(std::string_view text);
/// Canonical cycle string: each cycle starts at its least point, cycles
/// ordered by first point, fixed points omitted, identity "()".
std::string to_cycle_string(const Permutation& p);

/// Breadth-first closure of the generators. Element 0 is the identity and the
/// rest follow in discovery order (each discovered element times each
/// generator, in generator order). Products compose left to right.
FiniteGroup build_from_permutations(std::span<const Permutation> generators,
                                    const GroupLimits& limits = {},
                                    std::string name = "perm");

}  // namespace mixcay
