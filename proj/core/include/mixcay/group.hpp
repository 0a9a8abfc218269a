#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mixcay/element_set.hpp"
#include "mixcay/error.hpp"

namespace mixcay {

inline constexpr Element kIdentity = 0;

struct GroupLimits {
  std::size_t max_order = 2048;
  /// Above this order associativity is spot-checked on 10n random triples.
  std::size_t exhaustive_associativity_max = 512;
  std::uint64_t spot_check_seed = 0x5EED;
};

/// Partition of a group into conjugacy classes. Classes are ordered by their
/// least element, which is also the representative; class 0 is {identity}.
struct ConjugacyData {
  std::vector<std::vector<Element>> classes;
  std::vector<std::size_t> class_of;
  std::vector<Element> representatives;
  std::vector<std::size_t> centralizer_orders;

  std::size_t num_classes() const noexcept { return classes.size(); }
  std::size_t class_size(std::size_t c) const { return classes[c].size(); }
};

class FiniteGroup;

namespace detail {
FiniteGroup make_group(std::string name, std::size_t order, std::vector<Element> table,
                       std::vector<std::string> element_names);
}  // namespace detail

/// A finite group on the dense index set 0..n-1 with 0 as identity.
/// Immutable after construction; element orders and conjugacy classes are
/// computed eagerly.
class FiniteGroup {
 public:
  std::size_t order() const noexcept { return order_; }
  const std::string& name() const noexcept { return name_; }

  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  /// g^k for any integer k (negative powers go through the inverse).
  Element pow(Element g, std::int64_t k) const;
  /// x g x^-1
  Element conjugate(Element g, Element x) const { return mul(mul(x, g), inv(x)); }

  std::size_t element_order(Element g) const { return orders_[g]; }
  const ConjugacyData& conjugacy() const noexcept { return conjugacy_; }
  std::size_t class_of(Element g) const { return conjugacy_.class_of[g]; }
  bool is_abelian() const noexcept { return conjugacy_.num_classes() == order_; }

  const std::string& element_name(Element g) const { return names_[g]; }
  /// Resolves a presentation name ("a3x", "a^3x"), a cycle string, or a raw
  /// index token "#7".
  std::optional<Element> find_element(std::string_view token) const;
  /// Parses a comma-separated element list; throws UnknownElement naming the
  /// offending token.
  ElementSet parse_elements(std::string_view list) const;

 private:
  friend FiniteGroup detail::make_group(std::string, std::size_t, std::vector<Element>,
                                        std::vector<std::string>);
  FiniteGroup() = default;

  std::string name_;
  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::size_t> orders_;
  std::vector<std::string> names_;
  ConjugacyData conjugacy_;
};

/// Validates an n x n Cayley table (row g lists g*h) and builds the group.
/// Throws NoIdentity when row/column 0 is not the identity map and NotAGroup
/// (with a witness) on Latin-square or associativity failure.
FiniteGroup build_from_table(const std::vector<std::vector<Element>>& rows,
                             const GroupLimits& limits = {}, std::string name = "table");

/// Reads the Cayley-table text format: first line n, then n rows of n
/// whitespace-separated indices.
FiniteGroup read_cayley_table(std::istream& in, const GroupLimits& limits = {},
                              std::string name = "table");

std::size_t element_order(const FiniteGroup& group, Element g);
const ConjugacyData& conjugacy_classes(const FiniteGroup& group);

/// Elements whose order is divisible by 4.
ElementSet gamma4(const FiniteGroup& group);
inline bool in_gamma4(const FiniteGroup& group, Element g) {
  return group.element_order(g) % 4 == 0;
}

}  // namespace mixcay
