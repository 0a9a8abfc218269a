#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "mixcay/group.hpp"

namespace mixcay {

// Canonical element orderings (frozen; fixtures depend on them):
//   cyclic(n)      index k = residue k, named "k"
//   dihedral(n)    order 2n; index i = a^i, n+i = a^i b
//   dicyclic(n)    order 4n; index i = a^i (i < 2n), 2n+i = a^i b
//   modular16      index i = a^i, 8+i = a^i x  (xax^-1 = a^5)
//   sym(k), alt(k) breadth-first closure of fixed generators, cycle names
//   product(A, B)  index i*|B| + j = (A_i, B_j), named "A_i.B_j"
// Presentation names drop the caret: a^3x is "a3x", the identity is "1".

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup dihedral_group(std::size_t n);
FiniteGroup dicyclic_group(std::size_t n);
FiniteGroup modular16_group();
FiniteGroup symmetric_group(std::size_t k, const GroupLimits& limits = {});
FiniteGroup alternating_group(std::size_t k, const GroupLimits& limits = {});
FiniteGroup direct_product(const FiniteGroup& left, const FiniteGroup& right,
                           const GroupLimits& limits = {});

/// Builds a group from a descriptor string:
///   "cyclic:12", "dihedral:6", "dicyclic:3", "modular:16", "sym:4", "alt:4",
///   "product:cyclic:2,cyclic:4", "perm:(1 2),(1 2 3)", "table:<path>".
FiniteGroup build_family(std::string_view descriptor, const GroupLimits& limits = {});

}  // namespace mixcay
