#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mixcay/element_set.hpp"
#include "mixcay/group.hpp"

namespace mixcay {

enum class AtomKind { Sim, Approx };

/// An equivalence class of ~ ([x], kind Sim) or of ≈ (⟦x⟧, kind Approx).
struct Atom {
  AtomKind kind = AtomKind::Sim;
  Element representative = kIdentity;
  ElementSet members;
};

/// [x] = {x^k : gcd(k, ord x) = 1}. Throws IdentityElement for x = 1.
Atom sim_atom(const FiniteGroup& group, Element x);
/// ⟦x⟧ = {x^k : k in G_m^1(1)}, m = ord x. Throws NotInGamma4.
Atom approx_atom(const FiniteGroup& group, Element x);

/// x ~ y (y generates the same cyclic subgroup as x).
bool sim_related(const FiniteGroup& group, Element x, Element y);
/// x ≈ y; false whenever either element lies outside Γ(4).
bool approx_related(const FiniteGroup& group, Element x, Element y);

/// Every [x] over Γ \ {1}, each listed once, ordered by least member.
std::vector<Atom> all_sim_atoms(const FiniteGroup& group);
/// Every ⟦x⟧ over Γ(4), each listed once, ordered by least member.
std::vector<Atom> all_approx_atoms(const FiniteGroup& group);

enum class WitnessKind {
  AtomNotContained,  // x in T but y in atom(x) is not
  NotSkewSymmetric,  // x and x^-1 both in T
  OutsideGamma4,     // x in T has order not divisible by 4
};

struct SetWitness {
  WitnessKind kind = WitnessKind::AtomNotContained;
  Element x = kIdentity;
  std::optional<Element> y;

  std::string describe(const FiniteGroup& group) const;
};

struct MembershipResult {
  bool member = true;
  std::optional<SetWitness> witness;

  explicit operator bool() const noexcept { return member; }
};

/// T ∈ B(Γ): T is a union of atoms [x]. Throws ContainsIdentity.
MembershipResult in_boolean_algebra(const FiniteGroup& group, const ElementSet& set);
/// T ∈ D(Γ): skew-symmetric, inside Γ(4), and a union of atoms ⟦x⟧. The
/// witness reports the first failing condition in that order.
MembershipResult in_skew_algebra(const FiniteGroup& group, const ElementSet& set);

/// y ∈ Γ(4) is admissible when no x in Cl(y) has a power x^r (r ≡ 3 mod 4,
/// r a unit mod ord y) back in Cl(y). Throws NotInGamma4.
bool is_admissible(const FiniteGroup& group, Element y);

enum class ClosureKind { Sym1, Skew4 };

struct ClosureSet {
  ClosureKind kind = ClosureKind::Sym1;
  Element seed = kIdentity;
  ElementSet members;
  /// Disjoint atoms whose union is `members`; representatives lie in Cl(seed).
  std::vector<Atom> atoms;
};

/// S_x^1: the union of [s] over s in Cl(x). Throws IdentityElement.
ClosureSet closure_sym(const FiniteGroup& group, Element x);
/// S_y^4: the union of ⟦s⟧ over s in Cl(y). Throws NotAdmissible (or
/// NotInGamma4 when y is outside Γ(4)).
ClosureSet closure_skew(const FiniteGroup& group, Element y);

/// g * T
ElementSet translate(const FiniteGroup& group, Element g, const ElementSet& set);
/// Set of inverses of T.
ElementSet inverse_set(const FiniteGroup& group, const ElementSet& set);
/// [x] with the convention [1] = {1}.
ElementSet sim_class_or_identity(const FiniteGroup& group, Element x);

struct ShiftIdentity {
  std::string label;      // "i", "ii.a", "ii.b", "iii.a", "iii.b", "iv"
  std::string statement;  // the set equation that was checked
  bool holds = false;
  ElementSet lhs;
  ElementSet rhs;
};

/// Checks the power-shift set identities for ord(x) = 2^t m (m odd, t >= 2)
/// by building both sides directly:
///   (i)    t >= 2:           [x] = x^m[x^2] ∪ x^3m[x^2]
///   (ii)   t >= 3, m ≡ 1:    ⟦x^2⟧ ∪ ⟦x^-2⟧ = [x^2] shifted by x^3m  (ii.a)
///                            ⟦x^-1⟧ = x^3m[x^2]                     (ii.b)
///   (iii)  t >= 3, m ≡ 3:    the same split shifted by x^m           (iii.a)
///                            ⟦x⟧ = x^m[x^2]                          (iii.b)
///   (iv)   t = 2:            x^m[x^4] = ⟦x⟧ (m ≡ 1) or ⟦x^-1⟧ (m ≡ 3)
/// When x^4 = 1 the convention [1] = {1} is used and `degenerate` is set.
struct PowerShiftReport {
  Element x = kIdentity;
  std::size_t two_exponent = 0;  // t
  std::size_t odd_part = 0;      // m
  bool degenerate = false;
  std::vector<ShiftIdentity> identities;

  bool all_hold() const;
};

/// Throws BadOrder when 4 does not divide ord(x).
PowerShiftReport power_shift_identities(const FiniteGroup& group, Element x);

}  // namespace mixcay
