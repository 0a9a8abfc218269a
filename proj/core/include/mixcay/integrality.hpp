#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixcay/atoms.hpp"
#include "mixcay/chartable.hpp"
#include "mixcay/spectra.hpp"

namespace mixcay {

/// Integer coefficient c_g per element (index = element), standing for the
/// group-algebra vector Σ i c_g g.
using CoefficientVector = std::vector<std::int64_t>;

/// Numerical agreement record attached to an exact verdict.
struct OracleCheck {
  double max_int_distance = 0;       // Hermitian oracle eigenvalues vs Z
  double max_gaussian_distance = 0;  // general oracle eigenvalues vs Z[i]
  std::optional<double> max_fg_distance;  // f_j, g_j vs Z, when computed
  bool h_integral = false;
  bool gaussian_integral = false;
  bool agrees = true;
};

struct IntegralityVerdict {
  bool decision = false;
  std::optional<bool> sym_in_B;
  std::optional<bool> skew_in_D;
  std::optional<SetWitness> sym_witness;
  std::optional<SetWitness> skew_witness;
  /// One human-readable line per criterion evaluated.
  std::vector<std::string> trace;
  std::optional<OracleCheck> cross_check;
};

/// Normal symmetric S: integral iff S ∈ B(Γ). Throws NonNormalSet, NotSymmetric.
IntegralityVerdict decide_integral_simple(const FiniteGroup& group, const ConnectionSet& s);
/// Normal skew-symmetric S: H-integral iff S ∈ D(Γ). Throws NonNormalSet, NotSkewSymmetric.
IntegralityVerdict decide_h_integral_oriented(const FiniteGroup& group, const ConnectionSet& s);
/// Normal S: H-integral iff S \ S̄ ∈ B(Γ) and S̄ ∈ D(Γ). Throws NonNormalSet.
IntegralityVerdict decide_h_integral(const FiniteGroup& group, const ConnectionSet& s);
/// Gaussian integrality of the (0,1)-adjacency spectrum; decided by the same
/// exact criterion as H-integrality. Throws NonNormalSet.
IntegralityVerdict decide_gaussian_integral(const FiniteGroup& group, const ConnectionSet& s);

/// Computes both oracle spectra (and the f/g split) and compares them with
/// `verdict.decision`. Stores the record in `verdict.cross_check`.
void attach_cross_check(IntegralityVerdict& verdict, const FiniteGroup& group,
                        const CharacterTable& table, const ConnectionSet& s,
                        double tolerance = kIntegralityTolerance);

struct CharacterConditionReport {
  bool cond_i = true;    // equal class sums on ≈-related classes
  bool cond_ii = true;   // class sum of g is minus that of g^-1
  bool cond_iii = true;  // zero class sum outside Γ(4)
  std::optional<std::pair<Element, Element>> witness_i;
  std::optional<Element> witness_ii;
  std::optional<Element> witness_iii;
  std::vector<Complex> values;          // χ_j(Σ i c_g g)
  std::vector<double> distances;        // distance of each value to Z
  bool all_integral = true;             // every distance <= tolerance

  bool conditions_hold() const noexcept { return cond_i && cond_ii && cond_iii; }
  bool consistent() const noexcept { return conditions_hold() == all_integral; }
};

CharacterConditionReport check_character_integrality_conditions(
    const FiniteGroup& group, const CharacterTable& table, const CoefficientVector& c,
    double tolerance = kIntegralityTolerance);

}  // namespace mixcay
