#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <vector>

#include "mixcay/chartable.hpp"
#include "mixcay/element_set.hpp"
#include "mixcay/group.hpp"
#include "mixcay/spectrum.hpp"

namespace mixcay {

struct ConnectionSet {
  ElementSet members;
  ElementSet sym_part;   // S \ S̄
  ElementSet skew_part;  // S̄ = {u in S : u^-1 not in S}
  bool is_normal = false;

  bool is_symmetric() const noexcept { return skew_part.empty(); }
  bool is_skew_symmetric() const noexcept { return sym_part.empty(); }
};

/// Splits `members` into symmetric and skew parts. Throws ContainsIdentity.
ConnectionSet connection_set(const FiniteGroup& group, const ElementSet& members);

bool is_normal_set(const FiniteGroup& group, const ElementSet& set);

/// Entry (x, y) is 1, i or -i when y x^-1 lies in S \ S̄, S̄ or S̄^-1.
Eigen::MatrixXcd hermitian_adjacency(const FiniteGroup& group, const ConnectionSet& s);
/// Entry (x, y) is 1 when y x^-1 lies in S.
Eigen::MatrixXd zero_one_adjacency(const FiniteGroup& group, const ConnectionSet& s);

/// Eigenvalues (1/d_j) Σ_x α(x) χ_j(x), multiplicity d_j^2, for α given per class.
SpectrumMultiset color_spectrum(const CharacterTable& table, const std::vector<Complex>& alpha);
/// Same, for α given per element. Throws NotClassFunction if α is not
/// constant on conjugacy classes.
SpectrumMultiset color_spectrum_elementwise(const FiniteGroup& group, const CharacterTable& table,
                                            const std::vector<Complex>& alpha);

struct CharacterEigenvalue {
  std::size_t character = 0;
  int degree = 1;
  double lambda = 0;  // symmetric-part contribution
  double mu = 0;      // skew-part contribution
  double gamma() const noexcept { return lambda + mu; }
};

struct HSpectrum {
  std::vector<CharacterEigenvalue> per_character;
  SpectrumMultiset spectrum;
};

/// Hermitian spectrum of a normal mixed Cayley graph. Throws NonNormalSet.
HSpectrum h_spectrum_normal(const FiniteGroup& group, const CharacterTable& table,
                            const ConnectionSet& s);

struct AdjacencySpectrum {
  std::vector<Complex> per_character;
  SpectrumMultiset spectrum;
};

/// Spectrum of the (0,1)-adjacency matrix of a normal mixed Cayley graph.
AdjacencySpectrum adjacency_spectrum_normal(const FiniteGroup& group, const CharacterTable& table,
                                            const ConnectionSet& s);

struct GaussianTerm {
  double f = 0;
  double g = 0;
  Complex eigenvalue;  // f - i g
};

struct GaussianDecomposition {
  std::vector<GaussianTerm> per_character;
  double max_identity_residual = 0;
};

/// Real and imaginary split of the adjacency eigenvalues. The identity
/// f - i g = (1/d) Σ_S χ is checked to 1e-8 (ValidationFailure otherwise).
GaussianDecomposition gaussian_decomposition(const FiniteGroup& group, const CharacterTable& table,
                                             const ConnectionSet& s);

/// (1/d_j) Σ χ_j over closure_sym(x). Throws IdentityElement.
double c_value(const FiniteGroup& group, const CharacterTable& table, Element x, std::size_t j);
/// (1/d_j) Σ i(χ_j(s) - χ_j(s^-1)) over closure_skew(y). Throws NotAdmissible.
double s_value(const FiniteGroup& group, const CharacterTable& table, Element y, std::size_t j);

/// Σ over a set of (1/d_j) χ_j, used by the closure sums above.
Complex character_sum(const CharacterTable& table, const ElementSet& set, std::size_t j);

}  // namespace mixcay
