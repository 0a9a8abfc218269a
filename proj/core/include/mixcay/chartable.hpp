#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixcay/group.hpp"

namespace mixcay {

using Complex = std::complex<double>;

/// Class-algebra structure constants: a(i, j, k) counts the ways a fixed
/// element of class k factors as (element of class i) * (element of class j).
class ClassAlgebra {
 public:
  ClassAlgebra() = default;
  ClassAlgebra(std::size_t num_classes, std::vector<std::uint64_t> constants)
      : h_(num_classes), constants_(std::move(constants)) {}

  std::size_t num_classes() const noexcept { return h_; }
  std::uint64_t operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * h_ + j) * h_ + k];
  }

 private:
  std::size_t h_ = 0;
  std::vector<std::uint64_t> constants_;
};

ClassAlgebra structure_constants(const FiniteGroup& group, const ConjugacyData& classes);

/// Irreducible characters of a group, one row per character and one column
/// per conjugacy class (in ConjugacyData order).
class CharacterTable {
 public:
  CharacterTable(std::size_t group_order, ConjugacyData classes, std::vector<int> degrees,
                 std::vector<std::vector<Complex>> values);

  std::size_t num_characters() const noexcept { return degrees_.size(); }
  std::size_t group_order() const noexcept { return group_order_; }
  int degree(std::size_t j) const { return degrees_[j]; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  /// χ_j on the class with index c.
  Complex value(std::size_t j, std::size_t c) const { return values_[j][c]; }
  /// χ_j(g) for an element.
  Complex at(std::size_t j, Element g) const { return values_[j][classes_.class_of[g]]; }
  const std::vector<std::vector<Complex>>& values() const noexcept { return values_; }
  const ConjugacyData& classes() const noexcept { return classes_; }
  /// Index k with χ_k = conj(χ_j), if one matches within 1e-6.
  std::optional<std::size_t> conjugate_row(std::size_t j) const { return conjugate_row_[j]; }

 private:
  std::size_t group_order_;
  ConjugacyData classes_;
  std::vector<int> degrees_;
  std::vector<std::vector<Complex>> values_;
  std::vector<std::optional<std::size_t>> conjugate_row_;
};

struct CharacterTableOptions {
  std::uint64_t seed = 0x5EED;
  int max_attempts = 8;
  /// Values are rounded to this grid before canonical sorting and storage.
  double rounding = 1e-9;
};

/// Computes Irr(Γ) by simultaneous diagonalization of the class matrices.
/// Rows are sorted by degree, then by value tuple (descending), which puts the
/// trivial character first. Throws DegenerateSplitFailure when the common
/// eigenspaces cannot be separated within `max_attempts` seeds, and
/// ValidationFailure when the result fails `validate`.
CharacterTable character_table(const FiniteGroup& group, const CharacterTableOptions& options = {});

struct ValidationReport {
  double row_orthogonality = 0;     // max |Σ_c |Cl_c| χ_j conj χ_k − n δ_jk|
  double column_orthogonality = 0;  // max |Σ_j χ_j(g) conj χ_j(g') − δ |C(g)||
  double degree_sum = 0;            // |Σ d_j^2 − n|
  double identity_column = 0;       // max |χ_j(1) − d_j|
  double conjugate_pairing = 0;     // max_j min_k max_c |χ_k − conj χ_j|
  bool degrees_divide_order = true;
  bool trivial_first = true;
  double tolerance = 0;             // 1e-8 * n

  bool passed() const;
  std::string summary() const;
};

ValidationReport validate(const CharacterTable& table);

}  // namespace mixcay
