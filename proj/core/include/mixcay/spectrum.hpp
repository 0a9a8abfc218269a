#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace mixcay {

using Complex = std::complex<double>;

inline constexpr double kMergeTolerance = 1e-6;
inline constexpr double kIntegralityTolerance = 1e-6;

struct SpectrumEntry {
  Complex value;
  std::size_t multiplicity = 0;
};

/// Eigenvalues with multiplicities, sorted by (real, imaginary) ascending.
/// Values within the merge tolerance of each other share one entry.
class SpectrumMultiset {
 public:
  SpectrumMultiset() = default;

  static SpectrumMultiset from_values(std::vector<Complex> values,
                                      double merge_tolerance = kMergeTolerance);
  static SpectrumMultiset from_weighted(const std::vector<SpectrumEntry>& weighted,
                                        double merge_tolerance = kMergeTolerance);

  const std::vector<SpectrumEntry>& entries() const noexcept { return entries_; }
  std::size_t total() const noexcept;
  /// Every eigenvalue repeated by multiplicity, in canonical order.
  std::vector<Complex> expanded() const;

  double max_distance_to_integer() const;
  double max_distance_to_gaussian_integer() const;

 private:
  std::vector<SpectrumEntry> entries_;
};

/// Sorts by real part, then by imaginary part among values whose real parts
/// chain together within `tolerance`.
void canonical_sort(std::vector<Complex>& values, double tolerance = kMergeTolerance);

/// Pointwise comparison of the expanded, canonically sorted multisets.
bool approx_equal(const SpectrumMultiset& a, const SpectrumMultiset& b,
                  double tolerance = kMergeTolerance);

double distance_to_integer(Complex z);
double distance_to_gaussian_integer(Complex z);

}  // namespace mixcay
