#include "mixcay/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace mixcay {

void canonical_sort(std::vector<Complex>& values, double tolerance) {
  std::sort(values.begin(), values.end(),
            [](const Complex& a, const Complex& b) { return a.real() < b.real(); });
  std::size_t start = 0;
  for (std::size_t k = 1; k <= values.size(); ++k) {
    if (k == values.size() || values[k].real() - values[k - 1].real() > tolerance) {
      std::sort(values.begin() + static_cast<std::ptrdiff_t>(start),
                values.begin() + static_cast<std::ptrdiff_t>(k),
                [](const Complex& a, const Complex& b) { return a.imag() < b.imag(); });
      start = k;
    }
  }
}

SpectrumMultiset SpectrumMultiset::from_values(std::vector<Complex> values,
                                               double merge_tolerance) {
  canonical_sort(values, merge_tolerance);
  SpectrumMultiset out;
  Complex sum = 0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!out.entries_.empty() && std::abs(values[k] - out.entries_.back().value) <= merge_tolerance) {
      auto& e = out.entries_.back();
      sum += values[k];
      ++e.multiplicity;
      continue;
    }
    if (!out.entries_.empty()) {
      out.entries_.back().value = sum / static_cast<double>(out.entries_.back().multiplicity);
    }
    out.entries_.push_back({values[k], 1});
    sum = values[k];
  }
  if (!out.entries_.empty()) {
    out.entries_.back().value = sum / static_cast<double>(out.entries_.back().multiplicity);
  }
  return out;
}

SpectrumMultiset SpectrumMultiset::from_weighted(const std::vector<SpectrumEntry>& weighted,
                                                 double merge_tolerance) {
  std::vector<Complex> values;
  for (const auto& e : weighted) values.insert(values.end(), e.multiplicity, e.value);
  return from_values(std::move(values), merge_tolerance);
}

std::size_t SpectrumMultiset::total() const noexcept {
  std::size_t t = 0;
  for (const auto& e : entries_) t += e.multiplicity;
  return t;
}

std::vector<Complex> SpectrumMultiset::expanded() const {
  std::vector<Complex> out;
  out.reserve(total());
  for (const auto& e : entries_) out.insert(out.end(), e.multiplicity, e.value);
  return out;
}

double distance_to_integer(Complex z) {
  return std::hypot(z.real() - std::round(z.real()), z.imag());
}

double distance_to_gaussian_integer(Complex z) {
  return std::hypot(z.real() - std::round(z.real()), z.imag() - std::round(z.imag()));
}

double SpectrumMultiset::max_distance_to_integer() const {
  double worst = 0;
  for (const auto& e : entries_) worst = std::max(worst, distance_to_integer(e.value));
  return worst;
}

double SpectrumMultiset::max_distance_to_gaussian_integer() const {
  double worst = 0;
  for (const auto& e : entries_) worst = std::max(worst, distance_to_gaussian_integer(e.value));
  return worst;
}

bool approx_equal(const SpectrumMultiset& a, const SpectrumMultiset& b, double tolerance) {
  auto x = a.expanded();
  auto y = b.expanded();
  if (x.size() != y.size()) return false;
  canonical_sort(x, tolerance);
  canonical_sort(y, tolerance);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (std::abs(x[k] - y[k]) > tolerance) return false;
  }
  return true;
}

}  // namespace mixcay
