#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mixcay/chartable.hpp"
#include "mixcay/element_set.hpp"
#include "mixcay/group.hpp"

namespace mixcay {

struct CensusOptions {
  unsigned jobs = 1;
  /// Refuse groups with more non-identity classes than this (2^k sets).
  std::size_t max_classes = 20;
  double tolerance = 1e-6;
};

struct CensusRow {
  std::uint64_t bitmask = 0;  // bit k selects the k-th non-identity class
  ElementSet set;
  bool h_integral = false;         // exact decision
  bool gaussian_integral = false;  // general oracle, within tolerance of Z[i]
  bool h_integral_oracle = false;  // Hermitian oracle, within tolerance of Z
  double max_oracle_distance = 0;  // max of both oracle distances
};

struct CensusDisagreement {
  std::uint64_t bitmask = 0;
  std::string what;
};

struct CensusReport {
  std::string group;
  std::size_t order = 0;
  std::size_t classes = 0;  // non-identity classes
  std::uint64_t examined = 0;
  std::uint64_t h_integral = 0;
  std::uint64_t gaussian_integral = 0;
  std::uint64_t neither = 0;
  std::vector<CensusDisagreement> disagreements;
  std::vector<CensusRow> rows;
  double seconds = 0;
};

/// Visits every union of non-identity conjugacy classes (classes ordered by
/// representative, subsets by ascending bitmask), decides H-integrality
/// exactly and compares with both oracles and both character formulas.
/// Rows and disagreements come out in bitmask order for any `jobs`.
/// Throws OrderLimitExceeded when the class count exceeds `max_classes`.
CensusReport run_census(const FiniteGroup& group, const CharacterTable& table,
                        const CensusOptions& options = {});

}  // namespace mixcay
