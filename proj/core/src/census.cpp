#include "mixcay/census.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <thread>

#include "mixcay/eigen_oracle.hpp"
#include "mixcay/error.hpp"
#include "mixcay/integrality.hpp"
#include "mixcay/spectra.hpp"

namespace mixcay {
namespace {

struct Outcome {
  CensusRow row;
  std::vector<std::string> problems;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

Outcome examine(const FiniteGroup& group, const CharacterTable& table,
                const std::vector<std::size_t>& classes, std::uint64_t mask, double tol) {
  const auto& cd = group.conjugacy();
  std::vector<Element> members;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (mask >> k & 1U) {
      const auto& cls = cd.classes[classes[k]];
      members.insert(members.end(), cls.begin(), cls.end());
    }
  }
  Outcome out;
  out.row.bitmask = mask;
  out.row.set = ElementSet(std::move(members));
  const ConnectionSet s = connection_set(group, out.row.set);
  if (!s.is_normal) {
    out.problems.push_back("enumerated set is not normal");
    return out;
  }

  const bool decision = decide_h_integral(group, s).decision;
  const auto h_oracle = eig_hermitian_oracle(hermitian_adjacency(group, s));
  const auto a_oracle = eig_general_oracle(zero_one_adjacency(group, s).cast<Complex>());
  const double int_dist = h_oracle.max_distance_to_integer();
  const double gauss_dist = a_oracle.max_distance_to_gaussian_integer();

  out.row.h_integral = decision;
  out.row.h_integral_oracle = int_dist <= tol;
  out.row.gaussian_integral = gauss_dist <= tol;
  out.row.max_oracle_distance = std::max(int_dist, gauss_dist);

  if (out.row.h_integral_oracle != decision) {
    out.problems.push_back("Hermitian oracle distance " + fmt(int_dist) + " vs decision " +
                           (decision ? "integral" : "non-integral"));
  }
  if (out.row.gaussian_integral != decision) {
    out.problems.push_back("adjacency oracle Gaussian distance " + fmt(gauss_dist) +
                           " vs decision " + (decision ? "integral" : "non-integral"));
  }
  if (!approx_equal(h_spectrum_normal(group, table, s).spectrum, h_oracle, tol)) {
    out.problems.push_back("Hermitian formula spectrum differs from oracle");
  }
  if (!approx_equal(adjacency_spectrum_normal(group, table, s).spectrum, a_oracle, tol)) {
    out.problems.push_back("adjacency formula spectrum differs from oracle");
  }
  return out;
}

}  // namespace

CensusReport run_census(const FiniteGroup& group, const CharacterTable& table,
                        const CensusOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const auto& cd = group.conjugacy();

  std::vector<std::size_t> classes;
  for (std::size_t c = 0; c < cd.num_classes(); ++c) {
    if (cd.representatives[c] != kIdentity) classes.push_back(c);
  }
  std::sort(classes.begin(), classes.end(), [&](std::size_t a, std::size_t b) {
    return cd.representatives[a] < cd.representatives[b];
  });
  if (classes.size() > options.max_classes || classes.size() >= 63) {
    throw Error(ErrorCode::OrderLimitExceeded,
                group.name() + " has " + std::to_string(classes.size()) +
                    " non-identity classes; census limit is " +
                    std::to_string(options.max_classes));
  }

  const std::uint64_t total = std::uint64_t{1} << classes.size();
  std::vector<Outcome> outcomes(total);
  const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(total)));

  // Strided split; each worker writes only its own slots.
  std::vector<std::exception_ptr> errors(jobs);
  auto work = [&](unsigned w) {
    try {
      for (std::uint64_t m = w; m < total; m += jobs) {
        outcomes[m] = examine(group, table, classes, m, options.tolerance);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  CensusReport report;
  report.group = group.name();
  report.order = group.order();
  report.classes = classes.size();
  report.examined = total;
  report.rows.reserve(total);
  for (auto& o : outcomes) {
    report.h_integral += o.row.h_integral;
    report.gaussian_integral += o.row.gaussian_integral;
    report.neither += !o.row.h_integral && !o.row.gaussian_integral;
    for (auto& p : o.problems) report.disagreements.push_back({o.row.bitmask, std::move(p)});
    report.rows.push_back(std::move(o.row));
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace mixcay
