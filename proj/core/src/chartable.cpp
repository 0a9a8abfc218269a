#include "mixcay/chartable.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

namespace mixcay {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;

double snap(double v, double grid) { return std::round(v / grid) * grid + 0.0; }

// Gauss-Newton on ω(k)ω(l) = Σ_m a_klm ω(m), ω(0) = 1, started from the
// grid-snapped row. The start point does not depend on the seed, so neither
// does the result; the snapping error (up to half a grid step) is removed.
void polish_row(const ClassAlgebra& alg, const ConjugacyData& cd, int degree, std::vector<Complex>& chi) {
  const std::size_t h = chi.size();
  if (h < 2 || h > 128) return;
  Eigen::VectorXcd omega(h);
  for (std::size_t k = 0; k < h; ++k) omega[k] = chi[k] * static_cast<double>(cd.class_size(k)) / double(degree);
  // Nonzero structure constants per equation; the rows are sparse.
  struct Eq {
    std::size_t k, l;
    std::vector<std::pair<std::size_t, double>> terms;
  };
  std::vector<Eq> eqs;
  for (std::size_t k = 1; k < h; ++k)
    for (std::size_t l = k; l < h; ++l) {
      Eq e{k, l, {}};
      for (std::size_t m = 0; m < h; ++m)
        if (alg(k, l, m) != 0) e.terms.emplace_back(m, static_cast<double>(alg(k, l, m)));
      eqs.push_back(std::move(e));
    }
  auto value = [](const Eq& e, const Eigen::VectorXcd& w) {
    Complex v = w[e.k] * w[e.l];
    for (const auto& [m, a] : e.terms) v -= a * w[m];
    return v;
  };
  Eigen::VectorXcd w = omega;
  std::vector<std::pair<std::size_t, Complex>> row;
  for (int it = 0; it < 3; ++it) {
    MatrixXcd normal_eq = MatrixXcd::Zero(h - 1, h - 1);
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(h - 1);
    for (const auto& e : eqs) {
      row.clear();
      for (const auto& [m, a] : e.terms)
        if (m > 0) row.emplace_back(m - 1, -a);
      row.emplace_back(e.k - 1, w[e.l]);
      row.emplace_back(e.l - 1, w[e.k]);
      const Complex f = value(e, w);
      for (const auto& [p, jp] : row) {
        rhs[p] -= std::conj(jp) * f;
        for (const auto& [q, jq] : row) normal_eq(p, q) += std::conj(jp) * jq;
      }
    }
    const Eigen::VectorXcd step = normal_eq.ldlt().solve(rhs);
    if (!step.allFinite()) return;
    w.tail(h - 1) += step;
  }
  double worst = 0;
  for (const auto& e : eqs) worst = std::max(worst, std::abs(value(e, w)));
  if (!w.allFinite() || (w - omega).cwiseAbs().maxCoeff() > 1e-6 || worst > 1e-9) return;
  for (std::size_t k = 0; k < h; ++k) chi[k] = w[k] * double(degree) / static_cast<double>(cd.class_size(k));
}

// Splits every subspace of dimension > 1 along the eigenspaces of the
// Hermitian operator restricted to it.
void refine(std::vector<MatrixXcd>& subspaces, const MatrixXcd& op) {
  std::vector<MatrixXcd> next;
  for (const auto& basis : subspaces) {
    if (basis.cols() == 1) {
      next.push_back(basis);
      continue;
    }
    const MatrixXcd restricted = basis.adjoint() * op * basis;
    Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(restricted);
    const auto& evals = solver.eigenvalues();
    const double scale = std::max(1.0, evals.cwiseAbs().maxCoeff());
    const double gap = 1e-6 * scale;
    Eigen::Index start = 0;
    for (Eigen::Index k = 1; k <= evals.size(); ++k) {
      if (k == evals.size() || evals[k] - evals[k - 1] > gap) {
        next.push_back(basis * solver.eigenvectors().middleCols(start, k - start));
        start = k;
      }
    }
  }
  subspaces = std::move(next);
}

bool all_split(const std::vector<MatrixXcd>& subspaces) {
  return std::all_of(subspaces.begin(), subspaces.end(),
                     [](const MatrixXcd& b) { return b.cols() == 1; });
}

std::vector<MatrixXcd> hermitian_parts(const MatrixXd& m) {
  const MatrixXd sym = 0.5 * (m + m.transpose());
  const MatrixXd anti = 0.5 * (m - m.transpose());
  // -i * anti is Hermitian
  return {sym.cast<Complex>(), (anti.cast<Complex>() * Complex(0.0, -1.0)).eval()};
}

}  // namespace

ClassAlgebra structure_constants(const FiniteGroup& group, const ConjugacyData& classes) {
  const std::size_t h = classes.num_classes();
  std::vector<std::uint64_t> a(h * h * h, 0);
  for (std::size_t k = 0; k < h; ++k) {
    const Element z = classes.representatives[k];
    for (Element x = 0; x < group.order(); ++x) {
      const Element y = group.mul(group.inv(x), z);
      ++a[(classes.class_of[x] * h + classes.class_of[y]) * h + k];
    }
  }
  return ClassAlgebra(h, std::move(a));
}

CharacterTable::CharacterTable(std::size_t group_order, ConjugacyData classes,
                               std::vector<int> degrees, std::vector<std::vector<Complex>> values)
    : group_order_(group_order),
      classes_(std::move(classes)),
      degrees_(std::move(degrees)),
      values_(std::move(values)) {
  const std::size_t h = degrees_.size();
  conjugate_row_.assign(h, std::nullopt);
  for (std::size_t j = 0; j < h; ++j) {
    for (std::size_t k = 0; k < h; ++k) {
      double worst = 0;
      for (std::size_t c = 0; c < values_[j].size(); ++c) {
        worst = std::max(worst, std::abs(values_[k][c] - std::conj(values_[j][c])));
      }
      if (worst < 1e-6) {
        conjugate_row_[j] = k;
        break;
      }
    }
  }
}

CharacterTable character_table(const FiniteGroup& group, const CharacterTableOptions& options) {
  const ConjugacyData& cd = group.conjugacy();
  const std::size_t h = cd.num_classes();
  const std::size_t n = group.order();
  const ClassAlgebra alg = structure_constants(group, cd);

  std::vector<double> root_size(h);
  for (std::size_t c = 0; c < h; ++c) root_size[c] = std::sqrt(static_cast<double>(cd.class_size(c)));

  // N_i = D^-1 M_i D with D = diag(sqrt|Cl_k|) is a commuting family of
  // normal matrices sharing the eigenvectors D^-1 ω_j.
  std::vector<MatrixXd> normal(h, MatrixXd(h, h));
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j)
      for (std::size_t k = 0; k < h; ++k)
        normal[i](j, k) = static_cast<double>(alg(i, j, k)) * root_size[k] / root_size[j];

  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(attempt));
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    auto random_combination = [&] {
      MatrixXd m = MatrixXd::Zero(h, h);
      for (std::size_t i = 0; i < h; ++i) m += coef(rng) * normal[i];
      return m;
    };

    std::vector<MatrixXcd> subspaces{MatrixXcd::Identity(h, h)};
    std::vector<MatrixXd> sequence{random_combination()};
    for (std::size_t i = 0; i < h; ++i) sequence.push_back(normal[i]);
    for (int extra = 0; extra < 4; ++extra) sequence.push_back(random_combination());
    for (const auto& m : sequence) {
      for (const auto& op : hermitian_parts(m)) {
        if (all_split(subspaces)) break;
        refine(subspaces, op);
      }
    }
    if (!all_split(subspaces) || subspaces.size() != h) continue;

    struct Row {
      int degree;
      std::vector<Complex> values;
    };
    std::vector<Row> rows;
    for (const auto& u : subspaces) {
      Eigen::VectorXcd omega(h);
      for (std::size_t k = 0; k < h; ++k) omega[k] = u(k, 0) * root_size[k];
      omega /= omega[0];
      double norm = 0;
      for (std::size_t k = 0; k < h; ++k) norm += std::norm(omega[k]) / static_cast<double>(cd.class_size(k));
      const double d = std::sqrt(static_cast<double>(n) / norm);
      const double rounded = std::round(d);
      if (rounded < 1 || std::abs(d - rounded) > 1e-4) {
        throw Error(ErrorCode::ValidationFailure,
                    "character degree " + std::to_string(d) + " is not near an integer");
      }
      Row row{static_cast<int>(rounded), std::vector<Complex>(h)};
      for (std::size_t k = 0; k < h; ++k) {
        const Complex chi = rounded * omega[k] / static_cast<double>(cd.class_size(k));
        row.values[k] = {snap(chi.real(), options.rounding), snap(chi.imag(), options.rounding)};
      }
      rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      for (std::size_t k = 0; k < a.values.size(); ++k) {
        if (a.values[k].real() != b.values[k].real()) return a.values[k].real() > b.values[k].real();
        if (a.values[k].imag() != b.values[k].imag()) return a.values[k].imag() > b.values[k].imag();
      }
      return false;
    });

    std::vector<int> degrees;
    std::vector<std::vector<Complex>> values;
    for (auto& r : rows) {
      polish_row(alg, cd, r.degree, r.values);
      degrees.push_back(r.degree);
      values.push_back(std::move(r.values));
    }
    CharacterTable table(n, cd, std::move(degrees), std::move(values));
    const ValidationReport report = validate(table);
    if (!report.passed()) throw Error(ErrorCode::ValidationFailure, report.summary());
    return table;
  }
  throw Error(ErrorCode::DegenerateSplitFailure,
              "common eigenspaces of the class matrices did not separate after " +
                  std::to_string(options.max_attempts) + " attempts");
}

bool ValidationReport::passed() const {
  return row_orthogonality <= tolerance && column_orthogonality <= tolerance &&
         degree_sum <= tolerance && identity_column <= tolerance &&
         conjugate_pairing <= tolerance && degrees_divide_order && trivial_first;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  os << "row=" << row_orthogonality << " column=" << column_orthogonality
     << " degree_sum=" << degree_sum << " identity=" << identity_column
     << " conjugate=" << conjugate_pairing << " divides=" << degrees_divide_order
     << " trivial_first=" << trivial_first << " tolerance=" << tolerance;
  return os.str();
}

ValidationReport validate(const CharacterTable& table) {
  ValidationReport r;
  const std::size_t h = table.num_characters();
  const auto& cd = table.classes();
  const auto n = static_cast<double>(table.group_order());
  r.tolerance = 1e-8 * n;

  for (std::size_t j = 0; j < h; ++j) {
    for (std::size_t k = 0; k < h; ++k) {
      Complex s = 0;
      for (std::size_t c = 0; c < cd.num_classes(); ++c) {
        s += static_cast<double>(cd.class_size(c)) * table.value(j, c) * std::conj(table.value(k, c));
      }
      r.row_orthogonality = std::max(r.row_orthogonality, std::abs(s - (j == k ? n : 0.0)));
    }
  }
  for (std::size_t c = 0; c < cd.num_classes(); ++c) {
    for (std::size_t e = 0; e < cd.num_classes(); ++e) {
      Complex s = 0;
      for (std::size_t j = 0; j < h; ++j) s += table.value(j, c) * std::conj(table.value(j, e));
      const double expected = c == e ? static_cast<double>(cd.centralizer_orders[c]) : 0.0;
      r.column_orthogonality = std::max(r.column_orthogonality, std::abs(s - expected));
    }
  }
  double sq = 0;
  for (std::size_t j = 0; j < h; ++j) {
    const int d = table.degree(j);
    sq += static_cast<double>(d) * d;
    if (d <= 0 || table.group_order() % static_cast<std::size_t>(d) != 0) r.degrees_divide_order = false;
    r.identity_column = std::max(r.identity_column, std::abs(table.value(j, 0) - static_cast<double>(d)));
  }
  r.degree_sum = std::abs(sq - n);
  for (std::size_t j = 0; j < h; ++j) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < h; ++k) {
      double worst = 0;
      for (std::size_t c = 0; c < cd.num_classes(); ++c) {
        worst = std::max(worst, std::abs(table.value(k, c) - std::conj(table.value(j, c))));
      }
      best = std::min(best, worst);
    }
    r.conjugate_pairing = std::max(r.conjugate_pairing, best);
  }
  if (h > 0) {
    for (std::size_t c = 0; c < cd.num_classes(); ++c) {
      if (std::abs(table.value(0, c) - 1.0) > r.tolerance) r.trivial_first = false;
    }
  }
  return r;
}

}  // namespace mixcay
