#include "mixcay/eigen_oracle.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "mixcay/error.hpp"

namespace mixcay {
namespace {

double off_diagonal_norm(const Eigen::MatrixXcd& a) {
  double s = 0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

void check_square(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::ValidationFailure,
                "matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void check_residual(const Eigen::MatrixXcd& m, const Eigen::VectorXcd& v, Complex lambda,
                    double bound) {
  const double r = (m * v - lambda * v).norm();
  if (r > bound * std::max(1.0, v.norm())) {
    throw Error(ErrorCode::NoConvergence,
                "eigenpair residual " + std::to_string(r) + " exceeds " + std::to_string(bound));
  }
}

}  // namespace

SpectrumMultiset eig_hermitian_oracle(const Eigen::MatrixXcd& matrix,
                                      const OracleOptions& options) {
  check_square(matrix);
  const Eigen::Index n = matrix.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      if (std::abs(matrix(i, j) - std::conj(matrix(j, i))) > options.hermitian_tolerance) {
        throw Error(ErrorCode::NotHermitian,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ") differs from the conjugate of its transpose",
                    {static_cast<Element>(i), static_cast<Element>(j)});
      }
    }
  }

  Eigen::MatrixXcd a = matrix;
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Identity(n, n);
  const double scale = std::max(1.0, matrix.norm());
  const double stop = 1e-14 * scale;

  int sweep = 0;
  while (off_diagonal_norm(a) > stop) {
    if (++sweep > options.max_sweeps) {
      throw Error(ErrorCode::NoConvergence,
                  "Jacobi did not converge in " + std::to_string(options.max_sweeps) + " sweeps");
    }
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double r = std::abs(a(p, q));
        if (r <= 1e-300) continue;
        // Phase-rotate q so the pivot is real, then apply a real rotation.
        const Complex phase = a(p, q) / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2 * r);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        const Complex ph = std::conj(phase);
        const Complex upp = c, upq = s, uqp = -s * ph, uqq = c * ph;

        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
          if (k == p || k == q) continue;
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
          a(p, k) = std::conj(a(k, p));
          a(q, k) = std::conj(a(k, q));
        }
        a(p, p) = app - t * r;
        a(q, q) = aqq + t * r;
        a(p, q) = 0;
        a(q, p) = 0;
      }
    }
  }

  const double bound = 1e-9 * static_cast<double>(n) * scale;
  std::vector<Complex> values;
  values.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex lambda = a(k, k).real();
    check_residual(matrix, v.col(k), lambda, bound);
    values.push_back(lambda);
  }
  return SpectrumMultiset::from_values(std::move(values), options.merge_tolerance);
}

SpectrumMultiset eig_general_oracle(const Eigen::MatrixXcd& matrix, const OracleOptions& options) {
  check_square(matrix);
  const Eigen::Index n = matrix.rows();
  if (n == 0) return {};
  const double bound = 1e-8 * static_cast<double>(n) * std::max(1.0, matrix.norm());

  // Shifted QR can stall on permutation-like matrices. A random unitary
  // similarity leaves the spectrum alone and breaks the symmetry.
  std::mt19937_64 rng(0x5EED);
  std::normal_distribution<double> normal;
  for (int attempt = 0; attempt < 4; ++attempt) {
    Eigen::MatrixXcd q = Eigen::MatrixXcd::Identity(n, n);
    if (attempt > 0) {
      Eigen::MatrixXcd r(n, n);
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) r(i, j) = Complex(normal(rng), normal(rng));
      q = Eigen::HouseholderQR<Eigen::MatrixXcd>(r).householderQ();
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(q.adjoint() * matrix * q, true);
    if (solver.info() != Eigen::Success) continue;
    std::vector<Complex> values;
    values.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index k = 0; k < n; ++k) {
      check_residual(matrix, q * solver.eigenvectors().col(k), solver.eigenvalues()(k), bound);
      values.push_back(solver.eigenvalues()(k));
    }
    return SpectrumMultiset::from_values(std::move(values), options.merge_tolerance);
  }
  throw Error(ErrorCode::NoConvergence, "QR iteration did not converge");
}

}  // namespace mixcay
