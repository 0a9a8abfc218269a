#pragma once

#include <Eigen/Core>

#include "mixcay/spectrum.hpp"

namespace mixcay {

struct OracleOptions {
  int max_sweeps = 100;
  double hermitian_tolerance = 1e-12;
  double merge_tolerance = kMergeTolerance;
};

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations.
/// Every eigenpair is checked against ||Hv - λv|| <= 1e-9 n ||H||.
/// Throws NotHermitian or NoConvergence.
SpectrumMultiset eig_hermitian_oracle(const Eigen::MatrixXcd& matrix,
                                      const OracleOptions& options = {});

/// Eigenvalues of an arbitrary square matrix (Hessenberg reduction and
/// shifted QR), residual-checked. Throws NoConvergence.
SpectrumMultiset eig_general_oracle(const Eigen::MatrixXcd& matrix,
                                    const OracleOptions& options = {});

}  // namespace mixcay
