// eigen.hpp -- self-contained eigenvalues of dense Hermitian matrices via
// cyclic Jacobi rotations.  Convergence: off-diagonal Frobenius norm below
// 1e-12 * max(1, ||A||_F); hard cap of 100 sweeps (throws if exceeded, which
// for the matrix sizes used here does not occur in practice).
#pragma once

#include <complex>
#include <vector>

namespace dicke {

// a: row-major n*n Hermitian matrix (only assumed, not checked, to be
// Hermitian up to rounding).  Returns eigenvalues sorted descending.
std::vector<double> hermitian_eigenvalues(std::vector<std::complex<double>> a, int n);

}  // namespace dicke
