#pragma once

#include <complex>
#include <span>
#include <vector>

namespace rieszrep::linalg {

using cplx = std::complex<double>;

/// Eigenvalues of a Hermitian kappa x kappa matrix (row-major) by cyclic
/// Jacobi sweeps with complex rotations; ascending order.
std::vector<double> hermitian_eigenvalues(std::span<const cplx> a, int kappa);

/// Determinant of a general complex square matrix via partially pivoted LU.
cplx determinant(std::span<const cplx> a, int kappa);

struct SolveInfo {
    bool singular = false;
    double min_pivot = 0.0;
};

/// Solves A x = b in place of b by partially pivoted Gaussian elimination.
SolveInfo solve(std::vector<cplx> a, int kappa, std::span<cplx> b);

/// In-place radix-2 FFT; sign = -1 forward (e^{-2pi i jk/G}), +1 inverse
/// without 1/G normalization. Size must be a power of two.
void fft_pow2(std::span<cplx> data, int sign);

/// Tensor FFT over an n-dimensional power-of-two grid, row-major layout.
void fft_nd(std::span<cplx> data, std::span<const std::size_t> shape, int sign);

struct Quadrature {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights;
};

/// Gauss-Legendre rule with q nodes (exact through degree 2q - 1).
Quadrature gauss_legendre(int q);

} // namespace rieszrep::linalg
