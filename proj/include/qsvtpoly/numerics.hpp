#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "qsvtpoly/kernels.hpp"

namespace qsvtpoly {

/// Small dense row-major matrix of doubles.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> entries; // rows * cols, row-major

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, 0.0) {}

  double& operator()(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

/// Thin singular value decomposition A = U diag(sigma) V^T.
/// sigma is sorted non-increasing; U is rows x k and V is cols x k with
/// orthonormal columns, k = min(rows, cols).
struct SvdResult {
  DenseMatrix u;
  DenseMatrix v;
  std::vector<double> sigma;

  /// sigma_max / sigma_min (inf when rank deficient).
  double condition() const;
};

/// One-sided Jacobi SVD. Accurate for the small dense systems used here
/// (dimensions up to a few hundred). Throws std::runtime_error when the
/// sweep cap is reached, std::invalid_argument on non-finite input.
SvdResult svd(const DenseMatrix& m);

/// Minimum-norm least-squares solution with singular values below
/// rel_cutoff * sigma_max treated as zero.
std::vector<double> pinv_solve(const DenseMatrix& m, std::span<const double> rhs,
                               double rel_cutoff = 1e-12);

/// pinv_solve from an existing factorization.
std::vector<double> svd_solve(const SvdResult& dec, std::span<const double> rhs,
                              double rel_cutoff);

/// argmin_x ||m x - rhs||_2 for m.rows >= m.cols. Tall systems are reduced by
/// Householder QR first; the square factor is then solved through its SVD.
std::vector<double> lstsq(const DenseMatrix& m, std::span<const double> rhs);

using MatVec = std::function<void(std::span<const double>, std::span<double>)>;

/// p(A) b for an odd Chebyshev series, via the three-term recurrence on
/// matrix-vector products only. Requires the spectrum of A inside [-1, 1];
/// a norm-growth guard trips otherwise.
std::vector<double> clenshaw_matrix_apply(std::span<const double> coeffs,
                                          const MatVec& apply,
                                          std::span<const double> b);

// dense helpers shared by the modules above
std::vector<double> matvec_dense(const DenseMatrix& m, std::span<const double> x);
double norm2(std::span<const double> v);
double dot(std::span<const double> a, std::span<const double> b);

} // namespace qsvtpoly
