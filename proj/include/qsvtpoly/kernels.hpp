#pragma once

#include <cstddef>
#include <span>

// Data-parallel inner loops used by the library. Every kernel has a serial
// reference implementation and an OpenMP variant; the two produce bitwise
// identical results because the parallel loops only distribute independent
// output elements (no floating-point reductions). The dispatcher picks a
// variant from the execution policy and problem size; tests compare the
// variants directly and the kernel_bench tool measures them.

namespace qsvtpoly {

enum class Exec { Serial, Parallel, Auto };

/// Clenshaw evaluation of an odd Chebyshev series p(x) = sum_j c_j T_{2j+1}(x).
/// Uses the recurrence T_{2j+3} = (4x^2-2) T_{2j+1} - T_{2j-1}.
double cheb_odd_eval(std::span<const double> coeffs, double x);

// out[i] = p(xs[i])
void cheb_odd_eval_grid_serial(std::span<const double> coeffs,
                               std::span<const double> xs, std::span<double> out);
void cheb_odd_eval_grid_parallel(std::span<const double> coeffs,
                                 std::span<const double> xs, std::span<double> out);
void cheb_odd_eval_grid(std::span<const double> coeffs, std::span<const double> xs,
                        std::span<double> out, Exec exec = Exec::Auto);

// Row-major design matrix M(i,j) = w[i] * cos((2j+1) * thetas[i]); w may be empty (all ones).
void cosine_design_matrix_serial(std::span<const double> thetas, std::size_t n_terms,
                                 std::span<const double> w, std::span<double> out);
void cosine_design_matrix_parallel(std::span<const double> thetas, std::size_t n_terms,
                                   std::span<const double> w, std::span<double> out);
void cosine_design_matrix(std::span<const double> thetas, std::size_t n_terms,
                          std::span<const double> w, std::span<double> out,
                          Exec exec = Exec::Auto);

// Normalized 1D Poisson stencil: out = scale * (2u_i - u_{i-1} - u_{i+1}).
void poisson1d_matvec_serial(std::span<const double> u, std::span<double> out, double scale);
void poisson1d_matvec_parallel(std::span<const double> u, std::span<double> out, double scale);
void poisson1d_matvec(std::span<const double> u, std::span<double> out, double scale,
                      Exec exec = Exec::Auto);

// Normalized 2D Poisson 5-point stencil on an n1 x n1 interior grid (row-major).
void poisson2d_matvec_serial(std::size_t n1, std::span<const double> u,
                             std::span<double> out, double scale);
void poisson2d_matvec_parallel(std::size_t n1, std::span<const double> u,
                               std::span<double> out, double scale);
void poisson2d_matvec(std::size_t n1, std::span<const double> u, std::span<double> out,
                      double scale, Exec exec = Exec::Auto);

// Householder trailing-matrix update for QR on a column-major m x n block:
// for each remaining column j: A_j -= (v . A_j) * v, with v the reflector.
// cols points at the first remaining column; each column has leading dimension m.
void householder_update_serial(std::span<const double> v, double* cols,
                               std::size_t m, std::size_t ncols, std::size_t offset);
void householder_update_parallel(std::span<const double> v, double* cols,
                                 std::size_t m, std::size_t ncols, std::size_t offset);
void householder_update(std::span<const double> v, double* cols, std::size_t m,
                        std::size_t ncols, std::size_t offset, Exec exec = Exec::Auto);

/// True when the active policy would run a kernel of `work` flops in parallel.
bool exec_is_parallel(Exec exec, std::size_t work);

} // namespace qsvtpoly
