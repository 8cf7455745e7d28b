#include "qsvtpoly/kernels.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qsvtpoly {

namespace {
// Below this many flops the fork/join overhead dominates.
constexpr std::size_t kParallelThreshold = 1 << 15;
} // namespace

bool exec_is_parallel(Exec exec, std::size_t work) {
#ifdef _OPENMP
  if (exec == Exec::Serial) return false;
  if (exec == Exec::Parallel) return true;
  return work >= kParallelThreshold && omp_get_max_threads() > 1;
#else
  (void)exec;
  (void)work;
  return false;
#endif
}

double cheb_odd_eval(std::span<const double> coeffs, double x) {
  if (coeffs.empty()) return 0.0;
  const double alpha = 4.0 * x * x - 2.0;
  double b1 = 0.0, b2 = 0.0;
  for (std::size_t j = coeffs.size(); j-- > 1;) {
    const double b = coeffs[j] + alpha * b1 - b2;
    b2 = b1;
    b1 = b;
  }
  const double t1 = x;
  const double t3 = x * (4.0 * x * x - 3.0);
  return t1 * (coeffs[0] - b2) + t3 * b1;
}

void cheb_odd_eval_grid_serial(std::span<const double> coeffs,
                               std::span<const double> xs, std::span<double> out) {
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = cheb_odd_eval(coeffs, xs[i]);
}

void cheb_odd_eval_grid_parallel(std::span<const double> coeffs,
                                 std::span<const double> xs, std::span<double> out) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(xs.size()); ++i)
    out[i] = cheb_odd_eval(coeffs, xs[i]);
#else
  cheb_odd_eval_grid_serial(coeffs, xs, out);
#endif
}

void cheb_odd_eval_grid(std::span<const double> coeffs, std::span<const double> xs,
                        std::span<double> out, Exec exec) {
  if (exec_is_parallel(exec, xs.size() * (coeffs.size() + 1)))
    cheb_odd_eval_grid_parallel(coeffs, xs, out);
  else
    cheb_odd_eval_grid_serial(coeffs, xs, out);
}

namespace {
inline void design_row(double theta, double w, std::size_t n_terms, double* row) {
  // cos((2j+3)t) = 2 cos(2t) cos((2j+1)t) - cos((2j-1)t)
  const double c2 = std::cos(2.0 * theta);
  double prev = std::cos(theta);   // j = 0
  double cur = std::cos(3.0 * theta);
  if (n_terms > 0) row[0] = w * prev;
  if (n_terms > 1) row[1] = w * cur;
  for (std::size_t j = 2; j < n_terms; ++j) {
    const double next = 2.0 * c2 * cur - prev;
    prev = cur;
    cur = next;
    row[j] = w * cur;
  }
}
} // namespace

void cosine_design_matrix_serial(std::span<const double> thetas, std::size_t n_terms,
                                 std::span<const double> w, std::span<double> out) {
  for (std::size_t i = 0; i < thetas.size(); ++i)
    design_row(thetas[i], w.empty() ? 1.0 : w[i], n_terms, out.data() + i * n_terms);
}

void cosine_design_matrix_parallel(std::span<const double> thetas, std::size_t n_terms,
                                   std::span<const double> w, std::span<double> out) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(thetas.size()); ++i)
    design_row(thetas[i], w.empty() ? 1.0 : w[i], n_terms, out.data() + i * n_terms);
#else
  cosine_design_matrix_serial(thetas, n_terms, w, out);
#endif
}

void cosine_design_matrix(std::span<const double> thetas, std::size_t n_terms,
                          std::span<const double> w, std::span<double> out, Exec exec) {
  if (exec_is_parallel(exec, thetas.size() * n_terms))
    cosine_design_matrix_parallel(thetas, n_terms, w, out);
  else
    cosine_design_matrix_serial(thetas, n_terms, w, out);
}

void poisson1d_matvec_serial(std::span<const double> u, std::span<double> out, double scale) {
  const std::size_t n = u.size();
  for (std::size_t i = 0; i < n; ++i) {
    double v = 2.0 * u[i];
    if (i > 0) v -= u[i - 1];
    if (i + 1 < n) v -= u[i + 1];
    out[i] = scale * v;
  }
}

void poisson1d_matvec_parallel(std::span<const double> u, std::span<double> out, double scale) {
#ifdef _OPENMP
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(u.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    double v = 2.0 * u[i];
    if (i > 0) v -= u[i - 1];
    if (i + 1 < n) v -= u[i + 1];
    out[i] = scale * v;
  }
#else
  poisson1d_matvec_serial(u, out, scale);
#endif
}

void poisson1d_matvec(std::span<const double> u, std::span<double> out, double scale,
                      Exec exec) {
  if (exec_is_parallel(exec, 4 * u.size()))
    poisson1d_matvec_parallel(u, out, scale);
  else
    poisson1d_matvec_serial(u, out, scale);
}

namespace {
inline void poisson2d_row(std::size_t n1, std::span<const double> u, std::size_t r,
                          double scale, double* out) {
  for (std::size_t c = 0; c < n1; ++c) {
    const std::size_t k = r * n1 + c;
    double v = 4.0 * u[k];
    if (r > 0) v -= u[k - n1];
    if (r + 1 < n1) v -= u[k + n1];
    if (c > 0) v -= u[k - 1];
    if (c + 1 < n1) v -= u[k + 1];
    out[c] = scale * v;
  }
}
} // namespace

void poisson2d_matvec_serial(std::size_t n1, std::span<const double> u,
                             std::span<double> out, double scale) {
  for (std::size_t r = 0; r < n1; ++r) poisson2d_row(n1, u, r, scale, out.data() + r * n1);
}

void poisson2d_matvec_parallel(std::size_t n1, std::span<const double> u,
                               std::span<double> out, double scale) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t r = 0; r < static_cast<std::ptrdiff_t>(n1); ++r)
    poisson2d_row(n1, u, static_cast<std::size_t>(r), scale, out.data() + r * n1);
#else
  poisson2d_matvec_serial(n1, u, out, scale);
#endif
}

void poisson2d_matvec(std::size_t n1, std::span<const double> u, std::span<double> out,
                      double scale, Exec exec) {
  if (exec_is_parallel(exec, 6 * n1 * n1))
    poisson2d_matvec_parallel(n1, u, out, scale);
  else
    poisson2d_matvec_serial(n1, u, out, scale);
}

namespace {
inline void reflect_column(std::span<const double> v, double* col, std::size_t offset) {
  const std::size_t len = v.size();
  double dot = 0.0;
  for (std::size_t i = 0; i < len; ++i) dot += v[i] * col[offset + i];
  for (std::size_t i = 0; i < len; ++i) col[offset + i] -= dot * v[i];
}
} // namespace

void householder_update_serial(std::span<const double> v, double* cols, std::size_t m,
                               std::size_t ncols, std::size_t offset) {
  for (std::size_t j = 0; j < ncols; ++j) reflect_column(v, cols + j * m, offset);
}

void householder_update_parallel(std::span<const double> v, double* cols, std::size_t m,
                                 std::size_t ncols, std::size_t offset) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(ncols); ++j)
    reflect_column(v, cols + j * m, offset);
#else
  householder_update_serial(v, cols, m, ncols, offset);
#endif
}

void householder_update(std::span<const double> v, double* cols, std::size_t m,
                        std::size_t ncols, std::size_t offset, Exec exec) {
  if (exec_is_parallel(exec, 4 * v.size() * ncols))
    householder_update_parallel(v, cols, m, ncols, offset);
  else
    householder_update_serial(v, cols, m, ncols, offset);
}

} // namespace qsvtpoly
