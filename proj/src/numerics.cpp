#include "qsvtpoly/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qsvtpoly {

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<double> matvec_dense(const DenseMatrix& m, std::span<const double> x) {
  if (x.size() != m.cols) throw std::invalid_argument("matvec_dense: dimension mismatch");
  std::vector<double> y(m.rows, 0.0);
  for (std::size_t i = 0; i < m.rows; ++i) {
    double s = 0.0;
    const double* row = m.entries.data() + i * m.cols;
    for (std::size_t j = 0; j < m.cols; ++j) s += row[j] * x[j];
    y[i] = s;
  }
  return y;
}

double SvdResult::condition() const {
  if (sigma.empty()) return 0.0;
  const double lo = sigma.back();
  if (lo <= 0.0) return std::numeric_limits<double>::infinity();
  return sigma.front() / lo;
}

namespace {

// Column-major working storage for the Jacobi sweeps and the QR factorization.
struct ColMat {
  std::size_t rows = 0, cols = 0;
  std::vector<double> a; // column-major

  ColMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}
  double* col(std::size_t j) { return a.data() + j * rows; }
  const double* col(std::size_t j) const { return a.data() + j * rows; }
};

ColMat to_colmajor(const DenseMatrix& m, bool transpose) {
  const std::size_t r = transpose ? m.cols : m.rows;
  const std::size_t c = transpose ? m.rows : m.cols;
  ColMat out(r, c);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (transpose)
        out.col(i)[j] = m(i, j);
      else
        out.col(j)[i] = m(i, j);
    }
  return out;
}

// One-sided Jacobi on a tall (rows >= cols) column-major matrix.
// Orthogonalizes the columns of `work`; accumulates rotations into `v` (cols x cols).
void jacobi_orthogonalize(ColMat& work, ColMat& v, std::size_t orig_rows,
                          std::size_t orig_cols) {
  const std::size_t m = work.rows, n = work.cols;
  for (std::size_t j = 0; j < n; ++j) v.col(j)[j] = 1.0;

  constexpr int kMaxSweeps = 60;
  constexpr double kTol = 1e-14;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double* cp = work.col(p);
        double* cq = work.col(q);
        double app = 0.0, aqq = 0.0, apq = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
          app += cp[i] * cp[i];
          aqq += cq[i] * cq[i];
          apq += cp[i] * cq[i];
        }
        if (app == 0.0 || aqq == 0.0) continue;
        if (std::abs(apq) <= kTol * std::sqrt(app * aqq)) continue;
        rotated = true;
        const double zeta = (aqq - app) / (2.0 * apq);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = cs * t;
        for (std::size_t i = 0; i < m; ++i) {
          const double xp = cp[i], xq = cq[i];
          cp[i] = cs * xp - sn * xq;
          cq[i] = sn * xp + cs * xq;
        }
        double* vp = v.col(p);
        double* vq = v.col(q);
        for (std::size_t i = 0; i < n; ++i) {
          const double xp = vp[i], xq = vq[i];
          vp[i] = cs * xp - sn * xq;
          vq[i] = sn * xp + cs * xq;
        }
      }
    }
    if (!rotated) return;
  }
  throw std::runtime_error("svd: Jacobi iteration did not converge for a " +
                           std::to_string(orig_rows) + " x " + std::to_string(orig_cols) +
                           " matrix after 60 sweeps");
}

void check_finite(const DenseMatrix& m, const char* who) {
  for (double x : m.entries)
    if (!std::isfinite(x)) throw std::invalid_argument(std::string(who) + ": non-finite entry");
}

// Fill U columns with zero singular value so that U stays orthonormal.
void complete_orthonormal(ColMat& u, const std::vector<std::size_t>& null_cols) {
  const std::size_t m = u.rows, n = u.cols;
  for (std::size_t idx : null_cols) {
    bool done = false;
    for (std::size_t cand = 0; cand < m && !done; ++cand) {
      std::vector<double> e(m, 0.0);
      e[cand] = 1.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == idx) continue;
        const double* cj = u.col(j);
        double d = 0.0;
        for (std::size_t i = 0; i < m; ++i) d += cj[i] * e[i];
        for (std::size_t i = 0; i < m; ++i) e[i] -= d * cj[i];
      }
      const double nrm = norm2(e);
      if (nrm > 0.5) {
        double* cu = u.col(idx);
        for (std::size_t i = 0; i < m; ++i) cu[i] = e[i] / nrm;
        done = true;
      }
    }
    if (!done)
      throw std::runtime_error("svd: failed to complete orthonormal basis");
  }
}

SvdResult svd_tall(const DenseMatrix& m, bool transposed) {
  ColMat work = to_colmajor(m, transposed);
  const std::size_t rows = work.rows, cols = work.cols;
  ColMat v(cols, cols);
  jacobi_orthogonalize(work, v, m.rows, m.cols);

  std::vector<double> sigma(cols, 0.0);
  std::vector<std::size_t> order(cols);
  for (std::size_t j = 0; j < cols; ++j) sigma[j] = norm2({work.col(j), rows});
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sigma[a] > sigma[b]; });

  ColMat u(rows, cols);
  ColMat vperm(cols, cols);
  std::vector<double> s(cols, 0.0);
  std::vector<std::size_t> null_cols;
  for (std::size_t j = 0; j < cols; ++j) {
    const std::size_t src = order[j];
    s[j] = sigma[src];
    std::copy(v.col(src), v.col(src) + cols, vperm.col(j));
    if (s[j] > 0.0) {
      const double inv = 1.0 / s[j];
      const double* cw = work.col(src);
      double* cu = u.col(j);
      for (std::size_t i = 0; i < rows; ++i) cu[i] = cw[i] * inv;
    } else {
      null_cols.push_back(j);
    }
  }
  if (!null_cols.empty()) complete_orthonormal(u, null_cols);

  SvdResult out;
  out.sigma = std::move(s);
  out.u = DenseMatrix(rows, cols);
  out.v = DenseMatrix(cols, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) out.u(i, j) = u.col(j)[i];
    for (std::size_t i = 0; i < cols; ++i) out.v(i, j) = vperm.col(j)[i];
  }
  if (transposed) std::swap(out.u, out.v);
  return out;
}

} // namespace

SvdResult svd(const DenseMatrix& m) {
  if (m.rows == 0 || m.cols == 0) throw std::invalid_argument("svd: empty matrix");
  check_finite(m, "svd");
  return svd_tall(m, m.rows < m.cols);
}

std::vector<double> svd_solve(const SvdResult& dec, std::span<const double> rhs,
                              double rel_cutoff) {
  const std::size_t rows = dec.u.rows, cols = dec.v.rows;
  if (rhs.size() != rows) throw std::invalid_argument("svd_solve: rhs length != rows");
  const double smax = dec.sigma.empty() ? 0.0 : dec.sigma.front();
  const double cut = rel_cutoff * smax;
  std::vector<double> x(cols, 0.0);
  for (std::size_t j = 0; j < dec.sigma.size(); ++j) {
    const double s = dec.sigma[j];
    if (s <= cut || s == 0.0) continue;
    double uj_rhs = 0.0;
    for (std::size_t i = 0; i < rows; ++i) uj_rhs += dec.u(i, j) * rhs[i];
    const double coeff = uj_rhs / s;
    for (std::size_t i = 0; i < cols; ++i) x[i] += coeff * dec.v(i, j);
  }
  return x;
}

std::vector<double> pinv_solve(const DenseMatrix& m, std::span<const double> rhs,
                               double rel_cutoff) {
  if (rhs.size() != m.rows) throw std::invalid_argument("pinv_solve: rhs length != rows");
  if (rel_cutoff < 0.0 || rel_cutoff >= 1.0)
    throw std::invalid_argument("pinv_solve: rel_cutoff outside [0, 1)");
  return svd_solve(svd(m), rhs, rel_cutoff);
}

std::vector<double> lstsq(const DenseMatrix& m, std::span<const double> rhs) {
  if (m.rows < m.cols) throw std::invalid_argument("lstsq: system must have rows >= cols");
  if (rhs.size() != m.rows) throw std::invalid_argument("lstsq: rhs length != rows");
  check_finite(m, "lstsq");

  // Householder QR; reflectors applied to the rhs on the fly.
  ColMat work = to_colmajor(m, false);
  std::vector<double> y(rhs.begin(), rhs.end());
  const std::size_t rows = m.rows, cols = m.cols;
  std::vector<double> v;
  for (std::size_t k = 0; k < cols; ++k) {
    double* ck = work.col(k);
    double nrm = 0.0;
    for (std::size_t i = k; i < rows; ++i) nrm += ck[i] * ck[i];
    nrm = std::sqrt(nrm);
    if (nrm == 0.0) continue;
    const double alpha = ck[k] >= 0.0 ? -nrm : nrm;
    v.assign(rows - k, 0.0);
    v[0] = ck[k] - alpha;
    for (std::size_t i = k + 1; i < rows; ++i) v[i - k] = ck[i];
    const double vn = norm2(v);
    if (vn == 0.0) continue;
    const double inv = std::sqrt(2.0) / vn;
    for (double& t : v) t *= inv; // now |v| = sqrt(2), reflector = I - v v^T
    ck[k] = alpha;
    for (std::size_t i = k + 1; i < rows; ++i) ck[i] = 0.0;
    if (k + 1 < cols)
      householder_update(v, work.col(k + 1), rows, cols - k - 1, k);
    double d = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) d += v[i] * y[k + i];
    for (std::size_t i = 0; i < v.size(); ++i) y[k + i] -= d * v[i];
  }

  DenseMatrix r(cols, cols);
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t j = i; j < cols; ++j) r(i, j) = work.col(j)[i];
  return pinv_solve(r, {y.data(), cols}, 1e-13);
}

std::vector<double> clenshaw_matrix_apply(std::span<const double> coeffs, const MatVec& apply,
                                          std::span<const double> b) {
  const std::size_t n = b.size();
  std::vector<double> out(n, 0.0);
  if (coeffs.empty()) return out;
  for (double x : b)
    if (!std::isfinite(x)) throw std::invalid_argument("clenshaw_matrix_apply: non-finite b");

  double coeff_sum = 0.0;
  for (double c : coeffs) coeff_sum += std::abs(c);
  double bmax = 0.0;
  for (double x : b) bmax = std::max(bmax, std::abs(x));
  const double guard = 1e8 * (1.0 + coeff_sum) * (bmax + 1.0);

  std::vector<double> u1(n, 0.0), u2(n, 0.0), t1(n, 0.0), t2(n, 0.0), unew(n, 0.0);
  for (std::size_t j = coeffs.size(); j-- > 1;) {
    apply(u1, t1);
    apply(t1, t2);
    const double cj = coeffs[j];
    double umax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      unew[i] = cj * b[i] + 4.0 * t2[i] - 2.0 * u1[i] - u2[i];
      umax = std::max(umax, std::abs(unew[i]));
    }
    if (umax > guard)
      throw std::runtime_error(
          "clenshaw_matrix_apply: recurrence diverged; the operator spectrum "
          "appears to exceed [-1, 1], normalize the operator first");
    std::swap(u2, u1);
    std::swap(u1, unew);
  }
  // p(A) b = A [ c0 b - u2 + (4 A^2 - 3 I) u1 ]
  apply(u1, t1);
  apply(t1, t2);
  for (std::size_t i = 0; i < n; ++i)
    t1[i] = coeffs[0] * b[i] - u2[i] + 4.0 * t2[i] - 3.0 * u1[i];
  apply(t1, out);
  return out;
}

} // namespace qsvtpoly
