#include "qsvtpoly/basepoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qsvtpoly/document.hpp"
#include "qsvtpoly/kernels.hpp"
#include "qsvtpoly/numerics.hpp"

namespace qsvtpoly {

ApproxSpec::ApproxSpec(double kappa_, double eps_) : kappa(kappa_), eps(eps_) {
  if (!(kappa > 1.0)) throw std::invalid_argument("ApproxSpec: kappa must exceed 1");
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("ApproxSpec: eps outside (0, 1)");
}

namespace {

double weighted_residual(const OddChebyshevPoly& p, double x) {
  return x * cheb_odd_eval(p.coeffs, x) - 1.0;
}

// golden-section maximization of |x p(x) - 1| on [lo, hi]
double refine_residual_max(const OddChebyshevPoly& p, double lo, double hi, double& xmax) {
  constexpr double kInvPhi = 0.6180339887498949;
  double c = hi - kInvPhi * (hi - lo);
  double d = lo + kInvPhi * (hi - lo);
  double fc = std::abs(weighted_residual(p, c));
  double fd = std::abs(weighted_residual(p, d));
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kInvPhi * (hi - lo);
      fc = std::abs(weighted_residual(p, c));
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kInvPhi * (hi - lo);
      fd = std::abs(weighted_residual(p, d));
    }
  }
  if (fc > fd) {
    xmax = c;
    return fc;
  }
  xmax = d;
  return fd;
}

struct GridMax {
  double x = 0.0;
  double value = 0.0;
};

GridMax locate_max_residual(const OddChebyshevPoly& p, std::size_t grid_density) {
  std::vector<double> xs(grid_density);
  const double step = (1.0 - p.a) / static_cast<double>(grid_density - 1);
  for (std::size_t i = 0; i < grid_density; ++i) xs[i] = p.a + step * static_cast<double>(i);
  xs.back() = 1.0;
  std::vector<double> vals(grid_density);
  cheb_odd_eval_grid(p.coeffs, xs, vals);
  std::size_t best = 0;
  double bestv = -1.0;
  for (std::size_t i = 0; i < grid_density; ++i) {
    const double r = std::abs(xs[i] * vals[i] - 1.0);
    if (r > bestv) {
      bestv = r;
      best = i;
    }
  }
  GridMax out;
  const double lo = xs[best == 0 ? 0 : best - 1];
  const double hi = xs[best + 1 < grid_density ? best + 1 : grid_density - 1];
  double xr = xs[best];
  const double refined = refine_residual_max(p, lo, hi, xr);
  if (refined > bestv) {
    out.x = xr;
    out.value = refined;
  } else {
    out.x = xs[best];
    out.value = bestv;
  }
  return out;
}

} // namespace

RemezResult remez(const ApproxSpec& spec, std::size_t n_terms) {
  if (n_terms < 1) throw std::invalid_argument("remez: n_terms must be >= 1");
  const double a = spec.a();
  const std::size_t n0 = n_terms;

  // Chebyshev points of the second kind mapped to [a, 1], ascending.
  std::vector<double> ref(n0 + 1);
  for (std::size_t i = 0; i <= n0; ++i) {
    const double t = std::cos(std::numbers::pi * static_cast<double>(i) /
                              static_cast<double>(n0));
    ref[n0 - i] = 0.5 * (a + 1.0) + 0.5 * (1.0 - a) * t;
  }

  OddChebyshevPoly poly;
  poly.a = a;
  poly.eps_target = spec.eps;
  poly.label = PolyLabel::Remez;

  RemezState state;
  double h = 0.0;
  constexpr int kMaxIter = 100;
  std::vector<double> row(n0);
  for (int iter = 1; iter <= kMaxIter; ++iter) {
    // residual at reference point i equals (-1)^i h
    DenseMatrix sys(n0 + 1, n0 + 1);
    std::vector<double> rhs(n0 + 1, 1.0);
    for (std::size_t i = 0; i <= n0; ++i) {
      const double theta = std::acos(ref[i]);
      // row: x * T_{2j+1}(x) terms, then the alternating-sign column for h
      double prev = std::cos(theta), cur = std::cos(3.0 * theta);
      const double c2 = std::cos(2.0 * theta);
      for (std::size_t j = 0; j < n0; ++j) {
        double t;
        if (j == 0)
          t = prev;
        else if (j == 1)
          t = cur;
        else {
          const double next = 2.0 * c2 * cur - prev;
          prev = cur;
          cur = next;
          t = cur;
        }
        sys(i, j) = ref[i] * t;
      }
      sys(i, n0) = (i % 2 == 0) ? -1.0 : 1.0;
    }
    const SvdResult dec = svd(sys);
    state.condition_estimate = dec.condition();
    state.precision_warning = state.condition_estimate > 1e14;
    const std::vector<double> sol = svd_solve(dec, rhs, 1e-15);
    poly.coeffs.assign(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(n0));
    h = sol[n0];
    state.levelled_error = std::abs(h);
    state.iterations = iter;

    const GridMax peak = locate_max_residual(poly, 10000);
    const double ah = std::abs(h);
    if (peak.value - ah <= 1e-6 * ah + 1e-14) break;
    if (iter == kMaxIter)
      throw std::runtime_error(
          "remez: exchange failed to converge in 100 iterations; last levelled error h = " +
          format_number(ah));

    // single-point exchange preserving sign alternation; reference residual
    // signs are (-1)^i sign(h) by construction
    const double estar = weighted_residual(poly, peak.x);
    const double sign_star = estar >= 0.0 ? 1.0 : -1.0;
    auto ref_sign = [&](std::size_t i) {
      const double s = (i % 2 == 0) ? 1.0 : -1.0;
      return h >= 0.0 ? s : -s;
    };
    if (peak.x < ref.front()) {
      if (sign_star == ref_sign(0)) {
        ref.front() = peak.x;
      } else {
        for (std::size_t i = n0; i > 0; --i) ref[i] = ref[i - 1];
        ref.front() = peak.x;
      }
    } else if (peak.x > ref.back()) {
      if (sign_star == ref_sign(n0)) {
        ref.back() = peak.x;
      } else {
        for (std::size_t i = 0; i < n0; ++i) ref[i] = ref[i + 1];
        ref.back() = peak.x;
      }
    } else {
      const auto it = std::upper_bound(ref.begin(), ref.end(), peak.x);
      std::size_t right = static_cast<std::size_t>(it - ref.begin());
      if (right > n0) right = n0;
      const std::size_t left = right == 0 ? 0 : right - 1;
      if (sign_star == ref_sign(left))
        ref[left] = peak.x;
      else
        ref[right] = peak.x;
    }
  }

  // alternation certificate on the final reference
  state.reference = ref;
  int alt = 0;
  double prev_res = 0.0;
  for (std::size_t i = 0; i <= n0; ++i) {
    const double r = weighted_residual(poly, ref[i]);
    if (i > 0 && r * prev_res < 0.0) ++alt;
    prev_res = r;
  }
  state.alternations = alt;

  poly.tau = compute_tau(poly);
  return {std::move(poly), std::move(state)};
}

namespace {

template <typename Builder>
OddChebyshevPoly min_degree_search(const ApproxSpec& spec, Builder build) {
  auto certify = [&](const OddChebyshevPoly& p) {
    return error_profile(p).max_residual <= spec.eps;
  };
  std::size_t n = 1;
  OddChebyshevPoly candidate = build(n);
  if (certify(candidate)) return candidate;
  std::size_t lo = 1; // largest failing n
  for (;;) {
    n *= 2;
    if (n > (1u << 14))
      throw std::runtime_error("min_degree: no degree below 2^15 met the target");
    candidate = build(n);
    if (certify(candidate)) break;
    lo = n;
  }
  std::size_t hi = n; // passing
  OddChebyshevPoly best = candidate;
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    candidate = build(mid);
    if (certify(candidate)) {
      hi = mid;
      best = candidate;
    } else {
      lo = mid;
    }
  }
  return best;
}

} // namespace

OddChebyshevPoly remez_min_degree(const ApproxSpec& spec) {
  return min_degree_search(spec, [&](std::size_t n) { return remez(spec, n).poly; });
}

OddChebyshevPoly mang(const ApproxSpec& spec, std::size_t n_terms, std::size_t theta_grid) {
  if (n_terms < 1) throw std::invalid_argument("mang: n_terms must be >= 1");
  std::size_t grid = theta_grid;
  if (grid == 0) grid = std::max<std::size_t>(2000, 20 * n_terms);
  const double a = spec.a();
  const double theta_max = std::acos(a);

  std::vector<double> thetas(grid);
  if (grid == 1) {
    thetas[0] = 0.0;
  } else {
    const double step = theta_max / static_cast<double>(grid - 1);
    for (std::size_t i = 0; i < grid; ++i) thetas[i] = step * static_cast<double>(i);
    thetas.back() = theta_max;
  }

  DenseMatrix m(grid, n_terms);
  cosine_design_matrix(thetas, n_terms, {}, m.entries);
  std::vector<double> rhs(grid);
  for (std::size_t i = 0; i < grid; ++i) rhs[i] = 1.0 / std::cos(thetas[i]);

  OddChebyshevPoly poly;
  poly.coeffs = lstsq(m, rhs);
  poly.a = a;
  poly.eps_target = spec.eps;
  poly.label = PolyLabel::Mang;
  poly.tau = compute_tau(poly);
  return poly;
}

OddChebyshevPoly mang_min_degree(const ApproxSpec& spec) {
  return min_degree_search(spec, [&](std::size_t n) { return mang(spec, n); });
}

} // namespace qsvtpoly
