#include "qsvtpoly/chebpoly.hpp"

#include <cmath>
#include <stdexcept>

#include "qsvtpoly/document.hpp"
#include "qsvtpoly/kernels.hpp"

namespace qsvtpoly {

std::string to_string(PolyLabel label) {
  switch (label) {
    case PolyLabel::Remez: return "remez";
    case PolyLabel::Mang: return "mang";
    case PolyLabel::Spectral: return "spectral";
    case PolyLabel::SpectralCorrected: return "spectral-corrected";
    case PolyLabel::External: return "external";
  }
  return "external";
}

PolyLabel label_from_string(const std::string& s) {
  if (s == "remez") return PolyLabel::Remez;
  if (s == "mang") return PolyLabel::Mang;
  if (s == "spectral") return PolyLabel::Spectral;
  if (s == "spectral-corrected") return PolyLabel::SpectralCorrected;
  if (s == "external") return PolyLabel::External;
  throw std::runtime_error("unknown polynomial label '" + s + "'");
}

double OddChebyshevPoly::eval(double x) const {
  if (!(x >= -1.0 && x <= 1.0))
    throw std::domain_error("OddChebyshevPoly::eval: x outside [-1, 1]");
  return cheb_odd_eval(coeffs, x);
}

namespace {

// golden-section maximization of |p| on [lo, hi]
double refine_abs_max(const OddChebyshevPoly& p, double lo, double hi, double best) {
  constexpr double kInvPhi = 0.6180339887498949;
  double c = hi - kInvPhi * (hi - lo);
  double d = lo + kInvPhi * (hi - lo);
  double fc = std::abs(p.eval(c));
  double fd = std::abs(p.eval(d));
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kInvPhi * (hi - lo);
      fc = std::abs(p.eval(c));
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kInvPhi * (hi - lo);
      fd = std::abs(p.eval(d));
    }
  }
  return std::max({best, fc, fd});
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
  std::vector<double> xs(n);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) xs[i] = lo + step * static_cast<double>(i);
  xs.back() = hi;
  return xs;
}

} // namespace

double compute_tau(const OddChebyshevPoly& p, std::size_t grid_density) {
  if (grid_density < 1000) throw std::invalid_argument("compute_tau: grid_density < 1000");
  if (p.coeffs.empty()) return 0.0;
  if (!(p.a > 0.0 && p.a <= 1.0)) throw std::invalid_argument("compute_tau: a outside (0, 1]");

  const std::vector<double> xs = uniform_grid(p.a, 1.0, grid_density);
  std::vector<double> vals(xs.size());
  cheb_odd_eval_grid(p.coeffs, xs, vals);
  std::size_t best = 0;
  double bestv = -1.0;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const double v = std::abs(vals[i]);
    if (v > bestv) {
      bestv = v;
      best = i;
    }
  }
  const double lo = xs[best == 0 ? 0 : best - 1];
  const double hi = xs[best + 1 < xs.size() ? best + 1 : xs.size() - 1];
  return refine_abs_max(p, lo, hi, bestv);
}

ErrorProfile error_profile(const OddChebyshevPoly& p, std::size_t grid_density) {
  if (grid_density < 1000) throw std::invalid_argument("error_profile: grid_density < 1000");
  if (!(p.a > 0.0 && p.a <= 1.0)) throw std::invalid_argument("error_profile: a outside (0, 1]");

  ErrorProfile out;
  out.grid = uniform_grid(p.a, 1.0, grid_density);
  std::vector<double> vals(out.grid.size());
  cheb_odd_eval_grid(p.coeffs, out.grid, vals);
  out.residuals.resize(out.grid.size());
  for (std::size_t i = 0; i < out.grid.size(); ++i) {
    out.residuals[i] = std::abs(out.grid[i] * vals[i] - 1.0);
    out.max_residual = std::max(out.max_residual, out.residuals[i]);
  }
  return out;
}

std::string serialize(const OddChebyshevPoly& p) {
  DocumentWriter w;
  w.add("basis", std::string("odd-chebyshev"));
  w.add("a", p.a);
  w.add("eps_target", p.eps_target);
  w.add("tau", p.tau);
  w.add("label", to_string(p.label));
  w.add("coeffs", p.coeffs);
  return w.str();
}

OddChebyshevPoly deserialize_poly(const std::string& text) {
  const Document doc = parse_document(text);
  if (!doc.has("basis")) throw std::runtime_error("polynomial document: missing 'basis'");
  if (doc.text("basis") != "odd-chebyshev")
    throw std::runtime_error("polynomial document: unsupported basis '" + doc.text("basis") +
                             "'");
  if (!doc.has("coeffs")) throw std::runtime_error("polynomial document: missing 'coeffs'");
  OddChebyshevPoly p;
  p.coeffs = doc.array("coeffs");
  p.a = doc.has("a") ? doc.number("a") : 1.0;
  p.eps_target = doc.has("eps_target") ? doc.number("eps_target") : 0.0;
  p.tau = doc.has("tau") ? doc.number("tau") : 0.0;
  p.label = doc.has("label") ? label_from_string(doc.text("label")) : PolyLabel::External;
  if (p.coeffs.empty()) throw std::runtime_error("polynomial document: empty 'coeffs'");
  if (!(p.a > 0.0 && p.a <= 1.0))
    throw std::runtime_error("polynomial document: 'a' outside (0, 1]");
  return p;
}

} // namespace qsvtpoly
