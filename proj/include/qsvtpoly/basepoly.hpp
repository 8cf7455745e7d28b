#pragma once

#include <cstddef>
#include <vector>

#include "qsvtpoly/chebpoly.hpp"

namespace qsvtpoly {

/// Target for the 1/x approximation problem on [a, 1] with a = 1/kappa.
struct ApproxSpec {
  double kappa;
  double eps;

  ApproxSpec(double kappa_, double eps_);
  double a() const { return 1.0 / kappa; }
};

/// Diagnostics of the weighted-equioscillation exchange. The error
/// e(x) = x p(x) - 1 lives in an n0-dimensional Haar space on [a, 1], so the
/// reference holds n0 + 1 points and the levelled error alternates there.
struct RemezState {
  std::vector<double> reference;
  double levelled_error = 0.0;   // |h| at the last solve
  int iterations = 0;
  int alternations = 0;          // achieved sign alternations of the final residual
  double condition_estimate = 0.0;
  bool precision_warning = false; // reference system condition above 1e14
};

struct RemezResult {
  OddChebyshevPoly poly;
  RemezState state;
};

/// Minimax approximation of 1/x on [a, 1] in the n_terms-dimensional odd
/// Chebyshev space, by single-point exchange. Throws when the exchange has
/// not converged after 100 iterations.
RemezResult remez(const ApproxSpec& spec, std::size_t n_terms);

/// Smallest odd degree whose minimax residual certificate is <= spec.eps,
/// by doubling then bisection over the term count.
OddChebyshevPoly remez_min_degree(const ApproxSpec& spec);

/// Least-squares fit of p(cos t) to 1/cos t on a uniform grid over
/// t in [0, arccos a]. theta_grid = 0 selects the default max(2000, 20 n).
OddChebyshevPoly mang(const ApproxSpec& spec, std::size_t n_terms,
                      std::size_t theta_grid = 0);

/// Smallest odd degree whose dense-grid residual is <= spec.eps.
OddChebyshevPoly mang_min_degree(const ApproxSpec& spec);

} // namespace qsvtpoly
