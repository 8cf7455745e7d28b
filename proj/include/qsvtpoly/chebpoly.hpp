#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qsvtpoly {

enum class PolyLabel { Remez, Mang, Spectral, SpectralCorrected, External };

std::string to_string(PolyLabel label);
PolyLabel label_from_string(const std::string& s);

/// Odd Chebyshev series p(x) = sum_j coeffs[j] * T_{2j+1}(x).
///
/// The coefficients always describe the unnormalized approximation of 1/x;
/// tau records the subnormalization factor max_{[a,1]} |p| separately, so the
/// bounded polynomial used by QSVT is p / tau.
struct OddChebyshevPoly {
  std::vector<double> coeffs;
  double a = 1.0;                         // lower spectral edge, in (0, 1]
  double tau = 0.0;                       // 0 until computed
  double eps_target = 0.0;                // 0 when not applicable
  PolyLabel label = PolyLabel::External;

  std::size_t n_terms() const { return coeffs.size(); }
  int degree() const { return coeffs.empty() ? -1 : 2 * static_cast<int>(coeffs.size()) - 1; }

  /// Clenshaw evaluation; domain error outside [-1, 1].
  double eval(double x) const;
};

/// max |p(x)| over [a, 1] from a dense grid plus golden-section refinement
/// around the best cell. Odd symmetry covers [-1, -a].
double compute_tau(const OddChebyshevPoly& p, std::size_t grid_density = 10000);

/// Residuals |x p(x) - 1| of the unnormalized polynomial on a uniform grid
/// over [a, 1]. max_residual is the epsilon certificate of the approximation.
struct ErrorProfile {
  std::vector<double> grid;
  std::vector<double> residuals;
  double max_residual = 0.0;
};

ErrorProfile error_profile(const OddChebyshevPoly& p, std::size_t grid_density = 10000);

// canonical polynomial document (see README for the schema)
std::string serialize(const OddChebyshevPoly& p);
OddChebyshevPoly deserialize_poly(const std::string& text);

} // namespace qsvtpoly
