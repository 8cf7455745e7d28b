#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qsvtpoly/chebpoly.hpp"

namespace qsvtpoly {

/// Sorted normalized eigenvalues with duplicate-merge bookkeeping.
struct Spectrum {
  std::vector<double> values;          // full list, ascending, in (0, 1]
  double merge_tol = 1e-9;
  std::vector<double> representatives; // first member of each merge cluster
  std::size_t k_eff = 0;               // representatives.size()
};

/// Greedy left-to-right clustering of the sorted list: a value joins the
/// current cluster while it is within merge_tol of the cluster representative.
Spectrum merge_duplicates(std::vector<double> eigs, double merge_tol = 1e-9);

/// Merge only, returning the representatives of `values`.
std::vector<double> merge_values(std::span<const double> values, double merge_tol);

/// Everything the correction produced, plus the ingredients of the
/// a-priori residual bound eps + ||Lambda_K B_K|| * ||alpha||_2 * ||T(x)||_2.
struct CorrectionReport {
  std::vector<double> targets;     // merged representatives actually corrected
  std::vector<double> residuals;   // r_k = 1 - lambda_k p0(lambda_k)
  std::vector<double> multipliers; // alpha, solving G alpha = r
  std::vector<double> correction;  // c_corr, length n0
  double gram_condition = 0.0;
  double base_eps = 0.0;           // achieved max residual of p0 on [a, 1]
  double w_norm = 0.0;             // ||Lambda_K B_K||_2
  double alpha_norm = 0.0;
};

struct CorrectionResult {
  OddChebyshevPoly poly;
  CorrectionReport report;
};

/// Min-norm interpolant of 1/x at all eigenvalues: solves the underdetermined
/// N x n system (Lambda B) c = 1 with n = ceil(n_factor * N) terms.
OddChebyshevPoly pure_spectral(const Spectrum& spectrum, double n_factor);

/// Min-norm correction of p0 enforcing lambda p(lambda) = 1 at the K smallest
/// eigenvalues (merged to K_eff representatives). Degree is unchanged.
CorrectionResult spectral_correct(const OddChebyshevPoly& p0, const Spectrum& spectrum,
                                  std::size_t k);

/// Same correction for an explicit target subset.
CorrectionResult spectral_correct_targets(const OddChebyshevPoly& p0,
                                          std::span<const double> targets,
                                          double merge_tol = 1e-9);

/// Right-hand side of the correction error bound at x.
double prop1_bound(double p0_eps, std::span<const double> targets,
                   std::span<const double> alpha, std::size_t n0, double x);
double prop1_bound(const CorrectionReport& report, std::size_t n0, double x);

/// max_k |lambda_k p(lambda_k) - 1| over the given eigenvalues.
double eig_residual(const OddChebyshevPoly& p, std::span<const double> lambdas);

// spectrum / correction-report documents
std::string serialize(const Spectrum& s, double kappa, double scale);
Spectrum deserialize_spectrum(const std::string& text, double* kappa = nullptr,
                              double* scale = nullptr);
std::string serialize(const CorrectionReport& r);
CorrectionReport deserialize_report(const std::string& text);

} // namespace qsvtpoly
