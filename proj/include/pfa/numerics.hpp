#pragma once

#include <functional>

#include <Eigen/Dense>

namespace pfa::numerics {

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  long evaluations = 0;
  /// Upper end of the last panel that was integrated.
  double cutoff = 0.0;
};

struct QuadratureOptions {
  /// Upper end of the first panel; should be of the order of the integrand's decay length.
  double initial_cutoff = 1.0;
  int max_doublings = 64;
  int max_subdivisions = 2000;
  double abs_floor = 1e-300;
};

/// Adaptive 21-point Gauss-Kronrod on [lower, upper] to a combined tolerance
/// max(rel_tol |I|, abs_tol). Throws AccuracyError when the subdivision budget is spent.
QuadratureResult integrate_interval(const std::function<double(double)>& f, double lower,
                                    double upper, double rel_tol, double abs_tol,
                                    int max_subdivisions = 2000);

/// Integral of an exponentially decaying integrand over (0, inf).
///
/// [0, c] is integrated adaptively, then panels [c, 2c], [2c, 4c], ... are
/// appended until a panel contributes less than rel_tol/10 of the total. The
/// tail beyond the last panel is bounded by a geometric envelope fitted to the
/// last two panels and folded into abs_error. The integrand is never evaluated
/// at 0.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f, double rel_tol,
                                         const QuadratureOptions& options = {});

struct TruncationReport {
  long order_used = 0;
  double last_increment = 0.0;
  bool converged = false;
};

struct SeriesResult {
  double value = 0.0;
  TruncationReport report;
};

/// Sums term(first), term(first+1), ... until |term| <= rel_tol |sum| and the
/// geometric tail estimated from consecutive terms is below the same bound.
/// Throws AccuracyError (carrying the partial sum) once max_terms are used.
SeriesResult sum_until_converged(const std::function<double(long)>& term, double rel_tol,
                                 long min_terms = 1, long first = 1,
                                 long max_terms = 1'000'000);

/// ln det(I - A) for the size x size kernel A(row, col), by dense LU with partial pivoting.
double log_det_truncated(const std::function<double(int, int)>& kernel, int size);

/// ln det(I - A) for an explicit kernel matrix.
double log_det_identity_minus(const Eigen::MatrixXd& kernel);

/// ln det(M) for a matrix whose determinant must be positive.
double log_det_positive(const Eigen::MatrixXd& matrix);

}  // namespace pfa::numerics
