#include "pfa/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "pfa/core.hpp"

namespace pfa::numerics {
namespace {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
constexpr std::array<double, 11> kKronrodNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525214670, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

// Weights of the embedded Gauss rule at nodes 1, 3, 5, 7, 9.
constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
  double lower;
  double upper;
  double value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment kronrod21(const std::function<double(double)>& f, double lower, double upper) {
  const double center = 0.5 * (lower + upper);
  const double half = 0.5 * (upper - lower);
  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[10];
  double abs_sum = std::abs(kronrod);
  double gauss = 0.0;
  std::array<double, 10> f1{};
  std::array<double, 10> f2{};
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kKronrodNodes[j];
    f1[j] = f(center - dx);
    f2[j] = f(center + dx);
    const double pair = f1[j] + f2[j];
    kronrod += kKronrodWeights[j] * pair;
    abs_sum += kKronrodWeights[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
  }
  const double mean = 0.5 * kronrod;
  double asc = kKronrodWeights[10] * std::abs(fc - mean);
  for (int j = 0; j < 10; ++j)
    asc += kKronrodWeights[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));

  const double value = kronrod * half;
  double error = std::abs((kronrod - gauss) * half);
  const double resasc = asc * std::abs(half);
  if (resasc != 0.0 && error != 0.0)
    error = resasc * std::min(1.0, std::pow(200.0 * error / resasc, 1.5));
  const double resabs = abs_sum * std::abs(half);
  const double roundoff = 50.0 * std::numeric_limits<double>::epsilon() * resabs;
  if (resabs > std::numeric_limits<double>::min() / roundoff) error = std::max(roundoff, error);
  return {lower, upper, value, error};
}

}  // namespace

QuadratureResult integrate_interval(const std::function<double(double)>& f, double lower,
                                    double upper, double rel_tol, double abs_tol,
                                    int max_subdivisions) {
  std::priority_queue<Segment> queue;
  Segment first = kronrod21(f, lower, upper);
  long evaluations = 21;
  double total = first.value;
  double total_error = first.error;
  queue.push(first);
  int subdivisions = 0;
  while (total_error > std::max(rel_tol * std::abs(total), abs_tol)) {
    if (subdivisions >= max_subdivisions) {
      throw AccuracyError("adaptive quadrature exceeded " + std::to_string(max_subdivisions) +
                              " subdivisions on [" + std::to_string(lower) + ", " +
                              std::to_string(upper) + "]",
                          total, total_error);
    }
    const Segment worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.lower + worst.upper);
    const Segment left = kronrod21(f, worst.lower, mid);
    const Segment right = kronrod21(f, mid, worst.upper);
    evaluations += 42;
    ++subdivisions;
    queue.push(left);
    queue.push(right);
    // Re-sum from scratch so the result does not depend on cancellation history.
    total = 0.0;
    total_error = 0.0;
    std::vector<Segment> segments;
    segments.reserve(queue.size());
    while (!queue.empty()) {
      segments.push_back(queue.top());
      queue.pop();
    }
    std::sort(segments.begin(), segments.end(),
              [](const Segment& a, const Segment& b) { return a.lower < b.lower; });
    for (const Segment& s : segments) {
      total += s.value;
      total_error += s.error;
      queue.push(s);
    }
  }
  return {total, total_error, evaluations, upper};
}

QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f, double rel_tol,
                                         const QuadratureOptions& options) {
  if (!(rel_tol > 0.0)) throw ConfigurationError("rel_tol must be positive");
  if (!(options.initial_cutoff > 0.0)) throw ConfigurationError("initial cutoff must be positive");

  double cutoff = options.initial_cutoff;
  QuadratureResult head =
      integrate_interval(f, 0.0, cutoff, rel_tol, options.abs_floor, options.max_subdivisions);
  double total = head.value;
  double error = head.abs_error;
  long evaluations = head.evaluations;
  double previous_panel = head.value;

  for (int doubling = 0; doubling < options.max_doublings; ++doubling) {
    const double abs_target = std::max(0.1 * rel_tol * std::abs(total), options.abs_floor);
    const QuadratureResult panel = integrate_interval(f, cutoff, 2.0 * cutoff, rel_tol,
                                                      abs_target, options.max_subdivisions);
    cutoff *= 2.0;
    total += panel.value;
    error += panel.abs_error;
    evaluations += panel.evaluations;

    const double bound = std::max(0.1 * rel_tol * std::abs(total), options.abs_floor);
    if (std::abs(panel.value) <= bound && std::abs(previous_panel) > 0.0 &&
        std::abs(panel.value) < std::abs(previous_panel)) {
      const double q = std::abs(panel.value / previous_panel);
      const double tail = std::abs(panel.value) * q / (1.0 - q);
      return {total, error + tail, evaluations, cutoff};
    }
    if (panel.value == 0.0 && previous_panel == 0.0 && total != 0.0) {
      return {total, error, evaluations, cutoff};
    }
    previous_panel = panel.value;
  }
  throw AccuracyError("semi-infinite quadrature did not converge within " +
                          std::to_string(options.max_doublings) + " cutoff doublings",
                      total, error + std::abs(previous_panel));
}

SeriesResult sum_until_converged(const std::function<double(long)>& term, double rel_tol,
                                 long min_terms, long first, long max_terms) {
  if (!(rel_tol > 0.0)) throw ConfigurationError("rel_tol must be positive");
  double sum = 0.0;
  double compensation = 0.0;
  double previous = 0.0;
  for (long count = 1; count <= max_terms; ++count) {
    const long index = first + count - 1;
    const double t = term(index);
    // Kahan summation keeps long slowly decaying series accurate.
    const double y = t - compensation;
    const double s = sum + y;
    compensation = (s - sum) - y;
    sum = s;

    if (count >= min_terms) {
      const double bound = rel_tol * std::abs(sum);
      bool small = std::abs(t) <= bound;
      if (small && count > 1 && previous != 0.0) {
        const double q = std::abs(t / previous);
        small = q < 1.0 && std::abs(t) * q / (1.0 - q) <= bound;
      }
      if (small || (t == 0.0 && previous == 0.0 && count > 1)) {
        return {sum, TruncationReport{index, t, true}};
      }
    }
    previous = t;
  }
  throw AccuracyError("series did not converge within " + std::to_string(max_terms) + " terms",
                      sum, std::abs(previous));
}

double log_det_positive(const Eigen::MatrixXd& matrix) {
  if (matrix.rows() != matrix.cols() || matrix.rows() == 0)
    throw DomainError("determinant requires a non-empty square matrix");
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(matrix);
  const Eigen::MatrixXd& factors = lu.matrixLU();
  const double scale = std::max(matrix.cwiseAbs().maxCoeff(), 1.0);
  double log_det = 0.0;
  double sign = lu.permutationP().determinant();
  for (Eigen::Index i = 0; i < factors.rows(); ++i) {
    const double pivot = factors(i, i);
    if (!(std::abs(pivot) > 1e3 * std::numeric_limits<double>::min() * scale))
      throw SingularityError("matrix is numerically singular (pivot " + std::to_string(i) +
                             " underflows)");
    if (pivot < 0.0) sign = -sign;
    log_det += std::log(std::abs(pivot));
  }
  if (sign < 0.0) throw DomainError("determinant is negative; its logarithm is undefined");
  return log_det;
}

double log_det_identity_minus(const Eigen::MatrixXd& kernel) {
  const Eigen::Index n = kernel.rows();
  return log_det_positive(Eigen::MatrixXd::Identity(n, n) - kernel);
}

double log_det_truncated(const std::function<double(int, int)>& kernel, int size) {
  if (size < 1) throw DomainError("matrix size must be at least 1");
  Eigen::MatrixXd a(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) a(i, j) = kernel(i, j);
  if (!a.allFinite()) throw DomainError("kernel entries must be finite");
  return log_det_identity_minus(a);
}

}  // namespace pfa::numerics
