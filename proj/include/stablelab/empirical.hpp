#pragma once

#include <functional>
#include <string>
#include <vector>

namespace stablelab {

/// Sorted-sample distribution estimate. F(x) = (#samples <= x) / M,
/// right-continuous and nondecreasing.
class EmpiricalCDF {
 public:
  explicit EmpiricalCDF(std::vector<double> samples);

  double operator()(double x) const;
  /// Order-statistic quantile: samples[floor(p*M)] clamped to the range.
  double quantile(double p) const;

  std::size_t size() const { return samples_.size(); }
  const std::vector<double>& samples() const { return samples_; }

  /// Two-column CSV (x, F(x)) at the jump points.
  void write_csv(const std::string& path) const;

 private:
  std::vector<double> samples_;  // sorted ascending
};

/// CDF values tabulated on a grid of x points (the log-average estimator's
/// natural output). values must be nondecreasing in [0,1].
struct GridCdf {
  std::vector<double> xs;
  std::vector<double> values;

  /// Piecewise-linear inverse, clamped to the grid range.
  double quantile(double p) const;
};

/// Exact two-sample KS statistic: sup_x |F_a(x) - F_b(x)| over the jump
/// points of both samples.
double ks_distance(const EmpiricalCDF& a, const EmpiricalCDF& b);

/// Exact one-sample KS statistic against an analytic CDF.
double ks_distance(const EmpiricalCDF& a,
                   const std::function<double(double)>& cdf);

/// KS evaluated on the grid points only (the log-average estimators live
/// on a fixed x grid, so this is the natural comparison).
double ks_distance(const GridCdf& a, const EmpiricalCDF& b);

/// (x - median) / MAD, with MAD = median(|x - median|). Used for the
/// scale-free comparisons where the norming constant is unknown.
std::vector<double> standardize_median_mad(std::vector<double> samples);

/// Standard normal CDF.
double normal_cdf(double x);

}  // namespace stablelab
