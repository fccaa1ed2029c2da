#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "stablelab/rng.hpp"

namespace stablelab {

/// Parameters of a stable law. alpha = 2 is the normal case with
/// characteristic function exp(-t^2/2) (variance 1), independent of beta.
struct StableParams {
  double alpha;
  double beta;
  double scale = 1.0;
  double location = 0.0;

  /// Throws std::invalid_argument unless 0 < alpha <= 2, |beta| <= 1,
  /// scale > 0.
  void validate() const;
};

/// Characteristic function of the stable law. Dispatches on alpha:
/// the normal form at alpha = 2, the log form at alpha = 1, the
/// tan(pi*alpha/2) form otherwise. Scale and location enter as
/// exp(i*location*t) * phi(scale*t).
std::complex<double> stable_cf(const StableParams& params, double t);

/// Chambers-Mallows-Stuck sampler calibrated so the output characteristic
/// function equals stable_cf at scale 1. Caches the per-parameter constants;
/// use this for bulk draws.
class StableSampler {
 public:
  explicit StableSampler(StableParams params);

  double operator()(Rng& rng) const;

  const StableParams& params() const { return params_; }

 private:
  StableParams params_;
  // cached for the alpha != 1, alpha != 2 branch
  double shifted_angle_ = 0.0;   // arctan(beta * tan(pi*alpha/2)) / alpha
  double scale_factor_ = 1.0;    // (1 + beta^2 tan^2(pi*alpha/2))^(1/(2 alpha))
  double inv_alpha_ = 1.0;
};

/// One draw; constructs a sampler per call. Prefer StableSampler in loops.
double sample_stable(const StableParams& params, Rng& rng);

/// Norming factors a_n for partial sums: sigma*sqrt(n) or c*n^(1/alpha).
class NormingSequence {
 public:
  enum class Form { SqrtN, PowerLaw };

  static NormingSequence sqrt_n(double sigma);
  static NormingSequence power_law(double alpha, double c);

  double operator()(std::size_t n) const;

  Form form() const { return form_; }
  double alpha() const { return alpha_; }
  double coefficient() const { return coeff_; }
  std::string describe() const;

 private:
  NormingSequence(Form form, double alpha, double coeff)
      : form_(form), alpha_(alpha), coeff_(coeff) {}

  Form form_;
  double alpha_;  // 2 for SqrtN
  double coeff_;  // sigma or c
};

/// Closed catalog of positive i.i.d. input laws with analytically known
/// mean (and standard deviation where finite).
class InputLaw {
 public:
  enum class Kind { ShiftedExponential, Lognormal, Pareto };

  /// shift + Exp(2*rate) with shift = 1/(2*rate); mean exactly 1/rate.
  static InputLaw shifted_exponential(double rate);
  static InputLaw lognormal(double log_mean, double log_sd);
  /// Requires alpha in (1,2): finite mean, infinite variance.
  static InputLaw pareto(double alpha, double x_min);

  Kind kind() const { return kind_; }
  double mean() const { return mu_; }
  std::optional<double> stddev() const { return sigma_; }
  /// Index of the attracting stable law: 2 when the variance is finite,
  /// the tail exponent for Pareto.
  double stable_index() const;
  /// sigma*sqrt(n) for finite-variance kinds; n^(1/alpha) for Pareto
  /// (the constant is not known in closed form, tests are scale-free).
  NormingSequence default_norming() const;

  double sample(Rng& rng) const;
  std::vector<double> sample_many(std::size_t n, Rng& rng) const;

  double param1() const { return p1_; }
  double param2() const { return p2_; }
  std::string describe() const;

 private:
  InputLaw(Kind kind, double p1, double p2, double mu,
           std::optional<double> sigma)
      : kind_(kind), p1_(p1), p2_(p2), mu_(mu), sigma_(sigma) {}

  Kind kind_;
  double p1_;
  double p2_;
  double mu_;
  std::optional<double> sigma_;
};

}  // namespace stablelab
