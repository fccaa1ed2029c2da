#include "stablelab/stable.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stablelab {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

void StableParams::validate() const {
  if (!(alpha > 0.0) || !(alpha <= 2.0)) {
    throw std::invalid_argument("stable index alpha must lie in (0,2]");
  }
  if (!(beta >= -1.0) || !(beta <= 1.0)) {
    throw std::invalid_argument("skewness beta must lie in [-1,1]");
  }
  if (!(scale > 0.0)) {
    throw std::invalid_argument("scale must be positive");
  }
}

std::complex<double> stable_cf(const StableParams& params, double t) {
  params.validate();
  if (t == 0.0) return {1.0, 0.0};

  const double ts = params.scale * t;
  const double at = std::abs(ts);
  const double sgn = ts > 0.0 ? 1.0 : -1.0;

  std::complex<double> log_phi;
  if (params.alpha == 2.0) {
    log_phi = {-ts * ts / 2.0, 0.0};
  } else if (params.alpha == 1.0) {
    // genuine ln here; the truncated-log convention applies to averaging
    // denominators, not to the characteristic function
    log_phi = -at * std::complex<double>(
                        1.0, params.beta * sgn * (2.0 / kPi) * std::log(at));
  } else {
    const double tan_term = std::tan(kPi * params.alpha / 2.0);
    log_phi = -std::pow(at, params.alpha) *
              std::complex<double>(1.0, -params.beta * sgn * tan_term);
  }
  return std::exp(std::complex<double>(0.0, params.location * t) + log_phi);
}

StableSampler::StableSampler(StableParams params) : params_(params) {
  params_.validate();
  if (params_.alpha == 1.0 && params_.beta != 0.0) {
    throw std::invalid_argument(
        "sampling at alpha = 1 with beta != 0 is not supported");
  }
  if (params_.alpha != 2.0 && params_.alpha != 1.0) {
    const double zeta = params_.beta * std::tan(kPi * params_.alpha / 2.0);
    shifted_angle_ = std::atan(zeta) / params_.alpha;
    scale_factor_ = std::pow(1.0 + zeta * zeta, 0.5 / params_.alpha);
    inv_alpha_ = 1.0 / params_.alpha;
  }
}

double StableSampler::operator()(Rng& rng) const {
  double x;
  if (params_.alpha == 2.0) {
    x = normal01(rng);
  } else if (params_.alpha == 1.0) {
    // beta = 0: standard Cauchy
    x = std::tan(kPi * (uniform_open01(rng) - 0.5));
  } else {
    const double v = kPi * (uniform_open01(rng) - 0.5);
    const double w = exponential(rng);
    const double a = params_.alpha * (v + shifted_angle_);
    x = scale_factor_ * std::sin(a) / std::pow(std::cos(v), inv_alpha_) *
        std::pow(std::cos(v - a) / w, (1.0 - params_.alpha) * inv_alpha_);
  }
  return params_.scale * x + params_.location;
}

double sample_stable(const StableParams& params, Rng& rng) {
  return StableSampler(params)(rng);
}

NormingSequence NormingSequence::sqrt_n(double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  return NormingSequence(Form::SqrtN, 2.0, sigma);
}

NormingSequence NormingSequence::power_law(double alpha, double c) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  if (!(c > 0.0)) throw std::invalid_argument("c must be positive");
  return NormingSequence(Form::PowerLaw, alpha, c);
}

double NormingSequence::operator()(std::size_t n) const {
  if (n < 1) throw std::invalid_argument("norming index must be >= 1");
  const double nd = static_cast<double>(n);
  return form_ == Form::SqrtN ? coeff_ * std::sqrt(nd)
                              : coeff_ * std::pow(nd, 1.0 / alpha_);
}

std::string NormingSequence::describe() const {
  return form_ == Form::SqrtN
             ? std::to_string(coeff_) + "*sqrt(n)"
             : std::to_string(coeff_) + "*n^(1/" + std::to_string(alpha_) + ")";
}

InputLaw InputLaw::shifted_exponential(double rate) {
  if (!(rate > 0.0)) throw std::invalid_argument("rate must be positive");
  const double mu = 1.0 / rate;
  const double sigma = 1.0 / (2.0 * rate);
  return InputLaw(Kind::ShiftedExponential, rate, 0.0, mu, sigma);
}

InputLaw InputLaw::lognormal(double log_mean, double log_sd) {
  if (!(log_sd > 0.0)) throw std::invalid_argument("log_sd must be positive");
  const double v = log_sd * log_sd;
  const double mu = std::exp(log_mean + v / 2.0);
  const double var = (std::exp(v) - 1.0) * std::exp(2.0 * log_mean + v);
  return InputLaw(Kind::Lognormal, log_mean, log_sd, mu, std::sqrt(var));
}

InputLaw InputLaw::pareto(double alpha, double x_min) {
  if (!(alpha > 1.0) || !(alpha < 2.0)) {
    throw std::invalid_argument(
        "pareto tail index must lie in (1,2): finite mean, infinite variance");
  }
  if (!(x_min > 0.0)) throw std::invalid_argument("x_min must be positive");
  const double mu = alpha * x_min / (alpha - 1.0);
  return InputLaw(Kind::Pareto, alpha, x_min, mu, std::nullopt);
}

double InputLaw::stable_index() const {
  return kind_ == Kind::Pareto ? p1_ : 2.0;
}

NormingSequence InputLaw::default_norming() const {
  if (sigma_) return NormingSequence::sqrt_n(*sigma_);
  return NormingSequence::power_law(p1_, 1.0);
}

double InputLaw::sample(Rng& rng) const {
  switch (kind_) {
    case Kind::ShiftedExponential: {
      const double two_rate = 2.0 * p1_;
      return 1.0 / two_rate + exponential(rng, two_rate);
    }
    case Kind::Lognormal:
      return std::exp(p1_ + p2_ * normal01(rng));
    case Kind::Pareto:
      return p2_ * std::pow(uniform_open01(rng), -1.0 / p1_);
  }
  throw std::logic_error("unreachable");
}

std::vector<double> InputLaw::sample_many(std::size_t n, Rng& rng) const {
  if (n < 1) throw std::invalid_argument("sample count must be >= 1");
  std::vector<double> out(n);
  for (auto& v : out) v = sample(rng);
  return out;
}

std::string InputLaw::describe() const {
  switch (kind_) {
    case Kind::ShiftedExponential:
      return "shifted-exponential(rate=" + std::to_string(p1_) + ")";
    case Kind::Lognormal:
      return "lognormal(" + std::to_string(p1_) + "," + std::to_string(p2_) +
             ")";
    case Kind::Pareto:
      return "pareto(alpha=" + std::to_string(p1_) +
             ",x_min=" + std::to_string(p2_) + ")";
  }
  return {};
}

}  // namespace stablelab
