#include "distribution.hpp"

#include <cmath>
#include <vector>

namespace mstlab {

namespace {

class UniformDist final : public EdgeWeightDistribution {
 public:
  explicit UniformDist(double b) : b_(b), name_(b == 1.0 ? "uniform" : "uniform:" + std::to_string(b)) {
    if (!(b > 0) || !std::isfinite(b)) fail_invalid("uniform scale must be positive and finite");
  }

  const std::string& name() const override { return name_; }
  double cdf(double x) const override { return x <= 0 ? 0.0 : (x >= b_ ? 1.0 : x / b_); }
  double inverse_cdf(double p) const override { return p * b_; }
  double density_at_zero() const override { return 1.0 / b_; }
  double rho_star() const override { return b_; }

 private:
  double b_;
  std::string name_;
};

class TruncExpDist final : public EdgeWeightDistribution {
 public:
  TruncExpDist(double rate, double hi) : rate_(rate), hi_(hi) {
    if (!(rate > 0) || !(hi > 0) || !std::isfinite(rate) || !std::isfinite(hi))
      fail_invalid("truncexp parameters must be positive and finite");
    mass_ = -std::expm1(-rate_ * hi_);
    name_ = "truncexp:" + std::to_string(rate_) + "," + std::to_string(hi_);
  }

  const std::string& name() const override { return name_; }
  double cdf(double x) const override {
    if (x <= 0) return 0.0;
    if (x >= hi_) return 1.0;
    return -std::expm1(-rate_ * x) / mass_;
  }
  double inverse_cdf(double p) const override { return -std::log1p(-p * mass_) / rate_; }
  double density_at_zero() const override { return rate_ / mass_; }
  double rho_star() const override { return hi_; }

 private:
  double rate_, hi_, mass_;
  std::string name_;
};

// Density f(x) = f0 + s*x on [0, hi], with s chosen so the density integrates
// to one.  Requires f0 > 0 and f0*hi <= 2 so the density stays nonnegative.
class PiecewiseLinearDist final : public EdgeWeightDistribution {
 public:
  PiecewiseLinearDist(double f0, double hi) : f0_(f0), hi_(hi) {
    if (!(f0 > 0) || !(hi > 0) || !std::isfinite(f0) || !std::isfinite(hi))
      fail_invalid("pwlinear parameters must be positive and finite");
    if (f0 * hi > 2.0) fail_invalid("pwlinear density would go negative: need f0*hi <= 2");
    slope_ = 2.0 * (1.0 - f0_ * hi_) / (hi_ * hi_);
    name_ = "pwlinear:" + std::to_string(f0_) + "," + std::to_string(hi_);
  }

  const std::string& name() const override { return name_; }
  double cdf(double x) const override {
    if (x <= 0) return 0.0;
    if (x >= hi_) return 1.0;
    return f0_ * x + 0.5 * slope_ * x * x;
  }
  double inverse_cdf(double p) const override {
    if (slope_ == 0.0) return p / f0_;
    double disc = f0_ * f0_ + 2.0 * slope_ * p;
    double x = (std::sqrt(disc) - f0_) / slope_;
    return x < 0 ? 0.0 : (x > hi_ ? hi_ : x);
  }
  double density_at_zero() const override { return f0_; }
  double rho_star() const override { return hi_; }

 private:
  double f0_, hi_, slope_;
  std::string name_;
};

std::vector<double> parse_params(const std::string& body, std::size_t want, const std::string& spec) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      out.push_back(std::stod(tok));
    } catch (const std::exception&) {
      fail_invalid("bad distribution parameter in '" + spec + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.size() != want) fail_invalid("distribution '" + spec + "' expects " + std::to_string(want) + " parameter(s)");
  return out;
}

}  // namespace

DistPtr parse_distribution(const std::string& spec) {
  std::size_t colon = spec.find(':');
  std::string kind = spec.substr(0, colon);
  std::string body = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "uniform") {
    if (body.empty()) return std::make_shared<UniformDist>(1.0);
    return std::make_shared<UniformDist>(parse_params(body, 1, spec)[0]);
  }
  if (kind == "truncexp") {
    if (body.empty()) return std::make_shared<TruncExpDist>(1.0, 1.0);
    auto p = parse_params(body, 2, spec);
    return std::make_shared<TruncExpDist>(p[0], p[1]);
  }
  if (kind == "pwlinear") {
    auto p = parse_params(body, 2, spec);
    return std::make_shared<PiecewiseLinearDist>(p[0], p[1]);
  }
  fail_invalid("unknown distribution '" + spec + "'");
}

}  // namespace mstlab
