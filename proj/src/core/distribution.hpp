#pragma once

#include <memory>
#include <string>

#include "common.hpp"

namespace mstlab {

// Edge-weight distribution with positive density at zero and bounded support
// [0, rho_star].  Weights are produced by inverse-CDF transform of per-edge
// uniforms.
class EdgeWeightDistribution {
 public:
  virtual ~EdgeWeightDistribution() = default;

  virtual const std::string& name() const = 0;
  virtual double cdf(double x) const = 0;
  virtual double inverse_cdf(double p) const = 0;
  virtual double density_at_zero() const = 0;
  virtual double rho_star() const = 0;
};

using DistPtr = std::shared_ptr<const EdgeWeightDistribution>;

// Parses a distribution spec string:
//   "uniform"            uniform on [0,1]
//   "uniform:B"          uniform on [0,B]
//   "truncexp:RATE,HI"   exponential(RATE) conditioned on [0,HI]
//   "pwlinear:F0,HI"     linear density starting at F0, support [0,HI]
DistPtr parse_distribution(const std::string& spec);

}  // namespace mstlab
