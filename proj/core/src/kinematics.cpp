// Copyright 2026 The horizon-ent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "horizon/kinematics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "horizon/error.hpp"

namespace horizon {
namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

// ln(tanh r) for r > 0; past r = 1/2 it avoids forming 1 - tanh r.
double log_tanh(double r) {
  if (r < 0.5) return std::log(std::tanh(r));
  return std::log1p(-2.0 / (std::exp(2.0 * r) + 1.0));
}

}  // namespace

ModeSpec::ModeSpec(double mass, double omega) : mass_(mass), omega_(omega) {
  if (!positive_finite(mass)) {
    throw InvalidArgument("mass must be positive and finite, got " +
                          describe(mass));
  }
  if (!positive_finite(omega)) {
    throw InvalidArgument("omega must be positive and finite, got " +
                          describe(omega));
  }
}

SqueezeParam SqueezeParam::from_tanh(double t, double one_minus_t,
                                     double log_t) {
  if (!(t >= 0.0) || !(one_minus_t > 0.0) || t >= 1.0) {
    throw InvalidArgument("squeezing parameter out of representable range");
  }
  SqueezeParam sq;
  sq.tanh_r_ = t;
  // artanh t = (ln(1 + t) - ln(1 - t)) / 2; the log form keeps 1 - t exact
  sq.r_ = t < 0.5 ? std::atanh(t)
                  : 0.5 * (std::log1p(t) - std::log(one_minus_t));
  const double sech2 = one_minus_t * (1.0 + t);
  sq.sech2_ = sech2;
  sq.cosh_r_ = 1.0 / std::sqrt(sech2);
  sq.log_x_ = 2.0 * log_t;
  return sq;
}

SqueezeParam make_squeeze(double r) {
  if (!std::isfinite(r) || r < 0.0) {
    throw InvalidArgument("squeezing r must be finite and >= 0, got " +
                          describe(r));
  }
  SqueezeParam sq;
  sq.r_ = r;
  sq.tanh_r_ = std::tanh(r);
  sq.cosh_r_ = std::cosh(r);
  if (sq.tanh_r_ >= 1.0) {
    throw InvalidArgument("squeezing r = " + describe(r) +
                          " is too large: tanh r rounds to 1");
  }
  sq.sech2_ = 1.0 / (sq.cosh_r_ * sq.cosh_r_);
  sq.log_x_ = r == 0.0 ? -std::numeric_limits<double>::infinity()
                       : 2.0 * log_tanh(r);
  return sq;
}

SqueezeParam squeezing_from_mode(const ModeSpec& mode) {
  const double a = 4.0 * std::numbers::pi * mode.mass() * mode.omega();
  if (!std::isfinite(a)) {
    throw InvalidArgument("M*omega overflows");
  }
  // tanh r = e^{-a}; 1 - tanh r = -expm1(-a) keeps precision for small a.
  return SqueezeParam::from_tanh(std::exp(-a), -std::expm1(-a), -a);
}

double mass_from_squeezing(double r, double omega) {
  if (!positive_finite(r)) {
    throw InvalidArgument(
        "mass_from_squeezing needs r > 0 (r = 0 is the infinite-mass limit)");
  }
  if (!positive_finite(omega)) {
    throw InvalidArgument("omega must be positive and finite");
  }
  return -log_tanh(r) / (4.0 * std::numbers::pi * omega);
}

SqueezeParam partner_squeezing(const SqueezeParam& sq, double omega_ratio) {
  if (!positive_finite(omega_ratio)) {
    throw InvalidArgument("omega ratio must be positive and finite");
  }
  if (omega_ratio == 1.0 || sq.r() == 0.0) {
    return sq;
  }
  // ln tanh r' = ratio * ln tanh r
  const double log_t = omega_ratio * (0.5 * sq.log_thermal_ratio());
  return SqueezeParam::from_tanh(std::exp(log_t), -std::expm1(log_t), log_t);
}

}  // namespace horizon
