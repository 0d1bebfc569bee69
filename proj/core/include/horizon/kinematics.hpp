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

// Conversion between black-hole/mode parameters and the squeezing parameter.
//
// Everything downstream is parameterized by the squeezing parameter r of the
// Bogoliubov transformation between Kruskal and Schwarzschild modes,
//
//     tanh r = exp(-4 pi M omega),   cosh r = (1 - exp(-8 pi M omega))^{-1/2},
//
// in geometric units (G = c = hbar = k_B = 1), so only the product M*omega
// matters. r = 0 is the infinite-mass limit (no radiation); r -> infinity is
// the evaporation limit M -> 0.

#pragma once

namespace horizon {

/// Black-hole mass and field-mode frequency in geometric units.
class ModeSpec {
 public:
  /// Throws InvalidArgument unless both values are positive and finite.
  ModeSpec(double mass, double omega);

  double mass() const { return mass_; }
  double omega() const { return omega_; }

 private:
  double mass_;
  double omega_;
};

/// Squeezing parameter with its hyperbolic functions cached.
///
/// Besides tanh r and cosh r this keeps x = tanh^2 r (the thermal ratio of
/// successive Fock weights) and sech^2 r = 1 - x computed without
/// cancellation, since the series code needs both near x -> 1.
class SqueezeParam {
 public:
  double r() const { return r_; }
  double tanh_r() const { return tanh_r_; }
  double cosh_r() const { return cosh_r_; }

  /// tanh^2 r.
  double thermal_ratio() const { return tanh_r_ * tanh_r_; }
  /// sech^2 r = 1 - tanh^2 r.
  double sech2() const { return sech2_; }
  /// ln(tanh^2 r); -infinity at r = 0.
  double log_thermal_ratio() const { return log_x_; }

  friend SqueezeParam make_squeeze(double r);
  friend SqueezeParam squeezing_from_mode(const ModeSpec& mode);
  friend SqueezeParam partner_squeezing(const SqueezeParam& sq,
                                        double omega_ratio);

 private:
  SqueezeParam() = default;
  // t = tanh r, with 1 - t and ln t supplied accurately by the caller.
  static SqueezeParam from_tanh(double t, double one_minus_t, double log_t);

  double r_ = 0.0;
  double tanh_r_ = 0.0;
  double cosh_r_ = 1.0;
  double sech2_ = 1.0;
  double log_x_ = 0.0;
};

/// r = artanh(exp(-4 pi M omega)).
SqueezeParam squeezing_from_mode(const ModeSpec& mode);

/// M = -ln(tanh r) / (4 pi omega). Requires r > 0 and omega > 0.
double mass_from_squeezing(double r, double omega);

/// Direct entry of r >= 0. Throws InvalidArgument for negative or non-finite
/// r, and for r so large that tanh r rounds to 1 (about r > 18.7).
SqueezeParam make_squeeze(double r);

/// Squeezing of a second mode omega' = omega_ratio * omega around the same
/// black hole: tanh r' = (tanh r)^omega_ratio.
SqueezeParam partner_squeezing(const SqueezeParam& sq, double omega_ratio);

}  // namespace horizon
