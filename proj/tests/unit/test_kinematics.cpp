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

#include <cmath>
#include <limits>
#include <numbers>

#include "catch_amalgamated.hpp"
#include "horizon/error.hpp"
#include "horizon/kinematics.hpp"

using namespace horizon;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("mode spec rejects non-positive and non-finite values") {
  CHECK_THROWS_AS(ModeSpec(0.0, 1.0), InvalidArgument);
  CHECK_THROWS_AS(ModeSpec(1.0, -1.0), InvalidArgument);
  CHECK_THROWS_AS(ModeSpec(std::nan(""), 1.0), InvalidArgument);
  CHECK_THROWS_AS(ModeSpec(1.0, std::numeric_limits<double>::infinity()),
                  InvalidArgument);
  const ModeSpec m(2.0, 0.5);
  CHECK(m.mass() == 2.0);
  CHECK(m.omega() == 0.5);
}

TEST_CASE("squeezing from a mode whose thermal factor is one half") {
  // exp(-4 pi M omega) = 1/2 gives r = atanh(1/2).
  const double m_omega = std::log(2.0) / (4.0 * kPi);
  const SqueezeParam sq = squeezing_from_mode(ModeSpec(m_omega, 1.0));
  CHECK_THAT(sq.r(), WithinRel(0.5493061443340548, 1e-14));
  CHECK_THAT(sq.tanh_r(), WithinRel(0.5, 1e-14));
  CHECK_THAT(sq.thermal_ratio(), WithinRel(0.25, 1e-14));
  CHECK_THAT(sq.sech2(), WithinRel(0.75, 1e-14));
  CHECK_THAT(sq.log_thermal_ratio(), WithinRel(std::log(0.25), 1e-14));
}

TEST_CASE("frozen hyperbolic values") {
  const SqueezeParam one = make_squeeze(1.0);
  CHECK_THAT(one.tanh_r(), WithinRel(0.7615941559557649, 1e-15));
  CHECK_THAT(one.cosh_r(), WithinRel(1.5430806348152437, 1e-15));
  CHECK_THAT(std::sqrt(one.sech2()), WithinRel(0.6480542736638855, 1e-14));
  const SqueezeParam six = make_squeeze(6.0);
  CHECK_THAT(six.tanh_r(), WithinRel(0.9999877116507956, 1e-15));
  CHECK_THAT(six.cosh_r(), WithinRel(201.7156361224559, 1e-14));
  CHECK_THAT(six.sech2(),
             WithinRel(1.0 / (201.7156361224559 * 201.7156361224559), 1e-13));
}

TEST_CASE("zero squeezing") {
  const SqueezeParam sq = make_squeeze(0.0);
  CHECK(sq.r() == 0.0);
  CHECK(sq.tanh_r() == 0.0);
  CHECK(sq.cosh_r() == 1.0);
  CHECK(sq.sech2() == 1.0);
  CHECK(std::isinf(sq.log_thermal_ratio()));
  CHECK(sq.log_thermal_ratio() < 0.0);
}

TEST_CASE("make_squeeze domain") {
  CHECK_THROWS_AS(make_squeeze(-0.1), InvalidArgument);
  CHECK_THROWS_AS(make_squeeze(std::nan("")), InvalidArgument);
  CHECK_THROWS_AS(make_squeeze(40.0), InvalidArgument);
  CHECK_NOTHROW(make_squeeze(15.0));
}

TEST_CASE("mass and squeezing round trip") {
  for (double r : {0.05, 0.5, 1.0, 2.0, 3.5, 6.0, 10.0}) {
    for (double omega : {0.1, 1.0, 7.0}) {
      const double mass = mass_from_squeezing(r, omega);
      const SqueezeParam sq = squeezing_from_mode(ModeSpec(mass, omega));
      CHECK_THAT(sq.r(), WithinRel(r, 1e-12));
    }
  }
}

TEST_CASE("heavy black hole keeps tiny squeezing accurate") {
  // tanh r = exp(-40 pi); r equals it to double precision.
  const SqueezeParam sq = squeezing_from_mode(ModeSpec(10.0, 1.0));
  const double t = std::exp(-40.0 * kPi);
  CHECK_THAT(sq.r(), WithinRel(t, 1e-13));
  CHECK_THAT(sq.log_thermal_ratio(), WithinRel(-80.0 * kPi, 1e-14));
}

TEST_CASE("light black hole keeps the thermal log accurate") {
  // tanh r = exp(-eps): ln(tanh^2 r) = -2 eps with no cancellation.
  const double eps = 1e-9;
  const SqueezeParam sq =
      squeezing_from_mode(ModeSpec(eps / (4.0 * kPi), 1.0));
  CHECK_THAT(sq.log_thermal_ratio(), WithinRel(-2.0 * eps, 1e-9));
  CHECK_THAT(sq.sech2(), WithinRel(-std::expm1(-2.0 * eps), 1e-9));
}

TEST_CASE("partner squeezing follows the frequency ratio") {
  const SqueezeParam sq = make_squeeze(1.3);
  CHECK(partner_squeezing(sq, 1.0).r() == sq.r());
  for (double ratio : {0.25, 0.5, 2.0, 3.0}) {
    const SqueezeParam p = partner_squeezing(sq, ratio);
    CHECK_THAT(p.tanh_r(), WithinRel(std::pow(sq.tanh_r(), ratio), 1e-13));
  }
  // Same mass, two frequencies.
  const ModeSpec a(0.03, 1.0);
  const SqueezeParam from_ratio =
      partner_squeezing(squeezing_from_mode(a), 2.0);
  const SqueezeParam direct = squeezing_from_mode(ModeSpec(0.03, 2.0));
  CHECK_THAT(from_ratio.r(), WithinRel(direct.r(), 1e-13));
  CHECK(partner_squeezing(make_squeeze(0.0), 2.0).r() == 0.0);
  CHECK_THROWS_AS(partner_squeezing(sq, 0.0), InvalidArgument);
}
