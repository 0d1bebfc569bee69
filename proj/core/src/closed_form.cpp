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

#include "horizon/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "horizon/error.hpp"

namespace horizon {
namespace {

// -p log2 p with 0 log 0 = 0.
double plogp(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

// x^k via exp(k ln x); exact 0 when x = 0 and k > 0.
double thermal_power(const SqueezeParam& sq, double k) {
  if (sq.tanh_r() == 0.0) return k == 0.0 ? 1.0 : 0.0;
  return std::exp(k * sq.log_thermal_ratio());
}

// Eigenvalue families of the marginal: p_n = (1-x) x^n and
// p'_n = (n+1) (1-x)^2 x^n for n <= n_max.
struct MarginalSeries {
  std::vector<double> p;
  std::vector<double> p_one;
};

MarginalSeries marginal_series(const SqueezeParam& sq, std::size_t n_max) {
  MarginalSeries s;
  s.p.resize(n_max + 1);
  s.p_one.resize(n_max + 1);
  const double x = sq.thermal_ratio();
  const double c = sq.sech2();
  double term = c;  // (1-x) x^n
  for (std::size_t n = 0; n <= n_max; ++n) {
    s.p[n] = term;
    s.p_one[n] = static_cast<double>(n + 1) * c * term;
    term *= x;
  }
  return s;
}

// sum_{n<=N} x^n, (n+1) x^n, n x^n, n(n+1) x^n, (n+1)^2 x^n
struct Moments {
  double g0 = 0.0;
  double g1 = 0.0;
  double h0 = 0.0;
  double h1 = 0.0;
  double g2 = 0.0;
};

Moments moments(const SqueezeParam& sq, std::size_t n_max) {
  Moments m;
  const double x = sq.thermal_ratio();
  double term = 1.0;
  for (std::size_t n = 0; n <= n_max && term > 0.0; ++n) {
    const double dn = static_cast<double>(n);
    m.g0 += term;
    m.g1 += (dn + 1.0) * term;
    m.h0 += dn * term;
    m.h1 += dn * (dn + 1.0) * term;
    m.g2 += (dn + 1.0) * (dn + 1.0) * term;
    term *= x;
  }
  return m;
}

double s_ab_at(const SqueezeParam& sq_a, const SqueezeParam& sq_b,
               std::size_t n_max) {
  return n_max <= detail::kDirectSumLimit
             ? detail::s_ab_direct(sq_a, sq_b, n_max)
             : detail::s_ab_integral(sq_a, sq_b, n_max);
}

double s_a_at(const SqueezeParam& sq, std::size_t n_max) {
  const double x = sq.thermal_ratio();
  const double c = sq.sech2();
  double sum_p = 0.0;
  double sum_p_one = 0.0;
  double term = c;
  for (std::size_t n = 0; n <= n_max && term > 0.0; ++n) {
    sum_p += plogp(term);
    sum_p_one += plogp(static_cast<double>(n + 1) * c * term);
    term *= x;
  }
  return 1.0 + 0.5 * sum_p + 0.5 * sum_p_one;
}

}  // namespace

BlockCoefficient block_coefficient(std::size_t n, std::size_t q,
                                   const SqueezeParam& sq_a,
                                   const SqueezeParam& sq_b) {
  BlockCoefficient b;
  b.n = n;
  b.q = q;
  b.a = std::sqrt(static_cast<double>(n + 1) * static_cast<double>(q + 1)) /
        (sq_a.cosh_r() * sq_b.cosh_r());
  b.w = thermal_power(sq_a, static_cast<double>(n)) *
        thermal_power(sq_b, static_cast<double>(q)) * sq_a.sech2() *
        sq_b.sech2();
  return b;
}

Matrix block_matrix(std::size_t n, std::size_t q, const SqueezeParam& sq_a,
                    const SqueezeParam& sq_b) {
  const double a = block_coefficient(n, q, sq_a, sq_b).a;
  return Matrix{{0.5, 0.0, 0.0, 0.5 * a},
                {0.0, 0.0, 0.0, 0.0},
                {0.0, 0.0, 0.0, 0.0},
                {0.5 * a, 0.0, 0.0, 0.5 * a * a}};
}

std::array<double, 4> block_pt_eigenvalues(std::size_t n, std::size_t q,
                                           const SqueezeParam& sq_a,
                                           const SqueezeParam& sq_b) {
  const double a = block_coefficient(n, q, sq_a, sq_b).a;
  return {0.5, -0.5 * a, 0.5 * a, 0.5 * a * a};
}

double e_n_paper(const SqueezeParam& sq_a, const SqueezeParam& sq_b) {
  // 2 |-a/2| at n = q = 0
  return 1.0 / (sq_a.cosh_r() * sq_b.cosh_r());
}

SeriesConfig SeriesConfig::fixed(std::size_t n_max) {
  if (n_max < 1 || n_max > kMaxSeriesCutoff) {
    throw InvalidArgument("series cutoff must lie in [1, " +
                          std::to_string(kMaxSeriesCutoff) + "], got " +
                          std::to_string(n_max));
  }
  SeriesConfig cfg;
  cfg.fixed_ = true;
  cfg.n_max_ = n_max;
  return cfg;
}

SeriesConfig SeriesConfig::tail(double tol) {
  if (!(tol > 0.0 && tol < 1.0)) {
    throw InvalidArgument("tail tolerance must lie in (0, 1)");
  }
  SeriesConfig cfg;
  cfg.fixed_ = false;
  cfg.tail_tol_ = tol;
  return cfg;
}

std::size_t resolve_cutoff(const SqueezeParam& sq_a, const SqueezeParam& sq_b,
                           const SeriesConfig& cfg) {
  if (cfg.is_fixed()) return cfg.n_max();

  const double log_x =
      std::max(sq_a.log_thermal_ratio(), sq_b.log_thermal_ratio());
  const double log_tol = std::log(cfg.tail_tol());
  // ln((N+2) x^(N+1)); the geometric tail x^(N+1) is always the smaller one.
  const auto log_weighted_tail = [&](double n) {
    return std::log(n + 2.0) + (n + 1.0) * log_x;
  };
  const auto converged = [&](std::size_t n) {
    return log_weighted_tail(static_cast<double>(n)) < log_tol;
  };
  if (converged(1)) return 1;

  // ln(N+2) + (N+1) ln x is concave in N with its peak at N + 2 = -1/ln x,
  // so past the peak it decreases and the first converged N is found by
  // bisection.
  std::size_t lo = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::max(0.0, -1.0 / log_x - 2.0)));
  std::size_t hi = std::max<std::size_t>(2 * lo, 2);
  while (!converged(hi)) {
    if (hi > kMaxSeriesCutoff) {
      throw ConvergenceError(
          "tail tolerance " + describe(cfg.tail_tol()) +
          " needs a series cutoff above " + std::to_string(kMaxSeriesCutoff) +
          " at r = " + describe(std::max(sq_a.r(), sq_b.r())));
    }
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    (converged(mid) ? hi : lo) = mid;
  }
  if (hi > kMaxSeriesCutoff) {
    throw ConvergenceError("tail tolerance " + describe(cfg.tail_tol()) +
                           " needs a series cutoff above " +
                           std::to_string(kMaxSeriesCutoff));
  }
  return hi;
}

double s_a_closed(const SqueezeParam& sq, const SeriesConfig& cfg) {
  return s_a_at(sq, resolve_cutoff(sq, sq, cfg));
}

double s_ab_closed(const SqueezeParam& sq_a, const SqueezeParam& sq_b,
                   const SeriesConfig& cfg) {
  return s_ab_at(sq_a, sq_b, resolve_cutoff(sq_a, sq_b, cfg));
}

double mutual_info_closed(const SqueezeParam& sq_a, const SqueezeParam& sq_b,
                          const SeriesConfig& cfg) {
  return closed_form_measures(sq_a, sq_b, cfg).i;
}

ClosedFormMeasures closed_form_measures(const SqueezeParam& sq_a,
                                        const SqueezeParam& sq_b,
                                        const SeriesConfig& cfg) {
  ClosedFormMeasures m;
  m.n_max = resolve_cutoff(sq_a, sq_b, cfg);
  m.e_n_block00 = e_n_paper(sq_a, sq_b);
  m.s_a = s_a_at(sq_a, m.n_max);
  m.s_b = sq_b.r() == sq_a.r() ? m.s_a : s_a_at(sq_b, m.n_max);
  m.s_ab = s_ab_at(sq_a, sq_b, m.n_max);
  m.i = m.s_a + m.s_b - m.s_ab;
  return m;
}

namespace detail {

double s_ab_direct(const SqueezeParam& sq_a, const SqueezeParam& sq_b,
                   std::size_t n_max) {
  const MarginalSeries a = marginal_series(sq_a, n_max);
  const MarginalSeries b = marginal_series(sq_b, n_max);
  double s = 0.0;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const double pn = 0.5 * a.p[n];
    const double pn_one = 0.5 * a.p_one[n];
    if (pn == 0.0) break;
    for (std::size_t q = 0; q <= n_max; ++q) {
      // P_nq = (w/2)(1 + a^2) = (p_n p_q + p'_n p'_q) / 2
      s += plogp(pn * b.p[q] + pn_one * b.p_one[q]);
    }
  }
  return s;
}

double s_ab_integral(const SqueezeParam& sq_a, const SqueezeParam& sq_b,
                     std::size_t n_max) {
  const double x = sq_a.thermal_ratio();
  const double y = sq_b.thermal_ratio();
  const double cy = sq_b.sech2();
  const double k = sq_a.sech2() * sq_b.sech2();
  const double big_n = static_cast<double>(n_max);
  const Moments mx = moments(sq_a, n_max);
  const Moments my = moments(sq_b, n_max);

  // Separable part: P = (k/2) x^n y^q (1 + w), ln P = ln(k/2) + n ln x +
  // q ln y + ln(1 + w).
  const double half_k = 0.5 * k;
  const double sum_p = half_k * (mx.g0 * my.g0 + k * mx.g1 * my.g1);
  const double sum_np = half_k * (mx.h0 * my.g0 + k * mx.h1 * my.g1);
  const double sum_qp = half_k * (mx.g0 * my.h0 + k * mx.g1 * my.h1);
  double nats = -std::log(half_k) * sum_p;
  if (sum_np > 0.0) nats -= sq_a.log_thermal_ratio() * sum_np;
  if (sum_qp > 0.0) nats -= sq_b.log_thermal_ratio() * sum_qp;

  // T = sum P ln(1 + w) = (k/2) int ds e^{-tau} sum_n x^n R_n(tau), tau = e^s,
  // R_n = sum_q y^q (1 + w)(1 - e^{-w tau}), w = z_n (q+1), z_n = k (n+1).
  const double y_pow = thermal_power(sq_b, big_n + 1.0);  // y^(N+1)
  const auto geometric = [&](double rho_pow, double one_minus_rho,
                             double& g0, double& g1) {
    // sum_{q<=N} rho^q and sum_{q<=N} (q+1) rho^q
    const double inv = 1.0 / one_minus_rho;
    g0 = (1.0 - rho_pow) * inv;
    g1 = g0 * inv - (big_n + 1.0) * rho_pow * inv;
  };
  double g0y, g1y;
  geometric(y_pow, cy, g0y, g1y);

  const double m1 = k * mx.g1 * my.g1 + k * k * mx.g2 * my.g2;
  constexpr double kStep = 0.25;
  constexpr double kTauMax = 50.0;       // e^{-50} ~ 2e-22
  constexpr double kSmallTailTarget = 1e-18;
  constexpr double kFlush = 1e-300;
  const double s_hi = std::log(kTauMax);
  const double s_lo = std::log(kSmallTailTarget / (half_k * m1));
  const auto j_lo = static_cast<long>(std::floor(s_lo / kStep));
  const auto j_hi = static_cast<long>(std::ceil(s_hi / kStep));

  double integral = 0.0;
  for (long j = j_lo; j <= j_hi; ++j) {
    const double tau = std::exp(static_cast<double>(j) * kStep);
    const double e1 = std::exp(-k * tau);          // e^{-z_0 tau}
    const double om1 = -std::expm1(-k * tau);      // 1 - e1
    const double f1 = std::exp(-k * tau * (big_n + 1.0));
    double e_n = e1;    // e^{-z_n tau}
    double om_n = om1;  // 1 - e_n
    double f_n = f1;    // e_n^(N+1)
    double x_pow = 1.0;
    double row_sum = 0.0;
    // Factors below kFlush contribute nothing at double precision; dropping
    // them keeps the recurrences out of slow subnormal arithmetic.
    for (std::size_t n = 0; n <= n_max && x_pow > kFlush; ++n) {
      const double z = k * static_cast<double>(n + 1);
      const double one_minus_rho = cy + y * om_n;
      double g0, g1;
      geometric(y_pow * f_n, one_minus_rho, g0, g1);
      const double r_n = (g0y + z * g1y) - e_n * (g0 + z * g1);
      row_sum += x_pow * r_n;
      om_n += e_n * om1;
      e_n = e_n * e1 > kFlush ? e_n * e1 : 0.0;
      f_n = f_n * f1 > kFlush ? f_n * f1 : 0.0;
      x_pow *= x;
    }
    integral += std::exp(-tau) * row_sum;
  }
  nats -= half_k * kStep * integral;
  return nats / std::numbers::ln2;
}

}  // namespace detail

}  // namespace horizon
