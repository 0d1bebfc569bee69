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

// Analytic block-structure results for the exterior state of the pair.
//
// Tracing the interior modes leaves
//
//     rho_AB = sum_{n,q} w_nq rho_nq,
//     w_nq   = tanh^{2n} r_a tanh^{2q} r_b / (cosh^2 r_a cosh^2 r_b),
//
// where each rho_nq lives on [nq, n(q+1), (n+1)q, (n+1)(q+1)] as
//
//     [[1/2, 0, 0, a/2], [0, 0, 0, 0], [0, 0, 0, 0], [a/2, 0, 0, a^2/2]],
//     a = sqrt((n+1)(q+1)) / (cosh r_a cosh r_b),
//
// with partial-transpose eigenvalues {1/2, -a/2, a/2, a^2/2}. The entropy
// series treat the blocks as orthogonal:
//
//     S_A  = 1 - 1/2 sum p_n log2 p_n - 1/2 sum p'_n log2 p'_n,
//            p_n = x^n (1 - x), p'_n = (n+1) x^n (1 - x)^2, x = tanh^2 r,
//     S_AB = -sum P_nq log2 P_nq,  P_nq = w_nq (1 + a_nq^2) / 2,
//     I    = S_A + S_B - S_AB.
//
// Neighbouring blocks actually share basis states, so these are per-block
// approximations of the exact spectra; the density engine computes the exact
// (truncated) values for comparison.

#pragma once

#include <array>
#include <cstddef>

#include "horizon/kinematics.hpp"
#include "horizon/matrix.hpp"

namespace horizon {

struct BlockCoefficient {
  std::size_t n = 0;
  std::size_t q = 0;
  double a = 0.0;  // sqrt((n+1)(q+1)) / (cosh r_a cosh r_b)
  double w = 0.0;  // block weight
};

BlockCoefficient block_coefficient(std::size_t n, std::size_t q,
                                   const SqueezeParam& sq_a,
                                   const SqueezeParam& sq_b);

/// The 4x4 block rho_nq on [nq, n(q+1), (n+1)q, (n+1)(q+1)], unweighted.
Matrix block_matrix(std::size_t n, std::size_t q, const SqueezeParam& sq_a,
                    const SqueezeParam& sq_b);

/// {1/2, -a/2, a/2, a^2/2}, in that order.
std::array<double, 4> block_pt_eigenvalues(std::size_t n, std::size_t q,
                                           const SqueezeParam& sq_a,
                                           const SqueezeParam& sq_b);

/// 2 |lambda_-| of the (0, 0) block: 1 / (cosh r_a cosh r_b).
double e_n_paper(const SqueezeParam& sq_a, const SqueezeParam& sq_b);

/// Truncation of the infinite entropy series: either a fixed cutoff or a
/// tail tolerance from which the cutoff is derived.
class SeriesConfig {
 public:
  /// Throws InvalidArgument for n_max < 1 or n_max above kMaxSeriesCutoff.
  static SeriesConfig fixed(std::size_t n_max);
  /// Throws InvalidArgument unless 0 < tol < 1.
  static SeriesConfig tail(double tol);

  bool is_fixed() const { return fixed_; }
  std::size_t n_max() const { return n_max_; }
  double tail_tol() const { return tail_tol_; }

 private:
  bool fixed_ = true;
  std::size_t n_max_ = 1;
  double tail_tol_ = 0.0;
};

inline constexpr double kDefaultTailTolerance = 1e-10;
/// Hard limit on any series cutoff.
inline constexpr std::size_t kMaxSeriesCutoff = 10'000'000;

/// Explicit cutoff, or the smallest N >= 1 with x^(N+1) < tol and
/// (N+2) x^(N+1) < tol for x = max(tanh^2 r_a, tanh^2 r_b). Throws
/// ConvergenceError when that N exceeds kMaxSeriesCutoff.
std::size_t resolve_cutoff(const SqueezeParam& sq_a, const SqueezeParam& sq_b,
                           const SeriesConfig& cfg);

/// Marginal entropy S(rho_A) in bits, series over n <= N with N from
/// resolve_cutoff(sq, sq, cfg).
double s_a_closed(const SqueezeParam& sq, const SeriesConfig& cfg);

/// S(rho_B): the same series in Bob's squeezing.
inline double s_b_closed(const SqueezeParam& sq_b, const SeriesConfig& cfg) {
  return s_a_closed(sq_b, cfg);
}

/// Joint entropy S(rho_AB) in bits over n, q <= N.
double s_ab_closed(const SqueezeParam& sq_a, const SqueezeParam& sq_b,
                   const SeriesConfig& cfg);

/// S_A + S_B - S_AB, all three at the jointly resolved cutoff.
double mutual_info_closed(const SqueezeParam& sq_a, const SqueezeParam& sq_b,
                          const SeriesConfig& cfg);

struct ClosedFormMeasures {
  std::size_t n_max = 0;
  double e_n_block00 = 0.0;
  double s_a = 0.0;
  double s_b = 0.0;
  double s_ab = 0.0;
  double i = 0.0;
};

/// Every closed-form measure at one jointly resolved cutoff.
ClosedFormMeasures closed_form_measures(const SqueezeParam& sq_a,
                                        const SqueezeParam& sq_b,
                                        const SeriesConfig& cfg);

namespace detail {

/// Cutoffs up to this use term-by-term summation of S_AB.
inline constexpr std::size_t kDirectSumLimit = 512;

/// S_AB by summing all (N+1)^2 terms.
double s_ab_direct(const SqueezeParam& sq_a, const SqueezeParam& sq_b,
                   std::size_t n_max);

/// S_AB in O(N) per quadrature node.
///
/// log2 P_nq splits into parts linear in n and q plus ln(1 + w_nq) with
/// w = (1-x)(1-y)(n+1)(q+1). The linear parts reduce to moment sums. For the
/// rest, ln(1 + w) = int_R exp(-e^s) (1 - exp(-w e^s)) ds, under which the
/// q-sum is a finite geometric series in closed form; the s-integral is done
/// with the trapezoid rule, which converges geometrically for this analytic
/// integrand.
double s_ab_integral(const SqueezeParam& sq_a, const SqueezeParam& sq_b,
                     std::size_t n_max);

}  // namespace detail

}  // namespace horizon
