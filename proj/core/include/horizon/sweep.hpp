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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "horizon/closed_form.hpp"
#include "horizon/error.hpp"
#include "horizon/kinematics.hpp"

namespace horizon {

struct MethodSet {
  bool closed = true;
  bool numeric = true;
};

/// Parses "closed", "numeric" or "closed,numeric" (any order, no repeats).
MethodSet parse_methods(const std::string& text);

/// Largest cutoff the numeric pipeline accepts; (N+1)^4 amplitudes.
inline constexpr std::size_t kDefaultNumericCap = 14;

/// One parameter point. Fields of a method family that was not run are empty.
struct EntanglementReport {
  double r_a = 0.0;
  double r_b = 0.0;
  std::size_t n_max_used = 0;
  std::optional<double> e_n_block00;
  std::optional<double> negativity_numeric_sum;
  std::optional<double> e_n_numeric;
  std::optional<double> s_a_closed;
  std::optional<double> s_b_closed;
  std::optional<double> s_ab_closed;
  std::optional<double> i_closed;
  std::optional<double> s_a_num;
  std::optional<double> s_b_num;
  std::optional<double> s_ab_num;
  std::optional<double> i_num;
  /// 1 - ||psi||^2 of the truncated pair state at n_max_used.
  double trace_deficit = 0.0;

  bool has_closed() const { return s_ab_closed.has_value(); }
  bool has_numeric() const { return s_ab_num.has_value(); }
};

struct PointOptions {
  SeriesConfig cutoff = SeriesConfig::tail(kDefaultTailTolerance);
  MethodSet methods;
  std::size_t numeric_cap = kDefaultNumericCap;
};

/// Evaluates the requested methods at (r_a, r_b).
///
/// The numeric pipeline runs on the entangled pair state truncated at the
/// resolved cutoff; its negativity is taken from the trace-normalized
/// exterior density. Throws ConvergenceError when the numeric method is
/// requested and the resolved cutoff exceeds `numeric_cap`.
EntanglementReport run_point(const SqueezeParam& sq_a,
                             const SqueezeParam& sq_b,
                             const PointOptions& options);

/// Same, from a black-hole mass and the two mode frequencies.
EntanglementReport run_point(const ModeSpec& mode_a, double omega_b,
                             const PointOptions& options);

struct SweepConfig {
  double r_min = 0.0;
  double r_max = 6.0;
  std::size_t steps = 121;
  /// omega' / omega; Bob's squeezing follows from the same mass.
  double omega_ratio = 1.0;
  SeriesConfig cutoff = SeriesConfig::tail(kDefaultTailTolerance);
  MethodSet methods;
  std::size_t numeric_cap = kDefaultNumericCap;
  /// Worker threads for point evaluation; output order is fixed regardless.
  unsigned threads = 1;
};

/// Throws InvalidArgument unless 0 <= r_min < r_max, steps >= 2 and the
/// other fields are in range.
void validate(const SweepConfig& cfg);

/// r_min + k (r_max - r_min) / (steps - 1) for k = 0..steps-1, with the last
/// point pinned to r_max.
std::vector<double> sweep_grid(const SweepConfig& cfg);

struct SweepResult {
  std::vector<EntanglementReport> rows;
  /// Human-readable notes, e.g. points where the numeric method was skipped.
  std::vector<std::string> notes;
};

/// Per-point failure inside a sweep; carries the offending r.
class SweepPointError : public ConvergenceError {
 public:
  SweepPointError(double r, const std::string& what);
  double r() const { return r_; }

 private:
  double r_;
};

/// Evaluates every grid point. Points whose cutoff exceeds the numeric cap
/// run closed-form only and are listed in `notes`. Any other per-point error
/// aborts the sweep with a SweepPointError for the smallest failing r.
SweepResult run_sweep(const SweepConfig& cfg);

/// Preset grids: r in [0, 6], 121 points.
SweepConfig fig2_preset();
SweepConfig fig3_preset();

inline constexpr double kDefaultCompareWarning = 1e-2;

struct ComparisonReport {
  double r_a = 0.0;
  double r_b = 0.0;
  std::size_t n_max = 0;
  double diff_e_n = 0.0;   // |e_n_block00 - e_n_numeric|
  double diff_s_a = 0.0;
  double diff_s_b = 0.0;
  double diff_s_ab = 0.0;
  double diff_i = 0.0;
  /// Names of measures whose difference exceeds the warning threshold.
  std::vector<std::string> flagged;
};

/// Closed-form minus numeric, absolute. Throws InvalidArgument when either
/// method family is missing from the report.
ComparisonReport compare_closed_vs_numeric(
    const EntanglementReport& report,
    double warn_threshold = kDefaultCompareWarning);

}  // namespace horizon
