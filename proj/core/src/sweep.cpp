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

#include "horizon/sweep.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

#include "horizon/density.hpp"
#include "horizon/error.hpp"
#include "horizon/fock.hpp"

namespace horizon {

MethodSet parse_methods(const std::string& text) {
  MethodSet set{false, false};
  std::stringstream in(text);
  std::string item;
  bool any = false;
  while (std::getline(in, item, ',')) {
    bool* slot = nullptr;
    if (item == "closed") {
      slot = &set.closed;
    } else if (item == "numeric") {
      slot = &set.numeric;
    } else {
      throw InvalidArgument("unknown method '" + item +
                            "' (expected closed, numeric)");
    }
    if (*slot) throw InvalidArgument("method '" + item + "' repeated");
    *slot = true;
    any = true;
  }
  if (!any) throw InvalidArgument("no method selected");
  return set;
}

EntanglementReport run_point(const SqueezeParam& sq_a,
                             const SqueezeParam& sq_b,
                             const PointOptions& options) {
  if (!options.methods.closed && !options.methods.numeric) {
    throw InvalidArgument("no method selected");
  }
  EntanglementReport report;
  report.r_a = sq_a.r();
  report.r_b = sq_b.r();
  report.n_max_used = resolve_cutoff(sq_a, sq_b, options.cutoff);
  report.trace_deficit =
      pair_state_norm_deficit(sq_a, sq_b, report.n_max_used);

  if (options.methods.numeric && report.n_max_used > options.numeric_cap) {
    throw ConvergenceError(
        "numeric method needs cutoff " + std::to_string(report.n_max_used) +
        " but the memory cap is N_max <= " +
        std::to_string(options.numeric_cap));
  }

  if (options.methods.closed) {
    const ClosedFormMeasures m = closed_form_measures(
        sq_a, sq_b, SeriesConfig::fixed(report.n_max_used));
    report.e_n_block00 = m.e_n_block00;
    report.s_a_closed = m.s_a;
    report.s_b_closed = m.s_b;
    report.s_ab_closed = m.s_ab;
    report.i_closed = m.i;
  }

  if (options.methods.numeric) {
    const PureState state =
        entangled_pair_state(sq_a, sq_b, report.n_max_used);
    DensityMatrix rho_ab = reduced_density(state, {mode::kAOut, mode::kBOut});
    const DensityMatrix rho_a = partial_trace(rho_ab, {mode::kAOut});
    const DensityMatrix rho_b = partial_trace(rho_ab, {mode::kBOut});
    const double s_ab = vn_entropy(eig_symmetric(rho_ab.entries()));
    const double s_a = vn_entropy(eig_symmetric(rho_a.entries()));
    const double s_b = vn_entropy(eig_symmetric(rho_b.entries()));

    rho_ab *= 1.0 / rho_ab.trace();
    const NegativityReport neg = negativity_sum(
        eig_symmetric(partial_transpose(rho_ab, mode::kBOut).entries()));

    report.negativity_numeric_sum = neg.negative_sum;
    report.e_n_numeric = neg.paper_measure;
    report.s_a_num = s_a;
    report.s_b_num = s_b;
    report.s_ab_num = s_ab;
    report.i_num = s_a + s_b - s_ab;
  }
  return report;
}

EntanglementReport run_point(const ModeSpec& mode_a, double omega_b,
                             const PointOptions& options) {
  const ModeSpec mode_b(mode_a.mass(), omega_b);
  return run_point(squeezing_from_mode(mode_a), squeezing_from_mode(mode_b),
                   options);
}

void validate(const SweepConfig& cfg) {
  if (!std::isfinite(cfg.r_min) || !std::isfinite(cfg.r_max) ||
      cfg.r_min < 0.0 || !(cfg.r_min < cfg.r_max)) {
    throw InvalidArgument("sweep needs 0 <= r_min < r_max");
  }
  if (cfg.steps < 2) {
    throw InvalidArgument("sweep needs at least 2 steps");
  }
  if (!std::isfinite(cfg.omega_ratio) || !(cfg.omega_ratio > 0.0)) {
    throw InvalidArgument("omega ratio must be positive");
  }
  if (!cfg.methods.closed && !cfg.methods.numeric) {
    throw InvalidArgument("no method selected");
  }
  if (cfg.threads == 0) {
    throw InvalidArgument("threads must be >= 1");
  }
}

std::vector<double> sweep_grid(const SweepConfig& cfg) {
  validate(cfg);
  std::vector<double> grid(cfg.steps);
  const double span = cfg.r_max - cfg.r_min;
  const double denom = static_cast<double>(cfg.steps - 1);
  for (std::size_t k = 0; k < cfg.steps; ++k) {
    grid[k] = cfg.r_min + static_cast<double>(k) * span / denom;
  }
  grid.back() = cfg.r_max;
  return grid;
}

SweepPointError::SweepPointError(double r, const std::string& what)
    : ConvergenceError("sweep failed at r = " + describe(r) + ": " +
                       what),
      r_(r) {}

SweepResult run_sweep(const SweepConfig& cfg) {
  const std::vector<double> grid = sweep_grid(cfg);
  const std::size_t count = grid.size();

  std::vector<EntanglementReport> rows(count);
  std::vector<std::string> skipped(count);
  std::vector<std::exception_ptr> errors(count);

  const auto evaluate = [&](std::size_t k) {
    try {
      const SqueezeParam sq_a = make_squeeze(grid[k]);
      const SqueezeParam sq_b = partner_squeezing(sq_a, cfg.omega_ratio);
      PointOptions options{cfg.cutoff, cfg.methods, cfg.numeric_cap};
      if (options.methods.numeric) {
        const std::size_t n = resolve_cutoff(sq_a, sq_b, cfg.cutoff);
        if (n > cfg.numeric_cap) {
          options.methods.numeric = false;
          skipped[k] = "r = " + describe(grid[k]) +
                       ": numeric method skipped, cutoff " + std::to_string(n) +
                       " exceeds cap " + std::to_string(cfg.numeric_cap);
          if (!options.methods.closed) {
            rows[k].r_a = sq_a.r();
            rows[k].r_b = sq_b.r();
            rows[k].n_max_used = n;
            rows[k].trace_deficit = pair_state_norm_deficit(sq_a, sq_b, n);
            return;
          }
        }
      }
      rows[k] = run_point(sq_a, sq_b, options);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  };

  if (cfg.threads <= 1 || count == 1) {
    for (std::size_t k = 0; k < count; ++k) evaluate(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    const unsigned n_workers =
        static_cast<unsigned>(std::min<std::size_t>(cfg.threads, count));
    for (unsigned w = 0; w < n_workers; ++w) {
      workers.emplace_back([&] {
        for (std::size_t k = next++; k < count; k = next++) evaluate(k);
      });
    }
  }

  for (std::size_t k = 0; k < count; ++k) {
    if (!errors[k]) continue;
    try {
      std::rethrow_exception(errors[k]);
    } catch (const std::exception& e) {
      throw SweepPointError(grid[k], e.what());
    }
  }

  SweepResult result;
  result.rows = std::move(rows);
  for (auto& note : skipped) {
    if (!note.empty()) result.notes.push_back(std::move(note));
  }
  return result;
}

SweepConfig fig2_preset() {
  SweepConfig cfg;
  cfg.r_min = 0.0;
  cfg.r_max = 6.0;
  cfg.steps = 121;
  cfg.cutoff = SeriesConfig::tail(kDefaultTailTolerance);
  cfg.methods = {true, true};
  return cfg;
}

SweepConfig fig3_preset() {
  // Fixed truncation: the numeric oracle runs at every grid point, and the
  // joint entropy shows its interior maximum. Pass a tail tolerance for the
  // tail-converged curve.
  SweepConfig cfg = fig2_preset();
  cfg.cutoff = SeriesConfig::fixed(10);
  return cfg;
}

ComparisonReport compare_closed_vs_numeric(const EntanglementReport& report,
                                           double warn_threshold) {
  if (!report.has_closed() || !report.has_numeric()) {
    throw InvalidArgument(
        "comparison needs both closed-form and numeric results");
  }
  ComparisonReport cmp;
  cmp.r_a = report.r_a;
  cmp.r_b = report.r_b;
  cmp.n_max = report.n_max_used;
  cmp.diff_e_n = std::abs(*report.e_n_block00 - *report.e_n_numeric);
  cmp.diff_s_a = std::abs(*report.s_a_closed - *report.s_a_num);
  cmp.diff_s_b = std::abs(*report.s_b_closed - *report.s_b_num);
  cmp.diff_s_ab = std::abs(*report.s_ab_closed - *report.s_ab_num);
  cmp.diff_i = std::abs(*report.i_closed - *report.i_num);
  const std::pair<const char*, double> measures[] = {
      {"e_n", cmp.diff_e_n},   {"s_a", cmp.diff_s_a}, {"s_b", cmp.diff_s_b},
      {"s_ab", cmp.diff_s_ab}, {"i", cmp.diff_i}};
  for (const auto& [name, diff] : measures) {
    if (diff > warn_threshold) cmp.flagged.emplace_back(name);
  }
  return cmp;
}

}  // namespace horizon
