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

// horizon-ent: entanglement of a Kruskal Bell pair outside a Schwarzschild
// horizon, as closed-form series and as a truncated Fock-space computation.
//
// Exit codes: 0 success, 2 invalid arguments, 3 convergence or cutoff
// failure, 4 I/O failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "horizon/error.hpp"
#include "horizon/kinematics.hpp"
#include "horizon/report_io.hpp"
#include "horizon/sweep.hpp"

namespace {

using namespace horizon;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitIo = 4;

struct OutputOptions {
  std::string out;
  std::string format = "csv";
};

struct CutoffOptions {
  std::optional<std::size_t> nmax;
  std::optional<double> tail_tol;
  std::optional<std::string> methods;
  std::size_t numeric_cap = kDefaultNumericCap;
};

void add_output_options(CLI::App& cmd, OutputOptions& o) {
  cmd.add_option("--out", o.out, "Output path (default: stdout)");
  cmd.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
}

void add_cutoff_options(CLI::App& cmd, CutoffOptions& c) {
  auto* nmax = cmd.add_option("--nmax", c.nmax, "Fixed series/Fock cutoff");
  auto* tol =
      cmd.add_option("--tail-tol", c.tail_tol, "Tail tolerance for the cutoff");
  nmax->excludes(tol);
  cmd.add_option("--methods", c.methods,
                 "closed, numeric or closed,numeric (default both)");
  cmd.add_option("--numeric-cap", c.numeric_cap,
                 "Largest cutoff the numeric method accepts");
}

SeriesConfig cutoff_from(const CutoffOptions& c, SeriesConfig fallback) {
  if (c.nmax) return SeriesConfig::fixed(*c.nmax);
  if (c.tail_tol) return SeriesConfig::tail(*c.tail_tol);
  return fallback;
}

MethodSet methods_from(const CutoffOptions& c) {
  return c.methods ? parse_methods(*c.methods) : MethodSet{true, true};
}

template <typename Row>
void write_rows(const std::vector<Row>& rows, const OutputOptions& o) {
  const auto emit = [&](std::ostream& out) {
    if (o.format == "json") {
      write_json(std::span<const Row>(rows), out);
    } else {
      write_csv(std::span<const Row>(rows), out);
    }
  };
  if (o.out.empty()) {
    emit(std::cout);
    std::cout.flush();
    if (!std::cout) throw IoError("write to stdout failed");
    return;
  }
  std::ofstream file(o.out, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + o.out + "' for writing");
  emit(file);
  file.flush();
  if (!file) throw IoError("write to '" + o.out + "' failed");
}

struct PointInput {
  std::optional<double> r;
  std::optional<double> mass;
  std::optional<double> omega;
  std::optional<double> omega_prime;
  double omega_ratio = 1.0;
};

void add_point_input(CLI::App& cmd, PointInput& p) {
  auto* r = cmd.add_option("--r", p.r, "Squeezing parameter r >= 0");
  auto* mass = cmd.add_option("--mass", p.mass, "Black-hole mass M");
  auto* omega = cmd.add_option("--omega", p.omega, "Alice's mode frequency");
  auto* omega_prime =
      cmd.add_option("--omega-prime", p.omega_prime, "Bob's mode frequency");
  auto* ratio = cmd.add_option("--omega-ratio", p.omega_ratio,
                               "omega'/omega for Bob's mode (default 1)");
  r->excludes(mass)->excludes(omega)->excludes(omega_prime);
  mass->needs(omega);
  omega->needs(mass);
  omega_prime->needs(mass)->excludes(ratio);
}

std::pair<SqueezeParam, SqueezeParam> squeezing_from(const PointInput& p) {
  if (p.r) {
    const SqueezeParam sq_a = make_squeeze(*p.r);
    return {sq_a, partner_squeezing(sq_a, p.omega_ratio)};
  }
  if (!p.mass) {
    throw InvalidArgument("give either --r or --mass with --omega");
  }
  const ModeSpec mode_a(*p.mass, *p.omega);
  const double omega_b = p.omega_prime ? *p.omega_prime
                                       : p.omega_ratio * mode_a.omega();
  const ModeSpec mode_b(mode_a.mass(), omega_b);
  return {squeezing_from_mode(mode_a), squeezing_from_mode(mode_b)};
}

// A single point; without an explicit --methods the numeric method steps
// aside (with a note) when the cutoff is over the cap, as sweeps do.
EntanglementReport evaluate_point(const PointInput& input,
                                  const CutoffOptions& c) {
  const auto [sq_a, sq_b] = squeezing_from(input);
  PointOptions options{cutoff_from(c, SeriesConfig::tail(kDefaultTailTolerance)),
                       methods_from(c), c.numeric_cap};
  if (!c.methods) {
    const std::size_t n = resolve_cutoff(sq_a, sq_b, options.cutoff);
    if (n > options.numeric_cap) {
      std::cerr << "note: numeric method skipped, cutoff " << n
                << " exceeds cap " << options.numeric_cap << '\n';
      options.methods.numeric = false;
    }
  }
  return run_point(sq_a, sq_b, options);
}

void print_notes(const SweepResult& result) {
  for (const auto& note : result.notes) std::cerr << "note: " << note << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement degradation of a Bell pair by Hawking radiation"};
  app.require_subcommand(1);

  // point
  PointInput point_in;
  CutoffOptions point_cut;
  OutputOptions point_out;
  auto* point = app.add_subcommand("point", "Evaluate one parameter point");
  add_point_input(*point, point_in);
  add_cutoff_options(*point, point_cut);
  add_output_options(*point, point_out);

  // sweep
  SweepConfig sweep_cfg;
  CutoffOptions sweep_cut;
  OutputOptions sweep_out;
  auto* sweep = app.add_subcommand("sweep", "Uniform sweep over r");
  sweep->add_option("--r-min", sweep_cfg.r_min, "First grid point")->required();
  sweep->add_option("--r-max", sweep_cfg.r_max, "Last grid point")->required();
  sweep->add_option("--steps", sweep_cfg.steps, "Grid points (>= 2)")
      ->required();
  sweep->add_option("--omega-ratio", sweep_cfg.omega_ratio,
                    "omega'/omega for Bob's mode (default 1)");
  sweep->add_option("--threads", sweep_cfg.threads, "Worker threads");
  add_cutoff_options(*sweep, sweep_cut);
  add_output_options(*sweep, sweep_out);

  // fig2 / fig3 presets
  CutoffOptions fig2_cut, fig3_cut;
  OutputOptions fig2_out, fig3_out;
  unsigned fig2_threads = 1, fig3_threads = 1;
  auto* fig2 = app.add_subcommand(
      "fig2", "Preset: negativity over r in [0, 6], 121 points, tail tol 1e-10");
  add_cutoff_options(*fig2, fig2_cut);
  add_output_options(*fig2, fig2_out);
  fig2->add_option("--threads", fig2_threads, "Worker threads");
  auto* fig3 = app.add_subcommand(
      "fig3",
      "Preset: entropies over r in [0, 6], 121 points, fixed cutoff 10");
  add_cutoff_options(*fig3, fig3_cut);
  add_output_options(*fig3, fig3_out);
  fig3->add_option("--threads", fig3_threads, "Worker threads");

  // compare
  PointInput cmp_in;
  CutoffOptions cmp_cut;
  OutputOptions cmp_out;
  double warn = kDefaultCompareWarning;
  auto* compare = app.add_subcommand(
      "compare", "Closed-form vs numeric differences at one point");
  add_point_input(*compare, cmp_in);
  compare->add_option("--nmax", cmp_cut.nmax, "Fixed cutoff")->required();
  compare->add_option("--numeric-cap", cmp_cut.numeric_cap,
                      "Largest cutoff the numeric method accepts");
  compare->add_option("--warn", warn,
                      "Flag differences above this (default 1e-2)");
  add_output_options(*compare, cmp_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*point) {
      const std::vector<EntanglementReport> rows{
          evaluate_point(point_in, point_cut)};
      write_rows(rows, point_out);
    } else if (*sweep) {
      sweep_cfg.cutoff =
          cutoff_from(sweep_cut, SeriesConfig::tail(kDefaultTailTolerance));
      sweep_cfg.methods = methods_from(sweep_cut);
      sweep_cfg.numeric_cap = sweep_cut.numeric_cap;
      const SweepResult result = run_sweep(sweep_cfg);
      print_notes(result);
      write_rows(result.rows, sweep_out);
    } else if (*fig2 || *fig3) {
      const bool is2 = static_cast<bool>(*fig2);
      const CutoffOptions& c = is2 ? fig2_cut : fig3_cut;
      SweepConfig cfg = is2 ? fig2_preset() : fig3_preset();
      cfg.cutoff = cutoff_from(c, cfg.cutoff);
      cfg.methods = methods_from(c);
      cfg.numeric_cap = c.numeric_cap;
      cfg.threads = is2 ? fig2_threads : fig3_threads;
      const SweepResult result = run_sweep(cfg);
      print_notes(result);
      write_rows(result.rows, is2 ? fig2_out : fig3_out);
    } else if (*compare) {
      const auto [sq_a, sq_b] = squeezing_from(cmp_in);
      const PointOptions options{SeriesConfig::fixed(*cmp_cut.nmax),
                                 MethodSet{true, true}, cmp_cut.numeric_cap};
      const std::vector<ComparisonReport> rows{
          compare_closed_vs_numeric(run_point(sq_a, sq_b, options), warn)};
      for (const auto& name : rows.front().flagged) {
        std::cerr << "warning: " << name << " differs by more than " << warn
                  << '\n';
      }
      write_rows(rows, cmp_out);
    }
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConvergence;
  } catch (const NonPhysicalState& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConvergence;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}
