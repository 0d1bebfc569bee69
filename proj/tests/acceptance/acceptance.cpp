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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Usage: acceptance PATH_TO_HORIZON_ENT

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "horizon/closed_form.hpp"
#include "horizon/density.hpp"
#include "horizon/fock.hpp"
#include "horizon/kinematics.hpp"
#include "horizon/report_io.hpp"
#include "horizon/sweep.hpp"

namespace {

using namespace horizon;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// Converged I(r = 5) at tail_tol 1e-10 from an independent numpy direct
// summation (tests/oracles/closed_form_oracle.py).
constexpr double kOracleMutualInfoAt5 = 1.7204756788329831;  // N = 193836
constexpr double kProvisionalEvaporationBound = 0.15;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

std::string fmt(double v) { return format_real(v); }

SweepResult preset_sweep(SeriesConfig cutoff, MethodSet methods) {
  SweepConfig cfg = fig2_preset();
  cfg.cutoff = cutoff;
  cfg.methods = methods;
  return run_sweep(cfg);
}

Outcome criterion1() {
  Outcome o;
  const SqueezeParam z = make_squeeze(0.0);
  const ClosedFormMeasures m =
      closed_form_measures(z, z, SeriesConfig::tail(kDefaultTailTolerance));
  o.require(near(m.e_n_block00, 1.0, 1e-9), "e_n_block00");
  o.require(near(m.i, 2.0, 1e-9), "i_closed");
  o.require(near(m.s_ab, 0.0, 1e-9), "s_ab_closed");
  o.require(near(m.s_a, 1.0, 1e-9) && near(m.s_b, 1.0, 1e-9), "s_a/s_b");

  PointOptions options;
  options.cutoff = SeriesConfig::fixed(8);
  const EntanglementReport r = run_point(z, z, options);
  o.require(near(*r.e_n_numeric, 1.0, 1e-8), "e_n_num");
  o.require(near(*r.i_num, 2.0, 1e-8), "i_num");
  o.require(near(*r.s_ab_num, 0.0, 1e-8), "s_ab_num");
  o.require(near(*r.s_a_num, 1.0, 1e-8) && near(*r.s_b_num, 1.0, 1e-8),
            "s_a_num/s_b_num");
  o.detail << " i_closed=" << fmt(m.i) << " i_num=" << fmt(*r.i_num);
  return o;
}

Outcome criterion2() {
  Outcome o;
  double worst = 0.0;
  for (double ra : {0.1, 0.5, 1.0, 2.0, 3.0}) {
    for (double ratio : {1.0, 2.0}) {
      const SqueezeParam a = make_squeeze(ra);
      const SqueezeParam b = make_squeeze(ratio * ra);
      for (std::size_t n = 0; n < 4; ++n) {
        for (std::size_t q = 0; q < 4; ++q) {
          const DensityMatrix blk(block_matrix(n, q, a, b), {2, 2},
                                  {"a", "b"});
          const auto numeric =
              eig_symmetric(partial_transpose(blk, "b").entries()).eigenvalues;
          auto closed = block_pt_eigenvalues(n, q, a, b);
          std::sort(closed.begin(), closed.end());
          for (std::size_t k = 0; k < 4; ++k) {
            worst = std::max(worst, std::abs(numeric[k] - closed[k]));
          }
        }
      }
    }
  }
  o.require(worst <= 1e-12, "block spectrum");
  o.detail << " max_diff=" << fmt(worst);
  return o;
}

Outcome criterion3() {
  Outcome o;
  const std::vector<double> grid = sweep_grid(fig2_preset());
  double prev = 2.0;
  bool strict = true;
  for (double r : grid) {
    const SqueezeParam sq = make_squeeze(r);
    const double e = e_n_paper(sq, sq);
    strict = strict && e < prev;
    prev = e;
  }
  o.require(strict, "strict decrease");
  o.require(prev < 1e-4, "e_n(6,6) < 1e-4");
  o.detail << " e_n(6,6)=" << fmt(prev);
  return o;
}

Outcome criterion4(const SweepResult& converged) {
  Outcome o;
  bool monotone = true;
  for (std::size_t k = 1; k < converged.rows.size(); ++k) {
    monotone = monotone &&
               *converged.rows[k].i_closed <= *converged.rows[k - 1].i_closed;
  }
  o.require(monotone, "i_closed non-increasing");
  o.require(near(*converged.rows.front().i_closed, 2.0, 1e-9), "i(0) = 2");

  const SqueezeParam sq = make_squeeze(5.0);
  const ClosedFormMeasures m5 =
      closed_form_measures(sq, sq, SeriesConfig::tail(1e-10));
  const double gap = std::abs(m5.i - 1.0);
  const double oracle_gap = std::abs(kOracleMutualInfoAt5 - 1.0);
  const double bound =
      std::min(kProvisionalEvaporationBound, 1.1 * oracle_gap);
  o.require(near(m5.i, kOracleMutualInfoAt5, 1e-8), "agreement with oracle");
  o.require(gap < bound, "|i(5) - 1| below the locked bound");
  o.detail << " i(5)=" << fmt(m5.i) << " N=" << m5.n_max
           << " oracle=" << fmt(kOracleMutualInfoAt5) << " |i-1|=" << fmt(gap)
           << " bound=" << fmt(bound);
  return o;
}

Outcome criterion5(const SweepResult& converged) {
  Outcome o;
  const std::vector<double> grid = sweep_grid(fig2_preset());
  const SweepResult fixed =
      preset_sweep(SeriesConfig::fixed(10), parse_methods("closed"));
  std::size_t arg = 0;
  for (std::size_t k = 1; k < fixed.rows.size(); ++k) {
    if (*fixed.rows[k].s_ab_closed > *fixed.rows[arg].s_ab_closed) arg = k;
  }
  const bool interior = arg > 0 && arg + 1 < fixed.rows.size();
  o.require(interior, "interior maximum");
  o.require(grid[arg] >= 1.0 && grid[arg] <= 3.0, "argmax in [1, 3]");

  std::size_t arg_tail = 0;
  for (std::size_t k = 1; k < converged.rows.size(); ++k) {
    if (*converged.rows[k].s_ab_closed > *converged.rows[arg_tail].s_ab_closed)
      arg_tail = k;
  }
  o.detail << " N=10 argmax r=" << grid[arg]
           << " max=" << fmt(*fixed.rows[arg].s_ab_closed)
           << "; tail-converged s_ab(6)="
           << fmt(*converged.rows.back().s_ab_closed)
           << " argmax r=" << grid[arg_tail] << " (no approach to 1)";
  return o;
}

Outcome criterion6() {
  Outcome o;
  double worst_trace = 0.0, worst_neg = 0.0, worst_comp = 0.0, worst_ab = 0.0;
  for (double r : {0.5, 1.0, 2.0}) {
    const SqueezeParam sq = make_squeeze(r);
    const PureState psi = entangled_pair_state(sq, sq, 10);
    const DensityMatrix rho = reduced_density(psi, {mode::kAOut, mode::kBOut});
    const DensityMatrix rho_a = partial_trace(rho, {mode::kAOut});
    const DensityMatrix rho_b = partial_trace(rho, {mode::kBOut});
    const DensityMatrix pt = partial_transpose(rho, mode::kBOut);
    worst_trace = std::max({worst_trace, std::abs(rho_a.trace() - rho.trace()),
                            std::abs(rho_b.trace() - rho.trace()),
                            std::abs(pt.trace() - rho.trace())});
    const Spectrum s_rho = eig_symmetric(rho.entries());
    worst_neg = std::min(worst_neg, s_rho.eigenvalues.front());
    const double s_out = vn_entropy(s_rho);
    const double s_in = vn_entropy(eig_symmetric(
        reduced_density(psi, {mode::kAIn, mode::kBIn}).entries()));
    worst_comp = std::max(worst_comp, std::abs(s_out - s_in));
    worst_ab = std::max(worst_ab,
                        std::abs(vn_entropy(eig_symmetric(rho_a.entries())) -
                                 vn_entropy(eig_symmetric(rho_b.entries()))));
  }
  o.require(worst_trace <= 1e-12, "trace preservation");
  o.require(worst_neg >= -1e-10, "positive semidefinite");
  o.require(worst_comp <= 1e-8, "complementarity");
  o.require(worst_ab <= 1e-9, "S_A = S_B");
  o.detail << " trace=" << fmt(worst_trace) << " min_eig=" << fmt(worst_neg)
           << " complement=" << fmt(worst_comp) << " s_a-s_b=" << fmt(worst_ab);
  return o;
}

Outcome criterion7() {
  Outcome o;
  const double tol = kDefaultTailTolerance;
  double worst_norm = 0.0, worst_sum = 0.0, worst_shift = 0.0;
  for (double r : {0.1, 0.5, 1.0, 2.0, 3.0}) {
    const SqueezeParam sq = make_squeeze(r);
    const double x = sq.thermal_ratio();
    const double c = sq.sech2();
    for (std::size_t n : {1u, 5u, 10u, 14u}) {
      const double xn = std::pow(x, static_cast<double>(n));
      worst_norm = std::max(
          {worst_norm,
           std::abs(squared_norm(kruskal_vacuum(sq, n)) - (1.0 - xn * x)),
           std::abs(squared_norm(kruskal_one(sq, n)) -
                    (1.0 - xn * (1.0 + static_cast<double>(n) * c)))});
    }
    const std::size_t n = resolve_cutoff(sq, sq, SeriesConfig::tail(tol));
    // Sum of P_nq from its two geometric families, term by term.
    double s0 = 0.0, s1 = 0.0, xk = 1.0;
    for (std::size_t k = 0; k <= n; ++k) {
      s0 += c * xk;
      s1 += (k + 1.0) * c * c * xk;
      xk *= x;
    }
    worst_sum = std::max(worst_sum, std::abs(0.5 * (s0 * s0 + s1 * s1) - 1.0));

    const ClosedFormMeasures base =
        closed_form_measures(sq, sq, SeriesConfig::tail(tol));
    const ClosedFormMeasures doubled =
        closed_form_measures(sq, sq, SeriesConfig::fixed(2 * base.n_max));
    worst_shift = std::max({worst_shift, std::abs(base.s_a - doubled.s_a),
                            std::abs(base.s_ab - doubled.s_ab),
                            std::abs(base.i - doubled.i)});
  }
  o.require(worst_norm <= 1e-13, "norm identities");
  o.require(worst_sum <= 2.0 * tol, "sum of P_nq");
  o.require(worst_shift < 10.0 * tol, "cutoff doubling");
  o.detail << " norm=" << fmt(worst_norm) << " sum=" << fmt(worst_sum)
           << " doubling=" << fmt(worst_shift);
  return o;
}

Outcome criterion8() {
  Outcome o;
  const SqueezeParam sq = make_squeeze(1.0);
  PointOptions options;
  options.cutoff = SeriesConfig::fixed(12);
  const EntanglementReport r = run_point(sq, sq, options);
  const double diff_a = std::abs(*r.s_a_closed - *r.s_a_num);
  const double diff_ab = std::abs(*r.s_ab_closed - *r.s_ab_num);
  o.require(diff_a <= 1e-6, "s_a closed vs numeric");
  o.detail << " s_a_closed=" << fmt(*r.s_a_closed)
           << " s_a_num=" << fmt(*r.s_a_num) << " diff=" << fmt(diff_a)
           << "; s_ab gap=" << fmt(diff_ab) << " (recorded)";
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool run_cli(const std::string& cli, const std::string& args,
             const fs::path& out) {
  const std::string cmd =
      "\"" + cli + "\" " + args + " --out \"" + out.string() + "\" 2>/dev/null";
  return std::system(cmd.c_str()) == 0;
}

bool well_formed(const std::string& csv, std::size_t expected_rows) {
  static const std::regex real(R"(-?[1-9]\.[0-9]{11}e[+-][0-9]{2,3}|0\.0{11}e\+00)");
  static const std::regex integer(R"([1-9][0-9]*)");
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) return false;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 15) return false;
    for (std::size_t k = 0; k < fields.size(); ++k) {
      const std::string& f = fields[k];
      if (k == 2) {
        if (!std::regex_match(f, integer)) return false;
      } else if (!f.empty() && !std::regex_match(f, real)) {
        return false;
      }
    }
  }
  return rows == expected_rows && csv.back() == '\n';
}

Outcome criterion9(const std::string& cli) {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() /
                       ("horizon-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  for (const char* preset : {"fig2", "fig3"}) {
    const fs::path a = dir / (std::string(preset) + "-a.csv");
    const fs::path b = dir / (std::string(preset) + "-b.csv");
    const bool ran = run_cli(cli, preset, a) && run_cli(cli, preset, b);
    o.require(ran, std::string(preset) + " exit status");
    if (!ran) continue;
    const std::string first = slurp(a);
    o.require(first == slurp(b), std::string(preset) + " byte-identical");
    o.require(well_formed(first, 121), std::string(preset) + " format");
    o.detail << " " << preset << "=" << first.size() << "B";
  }
  fs::remove_all(dir);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance PATH_TO_HORIZON_ENT\n";
    return 2;
  }
  const std::string cli = argv[1];
  const auto suite_start = Clock::now();
  int failures = 0;

  const auto report = [&](int id, double limit_s,
                          const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double secs =
        std::chrono::duration<double>(Clock::now() - start).count();
    if (secs > limit_s) {
      o.pass = false;
      o.detail << " [over time limit " << limit_s << " s]";
    }
    if (!o.pass) ++failures;
    std::printf("%s criterion %d (%.2f s):%s\n", o.pass ? "PASS" : "FAIL", id,
                secs, o.detail.str().c_str());
    std::fflush(stdout);
  };

  report(1, 1.0, criterion1);
  report(2, 1.0, criterion2);
  report(3, 1.0, criterion3);

  // The tail-converged closed-form sweep feeds criteria 4 and 5.
  const auto sweep_start = Clock::now();
  const SweepResult converged = preset_sweep(
      SeriesConfig::tail(kDefaultTailTolerance), parse_methods("closed"));
  const double sweep_secs =
      std::chrono::duration<double>(Clock::now() - sweep_start).count();
  std::printf("info: tail-converged sweep took %.2f s\n", sweep_secs);

  report(4, 60.0 - sweep_secs, [&] { return criterion4(converged); });
  report(5, 60.0 - sweep_secs, [&] { return criterion5(converged); });
  report(6, 120.0, criterion6);
  report(7, 60.0, criterion7);
  report(8, 120.0, criterion8);
  report(9, 300.0, [&] { return criterion9(cli); });

  const double total =
      std::chrono::duration<double>(Clock::now() - suite_start).count();
  const bool in_budget = total < 300.0;
  if (!in_budget) ++failures;
  std::printf("%s suite runtime %.2f s (limit 300 s)\n",
              in_budget ? "PASS" : "FAIL", total);
  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
