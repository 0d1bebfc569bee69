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

#include "horizon/report_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>

#include "json.hpp"

#include "horizon/error.hpp"

namespace horizon {
namespace {

using json = nlohmann::json;

std::string format_optional(const std::optional<double>& value) {
  return value ? format_real(*value) : std::string{};
}

// The value actually written to CSV, so JSON and CSV agree exactly.
json json_real(double value) {
  const std::string text = format_real(value);
  double parsed = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), parsed);
  return parsed;
}

json json_optional(const std::optional<double>& value) {
  return value ? json_real(*value) : json(nullptr);
}

template <typename Writer>
void write_file(const std::filesystem::path& path, Writer&& writer) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  writer(out);
  out.flush();
  if (!out) {
    throw IoError("write to '" + path.string() + "' failed");
  }
}

}  // namespace

std::string format_real(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of negative zero
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(),
                                       value, std::chars_format::scientific, 11);
  if (ec != std::errc{}) {
    throw InvalidArgument("cannot format value");
  }
  return std::string(buf.data(), end);
}

void write_csv(std::span<const EntanglementReport> rows, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << format_real(r.r_a) << ',' << format_real(r.r_b) << ','
        << r.n_max_used << ',' << format_optional(r.e_n_block00) << ','
        << format_optional(r.negativity_numeric_sum) << ','
        << format_optional(r.e_n_numeric) << ','
        << format_optional(r.s_a_closed) << ','
        << format_optional(r.s_b_closed) << ','
        << format_optional(r.s_ab_closed) << ','
        << format_optional(r.i_closed) << ',' << format_optional(r.s_a_num)
        << ',' << format_optional(r.s_b_num) << ','
        << format_optional(r.s_ab_num) << ',' << format_optional(r.i_num)
        << ',' << format_real(r.trace_deficit) << '\n';
  }
}

void write_json(std::span<const EntanglementReport> rows, std::ostream& out) {
  json arr = json::array();
  for (const auto& r : rows) {
    json row = json::object();
    row["r_a"] = json_real(r.r_a);
    row["r_b"] = json_real(r.r_b);
    row["n_max"] = r.n_max_used;
    row["e_n_block00"] = json_optional(r.e_n_block00);
    row["neg_sum_num"] = json_optional(r.negativity_numeric_sum);
    row["e_n_num"] = json_optional(r.e_n_numeric);
    row["s_a_closed"] = json_optional(r.s_a_closed);
    row["s_b_closed"] = json_optional(r.s_b_closed);
    row["s_ab_closed"] = json_optional(r.s_ab_closed);
    row["i_closed"] = json_optional(r.i_closed);
    row["s_a_num"] = json_optional(r.s_a_num);
    row["s_b_num"] = json_optional(r.s_b_num);
    row["s_ab_num"] = json_optional(r.s_ab_num);
    row["i_num"] = json_optional(r.i_num);
    row["trace_deficit"] = json_real(r.trace_deficit);
    arr.push_back(std::move(row));
  }
  out << arr.dump(2) << '\n';
}

void write_csv(std::span<const ComparisonReport> rows, std::ostream& out) {
  out << kCompareCsvHeader << '\n';
  for (const auto& c : rows) {
    std::string flags;
    for (const auto& f : c.flagged) {
      if (!flags.empty()) flags += ';';
      flags += f;
    }
    out << format_real(c.r_a) << ',' << format_real(c.r_b) << ',' << c.n_max
        << ',' << format_real(c.diff_e_n) << ',' << format_real(c.diff_s_a)
        << ',' << format_real(c.diff_s_b) << ',' << format_real(c.diff_s_ab)
        << ',' << format_real(c.diff_i) << ',' << flags << '\n';
  }
}

void write_json(std::span<const ComparisonReport> rows, std::ostream& out) {
  json arr = json::array();
  for (const auto& c : rows) {
    arr.push_back({{"r_a", json_real(c.r_a)},
                   {"r_b", json_real(c.r_b)},
                   {"n_max", c.n_max},
                   {"diff_e_n", json_real(c.diff_e_n)},
                   {"diff_s_a", json_real(c.diff_s_a)},
                   {"diff_s_b", json_real(c.diff_s_b)},
                   {"diff_s_ab", json_real(c.diff_s_ab)},
                   {"diff_i", json_real(c.diff_i)},
                   {"flagged", c.flagged}});
  }
  out << arr.dump(2) << '\n';
}

void emit_csv(std::span<const EntanglementReport> rows,
              const std::filesystem::path& path) {
  write_file(path, [&](std::ostream& out) { write_csv(rows, out); });
}

void emit_json(std::span<const EntanglementReport> rows,
               const std::filesystem::path& path) {
  write_file(path, [&](std::ostream& out) { write_json(rows, out); });
}

}  // namespace horizon
