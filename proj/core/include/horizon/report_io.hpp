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

// Report serialization.
//
// CSV: one header line, one row per report, '\n' line endings. Reals are
// written in scientific notation with 12 significant digits ("%.11e" in the C
// locale, negative zero written as zero); n_max is a plain integer; absent
// values are empty fields. JSON carries the same values (parsed back from the
// 12-digit text) with absent values as null.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include "horizon/sweep.hpp"

namespace horizon {

inline constexpr const char* kCsvHeader =
    "r_a,r_b,n_max,e_n_block00,neg_sum_num,e_n_num,s_a_closed,s_b_closed,"
    "s_ab_closed,i_closed,s_a_num,s_b_num,s_ab_num,i_num,trace_deficit";

inline constexpr const char* kCompareCsvHeader =
    "r_a,r_b,n_max,diff_e_n,diff_s_a,diff_s_b,diff_s_ab,diff_i,flagged";

/// Locale-independent scientific notation with 12 significant digits.
std::string format_real(double value);

void write_csv(std::span<const EntanglementReport> rows, std::ostream& out);
void write_json(std::span<const EntanglementReport> rows, std::ostream& out);
void write_csv(std::span<const ComparisonReport> rows, std::ostream& out);
void write_json(std::span<const ComparisonReport> rows, std::ostream& out);

/// File variants; throw IoError naming the path on failure.
void emit_csv(std::span<const EntanglementReport> rows,
              const std::filesystem::path& path);
void emit_json(std::span<const EntanglementReport> rows,
               const std::filesystem::path& path);

}  // namespace horizon
