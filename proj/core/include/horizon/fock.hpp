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

// Truncated Fock-space pure states.
//
// Each mode keeps occupations 0..cutoff inclusive (cutoff + 1 levels), and
// amplitudes are stored row-major over the occupation index with the first
// declared mode most significant. All constructors here produce real,
// non-negative amplitudes.
//
// The Kruskal vacuum of a single frequency, seen from the Schwarzschild
// interior/exterior factorization, is the two-mode squeezed state
//
//     |0>_K = sum_n tanh^n r / cosh r  |n>_in |n>_out
//
// and the one-particle state a_K^dagger |0>_K is
//
//     |1>_K = sum_n sqrt(n+1) tanh^n r / cosh^2 r  |n>_in |n+1>_out.
//
// Alice and Bob share (|0>_K^A |0>_K^B + |1>_K^A |1>_K^B) / sqrt(2) over the
// four modes [A_in, A_out, B_in, B_out].

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "horizon/kinematics.hpp"

namespace horizon {

using OccupationIndex = std::vector<std::size_t>;

namespace mode {
inline constexpr const char* kIn = "in";
inline constexpr const char* kOut = "out";
inline constexpr const char* kAIn = "A_in";
inline constexpr const char* kAOut = "A_out";
inline constexpr const char* kBIn = "B_in";
inline constexpr const char* kBOut = "B_out";
}  // namespace mode

/// Row-major flat position of `index` in a register of `mode_count` modes
/// with `cutoff + 1` levels each. Throws InvalidArgument on a wrong length or
/// an occupation above the cutoff.
std::size_t flatten(const OccupationIndex& index, std::size_t cutoff,
                    std::size_t mode_count);

/// Inverse of flatten. Throws InvalidArgument if flat is out of range.
OccupationIndex unflatten(std::size_t flat, std::size_t cutoff,
                          std::size_t mode_count);

class PureState {
 public:
  /// Zero state over the given modes. Labels must be distinct and non-empty.
  PureState(std::vector<std::string> mode_labels, std::size_t cutoff);

  std::size_t mode_count() const { return labels_.size(); }
  std::size_t cutoff() const { return cutoff_; }
  std::size_t levels() const { return cutoff_ + 1; }
  const std::vector<std::string>& mode_labels() const { return labels_; }

  /// Position of a mode label; throws InvalidArgument if absent.
  std::size_t mode_position(const std::string& label) const;

  std::span<const double> amplitudes() const { return amplitudes_; }
  std::size_t size() const { return amplitudes_.size(); }

  double amplitude(const OccupationIndex& index) const;
  /// Throws InvalidArgument for a non-finite value.
  void set_amplitude(const OccupationIndex& index, double value);

 private:
  friend PureState tensor_product(const PureState&, const PureState&,
                                  std::vector<std::string>);
  friend PureState superpose(double, const PureState&, double,
                             const PureState&);

  std::vector<std::string> labels_;
  std::size_t cutoff_;
  std::vector<double> amplitudes_;
};

/// Kruskal vacuum over modes [in, out]; amplitude tanh^n r / cosh r at (n, n).
PureState kruskal_vacuum(const SqueezeParam& sq, std::size_t cutoff);

/// Kruskal one-particle state over [in, out]; amplitude
/// sqrt(n+1) tanh^n r / cosh^2 r at (n, n+1) for n < cutoff.
/// Throws InvalidArgument for cutoff 0.
PureState kruskal_one(const SqueezeParam& sq, std::size_t cutoff);

/// (|0>_K^A |0>_K^B + |1>_K^A |1>_K^B) / sqrt(2) over
/// [A_in, A_out, B_in, B_out]. Requires cutoff >= 1.
PureState entangled_pair_state(const SqueezeParam& sq_a,
                               const SqueezeParam& sq_b, std::size_t cutoff);

/// a (x) b with the given labels for the combined modes. Both factors must
/// share a cutoff.
PureState tensor_product(const PureState& a, const PureState& b,
                         std::vector<std::string> labels);

/// ca * a + cb * b over identical layouts.
PureState superpose(double ca, const PureState& a, double cb,
                    const PureState& b);

double squared_norm(const PureState& state);
double inner_product(const PureState& a, const PureState& b);

/// Closed-form squared norm of kruskal_vacuum: 1 - x^(cutoff+1), x = tanh^2 r.
double truncated_vacuum_norm2(const SqueezeParam& sq, std::size_t cutoff);

/// Closed-form squared norm of kruskal_one with occupations n < cutoff:
/// 1 - (N+2) x^(N+1) + (N+1) x^(N+2) with N = cutoff - 1.
double truncated_one_norm2(const SqueezeParam& sq, std::size_t cutoff);

/// 1 - squared_norm(entangled_pair_state(...)) from the closed forms above,
/// computed without cancellation for tiny deficits.
double pair_state_norm_deficit(const SqueezeParam& sq_a,
                               const SqueezeParam& sq_b, std::size_t cutoff);

}  // namespace horizon
