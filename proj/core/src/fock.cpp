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

#include "horizon/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include "horizon/error.hpp"

namespace horizon {
namespace {

// Largest amplitude vector we are willing to allocate (8 GiB of doubles is
// well past anything the density pipeline can digest anyway).
constexpr std::size_t kMaxAmplitudes = std::size_t{1} << 30;

std::size_t register_size(std::size_t cutoff, std::size_t mode_count) {
  const std::size_t levels = cutoff + 1;
  std::size_t size = 1;
  for (std::size_t m = 0; m < mode_count; ++m) {
    if (size > kMaxAmplitudes / levels) {
      throw InvalidArgument("Fock register too large: cutoff " +
                            std::to_string(cutoff) + " over " +
                            std::to_string(mode_count) + " modes");
    }
    size *= levels;
  }
  return size;
}

// x^k for x = tanh^2 r computed as exp(k ln x); exact zero at r = 0.
double thermal_power(const SqueezeParam& sq, double k) {
  if (sq.tanh_r() == 0.0) return k == 0.0 ? 1.0 : 0.0;
  return std::exp(k * sq.log_thermal_ratio());
}

}  // namespace

std::size_t flatten(const OccupationIndex& index, std::size_t cutoff,
                    std::size_t mode_count) {
  if (index.size() != mode_count) {
    throw InvalidArgument("occupation index has " +
                          std::to_string(index.size()) + " entries, expected " +
                          std::to_string(mode_count));
  }
  std::size_t flat = 0;
  for (std::size_t occ : index) {
    if (occ > cutoff) {
      throw InvalidArgument("occupation " + std::to_string(occ) +
                            " exceeds cutoff " + std::to_string(cutoff));
    }
    flat = flat * (cutoff + 1) + occ;
  }
  return flat;
}

OccupationIndex unflatten(std::size_t flat, std::size_t cutoff,
                          std::size_t mode_count) {
  const std::size_t levels = cutoff + 1;
  if (flat >= register_size(cutoff, mode_count)) {
    throw InvalidArgument("flat index " + std::to_string(flat) +
                          " out of range");
  }
  OccupationIndex index(mode_count);
  for (std::size_t m = mode_count; m-- > 0;) {
    index[m] = flat % levels;
    flat /= levels;
  }
  return index;
}

PureState::PureState(std::vector<std::string> mode_labels, std::size_t cutoff)
    : labels_(std::move(mode_labels)), cutoff_(cutoff) {
  if (labels_.empty()) {
    throw InvalidArgument("a state needs at least one mode");
  }
  std::set<std::string> seen;
  for (const auto& label : labels_) {
    if (label.empty() || !seen.insert(label).second) {
      throw InvalidArgument("mode labels must be non-empty and distinct");
    }
  }
  amplitudes_.assign(register_size(cutoff, labels_.size()), 0.0);
}

std::size_t PureState::mode_position(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw InvalidArgument("unknown mode label '" + label + "'");
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

double PureState::amplitude(const OccupationIndex& index) const {
  return amplitudes_[flatten(index, cutoff_, labels_.size())];
}

void PureState::set_amplitude(const OccupationIndex& index, double value) {
  if (!std::isfinite(value)) {
    throw InvalidArgument("amplitudes must be finite");
  }
  amplitudes_[flatten(index, cutoff_, labels_.size())] = value;
}

PureState kruskal_vacuum(const SqueezeParam& sq, std::size_t cutoff) {
  PureState state({mode::kIn, mode::kOut}, cutoff);
  double amp = 1.0 / sq.cosh_r();
  for (std::size_t n = 0; n <= cutoff; ++n) {
    state.set_amplitude({n, n}, amp);
    amp *= sq.tanh_r();
  }
  return state;
}

PureState kruskal_one(const SqueezeParam& sq, std::size_t cutoff) {
  if (cutoff == 0) {
    throw InvalidArgument("the one-particle state needs cutoff >= 1");
  }
  PureState state({mode::kIn, mode::kOut}, cutoff);
  double geometric = sq.sech2();  // tanh^n r / cosh^2 r
  for (std::size_t n = 0; n < cutoff; ++n) {
    state.set_amplitude({n, n + 1},
                        std::sqrt(static_cast<double>(n + 1)) * geometric);
    geometric *= sq.tanh_r();
  }
  return state;
}

PureState tensor_product(const PureState& a, const PureState& b,
                         std::vector<std::string> labels) {
  if (a.cutoff() != b.cutoff()) {
    throw InvalidArgument("tensor product factors must share a cutoff");
  }
  if (labels.size() != a.mode_count() + b.mode_count()) {
    throw InvalidArgument("tensor product needs one label per combined mode");
  }
  PureState out(std::move(labels), a.cutoff());
  const std::size_t nb = b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double ai = a.amplitudes_[i];
    if (ai == 0.0) continue;
    for (std::size_t j = 0; j < nb; ++j) {
      out.amplitudes_[i * nb + j] = ai * b.amplitudes_[j];
    }
  }
  return out;
}

PureState superpose(double ca, const PureState& a, double cb,
                    const PureState& b) {
  if (a.labels_ != b.labels_ || a.cutoff_ != b.cutoff_) {
    throw InvalidArgument("superposed states must share a mode layout");
  }
  PureState out = a;
  for (std::size_t i = 0; i < out.amplitudes_.size(); ++i) {
    out.amplitudes_[i] = ca * a.amplitudes_[i] + cb * b.amplitudes_[i];
  }
  return out;
}

PureState entangled_pair_state(const SqueezeParam& sq_a,
                               const SqueezeParam& sq_b, std::size_t cutoff) {
  if (cutoff == 0) {
    throw InvalidArgument("the entangled pair needs cutoff >= 1");
  }
  std::vector<std::string> labels{mode::kAIn, mode::kAOut, mode::kBIn,
                                  mode::kBOut};
  const PureState both_vacuum = tensor_product(
      kruskal_vacuum(sq_a, cutoff), kruskal_vacuum(sq_b, cutoff), labels);
  const PureState both_one = tensor_product(kruskal_one(sq_a, cutoff),
                                            kruskal_one(sq_b, cutoff), labels);
  const double h = 1.0 / std::numbers::sqrt2;
  return superpose(h, both_vacuum, h, both_one);
}

double squared_norm(const PureState& state) {
  double s = 0.0;
  for (double a : state.amplitudes()) s += a * a;
  return s;
}

double inner_product(const PureState& a, const PureState& b) {
  if (a.mode_labels() != b.mode_labels() || a.cutoff() != b.cutoff()) {
    throw InvalidArgument("inner product needs identical mode layouts");
  }
  double s = 0.0;
  const auto pa = a.amplitudes();
  const auto pb = b.amplitudes();
  for (std::size_t i = 0; i < pa.size(); ++i) s += pa[i] * pb[i];
  return s;
}

namespace {

// 1 - ||kruskal_vacuum||^2 = x^(N+1)
double vacuum_deficit(const SqueezeParam& sq, std::size_t cutoff) {
  return thermal_power(sq, static_cast<double>(cutoff + 1));
}

// 1 - ||kruskal_one||^2 = x^N (1 + N (1 - x)), N = cutoff
double one_deficit(const SqueezeParam& sq, std::size_t cutoff) {
  const double n = static_cast<double>(cutoff);
  return thermal_power(sq, n) * (1.0 + n * sq.sech2());
}

}  // namespace

double truncated_vacuum_norm2(const SqueezeParam& sq, std::size_t cutoff) {
  return 1.0 - vacuum_deficit(sq, cutoff);
}

double truncated_one_norm2(const SqueezeParam& sq, std::size_t cutoff) {
  if (cutoff == 0) {
    throw InvalidArgument("the one-particle state needs cutoff >= 1");
  }
  return 1.0 - one_deficit(sq, cutoff);
}

double pair_state_norm_deficit(const SqueezeParam& sq_a,
                               const SqueezeParam& sq_b, std::size_t cutoff) {
  if (cutoff == 0) {
    throw InvalidArgument("the entangled pair needs cutoff >= 1");
  }
  // 1 - (1 - d1)(1 - d2) = d1 + d2 - d1 d2
  const auto product_deficit = [](double d1, double d2) {
    return d1 + d2 - d1 * d2;
  };
  const double vac = product_deficit(vacuum_deficit(sq_a, cutoff),
                                     vacuum_deficit(sq_b, cutoff));
  const double one =
      product_deficit(one_deficit(sq_a, cutoff), one_deficit(sq_b, cutoff));
  return 0.5 * (vac + one);
}

}  // namespace horizon
