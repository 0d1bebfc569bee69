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

#include "horizon/density.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <utility>

#include "horizon/error.hpp"

namespace horizon {
namespace {

constexpr double kSymmetryTolerance = 1e-13;

std::size_t product(const std::vector<std::size_t>& v) {
  return std::accumulate(v.begin(), v.end(), std::size_t{1},
                         std::multiplies<>());
}

// Row-major strides for a subsystem shape.
std::vector<std::size_t> strides_of(const std::vector<std::size_t>& shape) {
  std::vector<std::size_t> strides(shape.size(), 1);
  for (std::size_t k = shape.size(); k-- > 1;) {
    strides[k - 1] = strides[k] * shape[k];
  }
  return strides;
}

// Splits each basis index of `shape` into (kept index, traced index), where
// `kept[k]` marks subsystem k as kept. Both sub-indices are row-major in the
// original subsystem order.
struct SplitIndex {
  std::vector<std::size_t> kept;
  std::vector<std::size_t> traced;
  std::size_t kept_dim = 1;
  std::size_t traced_dim = 1;
};

SplitIndex split_basis(const std::vector<std::size_t>& shape,
                       const std::vector<bool>& kept) {
  SplitIndex split;
  for (std::size_t k = 0; k < shape.size(); ++k) {
    (kept[k] ? split.kept_dim : split.traced_dim) *= shape[k];
  }
  const std::size_t dim = split.kept_dim * split.traced_dim;
  split.kept.resize(dim);
  split.traced.resize(dim);
  std::vector<std::size_t> digits(shape.size(), 0);
  for (std::size_t flat = 0; flat < dim; ++flat) {
    std::size_t ki = 0, ti = 0;
    for (std::size_t k = 0; k < shape.size(); ++k) {
      if (kept[k]) {
        ki = ki * shape[k] + digits[k];
      } else {
        ti = ti * shape[k] + digits[k];
      }
    }
    split.kept[flat] = ki;
    split.traced[flat] = ti;
    // odometer increment, last subsystem fastest
    for (std::size_t k = shape.size(); k-- > 0;) {
      if (++digits[k] < shape[k]) break;
      digits[k] = 0;
    }
  }
  return split;
}

std::vector<bool> keep_mask(const std::vector<std::string>& labels,
                            const std::vector<std::string>& keep) {
  if (keep.empty()) {
    throw InvalidArgument("keep set must not be empty");
  }
  std::vector<bool> mask(labels.size(), false);
  for (const auto& label : keep) {
    const auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) {
      throw InvalidArgument("unknown subsystem label '" + label + "'");
    }
    const auto pos = static_cast<std::size_t>(it - labels.begin());
    if (mask[pos]) {
      throw InvalidArgument("subsystem label '" + label + "' repeated");
    }
    mask[pos] = true;
  }
  return mask;
}

template <typename T>
std::vector<T> select(const std::vector<T>& values,
                      const std::vector<bool>& mask) {
  std::vector<T> out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (mask[k]) out.push_back(values[k]);
  }
  return out;
}

}  // namespace

DensityMatrix::DensityMatrix(Matrix entries, std::vector<std::size_t> shape,
                             std::vector<std::string> labels)
    : entries_(std::move(entries)),
      shape_(std::move(shape)),
      labels_(std::move(labels)) {
  if (shape_.size() != labels_.size() || shape_.empty()) {
    throw InvalidArgument("density matrix needs one label per subsystem");
  }
  if (product(shape_) != entries_.dim()) {
    throw InvalidArgument("subsystem shape does not match matrix dimension");
  }
  if (entries_.asymmetry() > kSymmetryTolerance * entries_.max_abs()) {
    throw InvalidArgument("density matrix is not symmetric");
  }
}

std::size_t DensityMatrix::subsystem_position(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw InvalidArgument("unknown subsystem label '" + label + "'");
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

DensityMatrix reduced_density(const PureState& state,
                              const std::vector<std::string>& keep) {
  const auto mask = keep_mask(state.mode_labels(), keep);
  const std::vector<std::size_t> shape(state.mode_count(), state.levels());
  const SplitIndex split = split_basis(shape, mask);

  // Group non-zero amplitudes by traced index; each group contributes the
  // outer product of its kept-index amplitudes.
  std::vector<std::vector<std::pair<std::size_t, double>>> groups(
      split.traced_dim);
  const auto amps = state.amplitudes();
  for (std::size_t flat = 0; flat < amps.size(); ++flat) {
    if (amps[flat] != 0.0) {
      groups[split.traced[flat]].emplace_back(split.kept[flat], amps[flat]);
    }
  }
  Matrix rho(split.kept_dim);
  for (const auto& group : groups) {
    for (const auto& [i, ai] : group) {
      for (const auto& [j, aj] : group) {
        rho(i, j) += ai * aj;
      }
    }
  }
  return DensityMatrix(std::move(rho), select(shape, mask),
                       select(state.mode_labels(), mask));
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<std::string>& keep) {
  const auto mask = keep_mask(rho.labels(), keep);
  const SplitIndex split = split_basis(rho.shape(), mask);
  Matrix out(split.kept_dim);
  const Matrix& in = rho.entries();
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    for (std::size_t j = 0; j < rho.dim(); ++j) {
      if (split.traced[i] == split.traced[j]) {
        out(split.kept[i], split.kept[j]) += in(i, j);
      }
    }
  }
  return DensityMatrix(std::move(out), select(rho.shape(), mask),
                       select(rho.labels(), mask));
}

DensityMatrix partial_transpose(const DensityMatrix& rho,
                                const std::string& subsystem) {
  const std::size_t slot = rho.subsystem_position(subsystem);
  const std::size_t stride = strides_of(rho.shape())[slot];
  const std::size_t levels = rho.shape()[slot];
  const Matrix& in = rho.entries();
  Matrix out(rho.dim());
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    const std::size_t di = (i / stride) % levels;
    const std::size_t base_i = i - di * stride;
    for (std::size_t j = 0; j < rho.dim(); ++j) {
      const std::size_t dj = (j / stride) % levels;
      const std::size_t base_j = j - dj * stride;
      // swap the subsystem digit between row and column
      out(base_i + dj * stride, base_j + di * stride) = in(i, j);
    }
  }
  return DensityMatrix(std::move(out), rho.shape(), rho.labels());
}

Spectrum eig_symmetric(const Matrix& matrix, double tol) {
  const std::size_t n = matrix.dim();
  const double scale = matrix.max_abs();
  if (matrix.asymmetry() > kSymmetryTolerance * scale) {
    throw InvalidArgument("eig_symmetric: input is not symmetric");
  }
  Matrix a = matrix;
  const double norm = matrix.frobenius_norm();

  const auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        if (p != q) s += a(p, q) * a(p, q);
      }
    }
    return std::sqrt(s);
  };

  int sweep = 0;
  for (;; ++sweep) {
    const double off = off_norm();
    if (off == 0.0 || off < tol * norm) break;
    if (sweep == kJacobiMaxSweeps) {
      throw ConvergenceError("Jacobi eigensolver did not converge in " +
                             std::to_string(kJacobiMaxSweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        // Once the sweep count is past the quadratic phase, an element that
        // cannot move either diagonal entry is rounding noise.
        const double g = 100.0 * std::abs(apq);
        if (sweep > 3 && std::abs(app) + g == std::abs(app) &&
            std::abs(aqq) + g == std::abs(aqq)) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) /
              (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double grp = a(r, p);
          const double grq = a(r, q);
          const double new_rp = grp - s * (grq + grp * tau);
          const double new_rq = grq + s * (grp - grq * tau);
          a(r, p) = new_rp;
          a(p, r) = new_rp;
          a(r, q) = new_rq;
          a(q, r) = new_rq;
        }
      }
    }
  }

  Spectrum spectrum;
  spectrum.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) spectrum.eigenvalues[i] = a(i, i);
  std::sort(spectrum.eigenvalues.begin(), spectrum.eigenvalues.end());
  spectrum.trace_check = std::accumulate(spectrum.eigenvalues.begin(),
                                         spectrum.eigenvalues.end(), 0.0);
  return spectrum;
}

double vn_entropy(const Spectrum& spectrum) {
  if (!(spectrum.trace_check > 0.0)) {
    throw InvalidArgument("entropy needs a spectrum with positive trace");
  }
  double s = 0.0;
  for (double lambda : spectrum.eigenvalues) {
    if (lambda < -kNegativeEigenvalueTolerance) {
      throw NonPhysicalState("eigenvalue " + describe(lambda) +
                             " is below the physical-state tolerance");
    }
    if (lambda <= 0.0) continue;
    const double p = lambda / spectrum.trace_check;
    s -= p * std::log2(p);
  }
  return std::max(0.0, s);
}

NegativityReport negativity_sum(const Spectrum& spectrum) {
  NegativityReport report;
  for (double lambda : spectrum.eigenvalues) {
    if (lambda < 0.0) {
      report.negative_sum -= lambda;
      report.most_negative = std::min(report.most_negative, lambda);
    }
  }
  report.paper_measure = 2.0 * std::abs(report.most_negative);
  return report;
}

MutualInformation mutual_information_numeric(const PureState& state) {
  const DensityMatrix rho_ab =
      reduced_density(state, {mode::kAOut, mode::kBOut});
  const DensityMatrix rho_a = partial_trace(rho_ab, {mode::kAOut});
  const DensityMatrix rho_b = partial_trace(rho_ab, {mode::kBOut});
  MutualInformation mi;
  mi.s_ab = vn_entropy(eig_symmetric(rho_ab.entries()));
  mi.s_a = vn_entropy(eig_symmetric(rho_a.entries()));
  mi.s_b = vn_entropy(eig_symmetric(rho_b.entries()));
  mi.i = mi.s_a + mi.s_b - mi.s_ab;
  return mi;
}

}  // namespace horizon
