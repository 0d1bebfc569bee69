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

// Brute-force density-matrix pipeline on truncated Fock states.
//
// This is the numerical reference for the closed-form series: reduced
// densities are built straight from pure-state amplitudes, spectra come from a
// deterministic cyclic Jacobi solver, and entropies/negativities are
// functionals of those spectra.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "horizon/fock.hpp"
#include "horizon/matrix.hpp"

namespace horizon {

/// Real symmetric matrix over a tensor product of subsystems.
///
/// `shape[k]` is the level count of subsystem `labels[k]`; basis states are
/// ordered row-major with the first subsystem most significant.
class DensityMatrix {
 public:
  /// Throws InvalidArgument if the shape product differs from the matrix
  /// dimension, labels and shape disagree in length, or the matrix is not
  /// symmetric to 1e-13 relative to its largest entry.
  DensityMatrix(Matrix entries, std::vector<std::size_t> shape,
                std::vector<std::string> labels);

  std::size_t dim() const { return entries_.dim(); }
  const Matrix& entries() const { return entries_; }
  const std::vector<std::size_t>& shape() const { return shape_; }
  const std::vector<std::string>& labels() const { return labels_; }
  double trace() const { return entries_.trace(); }

  std::size_t subsystem_position(const std::string& label) const;

  DensityMatrix& operator*=(double s) {
    entries_ *= s;
    return *this;
  }

 private:
  Matrix entries_;
  std::vector<std::size_t> shape_;
  std::vector<std::string> labels_;
};

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  double trace_check = 0.0;         // sum of eigenvalues
};

/// rho_keep = Tr_rest |psi><psi|, assembled from amplitudes without forming
/// the full density matrix. Kept subsystems appear in the state's mode order.
/// Throws InvalidArgument for an empty keep set or unknown label.
DensityMatrix reduced_density(const PureState& state,
                              const std::vector<std::string>& keep);

/// Partial trace of a density matrix down to `keep`.
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<std::string>& keep);

/// Transpose of the `subsystem` indices only. The result is a symmetric
/// matrix with the same trace; it need not be positive.
DensityMatrix partial_transpose(const DensityMatrix& rho,
                                const std::string& subsystem);

inline constexpr double kJacobiDefaultTolerance = 1e-15;
inline constexpr int kJacobiMaxSweeps = 100;

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
///
/// Sweeps visit (p, q) pairs in fixed row order and stop once the
/// off-diagonal Frobenius norm drops below `tol * ||A||_F`. Throws
/// InvalidArgument for asymmetric input and ConvergenceError after
/// kJacobiMaxSweeps sweeps.
Spectrum eig_symmetric(const Matrix& matrix,
                       double tol = kJacobiDefaultTolerance);

/// Eigenvalues below this are treated as genuine negativity, not rounding.
inline constexpr double kNegativeEigenvalueTolerance = 1e-10;

/// von Neumann entropy in bits of the spectrum normalized by its trace.
///
/// Eigenvalues in [-1e-10, 0) are clamped to zero; anything lower throws
/// NonPhysicalState. A non-positive trace throws InvalidArgument.
double vn_entropy(const Spectrum& spectrum);

struct NegativityReport {
  double negative_sum = 0.0;    // sum |lambda| over lambda < 0
  double most_negative = 0.0;   // min(0, min lambda)
  double paper_measure = 0.0;   // 2 |most_negative|
};

/// Negativity functionals of a partial-transpose spectrum. No clamping.
NegativityReport negativity_sum(const Spectrum& spectrum);

struct MutualInformation {
  double s_a = 0.0;
  double s_b = 0.0;
  double s_ab = 0.0;
  double i = 0.0;
};

/// Entropies of the exterior modes of a [A_in, A_out, B_in, B_out] pair
/// state: rho_AB over {A_out, B_out}, then rho_A and rho_B by further partial
/// trace, each entropy taken on the trace-normalized spectrum.
MutualInformation mutual_information_numeric(const PureState& state);

}  // namespace horizon
