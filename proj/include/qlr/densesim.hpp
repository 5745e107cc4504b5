// Copyright 2026 The qlr developers
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
//
// Dense-matrix oracle and dynamics engine. Everything here is brute
// force on purpose: matrices are built explicitly, evolution freezes the
// Hamiltonian at step midpoints and applies exact exponentials through
// eigendecompositions, and the embedded-block checks compare matrix
// elements directly. Registers are capped (default 12 qubits) because
// this layer certifies constructions rather than scaling them.
//
// Basis convention: qubit 0 is the most significant bit of the state
// index, so |n⟩ for bitstring n = b₀b₁…b_{N−1} sits at index Σ bᵢ 2^{N−1−i}.

#ifndef QLR_DENSESIM_HPP
#define QLR_DENSESIM_HPP

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "qlr/embedding.hpp"
#include "qlr/pauli.hpp"

namespace qlr {

using DenseOperator = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

/// Register size limit for dense construction.
inline constexpr std::size_t kDefaultQubitCap = 12;

/// Thrown when a register exceeds the dense cap.
struct CapExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense image of a single Pauli string.
DenseOperator pauli_matrix(const PauliString& s);

/// Dense image of a Hamiltonian: sum of coefficient times string image.
DenseOperator to_matrix(const Hamiltonian& h,
                        std::size_t cap = kDefaultQubitCap);

/// Computational basis state |bits⟩ on n qubits.
StateVector basis_state(std::size_t n_qubits, std::uint64_t bits);

/// Uniform superposition |+⟩^⊗n.
StateVector plus_state(std::size_t n_qubits);

/// (|0⟩+|1⟩)/√2 ⊗ system, the ancilla entering as the new qubit 0.
StateVector prepend_plus_ancilla(const StateVector& system);

/// In-place application of a single-qubit Pauli.
void apply_axis(StateVector& state, std::size_t n_qubits, std::size_t qubit,
                PauliAxis axis);

/// In-place application of a Pauli string (phase-free by construction).
void apply_string(StateVector& state, const PauliString& s);

/// In-place controlled-Pauli: applies `axis` on `target` where the
/// `control` qubit is 1. Indices are physical register positions.
void apply_controlled_axis(StateVector& state, std::size_t n_qubits,
                           std::size_t control, std::size_t target,
                           PauliAxis axis);

/// Applies an embedding's basis-change word to a physical-register state.
/// Gate targets are system indices, so they land on physical qubit
/// target+1 behind the prepended ancilla. The word is involutory: applying
/// it twice restores the state.
void apply_basis_change(StateVector& state, const EmbeddingResult& result);

/// Dense image of the basis-change word: |0⟩⟨0|⊗𝟙 + |1⟩⟨1|⊗𝒪^χ′.
DenseOperator basis_change_matrix(const EmbeddingResult& result,
                                  std::size_t cap = kDefaultQubitCap);

/// The |n₊⟩/|n₋⟩ frames of an embedding: column n of plus() is the image
/// of |+⟩⊗|n⟩ under the basis change, and likewise for minus().
class BasisMap {
 public:
  BasisMap(const ControlledGateSequence& gates, std::size_t n_system,
           std::size_t cap = kDefaultQubitCap);

  std::size_t n_system() const { return n_system_; }
  const DenseOperator& plus() const { return plus_; }
  const DenseOperator& minus() const { return minus_; }

 private:
  std::size_t n_system_;
  DenseOperator plus_;
  DenseOperator minus_;
};

/// Largest cross-block matrix element max |⟨k₊|H̃|n₋⟩|, |⟨k₋|H̃|n₊⟩|.
/// Zero (to roundoff) certifies that the two frames evolve independently.
double check_decoupling(const Hamiltonian& h_tilde, const BasisMap& map,
                        std::size_t cap = kDefaultQubitCap);

enum class BlockSign { plus, minus };

/// The 2^N×2^N block ⟨k_sign|H̃|n_sign⟩ in the system labeling.
DenseOperator restrict_block(const Hamiltonian& h_tilde, const BasisMap& map,
                             BlockSign sign,
                             std::size_t cap = kDefaultQubitCap);

/// One weighted summand of a time-dependent Hamiltonian.
struct SchedulePiece {
  std::function<double(double)> weight;
  Hamiltonian hamiltonian;
};

/// H(t) = Σ weightᵢ(t) · pieceᵢ. All pieces share one register.
class ScheduledHamiltonian {
 public:
  explicit ScheduledHamiltonian(std::vector<SchedulePiece> pieces);

  std::size_t n_qubits() const { return n_qubits_; }
  const std::vector<SchedulePiece>& pieces() const { return pieces_; }

  /// The frozen Hamiltonian at time t. Throws on non-finite weights.
  Hamiltonian at(double t) const;

 private:
  std::size_t n_qubits_;
  std::vector<SchedulePiece> pieces_;
};

/// A propagation request: evolve under `scheduled` for duration tau (ħ=1)
/// in `steps` midpoint-frozen slices.
struct EvolutionSpec {
  ScheduledHamiltonian scheduled;
  double tau = 0.0;
  std::size_t steps = 1;
};

/// One recorded point of a trajectory.
struct TrajectorySample {
  double time = 0.0;
  StateVector state;
};

/// Propagates psi0 through the schedule. Each slice applies the exact
/// exponential of the midpoint Hamiltonian, so norm is conserved and a
/// time-independent Hamiltonian is integrated exactly. When `trajectory`
/// is given it receives the initial state and the state after each slice.
StateVector evolve(const EvolutionSpec& spec, const StateVector& psi0,
                   std::vector<TrajectorySample>* trajectory = nullptr,
                   std::size_t cap = kDefaultQubitCap);

/// Ascending eigenvalues, multiplicity preserved.
std::vector<double> spectrum(const Hamiltonian& h,
                             std::size_t cap = kDefaultQubitCap);

/// Ground state of a Hamiltonian (lowest-eigenvalue eigenvector).
StateVector ground_state(const Hamiltonian& h,
                         std::size_t cap = kDefaultQubitCap);

/// |⟨a|b⟩|².
double fidelity(const StateVector& a, const StateVector& b);

/// Result of scanning the instantaneous gap E₁−E₀ over a schedule.
struct GapScan {
  double gap = 0.0;       ///< Smallest sampled gap (0 when degenerate).
  double time = 0.0;      ///< Sample time attaining it.
  bool degenerate = false;  ///< Ground level was degenerate at that time.
};

/// Samples the instantaneous spectrum at `samples` evenly spaced times in
/// [0, tau] (endpoints included) and reports the minimum gap. Ground
/// degeneracy below 1e−12 is flagged and reported as gap 0.
GapScan min_gap(const EvolutionSpec& spec, std::size_t samples,
                std::size_t cap = kDefaultQubitCap);

}  // namespace qlr

#endif  // QLR_DENSESIM_HPP
