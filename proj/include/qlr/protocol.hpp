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
// The state-preparation pipeline around an embedding: encode an N-qubit
// state into the N+1 qubit register with the basis-change word, evolve
// under the physical Hamiltonian, and either decode with the same word
// and read the ancilla in the |+>/|-> basis, or skip straight to a
// computational-basis ancilla measurement when the initial state is
// invariant under the replaced interaction. Leakage into the ancilla |->
// branch flags departure from the reproduced subspace.

#ifndef QLR_PROTOCOL_HPP
#define QLR_PROTOCOL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qlr/densesim.hpp"
#include "qlr/embedding.hpp"
#include "qlr/pauli.hpp"

namespace qlr {

/// Above this |-> population the decoded state is not trusted.
inline constexpr double kLeakageThreshold = 1e-6;

/// Largest ||chi psi0 - psi0|| that still counts as invariant.
inline constexpr double kInvarianceTolerance = 1e-10;

/// Raised when decoding finds the register outside the reproduced
/// subspace beyond the configured threshold.
struct LeakageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when the shortcut path is asked to run on an initial state the
/// replaced interaction does not fix.
struct InvarianceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// |psi(0)~> = U (|+> (x) psi0): ancilla in the plus state, then the
/// embedding's controlled-Pauli word. Requires psi0 normalized.
StateVector encode(const StateVector& psi0, const EmbeddingResult& emb);

/// Outcome of undoing the encoding.
struct DecodeResult {
  StateVector system;  ///< Normalized system state from the |+> branch.
  double leakage = 0.0;  ///< Population of the ancilla |-> branch.
};

/// Applies the (self-inverse) word again and splits off the ancilla.
/// Throws LeakageError when leakage exceeds `fail_threshold`; the |->
/// population is reported, never silently renormalized away.
DecodeResult decode(const StateVector& psi_tilde, const EmbeddingResult& emb,
                    double fail_threshold = kLeakageThreshold);

/// ||chi psi0 - psi0||.
double invariance_deviation(const StateVector& psi0, const PauliString& chi);

/// True iff matrix(chi) fixes psi0 to within kInvarianceTolerance. The
/// shortcut path requires this of the initial state.
bool check_invariance(const StateVector& psi0, const PauliString& chi);

/// One projective ancilla measurement in the computational basis.
struct MeasurementOutcome {
  int ancilla = 0;          ///< Measured ancilla bit.
  double probability = 0.0; ///< Born probability of that bit.
  StateVector system;       ///< Post-measurement system state, corrected.
};

/// Both branches of the ancilla measurement with exact Born weights.
/// Branch 1 is corrected by applying the basis factor qubit by qubit.
/// Branches with zero probability carry an empty state.
std::vector<MeasurementOutcome> shortcut_branches(const StateVector& psi_tilde,
                                                  const EmbeddingResult& emb);

/// Samples one branch with a seeded generator and returns it.
MeasurementOutcome shortcut_measure(const StateVector& psi_tilde,
                                    const EmbeddingResult& emb,
                                    std::uint64_t seed);

/// Samples a computational-basis bitstring from a system state.
std::uint64_t sample_bits(const StateVector& state, std::uint64_t seed);

/// The classical correction step: with an x/I-only chi, a measured ancilla
/// 1 flips the system bits on chi's support; ancilla 0 leaves them alone.
/// Throws std::invalid_argument when chi carries y or z axes or a bit
/// falls outside the register.
std::uint64_t reinterpret_bits(std::uint64_t system_bits, int ancilla_bit,
                               const PauliString& chi);

/// How the pipeline finishes.
enum class ProtocolMode { full_decode, shortcut };

/// A complete pipeline request.
struct PreparationRun {
  StateVector initial;       ///< N-qubit input state, normalized.
  EmbeddingResult embedding; ///< Supplies the word and the register size.
  EvolutionSpec evolution;   ///< Acts on N+1 qubits.
  ProtocolMode mode = ProtocolMode::full_decode;
  std::uint64_t seed = 0;    ///< Consumed by the shortcut measurement.
  double fail_threshold = kLeakageThreshold;
  std::size_t cap = kDefaultQubitCap;
};

/// What came out of the pipeline.
struct ProtocolReport {
  ProtocolMode mode = ProtocolMode::full_decode;
  StateVector system;        ///< Final system state.
  double leakage = 0.0;      ///< |-> population (full decode only).
  int ancilla = -1;          ///< Measured bit (shortcut only).
  double branch_probability = 1.0;  ///< Born weight of the final branch.
  std::size_t encode_gates = 0;      ///< Controlled gates in the encoding.
  std::size_t decode_gates = 0;      ///< Controlled gates in the decoding.
  std::size_t correction_gates = 0;  ///< Single-qubit shortcut corrections.
};

/// Runs encode -> evolve -> decode, or, in shortcut mode, skips the
/// encoding word (the ancilla still starts in |+>), evolves, measures the
/// ancilla and corrects. Shortcut mode refuses initial states not fixed
/// by the replaced interaction and by the basis factor; fixing both is
/// what makes dropping the encoding word exact.
ProtocolReport run_protocol(const PreparationRun& run);

}  // namespace qlr

#endif  // QLR_PROTOCOL_HPP
