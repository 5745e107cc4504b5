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
// Adiabatic optimization on spin-glass instances: problem and driver
// Hamiltonians, interpolation schedules, anneal runs with success
// accounting, and the closed-form (N+1)-qubit Hamiltonians for the
// flip-all driver term. The closed forms are built directly from the
// instance data, independent of the embedding engine, so the two routes
// can be cross-checked against each other.

#ifndef QLR_ADIABATIC_HPP
#define QLR_ADIABATIC_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qlr/densesim.hpp"
#include "qlr/pauli.hpp"

namespace qlr {

/// One two-body coupling h_ij with i > j (0-based qubit indices).
struct Coupling {
  std::size_t i = 0;
  std::size_t j = 0;
  double value = 0.0;

  bool operator==(const Coupling&) const = default;
};

/// A spin-glass instance: E(s) = sum_i h_i s_i + sum_{i>j} h_ij s_i s_j
/// over spins s_i = +/-1. `fields` has one entry per qubit.
struct SpinGlassInstance {
  std::size_t n = 0;
  std::vector<double> fields;
  std::vector<Coupling> couplings;

  bool operator==(const SpinGlassInstance&) const = default;
};

/// Validated copy with couplings sorted by (i, j) and zero couplings
/// dropped. Throws std::invalid_argument on bad indices, duplicate pairs,
/// a field list of the wrong length, or non-finite entries.
SpinGlassInstance canonical_instance(const SpinGlassInstance& instance);

/// Parses the line-based instance format:
///
///   n <qubits>
///   h <i> <value>
///   J <i> <j> <value>      # i > j, 0-based
///
/// '#' starts a comment; the `n` line must come first. Unlisted fields
/// and couplings are zero. Throws ParseError with a line number.
SpinGlassInstance parse_instance(std::string_view text);

/// Canonical emission: `n`, then nonzero `h` lines by qubit, then nonzero
/// `J` lines by (i, j). parse_instance(format_instance(x)) round-trips
/// every canonical instance.
std::string format_instance(const SpinGlassInstance& instance);

/// The z-diagonal problem Hamiltonian sum_i h_i Z_i + sum_{i>j} h_ij Z_i Z_j.
Hamiltonian spin_glass(const SpinGlassInstance& instance);

/// The transverse-field driver sum_i B_i X_i. For positive fields its
/// ground state is the product of single-qubit |-> states.
Hamiltonian standard_driver(const std::vector<double>& B);

/// B0 times the all-X string on n qubits: flips every computational bit.
PauliTerm flip_all_term(double B0, std::size_t n);

/// Interpolation weights f (driver) and g (problem) on [0, tau], with
/// f(0) = g(tau) = 1 and f(tau) = g(0) = 0 enforced to 1e-12.
class Schedule {
 public:
  using Weight = std::function<double(double)>;

  /// Throws std::invalid_argument when tau is not positive and finite or
  /// the endpoint conditions fail.
  Schedule(Weight f, Weight g, double tau);

  /// f = 1 - t/tau, g = t/tau.
  static Schedule linear(double tau);

  double f(double t) const { return f_(t); }
  double g(double t) const { return g_(t); }
  double tau() const { return tau_; }

 private:
  Weight f_;
  Weight g_;
  double tau_ = 0.0;
};

/// H(t) = f(t) H0 + g(t) HP. Throws on register mismatch.
ScheduledHamiltonian interpolate(const Hamiltonian& h0, const Hamiltonian& hp,
                                 const Schedule& schedule);

/// The closed-form (N+1)-qubit driver/problem pair that carries a
/// flip-all driver term on one extra qubit.
struct EmbeddedFlipAll {
  Hamiltonian driver;   ///< B0 X_0 + sum_i B_i X_(i+1).
  Hamiltonian problem;  ///< sum_{i>j} h_ij Z_(i+1) Z_(j+1) + sum_j h_j Z_0 Z_(j+1).
};

/// Builds the pair above directly from the instance: the flip-all term
/// B0 X^(x)N becomes a 1-local X on the new qubit 0 and every local field
/// h_j becomes a two-body coupling between qubit 0 and qubit j+1, so the
/// problem part has no 1-local terms and both parts are 2-local. Requires
/// |B| = instance.n. Built without the embedding engine.
EmbeddedFlipAll flip_all_embedded(const SpinGlassInstance& instance,
                                  const std::vector<double>& B, double B0);

/// Within this margin of the minimal diagonal energy a bitstring counts
/// as a ground state.
inline constexpr double kGroundTolerance = 1e-9;

/// Diagonal energies E(b) of a z/I-only Hamiltonian, indexed by basis
/// state. Throws std::invalid_argument when a term carries X or Y.
std::vector<double> diagonal_energies(const Hamiltonian& hp,
                                      std::size_t cap = kDefaultQubitCap);

/// Outcome statistics of an anneal against a diagonal problem Hamiltonian.
struct AnnealReport {
  double probability = 0.0;    ///< Population on the ground manifold.
  double ground_energy = 0.0;  ///< Minimal diagonal energy.
  std::vector<std::uint64_t> ground_states;  ///< Its bitstrings, ascending.
  double final_energy = 0.0;   ///< <psi|HP|psi> of the final state.
  GapScan gap;                 ///< Filled by run_anneal.
  double tau = 0.0;            ///< Filled by run_anneal.
  std::size_t steps = 0;       ///< Filled by run_anneal.
};

/// Reads the ground manifold off `hp` and sums |amplitude|^2 over it.
/// `hp` must be z/I-only and match the state dimension.
AnnealReport success_probability(const StateVector& final_state,
                                 const Hamiltonian& hp,
                                 std::size_t cap = kDefaultQubitCap);

/// Knobs for a single anneal run.
struct AnnealOptions {
  double tau = 10.0;
  std::size_t steps = 1000;
  std::size_t gap_samples = 101;
  std::size_t cap = kDefaultQubitCap;
};

/// Linear-schedule anneal from driver to problem. The initial state is
/// the exact driver ground state unless `initial` overrides it. tau = 0
/// skips propagation and scores the initial state; the gap scan then
/// covers the interpolation path on a unit interval (same minimum, since
/// the path is tau-independent) and gap.time reports the path fraction.
AnnealReport run_anneal(const Hamiltonian& driver, const Hamiltonian& problem,
                        const AnnealOptions& options = {},
                        const StateVector* initial = nullptr);

/// A matched pair of runs: the N-qubit anneal with driver
/// standard_driver(B) + flip_all_term(B0, n) against the (N+1)-qubit
/// closed form, started from the basis-change image of |+> (x) psi0 so
/// both runs see identical dynamics. Their success probabilities agree.
struct PairedAnneal {
  AnnealReport original;
  AnnealReport embedded;
};

PairedAnneal run_paired_flip_all(const SpinGlassInstance& instance,
                                 const std::vector<double>& B, double B0,
                                 const AnnealOptions& options = {});

/// Bitstring b as n characters, qubit 0 leftmost.
std::string format_bitstring(std::uint64_t bits, std::size_t n);

}  // namespace qlr

#endif  // QLR_ADIABATIC_HPP
