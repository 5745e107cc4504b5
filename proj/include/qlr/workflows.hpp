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
// Text-in/text-out workflows behind the command-line surface and the C
// API: each takes file contents plus options and returns a structured
// report with a schema version line. Identical inputs produce
// byte-identical reports.

#ifndef QLR_WORKFLOWS_HPP
#define QLR_WORKFLOWS_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "qlr/densesim.hpp"
#include "qlr/embedding.hpp"
#include "qlr/protocol.hpp"

namespace qlr {

/// Selects the interaction term to replace: a literal Pauli word, or a
/// 0-based index into the normalized term list when `chi` is empty.
struct ChiSelector {
  std::string chi;
  long index = -1;
};

/// How to factor the selected term. `plain` keeps the whole word in the
/// basis change; `masked` uses the given bits; `automatic` searches.
enum class FactorCase { automatic, plain, masked };

struct EmbedOptions {
  ChiSelector selector;
  FactorCase factor_case = FactorCase::automatic;
  std::string mask;  ///< Bitstring, required for FactorCase::masked.
  int budget = kDefaultMaskBudget;
};

/// Embeds and serializes the result (the embedding report format).
std::string embed_workflow(std::string_view hamiltonian_text,
                           const EmbedOptions& options);

struct VerifyOptions {
  double tol_unitary = 1e-12;
  double tol_decoupling = 1e-12;
  double tol_blocks = 1e-12;
  double tol_spectrum = 1e-9;
  std::size_t cap = kDefaultQubitCap;
};

struct VerifyOutcome {
  bool passed = false;
  std::string report;
};

/// Checks an embedding report against the original Hamiltonian with the
/// dense oracles: the gate word squares to identity, the two ancilla
/// blocks decouple, they reproduce the original and its sign-flipped
/// complement, and the physical spectrum is the union of both block
/// spectra. Coefficients in the report are judged here, so a tampered
/// physical block fails its block check rather than the parse.
VerifyOutcome verify_workflow(std::string_view hamiltonian_text,
                              std::string_view embedding_text,
                              const VerifyOptions& options = {});

struct AnnealWorkflowOptions {
  double tau = 10.0;
  std::size_t steps = 1000;
  std::string schedule = "linear";
  bool paired = false;
  double field = 1.0;  ///< Uniform transverse-field weight per qubit.
  double b0 = 1.0;     ///< Flip-all weight (paired mode).
  std::size_t gap_samples = 101;
  std::size_t cap = kDefaultQubitCap;
};

/// Anneals a spin-glass instance file. Paired mode runs the N-qubit
/// flip-all-driver anneal against its (N+1)-qubit closed form and
/// reports both along with the success-probability difference.
std::string anneal_workflow(std::string_view instance_text,
                            const AnnealWorkflowOptions& options);

/// Protocol run configuration, parsed from a line-based config file:
///
///   hamiltonian <path>        # resolved against the config's directory
///   chi <word> | chi_index <k>
///   mode full|shortcut
///   tau <v>        steps <k>      seed <k>
///   initial zeros|plus|<bitstring>
///   threshold <v>  # leakage failure threshold
struct ProtocolConfig {
  std::string hamiltonian_path;
  ChiSelector selector;
  ProtocolMode mode = ProtocolMode::full_decode;
  double tau = 1.0;
  std::size_t steps = 100;
  std::uint64_t seed = 0;
  std::string initial = "zeros";
  double fail_threshold = kLeakageThreshold;
  std::size_t cap = kDefaultQubitCap;
};

ProtocolConfig parse_protocol_config(std::string_view text);

struct ProtocolWorkflowOutcome {
  bool passed = false;
  std::string report;
};

/// Runs the preparation pipeline on a frozen embedded Hamiltonian for
/// duration tau and reports leakage, branch statistics, gate counts, the
/// fidelity against direct unembedded evolution, and a sampled outcome
/// bitstring. `hamiltonian_text` is the content of the referenced file.
/// Leakage above the threshold and shortcut invariance violations are
/// reported as failed outcomes, not exceptions.
ProtocolWorkflowOutcome protocol_workflow(std::string_view hamiltonian_text,
                                          const ProtocolConfig& config);

struct SimulateOptions {
  double tau = 1.0;
  std::size_t steps = 100;
  std::string initial = "zeros";  ///< zeros | plus | literal bitstring.
  bool trajectory = false;
  std::size_t cap = kDefaultQubitCap;
};

struct SimulateOutcome {
  std::string report;
  std::string trajectory;  ///< Line-delimited dump when requested.
};

/// Integrates a frozen Hamiltonian and reports the sorted spectrum plus
/// final-state statistics; optionally dumps the full trajectory, one
/// line per sample: `t <time>` followed by interleaved re/im amplitudes.
SimulateOutcome simulate_workflow(std::string_view hamiltonian_text,
                                  const SimulateOptions& options);

}  // namespace qlr

#endif  // QLR_WORKFLOWS_HPP
