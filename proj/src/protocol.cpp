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

#include "qlr/protocol.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qlr {

namespace {

void require_normalized(const StateVector& state, const char* what) {
  if (std::abs(state.norm() - 1.0) > 1e-8)
    throw std::invalid_argument(std::string(what) + " is not normalized");
}

std::size_t system_qubits(const EmbeddingResult& emb) {
  return emb.physical.n_qubits() - 1;
}

void require_dimension(const StateVector& state, std::size_t n_qubits,
                       const char* what) {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  if (state.size() != dim)
    throw std::invalid_argument(std::string(what) + " has dimension " +
                                std::to_string(state.size()) + ", expected " +
                                std::to_string(dim));
}

}  // namespace

StateVector encode(const StateVector& psi0, const EmbeddingResult& emb) {
  require_dimension(psi0, system_qubits(emb), "initial state");
  require_normalized(psi0, "initial state");
  StateVector lifted = prepend_plus_ancilla(psi0);
  apply_basis_change(lifted, emb);
  return lifted;
}

DecodeResult decode(const StateVector& psi_tilde, const EmbeddingResult& emb,
                    double fail_threshold) {
  const std::size_t n = system_qubits(emb);
  require_dimension(psi_tilde, n + 1, "physical state");
  require_normalized(psi_tilde, "physical state");

  StateVector undone = psi_tilde;
  apply_basis_change(undone, emb);

  const Eigen::Index dim = Eigen::Index{1} << n;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  StateVector plus(dim);
  double leakage = 0.0;
  for (Eigen::Index s = 0; s < dim; ++s) {
    plus[s] = (undone[s] + undone[dim + s]) * inv_sqrt2;
    leakage += std::norm((undone[s] - undone[dim + s]) * inv_sqrt2);
  }

  if (leakage > fail_threshold) {
    std::ostringstream msg;
    msg << "leakage " << leakage << " exceeds the threshold "
        << fail_threshold;
    throw LeakageError(msg.str());
  }
  const double remaining = plus.norm();
  if (remaining == 0.0)
    throw LeakageError("the ancilla plus branch is empty");
  return {plus / remaining, leakage};
}

double invariance_deviation(const StateVector& psi0, const PauliString& chi) {
  require_dimension(psi0, chi.size(), "state");
  StateVector image = psi0;
  apply_string(image, chi);
  return (image - psi0).norm();
}

bool check_invariance(const StateVector& psi0, const PauliString& chi) {
  return invariance_deviation(psi0, chi) <= kInvarianceTolerance;
}

std::vector<MeasurementOutcome> shortcut_branches(const StateVector& psi_tilde,
                                                  const EmbeddingResult& emb) {
  const std::size_t n = system_qubits(emb);
  require_dimension(psi_tilde, n + 1, "physical state");
  require_normalized(psi_tilde, "physical state");

  const Eigen::Index dim = Eigen::Index{1} << n;
  std::vector<MeasurementOutcome> branches;
  for (int bit = 0; bit < 2; ++bit) {
    MeasurementOutcome out;
    out.ancilla = bit;
    StateVector block = psi_tilde.segment(bit ? dim : 0, dim);
    out.probability = block.squaredNorm();
    if (out.probability > 0.0) {
      block /= std::sqrt(out.probability);
      if (bit == 1) {
        for (std::size_t q = 0; q < n; ++q) {
          const PauliAxis axis = emb.basis_factor.axis(q);
          if (axis != PauliAxis::I) apply_axis(block, n, q, axis);
        }
      }
      out.system = std::move(block);
    }
    branches.push_back(std::move(out));
  }
  return branches;
}

MeasurementOutcome shortcut_measure(const StateVector& psi_tilde,
                                    const EmbeddingResult& emb,
                                    std::uint64_t seed) {
  std::vector<MeasurementOutcome> branches = shortcut_branches(psi_tilde, emb);
  std::mt19937_64 rng(seed);
  const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  return u < branches[0].probability ? std::move(branches[0])
                                     : std::move(branches[1]);
}

std::uint64_t sample_bits(const StateVector& state, std::uint64_t seed) {
  require_normalized(state, "state");
  std::mt19937_64 rng(seed);
  const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  double cumulative = 0.0;
  for (Eigen::Index s = 0; s < state.size(); ++s) {
    cumulative += std::norm(state[s]);
    if (u < cumulative) return static_cast<std::uint64_t>(s);
  }
  return static_cast<std::uint64_t>(state.size() - 1);
}

std::uint64_t reinterpret_bits(std::uint64_t system_bits, int ancilla_bit,
                               const PauliString& chi) {
  if (ancilla_bit != 0 && ancilla_bit != 1)
    throw std::invalid_argument("ancilla bit must be 0 or 1");
  const std::size_t n = chi.size();
  if (n > 64)
    throw std::invalid_argument("register too wide for a 64-bit bitstring");
  if (n < 64 && system_bits >> n)
    throw std::invalid_argument("bitstring does not fit the register");
  std::uint64_t flip = 0;
  for (std::size_t q = 0; q < n; ++q) {
    switch (chi.axis(q)) {
      case PauliAxis::I:
        break;
      case PauliAxis::X:
        flip |= std::uint64_t{1} << (n - 1 - q);
        break;
      default:
        throw std::invalid_argument(
            "reinterpretation needs an x-only interaction, got '" +
            chi.str() + "'");
    }
  }
  return ancilla_bit ? system_bits ^ flip : system_bits;
}

ProtocolReport run_protocol(const PreparationRun& run) {
  const std::size_t n = system_qubits(run.embedding);
  if (run.evolution.scheduled.n_qubits() != n + 1)
    throw std::invalid_argument("evolution acts on " +
                                std::to_string(run.evolution.scheduled.n_qubits()) +
                                " qubits, embedding needs " +
                                std::to_string(n + 1));
  require_dimension(run.initial, n, "initial state");
  require_normalized(run.initial, "initial state");

  const std::size_t word_gates = run.embedding.gates.size();
  ProtocolReport report;
  report.mode = run.mode;

  if (run.mode == ProtocolMode::full_decode) {
    const StateVector encoded = encode(run.initial, run.embedding);
    const StateVector evolved = evolve(run.evolution, encoded, nullptr, run.cap);
    const DecodeResult decoded =
        decode(evolved, run.embedding, run.fail_threshold);
    report.system = decoded.system;
    report.leakage = decoded.leakage;
    report.branch_probability = 1.0 - decoded.leakage;
    report.encode_gates = word_gates;
    report.decode_gates = word_gates;
    return report;
  }

  // Skipping the encoding word is exact only when the word acts trivially
  // on the input, so the basis factor must fix it along with the full
  // interaction string.
  for (const PauliString* s : {&run.embedding.chi, &run.embedding.basis_factor}) {
    const double deviation = invariance_deviation(run.initial, *s);
    if (deviation > kInvarianceTolerance) {
      std::ostringstream msg;
      msg << "initial state is not invariant under '" << s->str()
          << "': deviation " << deviation;
      throw InvarianceError(msg.str());
    }
  }

  const StateVector lifted = prepend_plus_ancilla(run.initial);
  const StateVector evolved = evolve(run.evolution, lifted, nullptr, run.cap);
  MeasurementOutcome outcome =
      shortcut_measure(evolved, run.embedding, run.seed);
  report.system = std::move(outcome.system);
  report.ancilla = outcome.ancilla;
  report.branch_probability = outcome.probability;
  report.correction_gates =
      outcome.ancilla == 1 ? run.embedding.basis_factor.locality() : 0;
  return report;
}

}  // namespace qlr
