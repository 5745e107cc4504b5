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
// Ancilla embedding that trades one many-body term chi of an N-qubit
// Hamiltonian H = H* + h_chi*O(chi) for a single ancilla qubit. Writing
// chi as a product of two commuting factors O(chi) = O(chi')*O(chi''),
// the physical Hamiltonian on N+1 qubits is
//
//   H~ = 1 (x) Hc  +  Z_a (x) Ha  +  h_chi * X_a (x) O(chi'')
//
// where Hc/Ha collect the H* terms that commute/anticommute with O(chi')
// and the ancilla a is prepended as qubit 0. Conjugating 1 (x) H* +
// h_chi * X_a (x) O(chi) with the controlled-Pauli word
//
//   U = |0><0| (x) 1 + |1><1| (x) O(chi')
//
// yields exactly H~, so U maps the |+>/|-> ancilla sectors onto two exactly
// decoupled blocks: the |+> block reproduces H and the |-> block reproduces
// H with the chi coefficient negated. Locality drops whenever chi'' is
// shorter than chi and the anticommuting terms are short.

#ifndef QLR_EMBEDDING_HPP
#define QLR_EMBEDDING_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qlr/pauli.hpp"

namespace qlr {

/// Default support-size limit below which factorization search is
/// exhaustive.
inline constexpr int kDefaultMaskBudget = 16;

/// Terms of a Hamiltonian routed by commutation against a fixed string.
struct CommutationSplit {
  Hamiltonian commuting;
  Hamiltonian anticommuting;
};

/// Routes every term of h by whether it commutes with chi_prime. Both
/// pieces keep the register size of h.
CommutationSplit split_commuting(const Hamiltonian& h,
                                 const PauliString& chi_prime);

/// Per-qubit selection of the factor absorbed into the basis change.
///
/// A set bit on a support qubit of chi moves that axis into chi'; a clear
/// bit leaves it in chi''. A set bit on a qubit outside chi's support adds
/// the uniform axis of chi to *both* factors there (they cancel in the
/// product), which is only meaningful when chi is uniform; for mixed-axis
/// strings such bits are ignored.
class FactorMask {
 public:
  explicit FactorMask(std::vector<bool> bits);

  static FactorMask none(std::size_t n);
  static FactorMask all(std::size_t n);
  /// Exactly chi's support; the choice that makes chi'' the identity.
  static FactorMask support(const PauliString& chi);
  /// Reads a word over {0,1}. Throws ParseError.
  static FactorMask parse(std::string_view bits);

  std::size_t size() const { return bits_.size(); }
  bool bit(std::size_t qubit) const { return bits_.at(qubit); }
  FactorMask with_bit(std::size_t qubit) const;

  std::string str() const;

  friend bool operator==(const FactorMask& a, const FactorMask& b) {
    return a.bits_ == b.bits_;
  }
  friend bool operator!=(const FactorMask& a, const FactorMask& b) {
    return !(a == b);
  }

 private:
  std::vector<bool> bits_;
};

/// chi split into the basis-change factor chi' and the residual factor
/// chi'' with O(chi) = O(chi')*O(chi'') at phase +1 and [O(chi'),O(chi'')]=0.
struct Factorization {
  PauliString basis_factor;
  PauliString residual;
};

/// Applies a mask to chi. Throws std::invalid_argument on length mismatch.
Factorization factorize(const PauliString& chi, const FactorMask& mask);

/// One two-qubit controlled-Pauli gate: applies `axis` on `target` when
/// `control` is set. Targets are system-qubit indices; the ancilla control
/// sits in front of the system register.
struct ControlledGate {
  std::size_t control = 0;
  std::size_t target = 0;
  PauliAxis axis = PauliAxis::I;

  friend bool operator==(const ControlledGate& a, const ControlledGate& b) {
    return a.control == b.control && a.target == b.target && a.axis == b.axis;
  }
};

using ControlledGateSequence = std::vector<ControlledGate>;

/// One gate per non-identity axis of the basis factor, ascending target
/// index. Their product is the basis-change word U.
ControlledGateSequence controlled_gates(const PauliString& basis_factor,
                                        std::size_t ancilla);

/// Everything produced by one embedding round.
struct EmbeddingResult {
  Hamiltonian physical;        ///< N+1 qubits, normalized.
  std::size_t ancilla_index;   ///< Always 0: the ancilla is prepended.
  FactorMask mask;             ///< Over the N system qubits.
  CommutationSplit split;      ///< H* routed against the basis factor.
  ControlledGateSequence gates;
  PauliString chi;             ///< Replaced system string.
  double chi_coefficient;
  PauliString basis_factor;    ///< chi'.
  PauliString residual;        ///< chi''.
};

/// Embeds with the support mask, i.e. the whole of chi moves into the
/// basis change and the ancilla term is a bare X. Errors: chi.string
/// absent from h, identity chi, or a coefficient that disagrees with h.
EmbeddingResult embed(const Hamiltonian& h, const PauliTerm& chi);

/// Embeds with an explicit factorization mask.
EmbeddingResult embed(const Hamiltonian& h, const PauliTerm& chi,
                      const FactorMask& mask);

/// Embeds one summand of a time-dependent Hamiltonian with a fixed
/// factorization of chi. Terms commute/anticommute-route as usual; if the
/// piece contains chi's string, that term is replaced by the residual term
/// with the piece's own coefficient. Shared across pieces, this keeps one
/// basis change for the whole schedule.
Hamiltonian embed_piece(const Hamiltonian& piece, const PauliString& chi,
                        const FactorMask& mask);

/// H with chi's coefficient negated: the generator of the second,
/// decoupled block. A zero-coefficient chi leaves h unchanged.
Hamiltonian complement_hamiltonian(const Hamiltonian& h, const PauliTerm& chi);

/// Searches factorization masks for the one minimizing, in order: the
/// locality of the embedded Hamiltonian, the number of anticommuting
/// terms, the locality of the residual. Candidate qubits are chi's
/// support, widened to the whole register for uniform chi. Exhaustive up
/// to `budget` candidates, greedy beyond (each step moves in the qubit
/// with the best locality improvement, ties to the lowest index).
FactorMask choose_factorization(const Hamiltonian& h, const PauliTerm& chi,
                                int budget = kDefaultMaskBudget);

/// Outcome of eliminating several terms in sequence. Round r of `rounds`
/// acted on a register of N+r qubits; its gates apply after round r-1's.
struct RepeatedEmbedding {
  Hamiltonian physical;
  std::vector<EmbeddingResult> rounds;
};

/// Eliminates the listed terms in caller order, one ancilla per round,
/// choosing a factorization per round. A chi given with fewer axes than
/// the current register is re-identified by matching the original axes
/// behind any {I,Z} ancilla prefix; a chi that cannot be found reports its
/// round index.
RepeatedEmbedding embed_all(const Hamiltonian& h,
                            const std::vector<PauliTerm>& chis,
                            int budget = kDefaultMaskBudget);

/// Serializes one round to the embedding report format (versioned header,
/// mask/gate/census lines, physical Hamiltonian block).
std::string format_embedding(const EmbeddingResult& result);

/// Parses the report format back. Structural fields (strings, mask,
/// gates) are cross-checked; coefficients are taken as written so that
/// verification, not parsing, judges them.
EmbeddingResult parse_embedding(std::string_view text);

}  // namespace qlr

#endif  // QLR_EMBEDDING_HPP
