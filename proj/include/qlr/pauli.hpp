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

#ifndef QLR_PAULI_HPP
#define QLR_PAULI_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qlr {

/// Error raised while reading any of the textual formats. The message
/// carries a character position (single strings) or a line number (files).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Single-qubit Pauli axis. The identity is a valid axis so that strings
/// can act trivially on part of the register.
enum class PauliAxis : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// Upper-case letter for an axis.
char axis_char(PauliAxis axis);

/// Inverse of axis_char, case-insensitive. Throws ParseError on any other
/// character.
PauliAxis axis_from_char(char c);

/// Exact fourth root of unity i^k. Products of Pauli strings never leave
/// this set, so the phase is tracked as an integer exponent, not a complex
/// number.
class Phase {
 public:
  constexpr Phase() = default;

  static constexpr Phase plus_one() { return Phase(0); }
  static constexpr Phase plus_i() { return Phase(1); }
  static constexpr Phase minus_one() { return Phase(2); }
  static constexpr Phase minus_i() { return Phase(3); }

  /// Exponent k in i^k, reduced to 0..3.
  constexpr int exponent() const { return k_; }
  constexpr bool is_real() const { return (k_ & 1) == 0; }

  constexpr Phase operator*(Phase other) const {
    return Phase((k_ + other.k_) & 3);
  }

  std::complex<double> value() const;

  /// "+1", "+i", "-1" or "-i".
  std::string str() const;

  friend constexpr bool operator==(Phase a, Phase b) { return a.k_ == b.k_; }
  friend constexpr bool operator!=(Phase a, Phase b) { return a.k_ != b.k_; }

 private:
  explicit constexpr Phase(int k) : k_(k & 3) {}
  int k_ = 0;
};

/// Fixed-length word of Pauli axes, one per qubit. Qubit 0 is the leftmost
/// character of the printed form. Immutable after construction.
class PauliString {
 public:
  explicit PauliString(std::vector<PauliAxis> axes);

  /// All-identity string on n qubits.
  static PauliString identity(std::size_t n);

  /// Reads a word over {I,X,Y,Z}, case-insensitive. Throws ParseError with
  /// the 0-based position of the first bad character.
  static PauliString parse(std::string_view text);

  std::size_t size() const { return axes_.size(); }
  PauliAxis axis(std::size_t qubit) const { return axes_.at(qubit); }
  const std::vector<PauliAxis>& axes() const { return axes_; }

  /// Number of qubits acted on non-trivially.
  int locality() const;

  /// Indices of the non-identity axes, ascending.
  std::vector<std::size_t> support() const;

  bool is_identity() const { return locality() == 0; }

  /// True when every non-identity axis is the same letter (and there is at
  /// least one). Identity strings are not uniform.
  bool is_uniform() const;

  /// The shared axis of a uniform string, PauliAxis::I otherwise.
  PauliAxis uniform_axis() const;

  std::string str() const;

  /// New string with one axis prepended as qubit 0; the old qubit i becomes
  /// qubit i+1.
  PauliString prepended(PauliAxis axis) const;

  friend bool operator==(const PauliString& a, const PauliString& b) {
    return a.axes_ == b.axes_;
  }
  friend bool operator!=(const PauliString& a, const PauliString& b) {
    return !(a == b);
  }
  /// Lexicographic by printed character (I < X < Y < Z).
  friend bool operator<(const PauliString& a, const PauliString& b) {
    return a.axes_ < b.axes_;
  }

 private:
  std::vector<PauliAxis> axes_;
};

/// Result of a qubit-wise string product: product = phase * string.
struct ProductResult {
  Phase phase;
  PauliString string;
};

/// Qubit-wise product with exact phase. Throws std::invalid_argument on
/// length mismatch.
ProductResult multiply(const PauliString& a, const PauliString& b);

/// Two strings commute exactly when the number of positions where both act
/// non-trivially with different axes is even; otherwise they anticommute.
bool commutes(const PauliString& a, const PauliString& b);

/// One weighted string of a Hamiltonian. Coefficients are real; complex
/// weights never arise for Hermitian sums of Pauli words.
struct PauliTerm {
  double coefficient = 0.0;
  PauliString string;

  friend bool operator==(const PauliTerm& a, const PauliTerm& b) {
    return a.coefficient == b.coefficient && a.string == b.string;
  }
};

/// Real-weighted sum of Pauli strings on a fixed register. Terms are kept
/// as given; normalized() produces the canonical form (sorted by string,
/// duplicates merged, zero coefficients dropped).
class Hamiltonian {
 public:
  explicit Hamiltonian(std::size_t n_qubits, std::vector<PauliTerm> terms = {});

  std::size_t n_qubits() const { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }

  /// Canonical form. Idempotent; the result never depends on the order in
  /// which equal-string terms were listed.
  Hamiltonian normalized() const;

  bool is_normalized() const;

  friend bool operator==(const Hamiltonian& a, const Hamiltonian& b) {
    return a.n_qubits_ == b.n_qubits_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Hamiltonian& a, const Hamiltonian& b) {
    return !(a == b);
  }

 private:
  std::size_t n_qubits_;
  std::vector<PauliTerm> terms_;
};

/// Largest term locality of the normalized form; 0 for an empty sum.
int hamiltonian_locality(const Hamiltonian& h);

/// Sum on a shared register (normalized result).
Hamiltonian operator+(const Hamiltonian& a, const Hamiltonian& b);

/// Scalar multiple (normalized result).
Hamiltonian operator*(double factor, const Hamiltonian& h);

/// Reads the Hamiltonian text format:
///
///   qubits N
///   <coefficient> <string>     # one term per line
///
/// '#' starts a comment, blank lines are skipped. Throws ParseError with a
/// 1-based line number.
Hamiltonian parse_hamiltonian(std::string_view text);

/// Writes the text format: "qubits N" followed by the normalized terms,
/// coefficients printed with 17 significant digits so values round-trip
/// exactly.
std::string format_hamiltonian(const Hamiltonian& h);

/// 17-significant-digit decimal form used by every emitter.
std::string format_coefficient(double value);

}  // namespace qlr

#endif  // QLR_PAULI_HPP
