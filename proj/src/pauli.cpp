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

#include "qlr/pauli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "text_util.hpp"

namespace qlr {

using detail::fail_line;
using detail::parse_double_token;
using detail::parse_long_token;
using detail::split_tokens;

namespace {

constexpr PauliAxis kAxes[4] = {PauliAxis::I, PauliAxis::X, PauliAxis::Y,
                                PauliAxis::Z};

// kProductAxis[a][b] is the axis of a*b; kProductPhase[a][b] the exponent
// of i in the scalar prefactor (X*Y = +iZ, Y*X = -iZ, cyclically).
constexpr std::uint8_t kProductAxis[4][4] = {
    {0, 1, 2, 3},
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
};
constexpr std::uint8_t kProductPhase[4][4] = {
    {0, 0, 0, 0},
    {0, 0, 1, 3},
    {0, 3, 0, 1},
    {0, 1, 3, 0},
};

Phase phase_from_exponent(int k) {
  switch (k & 3) {
    case 0: return Phase::plus_one();
    case 1: return Phase::plus_i();
    case 2: return Phase::minus_one();
    default: return Phase::minus_i();
  }
}

}  // namespace

char axis_char(PauliAxis axis) {
  switch (axis) {
    case PauliAxis::I: return 'I';
    case PauliAxis::X: return 'X';
    case PauliAxis::Y: return 'Y';
    case PauliAxis::Z: return 'Z';
  }
  return '?';
}

PauliAxis axis_from_char(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'I': return PauliAxis::I;
    case 'X': return PauliAxis::X;
    case 'Y': return PauliAxis::Y;
    case 'Z': return PauliAxis::Z;
  }
  throw ParseError(std::string("invalid Pauli character '") + c + "'");
}

std::complex<double> Phase::value() const {
  switch (k_) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

std::string Phase::str() const {
  switch (k_) {
    case 0: return "+1";
    case 1: return "+i";
    case 2: return "-1";
    default: return "-i";
  }
}

PauliString::PauliString(std::vector<PauliAxis> axes) : axes_(std::move(axes)) {
  if (axes_.empty())
    throw std::invalid_argument("Pauli string must cover at least one qubit");
}

PauliString PauliString::identity(std::size_t n) {
  return PauliString(std::vector<PauliAxis>(n, PauliAxis::I));
}

PauliString PauliString::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty Pauli string");
  std::vector<PauliAxis> axes;
  axes.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    try {
      axes.push_back(axis_from_char(text[i]));
    } catch (const ParseError&) {
      throw ParseError(std::string("invalid Pauli character '") + text[i] +
                       "' at position " + std::to_string(i));
    }
  }
  return PauliString(std::move(axes));
}

int PauliString::locality() const {
  int count = 0;
  for (PauliAxis a : axes_)
    if (a != PauliAxis::I) ++count;
  return count;
}

std::vector<std::size_t> PauliString::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < axes_.size(); ++i)
    if (axes_[i] != PauliAxis::I) out.push_back(i);
  return out;
}

bool PauliString::is_uniform() const {
  PauliAxis seen = PauliAxis::I;
  for (PauliAxis a : axes_) {
    if (a == PauliAxis::I) continue;
    if (seen == PauliAxis::I) {
      seen = a;
    } else if (a != seen) {
      return false;
    }
  }
  return seen != PauliAxis::I;
}

PauliAxis PauliString::uniform_axis() const {
  return is_uniform() ? *std::find_if(axes_.begin(), axes_.end(),
                                      [](PauliAxis a) { return a != PauliAxis::I; })
                      : PauliAxis::I;
}

std::string PauliString::str() const {
  std::string out;
  out.reserve(axes_.size());
  for (PauliAxis a : axes_) out.push_back(axis_char(a));
  return out;
}

PauliString PauliString::prepended(PauliAxis axis) const {
  std::vector<PauliAxis> axes;
  axes.reserve(axes_.size() + 1);
  axes.push_back(axis);
  axes.insert(axes.end(), axes_.begin(), axes_.end());
  return PauliString(std::move(axes));
}

ProductResult multiply(const PauliString& a, const PauliString& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("Pauli string length mismatch: " +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
  std::vector<PauliAxis> axes(a.size());
  int exponent = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto ai = static_cast<std::uint8_t>(a.axis(i));
    const auto bi = static_cast<std::uint8_t>(b.axis(i));
    axes[i] = kAxes[kProductAxis[ai][bi]];
    exponent += kProductPhase[ai][bi];
  }
  return {phase_from_exponent(exponent), PauliString(std::move(axes))};
}

bool commutes(const PauliString& a, const PauliString& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("Pauli string length mismatch: " +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
  int clashes = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const PauliAxis ai = a.axis(i);
    const PauliAxis bi = b.axis(i);
    if (ai != PauliAxis::I && bi != PauliAxis::I && ai != bi) ++clashes;
  }
  return (clashes % 2) == 0;
}

Hamiltonian::Hamiltonian(std::size_t n_qubits, std::vector<PauliTerm> terms)
    : n_qubits_(n_qubits), terms_(std::move(terms)) {
  if (n_qubits_ == 0)
    throw std::invalid_argument("Hamiltonian needs at least one qubit");
  for (const PauliTerm& t : terms_) {
    if (t.string.size() != n_qubits_)
      throw std::invalid_argument("term '" + t.string.str() +
                                  "' does not match register size " +
                                  std::to_string(n_qubits_));
    if (!std::isfinite(t.coefficient))
      throw std::invalid_argument("non-finite coefficient on term '" +
                                  t.string.str() + "'");
  }
}

Hamiltonian Hamiltonian::normalized() const {
  std::vector<PauliTerm> sorted = terms_;
  // Sorting by (string, coefficient) before accumulating makes the merged
  // sums independent of the caller's term order.
  std::sort(sorted.begin(), sorted.end(),
            [](const PauliTerm& a, const PauliTerm& b) {
              if (a.string != b.string) return a.string < b.string;
              return a.coefficient < b.coefficient;
            });
  std::vector<PauliTerm> merged;
  merged.reserve(sorted.size());
  std::size_t i = 0;
  while (i < sorted.size()) {
    double sum = sorted[i].coefficient;
    std::size_t j = i + 1;
    while (j < sorted.size() && sorted[j].string == sorted[i].string) {
      sum += sorted[j].coefficient;
      ++j;
    }
    if (sum != 0.0) merged.push_back({sum, sorted[i].string});
    i = j;
  }
  return Hamiltonian(n_qubits_, std::move(merged));
}

bool Hamiltonian::is_normalized() const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coefficient == 0.0) return false;
    if (i > 0 && !(terms_[i - 1].string < terms_[i].string)) return false;
  }
  return true;
}

int hamiltonian_locality(const Hamiltonian& h) {
  const Hamiltonian canon = h.normalized();
  int max_locality = 0;
  for (const PauliTerm& t : canon.terms())
    max_locality = std::max(max_locality, t.string.locality());
  return max_locality;
}

Hamiltonian operator+(const Hamiltonian& a, const Hamiltonian& b) {
  if (a.n_qubits() != b.n_qubits())
    throw std::invalid_argument("cannot add Hamiltonians on different registers");
  std::vector<PauliTerm> terms = a.terms();
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return Hamiltonian(a.n_qubits(), std::move(terms)).normalized();
}

Hamiltonian operator*(double factor, const Hamiltonian& h) {
  if (!std::isfinite(factor))
    throw std::invalid_argument("non-finite scale factor");
  std::vector<PauliTerm> terms = h.terms();
  for (PauliTerm& t : terms) t.coefficient *= factor;
  return Hamiltonian(h.n_qubits(), std::move(terms)).normalized();
}

Hamiltonian parse_hamiltonian(std::string_view text) {
  std::vector<PauliTerm> terms;
  std::size_t n_qubits = 0;
  bool have_header = false;

  detail::LineScanner scan(text);
  while (scan.next()) {
    const std::size_t line_no = scan.line_no();
    const std::vector<std::string> tokens = split_tokens(scan.line());
    if (!have_header) {
      if (tokens.size() != 2 || tokens[0] != "qubits")
        fail_line(line_no, "expected 'qubits N' before any term");
      const long n = parse_long_token(tokens[1], line_no, "qubit count");
      if (n <= 0) fail_line(line_no, "bad qubit count '" + tokens[1] + "'");
      n_qubits = static_cast<std::size_t>(n);
      have_header = true;
      continue;
    }
    if (tokens[0] == "qubits") fail_line(line_no, "duplicate 'qubits' line");
    if (tokens.size() != 2)
      fail_line(line_no, "expected '<coefficient> <string>'");
    const double coefficient = parse_double_token(tokens[0], line_no);
    PauliString string = PauliString::identity(1);
    try {
      string = PauliString::parse(tokens[1]);
    } catch (const ParseError& e) {
      fail_line(line_no, e.what());
    }
    if (string.size() != n_qubits)
      fail_line(line_no, "term '" + tokens[1] + "' has length " +
                             std::to_string(string.size()) + ", expected " +
                             std::to_string(n_qubits));
    terms.push_back({coefficient, std::move(string)});
  }
  if (!have_header) throw ParseError("missing 'qubits N' header");
  return Hamiltonian(n_qubits, std::move(terms));
}

std::string format_coefficient(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string format_hamiltonian(const Hamiltonian& h) {
  const Hamiltonian canon = h.normalized();
  std::string out = "qubits " + std::to_string(canon.n_qubits()) + "\n";
  for (const PauliTerm& t : canon.terms()) {
    out += format_coefficient(t.coefficient);
    out += ' ';
    out += t.string.str();
    out += '\n';
  }
  return out;
}

}  // namespace qlr
