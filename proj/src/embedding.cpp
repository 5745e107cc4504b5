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

#include "qlr/embedding.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <tuple>

#include "text_util.hpp"

namespace qlr {

using detail::fail_line;
using detail::parse_double_token;
using detail::parse_long_token;
using detail::split_tokens;

namespace {

constexpr std::string_view kEmbeddingHeader = "qlr embedding v1";

// Locates chi inside the normalized h and returns h without that term.
// The chi argument must carry the coefficient h itself lists.
Hamiltonian remove_chi(const Hamiltonian& h, const PauliTerm& chi) {
  if (chi.string.size() != h.n_qubits())
    throw std::invalid_argument("chi '" + chi.string.str() +
                                "' does not match register size " +
                                std::to_string(h.n_qubits()));
  if (chi.string.is_identity())
    throw std::invalid_argument("chi must not be the identity string");
  const Hamiltonian canon = h.normalized();
  std::vector<PauliTerm> rest;
  rest.reserve(canon.terms().size());
  bool found = false;
  for (const PauliTerm& t : canon.terms()) {
    if (t.string == chi.string) {
      if (t.coefficient != chi.coefficient)
        throw std::invalid_argument(
            "chi coefficient " + format_coefficient(chi.coefficient) +
            " disagrees with the Hamiltonian's " +
            format_coefficient(t.coefficient) + " on '" + chi.string.str() +
            "'");
      found = true;
      continue;
    }
    rest.push_back(t);
  }
  if (!found)
    throw std::invalid_argument("chi '" + chi.string.str() +
                                "' is not a term of the Hamiltonian");
  return Hamiltonian(h.n_qubits(), std::move(rest));
}

// Bits on identity positions only act for uniform chi; elsewhere they are
// dropped so stored masks are canonical.
FactorMask effective_mask(const PauliString& chi, const FactorMask& mask) {
  if (mask.size() != chi.size())
    throw std::invalid_argument("mask length " + std::to_string(mask.size()) +
                                " does not match chi length " +
                                std::to_string(chi.size()));
  if (chi.is_uniform()) return mask;
  std::vector<bool> bits(chi.size(), false);
  for (std::size_t q = 0; q < chi.size(); ++q)
    bits[q] = mask.bit(q) && chi.axis(q) != PauliAxis::I;
  return FactorMask(std::move(bits));
}

// Number of distinct qubits sharing a term with the ancilla.
std::size_t ancilla_degree(const Hamiltonian& physical, std::size_t ancilla) {
  const Hamiltonian canon = physical.normalized();
  std::vector<bool> touched(physical.n_qubits(), false);
  for (const PauliTerm& t : canon.terms()) {
    if (t.string.axis(ancilla) == PauliAxis::I) continue;
    for (std::size_t q = 0; q < t.string.size(); ++q)
      if (q != ancilla && t.string.axis(q) != PauliAxis::I) touched[q] = true;
  }
  std::size_t degree = 0;
  for (bool b : touched) degree += b ? 1 : 0;
  return degree;
}

// Smaller is better: locality of the embedded Hamiltonian, then the number
// of anticommuting terms, then the locality of the residual.
using MaskKey = std::tuple<int, std::size_t, int>;

MaskKey mask_key(const Hamiltonian& h, const PauliTerm& chi,
                 const FactorMask& mask) {
  const EmbeddingResult result = embed(h, chi, mask);
  return {hamiltonian_locality(result.physical),
          result.split.anticommuting.terms().size(),
          result.residual.locality()};
}

}  // namespace

CommutationSplit split_commuting(const Hamiltonian& h,
                                 const PauliString& chi_prime) {
  if (chi_prime.size() != h.n_qubits())
    throw std::invalid_argument("chi' length " +
                                std::to_string(chi_prime.size()) +
                                " does not match register size " +
                                std::to_string(h.n_qubits()));
  std::vector<PauliTerm> comm;
  std::vector<PauliTerm> anti;
  for (const PauliTerm& t : h.terms())
    (commutes(t.string, chi_prime) ? comm : anti).push_back(t);
  return {Hamiltonian(h.n_qubits(), std::move(comm)),
          Hamiltonian(h.n_qubits(), std::move(anti))};
}

FactorMask::FactorMask(std::vector<bool> bits) : bits_(std::move(bits)) {
  if (bits_.empty())
    throw std::invalid_argument("factor mask must cover at least one qubit");
}

FactorMask FactorMask::none(std::size_t n) {
  return FactorMask(std::vector<bool>(n, false));
}

FactorMask FactorMask::all(std::size_t n) {
  return FactorMask(std::vector<bool>(n, true));
}

FactorMask FactorMask::support(const PauliString& chi) {
  std::vector<bool> bits(chi.size(), false);
  for (std::size_t q : chi.support()) bits[q] = true;
  return FactorMask(std::move(bits));
}

FactorMask FactorMask::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty factor mask");
  std::vector<bool> bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1')
      throw ParseError(std::string("invalid mask character '") + text[i] +
                       "' at position " + std::to_string(i));
    bits.push_back(text[i] == '1');
  }
  return FactorMask(std::move(bits));
}

FactorMask FactorMask::with_bit(std::size_t qubit) const {
  std::vector<bool> bits = bits_;
  bits.at(qubit) = true;
  return FactorMask(std::move(bits));
}

std::string FactorMask::str() const {
  std::string out;
  out.reserve(bits_.size());
  for (bool b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

Factorization factorize(const PauliString& chi, const FactorMask& mask) {
  const FactorMask eff = effective_mask(chi, mask);
  const PauliAxis uniform = chi.uniform_axis();
  std::vector<PauliAxis> basis(chi.size(), PauliAxis::I);
  std::vector<PauliAxis> residual(chi.size(), PauliAxis::I);
  for (std::size_t q = 0; q < chi.size(); ++q) {
    const PauliAxis axis = chi.axis(q);
    if (axis != PauliAxis::I) {
      (eff.bit(q) ? basis : residual)[q] = axis;
    } else if (eff.bit(q)) {
      basis[q] = uniform;
      residual[q] = uniform;
    }
  }
  return {PauliString(std::move(basis)), PauliString(std::move(residual))};
}

ControlledGateSequence controlled_gates(const PauliString& basis_factor,
                                        std::size_t ancilla) {
  ControlledGateSequence gates;
  for (std::size_t q : basis_factor.support())
    gates.push_back({ancilla, q, basis_factor.axis(q)});
  return gates;
}

EmbeddingResult embed(const Hamiltonian& h, const PauliTerm& chi) {
  return embed(h, chi, FactorMask::support(chi.string));
}

EmbeddingResult embed(const Hamiltonian& h, const PauliTerm& chi,
                      const FactorMask& mask) {
  const Hamiltonian h_star = remove_chi(h, chi);
  const FactorMask eff = effective_mask(chi.string, mask);
  const Factorization factors = factorize(chi.string, eff);
  const CommutationSplit split = split_commuting(h_star, factors.basis_factor);

  std::vector<PauliTerm> physical;
  physical.reserve(h_star.terms().size() + 1);
  for (const PauliTerm& t : split.commuting.terms())
    physical.push_back({t.coefficient, t.string.prepended(PauliAxis::I)});
  for (const PauliTerm& t : split.anticommuting.terms())
    physical.push_back({t.coefficient, t.string.prepended(PauliAxis::Z)});
  physical.push_back(
      {chi.coefficient, factors.residual.prepended(PauliAxis::X)});

  return {.physical =
              Hamiltonian(h.n_qubits() + 1, std::move(physical)).normalized(),
          .ancilla_index = 0,
          .mask = eff,
          .split = split,
          .gates = controlled_gates(factors.basis_factor, 0),
          .chi = chi.string,
          .chi_coefficient = chi.coefficient,
          .basis_factor = factors.basis_factor,
          .residual = factors.residual};
}

Hamiltonian embed_piece(const Hamiltonian& piece, const PauliString& chi,
                        const FactorMask& mask) {
  if (chi.size() != piece.n_qubits())
    throw std::invalid_argument("chi '" + chi.str() +
                                "' does not match register size " +
                                std::to_string(piece.n_qubits()));
  if (chi.is_identity())
    throw std::invalid_argument("chi must not be the identity string");
  const Factorization factors = factorize(chi, mask);

  std::vector<PauliTerm> physical;
  const Hamiltonian canon = piece.normalized();
  physical.reserve(canon.terms().size());
  for (const PauliTerm& t : canon.terms()) {
    if (t.string == chi) {
      physical.push_back(
          {t.coefficient, factors.residual.prepended(PauliAxis::X)});
    } else if (commutes(t.string, factors.basis_factor)) {
      physical.push_back({t.coefficient, t.string.prepended(PauliAxis::I)});
    } else {
      physical.push_back({t.coefficient, t.string.prepended(PauliAxis::Z)});
    }
  }
  return Hamiltonian(piece.n_qubits() + 1, std::move(physical)).normalized();
}

Hamiltonian complement_hamiltonian(const Hamiltonian& h, const PauliTerm& chi) {
  if (chi.coefficient == 0.0) return h.normalized();
  const Hamiltonian canon = h.normalized();
  std::vector<PauliTerm> terms;
  terms.reserve(canon.terms().size());
  bool found = false;
  for (const PauliTerm& t : canon.terms()) {
    if (t.string == chi.string) {
      if (t.coefficient != chi.coefficient)
        throw std::invalid_argument(
            "chi coefficient " + format_coefficient(chi.coefficient) +
            " disagrees with the Hamiltonian's " +
            format_coefficient(t.coefficient) + " on '" + chi.string.str() +
            "'");
      found = true;
      terms.push_back({-t.coefficient, t.string});
      continue;
    }
    terms.push_back(t);
  }
  if (!found)
    throw std::invalid_argument("chi '" + chi.string.str() +
                                "' is not a term of the Hamiltonian");
  return Hamiltonian(h.n_qubits(), std::move(terms));
}

FactorMask choose_factorization(const Hamiltonian& h, const PauliTerm& chi,
                                int budget) {
  if (budget <= 0) throw std::invalid_argument("budget must be positive");
  remove_chi(h, chi);  // Validates chi against h.

  // Identity positions only matter for uniform chi, where widening chi'
  // beyond the support can shorten the residual's reach.
  std::vector<std::size_t> candidates;
  if (chi.string.is_uniform()) {
    for (std::size_t q = 0; q < chi.string.size(); ++q) candidates.push_back(q);
  } else {
    candidates = chi.string.support();
  }
  const std::size_t n = chi.string.size();

  const std::size_t exhaustive_limit =
      std::min<std::size_t>(static_cast<std::size_t>(budget), 62);
  if (candidates.size() <= exhaustive_limit) {
    FactorMask best = FactorMask::none(n);
    MaskKey best_key = mask_key(h, chi, best);
    for (std::uint64_t word = 1; word < (std::uint64_t{1} << candidates.size());
         ++word) {
      std::vector<bool> bits(n, false);
      for (std::size_t j = 0; j < candidates.size(); ++j)
        if (word & (std::uint64_t{1} << j)) bits[candidates[j]] = true;
      FactorMask mask{std::move(bits)};
      const MaskKey key = mask_key(h, chi, mask);
      if (key < best_key) {
        best = mask;
        best_key = key;
      }
    }
    return best;
  }

  FactorMask mask = FactorMask::none(n);
  MaskKey current = mask_key(h, chi, mask);
  while (true) {
    std::optional<std::size_t> best_qubit;
    MaskKey best_key = current;
    for (std::size_t q : candidates) {
      if (mask.bit(q)) continue;
      const MaskKey key = mask_key(h, chi, mask.with_bit(q));
      if (key < best_key) {
        best_qubit = q;
        best_key = key;
      }
    }
    if (!best_qubit) return mask;
    mask = mask.with_bit(*best_qubit);
    current = best_key;
  }
}

RepeatedEmbedding embed_all(const Hamiltonian& h,
                            const std::vector<PauliTerm>& chis, int budget) {
  Hamiltonian current = h.normalized();
  std::vector<EmbeddingResult> rounds;
  rounds.reserve(chis.size());

  for (std::size_t r = 0; r < chis.size(); ++r) {
    const PauliTerm& given = chis[r];
    const std::size_t n_now = current.n_qubits();
    if (given.string.size() > n_now)
      throw std::invalid_argument("round " + std::to_string(r + 1) + ": chi '" +
                                  given.string.str() +
                                  "' is longer than the current register");

    // Earlier rounds grow the register; the original term reappears behind
    // an all-{I,Z} ancilla prefix with its coefficient intact.
    const std::size_t prefix = n_now - given.string.size();
    std::vector<PauliTerm> matches;
    for (const PauliTerm& t : current.terms()) {
      bool ok = true;
      for (std::size_t q = 0; ok && q < prefix; ++q)
        ok = t.string.axis(q) == PauliAxis::I || t.string.axis(q) == PauliAxis::Z;
      for (std::size_t q = 0; ok && q < given.string.size(); ++q)
        ok = t.string.axis(prefix + q) == given.string.axis(q);
      if (ok) matches.push_back(t);
    }
    if (matches.empty())
      throw std::runtime_error("round " + std::to_string(r + 1) + ": chi '" +
                               given.string.str() +
                               "' vanished from the Hamiltonian");
    if (matches.size() > 1)
      throw std::runtime_error("round " + std::to_string(r + 1) + ": chi '" +
                               given.string.str() + "' matches " +
                               std::to_string(matches.size()) +
                               " terms of the current Hamiltonian");
    if (matches[0].coefficient != given.coefficient)
      throw std::runtime_error(
          "round " + std::to_string(r + 1) + ": chi coefficient " +
          format_coefficient(given.coefficient) +
          " disagrees with the current Hamiltonian's " +
          format_coefficient(matches[0].coefficient));

    const PauliTerm chi = matches[0];
    const FactorMask mask = choose_factorization(current, chi, budget);
    rounds.push_back(embed(current, chi, mask));
    current = rounds.back().physical;
  }
  return {std::move(current), std::move(rounds)};
}

std::string format_embedding(const EmbeddingResult& result) {
  std::string out{kEmbeddingHeader};
  out += "\nancilla " + std::to_string(result.ancilla_index);
  out += "\nchi " + result.chi.str();
  out += "\nchi_coefficient " + format_coefficient(result.chi_coefficient);
  out += "\nbasis_factor " + result.basis_factor.str();
  out += "\nresidual " + result.residual.str();
  out += "\nmask " + result.mask.str();
  out += "\ncensus comm " + std::to_string(result.split.commuting.terms().size()) +
         " anti " + std::to_string(result.split.anticommuting.terms().size());
  out += "\nlocality " + std::to_string(hamiltonian_locality(result.physical));
  out += "\nancilla_degree " +
         std::to_string(ancilla_degree(result.physical, result.ancilla_index));
  out += "\ngates " + std::to_string(result.gates.size());
  for (const ControlledGate& g : result.gates) {
    out += "\nC" + std::to_string(g.control) + " T" + std::to_string(g.target) +
           ' ';
    out += axis_char(g.axis);
  }
  out += "\nbegin physical\n";
  out += format_hamiltonian(result.physical);
  out += "end physical\n";
  return out;
}

namespace {

// Takes the next significant line, failing with `what` at end of input.
std::string_view expect_line(detail::LineScanner& scan, const std::string& what) {
  if (!scan.next()) throw ParseError("unexpected end of input, expected " + what);
  return scan.line();
}

std::vector<std::string> expect_keyed(detail::LineScanner& scan,
                                      const std::string& key,
                                      std::size_t n_values) {
  const std::string_view line = expect_line(scan, "'" + key + "'");
  std::vector<std::string> tokens = split_tokens(line);
  if (tokens.empty() || tokens[0] != key || tokens.size() != n_values + 1)
    fail_line(scan.line_no(), "expected '" + key + "' line");
  tokens.erase(tokens.begin());
  return tokens;
}

PauliString parse_string_field(const std::string& text, std::size_t line_no) {
  try {
    return PauliString::parse(text);
  } catch (const ParseError& e) {
    fail_line(line_no, e.what());
  }
}

}  // namespace

EmbeddingResult parse_embedding(std::string_view text) {
  detail::LineScanner scan(text);

  if (expect_line(scan, "header") != kEmbeddingHeader)
    fail_line(scan.line_no(), "expected header '" +
                                  std::string(kEmbeddingHeader) + "'");

  const long ancilla =
      parse_long_token(expect_keyed(scan, "ancilla", 1)[0], scan.line_no(),
                       "ancilla index");
  if (ancilla != 0)
    fail_line(scan.line_no(), "only a prepended ancilla (index 0) is supported");

  const PauliString chi =
      parse_string_field(expect_keyed(scan, "chi", 1)[0], scan.line_no());
  const double chi_coefficient = parse_double_token(
      expect_keyed(scan, "chi_coefficient", 1)[0], scan.line_no());
  const PauliString basis_factor = parse_string_field(
      expect_keyed(scan, "basis_factor", 1)[0], scan.line_no());
  const PauliString residual =
      parse_string_field(expect_keyed(scan, "residual", 1)[0], scan.line_no());

  FactorMask mask = [&] {
    const std::string bits = expect_keyed(scan, "mask", 1)[0];
    try {
      return FactorMask::parse(bits);
    } catch (const ParseError& e) {
      fail_line(scan.line_no(), e.what());
    }
  }();
  if (mask.size() != chi.size())
    fail_line(scan.line_no(), "mask length does not match chi");
  mask = effective_mask(chi, mask);

  {
    const Factorization factors = factorize(chi, mask);
    if (factors.basis_factor != basis_factor || factors.residual != residual)
      fail_line(scan.line_no(),
                "mask does not reproduce the stated basis_factor/residual");
  }

  const std::vector<std::string> census = expect_keyed(scan, "census", 4);
  if (census[0] != "comm" || census[2] != "anti")
    fail_line(scan.line_no(), "expected 'census comm <n> anti <m>'");
  const long census_comm =
      parse_long_token(census[1], scan.line_no(), "census count");
  const long census_anti =
      parse_long_token(census[3], scan.line_no(), "census count");

  const long stated_locality = parse_long_token(
      expect_keyed(scan, "locality", 1)[0], scan.line_no(), "locality");
  const long stated_degree =
      parse_long_token(expect_keyed(scan, "ancilla_degree", 1)[0],
                       scan.line_no(), "ancilla degree");

  const long n_gates = parse_long_token(expect_keyed(scan, "gates", 1)[0],
                                        scan.line_no(), "gate count");
  if (n_gates < 0) fail_line(scan.line_no(), "negative gate count");
  ControlledGateSequence gates;
  for (long i = 0; i < n_gates; ++i) {
    const std::string_view line = expect_line(scan, "a gate line");
    const std::vector<std::string> tokens = split_tokens(line);
    if (tokens.size() != 3 || tokens[0].size() < 2 || tokens[0][0] != 'C' ||
        tokens[1].size() < 2 || tokens[1][0] != 'T' || tokens[2].size() != 1)
      fail_line(scan.line_no(), "expected 'C<anc> T<idx> <axis>'");
    const long control = parse_long_token(tokens[0].substr(1), scan.line_no(),
                                          "gate control");
    const long target =
        parse_long_token(tokens[1].substr(1), scan.line_no(), "gate target");
    if (control < 0 || target < 0)
      fail_line(scan.line_no(), "negative gate index");
    PauliAxis axis = PauliAxis::I;
    try {
      axis = axis_from_char(tokens[2][0]);
    } catch (const ParseError& e) {
      fail_line(scan.line_no(), e.what());
    }
    gates.push_back({static_cast<std::size_t>(control),
                     static_cast<std::size_t>(target), axis});
  }
  if (gates != controlled_gates(basis_factor, 0))
    fail_line(scan.line_no(),
              "gate list does not reproduce the stated basis_factor");

  if (expect_line(scan, "'begin physical'") != "begin physical")
    fail_line(scan.line_no(), "expected 'begin physical'");
  std::string block;
  bool closed = false;
  std::size_t block_line_no = scan.line_no();
  while (scan.next_raw()) {
    if (scan.line() == "end physical") {
      closed = true;
      break;
    }
    block += scan.raw();
    block += '\n';
  }
  if (!closed) throw ParseError("missing 'end physical'");
  if (scan.next())
    fail_line(scan.line_no(), "unexpected content after 'end physical'");

  Hamiltonian physical = [&] {
    try {
      return parse_hamiltonian(block);
    } catch (const ParseError& e) {
      throw ParseError("physical block (after line " +
                       std::to_string(block_line_no) + "): " + e.what());
    }
  }();
  if (physical.n_qubits() != chi.size() + 1)
    throw ParseError("physical register has " +
                     std::to_string(physical.n_qubits()) + " qubits, expected " +
                     std::to_string(chi.size() + 1));

  // The ancilla axis says which block each physical term came from; the
  // split record is rebuilt rather than stored twice. Coefficients are not
  // judged here.
  const PauliString ancilla_term = residual.prepended(PauliAxis::X);
  std::vector<PauliTerm> comm;
  std::vector<PauliTerm> anti;
  for (const PauliTerm& t : physical.terms()) {
    const PauliAxis head = t.string.axis(0);
    std::vector<PauliAxis> tail(t.string.axes().begin() + 1,
                                t.string.axes().end());
    if (head == PauliAxis::I) {
      comm.push_back({t.coefficient, PauliString(std::move(tail))});
    } else if (head == PauliAxis::Z) {
      anti.push_back({t.coefficient, PauliString(std::move(tail))});
    } else if (t.string == ancilla_term) {
      continue;
    } else {
      throw ParseError("physical term '" + t.string.str() +
                       "' is not an embedding product");
    }
  }
  if (static_cast<long>(comm.size()) != census_comm ||
      static_cast<long>(anti.size()) != census_anti)
    throw ParseError("census does not match the physical block");

  // Structural statistics must agree with the block they describe.
  if (stated_locality != hamiltonian_locality(physical))
    throw ParseError("stated locality " + std::to_string(stated_locality) +
                     " does not match the physical block's " +
                     std::to_string(hamiltonian_locality(physical)));
  const long block_degree = static_cast<long>(ancilla_degree(physical, 0));
  if (stated_degree != block_degree)
    throw ParseError("stated ancilla_degree " + std::to_string(stated_degree) +
                     " does not match the physical block's " +
                     std::to_string(block_degree));

  return {.physical = std::move(physical),
          .ancilla_index = 0,
          .mask = std::move(mask),
          .split = {Hamiltonian(chi.size(), std::move(comm)),
                    Hamiltonian(chi.size(), std::move(anti))},
          .gates = std::move(gates),
          .chi = chi,
          .chi_coefficient = chi_coefficient,
          .basis_factor = basis_factor,
          .residual = residual};
}

}  // namespace qlr
