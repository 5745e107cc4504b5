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

#include "qlr/adiabatic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "text_util.hpp"

namespace qlr {

namespace {

void require_finite(double value, const char* what) {
  if (!std::isfinite(value))
    throw std::invalid_argument(std::string(what) + " is not finite");
}

PauliString z_pair(std::size_t n, std::size_t i, std::size_t j) {
  std::vector<PauliAxis> axes(n, PauliAxis::I);
  axes[i] = PauliAxis::Z;
  axes[j] = PauliAxis::Z;
  return PauliString(std::move(axes));
}

PauliString single_axis(std::size_t n, std::size_t q, PauliAxis axis) {
  std::vector<PauliAxis> axes(n, PauliAxis::I);
  axes[q] = axis;
  return PauliString(std::move(axes));
}

std::size_t checked_dimension(const StateVector& state, std::size_t n_qubits,
                              const char* what) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (static_cast<std::size_t>(state.size()) != dim)
    throw std::invalid_argument(std::string(what) + " has dimension " +
                                std::to_string(state.size()) + ", expected " +
                                std::to_string(dim));
  return dim;
}

}  // namespace

SpinGlassInstance canonical_instance(const SpinGlassInstance& instance) {
  if (instance.n == 0)
    throw std::invalid_argument("instance needs at least one qubit");
  if (instance.fields.size() != instance.n)
    throw std::invalid_argument("instance lists " +
                                std::to_string(instance.fields.size()) +
                                " fields for " + std::to_string(instance.n) +
                                " qubits");
  for (double h : instance.fields) require_finite(h, "field");

  SpinGlassInstance out;
  out.n = instance.n;
  out.fields = instance.fields;
  for (const Coupling& c : instance.couplings) {
    require_finite(c.value, "coupling");
    if (c.i >= instance.n || c.j >= instance.n)
      throw std::invalid_argument("coupling qubit out of range");
    if (c.i <= c.j)
      throw std::invalid_argument("coupling (" + std::to_string(c.i) + ", " +
                                  std::to_string(c.j) + ") must have i > j");
    if (c.value != 0.0) out.couplings.push_back(c);
  }
  std::sort(out.couplings.begin(), out.couplings.end(),
            [](const Coupling& a, const Coupling& b) {
              return std::pair(a.i, a.j) < std::pair(b.i, b.j);
            });
  for (std::size_t k = 1; k < out.couplings.size(); ++k) {
    if (out.couplings[k - 1].i == out.couplings[k].i &&
        out.couplings[k - 1].j == out.couplings[k].j)
      throw std::invalid_argument(
          "duplicate coupling (" + std::to_string(out.couplings[k].i) + ", " +
          std::to_string(out.couplings[k].j) + ")");
  }
  return out;
}

SpinGlassInstance parse_instance(std::string_view text) {
  detail::LineScanner scan(text);
  if (!scan.next()) throw ParseError("line 1: missing 'n <qubits>' line");

  auto tokens = detail::split_tokens(scan.line());
  if (tokens.size() != 2 || tokens[0] != "n")
    detail::fail_line(scan.line_no(), "expected 'n <qubits>'");
  const long n_signed =
      detail::parse_long_token(tokens[1], scan.line_no(), "qubit count");
  if (n_signed < 1)
    detail::fail_line(scan.line_no(), "qubit count must be positive");
  const std::size_t n = static_cast<std::size_t>(n_signed);

  SpinGlassInstance instance;
  instance.n = n;
  instance.fields.assign(n, 0.0);
  std::vector<bool> field_seen(n, false);
  std::vector<std::pair<std::size_t, std::size_t>> pairs_seen;

  auto parse_index = [&](const std::string& tok, const char* what) {
    const long value = detail::parse_long_token(tok, scan.line_no(), what);
    if (value < 0 || static_cast<std::size_t>(value) >= n)
      detail::fail_line(scan.line_no(), std::string(what) + " " + tok +
                                            " out of range for " +
                                            std::to_string(n) + " qubits");
    return static_cast<std::size_t>(value);
  };

  while (scan.next()) {
    tokens = detail::split_tokens(scan.line());
    if (tokens[0] == "h") {
      if (tokens.size() != 3)
        detail::fail_line(scan.line_no(), "expected 'h <i> <value>'");
      const std::size_t q = parse_index(tokens[1], "qubit");
      if (field_seen[q])
        detail::fail_line(scan.line_no(),
                          "duplicate field for qubit " + tokens[1]);
      field_seen[q] = true;
      instance.fields[q] =
          detail::parse_double_token(tokens[2], scan.line_no());
    } else if (tokens[0] == "J") {
      if (tokens.size() != 4)
        detail::fail_line(scan.line_no(), "expected 'J <i> <j> <value>'");
      const std::size_t i = parse_index(tokens[1], "qubit");
      const std::size_t j = parse_index(tokens[2], "qubit");
      if (i <= j)
        detail::fail_line(scan.line_no(), "coupling needs i > j");
      if (std::find(pairs_seen.begin(), pairs_seen.end(),
                    std::pair(i, j)) != pairs_seen.end())
        detail::fail_line(scan.line_no(), "duplicate coupling (" + tokens[1] +
                                              ", " + tokens[2] + ")");
      pairs_seen.emplace_back(i, j);
      const double value =
          detail::parse_double_token(tokens[3], scan.line_no());
      if (value != 0.0) instance.couplings.push_back({i, j, value});
    } else {
      detail::fail_line(scan.line_no(),
                        "unknown directive '" + tokens[0] + "'");
    }
  }
  return canonical_instance(instance);
}

std::string format_instance(const SpinGlassInstance& instance) {
  const SpinGlassInstance canon = canonical_instance(instance);
  std::ostringstream out;
  out << "n " << canon.n << '\n';
  for (std::size_t q = 0; q < canon.n; ++q) {
    if (canon.fields[q] != 0.0)
      out << "h " << q << ' ' << format_coefficient(canon.fields[q]) << '\n';
  }
  for (const Coupling& c : canon.couplings)
    out << "J " << c.i << ' ' << c.j << ' ' << format_coefficient(c.value)
        << '\n';
  return out.str();
}

Hamiltonian spin_glass(const SpinGlassInstance& instance) {
  const SpinGlassInstance canon = canonical_instance(instance);
  std::vector<PauliTerm> terms;
  for (std::size_t q = 0; q < canon.n; ++q) {
    if (canon.fields[q] != 0.0)
      terms.push_back({canon.fields[q], single_axis(canon.n, q, PauliAxis::Z)});
  }
  for (const Coupling& c : canon.couplings)
    terms.push_back({c.value, z_pair(canon.n, c.i, c.j)});
  return Hamiltonian(canon.n, std::move(terms));
}

Hamiltonian standard_driver(const std::vector<double>& B) {
  if (B.empty()) throw std::invalid_argument("driver needs at least one field");
  std::vector<PauliTerm> terms;
  for (std::size_t q = 0; q < B.size(); ++q) {
    require_finite(B[q], "driver field");
    if (B[q] != 0.0)
      terms.push_back({B[q], single_axis(B.size(), q, PauliAxis::X)});
  }
  return Hamiltonian(B.size(), std::move(terms));
}

PauliTerm flip_all_term(double B0, std::size_t n) {
  if (n == 0) throw std::invalid_argument("flip-all term needs qubits");
  require_finite(B0, "flip-all weight");
  return {B0, PauliString(std::vector<PauliAxis>(n, PauliAxis::X))};
}

Schedule::Schedule(Weight f, Weight g, double tau)
    : f_(std::move(f)), g_(std::move(g)), tau_(tau) {
  if (!f_ || !g_) throw std::invalid_argument("schedule weights must be set");
  if (!std::isfinite(tau_) || tau_ <= 0.0)
    throw std::invalid_argument("schedule duration must be positive");
  constexpr double kEndpointTolerance = 1e-12;
  const double checks[] = {f_(0.0) - 1.0, g_(0.0), f_(tau_), g_(tau_) - 1.0};
  for (double c : checks) {
    if (!(std::abs(c) <= kEndpointTolerance))
      throw std::invalid_argument(
          "schedule endpoints must satisfy f(0)=g(tau)=1, f(tau)=g(0)=0");
  }
}

Schedule Schedule::linear(double tau) {
  return Schedule([tau](double t) { return 1.0 - t / tau; },
                  [tau](double t) { return t / tau; }, tau);
}

ScheduledHamiltonian interpolate(const Hamiltonian& h0, const Hamiltonian& hp,
                                 const Schedule& schedule) {
  return ScheduledHamiltonian(
      {{[schedule](double t) { return schedule.f(t); }, h0},
       {[schedule](double t) { return schedule.g(t); }, hp}});
}

EmbeddedFlipAll flip_all_embedded(const SpinGlassInstance& instance,
                                  const std::vector<double>& B, double B0) {
  const SpinGlassInstance canon = canonical_instance(instance);
  if (B.size() != canon.n)
    throw std::invalid_argument("driver lists " + std::to_string(B.size()) +
                                " fields for " + std::to_string(canon.n) +
                                " qubits");
  require_finite(B0, "flip-all weight");
  const std::size_t m = canon.n + 1;

  std::vector<PauliTerm> driver;
  if (B0 != 0.0) driver.push_back({B0, single_axis(m, 0, PauliAxis::X)});
  for (std::size_t q = 0; q < canon.n; ++q) {
    require_finite(B[q], "driver field");
    if (B[q] != 0.0)
      driver.push_back({B[q], single_axis(m, q + 1, PauliAxis::X)});
  }

  std::vector<PauliTerm> problem;
  for (std::size_t q = 0; q < canon.n; ++q) {
    if (canon.fields[q] != 0.0)
      problem.push_back({canon.fields[q], z_pair(m, 0, q + 1)});
  }
  for (const Coupling& c : canon.couplings)
    problem.push_back({c.value, z_pair(m, c.i + 1, c.j + 1)});

  return {Hamiltonian(m, std::move(driver)), Hamiltonian(m, std::move(problem))};
}

std::vector<double> diagonal_energies(const Hamiltonian& hp, std::size_t cap) {
  const std::size_t n = hp.n_qubits();
  if (n > cap)
    throw CapExceededError("register of " + std::to_string(n) +
                           " qubits exceeds the cap of " + std::to_string(cap));
  const Hamiltonian canon = hp.normalized();
  std::vector<std::uint64_t> masks;
  std::vector<double> weights;
  for (const PauliTerm& term : canon.terms()) {
    std::uint64_t mask = 0;
    for (std::size_t q = 0; q < n; ++q) {
      const PauliAxis axis = term.string.axis(q);
      if (axis == PauliAxis::X || axis == PauliAxis::Y)
        throw std::invalid_argument("Hamiltonian is not diagonal: term '" +
                                    term.string.str() + "'");
      if (axis == PauliAxis::Z) mask |= std::uint64_t{1} << (n - 1 - q);
    }
    masks.push_back(mask);
    weights.push_back(term.coefficient);
  }

  const std::size_t dim = std::size_t{1} << n;
  std::vector<double> energies(dim, 0.0);
  for (std::size_t b = 0; b < dim; ++b) {
    double e = 0.0;
    for (std::size_t k = 0; k < masks.size(); ++k)
      e += std::popcount(b & masks[k]) % 2 ? -weights[k] : weights[k];
    energies[b] = e;
  }
  return energies;
}

AnnealReport success_probability(const StateVector& final_state,
                                 const Hamiltonian& hp, std::size_t cap) {
  const std::vector<double> energies = diagonal_energies(hp, cap);
  checked_dimension(final_state, hp.n_qubits(), "final state");

  AnnealReport report;
  report.ground_energy =
      *std::min_element(energies.begin(), energies.end());
  double probability = 0.0;
  double mean = 0.0;
  for (std::size_t b = 0; b < energies.size(); ++b) {
    const double weight = std::norm(final_state[static_cast<Eigen::Index>(b)]);
    mean += energies[b] * weight;
    if (energies[b] - report.ground_energy <= kGroundTolerance) {
      report.ground_states.push_back(b);
      probability += weight;
    }
  }
  report.probability = std::clamp(probability, 0.0, 1.0);
  report.final_energy = mean;
  return report;
}

AnnealReport run_anneal(const Hamiltonian& driver, const Hamiltonian& problem,
                        const AnnealOptions& options,
                        const StateVector* initial) {
  if (driver.n_qubits() != problem.n_qubits())
    throw std::invalid_argument("driver acts on " +
                                std::to_string(driver.n_qubits()) +
                                " qubits, problem on " +
                                std::to_string(problem.n_qubits()));
  if (!std::isfinite(options.tau) || options.tau < 0.0)
    throw std::invalid_argument("anneal duration must be finite and >= 0");
  if (options.gap_samples < 2)
    throw std::invalid_argument("gap scan needs at least two samples");

  StateVector psi0 = initial ? *initial : ground_state(driver, options.cap);
  checked_dimension(psi0, driver.n_qubits(), "initial state");

  AnnealReport report;
  StateVector final_state;
  if (options.tau == 0.0) {
    final_state = psi0;
    const EvolutionSpec path{
        interpolate(driver, problem, Schedule::linear(1.0)), 1.0, 1};
    report.gap = min_gap(path, options.gap_samples, options.cap);
  } else {
    const EvolutionSpec spec{
        interpolate(driver, problem, Schedule::linear(options.tau)),
        options.tau, options.steps};
    final_state = evolve(spec, psi0, nullptr, options.cap);
    report.gap = min_gap(spec, options.gap_samples, options.cap);
  }

  const AnnealReport outcome =
      success_probability(final_state, problem, options.cap);
  report.probability = outcome.probability;
  report.ground_energy = outcome.ground_energy;
  report.ground_states = outcome.ground_states;
  report.final_energy = outcome.final_energy;
  report.tau = options.tau;
  report.steps = options.steps;
  return report;
}

PairedAnneal run_paired_flip_all(const SpinGlassInstance& instance,
                                 const std::vector<double>& B, double B0,
                                 const AnnealOptions& options) {
  const SpinGlassInstance canon = canonical_instance(instance);
  const EmbeddedFlipAll pair = flip_all_embedded(canon, B, B0);

  const Hamiltonian driver =
      standard_driver(B) + Hamiltonian(canon.n, {flip_all_term(B0, canon.n)});
  const Hamiltonian problem = spin_glass(canon);

  const StateVector psi0 = ground_state(driver, options.cap);
  PairedAnneal result;
  result.original = run_anneal(driver, problem, options, &psi0);

  StateVector lifted = prepend_plus_ancilla(psi0);
  for (std::size_t q = 0; q < canon.n; ++q)
    apply_controlled_axis(lifted, canon.n + 1, 0, q + 1, PauliAxis::X);
  result.embedded = run_anneal(pair.driver, pair.problem, options, &lifted);
  return result;
}

std::string format_bitstring(std::uint64_t bits, std::size_t n) {
  std::string out(n, '0');
  for (std::size_t q = 0; q < n; ++q) {
    if (bits >> (n - 1 - q) & 1) out[q] = '1';
  }
  return out;
}

}  // namespace qlr
