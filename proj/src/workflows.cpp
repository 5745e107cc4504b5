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

#include "qlr/workflows.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qlr/adiabatic.hpp"
#include "text_util.hpp"

namespace qlr {
namespace {

PauliTerm resolve_chi(const Hamiltonian& canonical, const ChiSelector& sel) {
  const std::vector<PauliTerm>& terms = canonical.terms();
  if (!sel.chi.empty()) {
    const PauliString wanted = PauliString::parse(sel.chi);
    if (wanted.size() != canonical.n_qubits())
      throw std::invalid_argument("chi '" + sel.chi + "' has " +
                                  std::to_string(wanted.size()) +
                                  " qubits, the Hamiltonian has " +
                                  std::to_string(canonical.n_qubits()));
    for (const PauliTerm& term : terms)
      if (term.string == wanted) return term;
    throw std::invalid_argument("chi '" + wanted.str() +
                                "' is not a term of the Hamiltonian");
  }
  if (sel.index < 0)
    throw std::invalid_argument("no chi selected: give a string or an index");
  const std::size_t index = static_cast<std::size_t>(sel.index);
  if (index >= terms.size())
    throw std::invalid_argument(
        "chi index " + std::to_string(sel.index) + " is out of range: the " +
        "normalized Hamiltonian has " + std::to_string(terms.size()) +
        " terms");
  return terms[index];
}

StateVector resolve_initial(const std::string& spec, std::size_t n_qubits) {
  if (spec == "zeros") return basis_state(n_qubits, 0);
  if (spec == "plus") return plus_state(n_qubits);
  if (spec.size() != n_qubits)
    throw std::invalid_argument("initial state '" + spec +
                                "' does not name " +
                                std::to_string(n_qubits) + " qubits");
  std::uint64_t bits = 0;
  for (char c : spec) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("initial state '" + spec +
                                  "' is not zeros, plus, or a bitstring");
    bits = (bits << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return basis_state(n_qubits, bits);
}

EvolutionSpec frozen_evolution(const Hamiltonian& h, double tau,
                               std::size_t steps) {
  std::vector<SchedulePiece> pieces;
  pieces.push_back({[](double) { return 1.0; }, h});
  return {ScheduledHamiltonian(std::move(pieces)), tau, steps};
}

void require_positive_steps(std::size_t steps) {
  if (steps == 0) throw std::invalid_argument("steps must be positive");
}

void require_duration(double tau) {
  if (!std::isfinite(tau) || tau < 0.0)
    throw std::invalid_argument("tau must be finite and non-negative");
}

std::string fmt(double value) { return format_coefficient(value); }

double max_abs_diff(const DenseOperator& a, const DenseOperator& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

struct CheckLine {
  std::string name;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

CheckLine make_check(std::string name, double deviation, double tolerance) {
  return {std::move(name), deviation, tolerance, deviation <= tolerance};
}

void append_anneal_run(std::ostringstream& out, const std::string& name,
                       const AnnealReport& report, std::size_t n_qubits) {
  out << "run " << name << '\n';
  out << "success_probability " << fmt(report.probability) << '\n';
  out << "ground_energy " << fmt(report.ground_energy) << '\n';
  out << "final_energy " << fmt(report.final_energy) << '\n';
  out << "ground_states";
  for (std::uint64_t bits : report.ground_states)
    out << ' ' << format_bitstring(bits, n_qubits);
  out << '\n';
  out << "min_gap " << fmt(report.gap.gap) << '\n';
  out << "min_gap_time " << fmt(report.gap.time) << '\n';
  out << "degenerate " << (report.gap.degenerate ? 1 : 0) << '\n';
}

}  // namespace

std::string embed_workflow(std::string_view hamiltonian_text,
                           const EmbedOptions& options) {
  const Hamiltonian h = parse_hamiltonian(hamiltonian_text);
  const Hamiltonian canonical = h.normalized();
  const PauliTerm chi = resolve_chi(canonical, options.selector);
  EmbeddingResult result = [&] {
    switch (options.factor_case) {
      case FactorCase::plain:
        return embed(canonical, chi);
      case FactorCase::masked: {
        if (options.mask.empty())
          throw std::invalid_argument("an explicit factorization needs a mask");
        return embed(canonical, chi, FactorMask::parse(options.mask));
      }
      case FactorCase::automatic:
        break;
    }
    return embed(canonical, chi,
                 choose_factorization(canonical, chi, options.budget));
  }();
  return format_embedding(result);
}

VerifyOutcome verify_workflow(std::string_view hamiltonian_text,
                              std::string_view embedding_text,
                              const VerifyOptions& options) {
  const Hamiltonian h = parse_hamiltonian(hamiltonian_text).normalized();
  const EmbeddingResult emb = parse_embedding(embedding_text);
  if (emb.physical.n_qubits() != h.n_qubits() + 1)
    throw std::invalid_argument(
        "the embedding register has " +
        std::to_string(emb.physical.n_qubits()) + " qubits, expected " +
        std::to_string(h.n_qubits() + 1));
  // The coefficient of chi comes from the Hamiltonian, not the report, so
  // a tampered report fails the block comparison instead of slipping
  // through as a consistently wrong pair.
  const PauliTerm chi = resolve_chi(h, ChiSelector{emb.chi.str(), -1});
  const Hamiltonian complement = complement_hamiltonian(h, chi);

  const std::size_t cap = options.cap;
  const DenseOperator word = basis_change_matrix(emb, cap);
  const DenseOperator identity =
      DenseOperator::Identity(word.rows(), word.cols());
  const BasisMap map(emb.gates, h.n_qubits(), cap);

  std::vector<CheckLine> checks;
  checks.push_back(make_check("unitary_involution",
                              max_abs_diff(word * word, identity),
                              options.tol_unitary));
  checks.push_back(make_check("block_decoupling",
                              check_decoupling(emb.physical, map, cap),
                              options.tol_decoupling));
  checks.push_back(
      make_check("block_plus",
                 max_abs_diff(restrict_block(emb.physical, map,
                                             BlockSign::plus, cap),
                              to_matrix(h, cap)),
                 options.tol_blocks));
  checks.push_back(
      make_check("block_minus",
                 max_abs_diff(restrict_block(emb.physical, map,
                                             BlockSign::minus, cap),
                              to_matrix(complement, cap)),
                 options.tol_blocks));

  std::vector<double> expected = spectrum(h, cap);
  {
    const std::vector<double> rest = spectrum(complement, cap);
    expected.insert(expected.end(), rest.begin(), rest.end());
    std::sort(expected.begin(), expected.end());
  }
  const std::vector<double> actual = spectrum(emb.physical, cap);
  double spectrum_deviation = 0.0;
  for (std::size_t i = 0; i < expected.size(); ++i)
    spectrum_deviation =
        std::max(spectrum_deviation, std::abs(actual[i] - expected[i]));
  checks.push_back(
      make_check("spectrum_union", spectrum_deviation, options.tol_spectrum));

  VerifyOutcome outcome;
  outcome.passed = std::all_of(checks.begin(), checks.end(),
                               [](const CheckLine& c) { return c.passed; });
  std::ostringstream out;
  out << "qlr verify v1\n";
  out << "system_qubits " << h.n_qubits() << '\n';
  out << "physical_qubits " << emb.physical.n_qubits() << '\n';
  out << "chi " << emb.chi.str() << '\n';
  out << "chi_coefficient " << fmt(chi.coefficient) << '\n';
  for (const CheckLine& c : checks)
    out << "check " << c.name << " deviation " << fmt(c.deviation)
        << " tolerance " << fmt(c.tolerance) << ' '
        << (c.passed ? "pass" : "fail") << '\n';
  out << "result " << (outcome.passed ? "pass" : "fail") << '\n';
  outcome.report = out.str();
  return outcome;
}

std::string anneal_workflow(std::string_view instance_text,
                            const AnnealWorkflowOptions& options) {
  const SpinGlassInstance instance =
      canonical_instance(parse_instance(instance_text));
  if (options.schedule != "linear")
    throw std::invalid_argument("unknown schedule '" + options.schedule +
                                "': only 'linear' is available");
  if (!std::isfinite(options.field) || options.field == 0.0)
    throw std::invalid_argument("the driver field must be finite and nonzero");
  if (!std::isfinite(options.b0) || options.b0 == 0.0)
    throw std::invalid_argument("the flip-all weight must be finite and nonzero");
  require_duration(options.tau);
  require_positive_steps(options.steps);

  const AnnealOptions run_options{options.tau, options.steps,
                                  options.gap_samples, options.cap};
  const std::vector<double> B(instance.n, options.field);

  std::ostringstream out;
  out << "qlr anneal v1\n";
  out << "qubits " << instance.n << '\n';
  out << "tau " << fmt(options.tau) << '\n';
  out << "steps " << options.steps << '\n';
  out << "schedule " << options.schedule << '\n';
  out << "paired " << (options.paired ? 1 : 0) << '\n';
  out << "field " << fmt(options.field) << '\n';
  if (options.paired) {
    out << "b0 " << fmt(options.b0) << '\n';
    const PairedAnneal pair =
        run_paired_flip_all(instance, B, options.b0, run_options);
    append_anneal_run(out, "direct", pair.original, instance.n);
    append_anneal_run(out, "embedded", pair.embedded, instance.n + 1);
    out << "paired_difference "
        << fmt(std::abs(pair.original.probability -
                        pair.embedded.probability))
        << '\n';
  } else {
    const AnnealReport report = run_anneal(
        standard_driver(B), spin_glass(instance), run_options);
    append_anneal_run(out, "direct", report, instance.n);
  }
  return out.str();
}

ProtocolConfig parse_protocol_config(std::string_view text) {
  ProtocolConfig config;
  bool saw_hamiltonian = false;
  bool saw_chi = false;
  bool saw_mode = false, saw_tau = false, saw_steps = false;
  bool saw_seed = false, saw_initial = false, saw_threshold = false;
  bool saw_cap = false;
  detail::LineScanner scanner(text);
  while (scanner.next()) {
    const std::vector<std::string> tokens =
        detail::split_tokens(scanner.line());
    const std::size_t line_no = scanner.line_no();
    const std::string& key = tokens.front();
    if (tokens.size() != 2)
      detail::fail_line(line_no, "expected '<key> <value>', got '" +
                                     std::string(scanner.line()) + "'");
    const std::string& value = tokens[1];
    const auto once = [&](bool& seen) {
      if (seen) detail::fail_line(line_no, "duplicate key '" + key + "'");
      seen = true;
    };
    if (key == "hamiltonian") {
      once(saw_hamiltonian);
      config.hamiltonian_path = value;
    } else if (key == "chi") {
      if (saw_chi) detail::fail_line(line_no, "chi is selected twice");
      saw_chi = true;
      config.selector.chi = value;
    } else if (key == "chi_index") {
      if (saw_chi) detail::fail_line(line_no, "chi is selected twice");
      saw_chi = true;
      const long index = detail::parse_long_token(value, line_no, "chi index");
      if (index < 0) detail::fail_line(line_no, "chi index must be >= 0");
      config.selector.index = index;
    } else if (key == "mode") {
      once(saw_mode);
      if (value == "full")
        config.mode = ProtocolMode::full_decode;
      else if (value == "shortcut")
        config.mode = ProtocolMode::shortcut;
      else
        detail::fail_line(line_no, "mode must be 'full' or 'shortcut'");
    } else if (key == "tau") {
      once(saw_tau);
      config.tau = detail::parse_double_token(value, line_no);
      if (config.tau < 0.0) detail::fail_line(line_no, "tau must be >= 0");
    } else if (key == "steps") {
      once(saw_steps);
      const long steps = detail::parse_long_token(value, line_no, "step count");
      if (steps <= 0) detail::fail_line(line_no, "steps must be positive");
      config.steps = static_cast<std::size_t>(steps);
    } else if (key == "seed") {
      once(saw_seed);
      const long seed = detail::parse_long_token(value, line_no, "seed");
      if (seed < 0) detail::fail_line(line_no, "seed must be >= 0");
      config.seed = static_cast<std::uint64_t>(seed);
    } else if (key == "initial") {
      once(saw_initial);
      config.initial = value;
    } else if (key == "threshold") {
      once(saw_threshold);
      config.fail_threshold = detail::parse_double_token(value, line_no);
      if (config.fail_threshold <= 0.0)
        detail::fail_line(line_no, "threshold must be positive");
    } else if (key == "cap") {
      once(saw_cap);
      const long cap = detail::parse_long_token(value, line_no, "qubit cap");
      if (cap <= 0) detail::fail_line(line_no, "cap must be positive");
      config.cap = static_cast<std::size_t>(cap);
    } else {
      detail::fail_line(line_no, "unknown key '" + key + "'");
    }
  }
  if (!saw_hamiltonian)
    throw ParseError("the protocol config names no hamiltonian file");
  if (!saw_chi)
    throw ParseError("the protocol config selects no chi");
  return config;
}

ProtocolWorkflowOutcome protocol_workflow(std::string_view hamiltonian_text,
                                          const ProtocolConfig& config) {
  const Hamiltonian h =
      parse_hamiltonian(hamiltonian_text).normalized();
  const PauliTerm chi = resolve_chi(h, config.selector);
  require_duration(config.tau);
  require_positive_steps(config.steps);

  EmbeddingResult embedding = embed(h, chi);
  EvolutionSpec evolution =
      frozen_evolution(embedding.physical, config.tau, config.steps);
  const PreparationRun run{resolve_initial(config.initial, h.n_qubits()),
                           std::move(embedding),
                           std::move(evolution),
                           config.mode,
                           config.seed,
                           config.fail_threshold,
                           config.cap};

  std::ostringstream out;
  out << "qlr protocol v1\n";
  out << "system_qubits " << h.n_qubits() << '\n';
  out << "chi " << chi.string.str() << '\n';
  out << "chi_coefficient " << fmt(chi.coefficient) << '\n';
  out << "mode "
      << (config.mode == ProtocolMode::full_decode ? "full" : "shortcut")
      << '\n';
  out << "tau " << fmt(config.tau) << '\n';
  out << "steps " << config.steps << '\n';
  out << "seed " << config.seed << '\n';
  out << "initial " << config.initial << '\n';

  ProtocolWorkflowOutcome outcome;
  ProtocolReport report;
  try {
    report = run_protocol(run);
  } catch (const LeakageError& error) {
    out << "result fail\n";
    out << "error " << error.what() << '\n';
    outcome.report = out.str();
    return outcome;
  } catch (const InvarianceError& error) {
    out << "result fail\n";
    out << "error " << error.what() << '\n';
    outcome.report = out.str();
    return outcome;
  }

  const StateVector direct = evolve(
      frozen_evolution(h, config.tau, config.steps), run.initial, nullptr,
      config.cap);
  const std::uint64_t bits = sample_bits(report.system, config.seed + 1);

  outcome.passed = true;
  out << "result pass\n";
  out << "leakage " << fmt(report.leakage) << '\n';
  out << "ancilla " << report.ancilla << '\n';
  out << "branch_probability " << fmt(report.branch_probability) << '\n';
  out << "encode_gates " << report.encode_gates << '\n';
  out << "decode_gates " << report.decode_gates << '\n';
  out << "correction_gates " << report.correction_gates << '\n';
  out << "fidelity_direct " << fmt(fidelity(report.system, direct)) << '\n';
  out << "bits " << format_bitstring(bits, h.n_qubits()) << '\n';
  outcome.report = out.str();
  return outcome;
}

SimulateOutcome simulate_workflow(std::string_view hamiltonian_text,
                                  const SimulateOptions& options) {
  const Hamiltonian h = parse_hamiltonian(hamiltonian_text).normalized();
  require_duration(options.tau);
  require_positive_steps(options.steps);
  const StateVector psi0 = resolve_initial(options.initial, h.n_qubits());

  std::vector<TrajectorySample> samples;
  const StateVector final_state =
      evolve(frozen_evolution(h, options.tau, options.steps), psi0,
             options.trajectory ? &samples : nullptr, options.cap);
  const DenseOperator matrix = to_matrix(h, options.cap);
  const double energy = final_state.dot(matrix * final_state).real();
  const std::vector<double> energies = spectrum(h, options.cap);

  SimulateOutcome outcome;
  std::ostringstream out;
  out << "qlr simulate v1\n";
  out << "qubits " << h.n_qubits() << '\n';
  out << "tau " << fmt(options.tau) << '\n';
  out << "steps " << options.steps << '\n';
  out << "initial " << options.initial << '\n';
  out << "norm " << fmt(final_state.norm()) << '\n';
  out << "energy " << fmt(energy) << '\n';
  out << "spectrum";
  for (double value : energies) out << ' ' << fmt(value);
  out << '\n';
  outcome.report = out.str();

  if (options.trajectory) {
    std::ostringstream dump;
    for (const TrajectorySample& sample : samples) {
      dump << "t " << fmt(sample.time);
      for (Eigen::Index i = 0; i < sample.state.size(); ++i)
        dump << ' ' << fmt(sample.state[i].real()) << ' '
             << fmt(sample.state[i].imag());
      dump << '\n';
    }
    outcome.trajectory = dump.str();
  }
  return outcome;
}

}  // namespace qlr
