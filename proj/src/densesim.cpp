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

#include "qlr/densesim.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <string>

namespace qlr {

namespace {

using Cx = std::complex<double>;

void require_cap(std::size_t n_qubits, std::size_t cap) {
  if (n_qubits > cap)
    throw CapExceededError("register of " + std::to_string(n_qubits) +
                           " qubits exceeds the dense cap of " +
                           std::to_string(cap));
}

std::size_t dimension_of(std::size_t n_qubits) {
  return std::size_t{1} << n_qubits;
}

// Bit value of qubit q in a register of n (qubit 0 most significant).
std::size_t bit_value(std::size_t n_qubits, std::size_t qubit) {
  return std::size_t{1} << (n_qubits - 1 - qubit);
}

std::size_t checked_register(const StateVector& state) {
  const auto dim = static_cast<std::size_t>(state.size());
  std::size_t n = 0;
  while (dimension_of(n) < dim) ++n;
  if (dimension_of(n) != dim)
    throw std::invalid_argument("state dimension " + std::to_string(dim) +
                                " is not a power of two");
  return n;
}

// Adds coefficient * image(s) into m, one entry per column.
void add_term(DenseOperator& m, const PauliString& s, double coefficient) {
  const std::size_t n = s.size();
  const std::size_t dim = dimension_of(n);
  std::size_t flip = 0;
  for (std::size_t q = 0; q < n; ++q)
    if (s.axis(q) == PauliAxis::X || s.axis(q) == PauliAxis::Y)
      flip |= bit_value(n, q);

  for (std::size_t col = 0; col < dim; ++col) {
    Cx factor{coefficient, 0.0};
    for (std::size_t q = 0; q < n; ++q) {
      const bool set = (col & bit_value(n, q)) != 0;
      switch (s.axis(q)) {
        case PauliAxis::I:
        case PauliAxis::X:
          break;
        case PauliAxis::Y:
          factor *= set ? Cx{0.0, -1.0} : Cx{0.0, 1.0};
          break;
        case PauliAxis::Z:
          if (set) factor = -factor;
          break;
      }
    }
    m(static_cast<Eigen::Index>(col ^ flip), static_cast<Eigen::Index>(col)) +=
        factor;
  }
}

}  // namespace

DenseOperator pauli_matrix(const PauliString& s) {
  require_cap(s.size(), kDefaultQubitCap);
  const auto dim = static_cast<Eigen::Index>(dimension_of(s.size()));
  DenseOperator m = DenseOperator::Zero(dim, dim);
  add_term(m, s, 1.0);
  return m;
}

DenseOperator to_matrix(const Hamiltonian& h, std::size_t cap) {
  require_cap(h.n_qubits(), cap);
  const auto dim = static_cast<Eigen::Index>(dimension_of(h.n_qubits()));
  DenseOperator m = DenseOperator::Zero(dim, dim);
  for (const PauliTerm& t : h.terms()) add_term(m, t.string, t.coefficient);
  return m;
}

StateVector basis_state(std::size_t n_qubits, std::uint64_t bits) {
  const std::size_t dim = dimension_of(n_qubits);
  if (bits >= dim)
    throw std::invalid_argument("basis index " + std::to_string(bits) +
                                " out of range for " +
                                std::to_string(n_qubits) + " qubits");
  StateVector state = StateVector::Zero(static_cast<Eigen::Index>(dim));
  state[static_cast<Eigen::Index>(bits)] = Cx{1.0, 0.0};
  return state;
}

StateVector plus_state(std::size_t n_qubits) {
  const std::size_t dim = dimension_of(n_qubits);
  return StateVector::Constant(static_cast<Eigen::Index>(dim),
                               Cx{1.0 / std::sqrt(static_cast<double>(dim)),
                                  0.0});
}

StateVector prepend_plus_ancilla(const StateVector& system) {
  checked_register(system);
  const Eigen::Index dim = system.size();
  StateVector out(2 * dim);
  const double amp = 1.0 / std::sqrt(2.0);
  out.head(dim) = amp * system;
  out.tail(dim) = amp * system;
  return out;
}

void apply_axis(StateVector& state, std::size_t n_qubits, std::size_t qubit,
                PauliAxis axis) {
  const std::size_t dim = dimension_of(n_qubits);
  if (static_cast<std::size_t>(state.size()) != dim)
    throw std::invalid_argument("state dimension does not match register");
  if (qubit >= n_qubits) throw std::invalid_argument("qubit index out of range");
  if (axis == PauliAxis::I) return;

  const std::size_t bit = bit_value(n_qubits, qubit);
  for (std::size_t r = 0; r < dim; ++r) {
    if (axis == PauliAxis::Z) {
      if (r & bit) state[static_cast<Eigen::Index>(r)] *= -1.0;
      continue;
    }
    if (r & bit) continue;
    const auto low = static_cast<Eigen::Index>(r);
    const auto high = static_cast<Eigen::Index>(r | bit);
    if (axis == PauliAxis::X) {
      std::swap(state[low], state[high]);
    } else {
      const Cx tmp = state[low];
      state[low] = Cx{0.0, -1.0} * state[high];
      state[high] = Cx{0.0, 1.0} * tmp;
    }
  }
}

void apply_string(StateVector& state, const PauliString& s) {
  for (std::size_t q : s.support()) apply_axis(state, s.size(), q, s.axis(q));
}

void apply_controlled_axis(StateVector& state, std::size_t n_qubits,
                           std::size_t control, std::size_t target,
                           PauliAxis axis) {
  const std::size_t dim = dimension_of(n_qubits);
  if (static_cast<std::size_t>(state.size()) != dim)
    throw std::invalid_argument("state dimension does not match register");
  if (control >= n_qubits || target >= n_qubits)
    throw std::invalid_argument("qubit index out of range");
  if (control == target)
    throw std::invalid_argument("control and target must differ");
  if (axis == PauliAxis::I) return;

  const std::size_t cbit = bit_value(n_qubits, control);
  const std::size_t tbit = bit_value(n_qubits, target);
  for (std::size_t r = 0; r < dim; ++r) {
    if (!(r & cbit)) continue;
    if (axis == PauliAxis::Z) {
      if (r & tbit) state[static_cast<Eigen::Index>(r)] *= -1.0;
      continue;
    }
    if (r & tbit) continue;
    const auto low = static_cast<Eigen::Index>(r);
    const auto high = static_cast<Eigen::Index>(r | tbit);
    if (axis == PauliAxis::X) {
      std::swap(state[low], state[high]);
    } else {
      const Cx tmp = state[low];
      state[low] = Cx{0.0, -1.0} * state[high];
      state[high] = Cx{0.0, 1.0} * tmp;
    }
  }
}

void apply_basis_change(StateVector& state, const EmbeddingResult& result) {
  const std::size_t n_phys = result.chi.size() + 1;
  const std::size_t n = checked_register(state);
  if (n != n_phys)
    throw std::invalid_argument("state register has " + std::to_string(n) +
                                " qubits, embedding needs " +
                                std::to_string(n_phys));
  for (const ControlledGate& g : result.gates)
    apply_controlled_axis(state, n_phys, g.control, g.target + 1, g.axis);
}

DenseOperator basis_change_matrix(const EmbeddingResult& result,
                                  std::size_t cap) {
  const std::size_t n_system = result.chi.size();
  require_cap(n_system + 1, cap);
  const auto half = static_cast<Eigen::Index>(dimension_of(n_system));
  DenseOperator u = DenseOperator::Zero(2 * half, 2 * half);
  u.topLeftCorner(half, half) = DenseOperator::Identity(half, half);
  u.bottomRightCorner(half, half) = pauli_matrix(result.basis_factor);
  return u;
}

BasisMap::BasisMap(const ControlledGateSequence& gates, std::size_t n_system,
                   std::size_t cap)
    : n_system_(n_system) {
  if (n_system == 0) throw std::invalid_argument("empty system register");
  require_cap(n_system + 1, cap);
  for (const ControlledGate& g : gates) {
    if (g.control != 0)
      throw std::invalid_argument("only a qubit-0 ancilla control is supported");
    if (g.target >= n_system)
      throw std::invalid_argument("gate target out of range");
  }

  const std::size_t half = dimension_of(n_system);
  const auto dim = static_cast<Eigen::Index>(2 * half);
  plus_ = DenseOperator::Zero(dim, static_cast<Eigen::Index>(half));
  minus_ = DenseOperator::Zero(dim, static_cast<Eigen::Index>(half));
  const double amp = 1.0 / std::sqrt(2.0);

  for (std::size_t n = 0; n < half; ++n) {
    StateVector plus = StateVector::Zero(dim);
    plus[static_cast<Eigen::Index>(n)] = amp;
    plus[static_cast<Eigen::Index>(half + n)] = amp;
    StateVector minus = StateVector::Zero(dim);
    minus[static_cast<Eigen::Index>(n)] = amp;
    minus[static_cast<Eigen::Index>(half + n)] = -amp;
    for (const ControlledGate& g : gates) {
      apply_controlled_axis(plus, n_system + 1, 0, g.target + 1, g.axis);
      apply_controlled_axis(minus, n_system + 1, 0, g.target + 1, g.axis);
    }
    plus_.col(static_cast<Eigen::Index>(n)) = plus;
    minus_.col(static_cast<Eigen::Index>(n)) = minus;
  }
}

double check_decoupling(const Hamiltonian& h_tilde, const BasisMap& map,
                        std::size_t cap) {
  if (h_tilde.n_qubits() != map.n_system() + 1)
    throw std::invalid_argument("Hamiltonian register does not match the map");
  const DenseOperator m = to_matrix(h_tilde, cap);
  const double up = (map.plus().adjoint() * m * map.minus()).cwiseAbs().maxCoeff();
  const double down =
      (map.minus().adjoint() * m * map.plus()).cwiseAbs().maxCoeff();
  return std::max(up, down);
}

DenseOperator restrict_block(const Hamiltonian& h_tilde, const BasisMap& map,
                             BlockSign sign, std::size_t cap) {
  if (h_tilde.n_qubits() != map.n_system() + 1)
    throw std::invalid_argument("Hamiltonian register does not match the map");
  const DenseOperator m = to_matrix(h_tilde, cap);
  const DenseOperator& frame =
      sign == BlockSign::plus ? map.plus() : map.minus();
  return frame.adjoint() * m * frame;
}

ScheduledHamiltonian::ScheduledHamiltonian(std::vector<SchedulePiece> pieces)
    : pieces_(std::move(pieces)) {
  if (pieces_.empty())
    throw std::invalid_argument("schedule needs at least one piece");
  n_qubits_ = pieces_.front().hamiltonian.n_qubits();
  for (const SchedulePiece& p : pieces_) {
    if (!p.weight)
      throw std::invalid_argument("schedule piece has no weight function");
    if (p.hamiltonian.n_qubits() != n_qubits_)
      throw std::invalid_argument("schedule pieces live on different registers");
  }
}

Hamiltonian ScheduledHamiltonian::at(double t) const {
  std::vector<PauliTerm> terms;
  for (const SchedulePiece& p : pieces_) {
    const double w = p.weight(t);
    if (!std::isfinite(w))
      throw std::runtime_error("non-finite schedule weight at t=" +
                               std::to_string(t));
    for (const PauliTerm& term : p.hamiltonian.terms())
      terms.push_back({w * term.coefficient, term.string});
  }
  return Hamiltonian(n_qubits_, std::move(terms)).normalized();
}

StateVector evolve(const EvolutionSpec& spec, const StateVector& psi0,
                   std::vector<TrajectorySample>* trajectory,
                   std::size_t cap) {
  const std::size_t n = spec.scheduled.n_qubits();
  require_cap(n, cap);
  if (static_cast<std::size_t>(psi0.size()) != dimension_of(n))
    throw std::invalid_argument("state dimension does not match the schedule");
  if (spec.steps == 0) throw std::invalid_argument("steps must be positive");
  if (!std::isfinite(spec.tau) || spec.tau < 0.0)
    throw std::invalid_argument("duration must be finite and nonnegative");
  if (std::abs(psi0.norm() - 1.0) > 1e-8)
    throw std::invalid_argument("initial state is not normalized");

  StateVector state = psi0;
  if (trajectory) trajectory->push_back({0.0, state});
  if (spec.tau == 0.0) return state;

  std::vector<DenseOperator> images;
  images.reserve(spec.scheduled.pieces().size());
  for (const SchedulePiece& p : spec.scheduled.pieces())
    images.push_back(to_matrix(p.hamiltonian, cap));

  const double dt = spec.tau / static_cast<double>(spec.steps);
  const auto dim = static_cast<Eigen::Index>(dimension_of(n));
  DenseOperator frozen(dim, dim);
  for (std::size_t k = 0; k < spec.steps; ++k) {
    const double t_mid = (static_cast<double>(k) + 0.5) * dt;
    frozen.setZero();
    for (std::size_t i = 0; i < images.size(); ++i) {
      const double w = spec.scheduled.pieces()[i].weight(t_mid);
      if (!std::isfinite(w))
        throw std::runtime_error("non-finite schedule weight at t=" +
                                 std::to_string(t_mid));
      frozen += w * images[i];
    }
    const Eigen::SelfAdjointEigenSolver<DenseOperator> eigen(frozen);
    const Eigen::VectorXd& values = eigen.eigenvalues();
    Eigen::VectorXcd phases(values.size());
    for (Eigen::Index i = 0; i < values.size(); ++i)
      phases[i] = std::exp(Cx{0.0, -values[i] * dt});
    state = eigen.eigenvectors() *
            (phases.asDiagonal() * (eigen.eigenvectors().adjoint() * state));
    if (trajectory)
      trajectory->push_back({static_cast<double>(k + 1) * dt, state});
  }
  return state;
}

std::vector<double> spectrum(const Hamiltonian& h, std::size_t cap) {
  const Eigen::SelfAdjointEigenSolver<DenseOperator> eigen(to_matrix(h, cap));
  const Eigen::VectorXd& values = eigen.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

StateVector ground_state(const Hamiltonian& h, std::size_t cap) {
  const Eigen::SelfAdjointEigenSolver<DenseOperator> eigen(to_matrix(h, cap));
  return eigen.eigenvectors().col(0);
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("state dimensions differ");
  return std::norm(a.dot(b));
}

GapScan min_gap(const EvolutionSpec& spec, std::size_t samples,
                std::size_t cap) {
  if (samples == 0) throw std::invalid_argument("samples must be positive");
  require_cap(spec.scheduled.n_qubits(), cap);
  if (!std::isfinite(spec.tau) || spec.tau < 0.0)
    throw std::invalid_argument("duration must be finite and nonnegative");

  GapScan best;
  bool first = true;
  for (std::size_t j = 0; j < samples; ++j) {
    const double t = samples == 1 ? 0.0
                                  : spec.tau * static_cast<double>(j) /
                                        static_cast<double>(samples - 1);
    const std::vector<double> levels = spectrum(spec.scheduled.at(t), cap);
    if (levels.size() < 2)
      throw std::invalid_argument("gap needs at least a two-level spectrum");
    const bool degenerate = levels[1] - levels[0] <= 1e-12;
    const double gap = degenerate ? 0.0 : levels[1] - levels[0];
    if (first || gap < best.gap) {
      best = {gap, t, degenerate};
      first = false;
    }
  }
  return best;
}

}  // namespace qlr
