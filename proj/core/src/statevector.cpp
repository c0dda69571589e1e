// Copyright 2026 The qcut authors
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

#include "qcut/statevector.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcut {

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

std::array<Complex, 4> hadamard_matrix() {
  return {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
}

std::array<Complex, 4> ry_matrix(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return {Complex(c), Complex(-s), Complex(s), Complex(c)};
}

std::array<Complex, 4> rz_matrix(double phi) {
  return {std::polar(1.0, -phi / 2.0), Complex(0.0), Complex(0.0),
          std::polar(1.0, phi / 2.0)};
}

std::array<Complex, 4> x_matrix() {
  return {Complex(0.0), Complex(1.0), Complex(1.0), Complex(0.0)};
}

void check_qubit(std::size_t n_qubits, int q, const char* what) {
  if (q < 0 || static_cast<std::size_t>(q) >= n_qubits) {
    throw std::invalid_argument(std::string(what) + " qubit index " +
                                std::to_string(q) + " out of range for " +
                                std::to_string(n_qubits) + " qubits");
  }
}

}  // namespace

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::H:
      return "H";
    case GateKind::RY:
      return "RY";
    case GateKind::RZ:
      return "RZ";
    case GateKind::CRY:
      return "CRY";
    case GateKind::CNOT:
      return "CNOT";
  }
  throw std::invalid_argument("unknown gate kind");
}

GateOp GateOp::cry(int control, int target, double angle) {
  if (control == target) {
    throw std::invalid_argument("CRY control and target must differ");
  }
  return {GateKind::CRY, target, control, angle};
}

GateOp GateOp::cnot(int control, int target) {
  if (control == target) {
    throw std::invalid_argument("CNOT control and target must differ");
  }
  return {GateKind::CNOT, target, control, 0.0};
}

std::vector<Complex> gate_matrix(const GateOp& gate) {
  auto embed_controlled = [](const std::array<Complex, 4>& m) {
    // |control,target> basis: identity block, then the 2x2 on target.
    std::vector<Complex> u(16, Complex(0.0));
    u[0] = u[5] = Complex(1.0);
    u[10] = m[0];
    u[11] = m[1];
    u[14] = m[2];
    u[15] = m[3];
    return u;
  };
  switch (gate.kind) {
    case GateKind::H: {
      auto m = hadamard_matrix();
      return {m.begin(), m.end()};
    }
    case GateKind::RY: {
      auto m = ry_matrix(gate.angle);
      return {m.begin(), m.end()};
    }
    case GateKind::RZ: {
      auto m = rz_matrix(gate.angle);
      return {m.begin(), m.end()};
    }
    case GateKind::CRY:
      return embed_controlled(ry_matrix(gate.angle));
    case GateKind::CNOT:
      return embed_controlled(x_matrix());
  }
  throw std::invalid_argument("unknown gate kind");
}

std::string to_string(Pauli p) {
  switch (p) {
    case Pauli::I:
      return "I";
    case Pauli::X:
      return "X";
    case Pauli::Y:
      return "Y";
    case Pauli::Z:
      return "Z";
  }
  throw std::invalid_argument("unknown Pauli");
}

PauliObservable PauliObservable::single(std::size_t n_qubits, int qubit,
                                        Pauli p) {
  check_qubit(n_qubits, qubit, "observable");
  auto obs = identity(n_qubits);
  obs.factors[static_cast<std::size_t>(qubit)] = p;
  return obs;
}

std::array<Complex, 4> pauli_matrix(Pauli p) {
  switch (p) {
    case Pauli::I:
      return {Complex(1.0), Complex(0.0), Complex(0.0), Complex(1.0)};
    case Pauli::X:
      return {Complex(0.0), Complex(1.0), Complex(1.0), Complex(0.0)};
    case Pauli::Y:
      return {Complex(0.0), Complex(0.0, -1.0), Complex(0.0, 1.0),
              Complex(0.0)};
    case Pauli::Z:
      return {Complex(1.0), Complex(0.0), Complex(0.0), Complex(-1.0)};
  }
  throw std::invalid_argument("unknown Pauli");
}

std::string to_string(Eigenstate label) {
  switch (label) {
    case Eigenstate::Zero:
      return "|0>";
    case Eigenstate::One:
      return "|1>";
    case Eigenstate::Plus:
      return "|+>";
    case Eigenstate::Minus:
      return "|->";
    case Eigenstate::PlusI:
      return "|+i>";
    case Eigenstate::MinusI:
      return "|-i>";
  }
  throw std::invalid_argument("unknown eigenstate label");
}

Pauli eigenstate_operator(Eigenstate label) {
  switch (label) {
    case Eigenstate::Zero:
    case Eigenstate::One:
      return Pauli::Z;
    case Eigenstate::Plus:
    case Eigenstate::Minus:
      return Pauli::X;
    case Eigenstate::PlusI:
    case Eigenstate::MinusI:
      return Pauli::Y;
  }
  throw std::invalid_argument("unknown eigenstate label");
}

int eigenstate_eigenvalue(Eigenstate label) {
  switch (label) {
    case Eigenstate::Zero:
    case Eigenstate::Plus:
    case Eigenstate::PlusI:
      return +1;
    case Eigenstate::One:
    case Eigenstate::Minus:
    case Eigenstate::MinusI:
      return -1;
  }
  throw std::invalid_argument("unknown eigenstate label");
}

std::array<Complex, 2> eigenstate_amplitudes(Eigenstate label) {
  switch (label) {
    case Eigenstate::Zero:
      return {Complex(1.0), Complex(0.0)};
    case Eigenstate::One:
      return {Complex(0.0), Complex(1.0)};
    case Eigenstate::Plus:
      return {Complex(kInvSqrt2), Complex(kInvSqrt2)};
    case Eigenstate::Minus:
      return {Complex(kInvSqrt2), Complex(-kInvSqrt2)};
    case Eigenstate::PlusI:
      return {Complex(kInvSqrt2), Complex(0.0, kInvSqrt2)};
    case Eigenstate::MinusI:
      return {Complex(kInvSqrt2), Complex(0.0, -kInvSqrt2)};
  }
  throw std::invalid_argument("unknown eigenstate label");
}

StateVector::StateVector(std::size_t n_qubits)
    : n_qubits_(n_qubits), amps_(std::size_t{1} << n_qubits, Complex(0.0)) {
  if (n_qubits < 1 || n_qubits > 30) {
    throw std::invalid_argument("n_qubits must be in [1, 30]");
  }
  amps_[0] = Complex(1.0);
}

StateVector::StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  if (n_qubits < 1 || n_qubits > 30) {
    throw std::invalid_argument("n_qubits must be in [1, 30]");
  }
  if (amps_.size() != (std::size_t{1} << n_qubits)) {
    throw std::invalid_argument("amplitude count must be exactly 2^n_qubits");
  }
}

void StateVector::apply_single(int target, const std::array<Complex, 4>& m) {
  // Qubit 0 is the MSB, so qubit q toggles bit (n-1-q) of the index.
  const std::size_t stride = std::size_t{1}
                             << (n_qubits_ - 1 - static_cast<std::size_t>(target));
  const std::size_t size = amps_.size();
  for (std::size_t block = 0; block < size; block += 2 * stride) {
    for (std::size_t i = block; i < block + stride; ++i) {
      const Complex a0 = amps_[i];
      const Complex a1 = amps_[i + stride];
      amps_[i] = m[0] * a0 + m[1] * a1;
      amps_[i + stride] = m[2] * a0 + m[3] * a1;
    }
  }
}

void StateVector::apply_controlled(int control, int target,
                                   const std::array<Complex, 4>& m) {
  const std::size_t cbit = std::size_t{1}
                           << (n_qubits_ - 1 - static_cast<std::size_t>(control));
  const std::size_t stride = std::size_t{1}
                             << (n_qubits_ - 1 - static_cast<std::size_t>(target));
  const std::size_t size = amps_.size();
  for (std::size_t block = 0; block < size; block += 2 * stride) {
    for (std::size_t i = block; i < block + stride; ++i) {
      if ((i & cbit) == 0) continue;
      const Complex a0 = amps_[i];
      const Complex a1 = amps_[i + stride];
      amps_[i] = m[0] * a0 + m[1] * a1;
      amps_[i + stride] = m[2] * a0 + m[3] * a1;
    }
  }
}

void StateVector::apply(const GateOp& gate) {
  check_qubit(n_qubits_, gate.target, "target");
  if (gate.is_controlled()) {
    check_qubit(n_qubits_, gate.control, "control");
    if (gate.control == gate.target) {
      throw std::invalid_argument("control and target must differ");
    }
  }
  switch (gate.kind) {
    case GateKind::H:
      apply_single(gate.target, hadamard_matrix());
      break;
    case GateKind::RY:
      apply_single(gate.target, ry_matrix(gate.angle));
      break;
    case GateKind::RZ:
      apply_single(gate.target, rz_matrix(gate.angle));
      break;
    case GateKind::CRY:
      apply_controlled(gate.control, gate.target, ry_matrix(gate.angle));
      break;
    case GateKind::CNOT:
      apply_controlled(gate.control, gate.target, x_matrix());
      break;
  }
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const Complex& a : amps_) sum += std::norm(a);
  return std::sqrt(sum);
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> probs(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) probs[i] = std::norm(amps_[i]);
  return probs;
}

StateVector apply_gate(StateVector state, const GateOp& gate) {
  state.apply(gate);
  return state;
}

double expectation(const StateVector& state, const PauliObservable& obs) {
  if (obs.n_qubits() != state.n_qubits()) {
    throw std::invalid_argument("observable qubit count " +
                                std::to_string(obs.n_qubits()) +
                                " does not match state qubit count " +
                                std::to_string(state.n_qubits()));
  }
  const std::size_t n = state.n_qubits();
  // O|b> = coef(b) |b ^ flip_mask>, where X and Y factors flip their bit
  // and Y/Z factors contribute a phase depending on the source bit.
  std::size_t flip_mask = 0;
  for (std::size_t q = 0; q < n; ++q) {
    const Pauli p = obs.factors[q];
    if (p == Pauli::X || p == Pauli::Y) flip_mask |= std::size_t{1} << (n - 1 - q);
  }
  const auto& amps = state.amplitudes();
  Complex acc(0.0);
  for (std::size_t b = 0; b < amps.size(); ++b) {
    Complex coef(1.0);
    for (std::size_t q = 0; q < n; ++q) {
      const std::size_t bit = (b >> (n - 1 - q)) & 1;
      switch (obs.factors[q]) {
        case Pauli::I:
        case Pauli::X:
          break;
        case Pauli::Y:
          coef *= bit == 0 ? Complex(0.0, 1.0) : Complex(0.0, -1.0);
          break;
        case Pauli::Z:
          if (bit == 1) coef = -coef;
          break;
      }
    }
    acc += std::conj(amps[b ^ flip_mask]) * coef * amps[b];
  }
  return acc.real();
}

StateVector prepare_eigenstate(Eigenstate label) {
  const auto a = eigenstate_amplitudes(label);
  return StateVector(1, {a[0], a[1]});
}

}  // namespace qcut
