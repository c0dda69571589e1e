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

/**
 * @file
 * Exact statevector simulation of pure quantum states.
 *
 * Qubit ordering convention (used by every module in this project):
 * qubit 0 is the MOST significant bit of the computational-basis index.
 * For n qubits, basis state |q0 q1 ... q_{n-1}> has index
 * q0*2^{n-1} + q1*2^{n-2} + ... + q_{n-1}.
 */

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qcut {

using Complex = std::complex<double>;

enum class GateKind { H, RY, RZ, CRY, CNOT };

std::string to_string(GateKind kind);

/// One concrete gate application. `control` is -1 for single-qubit gates.
/// RY/RZ/CRY carry an angle in radians; H and CNOT ignore it.
struct GateOp {
  GateKind kind = GateKind::H;
  int target = 0;
  int control = -1;
  double angle = 0.0;

  static GateOp h(int target) { return {GateKind::H, target, -1, 0.0}; }
  static GateOp ry(int target, double angle) {
    return {GateKind::RY, target, -1, angle};
  }
  static GateOp rz(int target, double angle) {
    return {GateKind::RZ, target, -1, angle};
  }
  static GateOp cry(int control, int target, double angle);
  static GateOp cnot(int control, int target);

  bool is_controlled() const {
    return kind == GateKind::CRY || kind == GateKind::CNOT;
  }
  bool has_angle() const {
    return kind == GateKind::RY || kind == GateKind::RZ ||
           kind == GateKind::CRY;
  }
};

/// Unitary matrix of a gate, row-major; 2x2 (size 4) for single-qubit
/// kinds, 4x4 (size 16) for controlled kinds in |control,target> order.
std::vector<Complex> gate_matrix(const GateOp& gate);

enum class Pauli : std::uint8_t { I, X, Y, Z };

std::string to_string(Pauli p);

/// Tensor product of single-qubit Pauli factors, one per qubit.
struct PauliObservable {
  std::vector<Pauli> factors;

  std::size_t n_qubits() const { return factors.size(); }

  static PauliObservable identity(std::size_t n_qubits) {
    return {std::vector<Pauli>(n_qubits, Pauli::I)};
  }
  /// Identity everywhere except `p` on `qubit`.
  static PauliObservable single(std::size_t n_qubits, int qubit, Pauli p);
};

/// 2x2 matrix of a single Pauli factor, row-major.
std::array<Complex, 4> pauli_matrix(Pauli p);

/// The six single-qubit Pauli eigenstates |0>, |1>, |+>, |->, |+i>, |-i>.
enum class Eigenstate { Zero, One, Plus, Minus, PlusI, MinusI };

constexpr std::array<Eigenstate, 6> kEigenstates = {
    Eigenstate::Zero,  Eigenstate::One,   Eigenstate::Plus,
    Eigenstate::Minus, Eigenstate::PlusI, Eigenstate::MinusI};

std::string to_string(Eigenstate label);

/// The Pauli operator the label is an eigenstate of (Zero/One -> Z, ...).
Pauli eigenstate_operator(Eigenstate label);

/// The eigenvalue (+1 or -1) of the labeled state under its operator.
int eigenstate_eigenvalue(Eigenstate label);

/**
 * Pure n-qubit quantum state as 2^n complex amplitudes.
 *
 * Gates are applied in place by strided iteration over the amplitude
 * array; no 2^n x 2^n matrices are ever formed. Treat returned states
 * as values: the free functions below take and return by value, and
 * independent simulations share no mutable state.
 */
class StateVector {
 public:
  /// |0...0> on n_qubits (n_qubits >= 1).
  explicit StateVector(std::size_t n_qubits);

  /// Takes ownership of an amplitude vector of length exactly 2^n_qubits.
  StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t size() const { return amps_.size(); }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  Complex amplitude(std::size_t basis_index) const {
    return amps_.at(basis_index);
  }

  /// Applies the gate in place. Throws std::invalid_argument on a qubit
  /// index out of range or control == target.
  void apply(const GateOp& gate);

  double norm() const;

  /// |amplitude_b|^2 for every basis index b; sums to 1 for a valid state.
  std::vector<double> probabilities() const;

 private:
  void apply_single(int target, const std::array<Complex, 4>& m);
  void apply_controlled(int control, int target,
                        const std::array<Complex, 4>& m);

  std::size_t n_qubits_;
  std::vector<Complex> amps_;
};

/// Value-style gate application: returns the evolved state.
StateVector apply_gate(StateVector state, const GateOp& gate);

/// <psi|O|psi> for a Pauli-string observable; always real in [-1, 1].
/// Throws std::invalid_argument on a qubit-count mismatch.
double expectation(const StateVector& state, const PauliObservable& obs);

/// Single-qubit state preparation for the six Pauli eigenstates.
StateVector prepare_eigenstate(Eigenstate label);

/// Amplitude pair (|0> and |1> components) of a labeled eigenstate.
std::array<Complex, 2> eigenstate_amplitudes(Eigenstate label);

}  // namespace qcut
