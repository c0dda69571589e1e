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
 * Circuit representation with symbolic angle slots, plus builders for
 * the per-qubit angle-encoding layer and the MPS-ladder ansatz.
 *
 * A slot is a named parameter position. Encoding slots receive input
 * features, trainable slots receive optimizer-owned angles. Binding a
 * slot keeps the slot reference on the gate so gradient code can map
 * gates back to parameters.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qcut/statevector.hpp"

namespace qcut {

enum class SlotRole { Encoding, Trainable };

std::string to_string(SlotRole role);

struct Slot {
  int id = 0;
  SlotRole role = SlotRole::Encoding;

  friend bool operator==(const Slot&, const Slot&) = default;
};

/// Gate angle: a literal, or a reference to a slot. A symbolic angle
/// resolves to scale * slot_value at bind time; `value` holds the
/// resolved (or literal) angle once available.
struct Param {
  std::optional<int> slot;
  double scale = 1.0;
  std::optional<double> value;

  static Param literal(double v) { return {std::nullopt, 1.0, v}; }
  static Param symbolic(int slot_id, double scale = 1.0) {
    return {slot_id, scale, std::nullopt};
  }
  static Param none() { return literal(0.0); }

  bool is_symbolic() const { return slot.has_value(); }
  bool is_bound() const { return value.has_value(); }

  friend bool operator==(const Param&, const Param&) = default;
};

struct CircuitGate {
  GateKind kind = GateKind::H;
  int target = 0;
  int control = -1;
  Param param = Param::none();

  /// Concrete gate for simulation; requires a bound param.
  GateOp op() const;

  bool touches(int qubit) const {
    return target == qubit || (control >= 0 && control == qubit);
  }

  friend bool operator==(const CircuitGate&, const CircuitGate&) = default;
};

class Circuit {
 public:
  explicit Circuit(std::size_t n_qubits);

  std::size_t n_qubits() const { return n_qubits_; }
  const std::vector<CircuitGate>& gates() const { return gates_; }
  const std::vector<Slot>& slots() const { return slots_; }

  /// Registers a new slot and returns its id (ids are dense, in
  /// creation order).
  int add_slot(SlotRole role);

  /// Appends a gate. Validates qubit indices, control != target, and
  /// that any referenced slot exists.
  void add(CircuitGate gate);

  // Convenience builders.
  void h(int target) { add({GateKind::H, target, -1, Param::none()}); }
  void ry(int target, Param p) { add({GateKind::RY, target, -1, p}); }
  void rz(int target, Param p) { add({GateKind::RZ, target, -1, p}); }
  void cry(int control, int target, Param p) {
    add({GateKind::CRY, target, control, p});
  }
  void cnot(int control, int target) {
    add({GateKind::CNOT, target, control, Param::none()});
  }

  std::size_t slot_count(SlotRole role) const;

  /// Slot ids of the given role in ascending id order; binding vectors
  /// are matched against this order.
  std::vector<int> slot_ids(SlotRole role) const;

  bool fully_bound() const;

  /// Adds `delta` to the bound angle of gate `index` (used by the
  /// parameter-shift rule). Throws if the gate has no bound angle.
  void shift_gate_angle(std::size_t index, double delta);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t n_qubits_;
  std::vector<CircuitGate> gates_;
  std::vector<Slot> slots_;
};

enum class FeatureScaling { None, L2Normalize };

std::string to_string(FeatureScaling scaling);

/// Angle-encoding layer spec: one feature per qubit (H then RY per wire).
struct EncodingSpec {
  std::size_t n_features = 0;
  FeatureScaling scaling = FeatureScaling::None;
};

/// One gate of a two-qubit convolution-kernel template. Wires are local
/// (0 = first wire of the pair, 1 = second); param_index selects one of
/// the kernel's parameters, or -1 for a parameter-free gate.
struct KernelGate {
  GateKind kind = GateKind::RY;
  int wire_a = 0;
  int wire_b = -1;
  int param_index = -1;

  friend bool operator==(const KernelGate&, const KernelGate&) = default;
};

/// Two-qubit variational kernel placed ladder-wise on adjacent wire
/// pairs by build_mps_ansatz.
struct KernelSpec {
  std::vector<KernelGate> gates;
  int parameter_count = 0;

  /// Default 4-parameter kernel: RY(a) on the first wire, RY(b) on the
  /// second, CNOT, RZ(c) on the second, CRY(d) from first to second.
  static KernelSpec ladder_default();

  friend bool operator==(const KernelSpec&, const KernelSpec&) = default;
};

/// H then RY(encoding slot) on each qubit. Throws on zero features.
Circuit build_encoding_layer(const EncodingSpec& spec);

/// x / C with C = sqrt(sum x_i^2) under L2Normalize (error on an
/// all-zero vector); identity under None. Throws on empty input.
std::vector<double> scale_features(const std::vector<double>& x,
                                   FeatureScaling scaling);

/// Ladder ansatz: one kernel instance per adjacent pair (i, i+1),
/// i ascending, repeated `layers` times, each instance with fresh
/// trainable slots. Trainable slot count is layers*(n-1)*parameter_count.
Circuit build_mps_ansatz(std::size_t n_qubits, const KernelSpec& kernel,
                         int layers);

/// Appends `tail` to `head` (same qubit count). Tail slot ids are
/// offset past head's to stay unique; relative order and roles are kept.
Circuit concat(const Circuit& head, const Circuit& tail);

/**
 * Resolves symbolic slots to literal angles. Values are matched to
 * slots of the same role in ascending slot-id order. A role whose
 * slots are all bound already may be given an empty vector (no-op);
 * otherwise the value count must equal the role's slot count.
 */
Circuit bind(const Circuit& circuit, std::span<const double> encoding_values,
             std::span<const double> trainable_values);

/// Rewrites every CRY(theta) as RY(theta/2) on the target, CNOT,
/// RY(-theta/2) on the target, CNOT (an exact identity), so that every
/// parametrized gate has a half-turn generator for the shift rule.
/// Symbolic params keep their slot with scale multiplied by +-1/2.
Circuit decompose_controlled_rotations(const Circuit& circuit);

/// Runs a fully bound circuit on |0...0>.
StateVector simulate(const Circuit& circuit);

/// Runs a fully bound circuit on the given initial state.
StateVector simulate(const Circuit& circuit, StateVector initial);

}  // namespace qcut
