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

#include "qcut/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace qcut {

std::string to_string(SlotRole role) {
  return role == SlotRole::Encoding ? "encoding" : "trainable";
}

std::string to_string(FeatureScaling scaling) {
  return scaling == FeatureScaling::None ? "none" : "l2-normalize";
}

GateOp CircuitGate::op() const {
  if (!param.is_bound() && (kind == GateKind::RY || kind == GateKind::RZ ||
                            kind == GateKind::CRY)) {
    throw std::logic_error("cannot execute a gate with an unbound parameter");
  }
  GateOp g;
  g.kind = kind;
  g.target = target;
  g.control = control;
  g.angle = param.value.value_or(0.0);
  return g;
}

Circuit::Circuit(std::size_t n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1) {
    throw std::invalid_argument("circuit needs at least one qubit");
  }
}

int Circuit::add_slot(SlotRole role) {
  const int id = static_cast<int>(slots_.size());
  slots_.push_back({id, role});
  return id;
}

void Circuit::add(CircuitGate gate) {
  auto check = [&](int q, const char* what) {
    if (q < 0 || static_cast<std::size_t>(q) >= n_qubits_) {
      throw std::invalid_argument(std::string(what) + " qubit " +
                                  std::to_string(q) + " out of range");
    }
  };
  check(gate.target, "target");
  const bool controlled =
      gate.kind == GateKind::CRY || gate.kind == GateKind::CNOT;
  if (controlled) {
    check(gate.control, "control");
    if (gate.control == gate.target) {
      throw std::invalid_argument("control and target must differ");
    }
  } else if (gate.control >= 0) {
    throw std::invalid_argument("single-qubit gate cannot have a control");
  }
  if (gate.param.slot.has_value()) {
    const int id = *gate.param.slot;
    if (id < 0 || static_cast<std::size_t>(id) >= slots_.size()) {
      throw std::invalid_argument("gate references unknown slot " +
                                  std::to_string(id));
    }
  }
  gates_.push_back(std::move(gate));
}

std::size_t Circuit::slot_count(SlotRole role) const {
  return static_cast<std::size_t>(
      std::count_if(slots_.begin(), slots_.end(),
                    [&](const Slot& s) { return s.role == role; }));
}

std::vector<int> Circuit::slot_ids(SlotRole role) const {
  std::vector<int> ids;
  for (const Slot& s : slots_) {
    if (s.role == role) ids.push_back(s.id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

bool Circuit::fully_bound() const {
  return std::all_of(gates_.begin(), gates_.end(), [](const CircuitGate& g) {
    return !g.param.is_symbolic() || g.param.is_bound();
  });
}

void Circuit::shift_gate_angle(std::size_t index, double delta) {
  if (index >= gates_.size()) {
    throw std::invalid_argument("gate index out of range");
  }
  CircuitGate& g = gates_[index];
  if (!g.param.is_bound()) {
    throw std::logic_error("cannot shift an unbound gate angle");
  }
  g.param.value = *g.param.value + delta;
}

KernelSpec KernelSpec::ladder_default() {
  KernelSpec spec;
  spec.parameter_count = 4;
  spec.gates = {
      {GateKind::RY, 0, -1, 0},
      {GateKind::RY, 1, -1, 1},
      {GateKind::CNOT, 0, 1, -1},
      {GateKind::RZ, 1, -1, 2},
      {GateKind::CRY, 0, 1, 3},
  };
  return spec;
}

Circuit build_encoding_layer(const EncodingSpec& spec) {
  if (spec.n_features < 1) {
    throw std::invalid_argument("encoding needs at least one feature");
  }
  Circuit c(spec.n_features);
  for (std::size_t q = 0; q < spec.n_features; ++q) {
    const int slot = c.add_slot(SlotRole::Encoding);
    c.h(static_cast<int>(q));
    c.ry(static_cast<int>(q), Param::symbolic(slot));
  }
  return c;
}

std::vector<double> scale_features(const std::vector<double>& x,
                                   FeatureScaling scaling) {
  if (x.empty()) {
    throw std::invalid_argument("cannot scale an empty feature vector");
  }
  if (scaling == FeatureScaling::None) return x;
  double sum_sq = 0.0;
  for (double v : x) sum_sq += v * v;
  if (sum_sq == 0.0) {
    throw std::invalid_argument(
        "cannot l2-normalize an all-zero feature vector");
  }
  const double c = std::sqrt(sum_sq);
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] / c;
  return out;
}

Circuit build_mps_ansatz(std::size_t n_qubits, const KernelSpec& kernel,
                         int layers) {
  if (n_qubits < 2) {
    throw std::invalid_argument("MPS ansatz needs at least two qubits");
  }
  if (layers < 1) {
    throw std::invalid_argument("layers must be >= 1");
  }
  for (const KernelGate& g : kernel.gates) {
    if (g.param_index >= kernel.parameter_count) {
      throw std::invalid_argument("kernel gate references parameter " +
                                  std::to_string(g.param_index) +
                                  " beyond parameter_count");
    }
  }
  Circuit c(n_qubits);
  for (int layer = 0; layer < layers; ++layer) {
    for (std::size_t pair = 0; pair + 1 < n_qubits; ++pair) {
      std::vector<int> slots(static_cast<std::size_t>(kernel.parameter_count));
      for (int& s : slots) s = c.add_slot(SlotRole::Trainable);
      for (const KernelGate& g : kernel.gates) {
        auto wire = [&](int local) { return static_cast<int>(pair) + local; };
        Param p = g.param_index >= 0
                      ? Param::symbolic(slots[static_cast<std::size_t>(g.param_index)])
                      : Param::none();
        switch (g.kind) {
          case GateKind::H:
            c.h(wire(g.wire_a));
            break;
          case GateKind::RY:
            c.ry(wire(g.wire_a), p);
            break;
          case GateKind::RZ:
            c.rz(wire(g.wire_a), p);
            break;
          case GateKind::CRY:
            c.cry(wire(g.wire_a), wire(g.wire_b), p);
            break;
          case GateKind::CNOT:
            c.cnot(wire(g.wire_a), wire(g.wire_b));
            break;
        }
      }
    }
  }
  return c;
}

Circuit concat(const Circuit& head, const Circuit& tail) {
  if (head.n_qubits() != tail.n_qubits()) {
    throw std::invalid_argument("cannot concat circuits of different widths");
  }
  Circuit c(head.n_qubits());
  for (const Slot& s : head.slots()) c.add_slot(s.role);
  const int offset = static_cast<int>(head.slots().size());
  for (const Slot& s : tail.slots()) c.add_slot(s.role);
  for (const CircuitGate& g : head.gates()) c.add(g);
  for (CircuitGate g : tail.gates()) {
    if (g.param.slot.has_value()) *g.param.slot += offset;
    c.add(g);
  }
  return c;
}

Circuit bind(const Circuit& circuit, std::span<const double> encoding_values,
             std::span<const double> trainable_values) {
  std::unordered_map<int, double> resolved;
  auto resolve_role = [&](SlotRole role, std::span<const double> values) {
    const auto ids = circuit.slot_ids(role);
    if (values.empty()) {
      // Allowed only when nothing of this role remains unbound.
      for (const CircuitGate& g : circuit.gates()) {
        if (!g.param.is_symbolic() || g.param.is_bound()) continue;
        const Slot& s = circuit.slots()[static_cast<std::size_t>(*g.param.slot)];
        if (s.role == role) {
          throw std::invalid_argument("no values given for unbound " +
                                      to_string(role) + " slots");
        }
      }
      return;
    }
    if (values.size() != ids.size()) {
      throw std::invalid_argument(
          to_string(role) + " value count " + std::to_string(values.size()) +
          " does not match slot count " + std::to_string(ids.size()));
    }
    for (std::size_t i = 0; i < ids.size(); ++i) resolved[ids[i]] = values[i];
  };
  resolve_role(SlotRole::Encoding, encoding_values);
  resolve_role(SlotRole::Trainable, trainable_values);

  Circuit out(circuit.n_qubits());
  for (const Slot& s : circuit.slots()) out.add_slot(s.role);
  for (CircuitGate g : circuit.gates()) {
    if (g.param.is_symbolic()) {
      auto it = resolved.find(*g.param.slot);
      if (it != resolved.end()) {
        g.param.value = g.param.scale * it->second;
      }
    }
    out.add(g);
  }
  return out;
}

Circuit decompose_controlled_rotations(const Circuit& circuit) {
  Circuit out(circuit.n_qubits());
  for (const Slot& s : circuit.slots()) out.add_slot(s.role);
  for (const CircuitGate& g : circuit.gates()) {
    if (g.kind != GateKind::CRY) {
      out.add(g);
      continue;
    }
    Param half = g.param;
    Param neg_half = g.param;
    half.scale = g.param.scale * 0.5;
    neg_half.scale = g.param.scale * -0.5;
    if (g.param.is_bound()) {
      half.value = *g.param.value * 0.5;
      neg_half.value = *g.param.value * -0.5;
    }
    out.ry(g.target, half);
    out.cnot(g.control, g.target);
    out.ry(g.target, neg_half);
    out.cnot(g.control, g.target);
  }
  return out;
}

StateVector simulate(const Circuit& circuit, StateVector initial) {
  if (initial.n_qubits() != circuit.n_qubits()) {
    throw std::invalid_argument("initial state width does not match circuit");
  }
  for (const CircuitGate& g : circuit.gates()) {
    initial.apply(g.op());
  }
  return initial;
}

StateVector simulate(const Circuit& circuit) {
  return simulate(circuit, StateVector(circuit.n_qubits()));
}

}  // namespace qcut
