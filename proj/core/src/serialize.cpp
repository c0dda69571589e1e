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

#include "qcut/serialize.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qcut {

namespace {

using nlohmann::json;

constexpr int kFormatVersion = 1;

GateKind parse_gate_kind(const std::string& name) {
  if (name == "H") return GateKind::H;
  if (name == "RY") return GateKind::RY;
  if (name == "RZ") return GateKind::RZ;
  if (name == "CRY") return GateKind::CRY;
  if (name == "CNOT") return GateKind::CNOT;
  throw std::runtime_error("unknown gate kind \"" + name + "\"");
}

SlotRole parse_slot_role(const std::string& name) {
  if (name == "encoding") return SlotRole::Encoding;
  if (name == "trainable") return SlotRole::Trainable;
  throw std::runtime_error("unknown slot role \"" + name + "\"");
}

json gate_to_json(const CircuitGate& g) {
  json jg;
  jg["kind"] = to_string(g.kind);
  jg["target"] = g.target;
  if (g.control >= 0) jg["control"] = g.control;
  const bool parametrized = g.kind == GateKind::RY || g.kind == GateKind::RZ ||
                            g.kind == GateKind::CRY;
  if (parametrized) {
    if (g.param.slot.has_value()) {
      jg["slot"] = *g.param.slot;
      jg["scale"] = format_angle(g.param.scale);
    }
    if (g.param.value.has_value()) {
      jg["angle"] = format_angle(*g.param.value);
    }
  }
  return jg;
}

CircuitGate gate_from_json(const json& jg) {
  CircuitGate g;
  g.kind = parse_gate_kind(jg.at("kind").get<std::string>());
  g.target = jg.at("target").get<int>();
  g.control = jg.value("control", -1);
  const bool parametrized = g.kind == GateKind::RY || g.kind == GateKind::RZ ||
                            g.kind == GateKind::CRY;
  if (parametrized) {
    if (jg.contains("slot")) {
      g.param.slot = jg.at("slot").get<int>();
      g.param.scale =
          jg.contains("scale") ? parse_angle(jg.at("scale").get<std::string>())
                               : 1.0;
    }
    if (jg.contains("angle")) {
      g.param.value = parse_angle(jg.at("angle").get<std::string>());
    }
    if (!g.param.slot.has_value() && !g.param.value.has_value()) {
      throw std::runtime_error("parametrized gate needs a slot or an angle");
    }
  }
  return g;
}

json circuit_to_json(const Circuit& circuit) {
  json doc;
  doc["version"] = kFormatVersion;
  doc["n_qubits"] = circuit.n_qubits();
  doc["slots"] = json::array();
  for (const Slot& s : circuit.slots()) {
    doc["slots"].push_back({{"id", s.id}, {"role", to_string(s.role)}});
  }
  doc["gates"] = json::array();
  for (const CircuitGate& g : circuit.gates()) {
    doc["gates"].push_back(gate_to_json(g));
  }
  return doc;
}

Circuit circuit_from_json(const json& doc) {
  if (doc.value("version", 0) != kFormatVersion) {
    throw std::runtime_error("unsupported circuit document version");
  }
  Circuit circuit(doc.at("n_qubits").get<std::size_t>());
  for (const json& js : doc.at("slots")) {
    const int id = js.at("id").get<int>();
    const int got = circuit.add_slot(parse_slot_role(js.at("role").get<std::string>()));
    if (id != got) {
      throw std::runtime_error("slot ids must be dense and in order");
    }
  }
  for (const json& jg : doc.at("gates")) {
    try {
      circuit.add(gate_from_json(jg));
    } catch (const std::invalid_argument& e) {
      // Circuit::add reports dangling slots and bad indices.
      throw std::runtime_error(e.what());
    }
  }
  return circuit;
}

json parse_document(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw std::runtime_error("malformed circuit document");
  }
  return doc;
}

}  // namespace

std::string format_angle(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

double parse_angle(const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin || end != begin + text.size()) {
    throw std::runtime_error("invalid angle literal \"" + text + "\"");
  }
  return value;
}

std::string serialize(const Circuit& circuit) {
  return circuit_to_json(circuit).dump(2);
}

Circuit deserialize_circuit(const std::string& text) {
  const json doc = parse_document(text);
  try {
    return circuit_from_json(doc);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed circuit document: ") +
                             e.what());
  }
}

std::string serialize(const Fragment& fragment, const CutSpec& cut) {
  json doc = circuit_to_json(fragment.circuit);
  doc["fragment"] = {
      {"role", to_string(fragment.role)},
      {"cut_qubit", fragment.cut_qubit},
      {"source_qubits", fragment.source_qubits},
      {"cut_wire", cut.wire},
      {"cut_position", cut.position},
  };
  return doc.dump(2);
}

FragmentDocument deserialize_fragment(const std::string& text) {
  const json doc = parse_document(text);
  try {
    FragmentDocument out{{Fragment::Role::Upstream, circuit_from_json(doc), 0, {}},
                         {}};
    const json& jf = doc.at("fragment");
    const std::string role = jf.at("role").get<std::string>();
    if (role == "upstream") {
      out.fragment.role = Fragment::Role::Upstream;
    } else if (role == "downstream") {
      out.fragment.role = Fragment::Role::Downstream;
    } else {
      throw std::runtime_error("unknown fragment role \"" + role + "\"");
    }
    out.fragment.cut_qubit = jf.at("cut_qubit").get<int>();
    out.fragment.source_qubits =
        jf.at("source_qubits").get<std::vector<int>>();
    out.cut.wire = jf.at("cut_wire").get<int>();
    out.cut.position = jf.at("cut_position").get<int>();
    return out;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed fragment document: ") +
                             e.what());
  }
}

}  // namespace qcut
