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
 * Circuit document format: JSON with fields {version, n_qubits, gates,
 * slots} and, for fragments, an additional fragment/cut annotation.
 * Angles are decimal strings with 17 significant digits, so a
 * serialize/deserialize round trip reproduces every double bit-exactly.
 */

#pragma once

#include <string>

#include "qcut/circuit.hpp"
#include "qcut/cutting.hpp"

namespace qcut {

std::string serialize(const Circuit& circuit);

/// Throws std::runtime_error on a malformed document, unknown gate
/// kind, dangling slot reference, or invalid indices.
Circuit deserialize_circuit(const std::string& text);

/// Fragment document: the circuit document plus a fragment section
/// carrying the role, the local cut qubit, the original qubit indices,
/// and the cut location in the source circuit.
std::string serialize(const Fragment& fragment, const CutSpec& cut);

struct FragmentDocument {
  Fragment fragment;
  CutSpec cut;
};

FragmentDocument deserialize_fragment(const std::string& text);

/// Formats a double as a decimal string with 17 significant digits
/// (lossless for IEEE-754 binary64).
std::string format_angle(double value);

/// Parses a decimal angle string; throws std::runtime_error if the
/// string is not a complete floating-point literal.
double parse_angle(const std::string& text);

}  // namespace qcut
