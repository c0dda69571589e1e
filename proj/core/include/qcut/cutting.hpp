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
 * Single-wire circuit cutting with Pauli-basis reconstruction.
 *
 * A cut replaces one qubit wire, at a chosen point, with a
 * measure-and-prepare channel expanded in the Pauli basis: the identity
 *
 *     rho = sum_m c_m Tr(O_m rho) |psi_m><psi_m|
 *
 * over the eight (observable, eigenstate, coefficient) terms below turns
 * one n-qubit circuit into a weighted combination of executions of an
 * upstream fragment (cut wire measured alongside the surviving qubits)
 * and a downstream fragment (a fresh wire prepared in psi_m). For exact
 * statevector execution the reconstruction is exact up to rounding.
 *
 * The upstream fragment is simulated once per reconstruction (the eight
 * terms differ only in which observable is read off the final state:
 * three nontrivial measurement settings, with I sharing the Z data) and
 * the downstream fragment once per distinct eigenstate, so eight terms
 * cost 1 + 6 simulations. Terms are always combined in index order
 * m = 1..8, so results are bit-identical regardless of whether fragment
 * executions ran sequentially or concurrently.
 */

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "qcut/circuit.hpp"
#include "qcut/statevector.hpp"

namespace qcut {

/// Cut location: wire `wire` is severed after all gates with sequence
/// index < `position` that touch that wire.
struct CutSpec {
  int wire = 0;
  int position = 0;

  friend bool operator==(const CutSpec&, const CutSpec&) = default;
};

/// One of the two circuits produced by a cut. `source_qubits[local]` is
/// the original index of local qubit `local`; the cut wire is the last
/// upstream qubit and downstream qubit 0 (the freshly prepared wire).
struct Fragment {
  enum class Role { Upstream, Downstream };

  Role role = Role::Upstream;
  Circuit circuit;
  int cut_qubit = 0;
  std::vector<int> source_qubits;
};

std::string to_string(Fragment::Role role);

struct FragmentPair {
  Fragment upstream;
  Fragment downstream;
  CutSpec cut;
  std::size_t original_n_qubits = 0;
};

/// One term of the Pauli-basis channel expansion.
struct CutTerm {
  int index = 0;  // 1..8
  Pauli observable = Pauli::I;
  Eigenstate preparation = Eigenstate::Zero;
  double coefficient = 0.0;  // +1/2 or -1/2
};

/// The eight terms in index order:
/// (I,|0>,+1/2) (I,|1>,+1/2) (X,|+>,+1/2) (X,|->,-1/2)
/// (Y,|+i>,+1/2) (Y,|-i>,-1/2) (Z,|0>,+1/2) (Z,|1>,-1/2).
const std::array<CutTerm, 8>& cut_terms();

/**
 * Splits a fully bound circuit at the cut. Gates touching qubits below
 * the wire go upstream, above it downstream; gates touching the wire
 * itself go upstream when their index is < cut.position and downstream
 * otherwise (with the wire remapped to the fresh qubit). Throws
 * std::invalid_argument if any gate straddles the two sides, or on an
 * out-of-range wire/position, or if the circuit is not fully bound.
 */
FragmentPair split(const Circuit& circuit, const CutSpec& cut);

/// Joint expectation <P_up (x) O_m> on the upstream fragment's output,
/// where P_up acts on the surviving upstream qubits (all but the last)
/// and the term's observable acts on the cut wire.
double execute_upstream(const Fragment& upstream, const CutTerm& term,
                        const PauliObservable& upstream_observable);

/// Same, with a basis projector |b><b| on the surviving qubits instead
/// of a Pauli string.
double execute_upstream(const Fragment& upstream, const CutTerm& term,
                        std::size_t upstream_basis_index);

/// Runs the downstream fragment with its fresh wire prepared in the
/// term's eigenstate (remaining qubits in |0>) and returns <P_down>.
double execute_downstream(const Fragment& downstream, const CutTerm& term,
                          const PauliObservable& downstream_observable);

/// Same, returning the full 2^k computational-basis distribution.
std::vector<double> execute_downstream(const Fragment& downstream,
                                       const CutTerm& term);

/// A fragment pair plus the term table to combine them with. Tests may
/// substitute a corrupted table to exercise failure detection.
struct ReconstructionPlan {
  FragmentPair fragments;
  std::array<CutTerm, 8> terms = cut_terms();
};

ReconstructionPlan make_plan(FragmentPair fragments);

struct ReconstructionOptions {
  /// Run the six downstream preparations on worker threads. Results are
  /// combined in fixed term order either way, so the output is
  /// bit-identical to a sequential run.
  bool parallel = false;
};

/**
 * Reconstructs <observable> of the uncut circuit from fragment
 * executions. The observable is given over the original n qubits and is
 * factored across the cut (Pauli strings always factor); the factor on
 * the cut wire is evaluated downstream, on the fresh wire.
 */
double reconstruct_expectation(const ReconstructionPlan& plan,
                               const PauliObservable& observable,
                               const ReconstructionOptions& options = {});

/**
 * Reconstructs the full 2^n output distribution of the uncut circuit.
 * Entry layout matches the uncut circuit's probabilities() (qubit 0 is
 * the index MSB). The result sums to 1 up to rounding; entries may
 * carry rounding residue as small negatives. Use clamp_probabilities
 * before feeding a classifier.
 */
std::vector<double> reconstruct_probabilities(
    const ReconstructionPlan& plan, const ReconstructionOptions& options = {});

/// Clamps negative rounding residue to zero and renormalizes to sum 1.
std::vector<double> clamp_probabilities(std::vector<double> probabilities);

}  // namespace qcut
