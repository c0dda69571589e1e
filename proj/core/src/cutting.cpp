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

#include "qcut/cutting.hpp"

#include <cmath>
#include <future>
#include <stdexcept>
#include <string>
#include <utility>

namespace qcut {

namespace {

/// Per-basis readout tables of an upstream final state: entry b is
/// <Pi_b (x) P> for basis projector Pi_b on the surviving qubits and
/// P on the cut wire. All four derive from one simulation; I and Z
/// share the same diagonal data.
struct UpstreamTables {
  std::vector<double> i, x, y, z;

  const std::vector<double>& of(Pauli p) const {
    switch (p) {
      case Pauli::I:
        return i;
      case Pauli::X:
        return x;
      case Pauli::Y:
        return y;
      case Pauli::Z:
        return z;
    }
    throw std::invalid_argument("unknown Pauli");
  }
};

UpstreamTables upstream_tables(const StateVector& state) {
  const std::size_t half = state.size() / 2;
  UpstreamTables t;
  t.i.resize(half);
  t.x.resize(half);
  t.y.resize(half);
  t.z.resize(half);
  const auto& amps = state.amplitudes();
  for (std::size_t b = 0; b < half; ++b) {
    // The cut wire is the last upstream qubit, i.e. the index LSB.
    const Complex a0 = amps[2 * b];
    const Complex a1 = amps[2 * b + 1];
    const double p0 = std::norm(a0);
    const double p1 = std::norm(a1);
    const Complex cross = std::conj(a0) * a1;
    t.i[b] = p0 + p1;
    t.z[b] = p0 - p1;
    t.x[b] = 2.0 * cross.real();
    t.y[b] = 2.0 * cross.imag();
  }
  return t;
}

StateVector run_upstream(const Fragment& fragment) {
  if (fragment.role != Fragment::Role::Upstream) {
    throw std::invalid_argument("fragment is not an upstream fragment");
  }
  return simulate(fragment.circuit);
}

StateVector run_downstream(const Fragment& fragment, Eigenstate preparation) {
  if (fragment.role != Fragment::Role::Downstream) {
    throw std::invalid_argument("fragment is not a downstream fragment");
  }
  const std::size_t n = fragment.circuit.n_qubits();
  std::vector<Complex> amps(std::size_t{1} << n, Complex(0.0));
  const auto pair = eigenstate_amplitudes(preparation);
  // Fresh wire is downstream qubit 0, the index MSB; the rest start in |0>.
  amps[0] = pair[0];
  amps[std::size_t{1} << (n - 1)] = pair[1];
  return simulate(fragment.circuit, StateVector(n, std::move(amps)));
}

PauliObservable joint_upstream_observable(const Fragment& upstream,
                                          const PauliObservable& p_up,
                                          Pauli cut_observable) {
  const std::size_t n = upstream.circuit.n_qubits();
  if (p_up.n_qubits() != n - 1) {
    throw std::invalid_argument(
        "upstream observable must cover the surviving qubits (" +
        std::to_string(n - 1) + "), got " + std::to_string(p_up.n_qubits()));
  }
  PauliObservable joint = p_up;
  joint.factors.push_back(cut_observable);
  return joint;
}

}  // namespace

std::string to_string(Fragment::Role role) {
  return role == Fragment::Role::Upstream ? "upstream" : "downstream";
}

const std::array<CutTerm, 8>& cut_terms() {
  static const std::array<CutTerm, 8> kTerms = {{
      {1, Pauli::I, Eigenstate::Zero, +0.5},
      {2, Pauli::I, Eigenstate::One, +0.5},
      {3, Pauli::X, Eigenstate::Plus, +0.5},
      {4, Pauli::X, Eigenstate::Minus, -0.5},
      {5, Pauli::Y, Eigenstate::PlusI, +0.5},
      {6, Pauli::Y, Eigenstate::MinusI, -0.5},
      {7, Pauli::Z, Eigenstate::Zero, +0.5},
      {8, Pauli::Z, Eigenstate::One, -0.5},
  }};
  return kTerms;
}

FragmentPair split(const Circuit& circuit, const CutSpec& cut) {
  const std::size_t n = circuit.n_qubits();
  if (cut.wire < 0 || static_cast<std::size_t>(cut.wire) >= n) {
    throw std::invalid_argument("cut wire out of range");
  }
  if (cut.position < 0 ||
      static_cast<std::size_t>(cut.position) > circuit.gates().size()) {
    throw std::invalid_argument("cut position out of range");
  }
  if (!circuit.fully_bound()) {
    throw std::invalid_argument("cannot split a circuit with unbound slots");
  }

  const int w = cut.wire;
  const std::size_t n_up = static_cast<std::size_t>(w) + 1;
  const std::size_t n_down = n - static_cast<std::size_t>(w);

  Fragment up{Fragment::Role::Upstream, Circuit(n_up), w, {}};
  Fragment down{Fragment::Role::Downstream, Circuit(n_down), 0, {}};
  for (const Slot& s : circuit.slots()) {
    up.circuit.add_slot(s.role);
    down.circuit.add_slot(s.role);
  }
  for (int q = 0; q <= w; ++q) up.source_qubits.push_back(q);
  for (int q = w; q < static_cast<int>(n); ++q) down.source_qubits.push_back(q);

  for (std::size_t i = 0; i < circuit.gates().size(); ++i) {
    const CircuitGate& g = circuit.gates()[i];
    // Resolve each touched qubit to a side; the cut wire's side depends
    // on whether the gate comes before or after the cut position.
    bool upstream_side = false;
    bool downstream_side = false;
    auto classify = [&](int q) {
      if (q < w) {
        upstream_side = true;
      } else if (q > w) {
        downstream_side = true;
      } else if (i < static_cast<std::size_t>(cut.position)) {
        upstream_side = true;
      } else {
        downstream_side = true;
      }
    };
    classify(g.target);
    if (g.control >= 0) classify(g.control);
    if (upstream_side && downstream_side) {
      throw std::invalid_argument(
          "gate " + std::to_string(i) + " (" + to_string(g.kind) +
          ") spans the cut on wire " + std::to_string(w));
    }
    if (upstream_side) {
      up.circuit.add(g);
    } else {
      CircuitGate moved = g;
      moved.target -= w;
      if (moved.control >= 0) moved.control -= w;
      down.circuit.add(moved);
    }
  }
  return {std::move(up), std::move(down), cut, n};
}

double execute_upstream(const Fragment& upstream, const CutTerm& term,
                        const PauliObservable& upstream_observable) {
  const StateVector state = run_upstream(upstream);
  return expectation(state, joint_upstream_observable(upstream,
                                                      upstream_observable,
                                                      term.observable));
}

double execute_upstream(const Fragment& upstream, const CutTerm& term,
                        std::size_t upstream_basis_index) {
  const StateVector state = run_upstream(upstream);
  if (upstream_basis_index >= state.size() / 2) {
    throw std::invalid_argument("upstream basis index out of range");
  }
  return upstream_tables(state).of(term.observable)[upstream_basis_index];
}

double execute_downstream(const Fragment& downstream, const CutTerm& term,
                          const PauliObservable& downstream_observable) {
  if (downstream_observable.n_qubits() != downstream.circuit.n_qubits()) {
    throw std::invalid_argument(
        "downstream observable must cover the fresh wire plus the remaining "
        "qubits");
  }
  const StateVector state = run_downstream(downstream, term.preparation);
  return expectation(state, downstream_observable);
}

std::vector<double> execute_downstream(const Fragment& downstream,
                                       const CutTerm& term) {
  return run_downstream(downstream, term.preparation).probabilities();
}

ReconstructionPlan make_plan(FragmentPair fragments) {
  return {std::move(fragments), cut_terms()};
}

double reconstruct_expectation(const ReconstructionPlan& plan,
                               const PauliObservable& observable,
                               const ReconstructionOptions& options) {
  const std::size_t n = plan.fragments.original_n_qubits;
  if (observable.n_qubits() != n) {
    throw std::invalid_argument("observable must cover the uncut circuit");
  }
  const int w = plan.fragments.cut.wire;

  // Factor the Pauli string across the cut: qubits below the wire are
  // measured upstream; the wire itself and everything above it are
  // measured downstream (the wire's factor lands on the fresh qubit).
  PauliObservable p_up{std::vector<Pauli>(
      observable.factors.begin(), observable.factors.begin() + w)};
  PauliObservable p_down{std::vector<Pauli>(observable.factors.begin() + w,
                                            observable.factors.end())};

  const StateVector up_state = run_upstream(plan.fragments.upstream);
  std::array<double, 4> up_by_basis{};  // indexed by Pauli value I,X,Y,Z
  for (Pauli p : {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z}) {
    up_by_basis[static_cast<std::size_t>(p)] = expectation(
        up_state,
        joint_upstream_observable(plan.fragments.upstream, p_up, p));
  }

  std::array<double, 6> down_by_prep{};
  auto run_prep = [&](std::size_t e) {
    return expectation(
        run_downstream(plan.fragments.downstream, kEigenstates[e]), p_down);
  };
  if (options.parallel) {
    std::array<std::future<double>, 6> futures;
    for (std::size_t e = 0; e < 6; ++e) {
      futures[e] = std::async(std::launch::async, run_prep, e);
    }
    for (std::size_t e = 0; e < 6; ++e) down_by_prep[e] = futures[e].get();
  } else {
    for (std::size_t e = 0; e < 6; ++e) down_by_prep[e] = run_prep(e);
  }

  // Fixed summation order over the term table keeps the result
  // bit-identical across execution schedules.
  double total = 0.0;
  for (const CutTerm& term : plan.terms) {
    total += term.coefficient *
             up_by_basis[static_cast<std::size_t>(term.observable)] *
             down_by_prep[static_cast<std::size_t>(term.preparation)];
  }
  return total;
}

std::vector<double> reconstruct_probabilities(
    const ReconstructionPlan& plan, const ReconstructionOptions& options) {
  const StateVector up_state = run_upstream(plan.fragments.upstream);
  const UpstreamTables tables = upstream_tables(up_state);

  const std::size_t n_down = plan.fragments.downstream.circuit.n_qubits();
  std::array<std::vector<double>, 6> down_probs;
  auto run_prep = [&](std::size_t e) {
    return run_downstream(plan.fragments.downstream, kEigenstates[e])
        .probabilities();
  };
  if (options.parallel) {
    std::array<std::future<std::vector<double>>, 6> futures;
    for (std::size_t e = 0; e < 6; ++e) {
      futures[e] = std::async(std::launch::async, run_prep, e);
    }
    for (std::size_t e = 0; e < 6; ++e) down_probs[e] = futures[e].get();
  } else {
    for (std::size_t e = 0; e < 6; ++e) down_probs[e] = run_prep(e);
  }

  const std::size_t up_entries = tables.i.size();
  const std::size_t down_entries = std::size_t{1} << n_down;
  std::vector<double> probs(up_entries * down_entries, 0.0);
  for (const CutTerm& term : plan.terms) {
    const std::vector<double>& up = tables.of(term.observable);
    const std::vector<double>& down =
        down_probs[static_cast<std::size_t>(term.preparation)];
    for (std::size_t bu = 0; bu < up_entries; ++bu) {
      const double weighted = term.coefficient * up[bu];
      double* row = probs.data() + bu * down_entries;
      for (std::size_t bd = 0; bd < down_entries; ++bd) {
        row[bd] += weighted * down[bd];
      }
    }
  }
  return probs;
}

std::vector<double> clamp_probabilities(std::vector<double> probabilities) {
  double sum = 0.0;
  for (double& p : probabilities) {
    if (p < 0.0) p = 0.0;
    sum += p;
  }
  if (sum <= 0.0) {
    throw std::invalid_argument("probability vector has no positive mass");
  }
  for (double& p : probabilities) p /= sum;
  return probabilities;
}

}  // namespace qcut
