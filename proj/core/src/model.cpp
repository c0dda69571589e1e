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

#include "qcut/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qcut {

Model make_model(const ModelSpec& spec, std::uint64_t seed) {
  if (spec.n_qubits < 2) {
    throw std::invalid_argument("model needs at least two qubits");
  }
  if (spec.n_classes < 2) {
    throw std::invalid_argument("model needs at least two classes");
  }
  if (spec.cut_enabled) {
    const int w = spec.resolved_cut_wire();
    if (w < 1 || static_cast<std::size_t>(w) + 1 >= spec.n_qubits) {
      throw std::invalid_argument(
          "cut wire must leave at least two qubits on each side");
    }
  }

  Model model;
  model.spec = spec;
  model.ansatz = build_mps_ansatz(spec.n_qubits, spec.kernel, spec.layers);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle_dist(-std::numbers::pi,
                                                    std::numbers::pi);
  const std::size_t n_theta = model.ansatz.slot_count(SlotRole::Trainable);
  model.theta.resize(n_theta);
  for (double& t : model.theta) t = angle_dist(rng);

  const std::size_t dim = model.prob_dim();
  const double k = 1.0 / std::sqrt(static_cast<double>(dim));
  std::uniform_real_distribution<double> head_dist(-k, k);
  model.head_weight.resize(static_cast<std::size_t>(spec.n_classes) * dim);
  for (double& w : model.head_weight) w = head_dist(rng);
  model.head_bias.resize(static_cast<std::size_t>(spec.n_classes));
  for (double& b : model.head_bias) b = head_dist(rng);
  return model;
}

namespace {

/// Cut position for a 1-layer ladder circuit: one past the last gate
/// acting on both (wire-1, wire), i.e. right after that pair's kernel.
int derive_cut_position(const Circuit& circuit, int wire) {
  int last = -1;
  const auto& gates = circuit.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (gates[i].touches(wire) && gates[i].touches(wire - 1)) {
      last = static_cast<int>(i);
    }
  }
  if (last < 0) {
    throw std::invalid_argument(
        "no kernel found below the cut wire; give an explicit cut position");
  }
  return last + 1;
}

}  // namespace

CompiledModel::CompiledModel(const Model& model)
    : encoding_(model.encoding()),
      execution_(Circuit(model.spec.n_qubits)) {
  const Circuit full =
      concat(build_encoding_layer(encoding_), model.ansatz);
  execution_ = decompose_controlled_rotations(full);

  // Map decomposed-circuit gates back to theta indices. Trainable slot
  // ids are dense and ordered, so position in the sorted id list is the
  // theta index.
  const auto ids = execution_.slot_ids(SlotRole::Trainable);
  if (ids.size() != model.theta.size()) {
    throw std::invalid_argument("theta length does not match the ansatz");
  }
  for (std::size_t i = 0; i < execution_.gates().size(); ++i) {
    const CircuitGate& g = execution_.gates()[i];
    if (!g.param.is_symbolic()) continue;
    const Slot& slot =
        execution_.slots()[static_cast<std::size_t>(*g.param.slot)];
    if (slot.role != SlotRole::Trainable) continue;
    const auto it = std::lower_bound(ids.begin(), ids.end(), slot.id);
    sites_.push_back({i, static_cast<std::size_t>(it - ids.begin()),
                      g.param.scale});
  }

  if (model.spec.cut_enabled) {
    const int wire = model.spec.resolved_cut_wire();
    const int position = model.spec.cut_position.has_value()
                             ? *model.spec.cut_position
                             : derive_cut_position(execution_, wire);
    cut_ = CutSpec{wire, position};
  }
}

Circuit CompiledModel::bind_inputs(std::span<const double> theta,
                                   std::span<const double> features) const {
  if (features.size() != encoding_.n_features) {
    throw std::invalid_argument("feature count does not match qubit count");
  }
  const std::vector<double> scaled =
      scale_features({features.begin(), features.end()}, encoding_.scaling);
  return bind(execution_, scaled, theta);
}

std::vector<double> CompiledModel::probabilities(const Circuit& bound) const {
  if (!cut_.has_value()) {
    return clamp_probabilities(simulate(bound).probabilities());
  }
  const ReconstructionPlan plan = make_plan(split(bound, *cut_));
  return clamp_probabilities(reconstruct_probabilities(plan));
}

std::vector<double> CompiledModel::probabilities(
    std::span<const double> theta, std::span<const double> features) const {
  return probabilities(bind_inputs(theta, features));
}

std::vector<double> softmax(std::span<const double> logits) {
  const double zmax = *std::max_element(logits.begin(), logits.end());
  std::vector<double> out(logits.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    out[i] = std::exp(logits[i] - zmax);
    sum += out[i];
  }
  for (double& v : out) v /= sum;
  return out;
}

ForwardResult forward(const Model& model, const CompiledModel& compiled,
                      std::span<const double> features) {
  ForwardResult result;
  result.quantum_probabilities =
      compiled.probabilities(model.theta, features);
  const std::size_t dim = model.prob_dim();
  const std::size_t classes = static_cast<std::size_t>(model.n_classes());
  std::vector<double> logits(classes);
  for (std::size_t c = 0; c < classes; ++c) {
    double z = model.head_bias[c];
    const double* row = model.head_weight.data() + c * dim;
    for (std::size_t k = 0; k < dim; ++k) {
      z += row[k] * result.quantum_probabilities[k];
    }
    logits[c] = z;
  }
  result.class_probabilities = softmax(logits);
  return result;
}

ForwardResult forward(const Model& model, std::span<const double> features) {
  return forward(model, CompiledModel(model), features);
}

}  // namespace qcut
