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
 * Hybrid classifier: angle encoding + MPS ansatz producing a 2^n
 * probability vector, followed by a fully connected softmax head.
 * The quantum forward pass runs either as one uncut simulation or as a
 * cut-and-reconstruct execution; the two give identical results up to
 * rounding, so the flag can be toggled freely.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qcut/circuit.hpp"
#include "qcut/cutting.hpp"

namespace qcut {

struct ModelSpec {
  std::size_t n_qubits = 8;
  int layers = 1;
  KernelSpec kernel = KernelSpec::ladder_default();
  int n_classes = 2;
  FeatureScaling scaling = FeatureScaling::None;
  bool cut_enabled = false;
  /// Wire to cut; -1 selects n_qubits / 2. Must leave at least two
  /// qubits on each side of the cut.
  int cut_wire = -1;
  /// Cut position in the decomposed execution circuit; defaults to the
  /// point right after the kernel on (wire-1, wire).
  std::optional<int> cut_position;

  int resolved_cut_wire() const {
    return cut_wire >= 0 ? cut_wire : static_cast<int>(n_qubits) / 2;
  }
};

struct Model {
  ModelSpec spec;
  Circuit ansatz;                   // symbolic trainable slots
  std::vector<double> theta;        // trainable quantum angles, radians
  std::vector<double> head_weight;  // n_classes x 2^n, row-major
  std::vector<double> head_bias;    // n_classes

  std::size_t n_qubits() const { return spec.n_qubits; }
  std::size_t prob_dim() const { return std::size_t{1} << spec.n_qubits; }
  int n_classes() const { return spec.n_classes; }
  EncodingSpec encoding() const { return {spec.n_qubits, spec.scaling}; }
};

/**
 * Builds a model with seeded initialization: theta uniform in [-pi, pi),
 * head weight and bias uniform in [-k, k] with k = 1/sqrt(2^n), drawn in
 * that order from a single mt19937_64(seed).
 */
Model make_model(const ModelSpec& spec, std::uint64_t seed);

/**
 * Execution form of a model's quantum part: encoding layer + ansatz,
 * with every CRY pre-decomposed so the two-term shift rule applies to
 * each parametrized gate, plus the derived cut location and the list of
 * trainable-parameter sites in the decomposed circuit.
 */
class CompiledModel {
 public:
  explicit CompiledModel(const Model& model);

  /// One trainable parameter occurrence: gate `gate_index` of the
  /// execution circuit uses theta[theta_index] scaled by `scale`.
  struct ParamSite {
    std::size_t gate_index;
    std::size_t theta_index;
    double scale;
  };

  const Circuit& execution_circuit() const { return execution_; }
  const std::optional<CutSpec>& cut() const { return cut_; }
  const std::vector<ParamSite>& param_sites() const { return sites_; }

  /// Binds scaled features and theta into the execution circuit.
  Circuit bind_inputs(std::span<const double> theta,
                      std::span<const double> features) const;

  /// 2^n output distribution of a bound execution circuit, via uncut
  /// simulation or cut reconstruction; clamped and renormalized.
  std::vector<double> probabilities(const Circuit& bound) const;

  /// Convenience: bind then evaluate.
  std::vector<double> probabilities(std::span<const double> theta,
                                    std::span<const double> features) const;

 private:
  EncodingSpec encoding_;
  Circuit execution_;
  std::optional<CutSpec> cut_;
  std::vector<ParamSite> sites_;
};

/// Numerically stable softmax.
std::vector<double> softmax(std::span<const double> logits);

struct ForwardResult {
  std::vector<double> class_probabilities;    // softmax(W p + b)
  std::vector<double> quantum_probabilities;  // p, the 2^n distribution
};

ForwardResult forward(const Model& model, const CompiledModel& compiled,
                      std::span<const double> features);

/// Convenience overload that compiles the model ad hoc.
ForwardResult forward(const Model& model, std::span<const double> features);

}  // namespace qcut
