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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace qcut {

struct AdadeltaConfig {
  double learning_rate = 0.05;
  double rho = 0.9;
  double epsilon = 1e-6;
};

/// Adadelta accumulators: a decayed average of squared gradients and a
/// decayed average of squared applied updates, one entry per parameter.
struct AdadeltaState {
  AdadeltaConfig config;
  std::vector<double> grad_sq_avg;
  std::vector<double> update_sq_avg;

  AdadeltaState() = default;
  explicit AdadeltaState(std::size_t n_params, AdadeltaConfig cfg = {})
      : config(cfg), grad_sq_avg(n_params, 0.0), update_sq_avg(n_params, 0.0) {}

  std::size_t size() const { return grad_sq_avg.size(); }
};

/**
 * One Adadelta update, in place:
 *
 *   E[g^2]  <- rho E[g^2] + (1-rho) g^2
 *   delta    =  lr * sqrt(E[d^2] + eps) / sqrt(E[g^2] + eps) * g
 *   E[d^2]  <- rho E[d^2] + (1-rho) delta^2
 *   param   <- param - delta
 *
 * The update average tracks the applied (learning-rate-scaled) delta,
 * so for lr^2 < rho repeated identical gradients produce non-increasing
 * step magnitudes. Throws std::invalid_argument on shape mismatch.
 */
void adadelta_step(AdadeltaState& state, std::span<double> params,
                   std::span<const double> grads);

}  // namespace qcut
