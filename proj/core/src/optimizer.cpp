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

#include "qcut/optimizer.hpp"

#include <cmath>
#include <stdexcept>

namespace qcut {

void adadelta_step(AdadeltaState& state, std::span<double> params,
                   std::span<const double> grads) {
  if (params.size() != grads.size() || params.size() != state.size()) {
    throw std::invalid_argument("parameter, gradient, and accumulator "
                                "shapes must match");
  }
  const double rho = state.config.rho;
  const double eps = state.config.epsilon;
  const double lr = state.config.learning_rate;
  for (std::size_t i = 0; i < params.size(); ++i) {
    const double g = grads[i];
    state.grad_sq_avg[i] = rho * state.grad_sq_avg[i] + (1.0 - rho) * g * g;
    const double delta = lr * std::sqrt(state.update_sq_avg[i] + eps) /
                         std::sqrt(state.grad_sq_avg[i] + eps) * g;
    state.update_sq_avg[i] =
        rho * state.update_sq_avg[i] + (1.0 - rho) * delta * delta;
    params[i] -= delta;
  }
}

}  // namespace qcut
