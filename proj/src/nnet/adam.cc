// toklab/nnet/adam.cc
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

#include "toklab/nnet/adam.h"

#include <cmath>

namespace toklab::nnet {

void adam_step(const std::vector<Parameter*>& params, double lr, long step_count,
               const AdamConfig& cfg) {
  require(step_count >= 1, "adam_step: step_count is 1-based");
  const double bc1 = 1.0 - std::pow(cfg.beta1, static_cast<double>(step_count));
  const double bc2 = 1.0 - std::pow(cfg.beta2, static_cast<double>(step_count));
  for (Parameter* p : params) {
    if (p->trainable) {
      for (size_t i = 0; i < p->value.numel(); ++i) {
        const double g = p->grad.data[i];
        double& m = p->adam_m.data[i];
        double& v = p->adam_v.data[i];
        m = cfg.beta1 * m + (1.0 - cfg.beta1) * g;
        v = cfg.beta2 * v + (1.0 - cfg.beta2) * g * g;
        const double m_hat = m / bc1;
        const double v_hat = v / bc2;
        p->value.data[i] -= lr * m_hat / (std::sqrt(v_hat) + cfg.eps);
      }
    }
    p->zero_grad();
  }
}

}  // namespace toklab::nnet
