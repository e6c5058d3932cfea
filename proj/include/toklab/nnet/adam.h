// toklab/nnet/adam.h
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

#ifndef TOKLAB_NNET_ADAM_H_
#define TOKLAB_NNET_ADAM_H_

#include <vector>

#include "toklab/nnet/param.h"

namespace toklab::nnet {

struct AdamConfig {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

// Bias-corrected Adam update over all trainable params; step_count is the
// 1-based index of this update. Gradients of every passed parameter
// (frozen ones included) are zeroed afterwards.
void adam_step(const std::vector<Parameter*>& params, double lr, long step_count,
               const AdamConfig& cfg = AdamConfig{});

}  // namespace toklab::nnet

#endif  // TOKLAB_NNET_ADAM_H_
