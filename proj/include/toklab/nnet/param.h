// toklab/nnet/param.h
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

#ifndef TOKLAB_NNET_PARAM_H_
#define TOKLAB_NNET_PARAM_H_

#include <random>
#include <string>
#include <vector>

#include "toklab/nnet/tensor.h"

namespace toklab::nnet {

// A trainable tensor with its gradient and Adam moment buffers.
// `trainable == false` marks a frozen parameter: the optimizer skips it
// and grad_check treats it as a constant.
struct Parameter {
  std::string name;
  Tensor value;
  Tensor grad;
  Tensor adam_m;
  Tensor adam_v;
  bool trainable = true;

  Parameter() = default;
  Parameter(std::string n, std::vector<int> shape)
      : name(std::move(n)), value(shape), grad(shape), adam_m(shape), adam_v(std::move(shape)) {}

  void zero_grad() { grad.fill(0.0); }
};

// Weight init: uniform(-1/sqrt(fan_in), +1/sqrt(fan_in)).
void init_uniform_fan_in(Parameter& p, int fan_in, std::mt19937_64& rng);
// Embedding init: normal(0, 1/sqrt(embed_dim)).
void init_normal_embedding(Parameter& p, int embed_dim, std::mt19937_64& rng);

}  // namespace toklab::nnet

#endif  // TOKLAB_NNET_PARAM_H_
