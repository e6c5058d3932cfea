// toklab/nnet/param.cc
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

#include "toklab/nnet/param.h"

#include <cmath>

namespace toklab::nnet {

void init_uniform_fan_in(Parameter& p, int fan_in, std::mt19937_64& rng) {
  require(fan_in > 0, "fan_in must be positive");
  const double bound = 1.0 / std::sqrt(static_cast<double>(fan_in));
  std::uniform_real_distribution<double> dist(-bound, bound);
  for (double& v : p.value.data) v = dist(rng);
}

void init_normal_embedding(Parameter& p, int embed_dim, std::mt19937_64& rng) {
  require(embed_dim > 0, "embed_dim must be positive");
  std::normal_distribution<double> dist(0.0, 1.0 / std::sqrt(static_cast<double>(embed_dim)));
  for (double& v : p.value.data) v = dist(rng);
}

}  // namespace toklab::nnet
