// toklab/nnet/grad_check.h
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

#ifndef TOKLAB_NNET_GRAD_CHECK_H_
#define TOKLAB_NNET_GRAD_CHECK_H_

#include <functional>
#include <random>
#include <vector>

#include "toklab/nnet/param.h"

namespace toklab::nnet {

struct GradCheckResult {
  double max_rel_err = 0.0;
  size_t coords_checked = 0;
};

// Central-difference check of analytic gradients.
//
// loss_fn()          evaluates the loss with the current parameter values.
// loss_and_grad_fn() evaluates the loss and accumulates gradients into the
//                    parameters' grad tensors (which this routine zeroes
//                    beforehand and afterwards).
//
// Up to max_coords coordinates are sampled from the trainable parameters;
// frozen parameters are treated as constants and skipped.
GradCheckResult grad_check(const std::vector<Parameter*>& params,
                           const std::function<double()>& loss_fn,
                           const std::function<double()>& loss_and_grad_fn,
                           std::mt19937_64& rng, double eps = 1e-4, size_t max_coords = 200);

}  // namespace toklab::nnet

#endif  // TOKLAB_NNET_GRAD_CHECK_H_
