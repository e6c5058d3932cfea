// toklab/nnet/grad_check.cc
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

#include "toklab/nnet/grad_check.h"

#include <algorithm>
#include <cmath>
#include <utility>

namespace toklab::nnet {

GradCheckResult grad_check(const std::vector<Parameter*>& params,
                           const std::function<double()>& loss_fn,
                           const std::function<double()>& loss_and_grad_fn,
                           std::mt19937_64& rng, double eps, size_t max_coords) {
  for (Parameter* p : params) p->zero_grad();
  loss_and_grad_fn();

  // Snapshot analytic grads, then enumerate trainable coordinates.
  std::vector<std::pair<size_t, size_t>> coords;  // (param index, flat index)
  for (size_t pi = 0; pi < params.size(); ++pi) {
    if (!params[pi]->trainable) continue;
    for (size_t i = 0; i < params[pi]->value.numel(); ++i) coords.emplace_back(pi, i);
  }
  std::vector<Tensor> analytic;
  analytic.reserve(params.size());
  for (Parameter* p : params) analytic.push_back(p->grad);

  std::shuffle(coords.begin(), coords.end(), rng);
  if (coords.size() > max_coords) coords.resize(max_coords);

  GradCheckResult res;
  for (auto [pi, i] : coords) {
    double& v = params[pi]->value.data[i];
    const double orig = v;
    v = orig + eps;
    const double lp = loss_fn();
    v = orig - eps;
    const double lm = loss_fn();
    v = orig;
    const double numeric = (lp - lm) / (2.0 * eps);
    const double a = analytic[pi].data[i];
    const double rel = std::abs(a - numeric) / std::max({std::abs(a), std::abs(numeric), 1e-6});
    res.max_rel_err = std::max(res.max_rel_err, rel);
    ++res.coords_checked;
  }
  for (Parameter* p : params) p->zero_grad();
  return res;
}

}  // namespace toklab::nnet
