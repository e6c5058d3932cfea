// toklab/nnet/tensor.h
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

#ifndef TOKLAB_NNET_TENSOR_H_
#define TOKLAB_NNET_TENSOR_H_

#include <cmath>
#include <cstddef>
#include <vector>

#include "toklab/util/common.h"

namespace toklab::nnet {

// Dense row-major tensor of doubles. Rank 1..3 is all this project needs.
struct Tensor {
  std::vector<int> shape;
  std::vector<double> data;

  Tensor() = default;
  explicit Tensor(std::vector<int> s) : shape(std::move(s)), data(numel_of(shape), 0.0) {}

  static size_t numel_of(const std::vector<int>& s) {
    size_t n = 1;
    for (int d : s) {
      require(d >= 0, "tensor dims must be non-negative");
      n *= static_cast<size_t>(d);
    }
    return n;
  }
  static Tensor zeros(std::vector<int> s) { return Tensor(std::move(s)); }

  size_t numel() const { return data.size(); }
  int dim(int i) const { return shape[static_cast<size_t>(i)]; }
  int rank() const { return static_cast<int>(shape.size()); }

  double& at(int i) { return data[static_cast<size_t>(i)]; }
  double at(int i) const { return data[static_cast<size_t>(i)]; }
  double& at(int i, int j) { return data[static_cast<size_t>(i) * shape[1] + j]; }
  double at(int i, int j) const { return data[static_cast<size_t>(i) * shape[1] + j]; }
  double& at(int i, int j, int k) {
    return data[(static_cast<size_t>(i) * shape[1] + j) * shape[2] + k];
  }
  double at(int i, int j, int k) const {
    return data[(static_cast<size_t>(i) * shape[1] + j) * shape[2] + k];
  }

  // Pointer to the start of row i of a rank-2 tensor.
  double* row(int i) { return data.data() + static_cast<size_t>(i) * shape[1]; }
  const double* row(int i) const { return data.data() + static_cast<size_t>(i) * shape[1]; }

  bool same_shape(const Tensor& o) const { return shape == o.shape; }

  void fill(double v) { std::fill(data.begin(), data.end(), v); }

  bool all_finite() const {
    for (double v : data)
      if (!std::isfinite(v)) return false;
    return true;
  }
};

}  // namespace toklab::nnet

#endif  // TOKLAB_NNET_TENSOR_H_
