// toklab/nnet/ops.h
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

#ifndef TOKLAB_NNET_OPS_H_
#define TOKLAB_NNET_OPS_H_

#include <vector>

#include "toklab/nnet/param.h"
#include "toklab/nnet/tensor.h"

namespace toklab::nnet {

// All ops come as an explicit forward/backward pair. The caller keeps the
// forward-pass inputs alive and hands them back to the backward call, which
// accumulates parameter gradients (+=) and returns the input gradient.

// Embedding lookup. table: V x E, output: |ids| x E.
Tensor embedding_forward(const std::vector<int>& ids, const Parameter& table);
void embedding_backward(const std::vector<int>& ids, Parameter& table, const Tensor& dy);

// y = x W + b. x: T x In, W: In x Out, b: Out.
Tensor linear_forward(const Tensor& x, const Parameter& w, const Parameter& b);
Tensor linear_backward(const Tensor& x, Parameter& w, Parameter& b, const Tensor& dy);

// Elementwise LeakyReLU; the subgradient at exactly 0 takes the positive
// branch so runs are deterministic.
Tensor leaky_relu_forward(const Tensor& x, double slope = 0.01);
Tensor leaky_relu_backward(const Tensor& x, const Tensor& dy, double slope = 0.01);

// Non-causal dilated 1-D convolution with same-length zero padding.
// x: T x Din, kernel: width x Din x Dout (width odd), output: T x Dout.
Tensor dilated_conv1d_forward(const Tensor& x, const Parameter& kernel, int dilation);
Tensor dilated_conv1d_backward(const Tensor& x, Parameter& kernel, int dilation,
                               const Tensor& dy);

// Softmax-weighted convex combination of L equal-shaped feature layers.
struct LayerStack {
  std::vector<Tensor> layers;  // each T x D
};

// mix_logits: Parameter of shape {L}. Output: T x D.
Tensor weighted_sum_forward(const LayerStack& stack, const Parameter& mix_logits);
// Accumulates into mix_logits.grad; when dlayers != nullptr it receives
// the gradient w.r.t. each input layer.
void weighted_sum_backward(const LayerStack& stack, Parameter& mix_logits, const Tensor& dy,
                           std::vector<Tensor>* dlayers = nullptr);

// Softmax over a logit vector (helper shared with weighted_sum and tests).
std::vector<double> softmax(const std::vector<double>& logits);

}  // namespace toklab::nnet

#endif  // TOKLAB_NNET_OPS_H_
