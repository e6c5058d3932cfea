// toklab/ctc/ctc.h
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

#ifndef TOKLAB_CTC_CTC_H_
#define TOKLAB_CTC_CTC_H_

#include <vector>

#include "toklab/nnet/tensor.h"

namespace toklab::ctc {

// Blank lives at column 0 of every logit matrix; label classes occupy
// columns 1..V. Token ids are shifted up by one when they enter a CTC head
// and shifted back down on decode.
inline constexpr int kBlank = 0;

struct CtcResult {
  double loss = 0.0;      // -log p(target | logits), nats
  nnet::Tensor grad;      // d loss / d logits, T x (V+1)
};

// Feasibility bound: a target of length L with R adjacent equal label pairs
// needs at least L + R frames.
int ctc_min_frames(const std::vector<int>& target);

// Forward-backward CTC over the 2L+1 extended label lattice, all in log
// space. logits: T x (V+1) pre-softmax scores; target: labels in [1..V]
// (no blanks). An infeasible target raises an error rather than returning
// an infinite loss.
CtcResult ctc_loss(const nnet::Tensor& logits, const std::vector<int>& target);

// Per-frame argmax (ties -> lowest index), collapse adjacent repeats,
// strip blanks. Returned labels are in [1..V].
std::vector<int> ctc_greedy_decode(const nnet::Tensor& logits);

}  // namespace toklab::ctc

#endif  // TOKLAB_CTC_CTC_H_
