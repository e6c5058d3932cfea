// toklab/ctc/ctc.cc
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

#include "toklab/ctc/ctc.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace toklab::ctc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

inline double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double mx = std::max(a, b);
  return mx + std::log1p(std::exp(std::min(a, b) - mx));
}

}  // namespace

int ctc_min_frames(const std::vector<int>& target) {
  int repeats = 0;
  for (size_t i = 1; i < target.size(); ++i)
    if (target[i] == target[i - 1]) ++repeats;
  return static_cast<int>(target.size()) + repeats;
}

CtcResult ctc_loss(const nnet::Tensor& logits, const std::vector<int>& target) {
  require(logits.rank() == 2, "ctc_loss: logits must be T x (V+1)");
  const int t_len = logits.dim(0);
  const int n_cls = logits.dim(1);
  require(n_cls >= 2, "ctc_loss: need blank plus at least one label class");
  require(logits.all_finite(), "ctc_loss: non-finite logits");
  for (int lbl : target)
    require(lbl >= 1 && lbl < n_cls,
            "ctc_loss: target label " + std::to_string(lbl) + " outside [1," +
                std::to_string(n_cls) + ")");
  require(t_len >= ctc_min_frames(target),
          "ctc_loss: infeasible target, need >= " + std::to_string(ctc_min_frames(target)) +
              " frames but got " + std::to_string(t_len));

  // Per-frame log-softmax.
  nnet::Tensor logp({t_len, n_cls});
  for (int t = 0; t < t_len; ++t) {
    const double* row = logits.row(t);
    double mx = row[0];
    for (int k = 1; k < n_cls; ++k) mx = std::max(mx, row[k]);
    double sum = 0.0;
    for (int k = 0; k < n_cls; ++k) sum += std::exp(row[k] - mx);
    const double lse = mx + std::log(sum);
    double* out = logp.row(t);
    for (int k = 0; k < n_cls; ++k) out[k] = row[k] - lse;
  }

  // Extended label sequence: blank, l1, blank, l2, ..., blank.
  const int s_len = 2 * static_cast<int>(target.size()) + 1;
  auto ext_label = [&](int s) { return (s % 2 == 0) ? kBlank : target[static_cast<size_t>(s / 2)]; };
  auto skip_allowed = [&](int s) {
    // s-2 -> s allowed when s holds a label that differs from the one at s-2.
    return s >= 2 && s % 2 == 1 && ext_label(s) != ext_label(s - 2);
  };

  // alpha[t][s]: log prob of prefixes ending at lattice position s after
  // emitting frame t (emission at t included).
  nnet::Tensor alpha({t_len, s_len});
  alpha.fill(kNegInf);
  alpha.at(0, 0) = logp.at(0, kBlank);
  if (s_len > 1) alpha.at(0, 1) = logp.at(0, ext_label(1));
  for (int t = 1; t < t_len; ++t) {
    for (int s = 0; s < s_len; ++s) {
      double acc = alpha.at(t - 1, s);
      if (s >= 1) acc = log_add(acc, alpha.at(t - 1, s - 1));
      if (skip_allowed(s)) acc = log_add(acc, alpha.at(t - 1, s - 2));
      alpha.at(t, s) = acc == kNegInf ? kNegInf : acc + logp.at(t, ext_label(s));
    }
  }
  double log_prob = alpha.at(t_len - 1, s_len - 1);
  if (s_len > 1) log_prob = log_add(log_prob, alpha.at(t_len - 1, s_len - 2));
  require(log_prob != kNegInf, "ctc_loss: target has zero probability mass");

  // beta[t][s]: log prob of completing from position s using frames
  // t+1..T-1 (emission at t excluded).
  nnet::Tensor beta({t_len, s_len});
  beta.fill(kNegInf);
  beta.at(t_len - 1, s_len - 1) = 0.0;
  if (s_len > 1) beta.at(t_len - 1, s_len - 2) = 0.0;
  for (int t = t_len - 2; t >= 0; --t) {
    for (int s = s_len - 1; s >= 0; --s) {
      double acc = beta.at(t + 1, s) + logp.at(t + 1, ext_label(s));
      if (s + 1 < s_len)
        acc = log_add(acc, beta.at(t + 1, s + 1) + logp.at(t + 1, ext_label(s + 1)));
      if (s + 2 < s_len && skip_allowed(s + 2))
        acc = log_add(acc, beta.at(t + 1, s + 2) + logp.at(t + 1, ext_label(s + 2)));
      beta.at(t, s) = acc;
    }
  }

  // grad[t][k] = y[t][k] - exp(LSE_{s: l(s)=k}(alpha[t][s] + beta[t][s]) - log_prob).
  CtcResult res;
  res.loss = -log_prob;
  res.grad = nnet::Tensor({t_len, n_cls});
  std::vector<double> occ(static_cast<size_t>(n_cls));
  for (int t = 0; t < t_len; ++t) {
    std::fill(occ.begin(), occ.end(), kNegInf);
    for (int s = 0; s < s_len; ++s) {
      const int k = ext_label(s);
      occ[static_cast<size_t>(k)] =
          log_add(occ[static_cast<size_t>(k)], alpha.at(t, s) + beta.at(t, s));
    }
    double* g = res.grad.row(t);
    const double* lp = logp.row(t);
    for (int k = 0; k < n_cls; ++k) {
      const double y = std::exp(lp[k]);
      const double o = occ[static_cast<size_t>(k)];
      g[k] = y - (o == kNegInf ? 0.0 : std::exp(o - log_prob));
    }
  }
  return res;
}

std::vector<int> ctc_greedy_decode(const nnet::Tensor& logits) {
  require(logits.rank() == 2, "ctc_greedy_decode: logits must be T x (V+1)");
  const int t_len = logits.dim(0);
  const int n_cls = logits.dim(1);
  std::vector<int> out;
  int prev = -1;
  for (int t = 0; t < t_len; ++t) {
    const double* row = logits.row(t);
    int best = 0;
    for (int k = 1; k < n_cls; ++k)
      if (row[k] > row[best]) best = k;
    if (best != prev && best != kBlank) out.push_back(best);
    prev = best;
  }
  return out;
}

}  // namespace toklab::ctc
