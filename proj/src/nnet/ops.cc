// toklab/nnet/ops.cc
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

#include "toklab/nnet/ops.h"

#include <algorithm>
#include <cmath>

namespace toklab::nnet {

Tensor embedding_forward(const std::vector<int>& ids, const Parameter& table) {
  require(table.value.rank() == 2, "embedding table must be V x E");
  const int v = table.value.dim(0);
  const int e = table.value.dim(1);
  Tensor y({static_cast<int>(ids.size()), e});
  for (size_t t = 0; t < ids.size(); ++t) {
    require(ids[t] >= 0 && ids[t] < v,
            "embedding id " + std::to_string(ids[t]) + " out of range [0," + std::to_string(v) + ")");
    const double* src = table.value.row(ids[t]);
    std::copy(src, src + e, y.row(static_cast<int>(t)));
  }
  return y;
}

void embedding_backward(const std::vector<int>& ids, Parameter& table, const Tensor& dy) {
  const int e = table.value.dim(1);
  require(dy.rank() == 2 && dy.dim(0) == static_cast<int>(ids.size()) && dy.dim(1) == e,
          "embedding_backward: dy shape mismatch");
  for (size_t t = 0; t < ids.size(); ++t) {
    double* g = table.grad.row(ids[t]);
    const double* d = dy.row(static_cast<int>(t));
    for (int j = 0; j < e; ++j) g[j] += d[j];
  }
}

Tensor linear_forward(const Tensor& x, const Parameter& w, const Parameter& b) {
  require(x.rank() == 2 && w.value.rank() == 2, "linear: x and W must be rank 2");
  const int t_len = x.dim(0), d_in = x.dim(1);
  require(w.value.dim(0) == d_in, "linear: inner dims mismatch");
  const int d_out = w.value.dim(1);
  require(b.value.rank() == 1 && b.value.dim(0) == d_out, "linear: bias shape mismatch");

  Tensor y({t_len, d_out});
  for (int t = 0; t < t_len; ++t) {
    const double* xt = x.row(t);
    double* yt = y.row(t);
    std::copy(b.value.data.begin(), b.value.data.end(), yt);
    for (int i = 0; i < d_in; ++i) {
      const double xv = xt[i];
      if (xv == 0.0) continue;
      const double* wr = w.value.row(i);
      for (int o = 0; o < d_out; ++o) yt[o] += xv * wr[o];
    }
  }
  return y;
}

Tensor linear_backward(const Tensor& x, Parameter& w, Parameter& b, const Tensor& dy) {
  const int t_len = x.dim(0), d_in = x.dim(1), d_out = w.value.dim(1);
  require(dy.rank() == 2 && dy.dim(0) == t_len && dy.dim(1) == d_out,
          "linear_backward: dy shape mismatch");
  Tensor dx({t_len, d_in});
  for (int t = 0; t < t_len; ++t) {
    const double* dyt = dy.row(t);
    const double* xt = x.row(t);
    double* dxt = dx.row(t);
    for (int o = 0; o < d_out; ++o) b.grad.at(o) += dyt[o];
    for (int i = 0; i < d_in; ++i) {
      const double* wr = w.value.row(i);
      double* gwr = w.grad.row(i);
      double acc = 0.0;
      const double xv = xt[i];
      for (int o = 0; o < d_out; ++o) {
        acc += dyt[o] * wr[o];
        gwr[o] += xv * dyt[o];
      }
      dxt[i] = acc;
    }
  }
  return dx;
}

Tensor leaky_relu_forward(const Tensor& x, double slope) {
  Tensor y = x;
  for (double& v : y.data) v = v >= 0.0 ? v : slope * v;
  return y;
}

Tensor leaky_relu_backward(const Tensor& x, const Tensor& dy, double slope) {
  require(x.same_shape(dy), "leaky_relu_backward: shape mismatch");
  Tensor dx = dy;
  for (size_t i = 0; i < x.numel(); ++i)
    if (x.data[i] < 0.0) dx.data[i] *= slope;
  return dx;
}

Tensor dilated_conv1d_forward(const Tensor& x, const Parameter& kernel, int dilation) {
  require(x.rank() == 2 && kernel.value.rank() == 3, "conv1d: x rank 2, kernel rank 3");
  const int t_len = x.dim(0), d_in = x.dim(1);
  const int width = kernel.value.dim(0);
  require(width % 2 == 1, "conv1d: kernel width must be odd");
  require(kernel.value.dim(1) == d_in, "conv1d: input channel mismatch");
  require(dilation >= 1, "conv1d: dilation must be >= 1");
  const int d_out = kernel.value.dim(2);
  const int center = width / 2;

  Tensor y({t_len, d_out});
  for (int t = 0; t < t_len; ++t) {
    double* yt = y.row(t);
    for (int w = 0; w < width; ++w) {
      const int s = t + (w - center) * dilation;
      if (s < 0 || s >= t_len) continue;  // zero padding
      const double* xs = x.row(s);
      for (int i = 0; i < d_in; ++i) {
        const double xv = xs[i];
        if (xv == 0.0) continue;
        const double* kr = &kernel.value.at(w, i, 0);
        for (int o = 0; o < d_out; ++o) yt[o] += xv * kr[o];
      }
    }
  }
  return y;
}

Tensor dilated_conv1d_backward(const Tensor& x, Parameter& kernel, int dilation,
                               const Tensor& dy) {
  const int t_len = x.dim(0), d_in = x.dim(1);
  const int width = kernel.value.dim(0);
  const int d_out = kernel.value.dim(2);
  const int center = width / 2;
  require(dy.rank() == 2 && dy.dim(0) == t_len && dy.dim(1) == d_out,
          "conv1d_backward: dy shape mismatch");

  Tensor dx({t_len, d_in});
  for (int t = 0; t < t_len; ++t) {
    const double* dyt = dy.row(t);
    for (int w = 0; w < width; ++w) {
      const int s = t + (w - center) * dilation;
      if (s < 0 || s >= t_len) continue;
      const double* xs = x.row(s);
      double* dxs = dx.row(s);
      for (int i = 0; i < d_in; ++i) {
        const double* kr = &kernel.value.at(w, i, 0);
        double* gkr = &kernel.grad.at(w, i, 0);
        const double xv = xs[i];
        double acc = 0.0;
        for (int o = 0; o < d_out; ++o) {
          acc += dyt[o] * kr[o];
          gkr[o] += xv * dyt[o];
        }
        dxs[i] += acc;
      }
    }
  }
  return dx;
}

std::vector<double> softmax(const std::vector<double>& logits) {
  double mx = -std::numeric_limits<double>::infinity();
  for (double v : logits) mx = std::max(mx, v);
  std::vector<double> out(logits.size());
  double sum = 0.0;
  for (size_t i = 0; i < logits.size(); ++i) {
    out[i] = std::exp(logits[i] - mx);
    sum += out[i];
  }
  for (double& v : out) v /= sum;
  return out;
}

Tensor weighted_sum_forward(const LayerStack& stack, const Parameter& mix_logits) {
  const int l = static_cast<int>(stack.layers.size());
  require(l >= 1, "weighted_sum: need at least one layer");
  require(mix_logits.value.rank() == 1 && mix_logits.value.dim(0) == l,
          "weighted_sum: mix_logits must have one entry per layer");
  for (int i = 1; i < l; ++i)
    require(stack.layers[i].same_shape(stack.layers[0]), "weighted_sum: layer shape mismatch");

  const std::vector<double> w = softmax(mix_logits.value.data);
  Tensor y(stack.layers[0].shape);
  for (int i = 0; i < l; ++i) {
    const double wi = w[static_cast<size_t>(i)];
    const auto& li = stack.layers[static_cast<size_t>(i)].data;
    for (size_t j = 0; j < y.numel(); ++j) y.data[j] += wi * li[j];
  }
  return y;
}

void weighted_sum_backward(const LayerStack& stack, Parameter& mix_logits, const Tensor& dy,
                           std::vector<Tensor>* dlayers) {
  const int l = static_cast<int>(stack.layers.size());
  require(dy.same_shape(stack.layers[0]), "weighted_sum_backward: dy shape mismatch");
  const std::vector<double> w = softmax(mix_logits.value.data);

  // d loss / d w_i = <dy, layer_i>; chain through softmax:
  // d loss / d logit_i = w_i * (g_i - sum_j w_j g_j).
  std::vector<double> g(static_cast<size_t>(l), 0.0);
  for (int i = 0; i < l; ++i) {
    const auto& li = stack.layers[static_cast<size_t>(i)].data;
    double acc = 0.0;
    for (size_t j = 0; j < dy.numel(); ++j) acc += dy.data[j] * li[j];
    g[static_cast<size_t>(i)] = acc;
  }
  double mean = 0.0;
  for (int i = 0; i < l; ++i) mean += w[static_cast<size_t>(i)] * g[static_cast<size_t>(i)];
  for (int i = 0; i < l; ++i)
    mix_logits.grad.at(i) += w[static_cast<size_t>(i)] * (g[static_cast<size_t>(i)] - mean);

  if (dlayers != nullptr) {
    dlayers->clear();
    dlayers->reserve(static_cast<size_t>(l));
    for (int i = 0; i < l; ++i) {
      Tensor d(dy.shape);
      const double wi = w[static_cast<size_t>(i)];
      for (size_t j = 0; j < dy.numel(); ++j) d.data[j] = wi * dy.data[j];
      dlayers->push_back(std::move(d));
    }
  }
}

}  // namespace toklab::nnet
