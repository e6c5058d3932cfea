// toklab/signal/waveform.h
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

#ifndef TOKLAB_SIGNAL_WAVEFORM_H_
#define TOKLAB_SIGNAL_WAVEFORM_H_

#include <string>
#include <vector>

#include "toklab/util/common.h"

namespace toklab::signal {

// Mono audio, nominal amplitude range [-1, 1].
struct Waveform {
  std::vector<double> samples;
  int sample_rate = 16000;

  size_t size() const { return samples.size(); }
  double duration_s() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }
};

double mean_power(const Waveform& w);
double rms(const Waveform& w);

// 16-bit PCM mono WAV. Values are clamped to [-1, 1] on write.
void write_wav(const std::string& path, const Waveform& w);
Waveform read_wav(const std::string& path);

}  // namespace toklab::signal

#endif  // TOKLAB_SIGNAL_WAVEFORM_H_
