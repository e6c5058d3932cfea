// toklab/signal/waveform.cc
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

#include "toklab/signal/waveform.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

namespace toklab::signal {

double mean_power(const Waveform& w) {
  if (w.samples.empty()) return 0.0;
  double acc = 0.0;
  for (double s : w.samples) acc += s * s;
  return acc / static_cast<double>(w.samples.size());
}

double rms(const Waveform& w) { return std::sqrt(mean_power(w)); }

namespace {

void put_u32(std::vector<char>& buf, uint32_t v) {
  for (int i = 0; i < 4; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}
void put_u16(std::vector<char>& buf, uint16_t v) {
  buf.push_back(static_cast<char>(v & 0xff));
  buf.push_back(static_cast<char>((v >> 8) & 0xff));
}
uint32_t get_u32(const char* p) {
  uint32_t v = 0;
  std::memcpy(&v, p, 4);
  return v;
}
uint16_t get_u16(const char* p) {
  uint16_t v = 0;
  std::memcpy(&v, p, 2);
  return v;
}

}  // namespace

void write_wav(const std::string& path, const Waveform& w) {
  require(w.sample_rate > 0, "write_wav: sample_rate must be positive");
  const uint32_t n = static_cast<uint32_t>(w.samples.size());
  const uint32_t data_bytes = n * 2;

  std::vector<char> buf;
  buf.reserve(44 + data_bytes);
  buf.insert(buf.end(), {'R', 'I', 'F', 'F'});
  put_u32(buf, 36 + data_bytes);
  buf.insert(buf.end(), {'W', 'A', 'V', 'E', 'f', 'm', 't', ' '});
  put_u32(buf, 16);                                       // fmt chunk size
  put_u16(buf, 1);                                        // PCM
  put_u16(buf, 1);                                        // mono
  put_u32(buf, static_cast<uint32_t>(w.sample_rate));
  put_u32(buf, static_cast<uint32_t>(w.sample_rate) * 2);  // byte rate
  put_u16(buf, 2);                                        // block align
  put_u16(buf, 16);                                       // bits per sample
  buf.insert(buf.end(), {'d', 'a', 't', 'a'});
  put_u32(buf, data_bytes);
  for (double s : w.samples) {
    const double clamped = std::clamp(s, -1.0, 1.0);
    const auto q = static_cast<int16_t>(std::lrint(clamped * 32767.0));
    put_u16(buf, static_cast<uint16_t>(q));
  }

  std::ofstream out(path, std::ios::binary);
  require(out.good(), "write_wav: cannot open " + path);
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  require(out.good(), "write_wav: write failed for " + path);
}

Waveform read_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), "read_wav: cannot open " + path);
  std::vector<char> buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  require(buf.size() >= 44, "read_wav: file too short: " + path);
  require(std::memcmp(buf.data(), "RIFF", 4) == 0 && std::memcmp(buf.data() + 8, "WAVE", 4) == 0,
          "read_wav: not a RIFF/WAVE file: " + path);

  Waveform w;
  size_t pos = 12;
  bool got_fmt = false, got_data = false;
  while (pos + 8 <= buf.size()) {
    const char* id = buf.data() + pos;
    const uint32_t chunk = get_u32(buf.data() + pos + 4);
    pos += 8;
    if (pos + chunk > buf.size()) break;
    if (std::memcmp(id, "fmt ", 4) == 0) {
      require(chunk >= 16, "read_wav: bad fmt chunk");
      require(get_u16(buf.data() + pos) == 1, "read_wav: only PCM supported");
      require(get_u16(buf.data() + pos + 2) == 1, "read_wav: only mono supported");
      w.sample_rate = static_cast<int>(get_u32(buf.data() + pos + 4));
      require(get_u16(buf.data() + pos + 14) == 16, "read_wav: only 16-bit supported");
      got_fmt = true;
    } else if (std::memcmp(id, "data", 4) == 0) {
      const size_t n = chunk / 2;
      w.samples.resize(n);
      for (size_t i = 0; i < n; ++i) {
        const auto q = static_cast<int16_t>(get_u16(buf.data() + pos + 2 * i));
        w.samples[i] = static_cast<double>(q) / 32767.0;
      }
      got_data = true;
    }
    pos += chunk + (chunk % 2);  // chunks are word-aligned
  }
  require(got_fmt && got_data, "read_wav: missing fmt or data chunk: " + path);
  return w;
}

}  // namespace toklab::signal
