// toklab/util/common.h
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

#ifndef TOKLAB_UTIL_COMMON_H_
#define TOKLAB_UTIL_COMMON_H_

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace toklab {

[[noreturn]] inline void fail(const std::string& msg) {
  throw std::runtime_error(msg);
}

inline void require(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
}

// FNV-1a, used for content hashing of artifacts and for deriving
// per-utterance seeds from a master seed. Not cryptographic.
inline uint64_t fnv1a64(const void* data, size_t n, uint64_t h = 0xcbf29ce484222325ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

inline uint64_t fnv1a64(std::string_view s, uint64_t h = 0xcbf29ce484222325ull) {
  return fnv1a64(s.data(), s.size(), h);
}

// Deterministic seed derivation: one master seed fans out to independent
// streams keyed by a tag and an index.
inline uint64_t derive_seed(uint64_t base, std::string_view tag, uint64_t index = 0) {
  uint64_t h = fnv1a64(&base, sizeof(base));
  h = fnv1a64(tag, h);
  h = fnv1a64(&index, sizeof(index), h);
  return h == 0 ? 1 : h;  // mt19937_64 handles 0, but keep streams distinct from default
}

// Runs fn(i) for i in [0, n) on up to `jobs` threads with a static
// partition, so any per-index output slots are filled independently of
// scheduling. fn must not touch shared mutable state.
void parallel_for(size_t n, int jobs, const std::function<void(size_t)>& fn);

}  // namespace toklab

#endif  // TOKLAB_UTIL_COMMON_H_
