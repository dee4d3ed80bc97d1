// Copyright 2026 The Langgames Authors.
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

#ifndef LANGGAMES_CORE_RANDOM_H_
#define LANGGAMES_CORE_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace langgames {

// Seeded generator with platform-independent output. std::mt19937_64's
// sequence is fixed by the standard; the distributions are not, so bounded
// draws are done here by rejection sampling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }
  // Uniform in [0, n). n must be positive.
  std::uint64_t Uniform(std::uint64_t n);
  // Uniform in [0, 1) with 53 bits of resolution.
  double Unit();

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[Uniform(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t Fnv1a64(std::string_view bytes);
std::string HexDigest(std::string_view bytes);

// Independent child seed for a named consumer of a run seed.
std::uint64_t DeriveSeed(std::uint64_t seed, std::string_view tag);

}  // namespace langgames

#endif  // LANGGAMES_CORE_RANDOM_H_
