// Copyright 2026 The Authors.
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

#include "stack/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <unordered_set>

#include "stack/errors.hpp"

namespace stack {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw ValidationError("Rng::below: bound must be positive");
  // Rejection sampling on the top of the range keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

double Rng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<std::uint64_t> sample_distinct(std::uint64_t total, std::uint64_t k, Rng& rng) {
  if (k > total) throw ValidationError("sample_distinct: k exceeds population size");
  std::vector<std::uint64_t> out;
  out.reserve(k);
  if (k * 2 >= total) {
    // Dense case: partial Fisher-Yates over the whole population.
    std::vector<std::uint64_t> pool(total);
    for (std::uint64_t i = 0; i < total; ++i) pool[i] = i;
    for (std::uint64_t i = 0; i < k; ++i) {
      std::swap(pool[i], pool[i + rng.below(total - i)]);
    }
    out.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
  } else {
    // Floyd's algorithm.
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(k * 2);
    for (std::uint64_t j = total - k; j < total; ++j) {
      const std::uint64_t t = rng.below(j + 1);
      if (!seen.insert(t).second) seen.insert(j);
    }
    out.assign(seen.begin(), seen.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace stack
