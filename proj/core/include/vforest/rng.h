/*
 * Copyright 2026 The VForest Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef VFOREST_RNG_H_
#define VFOREST_RNG_H_

#include <cstdint>
#include <limits>
#include <string_view>

namespace vforest {

// Counter-based random stream. The n-th output is a pure function of
// (key, n), so streams can be derived independently and in any order.
// Distributions are implemented here rather than with <random> so outputs
// are identical across standard library implementations.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t key) : key_(key) {}
  // Resumes the stream at draw number `counter`.
  Rng(std::uint64_t key, std::uint64_t counter) : key_(key), counter_(counter) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return NextU64(); }
  std::uint64_t NextU64();

  // Uniform in [0, 1) with 53 bits of resolution.
  double Uniform01();
  // Uniform in [lo, hi).
  double Uniform(double lo, double hi);
  // Uniform integer in [0, n); n must be > 0. Unbiased (Lemire rejection).
  std::uint64_t UniformIndex(std::uint64_t n);
  // Uniform integer in [lo, hi] inclusive.
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi);

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// SplitMix64 finalizer.
std::uint64_t Mix64(std::uint64_t x);

// FNV-1a over bytes.
std::uint64_t Fnv1a64(std::string_view bytes);

// Derives the stream for (master_seed, label, index). Distinct labels or
// indices give unrelated keys.
Rng DeriveRng(std::uint64_t master_seed, std::string_view stream_label, std::uint64_t index);

}  // namespace vforest

#endif  // VFOREST_RNG_H_
