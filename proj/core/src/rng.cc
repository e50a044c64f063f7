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

#include "vforest/rng.h"

namespace vforest {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}  // namespace

std::uint64_t Mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t Fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

std::uint64_t Rng::NextU64() {
  ++counter_;
  // Two rounds so that neighbouring keys do not produce shifted copies of
  // the same sequence.
  return Mix64(Mix64(key_ + counter_ * kGolden) ^ key_);
}

double Rng::Uniform01() {
  return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
}

double Rng::Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform01(); }

namespace {
__extension__ typedef unsigned __int128 U128;
}  // namespace

std::uint64_t Rng::UniformIndex(std::uint64_t n) {
  std::uint64_t x = NextU64();
  U128 m = static_cast<U128>(x) * n;
  std::uint64_t low = static_cast<std::uint64_t>(m);
  if (low < n) {
    const std::uint64_t threshold = (0 - n) % n;
    while (low < threshold) {
      x = NextU64();
      m = static_cast<U128>(x) * n;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

std::int64_t Rng::UniformInt(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(NextU64());
  return lo + static_cast<std::int64_t>(UniformIndex(span));
}

Rng DeriveRng(std::uint64_t master_seed, std::string_view stream_label, std::uint64_t index) {
  std::uint64_t k = Mix64(master_seed ^ 0x6A09E667F3BCC909ULL);
  k = Mix64(k ^ Fnv1a64(stream_label));
  k = Mix64(k ^ (index * kGolden + 0x3C6EF372FE94F82BULL));
  return Rng(k);
}

}  // namespace vforest
