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

#ifndef VFOREST_RASTER_H_
#define VFOREST_RASTER_H_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace vforest {

// Row-major, interleaved-channel image.
template <typename T>
struct Raster {
  int width = 0;
  int height = 0;
  int channels = 1;
  std::vector<T> data;

  Raster() = default;
  Raster(int w, int h, int c = 1, T fill = T{})
      : width(w), height(h), channels(c), data(static_cast<std::size_t>(w) * h * c, fill) {}

  std::size_t Index(int x, int y, int c = 0) const {
    return (static_cast<std::size_t>(y) * width + x) * channels + c;
  }
  T& at(int x, int y, int c = 0) { return data[Index(x, y, c)]; }
  const T& at(int x, int y, int c = 0) const { return data[Index(x, y, c)]; }
  bool SameShape(int w, int h) const { return width == w && height == h; }
  friend bool operator==(const Raster&, const Raster&) = default;
};

using Rgb8Image = Raster<std::uint8_t>;  // 3 channels
using GrayImage = Raster<std::uint8_t>;
using Gray16Image = Raster<std::uint16_t>;
using DepthImage = Raster<float>;

}  // namespace vforest

#endif  // VFOREST_RASTER_H_
