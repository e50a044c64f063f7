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

#ifndef VFOREST_IMAGE_IO_H_
#define VFOREST_IMAGE_IO_H_

#include <filesystem>
#include <vector>

#include "vforest/lidar.h"
#include "vforest/raster.h"

namespace vforest {

// PNG via libpng. 8-bit images may have 1 or 3 channels; 16-bit images are
// single-channel grayscale. Output bytes are deterministic. All functions
// throw vforest::IoError on failure.
void WritePng8(const std::filesystem::path& path, const Raster<std::uint8_t>& image);
void WritePng16(const std::filesystem::path& path, const Gray16Image& image);
Raster<std::uint8_t> ReadPng8(const std::filesystem::path& path);
Gray16Image ReadPng16(const std::filesystem::path& path);

// Grayscale portable float map: "Pf" header, scale -1.0 (little-endian),
// rows stored bottom-to-top.
void WritePfm(const std::filesystem::path& path, const DepthImage& depth);
DepthImage ReadPfm(const std::filesystem::path& path);

// Binary little-endian PLY with vertex properties
// x, y, z (float32), instance_id (uint16), ring (uint8), azimuth (float32).
void WriteLidarPly(const std::filesystem::path& path, const LidarScan& scan);
std::vector<LidarPoint> ReadLidarPly(const std::filesystem::path& path);

}  // namespace vforest

#endif  // VFOREST_IMAGE_IO_H_
