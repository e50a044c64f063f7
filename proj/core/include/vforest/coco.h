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

#ifndef VFOREST_COCO_H_
#define VFOREST_COCO_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vforest/annotate.h"

namespace vforest {

struct CocoImage {
  int id = 0;
  std::string file_name;
  int width = 0;
  int height = 0;
  // Extensions: the trajectory the frame belongs to and its index in it.
  std::string sequence;
  int frame_index = 0;
};

struct CocoCategory {
  int id = 0;
  std::string name;
};

struct CocoDataset {
  std::vector<CocoImage> images;
  std::vector<InstanceAnnotation> annotations;
  std::vector<CocoCategory> categories;

  // Unique image and annotation ids; every annotation refers to an image
  // and a category. Throws vforest::ConfigError otherwise.
  void Validate() const;
};

struct FrameAnnotations {
  CocoImage image;
  std::vector<InstanceAnnotation> annotations;
};

// Assigns annotation ids 1..n in frame order, stamps image ids, and sets
// categories to [(1, "tree")], or none when there are no frames. Throws on
// duplicate image ids.
CocoDataset BuildCocoDataset(std::vector<FrameAnnotations> frames);

// Fixed key order; numbers use the shortest round-trip representation, so
// the same dataset always serializes to the same bytes.
std::string ExportCocoJson(const CocoDataset& dataset);

// Throws vforest::ConfigError with a JSON-pointer style field path.
CocoDataset ParseCocoJson(const std::string& text);

// Splits whole sequences so that the test share of frames is as close to
// test_fraction as sequence granularity allows. Sequences are visited in a
// seed-dependent order; ties prefer the smaller test set.
std::pair<CocoDataset, CocoDataset> SplitDataset(const CocoDataset& dataset, double test_fraction,
                                                 std::uint64_t seed);

}  // namespace vforest

#endif  // VFOREST_COCO_H_
