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

#ifndef VFOREST_EVAL_H_
#define VFOREST_EVAL_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "vforest/annotate.h"
#include "vforest/coco.h"
#include "vforest/raster.h"

namespace vforest {

using BinaryMask = Raster<std::uint8_t>;  // nonzero = foreground

// A scored prediction in the COCO results format. The mask, when present,
// is either polygons or a run-length encoding in COCO's column-major order.
struct Detection {
  int image_id = 0;
  int category_id = 1;
  double score = 0.0;
  BBox bbox;
  std::vector<Polygon> polygons;
  std::vector<std::uint32_t> rle_counts;
  int rle_width = 0;
  int rle_height = 0;

  bool has_mask() const { return !polygons.empty() || !rle_counts.empty(); }
};

struct GroundTruth {
  int image_id = 0;
  int category_id = 1;
  BBox bbox;
  std::vector<Polygon> polygons;
};

double IouBbox(const BBox& a, const BBox& b);

// Throws vforest::Error when the dimensions differ.
double IouMask(const BinaryMask& a, const BinaryMask& b);

struct ApResult {
  double ap = 0.0;
  bool undefined = false;  // no ground truth: AP reported as 0
  int gt_count = 0;
  int detection_count = 0;
  int true_positives = 0;
};

// IoU between detection i and ground truth j. Only called for pairs that
// share an image.
using IouFn = std::function<double(std::size_t det, std::size_t gt)>;

// Single-category AP with greedy matching in descending score order (ties
// keep input order) and 101-point interpolated precision.
ApResult ComputeAp(const std::vector<Detection>& detections, const std::vector<GroundTruth>& ground_truths,
                   double iou_threshold, const IouFn& iou);

// Convenience overload scoring boxes.
ApResult ComputeAp(const std::vector<Detection>& detections, const std::vector<GroundTruth>& ground_truths,
                   double iou_threshold);

struct CategoryReport {
  int category_id = 0;
  std::string name;
  ApResult box;
  ApResult mask;
};

struct EvalReport {
  double iou_threshold = 0.5;
  std::vector<CategoryReport> categories;
  double map50_box = 0.0;
  double map50_mask = 0.0;
  bool has_masks = false;
  bool undefined = false;  // no category had ground truth
  int gt_count = 0;
  int detection_count = 0;
  int true_positives_box = 0;
  int true_positives_mask = 0;
};

// Mask AP is computed when any detection carries a mask; detections without
// one then score IoU 0 against every mask. mAP averages over categories that
// have ground truth. Throws vforest::ConfigError for unknown image or category
// ids.
EvalReport Evaluate(const CocoDataset& dataset, const std::vector<Detection>& detections,
                    double iou_threshold = 0.5);

// Decodes a Detection's mask at the given image size.
BinaryMask DetectionMask(const Detection& det, int width, int height);

// Parses a COCO results array. Throws vforest::ConfigError with field paths.
std::vector<Detection> ParsePredictionsJson(const std::string& text);
std::string PredictionsToJson(const std::vector<Detection>& detections);

std::string ReportToJson(const EvalReport& report, const std::map<std::string, std::string>& provenance = {});
std::string ReportToTable(const EvalReport& report);

}  // namespace vforest

#endif  // VFOREST_EVAL_H_
