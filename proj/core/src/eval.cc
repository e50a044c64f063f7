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

#include "vforest/eval.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>

#include "coco_json.h"
#include "json_util.h"
#include "vforest/error.h"

namespace vforest {

using json_util::Json;

double IouBbox(const BBox& a, const BBox& b) {
  const double ix = std::max(0.0, std::min(a.x + a.w, b.x + b.w) - std::max(a.x, b.x));
  const double iy = std::max(0.0, std::min(a.y + a.h, b.y + b.h) - std::max(a.y, b.y));
  const double inter = ix * iy;
  const double uni = a.w * a.h + b.w * b.h - inter;
  if (!(uni > 0.0)) return 0.0;
  return std::clamp(inter / uni, 0.0, 1.0);
}

double IouMask(const BinaryMask& a, const BinaryMask& b) {
  if (a.width != b.width || a.height != b.height || a.channels != 1 || b.channels != 1) {
    throw Error("mask IoU needs equal single-channel dimensions");
  }
  std::size_t inter = 0;
  std::size_t uni = 0;
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    const bool pa = a.data[i] != 0;
    const bool pb = b.data[i] != 0;
    inter += pa && pb;
    uni += pa || pb;
  }
  if (uni == 0) return 0.0;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

ApResult ComputeAp(const std::vector<Detection>& dets, const std::vector<GroundTruth>& gts, double threshold,
                   const IouFn& iou) {
  if (!(threshold > 0.0 && threshold <= 1.0)) throw Error("IoU threshold must be in (0, 1]");
  ApResult result;
  result.gt_count = static_cast<int>(gts.size());
  result.detection_count = static_cast<int>(dets.size());
  if (gts.empty()) {
    result.undefined = true;
    return result;
  }

  std::vector<std::size_t> order(dets.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return dets[a].score > dets[b].score; });

  std::map<int, std::vector<std::size_t>> gts_by_image;
  for (std::size_t j = 0; j < gts.size(); ++j) gts_by_image[gts[j].image_id].push_back(j);
  std::vector<char> matched(gts.size(), 0);

  std::vector<double> recall;
  std::vector<double> precision;
  int tp = 0;
  int fp = 0;
  const double n_gt = static_cast<double>(gts.size());
  for (std::size_t i : order) {
    std::size_t best = gts.size();
    double best_iou = threshold;
    const auto it = gts_by_image.find(dets[i].image_id);
    if (it != gts_by_image.end()) {
      for (std::size_t j : it->second) {
        if (matched[j]) continue;
        const double v = iou(i, j);
        if (v >= best_iou && (best == gts.size() || v > best_iou)) {
          best = j;
          best_iou = v;
        }
      }
    }
    if (best < gts.size()) {
      matched[best] = 1;
      ++tp;
    } else {
      ++fp;
    }
    recall.push_back(tp / n_gt);
    precision.push_back(static_cast<double>(tp) / (tp + fp));
  }
  result.true_positives = tp;

  for (std::size_t k = precision.size(); k > 1; --k) {
    precision[k - 2] = std::max(precision[k - 2], precision[k - 1]);
  }
  double sum = 0.0;
  for (int k = 0; k <= 100; ++k) {
    const double r = k / 100.0;
    const auto pos = std::lower_bound(recall.begin(), recall.end(), r);
    if (pos != recall.end()) sum += precision[static_cast<std::size_t>(pos - recall.begin())];
  }
  result.ap = sum / 101.0;
  return result;
}

ApResult ComputeAp(const std::vector<Detection>& dets, const std::vector<GroundTruth>& gts, double threshold) {
  return ComputeAp(dets, gts, threshold,
                   [&](std::size_t i, std::size_t j) { return IouBbox(dets[i].bbox, gts[j].bbox); });
}

BinaryMask DetectionMask(const Detection& det, int width, int height) {
  if (!det.rle_counts.empty()) {
    if (det.rle_width != width || det.rle_height != height) throw Error("RLE size does not match the image");
    BinaryMask mask(width, height, 1, 0);
    const std::size_t total = static_cast<std::size_t>(width) * height;
    std::size_t pos = 0;
    std::uint8_t value = 0;
    for (std::uint32_t run : det.rle_counts) {
      if (pos + run > total) throw Error("RLE counts exceed the image size");
      if (value) {
        for (std::size_t p = pos; p < pos + run; ++p) {
          // Column-major: index = x * height + y.
          mask.at(static_cast<int>(p / height), static_cast<int>(p % height)) = 1;
        }
      }
      pos += run;
      value ^= 1;
    }
    return mask;
  }
  return RasterizePolygons(det.polygons, width, height);
}

namespace {

BinaryMask GroundTruthMask(const GroundTruth& gt, int width, int height) {
  if (!gt.polygons.empty()) return RasterizePolygons(gt.polygons, width, height);
  const BBox& b = gt.bbox;
  const Polygon rect = {{b.x, b.y}, {b.x + b.w, b.y}, {b.x + b.w, b.y + b.h}, {b.x, b.y + b.h}};
  return RasterizePolygons({rect}, width, height);
}

double Mean(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

EvalReport Evaluate(const CocoDataset& dataset, const std::vector<Detection>& detections, double threshold) {
  EvalReport report;
  report.iou_threshold = threshold;
  std::map<int, const CocoImage*> images;
  for (const CocoImage& im : dataset.images) images[im.id] = &im;
  std::set<int> category_ids;
  for (const CocoCategory& c : dataset.categories) category_ids.insert(c.id);
  for (std::size_t i = 0; i < detections.size(); ++i) {
    const Detection& d = detections[i];
    const std::string path = "/" + std::to_string(i);
    if (!images.count(d.image_id)) {
      throw ConfigError(path + "/image_id", "unknown image id " + std::to_string(d.image_id));
    }
    if (!category_ids.count(d.category_id)) {
      throw ConfigError(path + "/category_id", "unknown category id " + std::to_string(d.category_id));
    }
    report.has_masks = report.has_masks || d.has_mask();
  }
  report.detection_count = static_cast<int>(detections.size());

  std::vector<double> box_aps;
  std::vector<double> mask_aps;
  for (const CocoCategory& cat : dataset.categories) {
    std::vector<Detection> dets;
    for (const Detection& d : detections) {
      if (d.category_id == cat.id) dets.push_back(d);
    }
    std::vector<GroundTruth> gts;
    for (const InstanceAnnotation& a : dataset.annotations) {
      if (a.category_id == cat.id && a.iscrowd == 0) gts.push_back({a.image_id, a.category_id, a.bbox, a.polygons});
    }

    CategoryReport cr;
    cr.category_id = cat.id;
    cr.name = cat.name;
    cr.box = ComputeAp(dets, gts, threshold);

    if (report.has_masks) {
      // Mask IoUs are precomputed one image at a time to bound memory.
      std::map<std::pair<std::size_t, std::size_t>, double> mask_iou;
      std::map<int, std::vector<std::size_t>> det_by_image;
      std::map<int, std::vector<std::size_t>> gt_by_image;
      for (std::size_t i = 0; i < dets.size(); ++i) det_by_image[dets[i].image_id].push_back(i);
      for (std::size_t j = 0; j < gts.size(); ++j) gt_by_image[gts[j].image_id].push_back(j);
      for (const auto& [image_id, det_idx] : det_by_image) {
        const auto git = gt_by_image.find(image_id);
        if (git == gt_by_image.end()) continue;
        const CocoImage& im = *images.at(image_id);
        std::vector<BinaryMask> gt_masks;
        for (std::size_t j : git->second) gt_masks.push_back(GroundTruthMask(gts[j], im.width, im.height));
        for (std::size_t i : det_idx) {
          if (!dets[i].has_mask()) continue;
          const BinaryMask dm = DetectionMask(dets[i], im.width, im.height);
          for (std::size_t k = 0; k < git->second.size(); ++k) {
            mask_iou[{i, git->second[k]}] = IouMask(dm, gt_masks[k]);
          }
        }
      }
      cr.mask = ComputeAp(dets, gts, threshold, [&](std::size_t i, std::size_t j) {
        const auto it = mask_iou.find({i, j});
        return it == mask_iou.end() ? 0.0 : it->second;
      });
    }

    report.gt_count += cr.box.gt_count;
    report.true_positives_box += cr.box.true_positives;
    report.true_positives_mask += cr.mask.true_positives;
    if (!cr.box.undefined) {
      box_aps.push_back(cr.box.ap);
      if (report.has_masks) mask_aps.push_back(cr.mask.ap);
    }
    report.categories.push_back(std::move(cr));
  }
  report.undefined = box_aps.empty();
  report.map50_box = Mean(box_aps);
  report.map50_mask = Mean(mask_aps);
  return report;
}

namespace {

std::vector<std::uint32_t> DecodeCompressedRle(const std::string& s, const std::string& path) {
  std::vector<std::uint32_t> counts;
  std::vector<std::int64_t> raw;
  std::size_t p = 0;
  while (p < s.size()) {
    std::int64_t x = 0;
    int k = 0;
    bool more = true;
    while (more) {
      if (p >= s.size()) throw ConfigError(path, "truncated RLE string");
      const int c = s[p] - 48;
      if (c < 0 || c > 63) throw ConfigError(path, "invalid RLE character");
      x |= static_cast<std::int64_t>(c & 0x1f) << (5 * k);
      more = (c & 0x20) != 0;
      ++p;
      ++k;
      if (!more && (c & 0x10)) x |= -(static_cast<std::int64_t>(1) << (5 * k));
    }
    if (raw.size() > 2) x += raw[raw.size() - 2];
    raw.push_back(x);
  }
  for (std::int64_t v : raw) {
    if (v < 0) throw ConfigError(path, "negative RLE run");
    counts.push_back(static_cast<std::uint32_t>(v));
  }
  return counts;
}

}  // namespace

std::vector<Detection> ParsePredictionsJson(const std::string& text) {
  const Json root = json_util::Parse(text, "predictions");
  json_util::RequireArray(root, "");
  std::vector<Detection> out;
  for (std::size_t i = 0; i < root.size(); ++i) {
    const std::string p = json_util::Child("", i);
    const Json& j = json_util::RequireObject(root[i], p);
    Detection d;
    d.image_id = json_util::AsInt(json_util::Require(j, "image_id", p), p + "/image_id");
    d.category_id = json_util::AsInt(json_util::Require(j, "category_id", p), p + "/category_id");
    d.score = json_util::AsNumber(json_util::Require(j, "score", p), p + "/score");
    if (d.score < 0.0 || d.score > 1.0) throw ConfigError(p + "/score", "score must be in [0, 1]");
    d.bbox = ParseBBox(json_util::Require(j, "bbox", p), p + "/bbox");
    if (j.contains("segmentation")) {
      const Json& seg = j["segmentation"];
      const std::string sp = p + "/segmentation";
      if (seg.is_object()) {
        const Json& size = json_util::RequireArray(json_util::Require(seg, "size", sp), sp + "/size");
        if (size.size() != 2) throw ConfigError(sp + "/size", "expected [height, width]");
        d.rle_height = json_util::AsInt(size[0], sp + "/size/0");
        d.rle_width = json_util::AsInt(size[1], sp + "/size/1");
        const Json& counts = json_util::Require(seg, "counts", sp);
        if (counts.is_string()) {
          d.rle_counts = DecodeCompressedRle(counts.get<std::string>(), sp + "/counts");
        } else {
          json_util::RequireArray(counts, sp + "/counts");
          for (std::size_t k = 0; k < counts.size(); ++k) {
            const std::int64_t v = json_util::AsInteger(counts[k], json_util::Child(sp + "/counts", k));
            if (v < 0) throw ConfigError(json_util::Child(sp + "/counts", k), "negative RLE run");
            d.rle_counts.push_back(static_cast<std::uint32_t>(v));
          }
        }
        std::uint64_t sum = 0;
        for (std::uint32_t c : d.rle_counts) sum += c;
        if (sum != static_cast<std::uint64_t>(d.rle_width) * static_cast<std::uint64_t>(d.rle_height)) {
          throw ConfigError(sp + "/counts", "RLE runs do not cover the image");
        }
      } else {
        d.polygons = ParseSegmentation(seg, sp);
      }
    }
    out.push_back(std::move(d));
  }
  return out;
}

std::string PredictionsToJson(const std::vector<Detection>& detections) {
  Json root = Json::array();
  for (const Detection& d : detections) {
    Json j = Json::object();
    j["image_id"] = d.image_id;
    j["category_id"] = d.category_id;
    j["score"] = d.score;
    j["bbox"] = Json::array({d.bbox.x, d.bbox.y, d.bbox.w, d.bbox.h});
    if (!d.rle_counts.empty()) {
      Json seg = Json::object();
      seg["size"] = Json::array({d.rle_height, d.rle_width});
      seg["counts"] = d.rle_counts;
      j["segmentation"] = std::move(seg);
    } else if (!d.polygons.empty()) {
      Json seg = Json::array();
      for (const Polygon& poly : d.polygons) {
        Json flat = Json::array();
        for (const Vec2& v : poly) {
          flat.push_back(v.x);
          flat.push_back(v.y);
        }
        seg.push_back(std::move(flat));
      }
      j["segmentation"] = std::move(seg);
    }
    root.push_back(std::move(j));
  }
  return root.dump() + "\n";
}

namespace {

Json ApJson(const ApResult& r) {
  Json j = Json::object();
  j["ap"] = r.ap;
  j["undefined"] = r.undefined;
  j["gt"] = r.gt_count;
  j["detections"] = r.detection_count;
  j["true_positives"] = r.true_positives;
  return j;
}

}  // namespace

std::string ReportToJson(const EvalReport& report, const std::map<std::string, std::string>& provenance) {
  Json root = Json::object();
  root["iou_threshold"] = report.iou_threshold;
  root["map50_box"] = report.map50_box;
  if (report.has_masks) {
    root["map50_mask"] = report.map50_mask;
  } else {
    root["map50_mask"] = nullptr;
  }
  root["undefined"] = report.undefined;
  Json counts = Json::object();
  counts["gt"] = report.gt_count;
  counts["detections"] = report.detection_count;
  counts["true_positives_box"] = report.true_positives_box;
  counts["true_positives_mask"] = report.true_positives_mask;
  root["counts"] = std::move(counts);
  Json cats = Json::array();
  for (const CategoryReport& c : report.categories) {
    Json j = Json::object();
    j["category_id"] = c.category_id;
    j["name"] = c.name;
    j["box"] = ApJson(c.box);
    if (report.has_masks) j["mask"] = ApJson(c.mask);
    cats.push_back(std::move(j));
  }
  root["ap_per_category"] = std::move(cats);
  if (!provenance.empty()) {
    Json prov = Json::object();
    for (const auto& [k, v] : provenance) prov[k] = v;
    root["provenance"] = std::move(prov);
  }
  return root.dump(2) + "\n";
}

std::string ReportToTable(const EvalReport& report) {
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof(line), "%-6s %-16s %8s %8s %6s %6s %6s\n", "id", "category", "AP50box", "AP50mask", "gt",
                "det", "tp");
  os << line;
  for (const CategoryReport& c : report.categories) {
    char mask[16];
    if (report.has_masks && !c.mask.undefined) {
      std::snprintf(mask, sizeof(mask), "%.4f", c.mask.ap);
    } else {
      std::snprintf(mask, sizeof(mask), "-");
    }
    char box[16];
    if (c.box.undefined) {
      std::snprintf(box, sizeof(box), "n/a");
    } else {
      std::snprintf(box, sizeof(box), "%.4f", c.box.ap);
    }
    std::snprintf(line, sizeof(line), "%-6d %-16s %8s %8s %6d %6d %6d\n", c.category_id, c.name.c_str(), box, mask,
                  c.box.gt_count, c.box.detection_count, c.box.true_positives);
    os << line;
  }
  std::snprintf(line, sizeof(line), "mAP@50 box  %.4f%s\n", report.map50_box,
                report.undefined ? "  (no ground truth)" : "");
  os << line;
  if (report.has_masks) {
    std::snprintf(line, sizeof(line), "mAP@50 mask %.4f\n", report.map50_mask);
    os << line;
  }
  return os.str();
}

}  // namespace vforest
