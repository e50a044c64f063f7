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

#include "vforest/coco.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "coco_json.h"
#include "json_util.h"
#include "vforest/error.h"
#include "vforest/rng.h"

namespace vforest {

using json_util::Json;

void CocoDataset::Validate() const {
  std::set<int> image_ids;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!image_ids.insert(images[i].id).second) {
      throw ConfigError("/images/" + std::to_string(i) + "/id", "duplicate image id " + std::to_string(images[i].id));
    }
  }
  std::set<int> category_ids;
  for (const CocoCategory& c : categories) category_ids.insert(c.id);
  std::set<int> ann_ids;
  for (std::size_t i = 0; i < annotations.size(); ++i) {
    const InstanceAnnotation& a = annotations[i];
    const std::string path = "/annotations/" + std::to_string(i);
    if (!ann_ids.insert(a.annotation_id).second) {
      throw ConfigError(path + "/id", "duplicate annotation id " + std::to_string(a.annotation_id));
    }
    if (!image_ids.count(a.image_id)) {
      throw ConfigError(path + "/image_id", "unknown image id " + std::to_string(a.image_id));
    }
    if (!category_ids.count(a.category_id)) {
      throw ConfigError(path + "/category_id", "unknown category id " + std::to_string(a.category_id));
    }
  }
}

CocoDataset BuildCocoDataset(std::vector<FrameAnnotations> frames) {
  CocoDataset ds;
  std::set<int> seen;
  int next_annotation = 1;
  for (FrameAnnotations& f : frames) {
    if (!seen.insert(f.image.id).second) throw Error("duplicate image id " + std::to_string(f.image.id));
    for (InstanceAnnotation& a : f.annotations) {
      a.annotation_id = next_annotation++;
      a.image_id = f.image.id;
      a.category_id = 1;
      ds.annotations.push_back(std::move(a));
    }
    ds.images.push_back(std::move(f.image));
  }
  // An empty document keeps all three arrays empty.
  if (!ds.images.empty()) ds.categories.push_back({1, "tree"});
  return ds;
}

std::string ExportCocoJson(const CocoDataset& ds) {
  Json root = Json::object();
  Json images = Json::array();
  for (const CocoImage& im : ds.images) {
    Json j = Json::object();
    j["id"] = im.id;
    j["file_name"] = im.file_name;
    j["width"] = im.width;
    j["height"] = im.height;
    j["sequence"] = im.sequence;
    j["frame_index"] = im.frame_index;
    images.push_back(std::move(j));
  }
  Json annotations = Json::array();
  for (const InstanceAnnotation& a : ds.annotations) {
    Json j = Json::object();
    j["id"] = a.annotation_id;
    j["image_id"] = a.image_id;
    j["category_id"] = a.category_id;
    Json seg = Json::array();
    for (const Polygon& poly : a.polygons) {
      Json flat = Json::array();
      for (const Vec2& p : poly) {
        flat.push_back(p.x);
        flat.push_back(p.y);
      }
      seg.push_back(std::move(flat));
    }
    j["segmentation"] = std::move(seg);
    j["area"] = a.area_px;
    j["bbox"] = Json::array({a.bbox.x, a.bbox.y, a.bbox.w, a.bbox.h});
    j["iscrowd"] = a.iscrowd;
    j["species_id"] = a.species_id;
    j["instance_id"] = a.instance_id;
    annotations.push_back(std::move(j));
  }
  Json categories = Json::array();
  for (const CocoCategory& c : ds.categories) {
    Json j = Json::object();
    j["id"] = c.id;
    j["name"] = c.name;
    j["supercategory"] = "plant";
    categories.push_back(std::move(j));
  }
  root["images"] = std::move(images);
  root["annotations"] = std::move(annotations);
  root["categories"] = std::move(categories);
  return root.dump() + "\n";
}

namespace {

std::vector<Polygon> ParsePolygons(const Json& seg, const std::string& path) {
  json_util::RequireArray(seg, path);
  std::vector<Polygon> polys;
  for (std::size_t i = 0; i < seg.size(); ++i) {
    const std::string ppath = json_util::Child(path, i);
    const Json& flat = json_util::RequireArray(seg[i], ppath);
    if (flat.size() % 2 != 0) throw ConfigError(ppath, "polygon needs an even number of coordinates");
    if (flat.size() < 6) throw ConfigError(ppath, "polygon needs at least 3 vertices");
    Polygon poly;
    for (std::size_t k = 0; k < flat.size(); k += 2) {
      poly.push_back({json_util::AsNumber(flat[k], json_util::Child(ppath, k)),
                      json_util::AsNumber(flat[k + 1], json_util::Child(ppath, k + 1))});
    }
    polys.push_back(std::move(poly));
  }
  return polys;
}

}  // namespace

std::vector<Polygon> ParseSegmentation(const Json& seg, const std::string& path) { return ParsePolygons(seg, path); }

BBox ParseBBox(const Json& j, const std::string& path) {
  json_util::RequireArray(j, path);
  if (j.size() != 4) throw ConfigError(path, "bbox needs 4 numbers [x, y, w, h]");
  BBox b{json_util::AsNumber(j[0], path + "/0"), json_util::AsNumber(j[1], path + "/1"),
         json_util::AsNumber(j[2], path + "/2"), json_util::AsNumber(j[3], path + "/3")};
  if (b.w < 0.0 || b.h < 0.0) throw ConfigError(path, "bbox extents must be >= 0");
  return b;
}

CocoDataset ParseCocoJson(const std::string& text) {
  const Json root = json_util::Parse(text, "coco");
  json_util::RequireObject(root, "");
  CocoDataset ds;
  const Json& images = json_util::RequireArray(json_util::Require(root, "images", ""), "/images");
  for (std::size_t i = 0; i < images.size(); ++i) {
    const std::string p = json_util::Child("/images", i);
    const Json& j = json_util::RequireObject(images[i], p);
    CocoImage im;
    im.id = json_util::AsInt(json_util::Require(j, "id", p), p + "/id");
    im.file_name = json_util::AsString(json_util::Require(j, "file_name", p), p + "/file_name");
    im.width = json_util::AsInt(json_util::Require(j, "width", p), p + "/width");
    im.height = json_util::AsInt(json_util::Require(j, "height", p), p + "/height");
    if (im.width <= 0 || im.height <= 0) throw ConfigError(p, "image dimensions must be positive");
    if (j.contains("sequence")) im.sequence = json_util::AsString(j["sequence"], p + "/sequence");
    if (j.contains("frame_index")) im.frame_index = json_util::AsInt(j["frame_index"], p + "/frame_index");
    ds.images.push_back(std::move(im));
  }
  const Json& anns = json_util::RequireArray(json_util::Require(root, "annotations", ""), "/annotations");
  for (std::size_t i = 0; i < anns.size(); ++i) {
    const std::string p = json_util::Child("/annotations", i);
    const Json& j = json_util::RequireObject(anns[i], p);
    InstanceAnnotation a;
    a.annotation_id = json_util::AsInt(json_util::Require(j, "id", p), p + "/id");
    a.image_id = json_util::AsInt(json_util::Require(j, "image_id", p), p + "/image_id");
    a.category_id = json_util::AsInt(json_util::Require(j, "category_id", p), p + "/category_id");
    a.bbox = ParseBBox(json_util::Require(j, "bbox", p), p + "/bbox");
    if (j.contains("area")) {
      a.area_px = json_util::AsNumber(j["area"], p + "/area");
    } else {
      a.area_px = a.bbox.w * a.bbox.h;
    }
    if (j.contains("segmentation")) a.polygons = ParsePolygons(j["segmentation"], p + "/segmentation");
    if (j.contains("iscrowd")) a.iscrowd = json_util::AsInt(j["iscrowd"], p + "/iscrowd");
    if (j.contains("species_id")) a.species_id = json_util::AsInt(j["species_id"], p + "/species_id");
    if (j.contains("instance_id")) {
      const int id = json_util::AsInt(j["instance_id"], p + "/instance_id");
      if (id < 0 || id > 65535) throw ConfigError(p + "/instance_id", "out of range");
      a.instance_id = static_cast<std::uint16_t>(id);
    }
    ds.annotations.push_back(std::move(a));
  }
  const Json& cats = json_util::RequireArray(json_util::Require(root, "categories", ""), "/categories");
  for (std::size_t i = 0; i < cats.size(); ++i) {
    const std::string p = json_util::Child("/categories", i);
    const Json& j = json_util::RequireObject(cats[i], p);
    ds.categories.push_back({json_util::AsInt(json_util::Require(j, "id", p), p + "/id"),
                             json_util::AsString(json_util::Require(j, "name", p), p + "/name")});
  }
  ds.Validate();
  return ds;
}

std::pair<CocoDataset, CocoDataset> SplitDataset(const CocoDataset& ds, double test_fraction, std::uint64_t seed) {
  if (!(test_fraction >= 0.0 && test_fraction <= 1.0)) throw Error("test_fraction must be in [0, 1]");

  // Sequences in first-appearance order, with frame counts.
  std::vector<std::string> names;
  std::map<std::string, int> counts;
  for (const CocoImage& im : ds.images) {
    if (counts[im.sequence]++ == 0) names.push_back(im.sequence);
  }
  Rng rng = DeriveRng(seed, "split", 0);
  for (std::size_t i = names.size(); i > 1; --i) {
    std::swap(names[i - 1], names[rng.UniformIndex(i)]);
  }

  // Subset-sum over frame counts: pick the achievable test size closest to
  // the target, preferring the smaller one on ties.
  const int total = static_cast<int>(ds.images.size());
  const double target = test_fraction * total;
  const std::size_t n = names.size();
  std::vector<std::vector<char>> reach(n + 1, std::vector<char>(static_cast<std::size_t>(total) + 1, 0));
  reach[0][0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const int c = counts[names[i]];
    for (int s = 0; s <= total; ++s) {
      if (!reach[i][s]) continue;
      reach[i + 1][s] = 1;
      if (s + c <= total) reach[i + 1][s + c] = 1;
    }
  }
  int best = 0;
  for (int s = 0; s <= total; ++s) {
    if (reach[n][s] && std::abs(s - target) < std::abs(best - target)) best = s;
  }
  std::set<std::string> test_sequences;
  int remaining = best;
  for (std::size_t i = n; i > 0; --i) {
    // Prefer leaving sequence i-1 out when the rest can still reach the sum.
    if (reach[i - 1][remaining]) continue;
    const int c = counts[names[i - 1]];
    test_sequences.insert(names[i - 1]);
    remaining -= c;
  }

  CocoDataset train;
  CocoDataset test;
  train.categories = test.categories = ds.categories;
  std::set<int> test_images;
  for (const CocoImage& im : ds.images) {
    if (test_sequences.count(im.sequence)) {
      test.images.push_back(im);
      test_images.insert(im.id);
    } else {
      train.images.push_back(im);
    }
  }
  for (const InstanceAnnotation& a : ds.annotations) {
    (test_images.count(a.image_id) ? test : train).annotations.push_back(a);
  }
  return {std::move(train), std::move(test)};
}

}  // namespace vforest
