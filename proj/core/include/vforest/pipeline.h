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

#ifndef VFOREST_PIPELINE_H_
#define VFOREST_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vforest/bvh.h"
#include "vforest/config.h"
#include "vforest/eval.h"
#include "vforest/placement.h"
#include "vforest/raster.h"
#include "vforest/scene.h"
#include "vforest/terrain.h"
#include "vforest/trajectory.h"

namespace vforest {

std::string ToolVersion();

struct TreeGroundTruth {
  std::uint16_t instance_id = 0;
  int species_index = 0;
  Vec2 position_xy_m;
  double base_elevation_m = 0.0;
  double yaw_rad = 0.0;
  double scale = 1.0;
  double height_m = 0.0;
  std::optional<double> dbh_m;  // empty when the tree is below breast height
};

struct BuiltScene {
  Terrain terrain = Terrain::Flat(1.0, 1.0, 0.0);
  PlacementResult placement;
  std::vector<TreeGroundTruth> ground_truth;
  Bvh bvh;
};

// Terrain, placement, tree meshes and the scene BVH. Tree meshes are built in
// parallel; the result does not depend on `threads`.
BuiltScene BuildScene(const SceneConfig& scene, int threads = 1);

// Converts terrain-relative keyframe heights to absolute ones.
Trajectory ResolveTrajectory(const TrajectorySpec& spec, const Terrain& terrain);

struct FrameJob {
  std::string sequence;
  int frame_index = 0;
  int image_id = 0;  // 1-based, in sequence then frame order
  double timestamp_s = 0.0;
  Pose pose;
};

std::vector<FrameJob> PlanFrames(const RunConfig& config, const Terrain& terrain);

// "<sequence>_<frame>" with the frame zero-padded to 4 digits.
std::string FrameStem(const std::string& sequence, int frame_index);

struct GenerateOptions {
  std::filesystem::path out_dir;
  int threads = 1;
  std::function<void(const std::string&)> progress;
};

struct GenerateResult {
  int frames = 0;
  int trees = 0;
  int annotations = 0;
  int train_images = 0;
  int test_images = 0;
  std::uint64_t config_hash = 0;
  double seconds = 0.0;
};

// Writes the full dataset layout under options.out_dir. Output bytes do not
// depend on options.threads.
GenerateResult Generate(const RunConfig& config, const GenerateOptions& options);

struct Quantiles {
  double min = 0.0, p25 = 0.0, p50 = 0.0, p75 = 0.0, max = 0.0, mean = 0.0;
};
Quantiles ComputeQuantiles(std::vector<double> values);

struct DatasetStats {
  int frames = 0;
  int sequences = 0;
  int train_frames = 0;
  int test_frames = 0;
  int instances = 0;
  int trees = 0;
  std::vector<int> species_histogram;             // placed trees per species
  std::vector<int> annotation_species_histogram;  // annotations per species
  Quantiles instance_area_px;
  Quantiles dbh_m;
  Quantiles height_m;
};

// Reads manifest.json and annotations/{train,test}.json. Throws IoError
// naming the missing path.
DatasetStats ComputeStats(const std::filesystem::path& dataset_dir);
std::string StatsToJson(const DatasetStats& stats);
std::string StatsToText(const DatasetStats& stats);

// Writes eval_report.json and eval_report.txt into out_dir.
EvalReport RunEval(const std::filesystem::path& gt_json, const std::filesystem::path& pred_json,
                   const std::filesystem::path& out_dir);

// Evenly spaced hues, one per distinct id.
std::vector<Rgb> OverlayPalette(int count);

// 2W x 2H tile: RGB | instance overlay, depth colormap | semantic palette.
Rgb8Image ComposePreview(const Rgb8Image& rgb, const Gray16Image& instance, const DepthImage& depth,
                         const GrayImage& semantic);

// `frame` is an image id or a "<sequence>_<frame>" stem. Returns the path
// written; defaults to <dataset>/preview/<stem>.png.
std::filesystem::path WritePreview(const std::filesystem::path& dataset_dir, const std::string& frame,
                                   const std::filesystem::path& out_path = {});

std::string ReadTextFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, const std::string& text);

}  // namespace vforest

#endif  // VFOREST_PIPELINE_H_
