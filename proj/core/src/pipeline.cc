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

#include "vforest/pipeline.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "json_util.h"
#include "vforest/annotate.h"
#include "vforest/coco.h"
#include "vforest/error.h"
#include "vforest/image_io.h"
#include "vforest/lidar.h"
#include "vforest/parallel.h"
#include "vforest/render.h"
#include "vforest/rng.h"
#include "vforest/species.h"
#include "vforest/tree_mesh.h"

namespace vforest {

namespace fs = std::filesystem;
using json_util::Json;

std::string ToolVersion() { return VFOREST_VERSION_STRING; }

std::string ReadTextFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteTextFile(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

BuiltScene BuildScene(const SceneConfig& scene, int threads) {
  scene.Validate();
  BuiltScene out;
  Rng terrain_rng = DeriveRng(scene.master_seed, "terrain", 0);
  out.terrain = GenerateTerrain(scene.terrain, terrain_rng);
  Rng placement_rng = DeriveRng(scene.master_seed, "placement", 0);
  out.placement = PlaceTrees(out.terrain, scene.tree_density_per_ha, scene.min_spacing_m, scene.species_weights,
                             placement_rng);

  const auto library = SpeciesLibrary();
  const std::vector<TreeInstance>& trees = out.placement.trees;
  std::vector<TreeMesh> meshes(trees.size());
  ParallelFor(static_cast<int>(trees.size()), threads, [&](int i) {
    const TreeInstance& inst = trees[static_cast<std::size_t>(i)];
    meshes[static_cast<std::size_t>(i)] =
        BuildTreeMesh(library[static_cast<std::size_t>(inst.species_index)], inst, scene.radial_segments);
  });
  for (const TreeInstance& inst : trees) {
    const SpeciesSpec& sp = library[static_cast<std::size_t>(inst.species_index)];
    TreeGroundTruth gt;
    gt.instance_id = inst.instance_id;
    gt.species_index = inst.species_index;
    gt.position_xy_m = inst.position_xy_m;
    gt.base_elevation_m = inst.base_elevation_m;
    gt.yaw_rad = inst.yaw_rad;
    gt.scale = inst.scale;
    gt.height_m = TreeHeight(sp, inst);
    if (gt.height_m > kBreastHeightM) gt.dbh_m = ComputeDbh(sp, inst);
    out.ground_truth.push_back(gt);
  }
  const TerrainMesh terrain_mesh = BuildTerrainMesh(out.terrain);
  out.bvh = BuildSceneBvh(meshes, &terrain_mesh, scene.terrain_albedo);
  return out;
}

Trajectory ResolveTrajectory(const TrajectorySpec& spec, const Terrain& terrain) {
  Trajectory traj;
  traj.frame_rate_hz = spec.frame_rate_hz;
  for (std::size_t i = 0; i < spec.keyframes.size(); ++i) {
    const KeyframeSpec& k = spec.keyframes[i];
    Vec3 p = k.position_m;
    if (spec.altitude_above_terrain) {
      if (!terrain.Contains(p.x, p.y)) {
        throw ConfigError("/trajectories/" + spec.name + "/keyframes/" + std::to_string(i) + "/position",
                          "terrain-relative keyframe lies outside the terrain");
      }
      p.z += SampleHeight(terrain, p.x, p.y);
    }
    traj.keyframes.push_back({k.timestamp_s, Pose{p, k.orientation}});
  }
  traj.Validate();
  return traj;
}

std::string FrameStem(const std::string& sequence, int frame_index) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d", frame_index);
  return sequence + "_" + buf;
}

std::vector<FrameJob> PlanFrames(const RunConfig& config, const Terrain& terrain) {
  std::vector<FrameJob> jobs;
  int image_id = 1;
  for (const TrajectorySpec& spec : config.trajectories) {
    const Trajectory traj = ResolveTrajectory(spec, terrain);
    const int n = traj.FrameCount();
    for (int k = 0; k < n; ++k) {
      FrameJob job;
      job.sequence = spec.name;
      job.frame_index = k;
      job.image_id = image_id++;
      job.timestamp_s = traj.FrameTime(k);
      job.pose = InterpolatePose(traj, job.timestamp_s);
      jobs.push_back(std::move(job));
    }
  }
  return jobs;
}

namespace {

Json Vec3Json(const Vec3& v) { return Json::array({v.x, v.y, v.z}); }

Json IntrinsicsJson(const CameraIntrinsics& k) {
  Json j = Json::object();
  j["width"] = k.width_px;
  j["height"] = k.height_px;
  j["fx"] = k.fx;
  j["fy"] = k.fy;
  j["cx"] = k.cx;
  j["cy"] = k.cy;
  return j;
}

void EnsureDir(const fs::path& p) {
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec) throw IoError("cannot create directory " + p.string() + ": " + ec.message());
}

}  // namespace

GenerateResult Generate(const RunConfig& config, const GenerateOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  auto log = [&](const std::string& msg) {
    if (options.progress) options.progress(msg);
  };
  const int threads = std::max(1, options.threads);
  const fs::path& out = options.out_dir;
  for (const char* sub : {"rgb", "depth", "instance", "semantic", "lidar", "annotations", "poses"}) {
    EnsureDir(out / sub);
  }

  const BuiltScene scene = BuildScene(config.scene, threads);
  log("scene: " + std::to_string(scene.placement.accepted) + " trees, " + std::to_string(scene.bvh.size()) +
      " triangles");
  const std::vector<FrameJob> jobs = PlanFrames(config, scene.terrain);
  const CameraIntrinsics intrinsics = config.Intrinsics();
  intrinsics.Validate();

  std::map<std::uint16_t, int> species_of;
  for (const TreeGroundTruth& gt : scene.ground_truth) species_of[gt.instance_id] = gt.species_index;

  // Frames are rendered in parallel; rows get the spare threads when there
  // are fewer frames than workers.
  const int frame_workers = std::max(1, std::min<int>(threads, static_cast<int>(jobs.size())));
  const int row_threads = std::max(1, threads / frame_workers);
  std::vector<FrameAnnotations> slots(jobs.size());
  std::atomic<int> done{0};
  std::mutex log_mutex;
  ParallelFor(static_cast<int>(jobs.size()), frame_workers, [&](int i) {
    const FrameJob& job = jobs[static_cast<std::size_t>(i)];
    FrameBundle frame = RenderFrame(scene.bvh, config.scene, job.pose, intrinsics, row_threads);
    frame.timestamp_s = job.timestamp_s;
    CheckFrameInvariants(frame);
    const std::string stem = FrameStem(job.sequence, job.frame_index);
    WritePng8(out / "rgb" / (stem + ".png"), frame.rgb);
    WritePfm(out / "depth" / (stem + ".pfm"), frame.depth_m);
    WritePng16(out / "instance" / (stem + ".png"), frame.instance);
    WritePng8(out / "semantic" / (stem + ".png"), frame.semantic);
    if (config.lidar_enabled) {
      LidarScan scan = SimulateLidar(scene.bvh, job.pose, config.lidar);
      scan.timestamp_s = job.timestamp_s;
      WriteLidarPly(out / "lidar" / (stem + ".ply"), scan);
    }
    FrameAnnotations& slot = slots[static_cast<std::size_t>(i)];
    slot.image = {job.image_id, "rgb/" + stem + ".png", intrinsics.width_px, intrinsics.height_px, job.sequence,
                  job.frame_index};
    slot.annotations = ExtractInstances(frame.instance, config.min_area_px);
    for (InstanceAnnotation& a : slot.annotations) {
      const auto it = species_of.find(a.instance_id);
      a.species_id = it == species_of.end() ? -1 : it->second;
    }
    const int n = ++done;
    if (options.progress && (n % 10 == 0 || n == static_cast<int>(jobs.size()))) {
      std::lock_guard<std::mutex> lock(log_mutex);
      log("rendered " + std::to_string(n) + "/" + std::to_string(jobs.size()) + " frames");
    }
  });

  // Per-sequence pose files.
  std::map<std::string, Json> pose_files;
  for (const TrajectorySpec& spec : config.trajectories) {
    Json j = Json::object();
    j["sequence"] = spec.name;
    j["frame_rate_hz"] = spec.frame_rate_hz;
    j["intrinsics"] = IntrinsicsJson(intrinsics);
    j["convention"] = "world_from_camera, row-major 4x4; camera x right, y down, z forward; world z up";
    j["frames"] = Json::array();
    pose_files[spec.name] = std::move(j);
  }
  for (const FrameJob& job : jobs) {
    Json f = Json::object();
    f["frame_index"] = job.frame_index;
    f["image_id"] = job.image_id;
    f["timestamp_s"] = job.timestamp_s;
    f["file_stem"] = FrameStem(job.sequence, job.frame_index);
    f["world_from_camera"] = job.pose.ToMatrix();
    f["orientation_wxyz"] =
        Json::array({job.pose.orientation.w, job.pose.orientation.x, job.pose.orientation.y, job.pose.orientation.z});
    pose_files[job.sequence]["frames"].push_back(std::move(f));
  }
  for (const auto& [name, j] : pose_files) WriteTextFile(out / "poses" / (name + ".json"), j.dump(2) + "\n");

  GenerateResult result;
  result.frames = static_cast<int>(jobs.size());
  result.trees = scene.placement.accepted;
  const CocoDataset dataset = BuildCocoDataset(std::move(slots));
  result.annotations = static_cast<int>(dataset.annotations.size());
  const auto [train, test] = SplitDataset(dataset, config.test_fraction, config.scene.master_seed);
  result.train_images = static_cast<int>(train.images.size());
  result.test_images = static_cast<int>(test.images.size());
  WriteTextFile(out / "annotations" / "train.json", ExportCocoJson(train));
  WriteTextFile(out / "annotations" / "test.json", ExportCocoJson(test));

  // Manifest last: its presence marks a complete dataset.
  result.config_hash = RunConfigHash(config);
  Json manifest = Json::object();
  manifest["tool"] = "vforest";
  manifest["version"] = ToolVersion();
  manifest["config_hash"] = HexU64(result.config_hash);
  manifest["config"] = Json::parse(RunConfigToJson(config, -1));
  Json terrain = Json::object();
  terrain["cols"] = scene.terrain.cols();
  terrain["rows"] = scene.terrain.rows();
  terrain["cell_size_m"] = scene.terrain.cell_size_m();
  manifest["terrain"] = std::move(terrain);
  Json placement = Json::object();
  placement["attempted"] = scene.placement.attempted;
  placement["accepted"] = scene.placement.accepted;
  manifest["placement"] = std::move(placement);
  manifest["intrinsics"] = IntrinsicsJson(intrinsics);
  const auto library = SpeciesLibrary();
  Json trees = Json::array();
  for (const TreeGroundTruth& gt : scene.ground_truth) {
    Json t = Json::object();
    t["instance_id"] = gt.instance_id;
    t["species_id"] = gt.species_index;
    t["species"] = library[static_cast<std::size_t>(gt.species_index)].name;
    t["position"] = Vec3Json({gt.position_xy_m.x, gt.position_xy_m.y, gt.base_elevation_m});
    t["yaw_rad"] = gt.yaw_rad;
    t["scale"] = gt.scale;
    t["height_m"] = gt.height_m;
    if (gt.dbh_m) {
      t["dbh_m"] = *gt.dbh_m;
    } else {
      t["dbh_m"] = nullptr;
    }
    trees.push_back(std::move(t));
  }
  manifest["trees"] = std::move(trees);
  Json sequences = Json::array();
  std::set<std::string> test_sequences;
  for (const CocoImage& im : test.images) test_sequences.insert(im.sequence);
  for (const TrajectorySpec& spec : config.trajectories) {
    int count = 0;
    for (const FrameJob& job : jobs) count += job.sequence == spec.name;
    Json s = Json::object();
    s["name"] = spec.name;
    s["frames"] = count;
    s["split"] = test_sequences.count(spec.name) ? "test" : "train";
    sequences.push_back(std::move(s));
  }
  manifest["sequences"] = std::move(sequences);
  WriteTextFile(out / "manifest.json", manifest.dump(2) + "\n");

  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

Quantiles ComputeQuantiles(std::vector<double> v) {
  Quantiles q;
  if (v.empty()) return q;
  std::sort(v.begin(), v.end());
  auto at = [&](double f) {
    const double pos = f * static_cast<double>(v.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
  };
  q.min = v.front();
  q.max = v.back();
  q.p25 = at(0.25);
  q.p50 = at(0.5);
  q.p75 = at(0.75);
  double sum = 0.0;
  for (double x : v) sum += x;
  q.mean = sum / static_cast<double>(v.size());
  return q;
}

namespace {

Json ParseFile(const fs::path& path) {
  if (!fs::exists(path)) throw IoError("missing file: " + path.string());
  return json_util::Parse(ReadTextFile(path), path.string());
}

Json QuantilesJson(const Quantiles& q) {
  Json j = Json::object();
  j["min"] = q.min;
  j["p25"] = q.p25;
  j["median"] = q.p50;
  j["p75"] = q.p75;
  j["max"] = q.max;
  j["mean"] = q.mean;
  return j;
}

}  // namespace

DatasetStats ComputeStats(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw IoError("not a dataset directory: " + dir.string());
  DatasetStats s;
  s.species_histogram.assign(kSpeciesCount, 0);
  s.annotation_species_histogram.assign(kSpeciesCount, 0);
  const Json manifest = ParseFile(dir / "manifest.json");
  const Json& trees = json_util::RequireArray(json_util::Require(manifest, "trees", ""), "/trees");
  std::vector<double> dbh;
  std::vector<double> heights;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    const std::string p = json_util::Child("/trees", i);
    const int sp = json_util::AsInt(json_util::Require(trees[i], "species_id", p), p + "/species_id");
    if (sp < 0 || sp >= kSpeciesCount) throw ConfigError(p + "/species_id", "out of range");
    ++s.species_histogram[static_cast<std::size_t>(sp)];
    heights.push_back(json_util::AsNumber(json_util::Require(trees[i], "height_m", p), p + "/height_m"));
    const Json& d = json_util::Require(trees[i], "dbh_m", p);
    if (!d.is_null()) dbh.push_back(json_util::AsNumber(d, p + "/dbh_m"));
  }
  s.trees = static_cast<int>(trees.size());
  s.dbh_m = ComputeQuantiles(dbh);
  s.height_m = ComputeQuantiles(heights);

  std::vector<double> areas;
  std::set<std::string> sequences;
  for (const char* split : {"train", "test"}) {
    const fs::path path = dir / "annotations" / (std::string(split) + ".json");
    if (!fs::exists(path)) throw IoError("missing file: " + path.string());
    const CocoDataset ds = ParseCocoJson(ReadTextFile(path));
    (std::string(split) == "train" ? s.train_frames : s.test_frames) = static_cast<int>(ds.images.size());
    for (const CocoImage& im : ds.images) {
      sequences.insert(im.sequence);
      const fs::path rgb = dir / im.file_name;
      if (!fs::exists(rgb)) throw IoError("missing file: " + rgb.string());
    }
    for (const InstanceAnnotation& a : ds.annotations) {
      areas.push_back(a.area_px);
      if (a.species_id >= 0 && a.species_id < kSpeciesCount) {
        ++s.annotation_species_histogram[static_cast<std::size_t>(a.species_id)];
      }
    }
  }
  s.frames = s.train_frames + s.test_frames;
  s.sequences = static_cast<int>(sequences.size());
  s.instances = static_cast<int>(areas.size());
  s.instance_area_px = ComputeQuantiles(areas);
  return s;
}

std::string StatsToJson(const DatasetStats& s) {
  Json j = Json::object();
  j["frames"] = s.frames;
  j["sequences"] = s.sequences;
  j["train_frames"] = s.train_frames;
  j["test_frames"] = s.test_frames;
  j["instances"] = s.instances;
  j["trees"] = s.trees;
  const auto library = SpeciesLibrary();
  Json hist = Json::array();
  for (int i = 0; i < kSpeciesCount; ++i) {
    Json h = Json::object();
    h["species_id"] = i;
    h["name"] = library[static_cast<std::size_t>(i)].name;
    h["trees"] = s.species_histogram[static_cast<std::size_t>(i)];
    h["annotations"] = s.annotation_species_histogram[static_cast<std::size_t>(i)];
    hist.push_back(std::move(h));
  }
  j["species_histogram"] = std::move(hist);
  j["instance_area_px"] = QuantilesJson(s.instance_area_px);
  j["dbh_m"] = QuantilesJson(s.dbh_m);
  j["height_m"] = QuantilesJson(s.height_m);
  return j.dump(2) + "\n";
}

std::string StatsToText(const DatasetStats& s) {
  std::ostringstream os;
  char line[200];
  std::snprintf(line, sizeof(line), "frames %d (train %d, test %d) in %d sequences\n", s.frames, s.train_frames,
                s.test_frames, s.sequences);
  os << line;
  std::snprintf(line, sizeof(line), "trees %d, annotated instances %d\n", s.trees, s.instances);
  os << line;
  os << "species                  trees  annotations\n";
  const auto library = SpeciesLibrary();
  for (int i = 0; i < kSpeciesCount; ++i) {
    std::snprintf(line, sizeof(line), "%-24s %5d  %11d\n", library[static_cast<std::size_t>(i)].name.c_str(),
                  s.species_histogram[static_cast<std::size_t>(i)],
                  s.annotation_species_histogram[static_cast<std::size_t>(i)]);
    os << line;
  }
  auto row = [&](const char* name, const Quantiles& q) {
    std::snprintf(line, sizeof(line), "%-16s min %.3f  p25 %.3f  median %.3f  p75 %.3f  max %.3f  mean %.3f\n", name,
                  q.min, q.p25, q.p50, q.p75, q.max, q.mean);
    os << line;
  };
  row("instance area px", s.instance_area_px);
  row("dbh m", s.dbh_m);
  row("height m", s.height_m);
  return os.str();
}

EvalReport RunEval(const fs::path& gt_json, const fs::path& pred_json, const fs::path& out_dir) {
  if (!fs::exists(gt_json)) throw IoError("missing file: " + gt_json.string());
  if (!fs::exists(pred_json)) throw IoError("missing file: " + pred_json.string());
  const CocoDataset gt = ParseCocoJson(ReadTextFile(gt_json));
  const std::vector<Detection> dets = ParsePredictionsJson(ReadTextFile(pred_json));
  const EvalReport report = Evaluate(gt, dets);

  std::map<std::string, std::string> provenance;
  provenance["ground_truth"] = gt_json.filename().string();
  provenance["predictions"] = pred_json.filename().string();
  const fs::path manifest = gt_json.parent_path().parent_path() / "manifest.json";
  if (fs::exists(manifest)) {
    const Json m = ParseFile(manifest);
    if (m.contains("config_hash") && m["config_hash"].is_string()) {
      provenance["config_hash"] = m["config_hash"].get<std::string>();
    }
  }
  EnsureDir(out_dir);
  WriteTextFile(out_dir / "eval_report.json", ReportToJson(report, provenance));
  WriteTextFile(out_dir / "eval_report.txt", ReportToTable(report));
  return report;
}

std::vector<Rgb> OverlayPalette(int count) {
  std::vector<Rgb> out;
  for (int k = 0; k < count; ++k) {
    const double h = 6.0 * k / count;
    const double s = 0.85;
    const double v = 1.0;
    const int sector = static_cast<int>(std::floor(h)) % 6;
    const double f = h - std::floor(h);
    const double p = v * (1 - s);
    const double q = v * (1 - s * f);
    const double t = v * (1 - s * (1 - f));
    switch (sector) {
      case 0: out.push_back({v, t, p}); break;
      case 1: out.push_back({q, v, p}); break;
      case 2: out.push_back({p, v, t}); break;
      case 3: out.push_back({p, q, v}); break;
      case 4: out.push_back({t, p, v}); break;
      default: out.push_back({v, p, q}); break;
    }
  }
  return out;
}

namespace {

std::uint8_t ToByte(double c) { return static_cast<std::uint8_t>(std::lround(std::clamp(c, 0.0, 1.0) * 255.0)); }

Rgb DepthColor(double u) {
  // Near is bright yellow, far is deep purple.
  static const Rgb kStops[] = {{0.99, 0.91, 0.14}, {0.96, 0.47, 0.20}, {0.74, 0.22, 0.44}, {0.37, 0.08, 0.55},
                               {0.05, 0.03, 0.22}};
  u = std::clamp(u, 0.0, 1.0) * 4.0;
  const int i = std::min(3, static_cast<int>(u));
  const double f = u - i;
  return kStops[i] * (1.0 - f) + kStops[i + 1] * f;
}

const Rgb kSemanticPalette[5] = {
    {0.53, 0.81, 0.92},  // sky
    {0.55, 0.42, 0.26},  // terrain
    {0.85, 0.15, 0.15},  // trunk
    {0.95, 0.65, 0.10},  // branch
    {0.20, 0.65, 0.25},  // leaf
};

}  // namespace

Rgb8Image ComposePreview(const Rgb8Image& rgb, const Gray16Image& instance, const DepthImage& depth,
                         const GrayImage& semantic) {
  const int w = rgb.width;
  const int h = rgb.height;
  if (rgb.channels != 3 || !instance.SameShape(w, h) || !depth.SameShape(w, h) || !semantic.SameShape(w, h)) {
    throw Error("preview rasters must share dimensions");
  }
  std::set<std::uint16_t> ids;
  float max_depth = 0.0f;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (instance.at(x, y) != 0) ids.insert(instance.at(x, y));
      max_depth = std::max(max_depth, depth.at(x, y));
    }
  }
  const std::vector<Rgb> palette = OverlayPalette(static_cast<int>(ids.size()));
  std::map<std::uint16_t, Rgb> color_of;
  int rank = 0;
  for (std::uint16_t id : ids) color_of[id] = palette[static_cast<std::size_t>(rank++)];

  Rgb8Image out(2 * w, 2 * h, 3, 0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int c = 0; c < 3; ++c) {
        out.at(x, y, c) = rgb.at(x, y, c);
        out.at(w + x, y, c) = rgb.at(x, y, c);
      }
      if (const std::uint16_t id = instance.at(x, y); id != 0) {
        const Rgb& col = color_of[id];
        for (int c = 0; c < 3; ++c) out.at(w + x, y, c) = ToByte(col[c]);
      }
      const float d = depth.at(x, y);
      const Rgb dc = d > 0.0f && max_depth > 0.0f ? DepthColor(d / max_depth) : Rgb{0.0, 0.0, 0.0};
      const int sc = std::min<int>(semantic.at(x, y), 4);
      for (int c = 0; c < 3; ++c) {
        out.at(x, h + y, c) = ToByte(dc[c]);
        out.at(w + x, h + y, c) = ToByte(kSemanticPalette[sc][c]);
      }
    }
  }
  return out;
}

fs::path WritePreview(const fs::path& dir, const std::string& frame, const fs::path& out_path) {
  std::string stem;
  bool numeric = !frame.empty() && std::all_of(frame.begin(), frame.end(), [](char c) { return c >= '0' && c <= '9'; });
  for (const char* split : {"train", "test"}) {
    const fs::path path = dir / "annotations" / (std::string(split) + ".json");
    if (!fs::exists(path)) throw IoError("missing file: " + path.string());
    const CocoDataset ds = ParseCocoJson(ReadTextFile(path));
    for (const CocoImage& im : ds.images) {
      const std::string s = FrameStem(im.sequence, im.frame_index);
      if ((numeric && std::to_string(im.id) == frame) || s == frame) stem = s;
    }
  }
  if (stem.empty()) throw IoError("no frame '" + frame + "' in dataset " + dir.string());
  const Raster<std::uint8_t> rgb = ReadPng8(dir / "rgb" / (stem + ".png"));
  const Gray16Image instance = ReadPng16(dir / "instance" / (stem + ".png"));
  const DepthImage depth = ReadPfm(dir / "depth" / (stem + ".pfm"));
  const GrayImage semantic = ReadPng8(dir / "semantic" / (stem + ".png"));
  const Rgb8Image composite = ComposePreview(rgb, instance, depth, semantic);
  fs::path target = out_path;
  if (target.empty()) {
    EnsureDir(dir / "preview");
    target = dir / "preview" / (stem + ".png");
  } else if (target.has_parent_path()) {
    EnsureDir(target.parent_path());
  }
  WritePng8(target, composite);
  return target;
}

}  // namespace vforest
