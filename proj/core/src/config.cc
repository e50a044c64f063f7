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

#include "vforest/config.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json_util.h"
#include "vforest/error.h"
#include "vforest/rng.h"
#include "vforest/species.h"

namespace vforest {

using json_util::AsBool;
using json_util::AsInt;
using json_util::AsNumber;
using json_util::AsString;
using json_util::CheckKeys;
using json_util::Child;
using json_util::Json;

namespace {

Vec3 AsVec3(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3) throw ConfigError(path, "expected an array of 3 numbers");
  return {AsNumber(j[0], path + "/0"), AsNumber(j[1], path + "/1"), AsNumber(j[2], path + "/2")};
}

Rgb AsColor(const Json& j, const std::string& path) {
  const Rgb c = AsVec3(j, path);
  for (int i = 0; i < 3; ++i) {
    if (c[i] < 0.0 || c[i] > 1.0) throw ConfigError(Child(path, static_cast<std::size_t>(i)), "must be in [0, 1]");
  }
  return c;
}

double Positive(const Json& j, const std::string& path) {
  const double v = AsNumber(j, path);
  if (!(v > 0.0)) throw ConfigError(path, "must be > 0");
  return v;
}

double NonNegative(const Json& j, const std::string& path) {
  const double v = AsNumber(j, path);
  if (!(v >= 0.0)) throw ConfigError(path, "must be >= 0");
  return v;
}

int IntInRange(const Json& j, const std::string& path, int lo, int hi) {
  const int v = AsInt(j, path);
  if (v < lo || v > hi) {
    throw ConfigError(path, "must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return v;
}

void ParseTerrain(const Json& j, const std::string& p, SceneConfig& s) {
  CheckKeys(j, {"extent_m", "cell_size_m", "amplitude_m", "octaves", "base_frequency", "albedo"}, p);
  TerrainParams& t = s.terrain;
  if (j.contains("extent_m")) t.extent_m = Positive(j["extent_m"], p + "/extent_m");
  if (j.contains("cell_size_m")) t.cell_size_m = Positive(j["cell_size_m"], p + "/cell_size_m");
  if (j.contains("amplitude_m")) t.amplitude_m = NonNegative(j["amplitude_m"], p + "/amplitude_m");
  if (j.contains("octaves")) t.octaves = IntInRange(j["octaves"], p + "/octaves", 1, 16);
  if (j.contains("base_frequency")) t.base_frequency = NonNegative(j["base_frequency"], p + "/base_frequency");
  if (j.contains("albedo")) s.terrain_albedo = AsColor(j["albedo"], p + "/albedo");
  if (t.extent_m / t.cell_size_m > 4096.0) throw ConfigError(p + "/cell_size_m", "grid would exceed 4096 cells per side");
}

void ParseTrees(const Json& j, const std::string& p, SceneConfig& s) {
  CheckKeys(j, {"density_per_ha", "min_spacing_m", "species_weights", "radial_segments"}, p);
  if (j.contains("density_per_ha")) s.tree_density_per_ha = NonNegative(j["density_per_ha"], p + "/density_per_ha");
  if (j.contains("min_spacing_m")) s.min_spacing_m = Positive(j["min_spacing_m"], p + "/min_spacing_m");
  if (j.contains("radial_segments")) s.radial_segments = IntInRange(j["radial_segments"], p + "/radial_segments", 3, 1024);
  if (j.contains("species_weights")) {
    const Json& w = j["species_weights"];
    const std::string wp = p + "/species_weights";
    if (w.is_array()) {
      if (w.size() != kSpeciesCount) {
        throw ConfigError(wp, "expected " + std::to_string(kSpeciesCount) + " weights, got " + std::to_string(w.size()));
      }
      for (std::size_t i = 0; i < w.size(); ++i) s.species_weights[i] = NonNegative(w[i], Child(wp, i));
    } else if (w.is_object()) {
      // Named weights; species not listed get weight 0.
      s.species_weights.fill(0.0);
      const auto lib = SpeciesLibrary();
      for (auto it = w.begin(); it != w.end(); ++it) {
        int found = -1;
        for (int i = 0; i < kSpeciesCount; ++i) {
          if (lib[static_cast<std::size_t>(i)].name == it.key()) found = i;
        }
        if (found < 0) throw ConfigError(Child(wp, it.key()), "unknown species");
        s.species_weights[static_cast<std::size_t>(found)] = NonNegative(it.value(), Child(wp, it.key()));
      }
    } else {
      throw ConfigError(wp, "expected an array of weights or an object keyed by species name");
    }
  }
}

void ParseLighting(const Json& j, const std::string& p, RunConfig& c) {
  CheckKeys(j, {"preset", "sun_direction", "sun_intensity", "sun_color", "ambient_intensity", "point_lights"}, p);
  Lighting& l = c.scene.lighting;
  if (j.contains("preset")) {
    c.lighting_preset = AsString(j["preset"], p + "/preset");
    try {
      const std::vector<PointLight> keep = l.point_lights;
      l = LightingPreset(c.lighting_preset);
      l.point_lights = keep;
    } catch (const Error& e) {
      throw ConfigError(p + "/preset", e.what());
    }
  }
  if (j.contains("sun_direction")) {
    const Vec3 d = AsVec3(j["sun_direction"], p + "/sun_direction");
    const double n = Norm(d);
    if (!(n > 1e-9)) throw ConfigError(p + "/sun_direction", "must be nonzero");
    l.sun_direction = d / n;
  }
  if (j.contains("sun_intensity")) l.sun_intensity = NonNegative(j["sun_intensity"], p + "/sun_intensity");
  if (j.contains("sun_color")) l.sun_color = AsColor(j["sun_color"], p + "/sun_color");
  if (j.contains("ambient_intensity")) l.ambient_intensity = NonNegative(j["ambient_intensity"], p + "/ambient_intensity");
  if (j.contains("point_lights")) {
    const std::string lp = p + "/point_lights";
    const Json& arr = json_util::RequireArray(j["point_lights"], lp);
    l.point_lights.clear();
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string ip = Child(lp, i);
      CheckKeys(arr[i], {"position_m", "intensity", "color"}, ip);
      PointLight pl;
      pl.position_m = AsVec3(json_util::Require(arr[i], "position_m", ip), ip + "/position_m");
      pl.intensity = NonNegative(json_util::Require(arr[i], "intensity", ip), ip + "/intensity");
      if (arr[i].contains("color")) pl.color = AsColor(arr[i]["color"], ip + "/color");
      l.point_lights.push_back(pl);
    }
  }
}

void ParseWeather(const Json& j, const std::string& p, SceneConfig& s) {
  CheckKeys(j, {"fog_density", "sky_color"}, p);
  if (j.contains("fog_density")) s.fog_density = NonNegative(j["fog_density"], p + "/fog_density");
  if (j.contains("sky_color")) s.sky_color = AsColor(j["sky_color"], p + "/sky_color");
}

void ParseCamera(const Json& j, const std::string& p, RunConfig& c) {
  CheckKeys(j, {"width", "height", "hfov_deg"}, p);
  if (j.contains("width")) c.width_px = IntInRange(j["width"], p + "/width", 1, 16384);
  if (j.contains("height")) c.height_px = IntInRange(j["height"], p + "/height", 1, 16384);
  if (j.contains("hfov_deg")) {
    c.hfov_deg = AsNumber(j["hfov_deg"], p + "/hfov_deg");
    if (!(c.hfov_deg > 0.0 && c.hfov_deg < 180.0)) throw ConfigError(p + "/hfov_deg", "must be in (0, 180)");
  }
}

void ParseLidar(const Json& j, const std::string& p, RunConfig& c) {
  CheckKeys(j, {"enabled", "rings", "azimuth_steps", "vfov_deg", "max_range_m"}, p);
  LidarParams& l = c.lidar;
  if (j.contains("enabled")) c.lidar_enabled = AsBool(j["enabled"], p + "/enabled");
  if (j.contains("rings")) l.rings = IntInRange(j["rings"], p + "/rings", 1, 256);
  if (j.contains("azimuth_steps")) l.azimuth_steps = IntInRange(j["azimuth_steps"], p + "/azimuth_steps", 1, 100000);
  if (j.contains("vfov_deg")) {
    const std::string vp = p + "/vfov_deg";
    const Json& v = j["vfov_deg"];
    if (!v.is_array() || v.size() != 2) throw ConfigError(vp, "expected [lo, hi] in degrees");
    l.vfov_lo_deg = AsNumber(v[0], vp + "/0");
    l.vfov_hi_deg = AsNumber(v[1], vp + "/1");
    if (!(l.vfov_lo_deg < l.vfov_hi_deg)) throw ConfigError(vp, "lo must be < hi");
    if (l.vfov_lo_deg < -90.0 || l.vfov_hi_deg > 90.0) throw ConfigError(vp, "must lie within [-90, 90]");
  }
  if (j.contains("max_range_m")) l.max_range_m = Positive(j["max_range_m"], p + "/max_range_m");
}

bool ValidSequenceName(const std::string& s) {
  if (s.empty() || s.size() > 64) return false;
  for (const char ch : s) {
    const bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') || ch == '-';
    if (!ok) return false;
  }
  return true;
}

TrajectorySpec ParseTrajectory(const Json& j, const std::string& p) {
  CheckKeys(j, {"name", "frame_rate_hz", "altitude", "keyframes"}, p);
  TrajectorySpec t;
  t.name = AsString(json_util::Require(j, "name", p), p + "/name");
  if (!ValidSequenceName(t.name)) {
    throw ConfigError(p + "/name", "use 1-64 characters from [A-Za-z0-9-]");
  }
  if (j.contains("frame_rate_hz")) t.frame_rate_hz = Positive(j["frame_rate_hz"], p + "/frame_rate_hz");
  if (j.contains("altitude")) {
    const std::string mode = AsString(j["altitude"], p + "/altitude");
    if (mode == "terrain") {
      t.altitude_above_terrain = true;
    } else if (mode != "absolute") {
      throw ConfigError(p + "/altitude", "expected \"absolute\" or \"terrain\"");
    }
  }
  const std::string kp = p + "/keyframes";
  const Json& kfs = json_util::RequireArray(json_util::Require(j, "keyframes", p), kp);
  if (kfs.size() < 2) throw ConfigError(kp, "need at least 2 keyframes");
  for (std::size_t i = 0; i < kfs.size(); ++i) {
    const std::string ip = Child(kp, i);
    CheckKeys(kfs[i], {"t", "position", "yaw_deg", "pitch_deg", "orientation"}, ip);
    KeyframeSpec k;
    k.timestamp_s = AsNumber(json_util::Require(kfs[i], "t", ip), ip + "/t");
    if (i > 0 && !(k.timestamp_s > t.keyframes.back().timestamp_s)) {
      throw ConfigError(ip + "/t", "timestamps must be strictly increasing");
    }
    k.position_m = AsVec3(json_util::Require(kfs[i], "position", ip), ip + "/position");
    const bool has_angles = kfs[i].contains("yaw_deg") || kfs[i].contains("pitch_deg");
    if (kfs[i].contains("orientation")) {
      if (has_angles) throw ConfigError(ip, "give either orientation or yaw_deg/pitch_deg, not both");
      const std::string op = ip + "/orientation";
      const Json& q = kfs[i]["orientation"];
      if (!q.is_array() || q.size() != 4) throw ConfigError(op, "expected a quaternion [w, x, y, z]");
      Quaternion quat{AsNumber(q[0], op + "/0"), AsNumber(q[1], op + "/1"), AsNumber(q[2], op + "/2"),
                      AsNumber(q[3], op + "/3")};
      const double n = std::sqrt(Dot(quat, quat));
      if (!(n > 1e-9)) throw ConfigError(op, "quaternion must be nonzero");
      k.orientation = quat.Normalized();
    } else {
      const double yaw = kfs[i].contains("yaw_deg") ? AsNumber(kfs[i]["yaw_deg"], ip + "/yaw_deg") : 0.0;
      const double pitch = kfs[i].contains("pitch_deg") ? AsNumber(kfs[i]["pitch_deg"], ip + "/pitch_deg") : 0.0;
      if (!(std::abs(pitch) < 89.0)) throw ConfigError(ip + "/pitch_deg", "must be within (-89, 89)");
      k.orientation = Pose::LookingAlong({}, yaw * kPi / 180.0, pitch * kPi / 180.0).orientation;
    }
    t.keyframes.push_back(k);
  }
  return t;
}

void ParseOutput(const Json& j, const std::string& p, RunConfig& c) {
  CheckKeys(j, {"test_fraction", "min_area_px"}, p);
  if (j.contains("test_fraction")) {
    c.test_fraction = AsNumber(j["test_fraction"], p + "/test_fraction");
    if (c.test_fraction < 0.0 || c.test_fraction > 1.0) throw ConfigError(p + "/test_fraction", "must be in [0, 1]");
  }
  if (j.contains("min_area_px")) c.min_area_px = IntInRange(j["min_area_px"], p + "/min_area_px", 0, 1 << 30);
}

}  // namespace

RunConfig ParseRunConfig(const std::string& text, const std::string& source_name) {
  const Json root = json_util::Parse(text, source_name);
  CheckKeys(root, {"seed", "terrain", "trees", "lighting", "weather", "camera", "lidar", "trajectories", "output"}, "");
  RunConfig c;
  c.lighting_preset = "noon";
  c.scene.lighting = LightingPreset("noon");
  if (root.contains("seed")) c.scene.master_seed = json_util::AsU64(root["seed"], "/seed");
  if (root.contains("terrain")) ParseTerrain(root["terrain"], "/terrain", c.scene);
  if (root.contains("trees")) ParseTrees(root["trees"], "/trees", c.scene);
  if (root.contains("lighting")) {
    const Json& l = root["lighting"];
    json_util::RequireObject(l, "/lighting");
    const bool custom = l.contains("sun_direction") || l.contains("sun_intensity") || l.contains("sun_color") ||
                        l.contains("ambient_intensity");
    ParseLighting(l, "/lighting", c);
    if (custom && !l.contains("preset")) c.lighting_preset.clear();
  }
  if (root.contains("weather")) ParseWeather(root["weather"], "/weather", c.scene);
  if (root.contains("camera")) ParseCamera(root["camera"], "/camera", c);
  if (root.contains("lidar")) ParseLidar(root["lidar"], "/lidar", c);
  const Json& trajs = json_util::RequireArray(json_util::Require(root, "trajectories", ""), "/trajectories");
  std::set<std::string> names;
  for (std::size_t i = 0; i < trajs.size(); ++i) {
    const std::string p = Child("/trajectories", i);
    c.trajectories.push_back(ParseTrajectory(trajs[i], p));
    if (!names.insert(c.trajectories.back().name).second) throw ConfigError(p + "/name", "duplicate trajectory name");
  }
  if (root.contains("output")) ParseOutput(root["output"], "/output", c);
  c.scene.Validate();
  return c;
}

RunConfig LoadRunConfig(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ParseRunConfig(ss.str(), path);
}

namespace {

Json Vec(const Vec3& v) { return Json::array({v.x, v.y, v.z}); }

}  // namespace

std::string RunConfigToJson(const RunConfig& c, int indent) {
  const SceneConfig& s = c.scene;
  Json root = Json::object();
  root["seed"] = s.master_seed;
  Json terrain = Json::object();
  terrain["extent_m"] = s.terrain.extent_m;
  terrain["cell_size_m"] = s.terrain.cell_size_m;
  terrain["amplitude_m"] = s.terrain.amplitude_m;
  terrain["octaves"] = s.terrain.octaves;
  terrain["base_frequency"] = s.terrain.base_frequency;
  terrain["albedo"] = Vec(s.terrain_albedo);
  root["terrain"] = std::move(terrain);
  Json trees = Json::object();
  trees["density_per_ha"] = s.tree_density_per_ha;
  trees["min_spacing_m"] = s.min_spacing_m;
  trees["species_weights"] = s.species_weights;
  trees["radial_segments"] = s.radial_segments;
  root["trees"] = std::move(trees);
  Json lighting = Json::object();
  if (!c.lighting_preset.empty()) lighting["preset"] = c.lighting_preset;
  lighting["sun_direction"] = Vec(s.lighting.sun_direction);
  lighting["sun_intensity"] = s.lighting.sun_intensity;
  lighting["sun_color"] = Vec(s.lighting.sun_color);
  lighting["ambient_intensity"] = s.lighting.ambient_intensity;
  Json lights = Json::array();
  for (const PointLight& pl : s.lighting.point_lights) {
    Json j = Json::object();
    j["position_m"] = Vec(pl.position_m);
    j["intensity"] = pl.intensity;
    j["color"] = Vec(pl.color);
    lights.push_back(std::move(j));
  }
  lighting["point_lights"] = std::move(lights);
  root["lighting"] = std::move(lighting);
  Json weather = Json::object();
  weather["fog_density"] = s.fog_density;
  weather["sky_color"] = Vec(s.sky_color);
  root["weather"] = std::move(weather);
  Json camera = Json::object();
  camera["width"] = c.width_px;
  camera["height"] = c.height_px;
  camera["hfov_deg"] = c.hfov_deg;
  root["camera"] = std::move(camera);
  Json lidar = Json::object();
  lidar["enabled"] = c.lidar_enabled;
  lidar["rings"] = c.lidar.rings;
  lidar["azimuth_steps"] = c.lidar.azimuth_steps;
  lidar["vfov_deg"] = Json::array({c.lidar.vfov_lo_deg, c.lidar.vfov_hi_deg});
  lidar["max_range_m"] = c.lidar.max_range_m;
  root["lidar"] = std::move(lidar);
  Json trajs = Json::array();
  for (const TrajectorySpec& t : c.trajectories) {
    Json j = Json::object();
    j["name"] = t.name;
    j["frame_rate_hz"] = t.frame_rate_hz;
    j["altitude"] = t.altitude_above_terrain ? "terrain" : "absolute";
    Json kfs = Json::array();
    for (const KeyframeSpec& k : t.keyframes) {
      Json kj = Json::object();
      kj["t"] = k.timestamp_s;
      kj["position"] = Vec(k.position_m);
      kj["orientation"] = Json::array({k.orientation.w, k.orientation.x, k.orientation.y, k.orientation.z});
      kfs.push_back(std::move(kj));
    }
    j["keyframes"] = std::move(kfs);
    trajs.push_back(std::move(j));
  }
  root["trajectories"] = std::move(trajs);
  Json output = Json::object();
  output["test_fraction"] = c.test_fraction;
  output["min_area_px"] = c.min_area_px;
  root["output"] = std::move(output);
  return root.dump(indent);
}

std::uint64_t RunConfigHash(const RunConfig& config) { return Fnv1a64(RunConfigToJson(config, -1)); }

std::string HexU64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace vforest
