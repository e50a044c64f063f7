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

#include <vector>

#include "benchmark/benchmark.h"
#include "vforest/annotate.h"
#include "vforest/bvh.h"
#include "vforest/pipeline.h"
#include "vforest/render.h"
#include "vforest/rng.h"

namespace vforest {
namespace {

std::vector<Triangle> Soup(int count) {
  Rng rng = DeriveRng(5, "bench", 0);
  std::vector<Triangle> tris;
  auto p = [&](double lo, double hi) { return Vec3{rng.Uniform(lo, hi), rng.Uniform(lo, hi), rng.Uniform(lo, hi)}; };
  for (int i = 0; i < count; ++i) {
    const Vec3 c = p(-50, 50);
    tris.push_back({c + p(-1, 1), c + p(-1, 1), c + p(-1, 1)});
  }
  return tris;
}

void BM_BvhBuild(benchmark::State& state) {
  const auto tris = Soup(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Bvh bvh(tris, std::vector<SurfaceInfo>(tris.size()));
    benchmark::DoNotOptimize(bvh.node_count());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BvhBuild)->Arg(1000)->Arg(100000);

void BM_BvhIntersect(benchmark::State& state) {
  const auto tris = Soup(static_cast<int>(state.range(0)));
  const Bvh bvh(tris, std::vector<SurfaceInfo>(tris.size()));
  Rng rng = DeriveRng(6, "bench", 0);
  for (auto _ : state) {
    const Ray ray{{rng.Uniform(-60, 60), rng.Uniform(-60, 60), -70}, Normalized({rng.Uniform(-0.3, 0.3), rng.Uniform(-0.3, 0.3), 1})};
    benchmark::DoNotOptimize(bvh.Intersect(ray));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_BvhIntersect)->Arg(1000)->Arg(100000);

struct ForestFixture {
  ForestFixture() {
    scene.terrain.extent_m = 100;
    scene.tree_density_per_ha = 200;
    scene.min_spacing_m = 3.0;
    built = BuildScene(scene);
  }
  SceneConfig scene;
  BuiltScene built;
};

const ForestFixture& Forest() {
  static const ForestFixture f;
  return f;
}

void BM_RenderFrame(benchmark::State& state) {
  const ForestFixture& f = Forest();
  const CameraIntrinsics k = CameraIntrinsics::FromHorizontalFov(640, 480, 60);
  const Vec3 eye{20, 20, SampleHeight(f.built.terrain, 20, 20) + 1.6};
  const Pose pose = Pose::LookingAlong(eye, 0.8, 0.0);
  for (auto _ : state) {
    const FrameBundle frame = RenderFrame(f.built.bvh, f.scene, pose, k, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(frame.rgb.data.data());
  }
}
BENCHMARK(BM_RenderFrame)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_ExtractInstances(benchmark::State& state) {
  const ForestFixture& f = Forest();
  const CameraIntrinsics k = CameraIntrinsics::FromHorizontalFov(640, 480, 60);
  const Vec3 eye{20, 20, SampleHeight(f.built.terrain, 20, 20) + 1.6};
  const FrameBundle frame = RenderFrame(f.built.bvh, f.scene, Pose::LookingAlong(eye, 0.8, 0.0), k);
  for (auto _ : state) benchmark::DoNotOptimize(ExtractInstances(frame.instance));
}
BENCHMARK(BM_ExtractInstances)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace vforest

BENCHMARK_MAIN();
