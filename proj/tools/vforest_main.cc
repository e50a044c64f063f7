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

// vforest: generate, inspect, preview and score synthetic forest datasets.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "vforest/config.h"
#include "vforest/error.h"
#include "vforest/eval.h"
#include "vforest/pipeline.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

int DefaultThreads() {
  if (const char* env = std::getenv("VFOREST_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid VFOREST_THREADS='" << env << "'\n";
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Procedural virtual-forest dataset generator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", vforest::ToolVersion());

  std::string config_path;
  std::string out_dir;
  int threads = DefaultThreads();
  bool quiet = false;
  auto* generate = app.add_subcommand("generate", "Render a dataset from a JSON config");
  generate->add_option("--config", config_path, "Config JSON")->required();
  generate->add_option("--out", out_dir, "Output dataset directory")->required();
  generate->add_option("--threads", threads, "Worker threads (default: $VFOREST_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
  generate->add_flag("-q,--quiet", quiet, "No progress output");

  std::string stats_dir;
  bool stats_json = false;
  auto* stats = app.add_subcommand("stats", "Summarize a generated dataset");
  stats->add_option("dir", stats_dir, "Dataset directory")->required();
  stats->add_flag("--json", stats_json, "Print JSON instead of a table");

  std::string gt_path;
  std::string pred_path;
  std::string eval_out;
  auto* eval = app.add_subcommand("eval", "Score COCO-format predictions (mAP@50)");
  eval->add_option("--gt", gt_path, "Ground-truth COCO JSON")->required();
  eval->add_option("--pred", pred_path, "Predictions JSON (COCO results array)")->required();
  eval->add_option("--out", eval_out, "Report directory")->required();

  std::string preview_dir;
  std::string frame_id;
  std::string preview_out;
  auto* preview = app.add_subcommand("preview", "Write a 2x2 composite of one frame");
  preview->add_option("dir", preview_dir, "Dataset directory")->required();
  preview->add_option("--frame", frame_id, "Image id or <sequence>_<frame> stem")->required();
  preview->add_option("--out", preview_out, "Output PNG (default: <dir>/preview/<stem>.png)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*generate) {
      const vforest::RunConfig config = vforest::LoadRunConfig(config_path);
      vforest::GenerateOptions options;
      options.out_dir = out_dir;
      options.threads = threads;
      if (!quiet) options.progress = [](const std::string& msg) { std::cerr << msg << "\n"; };
      const vforest::GenerateResult r = vforest::Generate(config, options);
      std::printf("wrote %d frames (%d train, %d test), %d trees, %d annotations to %s in %.1f s [config %s]\n",
                  r.frames, r.train_images, r.test_images, r.trees, r.annotations, out_dir.c_str(), r.seconds,
                  vforest::HexU64(r.config_hash).c_str());
    } else if (*stats) {
      const vforest::DatasetStats s = vforest::ComputeStats(stats_dir);
      std::cout << (stats_json ? vforest::StatsToJson(s) : vforest::StatsToText(s));
    } else if (*eval) {
      const vforest::EvalReport report = vforest::RunEval(gt_path, pred_path, eval_out);
      std::cout << vforest::ReportToTable(report);
    } else if (*preview) {
      const std::filesystem::path written = vforest::WritePreview(preview_dir, frame_id, preview_out);
      std::printf("wrote %s\n", written.string().c_str());
    }
  } catch (const vforest::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const vforest::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const vforest::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitOk;
}
