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

#include "vforest/species.h"

namespace vforest {

namespace {

SpeciesSpec Make(const char* name, double base_radius, double taper, double h_min, double h_max,
                 int b_min, int b_max, double branch_frac, Vec3 crown, Rgb bark, Rgb leaf) {
  SpeciesSpec s;
  s.name = name;
  s.trunk_base_radius_m = base_radius;
  s.trunk_taper_exponent = taper;
  s.height_min_m = h_min;
  s.height_max_m = h_max;
  s.branch_count_min = b_min;
  s.branch_count_max = b_max;
  s.branch_radius_fraction = branch_frac;
  s.crown_radii_m = crown;
  s.bark_albedo = bark;
  s.leaf_albedo = leaf;
  return s;
}

const std::array<SpeciesSpec, kSpeciesCount> kLibrary = {
    // Broadleaf species first.
    Make("Bucida Buceras", 0.22, 0.9, 9.0, 14.0, 3, 6, 0.35, {3.0, 3.0, 2.4}, {0.36, 0.30, 0.24}, {0.20, 0.38, 0.12}),
    Make("Conocarpus Erectus", 0.18, 0.8, 8.0, 12.0, 2, 5, 0.35, {2.4, 2.4, 2.2}, {0.33, 0.27, 0.21}, {0.16, 0.32, 0.14}),
    Make("Eucaliptus Gunni", 0.25, 1.0, 12.0, 20.0, 3, 7, 0.30, {2.8, 2.8, 3.0}, {0.62, 0.58, 0.50}, {0.32, 0.42, 0.30}),
    Make("Melia Azedarach", 0.20, 0.9, 8.5, 13.0, 3, 6, 0.32, {3.2, 3.2, 2.3}, {0.30, 0.24, 0.19}, {0.22, 0.44, 0.14}),
    Make("Populus Alba", 0.24, 1.1, 13.0, 21.0, 3, 6, 0.30, {2.6, 2.6, 3.4}, {0.70, 0.68, 0.62}, {0.28, 0.46, 0.22}),
    Make("Quercus Robur", 0.35, 0.7, 10.0, 18.0, 4, 8, 0.38, {4.0, 4.0, 3.2}, {0.26, 0.22, 0.17}, {0.18, 0.34, 0.10}),
    Make("Schinus Molle", 0.21, 0.8, 8.0, 12.0, 4, 8, 0.30, {3.3, 3.3, 2.2}, {0.34, 0.26, 0.20}, {0.26, 0.40, 0.16}),
    Make("Tilia Cordata", 0.27, 0.9, 11.0, 18.0, 3, 7, 0.33, {3.2, 3.2, 3.1}, {0.32, 0.28, 0.24}, {0.20, 0.42, 0.15}),
    Make("Acer Saccharum", 0.28, 0.9, 11.0, 19.0, 3, 7, 0.34, {3.4, 3.4, 3.0}, {0.38, 0.33, 0.28}, {0.30, 0.45, 0.12}),
    Make("Betula Papyrifera", 0.15, 1.0, 10.0, 18.0, 2, 5, 0.28, {2.2, 2.2, 2.8}, {0.86, 0.84, 0.80}, {0.30, 0.50, 0.18}),
    Make("Fagus Grandifolia", 0.30, 0.8, 11.0, 20.0, 3, 7, 0.34, {3.6, 3.6, 3.0}, {0.55, 0.55, 0.55}, {0.24, 0.44, 0.16}),
    Make("Fraxinus Americana", 0.24, 1.0, 12.0, 20.0, 3, 6, 0.30, {3.0, 3.0, 3.0}, {0.42, 0.38, 0.32}, {0.22, 0.40, 0.16}),
    Make("Ulmus Americana", 0.30, 0.9, 12.0, 22.0, 3, 7, 0.32, {3.8, 3.8, 3.2}, {0.36, 0.31, 0.26}, {0.20, 0.38, 0.14}),
    // Conifers: narrow tall crowns, few visible branches.
    Make("Pinus Strobus", 0.28, 1.2, 14.0, 24.0, 2, 5, 0.25, {2.6, 2.6, 4.0}, {0.30, 0.22, 0.16}, {0.10, 0.28, 0.12}),
    Make("Picea Glauca", 0.22, 1.3, 12.0, 20.0, 2, 4, 0.22, {2.0, 2.0, 4.2}, {0.34, 0.27, 0.20}, {0.10, 0.24, 0.14}),
    Make("Abies Balsamea", 0.18, 1.3, 10.0, 16.0, 1, 4, 0.22, {1.8, 1.8, 3.6}, {0.40, 0.36, 0.32}, {0.08, 0.22, 0.10}),
    Make("Tsuga Canadensis", 0.26, 1.2, 12.0, 20.0, 2, 5, 0.24, {2.4, 2.4, 3.8}, {0.38, 0.25, 0.18}, {0.10, 0.26, 0.12}),
    Make("Larix Laricina", 0.20, 1.1, 11.0, 18.0, 2, 5, 0.24, {2.0, 2.0, 3.4}, {0.40, 0.30, 0.22}, {0.30, 0.42, 0.16}),
    Make("Thuja Occidentalis", 0.20, 1.0, 8.0, 14.0, 0, 3, 0.25, {1.8, 1.8, 2.4}, {0.44, 0.32, 0.24}, {0.12, 0.30, 0.14}),
};

}  // namespace

std::span<const SpeciesSpec, kSpeciesCount> SpeciesLibrary() { return kLibrary; }

}  // namespace vforest
