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

#ifndef VFOREST_SPECIES_H_
#define VFOREST_SPECIES_H_

#include <array>
#include <span>

#include "vforest/scene.h"

namespace vforest {

// The shipped 19-entry species library. Parameters are invented presets
// chosen to look plausible; they are not botanical measurements.
std::span<const SpeciesSpec, kSpeciesCount> SpeciesLibrary();

}  // namespace vforest

#endif  // VFOREST_SPECIES_H_
