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

#ifndef VFOREST_SRC_COCO_JSON_H_
#define VFOREST_SRC_COCO_JSON_H_

#include <string>
#include <vector>

#include "json_util.h"
#include "vforest/annotate.h"

namespace vforest {

// Shared by the annotation and results parsers.
std::vector<Polygon> ParseSegmentation(const json_util::Json& seg, const std::string& path);
BBox ParseBBox(const json_util::Json& j, const std::string& path);

}  // namespace vforest

#endif  // VFOREST_SRC_COCO_JSON_H_
