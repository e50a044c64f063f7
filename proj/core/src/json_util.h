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

#ifndef VFOREST_SRC_JSON_UTIL_H_
#define VFOREST_SRC_JSON_UTIL_H_

// Typed accessors over nlohmann::json that report failures as
// ConfigError with a JSON-pointer style path.

#include <cmath>
#include <cstdint>
#include <limits>
#include <set>
#include <string>

#include "json.hpp"
#include "vforest/error.h"

namespace vforest::json_util {

using Json = nlohmann::ordered_json;

inline std::string Child(const std::string& path, const std::string& key) { return path + "/" + key; }
inline std::string Child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

// Parses text, turning syntax errors into "line L, column C" diagnostics.
inline Json Parse(const std::string& text, const std::string& source_name) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ConfigError(source_name + ":" + std::to_string(line) + ":" + std::to_string(col),
                      std::string("JSON syntax error: ") + e.what());
  }
}

inline const Json& Require(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw ConfigError(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw ConfigError(Child(path, key), "missing required field");
  return *it;
}

inline const Json& RequireObject(const Json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  return j;
}

inline const Json& RequireArray(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ConfigError(path, "expected an array");
  return j;
}

inline double AsNumber(const Json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigError(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError(path, "expected a finite number");
  return v;
}

inline std::int64_t AsInteger(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 9.0e15) return static_cast<std::int64_t>(v);
  }
  throw ConfigError(path, "expected an integer");
}

inline int AsInt(const Json& j, const std::string& path) {
  const std::int64_t v = AsInteger(j, path);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw ConfigError(path, "integer out of range");
  }
  return static_cast<int>(v);
}

inline std::uint64_t AsU64(const Json& j, const std::string& path) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  const std::int64_t v = AsInteger(j, path);
  if (v < 0) throw ConfigError(path, "expected a non-negative integer");
  return static_cast<std::uint64_t>(v);
}

inline std::string AsString(const Json& j, const std::string& path) {
  if (!j.is_string()) throw ConfigError(path, "expected a string");
  return j.get<std::string>();
}

inline bool AsBool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) throw ConfigError(path, "expected true or false");
  return j.get<bool>();
}

// Rejects keys outside `allowed` so typos do not pass silently.
inline void CheckKeys(const Json& obj, const std::set<std::string>& allowed, const std::string& path) {
  RequireObject(obj, path);
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key())) throw ConfigError(Child(path, it.key()), "unknown field");
  }
}

}  // namespace vforest::json_util

#endif  // VFOREST_SRC_JSON_UTIL_H_
