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

#ifndef VFOREST_ERROR_H_
#define VFOREST_ERROR_H_

#include <stdexcept>
#include <string>
#include <utility>

namespace vforest {

// Precondition or domain violation in a library call.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed configuration or input document. `where` is a field path or
// "line:column" location.
class ConfigError : public Error {
 public:
  ConfigError(std::string where, const std::string& what)
      : Error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// Filesystem or codec failure.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace vforest

#endif  // VFOREST_ERROR_H_
