// Copyright 2026 The SGNet Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SGNET_CORE_ERROR_HPP_
#define SGNET_CORE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace sgnet {

// Bad input data: manifests, media files, checkpoint files on disk.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Structural misuse of the model API: shape mismatches, incompatible
// checkpoints, non-finite losses.
class ModelError : public std::runtime_error {
 public:
  explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatch : public ModelError {
 public:
  explicit DimensionMismatch(const std::string& what) : ModelError(what) {}
};

}  // namespace sgnet

#endif  // SGNET_CORE_ERROR_HPP_
