// Copyright 2026 The fermko Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FERMKO_MODEL_MODEL_IO_H_
#define FERMKO_MODEL_MODEL_IO_H_

#include <map>
#include <stdexcept>
#include <string>

#include "fermko/model/metabolic_model.h"

namespace fermko::model {

enum class ModelFormat { kCobraJson, kNativeJson };

std::string to_string(ModelFormat format);
// "cobra-json" or "native-json"; throws std::invalid_argument otherwise.
ModelFormat parse_model_format(const std::string& text);

// Role tags forced onto reactions by id, applied after the file's own tags.
using RoleOverrides = std::map<ReactionRole, std::string>;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws ParseError for unreadable or malformed files and ModelError when the
// loaded model violates an invariant (message lists every diagnostic).
MetabolicModel load_model(const std::string& path, ModelFormat format,
                          const RoleOverrides& overrides = {});
MetabolicModel parse_model(const std::string& text, ModelFormat format,
                           const RoleOverrides& overrides = {});

// Native schema writer; the output reloads to an identical model.
std::string to_native_json(const MetabolicModel& model);

}  // namespace fermko::model

#endif  // FERMKO_MODEL_MODEL_IO_H_
