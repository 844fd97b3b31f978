// Copyright 2026 The dsx Authors
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

// Minimal JSON Schema checker covering the keywords used by schemas/:
// type, enum, const, properties, required, additionalProperties, items,
// minItems, uniqueItems, minLength, minimum, pattern and local $ref.
// Unknown keywords make the check fail so a schema cannot silently outgrow
// the checker.

#ifndef DSX_TESTS_SUPPORT_SCHEMA_CHECK_HPP_
#define DSX_TESTS_SUPPORT_SCHEMA_CHECK_HPP_

#include <json.hpp>
#include <string>
#include <vector>

namespace dsx::testing {

/// Returns one message per violation; empty means `doc` conforms.
std::vector<std::string> CheckSchema(const nlohmann::json& schema,
                                     const nlohmann::json& doc);

}  // namespace dsx::testing

#endif  // DSX_TESTS_SUPPORT_SCHEMA_CHECK_HPP_
