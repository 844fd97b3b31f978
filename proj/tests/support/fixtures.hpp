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

#ifndef DSX_TESTS_SUPPORT_FIXTURES_HPP_
#define DSX_TESTS_SUPPORT_FIXTURES_HPP_

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <string>

#include "dsx/date.hpp"
#include "dsx/model.hpp"
#include "dsx/parser.hpp"

namespace dsx::testing {

inline std::filesystem::path FixtureDir() { return DSX_FIXTURE_DIR; }
inline std::filesystem::path SchemaDir() { return DSX_SCHEMA_DIR; }

// Pinned clock for W204 so results do not drift with the calendar.
inline constexpr CalendarDate kPinnedToday{2026, 6, 1};

inline std::string ReadText(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string Fixture(const std::string& name) {
  return ReadText(FixtureDir() / name);
}

inline nlohmann::json Schema(const std::string& name) {
  return nlohmann::json::parse(ReadText(SchemaDir() / name));
}

/// Parses a fixture and throws if it has errors.
inline ConnectorModel LoadModel(const std::string& name) {
  ParseResult result = Parse(Fixture(name), name);
  if (!result.model) throw std::runtime_error(name + " does not parse");
  return std::move(*result.model);
}

/// Schema file for a generated artifact, keyed by its file name.
inline std::string SchemaFor(const std::string& artifact) {
  if (artifact == "asset.json") return "edc-asset.schema.json";
  if (artifact == "policy.json") return "edc-policy.schema.json";
  if (artifact == "contract.json") return "edc-contract.schema.json";
  if (artifact == "catalog.json") return "opcua-catalog.schema.json";
  if (artifact == "resource.json") return "opcua-resource.schema.json";
  if (artifact == "roles.json") return "opcua-roles.schema.json";
  if (artifact == "aas-security.json") return "aas-security.schema.json";
  return "";
}

}  // namespace dsx::testing

#endif  // DSX_TESTS_SUPPORT_FIXTURES_HPP_
