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

// Configuration generators for the three connector technologies.
//
//   EDC         asset.json, policy.json, contract.json
//   OPC UA      catalog.json, resource.json, roles.json
//   ID-Link/AAS idlink.txt, aas-security.json
//
// JSON output uses 2-space indentation, lexicographic key order, LF line
// endings and a trailing newline. Env secret references are emitted as
// `${NAME}` placeholders and never resolved. The shapes are pinned by the
// schemas under schemas/.

#ifndef DSX_CODEGEN_HPP_
#define DSX_CODEGEN_HPP_

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dsx/model.hpp"

namespace dsx {

enum class Target { kEdc, kOpcUa, kIdLinkAas };

/// "edc", "opcua" or "idlink-aas"; also the per-target output directory.
std::string_view TargetName(Target target);
std::optional<Target> ParseTarget(std::string_view name);

struct GeneratedArtifact {
  std::string relative_path;
  std::string content;
  Target target = Target::kEdc;

  friend bool operator==(const GeneratedArtifact&,
                         const GeneratedArtifact&) = default;
};

struct GenerationBundle {
  std::vector<GeneratedArtifact> artifacts;
  std::string source_model;  // connector name

  friend bool operator==(const GenerationBundle&,
                         const GenerationBundle&) = default;
};

/// Raised when a model cannot be generated for a target. Carries every
/// failure found, not just the first.
class GenerationError : public std::runtime_error {
 public:
  explicit GenerationError(std::vector<std::string> messages);
  const std::vector<std::string>& messages() const { return messages_; }

 private:
  std::vector<std::string> messages_;
};

// Each generator revalidates the model and refuses to emit anything when
// validation reports errors or the usage variant does not fit the target.

GenerationBundle GenerateEdc(const ConnectorModel& model);
GenerationBundle GenerateOpcUa(const ConnectorModel& model);

/// Works for every usage variant; requires access.identityProvider.
GenerationBundle GenerateIdLinkAas(const ConnectorModel& model);

/// Concatenates the per-target bundles in Target order, placing each under
/// its TargetName() directory.
GenerationBundle GenerateAll(const ConnectorModel& model,
                             const std::set<Target>& targets);

/// Lowercase protocol identifiers used on the wire: opc.tcp, mqtt, https.
std::string_view ProtocolWireName(Protocol protocol);

/// `http://opcfoundation.org/UA/SecurityPolicy#<name>`
std::string SecurityPolicyUri(SecurityPolicy policy);

}  // namespace dsx

#endif  // DSX_CODEGEN_HPP_
