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

// Semantic checks on parsed connector models.
//
// Each check has a stable code. A check may emit an error under its own code
// and a warning under the matching W code:
//
//   E201  URL fields are absolute with an allowed scheme (http/https for web
//         endpoints, opc.tcp for the OPC UA endpoint); the discovery
//         endpoint is a relative path.
//   E202  EDC remoteId is a BPN (BPNL + 12 alphanumerics) or a DID.
//   E203  metadata.modified is not before metadata.created.
//   E204  contract validUntil is an ISO 8601 date; W204 when it has passed.
//   E205  role names are unique; permissions are non-empty and distinct.
//   E206  W206 when push endpoints or trusted DID registries are set while
//         the connector runs as a hosted client (no stsServiceAddress).
//   E207  OPC UA messageSecurityMode None with a securityPolicy other than
//         None; W207 for Anonymous authentication while a role may WRITE.
//   E208  metadata.language is a two-letter lowercase ISO 639-1 code.
//   E209  semanticIds are IRIs.
//   W210  access.usagePolicy looks like an IRI.

#ifndef DSX_VALIDATOR_HPP_
#define DSX_VALIDATOR_HPP_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "dsx/date.hpp"
#include "dsx/diagnostic.hpp"
#include "dsx/model.hpp"

namespace dsx {

inline constexpr std::array<std::string_view, 10> kCheckCodes = {
    "E201", "E202", "E203", "E204", "E205",
    "E206", "E207", "E208", "E209", "W210",
};

struct ValidationOptions {
  /// Reference date for W204.
  CalendarDate today = CalendarDate::Today();
};

struct ValidationReport {
  std::vector<Diagnostic> diagnostics;  // ordered by span
  bool valid = true;                    // no error diagnostics
};

ValidationReport Validate(const ConnectorModel& model,
                          const ValidationOptions& options = {});

/// Findings of the single check named by `code` (one of kCheckCodes), in
/// span order. Throws std::invalid_argument for an unknown code.
std::vector<Diagnostic> CheckSingle(const ConnectorModel& model,
                                    std::string_view code,
                                    const ValidationOptions& options = {});

}  // namespace dsx

#endif  // DSX_VALIDATOR_HPP_
