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

#include "dsx/validator.hpp"

#include <set>
#include <stdexcept>

#include "dsx/url.hpp"

namespace dsx {
namespace {

using Diagnostics = std::vector<Diagnostic>;
using CheckFn = void (*)(const ConnectorModel&, const ValidationOptions&,
                         Diagnostics&);

std::string Indexed(const std::string& path, size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

// Section a field path belongs to, used as the fallback span.
std::string SectionOf(const std::string& path) {
  return path.substr(0, path.find('.'));
}

SourceSpan At(const ConnectorModel& m, const std::string& path) {
  return m.locations.Lookup(path, SectionOf(path));
}

void CheckUrls(const ConnectorModel& m, const ValidationOptions&,
               Diagnostics& out) {
  auto web = [&](const std::string& path, const std::string& value) {
    if (!IsWebUrl(value)) {
      out.push_back(MakeError(
          "E201", "'" + value + "' is not an absolute http or https URL",
          At(m, path)));
    }
  };
  auto web_list = [&](const std::string& path,
                      const std::vector<std::string>& values) {
    for (size_t i = 0; i < values.size(); ++i) {
      if (!IsWebUrl(values[i])) {
        out.push_back(MakeError(
            "E201", "'" + values[i] + "' is not an absolute http or https URL",
            m.locations.Lookup(Indexed(path, i), path)));
      }
    }
  };

  web("discovery.baseUrl", m.identification.base_url);
  if (HasScheme(m.identification.endpoint)) {
    out.push_back(MakeError(
        "E201",
        "endpoint '" + m.identification.endpoint +
            "' must be a path relative to baseUrl, not a URL",
        At(m, "discovery.endpoint")));
  }
  web("usage.dataAddress", m.usage.data_address);
  if (m.usage.schema_address) {
    web("usage.schemaAddress", *m.usage.schema_address);
  }
  if (const EdcUsage* edc = m.usage.edc()) {
    web("usage.edcAddress", edc->edc_address);
    web("usage.remoteAddress", edc->remote_address);
    if (edc->sts_service_address) {
      web("usage.stsServiceAddress", *edc->sts_service_address);
    }
    web_list("usage.trustedDidRegistries", edc->trusted_did_registries);
    if (edc->push_endpoints) {
      web("usage.push.callbackUrl", edc->push_endpoints->callback_url);
    }
  }
  if (const OpcUaUsage* opc = m.usage.opcua()) {
    if (!IsAbsoluteUrl(opc->endpoint_url, {"opc.tcp"})) {
      out.push_back(MakeError(
          "E201", "'" + opc->endpoint_url + "' is not an opc.tcp:// URL",
          At(m, "usage.endpointUrl")));
    }
    web_list("usage.companionSpecs", opc->companion_specs);
  }
  if (const auto& idp = m.access.identity_provider) {
    web("access.identityProvider.endpoint", idp->endpoint);
  }
}

void CheckRemoteId(const ConnectorModel& m, const ValidationOptions&,
                   Diagnostics& out) {
  const EdcUsage* edc = m.usage.edc();
  if (!edc || IsParticipantId(edc->remote_id)) return;
  out.push_back(MakeError(
      "E202",
      "remoteId '" + edc->remote_id + "' is neither a BPN (" +
          std::string(kBpnPattern) + ") nor a DID (" +
          std::string(kDidPattern) + ")",
      At(m, "usage.remoteId")));
}

void CheckDateOrder(const ConnectorModel& m, const ValidationOptions&,
                    Diagnostics& out) {
  const auto& md = m.metadata;
  if (md.modified >= md.created) return;
  out.push_back(MakeError("E203",
                          "modified " + md.modified.ToString() +
                              " is before created " + md.created.ToString(),
                          At(m, "metadata.modified")));
}

void CheckValidUntil(const ConnectorModel& m, const ValidationOptions& opts,
                     Diagnostics& out) {
  const ContractOffer* offer = m.access.FindOffer("validUntil");
  if (!offer) return;
  const SourceSpan span =
      m.locations.Lookup("access.contract.validUntil", "access.contract");
  std::optional<CalendarDate> date;
  if (const auto* d = std::get_if<CalendarDate>(&offer->value)) date = *d;
  if (const auto* s = std::get_if<std::string>(&offer->value)) {
    date = CalendarDate::Parse(*s);
  }
  if (!date) {
    out.push_back(MakeError(
        "E204", "contract validUntil must be an ISO 8601 date (YYYY-MM-DD)",
        span));
  } else if (*date < opts.today) {
    out.push_back(MakeWarning("W204",
                              "contract validUntil " + date->ToString() +
                                  " is in the past",
                              span));
  }
}

void CheckRoles(const ConnectorModel& m, const ValidationOptions&,
                Diagnostics& out) {
  std::set<std::string> names;
  const auto& roles = m.access.roles;
  for (size_t i = 0; i < roles.size(); ++i) {
    const std::string path = Indexed("access.roles", i);
    const SourceSpan role_span = m.locations.Lookup(path, "access.roles");
    if (!names.insert(roles[i].role_name).second) {
      out.push_back(MakeError(
          "E205", "duplicate role '" + roles[i].role_name + "'", role_span));
    }
    const SourceSpan perms_span =
        m.locations.Find(path + ".permissions")
            ? *m.locations.Find(path + ".permissions")
            : role_span;
    if (roles[i].permissions.empty()) {
      out.push_back(MakeError("E205",
                              "role '" + roles[i].role_name +
                                  "' grants no permissions",
                              perms_span));
    }
    std::set<Permission> seen;
    for (Permission p : roles[i].permissions) {
      if (!seen.insert(p).second) {
        out.push_back(MakeError("E205",
                                "role '" + roles[i].role_name +
                                    "' repeats permission " +
                                    std::string(EnumName(p)),
                                perms_span));
      }
    }
  }
}

void CheckEdcMode(const ConnectorModel& m, const ValidationOptions&,
                  Diagnostics& out) {
  const EdcUsage* edc = m.usage.edc();
  if (!edc || edc->direct_dsp()) return;
  if (edc->push_endpoints) {
    out.push_back(MakeWarning(
        "W206",
        "push endpoints are ignored without stsServiceAddress; the hosted "
        "EDC client handles DSP communication",
        At(m, "usage.push")));
  }
  if (!edc->trusted_did_registries.empty()) {
    out.push_back(MakeWarning(
        "W206",
        "trustedDidRegistries are ignored without stsServiceAddress; the "
        "hosted EDC client handles DSP communication",
        At(m, "usage.trustedDidRegistries")));
  }
}

void CheckOpcUaSecurity(const ConnectorModel& m, const ValidationOptions&,
                        Diagnostics& out) {
  const OpcUaUsage* opc = m.usage.opcua();
  if (!opc) return;
  if (opc->message_security_mode == MessageSecurityMode::kNone &&
      opc->security_policy != SecurityPolicy::kNone) {
    out.push_back(MakeError(
        "E207",
        "messageSecurityMode None contradicts securityPolicy " +
            std::string(EnumName(opc->security_policy)),
        At(m, "usage.messageSecurityMode")));
  }
  if (opc->authentication_mode != AuthenticationMode::kAnonymous) return;
  std::string writers;
  for (const Role& role : m.access.roles) {
    for (Permission p : role.permissions) {
      if (p == Permission::kWrite) {
        if (!writers.empty()) writers += ", ";
        writers += role.role_name;
        break;
      }
    }
  }
  if (!writers.empty()) {
    out.push_back(MakeWarning(
        "W207",
        "anonymous authentication while roles require WRITE: " + writers,
        At(m, "usage.authenticationMode")));
  }
}

void CheckLanguage(const ConnectorModel& m, const ValidationOptions&,
                   Diagnostics& out) {
  const auto& lang = m.metadata.language;
  if (!lang) return;
  const bool ok = lang->size() == 2 && (*lang)[0] >= 'a' &&
                  (*lang)[0] <= 'z' && (*lang)[1] >= 'a' && (*lang)[1] <= 'z';
  if (!ok) {
    out.push_back(MakeError(
        "E208",
        "language '" + *lang + "' is not a two-letter lowercase ISO 639-1 code",
        At(m, "metadata.language")));
  }
}

void CheckSemanticIds(const ConnectorModel& m, const ValidationOptions&,
                      Diagnostics& out) {
  const auto& ids = m.metadata.semantic_ids;
  for (size_t i = 0; i < ids.size(); ++i) {
    if (IsIri(ids[i])) continue;
    out.push_back(MakeError(
        "E209", "semantic id '" + ids[i] + "' is not an IRI",
        m.locations.Lookup(Indexed("metadata.semanticIds", i),
                           "metadata.semanticIds")));
  }
}

void CheckUsagePolicy(const ConnectorModel& m, const ValidationOptions&,
                      Diagnostics& out) {
  if (IsIri(m.access.usage_policy)) return;
  out.push_back(MakeWarning("W210",
                            "usagePolicy '" + m.access.usage_policy +
                                "' does not look like an IRI",
                            At(m, "access.usagePolicy")));
}

struct Check {
  std::string_view code;
  CheckFn run;
};

constexpr std::array<Check, kCheckCodes.size()> kChecks = {{
    {"E201", CheckUrls},
    {"E202", CheckRemoteId},
    {"E203", CheckDateOrder},
    {"E204", CheckValidUntil},
    {"E205", CheckRoles},
    {"E206", CheckEdcMode},
    {"E207", CheckOpcUaSecurity},
    {"E208", CheckLanguage},
    {"E209", CheckSemanticIds},
    {"W210", CheckUsagePolicy},
}};

}  // namespace

ValidationReport Validate(const ConnectorModel& model,
                          const ValidationOptions& options) {
  ValidationReport report;
  for (const Check& check : kChecks) {
    check.run(model, options, report.diagnostics);
  }
  SortBySpan(report.diagnostics);
  report.valid = !HasErrors(report.diagnostics);
  return report;
}

std::vector<Diagnostic> CheckSingle(const ConnectorModel& model,
                                    std::string_view code,
                                    const ValidationOptions& options) {
  for (const Check& check : kChecks) {
    if (check.code != code) continue;
    Diagnostics out;
    check.run(model, options, out);
    SortBySpan(out);
    return out;
  }
  std::string known;
  for (std::string_view c : kCheckCodes) {
    if (!known.empty()) known += ", ";
    known += c;
  }
  throw std::invalid_argument("unknown check code '" + std::string(code) +
                              "'; valid codes: " + known);
}

}  // namespace dsx
