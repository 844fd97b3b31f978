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

#include "dsx/model.hpp"

#include <algorithm>
#include <regex>
#include <set>

#include "dsx/syntax.hpp"
#include "dsx/url.hpp"

namespace dsx {

std::string_view UsageKind(const UsageConfig& usage) {
  if (usage.edc()) return "edc";
  if (usage.opcua()) return "opcua";
  return "plain";
}

std::vector<ContractOffer> AccessPolicy::SortedOffers() const {
  std::vector<ContractOffer> sorted = contract_offers;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const ContractOffer& a, const ContractOffer& b) {
                     return a.key < b.key;
                   });
  return sorted;
}

const ContractOffer* AccessPolicy::FindOffer(std::string_view key) const {
  for (const auto& offer : contract_offers) {
    if (offer.key == key) return &offer;
  }
  return nullptr;
}

SourceSpan SourceMap::Lookup(const std::string& path,
                             const std::string& fallback) const {
  if (const SourceSpan* span = Find(path)) return *span;
  if (const SourceSpan* span = Find(fallback)) return *span;
  return SourceSpan{file, 1, 1, 0};
}

bool IsParticipantId(std::string_view id) {
  static const std::regex bpn{std::string(kBpnPattern)};
  static const std::regex did{std::string(kDidPattern)};
  const std::string text(id);
  return std::regex_match(text, bpn) || std::regex_match(text, did);
}

bool ModelEquals(const ConnectorModel& a, const ConnectorModel& b) {
  return a.name == b.name && a.identification == b.identification &&
         a.metadata == b.metadata && a.usage == b.usage &&
         a.access == b.access;
}

namespace {

class InvariantChecker {
 public:
  std::vector<std::string> Run(const ConnectorModel& m) {
    Require(IsIdentifier(m.name), "name",
            "must match [A-Za-z][A-Za-z0-9_-]*");
    Text("name", m.name);

    const auto& id = m.identification;
    Require(!id.linked_asset_id.empty(), "discovery.linkedAssetId",
            "must be non-empty");
    Text("discovery.linkedAssetId", id.linked_asset_id);
    Require(IsWebUrl(id.base_url), "discovery.baseUrl",
            "must be an absolute http(s) URL");
    Require(!HasScheme(id.endpoint), "discovery.endpoint",
            "must be a relative path");
    Text("discovery.endpoint", id.endpoint);

    const auto& md = m.metadata;
    Require(!md.title.empty(), "metadata.title", "must be non-empty");
    Require(!md.publisher.empty(), "metadata.publisher", "must be non-empty");
    Require(!md.version.empty(), "metadata.version", "must be non-empty");
    Text("metadata.title", md.title);
    Text("metadata.description", md.description);
    Text("metadata.publisher", md.publisher);
    Text("metadata.version", md.version);
    Require(md.created.valid() && md.modified.valid(), "metadata.created",
            "dates must be valid calendar dates");
    Require(md.modified >= md.created, "metadata.modified",
            "must not precede created");
    for (const auto& iri : md.semantic_ids) {
      Require(IsIri(iri), "metadata.semanticIds", "must hold IRIs");
    }
    if (md.language) Text("metadata.language", *md.language);

    const auto& usage = m.usage;
    Require(IsWebUrl(usage.data_address), "usage.dataAddress",
            "must be an absolute http(s) URL");
    if (usage.schema_address) {
      Require(IsWebUrl(*usage.schema_address), "usage.schemaAddress",
              "must be an absolute http(s) URL");
    }
    if (const EdcUsage* edc = usage.edc()) CheckEdc(*edc);
    if (const OpcUaUsage* opc = usage.opcua()) CheckOpcUa(*opc);

    CheckAccess(m.access);
    return std::move(violations_);
  }

 private:
  void Require(bool ok, std::string_view field, std::string_view what) {
    if (!ok) violations_.push_back(std::string(field) + ": " +
                                   std::string(what));
  }

  void Text(std::string_view field, std::string_view value) {
    Require(IsPrintableText(value), field,
            "must be UTF-8 without control characters");
  }

  void Url(std::string_view field, std::string_view value) {
    Require(IsWebUrl(value), field, "must be an absolute http(s) URL");
  }

  void Secret(std::string_view field, const SecretRef& secret) {
    if (const auto* env = std::get_if<EnvSecret>(&secret)) {
      Require(IsEnvVarName(env->name), field,
              "env reference must match [A-Z][A-Z0-9_]*");
    } else {
      Text(field, std::get<LiteralSecret>(secret).value);
    }
  }

  void CheckEdc(const EdcUsage& edc) {
    Url("usage.edcAddress", edc.edc_address);
    Secret("usage.xApiKey", edc.x_api_key);
    Url("usage.remoteAddress", edc.remote_address);
    Require(IsParticipantId(edc.remote_id), "usage.remoteId",
            "must be a BPN or DID");
    if (edc.sts_service_address) {
      Url("usage.stsServiceAddress", *edc.sts_service_address);
    }
    for (const auto& url : edc.trusted_did_registries) {
      Url("usage.trustedDidRegistries", url);
    }
    if (edc.push_endpoints) {
      Url("usage.push.callbackUrl", edc.push_endpoints->callback_url);
    }
  }

  void CheckOpcUa(const OpcUaUsage& opc) {
    Require(IsAbsoluteUrl(opc.endpoint_url, {"opc.tcp"}), "usage.endpointUrl",
            "must be an opc.tcp URL");
    Require(!opc.protocols.empty(), "usage.protocols", "must be non-empty");
    const std::set<Protocol> unique(opc.protocols.begin(),
                                    opc.protocols.end());
    Require(unique.size() == opc.protocols.size(), "usage.protocols",
            "must be duplicate-free");
    for (const auto& url : opc.companion_specs) {
      Url("usage.companionSpecs", url);
    }
    Text("usage.addressSpace", opc.address_space);
    if (opc.qos) {
      Require(opc.qos->sampling_rate_ms > 0 && opc.qos->max_subscriptions > 0,
              "usage.qos", "values must be positive");
    }
  }

  void CheckAccess(const AccessPolicy& access) {
    Require(!access.usage_policy.empty(), "access.usagePolicy",
            "must be non-empty");
    Text("access.usagePolicy", access.usage_policy);

    std::set<std::string> keys;
    for (const auto& offer : access.contract_offers) {
      Require(keys.insert(offer.key).second, "access.contract",
              "keys must be unique");
      Text("access.contract", offer.key);
      if (const auto* s = std::get_if<std::string>(&offer.value)) {
        Text("access.contract", *s);
      }
      if (const auto* d = std::get_if<CalendarDate>(&offer.value)) {
        Require(d->valid(), "access.contract", "dates must be valid");
      }
    }
    if (const ContractOffer* until = access.FindOffer("validUntil")) {
      const auto* s = std::get_if<std::string>(&until->value);
      Require(std::holds_alternative<CalendarDate>(until->value) ||
                  (s && CalendarDate::Parse(*s)),
              "access.contract", "validUntil must be an ISO 8601 date");
    }

    std::set<std::string> names;
    for (const auto& role : access.roles) {
      Require(IsBareIdentifier(role.role_name), "access.roles",
              "role names must be non-reserved identifiers");
      Require(names.insert(role.role_name).second, "access.roles",
              "role names must be unique");
      Require(!role.permissions.empty(), "access.roles",
              "permissions must be non-empty");
      const std::set<Permission> unique(role.permissions.begin(),
                                        role.permissions.end());
      Require(unique.size() == role.permissions.size(), "access.roles",
              "permissions must be duplicate-free");
    }

    if (const auto& idp = access.identity_provider) {
      Url("access.identityProvider.endpoint", idp->endpoint);
      Require(!idp->client_id.empty(), "access.identityProvider.clientId",
              "must be non-empty");
      Text("access.identityProvider.clientId", idp->client_id);
      Secret("access.identityProvider.secret", idp->secret);
    }
    if (const auto& oauth = access.oauth) {
      Require(!oauth->identifier.empty(), "access.oauth.identifier",
              "must be non-empty");
      Text("access.oauth.identifier", oauth->identifier);
      Text("access.oauth.grantType", oauth->grant_type);
      Text("access.oauth.scope", oauth->scope);
      Secret("access.oauth.secret", oauth->secret);
    }
  }

  std::vector<std::string> violations_;
};

bool IsPathChar(unsigned char c) {
  if (IsAsciiAlpha(c) || IsAsciiDigit(c)) return true;
  return std::string_view("-._~!$&'()*+,;=:@").find(c) !=
         std::string_view::npos;
}

std::string PercentEncodeSegment(std::string_view raw) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (char ch : raw) {
    const auto c = static_cast<unsigned char>(ch);
    if (IsPathChar(c)) {
      out += ch;
    } else {
      out += '%';
      out += kHex[c >> 4];
      out += kHex[c & 0xF];
    }
  }
  return out;
}

// Drops empty segments so that no "//" survives.
std::string NormalizePath(std::string_view path) {
  std::string out;
  size_t pos = 0;
  while (pos <= path.size()) {
    size_t next = path.find('/', pos);
    if (next == std::string_view::npos) next = path.size();
    if (next > pos) {
      if (!out.empty()) out += '/';
      out.append(path.substr(pos, next - pos));
    }
    pos = next + 1;
  }
  return out;
}

}  // namespace

std::vector<std::string> InvariantViolations(const ConnectorModel& model) {
  return InvariantChecker{}.Run(model);
}

std::string JoinIdLink(const IdentificationData& identification) {
  std::string_view base = identification.base_url;
  std::string url;
  if (const size_t sep = base.find("://"); sep != std::string_view::npos) {
    url = std::string(base.substr(0, sep + 3));
    base.remove_prefix(sep + 3);
  }
  url += NormalizePath(base);

  const std::string endpoint = NormalizePath(identification.endpoint);
  if (!endpoint.empty()) url += "/" + endpoint;
  if (identification.identifier_type == IdentifierType::kSidi) {
    url += "/" + PercentEncodeSegment(identification.linked_asset_id);
  }
  return url;
}

}  // namespace dsx
