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

#include "dsx/printer.hpp"

#include <sstream>

namespace dsx {

std::string QuoteString(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

namespace {

class Printer {
 public:
  std::string Print(const ConnectorModel& m) {
    Open("connector " + QuoteString(m.name));
    Discovery(m.identification);
    Metadata(m.metadata);
    Usage(m.usage);
    Access(m.access);
    Close();
    return out_.str();
  }

 private:
  void Line(std::string_view text) {
    out_ << std::string(depth_ * 2, ' ') << text << '\n';
  }
  void Open(std::string_view header) {
    Line(std::string(header) + " {");
    ++depth_;
  }
  void Close() {
    --depth_;
    Line("}");
  }

  void Field(std::string_view name, std::string_view rendered) {
    Line(std::string(name) + ": " + std::string(rendered));
  }
  void Str(std::string_view name, std::string_view value) {
    Field(name, QuoteString(value));
  }
  void OptStr(std::string_view name, const std::optional<std::string>& v) {
    if (v) Str(name, *v);
  }
  void StrList(std::string_view name, const std::vector<std::string>& items) {
    if (items.empty()) return;
    std::string rendered = "[";
    for (size_t i = 0; i < items.size(); ++i) {
      if (i) rendered += ", ";
      rendered += QuoteString(items[i]);
    }
    Field(name, rendered + "]");
  }
  template <typename E>
  void EnumList(std::string_view name, const std::vector<E>& items) {
    std::string rendered = "[";
    for (size_t i = 0; i < items.size(); ++i) {
      if (i) rendered += ", ";
      rendered += EnumName(items[i]);
    }
    Field(name, rendered + "]");
  }
  template <typename E>
  void Enum(std::string_view name, E value) {
    Field(name, EnumName(value));
  }
  void Secret(std::string_view name, const SecretRef& secret) {
    if (const auto* env = std::get_if<EnvSecret>(&secret)) {
      Field(name, "env(" + env->name + ")");
    } else {
      Str(name, std::get<LiteralSecret>(secret).value);
    }
  }

  static std::string RenderScalar(const Scalar& value) {
    return std::visit(
        [](const auto& v) -> std::string {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, std::string>) {
            return QuoteString(v);
          } else if constexpr (std::is_same_v<T, bool>) {
            return v ? "true" : "false";
          } else if constexpr (std::is_same_v<T, CalendarDate>) {
            return v.ToString();
          } else {
            return std::to_string(v);
          }
        },
        value);
  }

  void Discovery(const IdentificationData& id) {
    Open("discovery");
    Str("linkedAssetId", id.linked_asset_id);
    Str("baseUrl", id.base_url);
    Str("endpoint", id.endpoint);
    Enum("identifierType", id.identifier_type);
    Close();
  }

  void Metadata(const AssetMetaData& md) {
    Open("metadata");
    Str("title", md.title);
    Str("description", md.description);
    Str("publisher", md.publisher);
    StrList("semanticIds", md.semantic_ids);
    Str("version", md.version);
    Field("created", md.created.ToString());
    Field("modified", md.modified.ToString());
    OptStr("language", md.language);
    Close();
  }

  void Usage(const UsageConfig& usage) {
    Open("usage " + std::string(UsageKind(usage)));
    Str("dataAddress", usage.data_address);
    OptStr("schemaAddress", usage.schema_address);
    if (const EdcUsage* edc = usage.edc()) {
      Str("edcAddress", edc->edc_address);
      Secret("xApiKey", edc->x_api_key);
      Str("remoteAddress", edc->remote_address);
      Str("remoteId", edc->remote_id);
      OptStr("stsServiceAddress", edc->sts_service_address);
      StrList("trustedDidRegistries", edc->trusted_did_registries);
      if (edc->push_endpoints) {
        Open("push");
        Str("callbackUrl", edc->push_endpoints->callback_url);
        Field("cloudPush", edc->push_endpoints->cloud_push ? "true" : "false");
        Close();
      }
    } else if (const OpcUaUsage* opc = usage.opcua()) {
      Str("endpointUrl", opc->endpoint_url);
      Enum("securityPolicy", opc->security_policy);
      Enum("messageSecurityMode", opc->message_security_mode);
      Enum("authenticationMode", opc->authentication_mode);
      EnumList("protocols", opc->protocols);
      StrList("companionSpecs", opc->companion_specs);
      Str("addressSpace", opc->address_space);
      if (opc->qos) {
        Open("qos");
        Field("samplingRateMs", std::to_string(opc->qos->sampling_rate_ms));
        Field("maxSubscriptions", std::to_string(opc->qos->max_subscriptions));
        Close();
      }
    }
    Close();
  }

  void Access(const AccessPolicy& access) {
    Open("access");
    Str("usagePolicy", access.usage_policy);
    if (!access.contract_offers.empty()) {
      Open("contract");
      for (const auto& offer : access.SortedOffers()) {
        Line(QuoteString(offer.key) + ": " + RenderScalar(offer.value));
      }
      Close();
    }
    if (!access.roles.empty()) {
      Open("roles");
      for (const auto& role : access.roles) {
        Open("role " + role.role_name);
        EnumList("permissions", role.permissions);
        Close();
      }
      Close();
    }
    if (const auto& idp = access.identity_provider) {
      Open("identityProvider");
      Str("endpoint", idp->endpoint);
      Str("clientId", idp->client_id);
      Enum("grantType", idp->grant_type);
      Secret("secret", idp->secret);
      Close();
    }
    if (const auto& oauth = access.oauth) {
      Open("oauth");
      Str("identifier", oauth->identifier);
      Secret("secret", oauth->secret);
      Str("grantType", oauth->grant_type);
      Str("scope", oauth->scope);
      Close();
    }
    Close();
  }

  std::ostringstream out_;
  int depth_ = 0;
};

}  // namespace

std::string PrintCanonical(const ConnectorModel& model) {
  return Printer{}.Print(model);
}

}  // namespace dsx
