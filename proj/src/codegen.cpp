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

#include "dsx/codegen.hpp"

#include <json.hpp>

#include "dsx/validator.hpp"

namespace dsx {

using Json = nlohmann::json;

namespace {

std::string JoinMessages(const std::vector<std::string>& messages) {
  std::string out;
  for (const auto& m : messages) {
    if (!out.empty()) out += "; ";
    out += m;
  }
  return out;
}

std::string Dump(const Json& doc) {
  return doc.dump(2, ' ', false, Json::error_handler_t::replace) + "\n";
}

Json ScalarJson(const Scalar& value) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, CalendarDate>) {
          return v.ToString();
        } else {
          return v;
        }
      },
      value);
}

Json StringArray(const std::vector<std::string>& items) {
  Json out = Json::array();
  for (const auto& s : items) out.push_back(s);
  return out;
}

Json PermissionArray(const std::vector<Permission>& perms) {
  Json out = Json::array();
  for (Permission p : perms) out.push_back(EnumName(p));
  return out;
}

Json OffersObject(const AccessPolicy& access) {
  Json out = Json::object();
  for (const auto& offer : access.SortedOffers()) {
    out[offer.key] = ScalarJson(offer.value);
  }
  return out;
}

std::string_view GrantTypeWireName(GrantType grant) {
  switch (grant) {
    case GrantType::kClientCredentials: return "client_credentials";
    case GrantType::kAuthorizationCode: return "authorization_code";
    case GrantType::kPassword: return "password";
  }
  return "";
}

// OPC UA UserTokenType names.
std::string_view UserTokenTypeName(AuthenticationMode mode) {
  switch (mode) {
    case AuthenticationMode::kAnonymous: return "Anonymous";
    case AuthenticationMode::kUsername: return "UserName";
    case AuthenticationMode::kToken: return "IssuedToken";
    case AuthenticationMode::kCertificate: return "Certificate";
  }
  return "";
}

// Shared preconditions: a clean validation report plus any target-specific
// requirement. Throws with every failure found.
void RequireGeneratable(const ConnectorModel& model, Target target,
                        std::vector<std::string> failures) {
  const ValidationReport report = Validate(model);
  for (const Diagnostic& d : report.diagnostics) {
    if (d.is_error()) {
      failures.push_back("model is invalid: " + FormatDiagnostic(d));
    }
  }
  if (failures.empty()) return;
  for (auto& f : failures) f = std::string(TargetName(target)) + ": " + f;
  throw GenerationError(std::move(failures));
}

std::string MismatchMessage(Target target, std::string_view wanted,
                            const ConnectorModel& model) {
  return "generator/usage mismatch: target " +
         std::string(TargetName(target)) + " requires 'usage " +
         std::string(wanted) + "', model declares 'usage " +
         std::string(UsageKind(model.usage)) + "'";
}

GeneratedArtifact Artifact(std::string path, const Json& doc, Target target) {
  return {std::move(path), Dump(doc), target};
}

}  // namespace

GenerationError::GenerationError(std::vector<std::string> messages)
    : std::runtime_error(JoinMessages(messages)),
      messages_(std::move(messages)) {}

std::string_view TargetName(Target target) {
  switch (target) {
    case Target::kEdc: return "edc";
    case Target::kOpcUa: return "opcua";
    case Target::kIdLinkAas: return "idlink-aas";
  }
  return "";
}

std::optional<Target> ParseTarget(std::string_view name) {
  for (Target t : {Target::kEdc, Target::kOpcUa, Target::kIdLinkAas}) {
    if (TargetName(t) == name) return t;
  }
  return std::nullopt;
}

std::string_view ProtocolWireName(Protocol protocol) {
  switch (protocol) {
    case Protocol::kOpcTcp: return "opc.tcp";
    case Protocol::kMqtt: return "mqtt";
    case Protocol::kHttps: return "https";
  }
  return "";
}

std::string SecurityPolicyUri(SecurityPolicy policy) {
  return "http://opcfoundation.org/UA/SecurityPolicy#" +
         std::string(EnumName(policy));
}

GenerationBundle GenerateEdc(const ConnectorModel& model) {
  std::vector<std::string> failures;
  const EdcUsage* edc = model.usage.edc();
  if (!edc) failures.push_back(MismatchMessage(Target::kEdc, "edc", model));
  RequireGeneratable(model, Target::kEdc, std::move(failures));

  const auto& id = model.identification;
  const auto& md = model.metadata;
  const std::string policy_id = model.name + "-policy";

  Json asset;
  asset["id"] = id.linked_asset_id;
  Json props;
  props["title"] = md.title;
  props["description"] = md.description;
  props["publisher"] = md.publisher;
  props["version"] = md.version;
  props["created"] = md.created.ToString();
  props["modified"] = md.modified.ToString();
  if (md.language) props["language"] = *md.language;
  props["semanticIds"] = StringArray(md.semantic_ids);
  props["discovery"] = {{"baseUrl", id.base_url},
                        {"endpoint", id.endpoint},
                        {"identifierType", EnumName(id.identifier_type)}};
  asset["properties"] = std::move(props);
  Json address = {{"type", "HttpData"}, {"baseUrl", model.usage.data_address}};
  if (model.usage.schema_address) {
    address["schemaAddress"] = *model.usage.schema_address;
  }
  asset["dataAddress"] = std::move(address);

  Json constraints = Json::array();
  for (const auto& offer : model.access.SortedOffers()) {
    constraints.push_back({{"leftOperand", offer.key},
                           {"operator", "eq"},
                           {"rightOperand", ScalarJson(offer.value)}});
  }
  Json roles = Json::array();
  if (!model.access.roles.empty()) {
    Json names = Json::array();
    for (const Role& role : model.access.roles) {
      names.push_back(role.role_name);
      roles.push_back({{"name", role.role_name},
                       {"permissions", PermissionArray(role.permissions)}});
    }
    constraints.push_back({{"leftOperand", "role"},
                           {"operator", "isAnyOf"},
                           {"rightOperand", std::move(names)}});
  }
  Json policy = {{"id", policy_id},
                 {"usagePolicy", model.access.usage_policy},
                 {"constraints", std::move(constraints)},
                 {"roles", std::move(roles)}};

  Json connector = {{"edcAddress", edc->edc_address},
                    {"xApiKey", RenderSecret(edc->x_api_key)},
                    {"mode", edc->direct_dsp() ? "direct-dsp" : "hosted-client"},
                    {"trustedDidRegistries",
                     StringArray(edc->trusted_did_registries)}};
  if (edc->sts_service_address) {
    connector["stsServiceAddress"] = *edc->sts_service_address;
  }
  if (edc->push_endpoints) {
    connector["pushEndpoint"] = {
        {"callbackUrl", edc->push_endpoints->callback_url},
        {"cloudPush", edc->push_endpoints->cloud_push}};
  }
  Json contract = {{"id", model.name + "-contract"},
                   {"assetId", id.linked_asset_id},
                   {"policyId", policy_id},
                   {"counterParty",
                    {{"remoteAddress", edc->remote_address},
                     {"remoteId", edc->remote_id}}},
                   {"connector", std::move(connector)}};

  GenerationBundle bundle;
  bundle.source_model = model.name;
  bundle.artifacts.push_back(Artifact("asset.json", asset, Target::kEdc));
  bundle.artifacts.push_back(Artifact("policy.json", policy, Target::kEdc));
  bundle.artifacts.push_back(Artifact("contract.json", contract, Target::kEdc));
  return bundle;
}

GenerationBundle GenerateOpcUa(const ConnectorModel& model) {
  std::vector<std::string> failures;
  const OpcUaUsage* opc = model.usage.opcua();
  if (!opc) {
    failures.push_back(MismatchMessage(Target::kOpcUa, "opcua", model));
  }
  RequireGeneratable(model, Target::kOpcUa, std::move(failures));

  const auto& id = model.identification;
  const auto& md = model.metadata;
  Json catalog = {{"linkedAssetId", id.linked_asset_id},
                  {"discovery",
                   {{"baseUrl", id.base_url},
                    {"endpoint", id.endpoint},
                    {"identifierType", EnumName(id.identifier_type)}}},
                  {"title", md.title},
                  {"description", md.description},
                  {"publisher", md.publisher},
                  {"version", md.version},
                  {"created", md.created.ToString()},
                  {"modified", md.modified.ToString()},
                  {"semanticIds", StringArray(md.semantic_ids)}};
  if (md.language) catalog["language"] = *md.language;

  Json protocols = Json::array();
  for (Protocol p : opc->protocols) protocols.push_back(ProtocolWireName(p));
  Json resource = {
      {"endpointUrl", opc->endpoint_url},
      {"securityPolicy", SecurityPolicyUri(opc->security_policy)},
      {"messageSecurityMode", EnumName(opc->message_security_mode)},
      {"authenticationMode", UserTokenTypeName(opc->authentication_mode)},
      {"protocols", std::move(protocols)},
      {"companionSpecs", StringArray(opc->companion_specs)},
      {"addressSpace", opc->address_space},
      {"dataAddress", model.usage.data_address}};
  if (model.usage.schema_address) {
    resource["schemaAddress"] = *model.usage.schema_address;
  }
  if (opc->qos) {
    resource["qos"] = {{"samplingRateMs", opc->qos->sampling_rate_ms},
                       {"maxSubscriptions", opc->qos->max_subscriptions}};
  }

  Json role_map = Json::object();
  for (const Role& role : model.access.roles) {
    role_map[role.role_name] = PermissionArray(role.permissions);
  }
  Json roles = {{"usagePolicy", model.access.usage_policy},
                {"contractOffers", OffersObject(model.access)},
                {"roles", std::move(role_map)}};

  GenerationBundle bundle;
  bundle.source_model = model.name;
  bundle.artifacts.push_back(Artifact("catalog.json", catalog, Target::kOpcUa));
  bundle.artifacts.push_back(
      Artifact("resource.json", resource, Target::kOpcUa));
  bundle.artifacts.push_back(Artifact("roles.json", roles, Target::kOpcUa));
  return bundle;
}

GenerationBundle GenerateIdLinkAas(const ConnectorModel& model) {
  std::vector<std::string> failures;
  const auto& idp = model.access.identity_provider;
  if (!idp) {
    failures.push_back(
        "aas security requires identity provider: add an "
        "'identityProvider' block to 'access'");
  }
  RequireGeneratable(model, Target::kIdLinkAas, std::move(failures));

  Json rules = Json::array();
  for (const Role& role : model.access.roles) {
    rules.push_back({{"role", role.role_name},
                     {"permissions", PermissionArray(role.permissions)}});
  }
  Json security = {
      {"asset",
       {{"linkedAssetId", model.identification.linked_asset_id},
        {"identifierType", EnumName(model.identification.identifier_type)}}},
      {"identityProvider",
       {{"endpoint", idp->endpoint},
        {"clientId", idp->client_id},
        {"grantType", GrantTypeWireName(idp->grant_type)},
        {"secret", RenderSecret(idp->secret)}}},
      {"usagePolicy",
       {{"id", model.access.usage_policy},
        {"contractOffers", OffersObject(model.access)}}},
      {"accessRules", std::move(rules)}};
  if (const auto& oauth = model.access.oauth) {
    security["oauth"] = {{"identifier", oauth->identifier},
                         {"secret", RenderSecret(oauth->secret)},
                         {"grantType", oauth->grant_type},
                         {"scope", oauth->scope}};
  }

  GenerationBundle bundle;
  bundle.source_model = model.name;
  bundle.artifacts.push_back({"idlink.txt",
                              JoinIdLink(model.identification) + "\n",
                              Target::kIdLinkAas});
  bundle.artifacts.push_back(
      Artifact("aas-security.json", security, Target::kIdLinkAas));
  return bundle;
}

GenerationBundle GenerateAll(const ConnectorModel& model,
                             const std::set<Target>& targets) {
  if (targets.empty()) throw GenerationError({"no targets requested"});
  GenerationBundle all;
  all.source_model = model.name;
  std::vector<std::string> failures;
  for (Target target : targets) {
    try {
      GenerationBundle part;
      switch (target) {
        case Target::kEdc: part = GenerateEdc(model); break;
        case Target::kOpcUa: part = GenerateOpcUa(model); break;
        case Target::kIdLinkAas: part = GenerateIdLinkAas(model); break;
      }
      for (auto& artifact : part.artifacts) {
        artifact.relative_path =
            std::string(TargetName(target)) + "/" + artifact.relative_path;
        all.artifacts.push_back(std::move(artifact));
      }
    } catch (const GenerationError& e) {
      failures.insert(failures.end(), e.messages().begin(),
                      e.messages().end());
    }
  }
  if (!failures.empty()) throw GenerationError(std::move(failures));
  return all;
}

}  // namespace dsx
