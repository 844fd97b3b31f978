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

#include <gtest/gtest.h>

#include <json.hpp>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "dsx/url.hpp"
#include "dsx/validator.hpp"
#include "support/fixtures.hpp"
#include "support/model_gen.hpp"
#include "support/schema_check.hpp"

namespace dsx {
namespace {

using Json = nlohmann::json;
using testing::LoadModel;

const GeneratedArtifact& Find(const GenerationBundle& bundle,
                              const std::string& path) {
  for (const auto& a : bundle.artifacts) {
    if (a.relative_path == path) return a;
  }
  throw std::runtime_error("no artifact " + path);
}

Json Doc(const GenerationBundle& bundle, const std::string& path) {
  return Json::parse(Find(bundle, path).content);
}

std::vector<std::string> Paths(const GenerationBundle& bundle) {
  std::vector<std::string> out;
  for (const auto& a : bundle.artifacts) out.push_back(a.relative_path);
  return out;
}

TEST(TargetTest, Names) {
  EXPECT_EQ(TargetName(Target::kIdLinkAas), "idlink-aas");
  EXPECT_EQ(ParseTarget("opcua"), Target::kOpcUa);
  EXPECT_FALSE(ParseTarget("OPCUA"));
  EXPECT_EQ(ProtocolWireName(Protocol::kOpcTcp), "opc.tcp");
  EXPECT_EQ(SecurityPolicyUri(SecurityPolicy::kBasic256Sha256),
            "http://opcfoundation.org/UA/SecurityPolicy#Basic256Sha256");
}

TEST(EdcGeneratorTest, CaseStudy) {
  const ConnectorModel m = LoadModel("production-machine.dsx");
  const GenerationBundle bundle = GenerateEdc(m);
  EXPECT_EQ(bundle.source_model, "production-machine");
  EXPECT_EQ(Paths(bundle), (std::vector<std::string>{
                               "asset.json", "policy.json", "contract.json"}));
  for (const auto& a : bundle.artifacts) EXPECT_EQ(a.target, Target::kEdc);

  const Json policy = Doc(bundle, "policy.json");
  EXPECT_EQ(policy["id"], "production-machine-policy");
  ASSERT_EQ(policy["constraints"].size(), 2u);
  EXPECT_EQ(policy["constraints"][0],
            (Json{{"leftOperand", "validUntil"},
                  {"operator", "eq"},
                  {"rightOperand", "2026-12-31"}}));
  EXPECT_EQ(policy["constraints"][1],
            (Json{{"leftOperand", "role"},
                  {"operator", "isAnyOf"},
                  {"rightOperand", {"operator", "partner"}}}));

  const Json asset = Doc(bundle, "asset.json");
  const Json contract = Doc(bundle, "contract.json");
  EXPECT_EQ(asset["id"], m.identification.linked_asset_id);
  EXPECT_EQ(contract["assetId"], asset["id"]);
  EXPECT_EQ(contract["policyId"], policy["id"]);
  EXPECT_EQ(contract["counterParty"]["remoteId"], "BPNL000000000001");
  EXPECT_EQ(contract["connector"]["mode"], "direct-dsp");
  EXPECT_EQ(contract["connector"]["xApiKey"], "${EDC_API_KEY}");
}

TEST(EdcGeneratorTest, EmptyPolicyStillEmitted) {
  ConnectorModel m = LoadModel("production-machine.dsx");
  m.access.contract_offers.clear();
  m.access.roles.clear();
  const Json policy = Doc(GenerateEdc(m), "policy.json");
  EXPECT_TRUE(policy["constraints"].is_array());
  EXPECT_TRUE(policy["constraints"].empty());
  EXPECT_TRUE(policy["roles"].empty());
}

TEST(EdcGeneratorTest, ConstraintsSortedByKeyWithTypedValues) {
  const Json policy =
      Doc(GenerateEdc(LoadModel("edc-direct.dsx")), "policy.json");
  const Json& c = policy["constraints"];
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c[0]["leftOperand"], "region");
  EXPECT_EQ(c[1]["leftOperand"], "resale");
  EXPECT_EQ(c[1]["rightOperand"], false);
  EXPECT_EQ(c[2]["leftOperand"], "validUntil");
  EXPECT_EQ(c[3]["rightOperand"], Json::array({"oem"}));
}

TEST(EdcGeneratorTest, HostedClientMode) {
  ConnectorModel m = LoadModel("production-machine.dsx");
  auto& edc = std::get<EdcUsage>(m.usage.extension);
  edc.sts_service_address.reset();
  edc.push_endpoints.reset();
  const Json contract = Doc(GenerateEdc(m), "contract.json");
  EXPECT_EQ(contract["connector"]["mode"], "hosted-client");
  EXPECT_FALSE(contract["connector"].contains("stsServiceAddress"));
  EXPECT_FALSE(contract["connector"].contains("pushEndpoint"));
}

TEST(OpcUaGeneratorTest, Fixture) {
  const GenerationBundle bundle = GenerateOpcUa(LoadModel("opcua-machine.dsx"));
  EXPECT_EQ(Paths(bundle), (std::vector<std::string>{
                               "catalog.json", "resource.json", "roles.json"}));
  const Json resource = Doc(bundle, "resource.json");
  EXPECT_EQ(resource["endpointUrl"], "opc.tcp://machine-001.factory:4840");
  EXPECT_EQ(resource["messageSecurityMode"], "SignAndEncrypt");
  EXPECT_EQ(resource["protocols"], Json::array({"opc.tcp", "mqtt"}));
  EXPECT_EQ(resource["securityPolicy"],
            "http://opcfoundation.org/UA/SecurityPolicy#Basic256Sha256");
  EXPECT_EQ(resource["authenticationMode"], "UserName");
  const Json roles = Doc(bundle, "roles.json");
  EXPECT_EQ(roles["roles"]["maintainer"], Json::array({"READ", "WRITE"}));
  EXPECT_EQ(roles["contractOffers"]["maxDataAge"], 60);
  EXPECT_EQ(roles["contractOffers"]["validUntil"], "2027-06-30");
  const Json catalog = Doc(bundle, "catalog.json");
  EXPECT_EQ(catalog["language"], "de");
}

TEST(IdLinkGeneratorTest, SidiFixture) {
  const GenerationBundle bundle =
      GenerateIdLinkAas(LoadModel("idlink-plain.dsx"));
  EXPECT_EQ(Paths(bundle),
            (std::vector<std::string>{"idlink.txt", "aas-security.json"}));
  EXPECT_EQ(Find(bundle, "idlink.txt").content,
            "https://id.example.com/assets/m1/SN-0042\n");
  const Json security = Doc(bundle, "aas-security.json");
  EXPECT_EQ(security["identityProvider"]["secret"], "${AAS_IDP_SECRET}");
  EXPECT_EQ(security["identityProvider"]["grantType"], "authorization_code");
  EXPECT_FALSE(security.contains("oauth"));
}

TEST(IdLinkGeneratorTest, WorksForEveryUsageVariant) {
  ConnectorModel opc = LoadModel("opcua-machine.dsx");
  opc.access.identity_provider = LoadModel("idlink-plain.dsx").access.identity_provider;
  EXPECT_EQ(GenerateIdLinkAas(opc).artifacts.size(), 2u);
  EXPECT_EQ(GenerateIdLinkAas(LoadModel("production-machine.dsx")).artifacts.size(),
            2u);
}

TEST(IdLinkGeneratorTest, MissingIdentityProvider) {
  try {
    GenerateIdLinkAas(LoadModel("edc-direct.dsx"));
    FAIL() << "expected GenerationError";
  } catch (const GenerationError& e) {
    ASSERT_EQ(e.messages().size(), 1u);
    EXPECT_NE(e.messages()[0].find("aas security requires identity provider"),
              std::string::npos);
    EXPECT_NE(e.messages()[0].find("identityProvider"), std::string::npos);
  }
}

TEST(GenerateAllTest, CaseStudyEdcAndIdLink) {
  const GenerationBundle bundle =
      GenerateAll(LoadModel("production-machine.dsx"),
                  {Target::kIdLinkAas, Target::kEdc});
  EXPECT_EQ(Paths(bundle),
            (std::vector<std::string>{"edc/asset.json", "edc/policy.json",
                                      "edc/contract.json",
                                      "idlink-aas/idlink.txt",
                                      "idlink-aas/aas-security.json"}));
}

TEST(GenerateAllTest, UsageMismatch) {
  try {
    GenerateAll(LoadModel("production-machine.dsx"), {Target::kOpcUa});
    FAIL() << "expected GenerationError";
  } catch (const GenerationError& e) {
    ASSERT_EQ(e.messages().size(), 1u);
    EXPECT_NE(e.messages()[0].find("generator/usage mismatch"),
              std::string::npos);
  }
}

TEST(GenerateAllTest, NoTargets) {
  try {
    GenerateAll(LoadModel("production-machine.dsx"), {});
    FAIL() << "expected GenerationError";
  } catch (const GenerationError& e) {
    EXPECT_EQ(e.messages(), std::vector<std::string>{"no targets requested"});
  }
}

TEST(GenerateAllTest, ReportsEveryFailingTarget) {
  try {
    GenerateAll(LoadModel("edc-direct.dsx"),
                {Target::kEdc, Target::kOpcUa, Target::kIdLinkAas});
    FAIL() << "expected GenerationError";
  } catch (const GenerationError& e) {
    ASSERT_EQ(e.messages().size(), 2u);
    EXPECT_EQ(e.messages()[0].rfind("opcua: ", 0), 0u);
    EXPECT_EQ(e.messages()[1].rfind("idlink-aas: ", 0), 0u);
  }
}

TEST(GenerateAllTest, RefusesInvalidModels) {
  ConnectorModel m = LoadModel("production-machine.dsx");
  std::get<EdcUsage>(m.usage.extension).remote_id = "BPNL123";
  try {
    GenerateEdc(m);
    FAIL() << "expected GenerationError";
  } catch (const GenerationError& e) {
    ASSERT_EQ(e.messages().size(), 1u);
    EXPECT_NE(e.messages()[0].find("E202"), std::string::npos);
  }
}

TEST(GenerateAllTest, WarningsDoNotBlockGeneration) {
  ConnectorModel m = LoadModel("production-machine.dsx");
  m.access.usage_policy = "not an iri";
  EXPECT_EQ(GenerateEdc(m).artifacts.size(), 3u);
}

TEST(CodegenFormatTest, JsonLayout) {
  const GenerationBundle bundle =
      GenerateAll(LoadModel("production-machine.dsx"),
                  {Target::kEdc, Target::kIdLinkAas});
  for (const auto& a : bundle.artifacts) {
    EXPECT_EQ(a.content.back(), '\n') << a.relative_path;
    EXPECT_EQ(a.content.find('\r'), std::string::npos) << a.relative_path;
    if (a.relative_path.ends_with(".json")) {
      // Re-serializing with sorted keys and 2-space indent is a fixed point.
      EXPECT_EQ(Json::parse(a.content).dump(2) + "\n", a.content)
          << a.relative_path;
      EXPECT_EQ(a.content.rfind("{\n  \"", 0), 0u) << a.relative_path;
    }
  }
}

// ---- properties -------------------------------------------------------------

std::set<Target> CompatibleTargets(const ConnectorModel& m) {
  std::set<Target> targets;
  if (m.usage.edc()) targets.insert(Target::kEdc);
  if (m.usage.opcua()) targets.insert(Target::kOpcUa);
  if (m.access.identity_provider) targets.insert(Target::kIdLinkAas);
  return targets;
}

TEST(CodegenPropertyTest, DeterministicAndSchemaConformant) {
  testing::ModelGenerator gen(5150, {.optional_rate = 0.6});
  int checked = 0;
  for (int i = 0; i < 120; ++i) {
    const ConnectorModel m = gen.Next();
    const auto targets = CompatibleTargets(m);
    if (targets.empty()) continue;
    const GenerationBundle a = GenerateAll(m, targets);
    const GenerationBundle b = GenerateAll(m, targets);
    ASSERT_EQ(a, b);
    std::set<std::string> paths;
    for (const auto& artifact : a.artifacts) {
      EXPECT_TRUE(paths.insert(artifact.relative_path).second);
      EXPECT_EQ(artifact.relative_path.find(".."), std::string::npos);
      const std::string name =
          artifact.relative_path.substr(artifact.relative_path.find('/') + 1);
      const std::string schema = testing::SchemaFor(name);
      if (schema.empty()) continue;
      const auto errors = testing::CheckSchema(testing::Schema(schema),
                                               Json::parse(artifact.content));
      EXPECT_TRUE(errors.empty())
          << artifact.relative_path << ": " << errors.front();
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

void CollectEnvNames(const SecretRef& s, std::vector<std::string>& out) {
  if (const auto* env = std::get_if<EnvSecret>(&s)) out.push_back(env->name);
}

// Point every referenced variable at a sentinel; no sentinel may reach the
// output and every reference must survive as a ${NAME} placeholder.
TEST(CodegenPropertyTest, EnvSecretsAreNeverResolved) {
  testing::ModelGenerator gen(77);
  int seen = 0;
  for (int i = 0; i < 150; ++i) {
    const ConnectorModel m = gen.Next();
    const auto targets = CompatibleTargets(m);
    if (targets.empty()) continue;
    std::vector<std::string> names;
    if (const EdcUsage* edc = m.usage.edc()) {
      CollectEnvNames(edc->x_api_key, names);
    }
    if (targets.count(Target::kIdLinkAas)) {
      CollectEnvNames(m.access.identity_provider->secret, names);
      if (m.access.oauth) CollectEnvNames(m.access.oauth->secret, names);
    }
    for (const auto& name : names) {
      setenv(name.c_str(), ("sentinel-value-" + name).c_str(), 1);
    }
    std::string all;
    for (const auto& a : GenerateAll(m, targets).artifacts) all += a.content;
    for (const auto& name : names) {
      EXPECT_EQ(all.find("sentinel-value-" + name), std::string::npos) << name;
      EXPECT_NE(all.find("\"${" + name + "}\""), std::string::npos) << name;
      unsetenv(name.c_str());
      ++seen;
    }
  }
  EXPECT_GT(seen, 20);
}

TEST(CodegenPropertyTest, CaseStudySecretsArePlaceholders) {
  setenv("IDP_SECRET", "hunter2-resolved", 1);
  setenv("EDC_API_KEY", "resolved-api-key", 1);
  const GenerationBundle bundle =
      GenerateAll(LoadModel("production-machine.dsx"),
                  {Target::kEdc, Target::kIdLinkAas});
  std::string all;
  for (const auto& a : bundle.artifacts) all += a.content;
  EXPECT_EQ(all.find("hunter2-resolved"), std::string::npos);
  EXPECT_EQ(all.find("resolved-api-key"), std::string::npos);
  EXPECT_NE(all.find("\"${IDP_SECRET}\""), std::string::npos);
  EXPECT_NE(all.find("\"${EDC_API_KEY}\""), std::string::npos);
  EXPECT_NE(all.find("\"${OAUTH_SECRET}\""), std::string::npos);
  unsetenv("IDP_SECRET");
  unsetenv("EDC_API_KEY");
}

// ---- field coverage ---------------------------------------------------------
//
// Walks the model and lists every scalar leaf of the sections a target
// consumes, with the JSON value the target should carry. Each leaf has one
// owning artifact and location; the harness checks the value is there.

struct Leaf {
  std::string path;
  Json expected;  // null means "key must exist" (map keys)
};

std::string PointerEscape(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

Json ScalarJson(const Scalar& s) {
  if (const auto* v = std::get_if<std::string>(&s)) return *v;
  if (const auto* v = std::get_if<std::int64_t>(&s)) return *v;
  if (const auto* v = std::get_if<bool>(&s)) return *v;
  return std::get<CalendarDate>(s).ToString();
}

// Hand-written wire tables, independent of the generator's own.
std::string Wire(Protocol p) {
  return std::map<Protocol, std::string>{{Protocol::kOpcTcp, "opc.tcp"},
                                         {Protocol::kMqtt, "mqtt"},
                                         {Protocol::kHttps, "https"}}
      .at(p);
}
std::string Wire(AuthenticationMode a) {
  return std::map<AuthenticationMode, std::string>{
      {AuthenticationMode::kAnonymous, "Anonymous"},
      {AuthenticationMode::kUsername, "UserName"},
      {AuthenticationMode::kToken, "IssuedToken"},
      {AuthenticationMode::kCertificate, "Certificate"}}
      .at(a);
}
std::string Wire(GrantType g) {
  return std::map<GrantType, std::string>{
      {GrantType::kClientCredentials, "client_credentials"},
      {GrantType::kAuthorizationCode, "authorization_code"},
      {GrantType::kPassword, "password"}}
      .at(g);
}

// (artifact, JSON pointer) owning each leaf for `target`.
std::pair<std::string, std::string> Owner(Target target,
                                          const std::string& path,
                                          const ConnectorModel& m) {
  auto index_of = [](const std::string& p, const std::string& prefix) {
    return p.substr(prefix.size(), p.find(']', prefix.size()) - prefix.size());
  };
  const std::string contract_prefix = "access.contract.";
  if (target == Target::kEdc) {
    static const std::map<std::string, std::pair<std::string, std::string>>
        kFixed = {
            {"discovery.linkedAssetId", {"asset.json", "/id"}},
            {"discovery.baseUrl", {"asset.json", "/properties/discovery/baseUrl"}},
            {"discovery.endpoint", {"asset.json", "/properties/discovery/endpoint"}},
            {"discovery.identifierType",
             {"asset.json", "/properties/discovery/identifierType"}},
            {"metadata.title", {"asset.json", "/properties/title"}},
            {"metadata.description", {"asset.json", "/properties/description"}},
            {"metadata.publisher", {"asset.json", "/properties/publisher"}},
            {"metadata.version", {"asset.json", "/properties/version"}},
            {"metadata.created", {"asset.json", "/properties/created"}},
            {"metadata.modified", {"asset.json", "/properties/modified"}},
            {"metadata.language", {"asset.json", "/properties/language"}},
            {"usage.dataAddress", {"asset.json", "/dataAddress/baseUrl"}},
            {"usage.schemaAddress", {"asset.json", "/dataAddress/schemaAddress"}},
            {"usage.edcAddress", {"contract.json", "/connector/edcAddress"}},
            {"usage.xApiKey", {"contract.json", "/connector/xApiKey"}},
            {"usage.remoteAddress", {"contract.json", "/counterParty/remoteAddress"}},
            {"usage.remoteId", {"contract.json", "/counterParty/remoteId"}},
            {"usage.stsServiceAddress",
             {"contract.json", "/connector/stsServiceAddress"}},
            {"usage.push.callbackUrl",
             {"contract.json", "/connector/pushEndpoint/callbackUrl"}},
            {"usage.push.cloudPush",
             {"contract.json", "/connector/pushEndpoint/cloudPush"}},
            {"access.usagePolicy", {"policy.json", "/usagePolicy"}},
        };
    if (auto it = kFixed.find(path); it != kFixed.end()) return it->second;
    if (path.rfind("metadata.semanticIds[", 0) == 0) {
      return {"asset.json", "/properties/semanticIds/" +
                                index_of(path, "metadata.semanticIds[")};
    }
    if (path.rfind("usage.trustedDidRegistries[", 0) == 0) {
      return {"contract.json", "/connector/trustedDidRegistries/" +
                                   index_of(path, "usage.trustedDidRegistries[")};
    }
    if (path.rfind(contract_prefix, 0) == 0) {
      const auto offers = m.access.SortedOffers();
      const std::string key = path.substr(contract_prefix.size());
      for (size_t i = 0; i < offers.size(); ++i) {
        if (offers[i].key == key) {
          return {"policy.json",
                  "/constraints/" + std::to_string(i) + "/rightOperand"};
        }
      }
    }
    if (path.rfind("access.roles[", 0) == 0) {
      const std::string i = index_of(path, "access.roles[");
      const auto dot = path.find("].") + 2;
      const std::string rest = path.substr(dot);
      if (rest == "name") return {"policy.json", "/roles/" + i + "/name"};
      return {"policy.json", "/roles/" + i + "/permissions/" +
                                 index_of(rest, "permissions[")};
    }
  }
  if (target == Target::kOpcUa) {
    static const std::map<std::string, std::pair<std::string, std::string>>
        kFixed = {
            {"discovery.linkedAssetId", {"catalog.json", "/linkedAssetId"}},
            {"discovery.baseUrl", {"catalog.json", "/discovery/baseUrl"}},
            {"discovery.endpoint", {"catalog.json", "/discovery/endpoint"}},
            {"discovery.identifierType",
             {"catalog.json", "/discovery/identifierType"}},
            {"metadata.title", {"catalog.json", "/title"}},
            {"metadata.description", {"catalog.json", "/description"}},
            {"metadata.publisher", {"catalog.json", "/publisher"}},
            {"metadata.version", {"catalog.json", "/version"}},
            {"metadata.created", {"catalog.json", "/created"}},
            {"metadata.modified", {"catalog.json", "/modified"}},
            {"metadata.language", {"catalog.json", "/language"}},
            {"usage.dataAddress", {"resource.json", "/dataAddress"}},
            {"usage.schemaAddress", {"resource.json", "/schemaAddress"}},
            {"usage.endpointUrl", {"resource.json", "/endpointUrl"}},
            {"usage.securityPolicy", {"resource.json", "/securityPolicy"}},
            {"usage.messageSecurityMode",
             {"resource.json", "/messageSecurityMode"}},
            {"usage.authenticationMode",
             {"resource.json", "/authenticationMode"}},
            {"usage.addressSpace", {"resource.json", "/addressSpace"}},
            {"usage.qos.samplingRateMs", {"resource.json", "/qos/samplingRateMs"}},
            {"usage.qos.maxSubscriptions",
             {"resource.json", "/qos/maxSubscriptions"}},
            {"access.usagePolicy", {"roles.json", "/usagePolicy"}},
        };
    if (auto it = kFixed.find(path); it != kFixed.end()) return it->second;
    if (path.rfind("metadata.semanticIds[", 0) == 0) {
      return {"catalog.json",
              "/semanticIds/" + index_of(path, "metadata.semanticIds[")};
    }
    if (path.rfind("usage.protocols[", 0) == 0) {
      return {"resource.json", "/protocols/" + index_of(path, "usage.protocols[")};
    }
    if (path.rfind("usage.companionSpecs[", 0) == 0) {
      return {"resource.json",
              "/companionSpecs/" + index_of(path, "usage.companionSpecs[")};
    }
    if (path.rfind(contract_prefix, 0) == 0) {
      return {"roles.json", "/contractOffers/" +
                                PointerEscape(path.substr(contract_prefix.size()))};
    }
    if (path.rfind("access.roles[", 0) == 0) {
      const size_t i = std::stoul(index_of(path, "access.roles["));
      const std::string name = PointerEscape(m.access.roles[i].role_name);
      const std::string rest = path.substr(path.find("].") + 2);
      if (rest == "name") return {"roles.json", "/roles/" + name};
      return {"roles.json",
              "/roles/" + name + "/" + index_of(rest, "permissions[")};
    }
  }
  if (target == Target::kIdLinkAas) {
    static const std::map<std::string, std::pair<std::string, std::string>>
        kFixed = {
            {"discovery.linkedAssetId", {"aas-security.json", "/asset/linkedAssetId"}},
            {"discovery.identifierType",
             {"aas-security.json", "/asset/identifierType"}},
            {"discovery.baseUrl", {"idlink.txt", ""}},
            {"discovery.endpoint", {"idlink.txt", ""}},
            {"access.usagePolicy", {"aas-security.json", "/usagePolicy/id"}},
            {"access.identityProvider.endpoint",
             {"aas-security.json", "/identityProvider/endpoint"}},
            {"access.identityProvider.clientId",
             {"aas-security.json", "/identityProvider/clientId"}},
            {"access.identityProvider.grantType",
             {"aas-security.json", "/identityProvider/grantType"}},
            {"access.identityProvider.secret",
             {"aas-security.json", "/identityProvider/secret"}},
            {"access.oauth.identifier", {"aas-security.json", "/oauth/identifier"}},
            {"access.oauth.secret", {"aas-security.json", "/oauth/secret"}},
            {"access.oauth.grantType", {"aas-security.json", "/oauth/grantType"}},
            {"access.oauth.scope", {"aas-security.json", "/oauth/scope"}},
        };
    if (auto it = kFixed.find(path); it != kFixed.end()) return it->second;
    if (path.rfind(contract_prefix, 0) == 0) {
      return {"aas-security.json",
              "/usagePolicy/contractOffers/" +
                  PointerEscape(path.substr(contract_prefix.size()))};
    }
    if (path.rfind("access.roles[", 0) == 0) {
      const std::string i = index_of(path, "access.roles[");
      const std::string rest = path.substr(path.find("].") + 2);
      if (rest == "name") return {"aas-security.json", "/accessRules/" + i + "/role"};
      return {"aas-security.json", "/accessRules/" + i + "/permissions/" +
                                       index_of(rest, "permissions[")};
    }
  }
  return {"", ""};
}

std::vector<Leaf> Leaves(const ConnectorModel& m, Target target) {
  std::vector<Leaf> out;
  auto add = [&](std::string path, Json value) {
    out.push_back({std::move(path), std::move(value)});
  };
  auto list = [&](const std::string& path, const std::vector<std::string>& v) {
    for (size_t i = 0; i < v.size(); ++i) {
      add(path + "[" + std::to_string(i) + "]", v[i]);
    }
  };
  const auto& id = m.identification;
  add("discovery.linkedAssetId", id.linked_asset_id);
  add("discovery.baseUrl", id.base_url);
  add("discovery.endpoint", id.endpoint);
  add("discovery.identifierType", std::string(EnumName(id.identifier_type)));

  const bool idlink = target == Target::kIdLinkAas;
  if (!idlink) {
    const auto& md = m.metadata;
    add("metadata.title", md.title);
    add("metadata.description", md.description);
    add("metadata.publisher", md.publisher);
    add("metadata.version", md.version);
    add("metadata.created", md.created.ToString());
    add("metadata.modified", md.modified.ToString());
    if (md.language) add("metadata.language", *md.language);
    list("metadata.semanticIds", md.semantic_ids);

    add("usage.dataAddress", m.usage.data_address);
    if (m.usage.schema_address) add("usage.schemaAddress", *m.usage.schema_address);
    if (const EdcUsage* edc = m.usage.edc()) {
      add("usage.edcAddress", edc->edc_address);
      add("usage.xApiKey", RenderSecret(edc->x_api_key));
      add("usage.remoteAddress", edc->remote_address);
      add("usage.remoteId", edc->remote_id);
      if (edc->sts_service_address) {
        add("usage.stsServiceAddress", *edc->sts_service_address);
      }
      list("usage.trustedDidRegistries", edc->trusted_did_registries);
      if (edc->push_endpoints) {
        add("usage.push.callbackUrl", edc->push_endpoints->callback_url);
        add("usage.push.cloudPush", edc->push_endpoints->cloud_push);
      }
    }
    if (const OpcUaUsage* opc = m.usage.opcua()) {
      add("usage.endpointUrl", opc->endpoint_url);
      add("usage.securityPolicy",
          "http://opcfoundation.org/UA/SecurityPolicy#" +
              std::string(EnumName(opc->security_policy)));
      add("usage.messageSecurityMode",
          std::string(EnumName(opc->message_security_mode)));
      add("usage.authenticationMode", Wire(opc->authentication_mode));
      for (size_t i = 0; i < opc->protocols.size(); ++i) {
        add("usage.protocols[" + std::to_string(i) + "]",
            Wire(opc->protocols[i]));
      }
      list("usage.companionSpecs", opc->companion_specs);
      add("usage.addressSpace", opc->address_space);
      if (opc->qos) {
        add("usage.qos.samplingRateMs", opc->qos->sampling_rate_ms);
        add("usage.qos.maxSubscriptions", opc->qos->max_subscriptions);
      }
    }
  }

  const auto& access = m.access;
  add("access.usagePolicy", access.usage_policy);
  for (const auto& offer : access.contract_offers) {
    add("access.contract." + offer.key, ScalarJson(offer.value));
  }
  for (size_t i = 0; i < access.roles.size(); ++i) {
    const std::string base = "access.roles[" + std::to_string(i) + "]";
    const bool map_key = target == Target::kOpcUa;
    add(base + ".name", map_key ? Json() : Json(access.roles[i].role_name));
    for (size_t j = 0; j < access.roles[i].permissions.size(); ++j) {
      add(base + ".permissions[" + std::to_string(j) + "]",
          std::string(EnumName(access.roles[i].permissions[j])));
    }
  }
  if (idlink) {
    if (const auto& idp = access.identity_provider) {
      add("access.identityProvider.endpoint", idp->endpoint);
      add("access.identityProvider.clientId", idp->client_id);
      add("access.identityProvider.grantType", Wire(idp->grant_type));
      add("access.identityProvider.secret", RenderSecret(idp->secret));
    }
    if (const auto& oauth = access.oauth) {
      add("access.oauth.identifier", oauth->identifier);
      add("access.oauth.secret", RenderSecret(oauth->secret));
      add("access.oauth.grantType", oauth->grant_type);
      add("access.oauth.scope", oauth->scope);
    }
  }
  return out;
}

void CheckCoverage(const ConnectorModel& m, Target target) {
  const GenerationBundle bundle = GenerateAll(m, {target});
  const std::string dir = std::string(TargetName(target)) + "/";
  for (const Leaf& leaf : Leaves(m, target)) {
    const auto [artifact, pointer] = Owner(target, leaf.path, m);
    ASSERT_FALSE(artifact.empty())
        << "no owner for " << leaf.path << " in " << TargetName(target);
    const std::string content = Find(bundle, dir + artifact).content;
    if (artifact == "idlink.txt") {
      // Both pieces survive slash normalization: the base keeps its
      // scheme and authority, the endpoint keeps its segments in order.
      const std::string value = leaf.expected.get<std::string>();
      if (leaf.path == "discovery.baseUrl") {
        const auto parts = ParseAbsoluteUrl(value);
        ASSERT_TRUE(parts) << value;
        const auto authority = value.find('/', value.find("://") + 3);
        EXPECT_EQ(content.rfind(value.substr(0, authority), 0), 0u)
            << value << " vs " << content;
      } else {
        size_t at = content.find("://") + 3;
        std::string segment;
        std::istringstream in(value);
        while (std::getline(in, segment, '/')) {
          if (segment.empty()) continue;
          at = content.find("/" + segment, at);
          ASSERT_NE(at, std::string::npos) << value << " vs " << content;
          at += segment.size() + 1;
        }
      }
      continue;
    }
    const Json doc = Json::parse(content);
    const Json::json_pointer ptr(pointer);
    ASSERT_TRUE(doc.contains(ptr))
        << leaf.path << " -> " << artifact << pointer;
    if (!leaf.expected.is_null()) {
      EXPECT_EQ(doc.at(ptr), leaf.expected)
          << leaf.path << " -> " << artifact << pointer;
    }
  }
}

TEST(CodegenPropertyTest, FieldCoverageOnFixtures) {
  CheckCoverage(LoadModel("production-machine.dsx"), Target::kEdc);
  CheckCoverage(LoadModel("production-machine.dsx"), Target::kIdLinkAas);
  CheckCoverage(LoadModel("edc-direct.dsx"), Target::kEdc);
  CheckCoverage(LoadModel("opcua-machine.dsx"), Target::kOpcUa);
  CheckCoverage(LoadModel("idlink-plain.dsx"), Target::kIdLinkAas);
}

TEST(CodegenPropertyTest, FieldCoverageOnGeneratedModels) {
  testing::ModelGenerator gen(31337, {.optional_rate = 0.7});
  for (int i = 0; i < 100; ++i) {
    const ConnectorModel m = gen.Next();
    for (Target t : CompatibleTargets(m)) CheckCoverage(m, t);
  }
}

// Every JSON leaf of each artifact is accounted for by some model field or
// is one of the fixed/derived keys listed here, so nothing is invented.
TEST(CodegenPropertyTest, NoUnexplainedOutput) {
  const std::set<std::string> derived = {
      "edc/asset.json/dataAddress/type",  "edc/policy.json/id",
      "edc/contract.json/id",             "edc/contract.json/assetId",
      "edc/contract.json/policyId",       "edc/contract.json/connector/mode",
  };
  const ConnectorModel m = LoadModel("production-machine.dsx");
  for (Target target : {Target::kEdc, Target::kIdLinkAas}) {
    const GenerationBundle bundle = GenerateAll(m, {target});
    std::set<std::string> owned;
    for (const Leaf& leaf : Leaves(m, target)) {
      const auto [artifact, pointer] = Owner(target, leaf.path, m);
      owned.insert(std::string(TargetName(target)) + "/" + artifact + pointer);
    }
    for (const auto& artifact : bundle.artifacts) {
      if (!artifact.relative_path.ends_with(".json")) continue;
      const Json flat = Json::parse(artifact.content).flatten();
      for (const auto& [pointer, value] : flat.items()) {
        if (value.is_null()) continue;  // empty arrays and objects
        const std::string where = artifact.relative_path + pointer;
        if (owned.count(where) || derived.count(where)) continue;
        // Policy constraints restate offers and role names.
        if (where.rfind("edc/policy.json/constraints/", 0) == 0) continue;
        ADD_FAILURE() << "unexplained output " << where << " = " << value;
      }
    }
  }
}

}  // namespace
}  // namespace dsx
