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

// The connector metamodel: discovery (identification + asset metadata),
// usage (common connection points plus one technology extension) and access
// (usage policy, contract offers, roles, identity provider, OAuth).
//
// All types are plain values. A ConnectorModel built by the parser also
// carries a SourceMap so later stages can point diagnostics at the text the
// value came from; the map never takes part in equality.

#ifndef DSX_MODEL_HPP_
#define DSX_MODEL_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dsx/date.hpp"
#include "dsx/diagnostic.hpp"

namespace dsx {

// ---------------------------------------------------------------------------
// Enumerations. Each has a name table giving the DSL spelling.

enum class IdentifierType { kSidi, kUrn, kDid, kCustom };
enum class SecurityPolicy {
  kNone,
  kBasic256Sha256,
  kAes128Sha256RsaOaep,
  kAes256Sha256RsaPss,
};
enum class MessageSecurityMode { kNone, kSign, kSignAndEncrypt };
enum class AuthenticationMode { kAnonymous, kUsername, kToken, kCertificate };
enum class Protocol { kOpcTcp, kMqtt, kHttps };
enum class Permission { kRead, kWrite, kSubscribe, kExecute, kDelete };
enum class GrantType { kClientCredentials, kAuthorizationCode, kPassword };

template <typename E>
struct EnumNames;

#define DSX_ENUM_NAMES(Enum, N, ...)                                      \
  template <>                                                             \
  struct EnumNames<Enum> {                                                \
    static constexpr std::array<std::pair<Enum, std::string_view>, N>     \
        kTable = {{__VA_ARGS__}};                                         \
  }

DSX_ENUM_NAMES(IdentifierType, 4, {IdentifierType::kSidi, "SIDI"},
               {IdentifierType::kUrn, "URN"}, {IdentifierType::kDid, "DID"},
               {IdentifierType::kCustom, "CUSTOM"});
DSX_ENUM_NAMES(SecurityPolicy, 4, {SecurityPolicy::kNone, "None"},
               {SecurityPolicy::kBasic256Sha256, "Basic256Sha256"},
               {SecurityPolicy::kAes128Sha256RsaOaep, "Aes128Sha256RsaOaep"},
               {SecurityPolicy::kAes256Sha256RsaPss, "Aes256Sha256RsaPss"});
DSX_ENUM_NAMES(MessageSecurityMode, 3, {MessageSecurityMode::kNone, "None"},
               {MessageSecurityMode::kSign, "Sign"},
               {MessageSecurityMode::kSignAndEncrypt, "SignAndEncrypt"});
DSX_ENUM_NAMES(AuthenticationMode, 4,
               {AuthenticationMode::kAnonymous, "Anonymous"},
               {AuthenticationMode::kUsername, "Username"},
               {AuthenticationMode::kToken, "Token"},
               {AuthenticationMode::kCertificate, "Certificate"});
DSX_ENUM_NAMES(Protocol, 3, {Protocol::kOpcTcp, "OPC_TCP"},
               {Protocol::kMqtt, "MQTT"}, {Protocol::kHttps, "HTTPS"});
DSX_ENUM_NAMES(Permission, 5, {Permission::kRead, "READ"},
               {Permission::kWrite, "WRITE"},
               {Permission::kSubscribe, "SUBSCRIBE"},
               {Permission::kExecute, "EXECUTE"},
               {Permission::kDelete, "DELETE"});
DSX_ENUM_NAMES(GrantType, 3,
               {GrantType::kClientCredentials, "CLIENT_CREDENTIALS"},
               {GrantType::kAuthorizationCode, "AUTHORIZATION_CODE"},
               {GrantType::kPassword, "PASSWORD"});

#undef DSX_ENUM_NAMES

template <typename E>
constexpr std::string_view EnumName(E value) {
  for (const auto& [v, name] : EnumNames<E>::kTable) {
    if (v == value) return name;
  }
  return {};
}

template <typename E>
constexpr std::optional<E> ParseEnum(std::string_view name) {
  for (const auto& [v, n] : EnumNames<E>::kTable) {
    if (n == name) return v;
  }
  return std::nullopt;
}

/// Comma-separated list of the DSL spellings, for error messages.
template <typename E>
std::string EnumChoices() {
  std::string out;
  for (const auto& [v, n] : EnumNames<E>::kTable) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Secrets and scalars.

struct LiteralSecret {
  std::string value;
  friend bool operator==(const LiteralSecret&, const LiteralSecret&) = default;
};

/// Reference to an environment variable, written `env(NAME)`. Never resolved
/// by this toolchain.
struct EnvSecret {
  std::string name;
  friend bool operator==(const EnvSecret&, const EnvSecret&) = default;
};

using SecretRef = std::variant<LiteralSecret, EnvSecret>;

/// Literal secrets render as themselves, env references as `${NAME}`.
inline std::string RenderSecret(const SecretRef& secret) {
  if (const auto* env = std::get_if<EnvSecret>(&secret)) {
    return "${" + env->name + "}";
  }
  return std::get<LiteralSecret>(secret).value;
}

using Scalar = std::variant<std::string, std::int64_t, bool, CalendarDate>;

struct ContractOffer {
  std::string key;
  Scalar value;
  friend bool operator==(const ContractOffer&, const ContractOffer&) = default;
};

// ---------------------------------------------------------------------------
// Discovery.

struct IdentificationData {
  std::string linked_asset_id;
  std::string base_url;
  std::string endpoint;
  IdentifierType identifier_type = IdentifierType::kUrn;

  friend bool operator==(const IdentificationData&,
                         const IdentificationData&) = default;
};

struct AssetMetaData {
  std::string title;
  std::string description;
  std::string publisher;
  std::vector<std::string> semantic_ids;
  std::string version;
  CalendarDate created;
  CalendarDate modified;
  std::optional<std::string> language;

  friend bool operator==(const AssetMetaData&, const AssetMetaData&) = default;
};

// ---------------------------------------------------------------------------
// Usage.

struct PushEndpointsConfig {
  std::string callback_url;
  bool cloud_push = false;

  friend bool operator==(const PushEndpointsConfig&,
                         const PushEndpointsConfig&) = default;
};

/// EDC connection details. A present `sts_service_address` selects
/// direct-DSP mode; otherwise the connector runs as a hosted client.
struct EdcUsage {
  std::string edc_address;
  SecretRef x_api_key;
  std::string remote_address;
  std::string remote_id;
  std::optional<std::string> sts_service_address;
  std::vector<std::string> trusted_did_registries;
  std::optional<PushEndpointsConfig> push_endpoints;

  bool direct_dsp() const { return sts_service_address.has_value(); }

  friend bool operator==(const EdcUsage&, const EdcUsage&) = default;
};

struct QosMetrics {
  std::int64_t sampling_rate_ms = 1;
  std::int64_t max_subscriptions = 1;

  friend bool operator==(const QosMetrics&, const QosMetrics&) = default;
};

struct OpcUaUsage {
  std::string endpoint_url;
  SecurityPolicy security_policy = SecurityPolicy::kNone;
  MessageSecurityMode message_security_mode = MessageSecurityMode::kNone;
  AuthenticationMode authentication_mode = AuthenticationMode::kAnonymous;
  std::vector<Protocol> protocols;
  std::vector<std::string> companion_specs;
  std::string address_space;
  std::optional<QosMetrics> qos;

  friend bool operator==(const OpcUaUsage&, const OpcUaUsage&) = default;
};

/// ID-Link needs nothing beyond the common usage fields.
struct PlainUsage {
  friend bool operator==(const PlainUsage&, const PlainUsage&) = default;
};

struct UsageConfig {
  std::string data_address;
  std::optional<std::string> schema_address;
  std::variant<EdcUsage, OpcUaUsage, PlainUsage> extension;

  const EdcUsage* edc() const { return std::get_if<EdcUsage>(&extension); }
  const OpcUaUsage* opcua() const {
    return std::get_if<OpcUaUsage>(&extension);
  }
  bool plain() const { return std::holds_alternative<PlainUsage>(extension); }

  friend bool operator==(const UsageConfig&, const UsageConfig&) = default;
};

/// DSL keyword selecting the usage variant: "edc", "opcua" or "plain".
std::string_view UsageKind(const UsageConfig& usage);

// ---------------------------------------------------------------------------
// Access.

struct Role {
  std::string role_name;
  std::vector<Permission> permissions;

  friend bool operator==(const Role&, const Role&) = default;
};

struct IdentityProviderConfig {
  std::string endpoint;
  std::string client_id;
  GrantType grant_type = GrantType::kClientCredentials;
  SecretRef secret;

  friend bool operator==(const IdentityProviderConfig&,
                         const IdentityProviderConfig&) = default;
};

struct OAuthInfo {
  std::string identifier;
  SecretRef secret;
  std::string grant_type;
  std::string scope;

  friend bool operator==(const OAuthInfo&, const OAuthInfo&) = default;
};

struct AccessPolicy {
  std::string usage_policy;
  std::vector<ContractOffer> contract_offers;  // insertion order
  std::vector<Role> roles;
  std::optional<IdentityProviderConfig> identity_provider;
  std::optional<OAuthInfo> oauth;

  /// Offers sorted by key; the order used for printing and generation.
  std::vector<ContractOffer> SortedOffers() const;
  const ContractOffer* FindOffer(std::string_view key) const;
};

// ---------------------------------------------------------------------------
// Root.

/// Maps a field path such as "usage.remoteId" or "access.roles[1]" to the
/// span of the value (or block keyword) it was parsed from.
class SourceMap {
 public:
  void Set(std::string path, SourceSpan span) {
    spans_.insert_or_assign(std::move(path), std::move(span));
  }
  const SourceSpan* Find(const std::string& path) const {
    auto it = spans_.find(path);
    return it == spans_.end() ? nullptr : &it->second;
  }
  /// Span for `path`, falling back to `fallback`'s span, then to line 1.
  SourceSpan Lookup(const std::string& path,
                    const std::string& fallback = "connector") const;
  bool empty() const { return spans_.empty(); }
  std::string file;

 private:
  std::map<std::string, SourceSpan> spans_;
};

struct ConnectorModel {
  std::string name;
  IdentificationData identification;
  AssetMetaData metadata;
  UsageConfig usage;
  AccessPolicy access;
  SourceMap locations;
};

/// Participant identifiers accepted for EdcUsage::remote_id: a Catena-X
/// style business partner number or a decentralized identifier.
inline constexpr std::string_view kBpnPattern = "BPNL[A-Z0-9]{12}";
inline constexpr std::string_view kDidPattern = "did:[a-z0-9]+:.+";
bool IsParticipantId(std::string_view id);

/// Structural equality: every field equal, contract offers compared as a
/// map, source locations ignored.
bool ModelEquals(const ConnectorModel& a, const ConnectorModel& b);

inline bool operator==(const AccessPolicy& a, const AccessPolicy& b) {
  return a.usage_policy == b.usage_policy &&
         a.SortedOffers() == b.SortedOffers() && a.roles == b.roles &&
         a.identity_provider == b.identity_provider && a.oauth == b.oauth;
}

inline bool operator==(const ConnectorModel& a, const ConnectorModel& b) {
  return ModelEquals(a, b);
}

/// Human-readable list of every type invariant the model breaks; empty for
/// a well-formed model.
std::vector<std::string> InvariantViolations(const ConnectorModel& model);

/// Resolvable ID-Link URL: base URL, endpoint and (for SIDI identifiers) the
/// percent-encoded local identifier, joined by exactly one '/'.
std::string JoinIdLink(const IdentificationData& identification);

}  // namespace dsx

#endif  // DSX_MODEL_HPP_
