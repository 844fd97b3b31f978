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

#include "dsx/parser.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <set>
#include <utility>

#include "dsx/lexer.hpp"
#include "dsx/syntax.hpp"

namespace dsx {
namespace {

constexpr size_t kMaxDiagnostics = 100;

// A field value before it is checked against the field's expected type.
struct Value {
  enum class Kind { kScalar, kList, kEnv };
  Kind kind = Kind::kScalar;
  Token token;               // kScalar, kEnv
  std::vector<Token> items;  // kList
  SourceSpan span;
};

using FieldHandler = std::function<void(const std::string& path, const Value&)>;
using BlockHandler = std::function<void(const Token& keyword)>;

struct BlockSpec {
  struct Field {
    FieldHandler apply;
    bool required = true;
  };
  struct Block {
    BlockHandler parse;
    bool repeatable = false;
  };
  std::map<std::string, Field, std::less<>> fields;
  std::map<std::string, Block, std::less<>> blocks;
};

SourceSpan Cover(const SourceSpan& first, const SourceSpan& last) {
  SourceSpan span = first;
  if (last.line == first.line) {
    span.length = last.column + last.length - first.column;
  }
  return span;
}

bool IsScalarToken(TokenKind kind) {
  return kind == TokenKind::kString || kind == TokenKind::kInteger ||
         kind == TokenKind::kDate || kind == TokenKind::kBoolean ||
         kind == TokenKind::kIdent;
}

std::string Describe(const Token& t) {
  if (t.kind == TokenKind::kEof) return "end of file";
  if (t.kind == TokenKind::kString) return "string \"" + t.lexeme + "\"";
  return std::string(TokenKindName(t.kind)) + " '" + t.lexeme + "'";
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string_view file)
      : tokens_(std::move(tokens)) {
    model_.locations.file = std::string(file);
  }

  ParseResult Run() {
    ParseDocument();
    ParseResult result;
    // Missing-field errors are raised after their block closes; restore
    // source order but keep the overflow marker last.
    std::vector<Diagnostic> overflow;
    if (!diags_.empty() && diags_.back().code == "E099") {
      overflow.push_back(diags_.back());
      diags_.pop_back();
    }
    SortBySpan(diags_);
    diags_.insert(diags_.end(), overflow.begin(), overflow.end());
    result.diagnostics = std::move(diags_);
    if (!HasErrors(result.diagnostics)) result.model = std::move(model_);
    return result;
  }

 private:
  // ---- token access -------------------------------------------------------

  const Token& Cur() const { return tokens_[pos_]; }
  const Token& Next() const {
    return tokens_[std::min(pos_ + 1, tokens_.size() - 1)];
  }
  bool At(TokenKind kind) const { return Cur().kind == kind; }
  bool AtKeyword(std::string_view word) const {
    return At(TokenKind::kKeyword) && Cur().lexeme == word;
  }
  bool AtFieldStart() const {
    return (At(TokenKind::kIdent) || At(TokenKind::kKeyword)) &&
           Next().kind == TokenKind::kColon;
  }
  Token Take() {
    Token t = Cur();
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }

  // ---- diagnostics --------------------------------------------------------

  void Error(std::string code, std::string message, const SourceSpan& span) {
    if (aborted_) return;
    if (diags_.size() >= kMaxDiagnostics) {
      diags_.push_back(MakeError("E099", "too many errors", span));
      aborted_ = true;
      return;
    }
    diags_.push_back(MakeError(std::move(code), std::move(message), span));
  }

  // ---- recovery -----------------------------------------------------------

  // Skips to the next point where a block item can start: a field, a
  // keyword, or the '}' closing the current block.
  void Recover() {
    int depth = 0;
    while (!At(TokenKind::kEof)) {
      if (depth == 0 && (At(TokenKind::kRBrace) || At(TokenKind::kKeyword) ||
                         AtFieldStart())) {
        return;
      }
      if (At(TokenKind::kLBrace) || At(TokenKind::kLBracket)) {
        ++depth;
      } else if ((At(TokenKind::kRBrace) || At(TokenKind::kRBracket)) &&
                 depth > 0) {
        --depth;
      }
      Take();
    }
  }

  // At '{': skips through the matching '}'.
  void SkipBalanced() {
    int depth = 0;
    while (!At(TokenKind::kEof)) {
      const TokenKind kind = Take().kind;
      if (kind == TokenKind::kLBrace) ++depth;
      if (kind == TokenKind::kRBrace && --depth <= 0) return;
    }
  }

  // After an unwanted block keyword: drops an optional label and the body.
  void SkipBlockAfterKeyword() {
    while (At(TokenKind::kIdent) || At(TokenKind::kKeyword)) {
      if (Next().kind == TokenKind::kColon) return;
      Take();
      if (At(TokenKind::kLBrace)) break;
    }
    if (At(TokenKind::kLBrace)) SkipBalanced();
  }

  // ---- generic blocks -----------------------------------------------------

  std::optional<Value> ParseValue() {
    Value v;
    if (IsScalarToken(Cur().kind) || At(TokenKind::kEnvRef)) {
      v.kind = At(TokenKind::kEnvRef) ? Value::Kind::kEnv : Value::Kind::kScalar;
      v.token = Take();
      v.span = v.token.span;
      return v;
    }
    if (!At(TokenKind::kLBracket)) {
      Error("E020", "expected a value, found " + Describe(Cur()), Cur().span);
      return std::nullopt;
    }
    v.kind = Value::Kind::kList;
    const Token open = Take();
    bool need_separator = false;
    while (true) {
      if (At(TokenKind::kRBracket)) {
        v.span = Cover(open.span, Take().span);
        return v;
      }
      if (IsScalarToken(Cur().kind) && !need_separator) {
        v.items.push_back(Take());
        need_separator = !At(TokenKind::kComma);
        if (At(TokenKind::kComma)) Take();
        continue;
      }
      Error("E020",
            need_separator ? "expected ',' or ']', found " + Describe(Cur())
                           : "expected a list element, found " +
                                 Describe(Cur()),
            Cur().span);
      // Drop the rest of the list if it closes on this line of tokens.
      while (!At(TokenKind::kEof) && !At(TokenKind::kRBracket) &&
             !At(TokenKind::kRBrace) && !AtFieldStart() &&
             !At(TokenKind::kKeyword)) {
        Take();
      }
      if (At(TokenKind::kRBracket)) Take();
      return std::nullopt;
    }
  }

  // Parses `"{" item* "}"` for the block at `path` opened by `keyword`.
  void ParseBlockBody(const std::string& path, const SourceSpan& keyword,
                      const BlockSpec& spec) {
    if (!At(TokenKind::kLBrace)) {
      Error("E011", "expected '{' to open '" + path + "', found " +
                        Describe(Cur()),
            Cur().span);
      Recover();
      return;
    }
    Take();
    std::set<std::string, std::less<>> seen;
    while (!aborted_) {
      if (At(TokenKind::kRBrace)) {
        Take();
        break;
      }
      if (At(TokenKind::kEof)) {
        Error("E011", "expected '}' to close '" + path + "'", Cur().span);
        break;
      }
      if (AtFieldStart()) {
        const Token key = Take();
        Take();  // ':'
        std::optional<Value> value = ParseValue();
        if (!value) {
          seen.insert(key.lexeme);
          Recover();
          continue;
        }
        auto it = spec.fields.find(key.lexeme);
        if (it == spec.fields.end()) {
          Error("E010", "unknown field '" + key.lexeme + "' in '" + path + "'",
                key.span);
          continue;
        }
        if (!seen.insert(key.lexeme).second) {
          Error("E014", "duplicate field '" + key.lexeme + "' in '" + path +
                            "'",
                key.span);
          continue;
        }
        const std::string field_path = path + "." + key.lexeme;
        model_.locations.Set(field_path, value->span);
        for (size_t i = 0; i < value->items.size(); ++i) {
          model_.locations.Set(field_path + "[" + std::to_string(i) + "]",
                               value->items[i].span);
        }
        it->second.apply(field_path, *value);
        continue;
      }
      if (At(TokenKind::kKeyword)) {
        const Token keyword_token = Take();
        auto it = spec.blocks.find(keyword_token.lexeme);
        if (it == spec.blocks.end()) {
          Error("E010", "unknown block '" + keyword_token.lexeme + "' in '" +
                            path + "'",
                keyword_token.span);
          SkipBlockAfterKeyword();
          continue;
        }
        if (!it->second.repeatable &&
            !seen.insert(keyword_token.lexeme).second) {
          Error("E014", "duplicate block '" + keyword_token.lexeme +
                            "' in '" + path + "'",
                keyword_token.span);
          SkipBlockAfterKeyword();
          continue;
        }
        it->second.parse(keyword_token);
        continue;
      }
      Error("E020", "unexpected " + Describe(Cur()) + " in '" + path + "'",
            Cur().span);
      Take();
      Recover();
    }
    if (aborted_) return;
    for (const auto& [name, field] : spec.fields) {
      if (field.required && !seen.count(name)) {
        Error("E011", "missing required field '" + name + "' in '" + path +
                          "'",
              keyword);
      }
    }
  }

  // ---- typed field conversion --------------------------------------------

  static std::string FieldName(const std::string& path) {
    return path.substr(path.rfind('.') + 1);
  }

  void TypeError(const std::string& path, const Value& v,
                 std::string_view expected) {
    Error("E015", "field '" + FieldName(path) + "' expects " +
                      std::string(expected),
          v.span);
  }

  std::optional<std::string> String(const std::string& path, const Value& v) {
    if (v.kind == Value::Kind::kScalar && v.token.kind == TokenKind::kString) {
      return v.token.lexeme;
    }
    TypeError(path, v, "a string");
    return std::nullopt;
  }

  std::optional<std::string> NonEmpty(const std::string& path,
                                      const Value& v) {
    auto s = String(path, v);
    if (s && s->empty()) {
      Error("E015", "field '" + FieldName(path) + "' must not be empty",
            v.span);
      return std::nullopt;
    }
    return s;
  }

  std::optional<CalendarDate> Date(const std::string& path, const Value& v) {
    if (v.kind != Value::Kind::kScalar || v.token.kind != TokenKind::kDate) {
      TypeError(path, v, "a date (YYYY-MM-DD)");
      return std::nullopt;
    }
    auto date = CalendarDate::Parse(v.token.lexeme);
    if (!date) {
      Error("E015", "'" + v.token.lexeme + "' is not a valid calendar date",
            v.span);
    }
    return date;
  }

  std::optional<bool> Bool(const std::string& path, const Value& v) {
    if (v.kind == Value::Kind::kScalar &&
        v.token.kind == TokenKind::kBoolean) {
      return v.token.lexeme == "true";
    }
    TypeError(path, v, "true or false");
    return std::nullopt;
  }

  std::optional<std::int64_t> Integer(const Token& token) {
    std::int64_t value = 0;
    const char* first = token.lexeme.data();
    const char* last = first + token.lexeme.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
      Error("E015", "integer '" + token.lexeme + "' is out of range",
            token.span);
      return std::nullopt;
    }
    return value;
  }

  std::optional<std::int64_t> Positive(const std::string& path,
                                       const Value& v) {
    if (v.kind != Value::Kind::kScalar ||
        v.token.kind != TokenKind::kInteger) {
      TypeError(path, v, "an integer");
      return std::nullopt;
    }
    auto value = Integer(v.token);
    if (value && *value <= 0) {
      Error("E015", "field '" + FieldName(path) + "' must be positive",
            v.span);
      return std::nullopt;
    }
    return value;
  }

  template <typename E>
  std::optional<E> EnumToken(const std::string& path, const Token& token) {
    if (token.kind == TokenKind::kIdent) {
      if (auto e = ParseEnum<E>(token.lexeme)) return e;
    }
    Error("E015", "field '" + FieldName(path) + "' expects one of " +
                      EnumChoices<E>() + ", found " + Describe(token),
          token.span);
    return std::nullopt;
  }

  template <typename E>
  std::optional<E> Enum(const std::string& path, const Value& v) {
    if (v.kind != Value::Kind::kScalar) {
      TypeError(path, v, "one of " + EnumChoices<E>());
      return std::nullopt;
    }
    return EnumToken<E>(path, v.token);
  }

  std::optional<std::vector<std::string>> StringList(const std::string& path,
                                                     const Value& v) {
    if (v.kind != Value::Kind::kList) {
      TypeError(path, v, "a list of strings");
      return std::nullopt;
    }
    std::vector<std::string> out;
    bool ok = true;
    for (const Token& item : v.items) {
      if (item.kind != TokenKind::kString) {
        Error("E015", "list '" + FieldName(path) + "' holds strings, found " +
                          Describe(item),
              item.span);
        ok = false;
      } else {
        out.push_back(item.lexeme);
      }
    }
    if (!ok) return std::nullopt;
    return out;
  }

  template <typename E>
  std::optional<std::vector<E>> EnumList(const std::string& path,
                                         const Value& v) {
    if (v.kind != Value::Kind::kList) {
      TypeError(path, v, "a list of " + EnumChoices<E>());
      return std::nullopt;
    }
    std::vector<E> out;
    bool ok = true;
    for (const Token& item : v.items) {
      if (auto e = EnumToken<E>(path, item)) {
        out.push_back(*e);
      } else {
        ok = false;
      }
    }
    if (!ok) return std::nullopt;
    return out;
  }

  std::optional<SecretRef> Secret(const std::string& path, const Value& v) {
    if (v.kind == Value::Kind::kEnv) return EnvSecret{v.token.lexeme};
    if (v.kind == Value::Kind::kScalar && v.token.kind == TokenKind::kString) {
      return LiteralSecret{v.token.lexeme};
    }
    TypeError(path, v, "a string or env(NAME)");
    return std::nullopt;
  }

  // Field handler that converts with `convert` and stores into `target`.
  template <typename T, typename Convert>
  FieldHandler Into(T& target, Convert convert) {
    return [this, &target, convert](const std::string& path, const Value& v) {
      if (auto value = (this->*convert)(path, v)) target = std::move(*value);
    };
  }

  template <typename T, typename Convert>
  FieldHandler IntoOptional(std::optional<T>& target, Convert convert) {
    return [this, &target, convert](const std::string& path, const Value& v) {
      if (auto value = (this->*convert)(path, v)) target = std::move(*value);
    };
  }

  // ---- document -----------------------------------------------------------

  void ParseDocument() {
    if (!AtKeyword("connector")) {
      Error("E011", "expected 'connector', found " + Describe(Cur()),
            Cur().span);
      return;
    }
    const Token connector = Take();
    model_.locations.Set("connector", connector.span);
    if (At(TokenKind::kString)) {
      const Token name = Take();
      model_.locations.Set("connector", name.span);
      if (!IsIdentifier(name.lexeme)) {
        Error("E015", "connector name '" + name.lexeme +
                          "' must match [A-Za-z][A-Za-z0-9_-]*",
              name.span);
      }
      model_.name = name.lexeme;
    } else {
      Error("E011", "expected connector name string, found " + Describe(Cur()),
            Cur().span);
    }

    BlockSpec spec;
    spec.blocks["discovery"] = {[this](const Token& kw) { Discovery(kw); }};
    spec.blocks["metadata"] = {[this](const Token& kw) { Metadata(kw); }};
    spec.blocks["usage"] = {[this](const Token& kw) { Usage(kw); }, true};
    spec.blocks["access"] = {[this](const Token& kw) { Access(kw); }};
    ParseBlockBody("connector", connector.span, spec);
    if (aborted_) return;

    const SourceSpan anchor = model_.locations.Lookup("connector");
    for (const char* section : {"discovery", "metadata", "usage", "access"}) {
      if (!sections_.count(section)) {
        Error("E011", "missing section '" + std::string(section) + "'",
              anchor);
      }
    }

    if (AtKeyword("connector")) {
      Error("E013", "only one connector block is allowed per file",
            Cur().span);
    } else if (!At(TokenKind::kEof)) {
      Error("E020", "unexpected " + Describe(Cur()) + " after connector block",
            Cur().span);
    }
  }

  void Discovery(const Token& kw) {
    sections_.insert("discovery");
    model_.locations.Set("discovery", kw.span);
    auto& id = model_.identification;
    BlockSpec spec;
    spec.fields["linkedAssetId"] = {Into(id.linked_asset_id, &Parser::NonEmpty)};
    spec.fields["baseUrl"] = {Into(id.base_url, &Parser::String)};
    spec.fields["endpoint"] = {Into(id.endpoint, &Parser::String)};
    spec.fields["identifierType"] = {
        Into(id.identifier_type, &Parser::Enum<IdentifierType>)};
    ParseBlockBody("discovery", kw.span, spec);
  }

  void Metadata(const Token& kw) {
    sections_.insert("metadata");
    model_.locations.Set("metadata", kw.span);
    auto& md = model_.metadata;
    BlockSpec spec;
    spec.fields["title"] = {Into(md.title, &Parser::NonEmpty)};
    spec.fields["description"] = {Into(md.description, &Parser::String)};
    spec.fields["publisher"] = {Into(md.publisher, &Parser::NonEmpty)};
    spec.fields["semanticIds"] = {Into(md.semantic_ids, &Parser::StringList),
                                  false};
    spec.fields["version"] = {Into(md.version, &Parser::NonEmpty)};
    spec.fields["created"] = {Into(md.created, &Parser::Date)};
    spec.fields["modified"] = {Into(md.modified, &Parser::Date)};
    spec.fields["language"] = {IntoOptional(md.language, &Parser::String),
                               false};
    ParseBlockBody("metadata", kw.span, spec);
  }

  void Usage(const Token& kw) {
    if (sections_.count("usage")) {
      Error("E012", "duplicate usage block", kw.span);
      SkipBlockAfterKeyword();
      return;
    }
    sections_.insert("usage");
    model_.locations.Set("usage", kw.span);

    auto& usage = model_.usage;
    BlockSpec spec;
    spec.fields["dataAddress"] = {Into(usage.data_address, &Parser::String)};
    spec.fields["schemaAddress"] = {
        IntoOptional(usage.schema_address, &Parser::String), false};

    if (AtKeyword("edc")) {
      Take();
      usage.extension = EdcUsage{};
      auto& edc = std::get<EdcUsage>(usage.extension);
      spec.fields["edcAddress"] = {Into(edc.edc_address, &Parser::String)};
      spec.fields["xApiKey"] = {Into(edc.x_api_key, &Parser::Secret)};
      spec.fields["remoteAddress"] = {
          Into(edc.remote_address, &Parser::String)};
      spec.fields["remoteId"] = {Into(edc.remote_id, &Parser::String)};
      spec.fields["stsServiceAddress"] = {
          IntoOptional(edc.sts_service_address, &Parser::String), false};
      spec.fields["trustedDidRegistries"] = {
          Into(edc.trusted_did_registries, &Parser::StringList), false};
      spec.blocks["push"] = {[this, &edc](const Token& push_kw) {
        model_.locations.Set("usage.push", push_kw.span);
        edc.push_endpoints.emplace();
        auto& push = *edc.push_endpoints;
        BlockSpec push_spec;
        push_spec.fields["callbackUrl"] = {
            Into(push.callback_url, &Parser::String)};
        push_spec.fields["cloudPush"] = {Into(push.cloud_push, &Parser::Bool)};
        ParseBlockBody("usage.push", push_kw.span, push_spec);
      }};
    } else if (AtKeyword("opcua")) {
      Take();
      usage.extension = OpcUaUsage{};
      auto& opc = std::get<OpcUaUsage>(usage.extension);
      spec.fields["endpointUrl"] = {Into(opc.endpoint_url, &Parser::String)};
      spec.fields["securityPolicy"] = {
          Into(opc.security_policy, &Parser::Enum<SecurityPolicy>)};
      spec.fields["messageSecurityMode"] = {
          Into(opc.message_security_mode, &Parser::Enum<MessageSecurityMode>)};
      spec.fields["authenticationMode"] = {
          Into(opc.authentication_mode, &Parser::Enum<AuthenticationMode>)};
      spec.fields["protocols"] = {[this, &opc](const std::string& path,
                                               const Value& v) {
        auto protocols = EnumList<Protocol>(path, v);
        if (!protocols) return;
        const std::set<Protocol> unique(protocols->begin(), protocols->end());
        if (protocols->empty()) {
          Error("E015", "field 'protocols' must not be empty", v.span);
        } else if (unique.size() != protocols->size()) {
          Error("E015", "field 'protocols' must not repeat a protocol",
                v.span);
        } else {
          opc.protocols = std::move(*protocols);
        }
      }};
      spec.fields["companionSpecs"] = {
          Into(opc.companion_specs, &Parser::StringList), false};
      spec.fields["addressSpace"] = {Into(opc.address_space, &Parser::String)};
      spec.blocks["qos"] = {[this, &opc](const Token& qos_kw) {
        model_.locations.Set("usage.qos", qos_kw.span);
        opc.qos.emplace();
        BlockSpec qos_spec;
        qos_spec.fields["samplingRateMs"] = {
            Into(opc.qos->sampling_rate_ms, &Parser::Positive)};
        qos_spec.fields["maxSubscriptions"] = {
            Into(opc.qos->max_subscriptions, &Parser::Positive)};
        ParseBlockBody("usage.qos", qos_kw.span, qos_spec);
      }};
    } else if (AtKeyword("plain")) {
      Take();
      usage.extension = PlainUsage{};
    } else {
      if (At(TokenKind::kIdent)) {
        Error("E015", "unknown usage kind '" + Cur().lexeme +
                          "'; expected edc, opcua or plain",
              Cur().span);
      } else {
        Error("E011", "expected usage kind (edc, opcua or plain), found " +
                          Describe(Cur()),
              Cur().span);
      }
      SkipBlockAfterKeyword();
      return;
    }
    ParseBlockBody("usage", kw.span, spec);
  }

  void Access(const Token& kw) {
    sections_.insert("access");
    model_.locations.Set("access", kw.span);
    auto& access = model_.access;
    BlockSpec spec;
    spec.fields["usagePolicy"] = {Into(access.usage_policy, &Parser::NonEmpty)};
    spec.blocks["contract"] = {[this](const Token& k) { Contract(k); }};
    spec.blocks["roles"] = {[this](const Token& k) { Roles(k); }};
    spec.blocks["identityProvider"] = {[this, &access](const Token& k) {
      model_.locations.Set("access.identityProvider", k.span);
      access.identity_provider.emplace();
      auto& idp = *access.identity_provider;
      BlockSpec idp_spec;
      idp_spec.fields["endpoint"] = {Into(idp.endpoint, &Parser::String)};
      idp_spec.fields["clientId"] = {Into(idp.client_id, &Parser::NonEmpty)};
      idp_spec.fields["grantType"] = {
          Into(idp.grant_type, &Parser::Enum<GrantType>)};
      idp_spec.fields["secret"] = {Into(idp.secret, &Parser::Secret)};
      ParseBlockBody("access.identityProvider", k.span, idp_spec);
    }};
    spec.blocks["oauth"] = {[this, &access](const Token& k) {
      model_.locations.Set("access.oauth", k.span);
      access.oauth.emplace();
      auto& oauth = *access.oauth;
      BlockSpec oauth_spec;
      oauth_spec.fields["identifier"] = {
          Into(oauth.identifier, &Parser::NonEmpty)};
      oauth_spec.fields["secret"] = {Into(oauth.secret, &Parser::Secret)};
      oauth_spec.fields["grantType"] = {
          Into(oauth.grant_type, &Parser::String)};
      oauth_spec.fields["scope"] = {Into(oauth.scope, &Parser::String)};
      ParseBlockBody("access.oauth", k.span, oauth_spec);
    }};
    ParseBlockBody("access", kw.span, spec);
  }

  void Contract(const Token& kw) {
    model_.locations.Set("access.contract", kw.span);
    if (!At(TokenKind::kLBrace)) {
      Error("E011", "expected '{' to open 'access.contract', found " +
                        Describe(Cur()),
            Cur().span);
      Recover();
      return;
    }
    Take();
    auto& offers = model_.access.contract_offers;
    std::set<std::string, std::less<>> keys;
    while (!aborted_) {
      if (At(TokenKind::kRBrace)) {
        Take();
        return;
      }
      if (At(TokenKind::kEof)) {
        Error("E011", "expected '}' to close 'access.contract'", Cur().span);
        return;
      }
      if (!(At(TokenKind::kString) && Next().kind == TokenKind::kColon)) {
        Error("E020", "expected a quoted contract key, found " +
                          Describe(Cur()),
              Cur().span);
        Take();
        Recover();
        continue;
      }
      const Token key = Take();
      Take();  // ':'
      std::optional<Value> value = ParseValue();
      if (!value) {
        Recover();
        continue;
      }
      if (At(TokenKind::kComma)) Take();
      if (value->kind != Value::Kind::kScalar) {
        Error("E015", "contract value for '" + key.lexeme +
                          "' must be a string, integer, boolean or date",
              value->span);
        continue;
      }
      if (!keys.insert(key.lexeme).second) {
        Error("E014", "duplicate contract key '" + key.lexeme + "'",
              key.span);
        continue;
      }
      std::optional<Scalar> scalar;
      const Token& t = value->token;
      switch (t.kind) {
        case TokenKind::kString:
        case TokenKind::kIdent:
          scalar = t.lexeme;
          break;
        case TokenKind::kBoolean:
          scalar = t.lexeme == "true";
          break;
        case TokenKind::kInteger:
          if (auto i = Integer(t)) scalar = *i;
          break;
        case TokenKind::kDate:
          if (auto d = CalendarDate::Parse(t.lexeme)) {
            scalar = *d;
          } else {
            Error("E015", "'" + t.lexeme + "' is not a valid calendar date",
                  t.span);
          }
          break;
        default:
          break;
      }
      if (!scalar) continue;
      model_.locations.Set("access.contract." + key.lexeme, value->span);
      offers.push_back({key.lexeme, std::move(*scalar)});
    }
  }

  void Roles(const Token& kw) {
    model_.locations.Set("access.roles", kw.span);
    if (!At(TokenKind::kLBrace)) {
      Error("E011", "expected '{' to open 'access.roles', found " +
                        Describe(Cur()),
            Cur().span);
      Recover();
      return;
    }
    Take();
    auto& roles = model_.access.roles;
    while (!aborted_) {
      if (At(TokenKind::kRBrace)) {
        Take();
        return;
      }
      if (At(TokenKind::kEof)) {
        Error("E011", "expected '}' to close 'access.roles'", Cur().span);
        return;
      }
      if (!AtKeyword("role")) {
        Error("E020", "expected 'role', found " + Describe(Cur()), Cur().span);
        Take();
        Recover();
        continue;
      }
      const Token role_kw = Take();
      if (!At(TokenKind::kIdent)) {
        Error("E020", "expected a role name, found " + Describe(Cur()),
              Cur().span);
        SkipBlockAfterKeyword();
        continue;
      }
      const Token name = Take();
      const std::string path = "access.roles[" + std::to_string(roles.size()) +
                               "]";
      model_.locations.Set(path, name.span);
      roles.push_back({name.lexeme, {}});
      const size_t index = roles.size() - 1;
      BlockSpec role_spec;
      role_spec.fields["permissions"] = {
          [this, index, &roles](const std::string& field_path,
                                const Value& v) {
            if (auto perms = EnumList<Permission>(field_path, v)) {
              roles[index].permissions = std::move(*perms);
            }
          }};
      (void)role_kw;
      ParseBlockBody(path, name.span, role_spec);
    }
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
  bool aborted_ = false;
  std::vector<Diagnostic> diags_;
  std::set<std::string, std::less<>> sections_;
  ConnectorModel model_;
};

}  // namespace

ParseResult Parse(std::string_view source, std::string_view file) {
  LexResult lexed = Tokenize(source, file);
  if (!lexed.ok()) {
    return ParseResult{std::nullopt, std::move(lexed.diagnostics)};
  }
  return Parser(std::move(lexed.tokens), file).Run();
}

}  // namespace dsx
