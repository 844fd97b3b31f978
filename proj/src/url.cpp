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

#include "dsx/url.hpp"

#include <algorithm>
#include <cctype>

#include "dsx/syntax.hpp"

namespace dsx {
namespace {

bool IsHex(char c) {
  return IsAsciiDigit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

// Length of the scheme prefix (excluding ':'), or 0 when there is none.
size_t SchemeLength(std::string_view text) {
  if (text.empty() || !IsAsciiAlpha(text[0])) return 0;
  size_t i = 1;
  while (i < text.size() &&
         (IsAsciiAlpha(text[i]) || IsAsciiDigit(text[i]) || text[i] == '+' ||
          text[i] == '-' || text[i] == '.')) {
    ++i;
  }
  return (i < text.size() && text[i] == ':') ? i : 0;
}

bool IsExcludedIriChar(unsigned char c) {
  if (c <= 0x20 || c == 0x7f) return true;
  switch (c) {
    case '<': case '>': case '"': case '{': case '}':
    case '|': case '\\': case '^': case '`':
      return true;
    default:
      return false;
  }
}

bool ValidPercentEscapes(std::string_view s) {
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '%') continue;
    if (i + 2 >= s.size()) return false;
    if (!IsHex(s[i + 1]) || !IsHex(s[i + 2])) return false;
    i += 2;
  }
  return true;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

std::optional<UrlParts> ParseAbsoluteUrl(std::string_view text) {
  const size_t scheme_len = SchemeLength(text);
  if (scheme_len == 0) return std::nullopt;
  if (text.substr(scheme_len, 3) != "://") return std::nullopt;
  if (std::any_of(text.begin(), text.end(), [](char c) {
        return IsExcludedIriChar(static_cast<unsigned char>(c));
      })) {
    return std::nullopt;
  }
  if (!ValidPercentEscapes(text)) return std::nullopt;

  UrlParts parts;
  parts.scheme = Lower(text.substr(0, scheme_len));
  std::string_view rest = text.substr(scheme_len + 3);

  const size_t authority_end = rest.find_first_of("/?#");
  std::string_view authority = rest.substr(0, authority_end);
  rest = authority_end == std::string_view::npos ? std::string_view{}
                                                 : rest.substr(authority_end);

  if (const size_t at = authority.rfind('@'); at != std::string_view::npos) {
    authority.remove_prefix(at + 1);
  }
  std::string_view host = authority;
  if (!authority.empty() && authority.front() == '[') {
    const size_t close = authority.find(']');
    if (close == std::string_view::npos) return std::nullopt;
    host = authority.substr(0, close + 1);
    authority.remove_prefix(close + 1);
  } else {
    const size_t colon = authority.rfind(':');
    host = authority.substr(0, colon);
    authority = colon == std::string_view::npos ? std::string_view{}
                                                : authority.substr(colon);
  }
  if (host.empty()) return std::nullopt;
  if (host.find_first_of("[]:") != std::string_view::npos &&
      host.front() != '[') {
    return std::nullopt;
  }
  parts.host = std::string(host);

  if (!authority.empty()) {
    if (authority.front() != ':') return std::nullopt;
    std::string_view port = authority.substr(1);
    if (port.empty() || port.size() > 5 ||
        !std::all_of(port.begin(), port.end(), IsAsciiDigit)) {
      return std::nullopt;
    }
    int value = 0;
    for (char c : port) value = value * 10 + (c - '0');
    if (value > 65535) return std::nullopt;
    parts.port = value;
  }

  const size_t hash = rest.find('#');
  if (hash != std::string_view::npos) {
    parts.fragment = std::string(rest.substr(hash + 1));
    rest = rest.substr(0, hash);
  }
  const size_t question = rest.find('?');
  if (question != std::string_view::npos) {
    parts.query = std::string(rest.substr(question + 1));
    rest = rest.substr(0, question);
  }
  parts.path = std::string(rest);
  return parts;
}

bool IsAbsoluteUrl(std::string_view text,
                   std::initializer_list<std::string_view> schemes) {
  auto parts = ParseAbsoluteUrl(text);
  if (!parts) return false;
  return std::find(schemes.begin(), schemes.end(), parts->scheme) !=
         schemes.end();
}

bool IsIri(std::string_view text) {
  const size_t scheme_len = SchemeLength(text);
  if (scheme_len == 0 || scheme_len + 1 >= text.size()) return false;
  if (std::any_of(text.begin(), text.end(), [](char c) {
        return IsExcludedIriChar(static_cast<unsigned char>(c));
      })) {
    return false;
  }
  return ValidPercentEscapes(text);
}

bool HasScheme(std::string_view text) {
  return SchemeLength(text) != 0 || text.find("://") != std::string_view::npos;
}

}  // namespace dsx
