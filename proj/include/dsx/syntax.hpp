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

// Lexical facts about the .dsx language shared by the model, lexer and
// printer.

#ifndef DSX_SYNTAX_HPP_
#define DSX_SYNTAX_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <string_view>

namespace dsx {

inline constexpr std::array<std::string_view, 16> kKeywords = {
    "connector", "discovery",   "metadata",         "usage",
    "access",    "edc",         "opcua",            "plain",
    "push",      "qos",         "contract",         "roles",
    "role",      "permissions", "identityProvider", "oauth",
};

inline bool IsKeyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) !=
         kKeywords.end();
}

constexpr bool IsAsciiAlpha(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}
constexpr bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }
constexpr bool IsIdentContinue(char c) {
  return IsAsciiAlpha(c) || IsAsciiDigit(c) || c == '_' || c == '-';
}

/// `[A-Za-z][A-Za-z0-9_-]*`
constexpr bool IsIdentifier(std::string_view s) {
  if (s.empty() || !IsAsciiAlpha(s.front())) return false;
  return std::all_of(s.begin() + 1, s.end(), IsIdentContinue);
}

/// Identifier that is also usable as a bare word (not reserved, not a
/// boolean literal).
inline bool IsBareIdentifier(std::string_view s) {
  return IsIdentifier(s) && !IsKeyword(s) && s != "true" && s != "false";
}

/// `[A-Z][A-Z0-9_]*`
constexpr bool IsEnvVarName(std::string_view s) {
  if (s.empty() || !(s.front() >= 'A' && s.front() <= 'Z')) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || IsAsciiDigit(c) || c == '_';
  });
}

/// Number of bytes in the well-formed UTF-8 sequence starting at `s[pos]`,
/// or 0 when the sequence is malformed (overlong, surrogate, truncated).
inline size_t Utf8SequenceLength(std::string_view s, size_t pos) {
  const auto byte = [&](size_t i) {
    return static_cast<unsigned char>(s[i]);
  };
  const unsigned char lead = byte(pos);
  if (lead < 0x80) return 1;
  size_t len = 0;
  unsigned char lo = 0x80, hi = 0xBF;
  if (lead >= 0xC2 && lead <= 0xDF) {
    len = 2;
  } else if (lead >= 0xE0 && lead <= 0xEF) {
    len = 3;
    if (lead == 0xE0) lo = 0xA0;
    if (lead == 0xED) hi = 0x9F;
  } else if (lead >= 0xF0 && lead <= 0xF4) {
    len = 4;
    if (lead == 0xF0) lo = 0x90;
    if (lead == 0xF4) hi = 0x8F;
  } else {
    return 0;
  }
  if (pos + len > s.size()) return 0;
  if (byte(pos + 1) < lo || byte(pos + 1) > hi) return 0;
  for (size_t i = 2; i < len; ++i) {
    if (byte(pos + i) < 0x80 || byte(pos + i) > 0xBF) return 0;
  }
  return len;
}

/// Valid UTF-8 without C0 control characters or DEL; the set of strings a
/// .dsx string literal can hold.
inline bool IsPrintableText(std::string_view s) {
  for (size_t i = 0; i < s.size();) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (c < 0x20 || c == 0x7f) return false;
    const size_t len = Utf8SequenceLength(s, i);
    if (len == 0) return false;
    i += len;
  }
  return true;
}

}  // namespace dsx

#endif  // DSX_SYNTAX_HPP_
