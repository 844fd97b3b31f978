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

#ifndef DSX_URL_HPP_
#define DSX_URL_HPP_

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>

namespace dsx {

/// Components of an absolute hierarchical URL (`scheme://authority/path...`).
/// The scheme is lowercased; everything else is kept verbatim.
struct UrlParts {
  std::string scheme;
  std::string host;
  std::optional<int> port;
  std::string path;
  std::string query;
  std::string fragment;
};

/// Parses `scheme "://" [userinfo "@"] host [":" port] path ["?" query]
/// ["#" fragment]`. Requires a non-empty host and rejects whitespace,
/// control characters and malformed percent escapes. Non-ASCII bytes are
/// accepted so that IRIs pass.
std::optional<UrlParts> ParseAbsoluteUrl(std::string_view text);

/// True when `text` is an absolute URL whose scheme is one of `schemes`
/// (compared case-insensitively).
bool IsAbsoluteUrl(std::string_view text,
                   std::initializer_list<std::string_view> schemes);

inline bool IsWebUrl(std::string_view text) {
  return IsAbsoluteUrl(text, {"http", "https"});
}

/// `scheme ":" rest` with a non-empty rest free of whitespace and the
/// characters RFC 3987 excludes (`<>"{}|\^` and backtick). Covers URNs.
bool IsIri(std::string_view text);

/// True when `text` begins with `scheme ":"` or contains "://".
bool HasScheme(std::string_view text);

}  // namespace dsx

#endif  // DSX_URL_HPP_
