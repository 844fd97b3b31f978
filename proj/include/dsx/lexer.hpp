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

#ifndef DSX_LEXER_HPP_
#define DSX_LEXER_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "dsx/diagnostic.hpp"

namespace dsx {

enum class TokenKind {
  kIdent,
  kString,
  kInteger,
  kDate,
  kBoolean,
  kLBrace,
  kRBrace,
  kLBracket,
  kRBracket,
  kColon,
  kComma,
  kKeyword,
  kEnvRef,
  kEof,
};

std::string_view TokenKindName(TokenKind kind);

/// `lexeme` holds the decoded value: string contents without quotes and with
/// escapes resolved, the variable name for `env(NAME)`, and the source text
/// for everything else. `span` always covers the full source text of the
/// token, quotes included.
struct Token {
  TokenKind kind = TokenKind::kEof;
  std::string lexeme;
  SourceSpan span;
};

struct LexResult {
  std::vector<Token> tokens;  // ends with kEof
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return !HasErrors(diagnostics); }
};

/// Splits `source` into tokens, skipping whitespace and `//` comments.
///
/// Errors: E001 unterminated string (span at the opening quote), E002
/// illegal character or malformed UTF-8, E003 bad escape or malformed
/// `env(...)` reference, E099 after 100 errors. Lexing continues past
/// errors so that one run reports all of them.
LexResult Tokenize(std::string_view source, std::string_view file);

}  // namespace dsx

#endif  // DSX_LEXER_HPP_
