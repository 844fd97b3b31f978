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

#include "dsx/lexer.hpp"

#include <gtest/gtest.h>

#include <string>
#include <vector>

namespace dsx {
namespace {

std::vector<TokenKind> Kinds(const LexResult& r) {
  std::vector<TokenKind> out;
  for (const auto& t : r.tokens) out.push_back(t.kind);
  return out;
}

TEST(LexerTest, PunctuationAndWords) {
  const LexResult r = Tokenize("connector \"x\" { a: [1, b], }", "t.dsx");
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(Kinds(r),
            (std::vector<TokenKind>{
                TokenKind::kKeyword, TokenKind::kString, TokenKind::kLBrace,
                TokenKind::kIdent, TokenKind::kColon, TokenKind::kLBracket,
                TokenKind::kInteger, TokenKind::kComma, TokenKind::kIdent,
                TokenKind::kRBracket, TokenKind::kComma, TokenKind::kRBrace,
                TokenKind::kEof}));
}

TEST(LexerTest, SpansCoverLexemeWithOneBasedColumns) {
  const LexResult r = Tokenize("a\n  \"hi\" 2026-12-31", "f");
  ASSERT_TRUE(r.ok());
  ASSERT_EQ(r.tokens.size(), 4u);
  EXPECT_EQ(r.tokens[1].span.line, 2);
  EXPECT_EQ(r.tokens[1].span.column, 3);
  EXPECT_EQ(r.tokens[1].span.length, 4);  // quotes included
  EXPECT_EQ(r.tokens[1].lexeme, "hi");
  EXPECT_EQ(r.tokens[2].kind, TokenKind::kDate);
  EXPECT_EQ(r.tokens[2].span.column, 8);
  EXPECT_EQ(r.tokens[2].span.length, 10);
  EXPECT_EQ(r.tokens[1].span.file, "f");
}

TEST(LexerTest, DatesNeedExactShape) {
  EXPECT_EQ(Tokenize("2026-12-31", "f").tokens[0].kind, TokenKind::kDate);
  // Not a date shape: lexes as the integers 20261, -2 and -31.
  const LexResult r = Tokenize("20261-2-31", "f");
  EXPECT_EQ(r.tokens[0].kind, TokenKind::kInteger);
  EXPECT_EQ(r.tokens[0].lexeme, "20261");
}

TEST(LexerTest, NegativeIntegers) {
  const LexResult r = Tokenize("-42 7", "f");
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.tokens[0].lexeme, "-42");
  EXPECT_EQ(r.tokens[1].lexeme, "7");
}

TEST(LexerTest, BooleansKeywordsAndIdentifiers) {
  const LexResult r = Tokenize("true false usage edc my-role_2", "f");
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(Kinds(r),
            (std::vector<TokenKind>{TokenKind::kBoolean, TokenKind::kBoolean,
                                    TokenKind::kKeyword, TokenKind::kKeyword,
                                    TokenKind::kIdent, TokenKind::kEof}));
}

TEST(LexerTest, StringEscapes) {
  const LexResult r = Tokenize(R"("a\"b\\c")", "f");
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.tokens[0].lexeme, "a\"b\\c");
}

TEST(LexerTest, Utf8InStrings) {
  const LexResult r = Tokenize("\"Grüße €\"", "f");
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.tokens[0].lexeme, "Grüße €");
}

TEST(LexerTest, EnvReference) {
  const LexResult r = Tokenize("env(IDP_SECRET)", "f");
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.tokens[0].kind, TokenKind::kEnvRef);
  EXPECT_EQ(r.tokens[0].lexeme, "IDP_SECRET");
  EXPECT_EQ(r.tokens[0].span.length, 15);
}

TEST(LexerTest, EnvWithoutParenIsIdentifier) {
  const LexResult r = Tokenize("env", "f");
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.tokens[0].kind, TokenKind::kIdent);
}

TEST(LexerTest, CommentsAndCrlf) {
  const LexResult r = Tokenize("// header\r\na // trailing\r\nb", "f");
  ASSERT_TRUE(r.ok());
  ASSERT_EQ(r.tokens.size(), 3u);
  EXPECT_EQ(r.tokens[0].span.line, 2);
  EXPECT_EQ(r.tokens[1].span.line, 3);
  EXPECT_EQ(r.tokens[1].span.column, 1);
}

TEST(LexerTest, UnterminatedString) {
  const LexResult r = Tokenize("  \"abc\nx", "f");
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].code, "E001");
  EXPECT_EQ(r.diagnostics[0].span.column, 3);
}

TEST(LexerTest, IllegalCharacter) {
  const LexResult r = Tokenize("a @ b", "f");
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].code, "E002");
  EXPECT_EQ(r.diagnostics[0].span.column, 3);
}

TEST(LexerTest, ControlCharacterAndBadUtf8InString) {
  const LexResult r = Tokenize(std::string("\"a\tb\xff\""), "f");
  ASSERT_EQ(r.diagnostics.size(), 2u);
  EXPECT_EQ(r.diagnostics[0].code, "E002");
  EXPECT_EQ(r.diagnostics[1].code, "E002");
}

TEST(LexerTest, BadEscape) {
  const LexResult r = Tokenize(R"("a\nb")", "f");
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].code, "E003");
  EXPECT_EQ(r.diagnostics[0].span.column, 3);
  EXPECT_EQ(r.diagnostics[0].span.length, 2);
}

TEST(LexerTest, MalformedEnvReferences) {
  for (const char* src : {"env(lower)", "env(X", "env()", "env(A B)"}) {
    const LexResult r = Tokenize(src, "f");
    ASSERT_FALSE(r.diagnostics.empty()) << src;
    EXPECT_EQ(r.diagnostics[0].code, "E003") << src;
  }
}

TEST(LexerTest, ErrorCapEmitsE099Once) {
  const LexResult r = Tokenize(std::string(500, '@'), "f");
  ASSERT_EQ(r.diagnostics.size(), 101u);
  EXPECT_EQ(r.diagnostics.back().code, "E099");
  EXPECT_EQ(r.tokens.back().kind, TokenKind::kEof);
}

TEST(LexerTest, AlwaysEndsWithEof) {
  EXPECT_EQ(Tokenize("", "f").tokens.size(), 1u);
  EXPECT_EQ(Tokenize("  // only a comment", "f").tokens.back().kind,
            TokenKind::kEof);
}

}  // namespace
}  // namespace dsx
