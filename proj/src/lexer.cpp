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

#include <cstdio>

#include "dsx/syntax.hpp"

namespace dsx {

std::string_view TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdent: return "identifier";
    case TokenKind::kString: return "string";
    case TokenKind::kInteger: return "integer";
    case TokenKind::kDate: return "date";
    case TokenKind::kBoolean: return "boolean";
    case TokenKind::kLBrace: return "'{'";
    case TokenKind::kRBrace: return "'}'";
    case TokenKind::kLBracket: return "'['";
    case TokenKind::kRBracket: return "']'";
    case TokenKind::kColon: return "':'";
    case TokenKind::kComma: return "','";
    case TokenKind::kKeyword: return "keyword";
    case TokenKind::kEnvRef: return "env reference";
    case TokenKind::kEof: return "end of file";
  }
  return "token";
}

namespace {

constexpr size_t kMaxErrors = 100;

class Lexer {
 public:
  Lexer(std::string_view source, std::string_view file)
      : src_(source), file_(file) {}

  LexResult Run() {
    while (!Done()) {
      SkipTrivia();
      if (AtEnd()) break;
      LexToken();
    }
    MarkStart();
    result_.tokens.push_back({TokenKind::kEof, "", SpanAt(pos_, 0)});
    return std::move(result_);
  }

 private:
  bool AtEnd() const { return pos_ >= src_.size(); }
  bool Done() const { return AtEnd() || aborted_; }
  char Peek(size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  // Moves forward `n` bytes, tracking line and column.
  void Advance(size_t n = 1) {
    for (size_t i = 0; i < n && pos_ < src_.size(); ++i) {
      if (src_[pos_] == '\n') {
        ++line_;
        line_start_ = pos_ + 1;
      }
      ++pos_;
    }
  }

  SourceSpan SpanAt(size_t start, size_t length) const {
    // Tokens never span lines, so the column of `start` derives from the
    // current line start whenever start lies on the current line.
    return SourceSpan{std::string(file_), start_line_,
                      static_cast<int>(start - start_line_start_) + 1,
                      static_cast<int>(length)};
  }

  void MarkStart() {
    start_ = pos_;
    start_line_ = line_;
    start_line_start_ = line_start_;
  }

  void Emit(TokenKind kind, std::string lexeme) {
    result_.tokens.push_back({kind, std::move(lexeme),
                              SpanAt(start_, pos_ - start_)});
  }

  void Error(std::string code, std::string message, SourceSpan span) {
    if (aborted_) return;
    if (result_.diagnostics.size() >= kMaxErrors) {
      result_.diagnostics.push_back(
          MakeError("E099", "too many errors", std::move(span)));
      aborted_ = true;
      return;
    }
    result_.diagnostics.push_back(
        MakeError(std::move(code), std::move(message), std::move(span)));
  }

  void SkipTrivia() {
    while (!AtEnd()) {
      const char c = Peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        Advance();
      } else if (c == '/' && Peek(1) == '/') {
        while (!AtEnd() && Peek() != '\n') Advance();
      } else {
        break;
      }
    }
    MarkStart();
  }

  void LexToken() {
    const char c = Peek();
    switch (c) {
      case '{': Advance(); Emit(TokenKind::kLBrace, "{"); return;
      case '}': Advance(); Emit(TokenKind::kRBrace, "}"); return;
      case '[': Advance(); Emit(TokenKind::kLBracket, "["); return;
      case ']': Advance(); Emit(TokenKind::kRBracket, "]"); return;
      case ':': Advance(); Emit(TokenKind::kColon, ":"); return;
      case ',': Advance(); Emit(TokenKind::kComma, ","); return;
      case '"': LexString(); return;
      default: break;
    }
    if (IsAsciiDigit(c) || (c == '-' && IsAsciiDigit(Peek(1)))) {
      LexNumberOrDate();
    } else if (IsAsciiAlpha(c)) {
      LexWord();
    } else {
      LexIllegal();
    }
  }

  void LexString() {
    const SourceSpan open = SpanAt(start_, 1);
    Advance();  // opening quote
    std::string value;
    while (true) {
      if (AtEnd() || Peek() == '\n' || Peek() == '\r') {
        Error("E001", "unterminated string", open);
        Emit(TokenKind::kString, std::move(value));
        return;
      }
      const char c = Peek();
      if (c == '"') {
        Advance();
        Emit(TokenKind::kString, std::move(value));
        return;
      }
      if (c == '\\') {
        const char next = Peek(1);
        if (next == '"' || next == '\\') {
          value += next;
          Advance(2);
        } else {
          Error("E003", "invalid escape sequence; only \\\" and \\\\ are "
                        "supported",
                SpanAt(pos_, next == '\0' ? 1 : 2));
          Advance(next == '\0' || next == '\n' ? 1 : 2);
        }
        continue;
      }
      const auto byte = static_cast<unsigned char>(c);
      if (byte < 0x20 || byte == 0x7f) {
        Error("E002", "control character in string", SpanAt(pos_, 1));
        Advance();
        continue;
      }
      const size_t len = Utf8SequenceLength(src_, pos_);
      if (len == 0) {
        Error("E002", "malformed UTF-8 in string", SpanAt(pos_, 1));
        Advance();
        continue;
      }
      value.append(src_.substr(pos_, len));
      Advance(len);
    }
  }

  void LexNumberOrDate() {
    // DATE is exactly DDDD-DD-DD; anything else numeric is an INTEGER.
    auto digit_at = [&](size_t i) { return IsAsciiDigit(Peek(i)); };
    if (Peek() != '-' && digit_at(0) && digit_at(1) && digit_at(2) &&
        digit_at(3) && Peek(4) == '-' && digit_at(5) && digit_at(6) &&
        Peek(7) == '-' && digit_at(8) && digit_at(9) && !digit_at(10)) {
      Advance(10);
      Emit(TokenKind::kDate, std::string(src_.substr(start_, 10)));
      return;
    }
    if (Peek() == '-') Advance();
    while (IsAsciiDigit(Peek())) Advance();
    Emit(TokenKind::kInteger, std::string(src_.substr(start_, pos_ - start_)));
  }

  void LexWord() {
    while (IsIdentContinue(Peek())) Advance();
    std::string word(src_.substr(start_, pos_ - start_));
    if (word == "env" && Peek() == '(') {
      LexEnvRef();
      return;
    }
    if (word == "true" || word == "false") {
      Emit(TokenKind::kBoolean, std::move(word));
    } else if (IsKeyword(word)) {
      Emit(TokenKind::kKeyword, std::move(word));
    } else {
      Emit(TokenKind::kIdent, std::move(word));
    }
  }

  void LexEnvRef() {
    Advance();  // '('
    const size_t name_start = pos_;
    while (!AtEnd() && Peek() != ')' && Peek() != '\n' &&
           (IsIdentContinue(Peek()))) {
      Advance();
    }
    const std::string name(src_.substr(name_start, pos_ - name_start));
    if (Peek() != ')') {
      Error("E003", "malformed env reference; expected env(NAME)",
            SpanAt(start_, pos_ - start_));
      Emit(TokenKind::kEnvRef, name);
      return;
    }
    Advance();  // ')'
    if (!IsEnvVarName(name)) {
      Error("E003", "env variable name '" + name +
                        "' must match [A-Z][A-Z0-9_]*",
            SpanAt(start_, pos_ - start_));
    }
    Emit(TokenKind::kEnvRef, name);
  }

  void LexIllegal() {
    const auto byte = static_cast<unsigned char>(Peek());
    size_t len = Utf8SequenceLength(src_, pos_);
    std::string shown;
    if (byte >= 0x21 && byte < 0x7f) {
      shown = std::string("'") + static_cast<char>(byte) + "'";
    } else if (len > 1) {
      shown = "'" + std::string(src_.substr(pos_, len)) + "'";
    } else {
      char buf[8];
      std::snprintf(buf, sizeof(buf), "0x%02X", byte);
      shown = buf;
    }
    if (len == 0) len = 1;
    Error("E002", "illegal character " + shown, SpanAt(pos_, len));
    Advance(len);
  }

  std::string_view src_;
  std::string_view file_;
  size_t pos_ = 0;
  int line_ = 1;
  size_t line_start_ = 0;
  size_t start_ = 0;
  int start_line_ = 1;
  size_t start_line_start_ = 0;
  bool aborted_ = false;
  LexResult result_;
};

}  // namespace

LexResult Tokenize(std::string_view source, std::string_view file) {
  return Lexer(source, file).Run();
}

}  // namespace dsx
