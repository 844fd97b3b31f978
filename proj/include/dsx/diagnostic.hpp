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

#ifndef DSX_DIAGNOSTIC_HPP_
#define DSX_DIAGNOSTIC_HPP_

#include <algorithm>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace dsx {

/// Location of a construct in a source file. Lines and columns are 1-based;
/// columns count bytes, not code points.
struct SourceSpan {
  std::string file;
  int line = 1;
  int column = 1;
  int length = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class Severity { kError, kWarning };

constexpr std::string_view SeverityName(Severity s) {
  return s == Severity::kError ? "error" : "warning";
}

/// One finding from the lexer, parser or validator. `code` is a stable
/// machine-readable identifier such as "E201" or "W204".
struct Diagnostic {
  Severity severity = Severity::kError;
  std::string code;
  std::string message;
  SourceSpan span;

  bool is_error() const { return severity == Severity::kError; }

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

inline Diagnostic MakeError(std::string code, std::string message,
                            SourceSpan span) {
  return {Severity::kError, std::move(code), std::move(message),
          std::move(span)};
}

inline Diagnostic MakeWarning(std::string code, std::string message,
                              SourceSpan span) {
  return {Severity::kWarning, std::move(code), std::move(message),
          std::move(span)};
}

inline bool HasErrors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(),
                     [](const Diagnostic& d) { return d.is_error(); });
}

/// Orders diagnostics by position, then by code, then by message, so that
/// any permutation of the same findings normalizes to the same list.
inline void SortBySpan(std::vector<Diagnostic>& diags) {
  std::stable_sort(diags.begin(), diags.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     return std::tie(a.span.file, a.span.line, a.span.column,
                                     a.code, a.message) <
                            std::tie(b.span.file, b.span.line, b.span.column,
                                     b.code, b.message);
                   });
}

/// `file:line:col: severity[code]: message`
inline std::string FormatDiagnostic(const Diagnostic& d) {
  return d.span.file + ":" + std::to_string(d.span.line) + ":" +
         std::to_string(d.span.column) + ": " +
         std::string(SeverityName(d.severity)) + "[" + d.code +
         "]: " + d.message;
}

}  // namespace dsx

#endif  // DSX_DIAGNOSTIC_HPP_
