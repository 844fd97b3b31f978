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

// Recursive-descent parser for .dsx connector descriptions.
//
//   document   := "connector" STRING "{" section* "}"
//   section    := discovery | metadata | usage | access
//   discovery  := "discovery" "{" field* "}"
//   metadata   := "metadata" "{" field* "}"
//   usage      := "usage" ("edc" | "opcua" | "plain")
//                 "{" (field | push | qos)* "}"
//   access     := "access" "{" (field | contract | roles | idp | oauth)* "}"
//   contract   := "contract" "{" (STRING ":" scalar ","?)* "}"
//   roles      := "roles" "{" ("role" IDENT "{" "permissions" ":" list "}")*
//                 "}"
//   field      := IDENT ":" (scalar | list | ENV_REF)
//   scalar     := STRING | INTEGER | DATE | BOOLEAN | IDENT
//   list       := "[" (scalar ","?)* "]"
//
// Each of the four sections must appear exactly once; sections and the
// items inside a block may come in any order.
//
// Parser diagnostic codes:
//   E010 unknown field or block
//   E011 missing required section, field or token
//   E012 duplicate usage block
//   E013 more than one connector in a file
//   E014 duplicate field, block, section or contract key
//   E015 value has the wrong type or breaks a type invariant
//   E020 unexpected token
//   E099 too many errors (emitted once, after 100 diagnostics)

#ifndef DSX_PARSER_HPP_
#define DSX_PARSER_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "dsx/diagnostic.hpp"
#include "dsx/model.hpp"

namespace dsx {

struct ParseResult {
  std::optional<ConnectorModel> model;  // present iff no error diagnostics
  std::vector<Diagnostic> diagnostics;  // source order
};

/// Parses one connector description. Never throws on malformed input.
ParseResult Parse(std::string_view source, std::string_view file);

}  // namespace dsx

#endif  // DSX_PARSER_HPP_
