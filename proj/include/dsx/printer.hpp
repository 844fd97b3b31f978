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

#ifndef DSX_PRINTER_HPP_
#define DSX_PRINTER_HPP_

#include <string>
#include <string_view>

#include "dsx/model.hpp"

namespace dsx {

/// Renders `model` in canonical .dsx form: sections in the order discovery,
/// metadata, usage, access; fields in a fixed order; optional fields and
/// empty lists omitted; contract keys sorted; 2-space indent; LF endings;
/// trailing newline. Comments are not preserved.
///
/// Text fields must be printable UTF-8, which holds for every parsed model.
/// Semantic validity is not required, so files with validator findings can
/// still be formatted.
std::string PrintCanonical(const ConnectorModel& model);

/// Double-quoted literal with `"` and `\` escaped.
std::string QuoteString(std::string_view text);

}  // namespace dsx

#endif  // DSX_PRINTER_HPP_
