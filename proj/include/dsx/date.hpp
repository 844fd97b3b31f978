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

#ifndef DSX_DATE_HPP_
#define DSX_DATE_HPP_

#include <chrono>
#include <compare>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

namespace dsx {

/// ISO 8601 calendar date without a time component.
struct CalendarDate {
  int year = 1970;
  int month = 1;
  int day = 1;

  friend auto operator<=>(const CalendarDate&, const CalendarDate&) = default;

  bool valid() const {
    return std::chrono::year_month_day{std::chrono::year{year},
                                       std::chrono::month{unsigned(month)},
                                       std::chrono::day{unsigned(day)}}
               .ok() &&
           year >= 0 && year <= 9999;
  }

  /// Strict `YYYY-MM-DD`; rejects impossible days such as 2025-02-30.
  static std::optional<CalendarDate> Parse(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
      return std::nullopt;
    }
    auto digits = [&](size_t pos, size_t count) -> std::optional<int> {
      int value = 0;
      for (size_t i = pos; i < pos + count; ++i) {
        if (text[i] < '0' || text[i] > '9') return std::nullopt;
        value = value * 10 + (text[i] - '0');
      }
      return value;
    };
    auto y = digits(0, 4);
    auto m = digits(5, 2);
    auto d = digits(8, 2);
    if (!y || !m || !d) return std::nullopt;
    CalendarDate date{*y, *m, *d};
    if (!date.valid()) return std::nullopt;
    return date;
  }

  std::string ToString() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
    return buf;
  }

  /// Current UTC date.
  static CalendarDate Today() {
    const auto now = std::chrono::floor<std::chrono::days>(
        std::chrono::system_clock::now());
    const std::chrono::year_month_day ymd{now};
    return {int(ymd.year()), int(unsigned(ymd.month())),
            int(unsigned(ymd.day()))};
  }
};

}  // namespace dsx

#endif  // DSX_DATE_HPP_
