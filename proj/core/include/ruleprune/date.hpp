#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace ruleprune {

/// Calendar date, parsed from strict `YYYY-MM-DD`.
struct Date {
    int year = 0;
    int month = 0;
    int day = 0;

    /// Empty unless the text has the exact shape and names a real calendar day.
    static std::optional<Date> parse(std::string_view text);

    auto operator<=>(const Date&) const = default;

    std::string str() const;
};

}  // namespace ruleprune
