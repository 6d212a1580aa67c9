#pragma once

// Test-side interpreter for generated check lists. Implements the meaning of
// every check kind directly on C++ strings, independent of the script text
// the code generator emits, so routines can be evaluated against oracles.

#include "formgen/codegen.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <string>

namespace formgen::testsupport {

inline bool is_integer_text(const std::string& value) {
    static const std::regex re("^[+-]?[0-9]+$");
    return std::regex_match(value, re);
}

inline bool is_positive_integer_text(const std::string& value) {
    if (!is_integer_text(value))
        return false;
    if (value[0] == '-')
        return false;
    return std::any_of(value.begin(), value.end(), [](char c) { return c >= '1' && c <= '9'; });
}

inline bool is_decimal_text(const std::string& value) {
    static const std::regex re("^[+-]?[0-9]+(\\.[0-9]+)?$");
    return std::regex_match(value, re);
}

inline bool is_plausible_date(const std::string& value) {
    static const std::regex slash("^([0-9]{1,2})/([0-9]{1,2})/([0-9]{1,4})$");
    static const std::regex dash("^([0-9]{4})-([0-9]{1,2})-([0-9]{1,2})$");
    std::smatch m;
    int month = 0, day = 0;
    if (std::regex_match(value, m, slash)) {
        month = std::stoi(m[1]);
        day = std::stoi(m[2]);
    } else if (std::regex_match(value, m, dash)) {
        month = std::stoi(m[2]);
        day = std::stoi(m[3]);
    } else {
        return false;
    }
    return month >= 1 && month <= 12 && day >= 1 && day <= 31;
}

inline std::size_t digit_count(const std::string& value) {
    return static_cast<std::size_t>(
        std::count_if(value.begin(), value.end(),
                      [](unsigned char c) { return std::isdigit(c) != 0; }));
}

inline std::size_t fraction_digit_count(const std::string& value) {
    auto dot = value.find('.');
    if (dot == std::string::npos)
        return 0;
    return digit_count(value.substr(dot + 1));
}

/// True when `value` passes the single check.
inline bool check_accepts(const ValidatorCheck& check, const std::string& value) {
    switch (check.kind) {
    case CheckKind::length:
        return value.size() == static_cast<std::size_t>(std::stoi(check.parameter));
    case CheckKind::min_length:
        return value.size() >= static_cast<std::size_t>(std::stoi(check.parameter));
    case CheckKind::max_length:
        return value.size() <= static_cast<std::size_t>(std::stoi(check.parameter));
    case CheckKind::pattern:
        return std::regex_match(value, std::regex(check.parameter));
    case CheckKind::enumeration:
        return std::find(check.values.begin(), check.values.end(), value) !=
               check.values.end();
    case CheckKind::total_digits:
        return digit_count(value) <= static_cast<std::size_t>(std::stoi(check.parameter));
    case CheckKind::fraction_digits:
        return fraction_digit_count(value) <=
               static_cast<std::size_t>(std::stoi(check.parameter));
    case CheckKind::integer_format:
        return is_integer_text(value);
    case CheckKind::positive_integer_format:
        return is_positive_integer_text(value);
    case CheckKind::decimal_format:
        return is_decimal_text(value);
    case CheckKind::boolean_format:
        return value == "true" || value == "false";
    case CheckKind::date_time_format:
        return is_plausible_date(value);
    }
    return false;
}

/// True when `value` passes every check of the routine (the routine writes
/// "Bad Input" exactly when this is false).
inline bool routine_accepts(const ScriptRoutine& routine, const std::string& value) {
    for (const ValidatorCheck& check : routine.checks)
        if (!check_accepts(check, value))
            return false;
    return true;
}

} // namespace formgen::testsupport
