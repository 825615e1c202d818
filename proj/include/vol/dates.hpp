#pragma once

#include <cstdint>
#include <cstdio>
#include <string>

#include "vol/errors.hpp"

namespace vol::dates {

// Proleptic Gregorian day count (days since 1970-01-01). The pair of
// conversions below is the standard civil-calendar algorithm; it exists only
// so synthetic series can carry valid ISO dates. No trading-calendar logic.
inline std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2u) / 5u + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

inline void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yr = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = static_cast<int>(yr + (m <= 2));
}

inline bool valid_civil(int y, int m, int d) {
    if (m < 1 || m > 12 || d < 1) return false;
    static constexpr int mdays[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    int dmax = mdays[m - 1];
    if (m == 2 && ((y % 4 == 0 && y % 100 != 0) || y % 400 == 0)) dmax = 29;
    return d <= dmax;
}

inline std::string format_iso(int y, int m, int d) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", y, m, d);
    return buf;
}

inline std::string iso_from_days(std::int64_t z) {
    int y, m, d;
    civil_from_days(z, y, m, d);
    return format_iso(y, m, d);
}

/// Parse an ISO-8601 (YYYY-MM-DD) or compact (YYYYMMDD) date into canonical
/// ISO form. Throws ParseError on anything else.
inline std::string parse_date(const std::string& cell) {
    auto digits = [](const std::string& s, size_t pos, size_t n) {
        for (size_t i = pos; i < pos + n; ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    int y = 0, m = 0, d = 0;
    if (cell.size() == 10 && cell[4] == '-' && cell[7] == '-' &&
        digits(cell, 0, 4) && digits(cell, 5, 2) && digits(cell, 8, 2)) {
        y = std::stoi(cell.substr(0, 4));
        m = std::stoi(cell.substr(5, 2));
        d = std::stoi(cell.substr(8, 2));
    } else if (cell.size() == 8 && digits(cell, 0, 8)) {
        y = std::stoi(cell.substr(0, 4));
        m = std::stoi(cell.substr(4, 2));
        d = std::stoi(cell.substr(6, 2));
    } else {
        throw ParseError("unparseable date '" + cell + "'");
    }
    if (!valid_civil(y, m, d)) throw ParseError("invalid calendar date '" + cell + "'");
    return format_iso(y, m, d);
}

}  // namespace vol::dates
