#include "madn/date.hpp"

#include <cstdio>

#include "madn/util.hpp"

namespace madn {
namespace {

// Days-from-civil / civil-from-days, Howard Hinnant's branchless algorithms.
long days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const long era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<long>(doe) - 719468;
}

void civil_from_days(long z, int& y, int& m, int& d) {
    z += 719468;
    const long era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const long yy = static_cast<long>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = static_cast<int>(yy + (m <= 2));
}

int days_in_month(int year, int month) {
    static const int table[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month == 2) {
        bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
        return leap ? 29 : 28;
    }
    return table[month - 1];
}

}  // namespace

Date Date::from_ymd(int year, int month, int day) {
    if (month < 1 || month > 12 || day < 1 || day > days_in_month(year, month))
        throw ConfigError("invalid calendar day");
    return Date(static_cast<int>(days_from_civil(year, month, day)));
}

Date Date::parse(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-')
        throw ParseError("bad date (want YYYY-MM-DD): '" + std::string(text) + "'");
    auto digits = [&](int from, int len) {
        int v = 0;
        for (int i = from; i < from + len; ++i) {
            char c = text[i];
            if (c < '0' || c > '9')
                throw ParseError("bad date (want YYYY-MM-DD): '" + std::string(text) + "'");
            v = v * 10 + (c - '0');
        }
        return v;
    };
    int y = digits(0, 4), m = digits(5, 2), d = digits(8, 2);
    try {
        return from_ymd(y, m, d);
    } catch (const ConfigError&) {
        throw ParseError("impossible date: '" + std::string(text) + "'");
    }
}

std::string Date::to_string() const {
    int y, m, d;
    civil_from_days(serial_, y, m, d);
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", y, m, d);
    return buf;
}

}  // namespace madn
