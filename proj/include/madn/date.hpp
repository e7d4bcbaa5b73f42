#ifndef MADN_DATE_HPP_
#define MADN_DATE_HPP_

#include <compare>
#include <string>
#include <string_view>

namespace madn {

// Calendar day, stored as days since 1970-01-01 (proleptic Gregorian).
class Date {
public:
    Date() = default;
    static Date from_ymd(int year, int month, int day);     // throws ConfigError
    static Date parse(std::string_view text);               // "YYYY-MM-DD", throws ParseError
    static Date from_serial(int days) { return Date(days); }

    int serial() const { return serial_; }
    std::string to_string() const;                          // "YYYY-MM-DD"

    Date& operator++() { ++serial_; return *this; }
    Date operator+(int days) const { return Date(serial_ + days); }
    int operator-(Date other) const { return serial_ - other.serial_; }
    auto operator<=>(const Date&) const = default;

private:
    explicit Date(int serial) : serial_(serial) {}
    int serial_ = 0;
};

// Inclusive range of days.
struct DateRange {
    Date from;
    Date to;
    bool contains(Date d) const { return from <= d && d <= to; }
    int days() const { return to - from + 1; }  // <= 0 means empty
};

}  // namespace madn

#endif  // MADN_DATE_HPP_
