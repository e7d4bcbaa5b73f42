#ifndef MADN_RECORDS_HPP_
#define MADN_RECORDS_HPP_

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "madn/date.hpp"

namespace madn {

// One aggregated mention: media of `origin` mentioned `entity` on `date`
// with normalized article count `count`.
struct MentionRecord {
    Date date;
    std::string origin;   // ISO 3166-1 alpha-2
    std::string entity;   // opaque entity identifier
    double count = 0;     // >= 0
    bool operator==(const MentionRecord&) const = default;
};

// Static entity -> country resolution plus the country-code universe.
// Entities absent from the mapping are non-country entities.
class CountryRegistry {
public:
    // Registers `entity` as the country entity for `code`. An entity id may
    // be registered once; re-registration with a different code throws.
    void add_entity(std::string_view entity, std::string_view code, std::string_view label = {});
    void add_code(std::string_view code);  // code with no entity of its own

    std::optional<std::string> resolve(std::string_view entity) const;
    bool has_code(std::string_view code) const { return codes_.count(std::string(code)) > 0; }
    const std::set<std::string>& codes() const { return codes_; }

    static CountryRegistry load(std::istream& in);             // CSV entity,code,label
    static CountryRegistry load_file(const std::string& path);
    void save(std::ostream& out) const;

private:
    struct Entry {
        std::string code;
        std::string label;
    };
    std::unordered_map<std::string, Entry> entries_;
    std::set<std::string> codes_;
};

struct ParseOptions {
    bool strict = true;                    // false: skip malformed lines, collect warnings
    const CountryRegistry* registry = nullptr;  // when set, origins must be known codes
    std::optional<DateRange> window;       // when set, records outside are rejected
};

struct ParseReport {
    std::vector<std::string> warnings;     // lenient mode only, "line N: ..."
    std::size_t lines_read = 0;
    std::size_t records_ok = 0;
};

// Record file: UTF-8 CSV with header "date,origin,entity,count".
std::vector<MentionRecord> parse_records(std::istream& in, const ParseOptions& opts = {},
                                         ParseReport* report = nullptr);
std::vector<MentionRecord> parse_records_file(const std::string& path,
                                              const ParseOptions& opts = {},
                                              ParseReport* report = nullptr);

// Inverse of parse_records: parse(serialize(rs)) == rs for any valid list.
void serialize_records(const std::vector<MentionRecord>& records, std::ostream& out);

}  // namespace madn

#endif  // MADN_RECORDS_HPP_
