#include "madn/records.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>

#include "madn/util.hpp"

namespace madn {

namespace {
constexpr std::string_view kHeader = "date,origin,entity,count";

bool valid_code(std::string_view code) {
    if (code.empty()) return false;
    for (char c : code)
        if (c == ',' || c == '\n' || c == ' ') return false;
    return true;
}
}  // namespace

void CountryRegistry::add_entity(std::string_view entity, std::string_view code,
                                 std::string_view label) {
    if (entity.empty() || !valid_code(code))
        throw ConfigError("bad registry entry: '" + std::string(entity) + "'");
    auto [it, inserted] =
        entries_.emplace(std::string(entity), Entry{std::string(code), std::string(label)});
    if (!inserted && it->second.code != code)
        throw ConfigError("entity '" + std::string(entity) + "' registered for both " +
                          it->second.code + " and " + std::string(code));
    codes_.insert(std::string(code));
}

void CountryRegistry::add_code(std::string_view code) {
    if (!valid_code(code)) throw ConfigError("bad country code: '" + std::string(code) + "'");
    codes_.insert(std::string(code));
}

std::optional<std::string> CountryRegistry::resolve(std::string_view entity) const {
    auto it = entries_.find(std::string(entity));
    if (it == entries_.end()) return std::nullopt;
    return it->second.code;
}

CountryRegistry CountryRegistry::load(std::istream& in) {
    CountryRegistry reg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv = trim(line);
        if (sv.empty() || sv.front() == '#') continue;
        auto fields = split(sv, ',');
        if (fields.size() < 2 || fields.size() > 3)
            throw ParseError("registry row needs entity,code[,label]", lineno);
        try {
            reg.add_entity(trim(fields[0]), trim(fields[1]),
                           fields.size() == 3 ? trim(fields[2]) : std::string_view{});
        } catch (const ConfigError& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    return reg;
}

CountryRegistry CountryRegistry::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open registry file: " + path);
    return load(in);
}

void CountryRegistry::save(std::ostream& out) const {
    // Sorted for stable output.
    std::vector<std::pair<std::string, Entry>> rows(entries_.begin(), entries_.end());
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [entity, entry] : rows)
        out << entity << ',' << entry.code << ',' << entry.label << '\n';
}

std::vector<MentionRecord> parse_records(std::istream& in, const ParseOptions& opts,
                                         ParseReport* report) {
    if (!in) throw std::runtime_error("unreadable record stream");
    std::vector<MentionRecord> records;
    std::string line;
    std::size_t lineno = 0;
    bool saw_header = false;

    auto fail = [&](const std::string& msg) {
        if (opts.strict) throw ParseError(msg, lineno);
        if (report)
            report->warnings.push_back("line " + std::to_string(lineno) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (report) ++report->lines_read;
        std::string_view sv = trim(line);
        if (sv.empty()) continue;
        if (!saw_header && sv == kHeader) {
            saw_header = true;
            continue;
        }
        saw_header = true;
        auto fields = split(sv, ',');
        if (fields.size() != 4) {
            fail("expected 4 fields, got " + std::to_string(fields.size()));
            continue;
        }
        MentionRecord rec;
        try {
            rec.date = Date::parse(trim(fields[0]));
            rec.origin = std::string(trim(fields[1]));
            rec.entity = std::string(trim(fields[2]));
            rec.count = parse_double(trim(fields[3]));
        } catch (const ParseError& e) {
            fail(e.what());
            continue;
        }
        if (rec.origin.empty() || rec.entity.empty()) {
            fail("empty origin or entity");
            continue;
        }
        if (rec.count < 0) {
            fail("negative count");
            continue;
        }
        if (opts.window && !opts.window->contains(rec.date)) {
            fail("date " + rec.date.to_string() + " outside observation window");
            continue;
        }
        if (opts.registry && !opts.registry->has_code(rec.origin)) {
            fail("unknown origin country code '" + rec.origin + "'");
            continue;
        }
        records.push_back(std::move(rec));
        if (report) ++report->records_ok;
    }
    return records;
}

std::vector<MentionRecord> parse_records_file(const std::string& path, const ParseOptions& opts,
                                              ParseReport* report) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open record file: " + path);
    return parse_records(in, opts, report);
}

void serialize_records(const std::vector<MentionRecord>& records, std::ostream& out) {
    out << kHeader << '\n';
    for (const MentionRecord& r : records)
        out << r.date.to_string() << ',' << r.origin << ',' << r.entity << ','
            << format_double(r.count) << '\n';
}

}  // namespace madn
