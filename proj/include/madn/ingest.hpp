#ifndef MADN_INGEST_HPP_
#define MADN_INGEST_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "madn/records.hpp"

namespace madn {

enum class LayerKind { attention, disregard };

struct BuildConfig {
    int k = 10;              // per-country, per-day selection cutoff
    double epsilon = 0.1;    // disregard denominator smoothing
    DateRange window;
    void validate() const;   // throws ConfigError
};

// Country -> count for one entity on one day. Countries absent from the map
// have count 0.
using DayCounts = std::map<std::string, double>;

// Disregard level of `target` toward an entity mentioned `day_counts`-wise:
// (sum of all counts) / (target's count + epsilon). Higher means the target
// ignored a story the rest of the world covered.
double disregard_score(const DayCounts& day_counts, const std::string& target, double epsilon);

// The k records with highest count among one country's records of one day.
// Ties break toward the lexicographically smaller entity id, so the result
// is unique regardless of input order. All records must share origin & date.
std::vector<MentionRecord> top_k_attention(std::span<const MentionRecord> records, int k);

struct ScoredEntity {
    std::string entity;
    double score;
    bool operator==(const ScoredEntity&) const = default;
};

// The k entities with highest disregard score for `target` among all
// entities mentioned that day. Same tie-break rule as top_k_attention.
std::vector<ScoredEntity> top_k_disregard(const std::map<std::string, DayCounts>& day_entity_counts,
                                          const std::string& target, int k, double epsilon);

// Synthetic corpus with planted block structure, for pipeline tests.
struct SynthSpec {
    std::vector<int> block_sizes;     // countries per block
    double within_rate = 0.9;         // P(country mentions a same-block country per day)
    double cross_rate = 0.05;         // P(... different-block ...)
    int days = 30;
    int entities_per_country = 2;     // extra non-country entities each country covers daily
    std::uint64_t seed = 0;
    Date start = Date::from_serial(0);
    void validate() const;            // throws ConfigError
};

struct SynthCorpus {
    std::vector<MentionRecord> records;
    CountryRegistry registry;
    std::vector<int> block_of;        // block index per country, aligned with codes
    std::vector<std::string> codes;   // generated country codes, sorted
};

// Deterministic per seed, bit-for-bit.
SynthCorpus synth_generate(const SynthSpec& spec);

}  // namespace madn

#endif  // MADN_INGEST_HPP_
