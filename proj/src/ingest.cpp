#include "madn/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "madn/util.hpp"

namespace madn {

void BuildConfig::validate() const {
    if (k < 1) throw ConfigError("k must be >= 1");
    if (!(epsilon > 0)) throw ConfigError("epsilon must be > 0");
    if (window.days() <= 0) throw ConfigError("observation window is empty");
}

double disregard_score(const DayCounts& day_counts, const std::string& target, double epsilon) {
    if (!(epsilon > 0)) throw ConfigError("epsilon must be > 0");
    double total = 0;
    for (const auto& [country, count] : day_counts) {
        if (count < 0) throw std::invalid_argument("negative mention count for " + country);
        total += count;
    }
    auto it = day_counts.find(target);
    double own = it == day_counts.end() ? 0.0 : it->second;
    return total / (own + epsilon);
}

std::vector<MentionRecord> top_k_attention(std::span<const MentionRecord> records, int k) {
    if (k < 1) throw ConfigError("k must be >= 1");
    for (const MentionRecord& r : records)
        if (r.origin != records.front().origin || r.date != records.front().date)
            throw std::invalid_argument("top_k_attention: records mix origins or dates");
    std::vector<MentionRecord> sorted(records.begin(), records.end());
    std::sort(sorted.begin(), sorted.end(), [](const MentionRecord& a, const MentionRecord& b) {
        if (a.count != b.count) return a.count > b.count;
        return a.entity < b.entity;
    });
    if (sorted.size() > static_cast<std::size_t>(k)) sorted.resize(k);
    return sorted;
}

std::vector<ScoredEntity> top_k_disregard(const std::map<std::string, DayCounts>& day_entity_counts,
                                          const std::string& target, int k, double epsilon) {
    if (k < 1) throw ConfigError("k must be >= 1");
    std::vector<ScoredEntity> scored;
    scored.reserve(day_entity_counts.size());
    for (const auto& [entity, counts] : day_entity_counts)
        scored.push_back({entity, disregard_score(counts, target, epsilon)});
    std::sort(scored.begin(), scored.end(), [](const ScoredEntity& a, const ScoredEntity& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.entity < b.entity;
    });
    if (scored.size() > static_cast<std::size_t>(k)) scored.resize(k);
    return scored;
}

void SynthSpec::validate() const {
    if (block_sizes.empty()) throw ConfigError("need at least one block");
    for (int s : block_sizes)
        if (s < 1) throw ConfigError("block sizes must be >= 1");
    int total = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
    if (total > 26 * 26) throw ConfigError("too many countries for two-letter codes");
    if (within_rate < 0 || within_rate > 1 || cross_rate < 0 || cross_rate > 1)
        throw ConfigError("mention rates must lie in [0,1]");
    if (days < 1) throw ConfigError("days must be >= 1");
    if (entities_per_country < 0) throw ConfigError("entities_per_country must be >= 0");
}

SynthCorpus synth_generate(const SynthSpec& spec) {
    spec.validate();
    SynthCorpus corpus;

    int n = std::accumulate(spec.block_sizes.begin(), spec.block_sizes.end(), 0);
    for (int i = 0; i < n; ++i) {
        std::string code{char('A' + i / 26), char('A' + i % 26)};
        corpus.codes.push_back(code);
        corpus.registry.add_entity("ctry" + code, code);
    }
    int block = 0, used = 0;
    for (int i = 0; i < n; ++i) {
        if (used == spec.block_sizes[block]) {
            ++block;
            used = 0;
        }
        corpus.block_of.push_back(block);
        ++used;
    }

    Rng rng(spec.seed);
    // Counts rounded to 4 decimals so the serialized form parses back exactly.
    auto draw_count = [&rng]() {
        double u = uniform_unit(rng);
        return std::round((0.05 + 0.95 * u) * 1e4) / 1e4;
    };

    for (int day = 0; day < spec.days; ++day) {
        Date date = spec.start + day;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                double rate =
                    corpus.block_of[i] == corpus.block_of[j] ? spec.within_rate : spec.cross_rate;
                double u = uniform_unit(rng);
                double count = draw_count();  // always drawn: record count independent of rate
                if (u < rate)
                    corpus.records.push_back(
                        {date, corpus.codes[i], "ctry" + corpus.codes[j], count});
            }
            for (int e = 0; e < spec.entities_per_country; ++e)
                corpus.records.push_back({date, corpus.codes[i],
                                          "topic" + corpus.codes[i] + std::to_string(e),
                                          draw_count()});
        }
    }
    return corpus;
}

}  // namespace madn
