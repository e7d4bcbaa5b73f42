#include "madn/netbuild.hpp"

#include <algorithm>
#include <stdexcept>

#include "madn/util.hpp"

namespace madn {

DailyLayer build_daily_layer(std::span<const MentionRecord> records,
                             const CountryRegistry& registry) {
    DailyLayer layer;
    if (records.empty()) return layer;
    layer.date = records.front().date;
    for (const MentionRecord& r : records) {
        if (r.date != layer.date)
            throw std::invalid_argument("build_daily_layer: records span multiple dates");
        layer.nodes.insert(r.origin);
        auto target = registry.resolve(r.entity);
        if (!target || *target == r.origin) continue;  // non-country entity or self-loop
        layer.nodes.insert(*target);
        layer.links.insert({r.origin, *target});
    }
    return layer;
}

Network superimpose(std::span<const DailyLayer> days) {
    if (days.empty()) throw ConfigError("superimpose: no daily layers (empty window?)");
    std::set<std::string> nodes;
    std::map<std::pair<std::string, std::string>, int> weight;
    for (const DailyLayer& day : days) {
        nodes.insert(day.nodes.begin(), day.nodes.end());
        for (const auto& link : day.links) ++weight[link];
    }
    Network net;
    for (const std::string& code : nodes) net.add_node(code);
    for (const auto& [link, days_seen] : weight)
        net.add_link(link.first, link.second, static_cast<double>(days_seen));
    return net;
}

Multiplex assemble_multiplex(const Network& attention, const Network& disregard) {
    std::set<std::string> all(attention.node_codes().begin(), attention.node_codes().end());
    all.insert(disregard.node_codes().begin(), disregard.node_codes().end());

    auto extend = [&all](const Network& src) {
        Network net;
        for (const std::string& code : all) net.add_node(code);
        src.for_each_link([&](NodeId u, NodeId v, double w) {
            net.add_link(src.code(u), src.code(v), w);
        });
        return net;
    };
    return Multiplex{extend(attention), extend(disregard)};
}

std::vector<DailyLayer> build_daily_layers(std::span<const MentionRecord> records,
                                           const CountryRegistry& registry,
                                           const BuildConfig& config, LayerKind kind) {
    config.validate();

    // Group in-window records by day, preserving deterministic order.
    std::map<Date, std::vector<MentionRecord>> by_day;
    for (const MentionRecord& r : records)
        if (config.window.contains(r.date)) by_day[r.date].push_back(r);

    std::vector<DailyLayer> layers;
    for (auto& [date, day_records] : by_day) {
        std::vector<MentionRecord> selected;
        if (kind == LayerKind::attention) {
            std::map<std::string, std::vector<MentionRecord>> by_origin;
            for (MentionRecord& r : day_records) by_origin[r.origin].push_back(std::move(r));
            for (auto& [origin, rs] : by_origin) {
                auto top = top_k_attention(rs, config.k);
                selected.insert(selected.end(), top.begin(), top.end());
            }
        } else {
            // Per-entity worldwide counts for this day; a country mentioning
            // the same entity in several records contributes their sum.
            std::map<std::string, DayCounts> entity_counts;
            std::set<std::string> active;
            for (const MentionRecord& r : day_records) {
                entity_counts[r.entity][r.origin] += r.count;
                active.insert(r.origin);
            }
            // Only countries whose media published that day select disregard
            // targets; a silent country has no daily layer presence (rule 1).
            for (const std::string& origin : active) {
                auto top = top_k_disregard(entity_counts, origin, config.k, config.epsilon);
                for (const ScoredEntity& se : top)
                    selected.push_back({date, origin, se.entity, se.score});
            }
        }
        layers.push_back(build_daily_layer(selected, registry));
        layers.back().date = date;  // build_daily_layer on empty selection leaves it default
    }
    return layers;
}

Network build_layer(std::span<const MentionRecord> records, const CountryRegistry& registry,
                    const BuildConfig& config, LayerKind kind) {
    auto layers = build_daily_layers(records, registry, config, kind);
    return superimpose(layers);
}

}  // namespace madn
