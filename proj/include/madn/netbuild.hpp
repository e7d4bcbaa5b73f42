#ifndef MADN_NETBUILD_HPP_
#define MADN_NETBUILD_HPP_

#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "madn/ingest.hpp"
#include "madn/network.hpp"
#include "madn/records.hpp"

namespace madn {

// One day's unweighted directed mention structure.
struct DailyLayer {
    Date date;
    std::set<std::string> nodes;
    std::set<std::pair<std::string, std::string>> links;  // deduplicated, no self-loops
};

// Links c_i -> c_j for each record of origin c_i whose entity resolves to a
// country c_j != c_i. Every origin becomes a node even when none of its
// entities resolve. Records must already be top-k selected and share a date.
DailyLayer build_daily_layer(std::span<const MentionRecord> records,
                             const CountryRegistry& registry);

// Weight of a link = number of daily layers containing it. Node set is the
// union over days; nodes with no surviving links are kept.
Network superimpose(std::span<const DailyLayer> days);

// Extends both layers' node sets to their union (new nodes isolated) so the
// multiplex invariant holds: same codes, same order in both layers.
Multiplex assemble_multiplex(const Network& attention, const Network& disregard);

// Full per-day pipeline for one layer: group records by day (and by origin
// for attention), select top-k, build daily layers, superimpose.
Network build_layer(std::span<const MentionRecord> records, const CountryRegistry& registry,
                    const BuildConfig& config, LayerKind kind);

// Daily layers before superimposition, for inspection and tests.
std::vector<DailyLayer> build_daily_layers(std::span<const MentionRecord> records,
                                           const CountryRegistry& registry,
                                           const BuildConfig& config, LayerKind kind);

}  // namespace madn

#endif  // MADN_NETBUILD_HPP_
