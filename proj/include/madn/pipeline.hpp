#ifndef MADN_PIPELINE_HPP_
#define MADN_PIPELINE_HPP_

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "madn/community.hpp"
#include "madn/dyadic.hpp"
#include "madn/embed.hpp"
#include "madn/motifs.hpp"
#include "madn/network.hpp"
#include "madn/topology.hpp"

namespace madn {

// Deterministic report emitters shared by the CLI subcommands and the
// pipeline runner. Byte-identical output for identical inputs.
std::string stats_json_text(const Network& net);
// Kept links only, annotated with both endpoint alphas and significance
// flags; loads back as a plain weighted network (extra keys are ignored).
std::string backbone_graphml_text(const Network& net, const Backbone& backbone);
std::string centrality_csv_text(const Network& net, const std::string& metric, std::size_t top,
                                const PageRankOptions& pr = {});
std::string centrality_table_csv_text(const Network& net, const PageRankOptions& pr = {});
std::string histogram_csv_text(const WeightJointHistogram& hist);
std::string pairwise_csv_text(const PairwiseBreakdown& breakdown);
std::string taxonomy_csv_text(const TaxonomyCensus& census);
std::string taxonomy_profiles_csv_text(const TaxonomyCensus& census);
std::string motif_profile_json_text(const MotifProfile& profile);
std::string communities_csv_text(const Network& net, const Partition& partition);
std::string communities_json_text(const Partition& partition, double tau, int trials,
                                  std::uint64_t seed, std::optional<double> backbone_alpha);
std::string embedding_tsv_text(const EmbeddingMatrix& embedding);

// Flat key-value configuration with [section] headers, '#'/';' comments.
class KeyValueConfig {
public:
    static KeyValueConfig parse(std::istream& in);
    static KeyValueConfig parse_file(const std::string& path);

    std::optional<std::string> get(const std::string& section, const std::string& key) const;
    std::string require(const std::string& section, const std::string& key) const;
    std::string get_or(const std::string& section, const std::string& key,
                       const std::string& fallback) const;
    double get_double(const std::string& section, const std::string& key, double fallback) const;
    long long get_int(const std::string& section, const std::string& key,
                      long long fallback) const;
    bool get_bool(const std::string& section, const std::string& key, bool fallback) const;

    using Sections = std::map<std::string, std::map<std::string, std::string>>;
    const Sections& sections() const { return sections_; }

    void set(const std::string& section, const std::string& key, const std::string& value);

private:
    Sections sections_;
};

struct PipelineResult {
    bool ok = false;
    std::string failed_stage;  // empty when ok
    std::vector<std::string> artifacts;
};

// Runs the requested stages (config [stages] run = all | comma list) over
// the inputs named in [input]; writes every artifact plus manifest.json into
// the configured output directory. Any stage error aborts the run; partial
// outputs stay on disk and the manifest records the failure.
PipelineResult run_pipeline(const KeyValueConfig& config, std::ostream& log, int threads = 0);
PipelineResult run_pipeline_file(const std::string& config_path, std::ostream& log,
                                 int threads = 0);

}  // namespace madn

#endif  // MADN_PIPELINE_HPP_
