// madn: build and analyze multiplex media attention / disregard networks.

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "madn/community.hpp"
#include "madn/dyadic.hpp"
#include "madn/embed.hpp"
#include "madn/ingest.hpp"
#include "madn/motifs.hpp"
#include "madn/netbuild.hpp"
#include "madn/netio.hpp"
#include "madn/pipeline.hpp"
#include "madn/records.hpp"
#include "madn/topology.hpp"
#include "madn/util.hpp"

namespace {

using namespace madn;
using json = nlohmann::ordered_json;

constexpr const char* kVersion = "madn 0.1.0";

void write_text(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

struct IngestArgs {
    std::string records, registry;
    int k = 10;
    double epsilon = 0.1;
    std::string from, to;
    bool lenient = false;
};

BuildConfig build_config_of(const IngestArgs& args) {
    BuildConfig cfg;
    cfg.k = args.k;
    cfg.epsilon = args.epsilon;
    cfg.window = {Date::parse(args.from), Date::parse(args.to)};
    cfg.validate();
    return cfg;
}

void add_ingest_options(CLI::App* cmd, IngestArgs& args) {
    cmd->add_option("--records", args.records, "record CSV file")->required();
    cmd->add_option("--registry", args.registry, "entity registry CSV file")->required();
    cmd->add_option("--k", args.k, "per-country, per-day top-k cutoff");
    cmd->add_option("--epsilon", args.epsilon, "disregard denominator smoothing");
    cmd->add_option("--from", args.from, "window start (YYYY-MM-DD)")->required();
    cmd->add_option("--to", args.to, "window end (YYYY-MM-DD)")->required();
    cmd->add_flag("--lenient", args.lenient, "skip malformed lines instead of failing");
}

std::vector<MentionRecord> load_records(const IngestArgs& args, const BuildConfig& cfg,
                                        const CountryRegistry& registry, ParseReport* report) {
    ParseOptions opts;
    opts.strict = !args.lenient;
    opts.registry = &registry;
    opts.window = cfg.window;
    return parse_records_file(args.records, opts, report);
}

int cmd_ingest(const IngestArgs& args) {
    auto registry = CountryRegistry::load_file(args.registry);
    auto cfg = build_config_of(args);
    ParseReport report;
    auto records = load_records(args, cfg, registry, &report);

    std::set<std::string> countries, entities;
    std::set<int> days;
    for (const auto& r : records) {
        countries.insert(r.origin);
        entities.insert(r.entity);
        days.insert(r.date.serial());
    }
    json j;
    j["records"] = records.size();
    j["lines_read"] = report.lines_read;
    j["countries"] = countries.size();
    j["entities"] = entities.size();
    j["days_with_records"] = days.size();
    j["window"] = {{"from", cfg.window.from.to_string()}, {"to", cfg.window.to.to_string()}};
    j["k"] = cfg.k;
    j["epsilon"] = cfg.epsilon;
    j["warnings"] = report.warnings;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_build(const IngestArgs& args, const std::string& layer, const std::string& out_path,
              const std::string& format_name) {
    auto registry = CountryRegistry::load_file(args.registry);
    auto cfg = build_config_of(args);
    auto records = load_records(args, cfg, registry, nullptr);

    LayerKind kind;
    if (layer == "attention")
        kind = LayerKind::attention;
    else if (layer == "disregard")
        kind = LayerKind::disregard;
    else
        throw ConfigError("--layer must be attention or disregard");

    Network net = build_layer(records, registry, cfg, kind);
    write_text(out_path, serialize_network(net, net_format_from_name(format_name)));
    std::cerr << "[madn] " << layer << " layer: " << net.node_count() << " nodes, "
              << net.link_count() << " links\n";
    return 0;
}

int cmd_synth(const SynthSpec& spec, int blocks, int block_size, const std::string& records_path,
              const std::string& registry_path) {
    SynthSpec full = spec;
    full.block_sizes.assign(blocks, block_size);
    SynthCorpus corpus = synth_generate(full);

    std::ofstream records_out(records_path, std::ios::binary);
    if (!records_out) throw std::runtime_error("cannot write " + records_path);
    serialize_records(corpus.records, records_out);

    std::ofstream registry_out(registry_path, std::ios::binary);
    if (!registry_out) throw std::runtime_error("cannot write " + registry_path);
    corpus.registry.save(registry_out);

    std::cerr << "[madn] synthetic corpus: " << corpus.records.size() << " records, "
              << corpus.codes.size() << " countries, " << full.days << " days\n";
    return 0;
}

int cmd_stats(const std::string& net_path) {
    std::cout << stats_json_text(read_network_file(net_path));
    return 0;
}

int cmd_centrality(const std::string& net_path, const std::string& metric, std::size_t top,
                   double damping) {
    PageRankOptions pr;
    pr.damping = damping;
    std::cout << centrality_csv_text(read_network_file(net_path), metric, top, pr);
    return 0;
}

int cmd_dyad_histogram(const std::string& a_path, const std::string& d_path, int bin,
                       const std::string& out_path) {
    Multiplex m = assemble_multiplex(read_network_file(a_path), read_network_file(d_path));
    write_text(out_path, histogram_csv_text(weight_joint_histogram(m.attention, m.disregard, bin)));
    return 0;
}

int cmd_pairwise(const std::string& a_path, const std::string& d_path,
                 const std::string& out_path) {
    Multiplex m = assemble_multiplex(read_network_file(a_path), read_network_file(d_path));
    write_text(out_path, pairwise_csv_text(pairwise_breakdown(m.attention, m.disregard)));
    return 0;
}

int cmd_backbone(const std::string& net_path, double alpha, const std::string& out_path) {
    Network net = read_network_file(net_path);
    Backbone backbone = extract_backbone(net, alpha);
    write_text(out_path, backbone_graphml_text(net, backbone));
    std::cerr << "[madn] backbone at alpha " << alpha << ": kept " << backbone.kept.size()
              << " of " << net.link_count() << " links\n";
    return 0;
}

int cmd_taxonomy(const std::string& net_path, double alpha, const std::string& out_path,
                 const std::string& profiles_path) {
    Network net = read_network_file(net_path);
    TaxonomyCensus census = taxonomy_census(net, extract_backbone(net, alpha));
    write_text(out_path, taxonomy_csv_text(census));
    if (!profiles_path.empty()) write_text(profiles_path, taxonomy_profiles_csv_text(census));
    return 0;
}

int cmd_motifs(const std::string& net_path, int samples, std::uint64_t seed, int swaps,
               int threads, const std::string& out_path) {
    MotifProfile profile = motif_zscores(read_network_file(net_path), samples, seed, swaps, threads);
    write_text(out_path, motif_profile_json_text(profile));
    return 0;
}

int cmd_colored_motifs(const std::string& a_path, const std::string& d_path, int samples,
                       std::uint64_t seed, int swaps, int threads, const std::string& out_path) {
    Multiplex m = assemble_multiplex(read_network_file(a_path), read_network_file(d_path));
    write_text(out_path, motif_profile_json_text(
                             colored_motif_zscores(m, samples, seed, swaps, threads)));
    return 0;
}

int cmd_communities(const std::string& net_path, double alpha, bool full, double tau, int trials,
                    std::uint64_t seed, const std::string& out_path,
                    const std::string& json_path) {
    Network net = read_network_file(net_path);
    std::optional<double> used_alpha;
    Network input = net;
    if (!full) {
        used_alpha = alpha;
        input = backbone_network(net, extract_backbone(net, alpha));
    }
    Partition partition = detect_communities(input, tau, seed, trials);
    write_text(out_path, communities_csv_text(input, partition));
    std::string sidecar = json_path;
    if (sidecar.empty() && !out_path.empty() && out_path != "-") sidecar = out_path + ".json";
    if (!sidecar.empty())
        write_text(sidecar, communities_json_text(partition, tau, trials, seed, used_alpha));
    std::cerr << "[madn] " << partition.module_count() << " communities, codelength "
              << partition.codelength << " bits\n";
    return 0;
}

int cmd_embed(const std::string& net_path, const WalkConfig& walk, const TrainConfig& train,
              const std::string& out_path) {
    Network net = read_network_file(net_path);
    EmbeddingMatrix emb = train_skipgram(generate_walks(net, walk), train);
    write_text(out_path, embedding_tsv_text(emb));
    std::cerr << "[madn] trained " << emb.vocab.size() << " vectors, final mean pair loss "
              << emb.final_loss << "\n";
    return 0;
}

int cmd_analogy(const std::string& tsv_path, const std::string& a, const std::string& b,
                const std::string& c, std::size_t top) {
    std::ifstream in(tsv_path);
    if (!in) throw std::runtime_error("cannot open " + tsv_path);
    EmbeddingMatrix emb = read_embedding_tsv(in);
    auto ranked = analogy(emb, a, b, c);
    std::cout << "rank,country,cosine\n";
    for (std::size_t i = 0; i < std::min(top, ranked.size()); ++i)
        std::cout << (i + 1) << ',' << ranked[i].code << ',' << format_double(ranked[i].cosine)
                  << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiplex media attention / disregard network toolkit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker thread cap (0 = hardware)");

    // ingest
    IngestArgs ingest_args;
    auto* ingest = app.add_subcommand("ingest", "parse and validate a record file");
    add_ingest_options(ingest, ingest_args);

    // build
    IngestArgs build_args;
    std::string build_layer_name = "attention", build_out, build_format = "graphml";
    auto* build = app.add_subcommand("build", "build one weighted layer from records");
    add_ingest_options(build, build_args);
    build->add_option("--layer", build_layer_name, "attention|disregard");
    build->add_option("--out", build_out, "output file (- for stdout)")->required();
    build->add_option("--format", build_format, "graphml|edgelist|dot");

    // synth
    SynthSpec synth_spec;
    int synth_blocks = 2, synth_block_size = 10;
    std::string synth_records = "records.csv", synth_registry = "registry.csv", synth_start;
    auto* synth = app.add_subcommand("synth", "generate a synthetic corpus with planted blocks");
    synth->add_option("--blocks", synth_blocks, "number of planted blocks");
    synth->add_option("--block-size", synth_block_size, "countries per block");
    synth->add_option("--within", synth_spec.within_rate, "within-block mention rate");
    synth->add_option("--cross", synth_spec.cross_rate, "cross-block mention rate");
    synth->add_option("--days", synth_spec.days, "number of days");
    synth->add_option("--entities", synth_spec.entities_per_country, "noise entities per country");
    synth->add_option("--seed", synth_spec.seed, "generator seed")->required();
    synth->add_option("--start", synth_start, "first day (YYYY-MM-DD), default 1970-01-01");
    synth->add_option("--records-out", synth_records, "output record CSV");
    synth->add_option("--registry-out", synth_registry, "output registry CSV");

    // stats
    std::string stats_path;
    auto* stats = app.add_subcommand("stats", "topological summary as JSON");
    stats->add_option("network", stats_path, "network file")->required();
    stats->add_flag("--json", "emit JSON (default and only format)");

    // centrality
    std::string centr_path, centr_metric = "in";
    std::size_t centr_top = 10;
    double centr_damping = 0.85;
    auto* centrality = app.add_subcommand("centrality", "ranked centrality CSV");
    centrality->add_option("network", centr_path, "network file")->required();
    centrality->add_option("--metric", centr_metric, "in|out|pagerank");
    centrality->add_option("--top", centr_top, "rows to emit (0 = all)");
    centrality->add_option("--damping", centr_damping, "pagerank damping");

    // dyad-histogram
    std::string dh_a, dh_d, dh_out;
    int dh_bin = 5;
    auto* dyad = app.add_subcommand("dyad-histogram", "joint weight histogram CSV");
    dyad->add_option("attention", dh_a, "attention network file")->required();
    dyad->add_option("disregard", dh_d, "disregard network file")->required();
    dyad->add_option("--bin", dh_bin, "bin size");
    dyad->add_flag("--csv", "emit CSV (default and only format)");
    dyad->add_option("--out", dh_out, "output CSV (- for stdout)");

    // pairwise
    std::string pw_a, pw_d, pw_out;
    auto* pairwise = app.add_subcommand("pairwise", "five-way pairwise breakdown CSV");
    pairwise->add_option("attention", pw_a, "attention network file")->required();
    pairwise->add_option("disregard", pw_d, "disregard network file")->required();
    pairwise->add_option("--out", pw_out, "output CSV (- for stdout)");

    // backbone
    std::string bb_path, bb_out;
    double bb_alpha = 0.05;
    auto* backbone = app.add_subcommand("backbone", "disparity-filter backbone");
    backbone->add_option("network", bb_path, "network file")->required();
    backbone->add_option("--alpha", bb_alpha, "significance threshold");
    backbone->add_option("--out", bb_out, "output GraphML (- for stdout)")->required();

    // taxonomy
    std::string tx_path, tx_out, tx_profiles;
    double tx_alpha = 0.05;
    auto* taxonomy = app.add_subcommand("taxonomy", "10-type pair significance census CSV");
    taxonomy->add_option("network", tx_path, "network file")->required();
    taxonomy->add_option("--alpha", tx_alpha, "significance threshold");
    taxonomy->add_flag("--csv", "emit CSV (default and only format)");
    taxonomy->add_option("--out", tx_out, "output CSV (- for stdout)");
    taxonomy->add_option("--profiles", tx_profiles, "per-country profile CSV");

    // motifs
    std::string mt_path, mt_out;
    int mt_samples = 5000, mt_swaps = 10;
    std::uint64_t mt_seed = 0;
    auto* motifs = app.add_subcommand("motifs", "triad census with null-model Z-scores");
    motifs->add_option("network", mt_path, "network file")->required();
    motifs->add_option("--samples", mt_samples, "null-model sample count");
    motifs->add_option("--seed", mt_seed, "null-model seed")->required();
    motifs->add_option("--swaps-per-link", mt_swaps, "double-edge swaps per link");
    motifs->add_flag("--json", "emit JSON (default and only format)");
    motifs->add_option("--out", mt_out, "output JSON (- for stdout)");

    // colored-motifs
    std::string cm_a, cm_d, cm_out;
    int cm_samples = 5000, cm_swaps = 10;
    std::uint64_t cm_seed = 0;
    auto* colored = app.add_subcommand("colored-motifs", "colored triad census over the multiplex");
    colored->add_option("attention", cm_a, "attention network file")->required();
    colored->add_option("disregard", cm_d, "disregard network file")->required();
    colored->add_option("--samples", cm_samples, "null-model sample count");
    colored->add_option("--seed", cm_seed, "null-model seed")->required();
    colored->add_option("--swaps-per-link", cm_swaps, "double-edge swaps per link");
    colored->add_flag("--json", "emit JSON (default and only format)");
    colored->add_option("--out", cm_out, "output JSON (- for stdout)");

    // communities
    std::string co_path, co_out, co_json;
    double co_alpha = 0.05, co_tau = 0.15;
    int co_trials = 10;
    std::uint64_t co_seed = 0;
    bool co_full = false;
    auto* communities = app.add_subcommand("communities", "map-equation communities");
    communities->add_option("network", co_path, "network file")->required();
    communities->add_option("--alpha", co_alpha, "backbone threshold applied first");
    communities->add_flag("--full", co_full, "run on the full network, no backbone");
    communities->add_option("--tau", co_tau, "teleportation rate");
    communities->add_option("--trials", co_trials, "search restarts");
    communities->add_option("--seed", co_seed, "search seed")->required();
    communities->add_flag("--csv", "emit CSV (default and only format)");
    communities->add_option("--out", co_out, "output CSV (- for stdout)");
    communities->add_option("--json", co_json, "parameter/codelength sidecar JSON");

    // embed
    std::string em_path, em_out;
    WalkConfig em_walk;
    TrainConfig em_train;
    std::uint64_t em_seed = 0;
    auto* embed = app.add_subcommand("embed", "node2vec-style embeddings");
    embed->add_option("network", em_path, "network file")->required();
    embed->add_option("--dim", em_train.dimension, "embedding dimension");
    embed->add_option("--p", em_walk.return_param, "return parameter");
    embed->add_option("--q", em_walk.inout_param, "in-out parameter");
    embed->add_option("--walks", em_walk.walks_per_node, "walks per node");
    embed->add_option("--length", em_walk.walk_length, "walk length");
    embed->add_flag("--undirected", em_walk.undirected, "walk the undirected projection");
    embed->add_option("--window", em_train.window, "context window");
    embed->add_option("--negatives", em_train.negatives, "negative samples per pair");
    embed->add_option("--epochs", em_train.epochs, "training epochs");
    embed->add_option("--learning-rate", em_train.learning_rate, "initial learning rate");
    embed->add_option("--seed", em_seed, "walk/train seed")->required();
    embed->add_option("--out", em_out, "output TSV (- for stdout)")->required();

    // analogy
    std::string an_tsv, an_a, an_b, an_c;
    std::size_t an_top = 5;
    auto* analogy_cmd = app.add_subcommand("analogy", "rank countries by v(a)-v(b)+v(c)");
    analogy_cmd->add_option("embedding", an_tsv, "embedding TSV")->required();
    analogy_cmd->add_option("a", an_a)->required();
    analogy_cmd->add_option("b", an_b)->required();
    analogy_cmd->add_option("c", an_c)->required();
    analogy_cmd->add_option("--top", an_top, "rows to emit");

    // run
    std::string run_config;
    auto* run = app.add_subcommand("run", "run the full pipeline from a config file");
    run->add_option("config", run_config, "pipeline config file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ingest) return cmd_ingest(ingest_args);
        if (*build) return cmd_build(build_args, build_layer_name, build_out, build_format);
        if (*synth) {
            if (!synth_start.empty()) synth_spec.start = Date::parse(synth_start);
            return cmd_synth(synth_spec, synth_blocks, synth_block_size, synth_records,
                             synth_registry);
        }
        if (*stats) return cmd_stats(stats_path);
        if (*centrality) return cmd_centrality(centr_path, centr_metric, centr_top, centr_damping);
        if (*dyad) return cmd_dyad_histogram(dh_a, dh_d, dh_bin, dh_out);
        if (*pairwise) return cmd_pairwise(pw_a, pw_d, pw_out);
        if (*backbone) return cmd_backbone(bb_path, bb_alpha, bb_out);
        if (*taxonomy) return cmd_taxonomy(tx_path, tx_alpha, tx_out, tx_profiles);
        if (*motifs) return cmd_motifs(mt_path, mt_samples, mt_seed, mt_swaps, threads, mt_out);
        if (*colored)
            return cmd_colored_motifs(cm_a, cm_d, cm_samples, cm_seed, cm_swaps, threads, cm_out);
        if (*communities)
            return cmd_communities(co_path, co_alpha, co_full, co_tau, co_trials, co_seed, co_out,
                                   co_json);
        if (*embed) {
            em_walk.seed = em_seed;
            em_train.seed = derive_seed(em_seed, 1);
            return cmd_embed(em_path, em_walk, em_train, em_out);
        }
        if (*analogy_cmd) return cmd_analogy(an_tsv, an_a, an_b, an_c, an_top);
        if (*run) {
            PipelineResult result = run_pipeline_file(run_config, std::cerr, threads);
            return result.ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "madn: error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
