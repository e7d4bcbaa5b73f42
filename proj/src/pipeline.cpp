#include "madn/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "madn/ingest.hpp"
#include "madn/netbuild.hpp"
#include "madn/netio.hpp"
#include "madn/records.hpp"
#include "madn/util.hpp"

namespace madn {

using json = nlohmann::ordered_json;

namespace {

json double_or_null(double v) {
    if (std::isnan(v)) return nullptr;
    return v;
}

std::string iso_utc_now() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

std::string stats_json_text(const Network& net) {
    TopologySummary s = summary(net);
    json j;
    j["n_nodes"] = s.n_nodes;
    j["n_links"] = s.n_links;
    j["mean_degree"] = s.mean_degree;
    j["clustering"] = double_or_null(s.clustering);
    j["assortativity"] = double_or_null(s.assortativity);
    j["scc_fraction"] = s.scc_fraction;
    j["mean_shortest_path"] = s.mean_shortest_path;
    j["reciprocity"] = s.reciprocity;
    j["conventions"] = {
        {"clustering",
         "mean local clustering coefficient on the undirected unweighted projection; "
         "nodes of projected degree < 2 contribute 0"},
        {"assortativity",
         "Pearson correlation of endpoint degrees over the undirected projection's edges"},
        {"mean_shortest_path",
         "unweighted directed distances over ordered pairs inside the largest strongly "
         "connected component"},
    };
    return j.dump(2) + "\n";
}

std::string backbone_graphml_text(const Network& net, const Backbone& backbone) {
    auto escape = [](const std::string& s) {
        std::string out;
        for (char c : s) {
            switch (c) {
                case '&': out += "&amp;"; break;
                case '<': out += "&lt;"; break;
                case '>': out += "&gt;"; break;
                case '"': out += "&quot;"; break;
                case '\'': out += "&apos;"; break;
                default: out += c;
            }
        }
        return out;
    };
    std::vector<const LinkSignificance*> kept = backbone.kept;
    std::sort(kept.begin(), kept.end(),
              [&](const LinkSignificance* a, const LinkSignificance* b) {
                  return std::make_pair(net.code(a->from), net.code(a->to)) <
                         std::make_pair(net.code(b->from), net.code(b->to));
              });
    std::vector<std::string> nodes = net.node_codes();
    std::sort(nodes.begin(), nodes.end());

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"w\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n"
        << "  <key id=\"as\" for=\"edge\" attr.name=\"alpha_sender\" attr.type=\"double\"/>\n"
        << "  <key id=\"ar\" for=\"edge\" attr.name=\"alpha_receiver\" attr.type=\"double\"/>\n"
        << "  <key id=\"ss\" for=\"edge\" attr.name=\"sig_to_sender\" attr.type=\"boolean\"/>\n"
        << "  <key id=\"sr\" for=\"edge\" attr.name=\"sig_to_receiver\" attr.type=\"boolean\"/>\n"
        << "  <graph edgedefault=\"directed\">\n";
    for (const std::string& code : nodes) out << "    <node id=\"" << escape(code) << "\"/>\n";
    for (const LinkSignificance* link : kept) {
        out << "    <edge source=\"" << escape(net.code(link->from)) << "\" target=\""
            << escape(net.code(link->to)) << "\">"
            << "<data key=\"w\">" << format_double(link->weight) << "</data>"
            << "<data key=\"as\">" << format_double(link->alpha_sender) << "</data>"
            << "<data key=\"ar\">" << format_double(link->alpha_receiver) << "</data>"
            << "<data key=\"ss\">" << (link->sig_to_sender ? "true" : "false") << "</data>"
            << "<data key=\"sr\">" << (link->sig_to_receiver ? "true" : "false") << "</data>"
            << "</edge>\n";
    }
    out << "  </graph>\n</graphml>\n";
    return out.str();
}

namespace {

std::vector<std::size_t> ranked_order(const Network& net, const std::vector<double>& value) {
    std::vector<std::size_t> order(net.node_count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (value[a] != value[b]) return value[a] > value[b];
        return net.code(NodeId(a)) < net.code(NodeId(b));
    });
    return order;
}

}  // namespace

std::string centrality_csv_text(const Network& net, const std::string& metric, std::size_t top,
                                const PageRankOptions& pr) {
    std::vector<double> value(net.node_count());
    bool integral = true;
    if (metric == "in" || metric == "out") {
        auto degrees = degree_centrality(net);
        for (std::size_t i = 0; i < degrees.size(); ++i)
            value[i] = double(metric == "in" ? degrees[i].in : degrees[i].out);
    } else if (metric == "pagerank") {
        value = pagerank(net, pr);
        integral = false;
    } else {
        throw ConfigError("unknown centrality metric '" + metric + "' (want in|out|pagerank)");
    }
    auto order = ranked_order(net, value);
    std::ostringstream out;
    out << "rank,country,value\n";
    std::size_t limit = top == 0 ? order.size() : std::min(top, order.size());
    for (std::size_t r = 0; r < limit; ++r) {
        std::size_t i = order[r];
        out << (r + 1) << ',' << net.code(NodeId(i)) << ',';
        if (integral)
            out << std::int64_t(value[i]);
        else
            out << format_double(value[i]);
        out << '\n';
    }
    return out.str();
}

std::string centrality_table_csv_text(const Network& net, const PageRankOptions& pr) {
    auto degrees = degree_centrality(net);
    auto scores = pagerank(net, pr);
    std::vector<std::size_t> order(net.node_count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return net.code(NodeId(a)) < net.code(NodeId(b));
    });
    std::ostringstream out;
    out << "country,k_in,k_out,pagerank\n";
    for (std::size_t i : order)
        out << net.code(NodeId(i)) << ',' << degrees[i].in << ',' << degrees[i].out << ','
            << format_double(scores[i]) << '\n';
    return out.str();
}

std::string histogram_csv_text(const WeightJointHistogram& hist) {
    std::ostringstream out;
    out << "attention_bin,disregard_bin,count\n";
    for (const auto& [cell, count] : hist.cells)
        out << cell.first << ',' << cell.second << ',' << count << '\n';
    return out.str();
}

std::string pairwise_csv_text(const PairwiseBreakdown& breakdown) {
    std::ostringstream out;
    out << "category,count,share\n";
    std::size_t total = breakdown.total();
    for (PairKind kind : kAllPairKinds) {
        std::size_t count = breakdown.counts.at(kind);
        double share = total == 0 ? 0.0 : double(count) / double(total);
        out << to_string(kind) << ',' << count << ',' << format_double(share) << '\n';
    }
    return out.str();
}

std::string taxonomy_csv_text(const TaxonomyCensus& census) {
    std::ostringstream out;
    out << "label,count,example_pairs\n";
    for (const auto& [label, count] : census.counts) {
        out << label.notation_utf8() << ',' << count << ',';
        auto it = census.examples.find(label);
        if (it != census.examples.end()) {
            bool first = true;
            for (const auto& [a, b] : it->second) {
                if (!first) out << ';';
                out << a << '-' << b;
                first = false;
            }
        }
        out << '\n';
    }
    return out.str();
}

std::string taxonomy_profiles_csv_text(const TaxonomyCensus& census) {
    std::ostringstream out;
    out << "country,label,count\n";
    for (const auto& [country, profile] : census.country_profile)
        for (const auto& [label, count] : profile)
            out << country << ',' << label.notation_utf8() << ',' << count << '\n';
    return out.str();
}

std::string motif_profile_json_text(const MotifProfile& profile) {
    json j;
    j["n_samples"] = profile.n_samples;
    j["seed"] = profile.seed;
    j["swaps_per_link"] = profile.swaps_per_link;
    j["p_threshold"] = profile.p_threshold;
    j["min_abs_z"] = profile.min_abs_z ? json(*profile.min_abs_z) : json(nullptr);
    j["stalled_samples"] = profile.stalled_samples;
    j["pair_order"] = {"0>1", "0>2", "1>0", "1>2", "2>0", "2>1"};
    j["classes"] = json::array();
    for (const MotifStats& c : profile.classes) {
        json row;
        row["id"] = c.id;
        row["signature"] = c.signature;
        if (!c.name.empty()) row["name"] = c.name;
        row["observed"] = c.observed;
        row["null_mean"] = c.null_mean;
        row["null_std"] = c.null_std;
        row["z"] = c.z ? json(*c.z) : json(nullptr);
        row["p"] = c.p;
        row["significant"] = c.significant;
        row["low_count"] = c.low_count;
        j["classes"].push_back(std::move(row));
    }
    return j.dump(2) + "\n";
}

std::string communities_csv_text(const Network& net, const Partition& partition) {
    std::vector<std::size_t> order(net.node_count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return net.code(NodeId(a)) < net.code(NodeId(b));
    });
    std::ostringstream out;
    out << "country,module\n";
    for (std::size_t i : order)
        out << net.code(NodeId(i)) << ',' << partition.assignment[i] << '\n';
    return out.str();
}

std::string communities_json_text(const Partition& partition, double tau, int trials,
                                  std::uint64_t seed, std::optional<double> backbone_alpha) {
    json j;
    j["codelength_bits"] = partition.codelength;
    j["modules"] = partition.module_count();
    j["teleport"] = tau;
    j["trials"] = trials;
    j["seed"] = seed;
    j["backbone_alpha"] = backbone_alpha ? json(*backbone_alpha) : json(nullptr);
    return j.dump(2) + "\n";
}

std::string embedding_tsv_text(const EmbeddingMatrix& embedding) {
    std::ostringstream out;
    write_embedding_tsv(embedding, out);
    return out.str();
}

KeyValueConfig KeyValueConfig::parse(std::istream& in) {
    KeyValueConfig cfg;
    std::string line, section;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv = trim(line);
        if (sv.empty() || sv.front() == '#' || sv.front() == ';') continue;
        if (sv.front() == '[') {
            if (sv.back() != ']') throw ParseError("unterminated section header", lineno);
            section = std::string(trim(sv.substr(1, sv.size() - 2)));
            if (section.empty()) throw ParseError("empty section name", lineno);
            continue;
        }
        auto eq = sv.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected key = value", lineno);
        std::string key(trim(sv.substr(0, eq)));
        std::string value(trim(sv.substr(eq + 1)));
        if (key.empty()) throw ParseError("empty key", lineno);
        cfg.sections_[section][key] = value;
    }
    return cfg;
}

KeyValueConfig KeyValueConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    return parse(in);
}

std::optional<std::string> KeyValueConfig::get(const std::string& section,
                                               const std::string& key) const {
    auto sit = sections_.find(section);
    if (sit == sections_.end()) return std::nullopt;
    auto kit = sit->second.find(key);
    if (kit == sit->second.end()) return std::nullopt;
    return kit->second;
}

std::string KeyValueConfig::require(const std::string& section, const std::string& key) const {
    auto v = get(section, key);
    if (!v) throw ConfigError("missing required configuration field [" + section + "] " + key);
    return *v;
}

std::string KeyValueConfig::get_or(const std::string& section, const std::string& key,
                                   const std::string& fallback) const {
    auto v = get(section, key);
    return v ? *v : fallback;
}

double KeyValueConfig::get_double(const std::string& section, const std::string& key,
                                  double fallback) const {
    auto v = get(section, key);
    return v ? parse_double(*v) : fallback;
}

long long KeyValueConfig::get_int(const std::string& section, const std::string& key,
                                  long long fallback) const {
    auto v = get(section, key);
    return v ? parse_int(*v) : fallback;
}

bool KeyValueConfig::get_bool(const std::string& section, const std::string& key,
                              bool fallback) const {
    auto v = get(section, key);
    if (!v) return fallback;
    if (*v == "true" || *v == "1" || *v == "yes") return true;
    if (*v == "false" || *v == "0" || *v == "no") return false;
    throw ConfigError("bad boolean for [" + section + "] " + key + ": '" + *v + "'");
}

void KeyValueConfig::set(const std::string& section, const std::string& key,
                         const std::string& value) {
    sections_[section][key] = value;
}

namespace {

struct PipelineContext {
    const KeyValueConfig& cfg;
    std::filesystem::path outdir;
    int threads;
    std::optional<Multiplex> multiplex;
    json manifest;
    std::vector<std::string> artifacts;

    std::uint64_t require_seed(const std::string& section) const {
        // Pipeline runs must be fully reproducible from the config alone, so
        // randomized stages may not fall back to wall-clock seeding.
        return std::uint64_t(parse_int(cfg.require(section, "seed")));
    }

    void write_artifact(const std::string& name, const std::string& content) {
        std::ofstream out(outdir / name, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + (outdir / name).string());
        out << content;
        artifacts.push_back(name);
        manifest["stages"].back()["artifacts"].push_back(name);
    }

    const Multiplex& get_multiplex() {
        if (!multiplex) {
            auto a_path = outdir / "attention.graphml";
            auto d_path = outdir / "disregard.graphml";
            if (!std::filesystem::exists(a_path) || !std::filesystem::exists(d_path))
                throw std::runtime_error(
                    "networks not available: run the build stage first (or keep its outputs)");
            multiplex =
                assemble_multiplex(read_network_file(a_path.string()),
                                   read_network_file(d_path.string()));
        }
        return *multiplex;
    }
};

void stage_build(PipelineContext& ctx) {
    const auto& cfg = ctx.cfg;
    std::string records_path = cfg.require("input", "records");
    std::string registry_path = cfg.require("input", "registry");

    CountryRegistry registry = CountryRegistry::load_file(registry_path);
    BuildConfig build;
    build.k = int(cfg.get_int("build", "k", 10));
    build.epsilon = cfg.get_double("build", "epsilon", 0.1);
    build.window = {Date::parse(cfg.require("build", "from")),
                    Date::parse(cfg.require("build", "to"))};
    build.validate();

    ParseOptions opts;
    opts.registry = &registry;
    opts.window = build.window;
    auto records = parse_records_file(records_path, opts);

    Network attention = build_layer(records, registry, build, LayerKind::attention);
    Network disregard = build_layer(records, registry, build, LayerKind::disregard);
    ctx.multiplex = assemble_multiplex(attention, disregard);

    ctx.write_artifact("attention.graphml",
                       serialize_network(ctx.multiplex->attention, NetFormat::graphml));
    ctx.write_artifact("disregard.graphml",
                       serialize_network(ctx.multiplex->disregard, NetFormat::graphml));
}

void stage_stats(PipelineContext& ctx) {
    const Multiplex& m = ctx.get_multiplex();
    ctx.write_artifact("stats_attention.json", stats_json_text(m.attention));
    ctx.write_artifact("stats_disregard.json", stats_json_text(m.disregard));
}

void stage_centrality(PipelineContext& ctx) {
    const Multiplex& m = ctx.get_multiplex();
    ctx.write_artifact("centrality_attention.csv", centrality_table_csv_text(m.attention));
    ctx.write_artifact("centrality_disregard.csv", centrality_table_csv_text(m.disregard));
}

void stage_dyadic(PipelineContext& ctx) {
    const Multiplex& m = ctx.get_multiplex();
    int bin = int(ctx.cfg.get_int("dyadic", "bin", 5));
    ctx.write_artifact("dyad_histogram.csv",
                       histogram_csv_text(weight_joint_histogram(m.attention, m.disregard, bin)));
    ctx.write_artifact("pairwise.csv",
                       pairwise_csv_text(pairwise_breakdown(m.attention, m.disregard)));
}

double backbone_alpha_of(const KeyValueConfig& cfg) {
    return cfg.get_double("backbone", "alpha", 0.05);
}

void stage_backbone(PipelineContext& ctx) {
    const Multiplex& m = ctx.get_multiplex();
    double alpha = backbone_alpha_of(ctx.cfg);
    for (auto [net, name] : {std::pair{&m.attention, "attention"}, {&m.disregard, "disregard"}}) {
        Backbone backbone = extract_backbone(*net, alpha);
        ctx.write_artifact(std::string("backbone_") + name + ".graphml",
                           backbone_graphml_text(*net, backbone));
    }
}

void stage_taxonomy(PipelineContext& ctx) {
    const Multiplex& m = ctx.get_multiplex();
    double alpha = backbone_alpha_of(ctx.cfg);
    for (auto [net, name] : {std::pair{&m.attention, "attention"}, {&m.disregard, "disregard"}}) {
        TaxonomyCensus census = taxonomy_census(*net, extract_backbone(*net, alpha));
        ctx.write_artifact(std::string("taxonomy_") + name + ".csv", taxonomy_csv_text(census));
        ctx.write_artifact(std::string("taxonomy_profiles_") + name + ".csv",
                           taxonomy_profiles_csv_text(census));
    }
}

void stage_motifs(PipelineContext& ctx) {
    const Multiplex& m = ctx.get_multiplex();
    int samples = int(ctx.cfg.get_int("motifs", "samples", 5000));
    int swaps = int(ctx.cfg.get_int("motifs", "swaps_per_link", 10));
    std::uint64_t seed = ctx.require_seed("motifs");
    ctx.write_artifact(
        "motifs_attention.json",
        motif_profile_json_text(motif_zscores(m.attention, samples, seed, swaps, ctx.threads)));
    ctx.write_artifact("motifs_disregard.json",
                       motif_profile_json_text(motif_zscores(m.disregard, samples,
                                                             derive_seed(seed, 1), swaps,
                                                             ctx.threads)));
}

void stage_colored_motifs(PipelineContext& ctx) {
    const Multiplex& m = ctx.get_multiplex();
    int samples = int(ctx.cfg.get_int("colored-motifs", "samples", 5000));
    int swaps = int(ctx.cfg.get_int("colored-motifs", "swaps_per_link", 10));
    std::uint64_t seed = ctx.require_seed("colored-motifs");
    ctx.write_artifact("colored_motifs.json",
                       motif_profile_json_text(
                           colored_motif_zscores(m, samples, seed, swaps, ctx.threads)));
}

void stage_communities(PipelineContext& ctx) {
    const Multiplex& m = ctx.get_multiplex();
    double tau = ctx.cfg.get_double("communities", "tau", 0.15);
    int trials = int(ctx.cfg.get_int("communities", "trials", 10));
    std::uint64_t seed = ctx.require_seed("communities");
    bool full = ctx.cfg.get_bool("communities", "full", false);

    std::optional<double> alpha;
    Network input = m.attention;
    if (!full) {
        alpha = backbone_alpha_of(ctx.cfg);
        input = backbone_network(m.attention, extract_backbone(m.attention, *alpha));
    }
    Partition partition = detect_communities(input, tau, seed, trials);
    ctx.write_artifact("communities.csv", communities_csv_text(input, partition));
    ctx.write_artifact("communities.json",
                       communities_json_text(partition, tau, trials, seed, alpha));
}

void stage_embed(PipelineContext& ctx) {
    const Multiplex& m = ctx.get_multiplex();
    std::uint64_t seed = ctx.require_seed("embed");
    WalkConfig walk;
    walk.return_param = ctx.cfg.get_double("embed", "p", 1.0);
    walk.inout_param = ctx.cfg.get_double("embed", "q", 1.0);
    walk.walks_per_node = int(ctx.cfg.get_int("embed", "walks", 10));
    walk.walk_length = int(ctx.cfg.get_int("embed", "length", 80));
    walk.undirected = ctx.cfg.get_bool("embed", "undirected", false);
    walk.seed = seed;

    TrainConfig train;
    train.dimension = int(ctx.cfg.get_int("embed", "dim", 128));
    train.window = int(ctx.cfg.get_int("embed", "window", 10));
    train.negatives = int(ctx.cfg.get_int("embed", "negatives", 5));
    train.epochs = int(ctx.cfg.get_int("embed", "epochs", 5));
    train.learning_rate = ctx.cfg.get_double("embed", "learning_rate", 0.025);
    train.seed = derive_seed(seed, 1);

    EmbeddingMatrix emb = train_skipgram(generate_walks(m.attention, walk), train);
    ctx.write_artifact("embedding_attention.tsv", embedding_tsv_text(emb));
}

}  // namespace

PipelineResult run_pipeline(const KeyValueConfig& cfg, std::ostream& log, int threads) {
    const std::vector<std::pair<std::string, void (*)(PipelineContext&)>> all_stages = {
        {"build", stage_build},           {"stats", stage_stats},
        {"centrality", stage_centrality}, {"dyadic", stage_dyadic},
        {"backbone", stage_backbone},     {"taxonomy", stage_taxonomy},
        {"motifs", stage_motifs},         {"colored-motifs", stage_colored_motifs},
        {"communities", stage_communities}, {"embed", stage_embed},
    };

    PipelineContext ctx{cfg, std::filesystem::path(cfg.require("input", "outdir")),
                        threads ? threads : int(cfg.get_int("run", "threads", 0)),
                        std::nullopt, json::object(), {}};
    std::filesystem::create_directories(ctx.outdir);

    std::set<std::string> requested;
    std::string run_list = cfg.get_or("stages", "run", "all");
    if (trim(run_list) == "all") {
        for (const auto& [name, fn] : all_stages) requested.insert(name);
    } else {
        for (auto part : split(run_list, ',')) {
            std::string name(trim(part));
            if (name.empty()) continue;
            bool known = false;
            for (const auto& [sname, fn] : all_stages) known |= sname == name;
            if (!known) throw ConfigError("unknown stage '" + name + "' in [stages] run");
            requested.insert(name);
        }
    }

    ctx.manifest["tool"] = "madn 0.1.0";
    ctx.manifest["started"] = iso_utc_now();
    ctx.manifest["inputs"] = json::object();
    for (const char* key : {"records", "registry"}) {
        if (auto path = cfg.get("input", key)) {
            json entry;
            entry["path"] = *path;
            try {
                entry["digest"] = file_digest(*path);
            } catch (const std::exception&) {
                entry["digest"] = nullptr;
            }
            ctx.manifest["inputs"][key] = entry;
        }
    }
    ctx.manifest["parameters"] = json::object();
    for (const auto& [section, kv] : cfg.sections()) {
        json sec;
        for (const auto& [k, val] : kv) sec[k] = val;
        ctx.manifest["parameters"][section.empty() ? "(top)" : section] = sec;
    }
    ctx.manifest["stages"] = json::array();

    PipelineResult result;
    result.ok = true;
    for (const auto& [name, fn] : all_stages) {
        json stage;
        stage["name"] = name;
        if (!requested.count(name)) {
            stage["status"] = "skipped";
            ctx.manifest["stages"].push_back(stage);
            continue;
        }
        stage["status"] = "ok";
        stage["artifacts"] = json::array();
        ctx.manifest["stages"].push_back(stage);
        log << "[madn] stage " << name << "..." << std::endl;
        try {
            fn(ctx);
        } catch (const std::exception& e) {
            ctx.manifest["stages"].back()["status"] = "failed";
            ctx.manifest["stages"].back()["error"] = e.what();
            ctx.manifest["status"] = "failed";
            log << "[madn] stage " << name << " failed: " << e.what() << std::endl;
            result.ok = false;
            result.failed_stage = name;
            break;
        }
    }
    if (result.ok) ctx.manifest["status"] = "ok";
    ctx.manifest["finished"] = iso_utc_now();

    std::ofstream mf(ctx.outdir / "manifest.json", std::ios::binary);
    mf << ctx.manifest.dump(2) << "\n";
    result.artifacts = ctx.artifacts;
    return result;
}

PipelineResult run_pipeline_file(const std::string& config_path, std::ostream& log, int threads) {
    return run_pipeline(KeyValueConfig::parse_file(config_path), log, threads);
}

}  // namespace madn
