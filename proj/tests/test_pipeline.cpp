#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "madn/ingest.hpp"
#include "madn/netio.hpp"
#include "madn/pipeline.hpp"
#include "madn/records.hpp"
#include "madn/util.hpp"

using namespace madn;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Writes a tiny synthetic corpus and a matching pipeline config; returns the
// config. Stages with heavy defaults get small parameters.
KeyValueConfig tiny_pipeline_config(const fs::path& dir) {
    fs::create_directories(dir);
    SynthSpec spec;
    spec.block_sizes = {4, 4};
    spec.days = 8;
    spec.seed = 404;
    SynthCorpus corpus = synth_generate(spec);
    {
        std::ofstream records(dir / "records.csv", std::ios::binary);
        serialize_records(corpus.records, records);
        std::ofstream registry(dir / "registry.csv", std::ios::binary);
        corpus.registry.save(registry);
    }
    KeyValueConfig cfg;
    cfg.set("input", "records", (dir / "records.csv").string());
    cfg.set("input", "registry", (dir / "registry.csv").string());
    cfg.set("input", "outdir", (dir / "out").string());
    cfg.set("build", "k", "5");
    cfg.set("build", "from", "1970-01-01");
    cfg.set("build", "to", "1970-01-08");
    cfg.set("backbone", "alpha", "0.05");
    cfg.set("motifs", "samples", "30");
    cfg.set("motifs", "seed", "1");
    cfg.set("colored-motifs", "samples", "30");
    cfg.set("colored-motifs", "seed", "2");
    cfg.set("communities", "seed", "3");
    cfg.set("communities", "trials", "4");
    cfg.set("embed", "dim", "8");
    cfg.set("embed", "walks", "2");
    cfg.set("embed", "length", "10");
    cfg.set("embed", "epochs", "1");
    cfg.set("embed", "seed", "4");
    return cfg;
}

}  // namespace

TEST_CASE("key-value config parses sections, comments and values") {
    std::istringstream in(
        "# comment\n"
        "[input]\n"
        "records = a.csv\n"
        "outdir= out \n"
        "\n"
        "[motifs]\n"
        "samples = 500\n"
        "deterministic = true\n");
    KeyValueConfig cfg = KeyValueConfig::parse(in);
    CHECK(cfg.require("input", "records") == "a.csv");
    CHECK(cfg.require("input", "outdir") == "out");
    CHECK(cfg.get_int("motifs", "samples", 0) == 500);
    CHECK(cfg.get_bool("motifs", "deterministic", false));
    CHECK(cfg.get_double("motifs", "alpha", 0.25) == 0.25);
    CHECK(!cfg.get("motifs", "seed"));

    try {
        cfg.require("input", "registry");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("[input] registry") != std::string::npos);
    }

    std::istringstream bad1("[unterminated\n");
    CHECK_THROWS_AS(KeyValueConfig::parse(bad1), ParseError);
    std::istringstream bad2("keywithoutvalue\n");
    CHECK_THROWS_AS(KeyValueConfig::parse(bad2), ParseError);
}

TEST_CASE("annotated backbone graphml loads back as the kept-link network") {
    Network net;
    net.add_link("HUB", "BIG", 97);
    net.add_link("HUB", "S1", 1);
    net.add_link("HUB", "S2", 1);
    net.add_link("HUB", "S3", 1);
    Backbone bb = extract_backbone(net, 0.05);
    std::string xml = backbone_graphml_text(net, bb);
    CHECK(xml.find("alpha_sender") != std::string::npos);
    Network loaded = deserialize_network(xml, NetFormat::graphml);
    CHECK(loaded == backbone_network(net, bb));
}

TEST_CASE("pipeline runs end to end and is byte-reproducible") {
    fs::path dir = fs::temp_directory_path() / "madn_test_pipeline";
    fs::remove_all(dir);
    KeyValueConfig cfg = tiny_pipeline_config(dir);

    std::ostringstream log;
    PipelineResult first = run_pipeline(cfg, log);
    REQUIRE(first.ok);

    const std::vector<std::string> expected = {
        "attention.graphml",     "disregard.graphml",
        "stats_attention.json",  "stats_disregard.json",
        "centrality_attention.csv", "centrality_disregard.csv",
        "dyad_histogram.csv",    "pairwise.csv",
        "backbone_attention.graphml", "backbone_disregard.graphml",
        "taxonomy_attention.csv", "taxonomy_profiles_attention.csv",
        "taxonomy_disregard.csv", "taxonomy_profiles_disregard.csv",
        "motifs_attention.json", "motifs_disregard.json",
        "colored_motifs.json",   "communities.csv",
        "communities.json",      "embedding_attention.tsv",
    };
    for (const std::string& name : expected) {
        INFO(name);
        CHECK(fs::exists(dir / "out" / name));
    }
    CHECK(fs::exists(dir / "out" / "manifest.json"));
    CHECK(slurp(dir / "out" / "manifest.json").find("\"status\": \"ok\"") != std::string::npos);

    // Re-run into a second directory: every analysis artifact byte-identical.
    std::map<std::string, std::string> snapshot;
    for (const std::string& name : expected) snapshot[name] = slurp(dir / "out" / name);
    cfg.set("input", "outdir", (dir / "out2").string());
    PipelineResult second = run_pipeline(cfg, log);
    REQUIRE(second.ok);
    for (const std::string& name : expected) {
        INFO(name);
        CHECK(slurp(dir / "out2" / name) == snapshot[name]);
    }
    fs::remove_all(dir);
}

TEST_CASE("stage subsets run alone and later stages reuse built outputs") {
    fs::path dir = fs::temp_directory_path() / "madn_test_stages";
    fs::remove_all(dir);
    KeyValueConfig cfg = tiny_pipeline_config(dir);
    cfg.set("stages", "run", "build,stats");

    std::ostringstream log;
    PipelineResult result = run_pipeline(cfg, log);
    REQUIRE(result.ok);
    CHECK(fs::exists(dir / "out" / "stats_attention.json"));
    CHECK(!fs::exists(dir / "out" / "communities.csv"));

    // Second run skips build, loading the stored networks.
    cfg.set("stages", "run", "communities");
    PipelineResult more = run_pipeline(cfg, log);
    REQUIRE(more.ok);
    CHECK(fs::exists(dir / "out" / "communities.csv"));

    cfg.set("stages", "run", "nonsense");
    CHECK_THROWS_AS(run_pipeline(cfg, log), ConfigError);
    fs::remove_all(dir);
}

TEST_CASE("a missing input is a configuration error naming the field") {
    fs::path dir = fs::temp_directory_path() / "madn_test_missing";
    fs::remove_all(dir);
    tiny_pipeline_config(dir);  // materializes records.csv / registry.csv

    KeyValueConfig broken;
    broken.set("input", "records", (dir / "records.csv").string());
    broken.set("input", "outdir", (dir / "out").string());
    broken.set("motifs", "seed", "1");
    broken.set("colored-motifs", "seed", "2");
    broken.set("communities", "seed", "3");
    broken.set("embed", "seed", "4");
    broken.set("build", "from", "1970-01-01");
    broken.set("build", "to", "1970-01-08");

    std::ostringstream log;
    PipelineResult result = run_pipeline(broken, log);
    CHECK(!result.ok);
    CHECK(result.failed_stage == "build");
    std::string manifest = slurp(dir / "out" / "manifest.json");
    CHECK(manifest.find("\"status\": \"failed\"") != std::string::npos);
    CHECK(manifest.find("[input] registry") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("randomized stages demand explicit seeds") {
    fs::path dir = fs::temp_directory_path() / "madn_test_seeds";
    fs::remove_all(dir);
    KeyValueConfig cfg = tiny_pipeline_config(dir);

    // Rebuild the config without the motifs seed; that stage must fail.
    KeyValueConfig no_seed;
    for (const auto& [section, kv] : cfg.sections())
        for (const auto& [key, value] : kv)
            if (!(section == "motifs" && key == "seed")) no_seed.set(section, key, value);
    no_seed.set("stages", "run", "build,motifs");

    std::ostringstream log;
    PipelineResult result = run_pipeline(no_seed, log);
    CHECK(!result.ok);
    CHECK(result.failed_stage == "motifs");
    fs::remove_all(dir);
}
