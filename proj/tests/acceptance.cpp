// Acceptance suite: one criterion per section, one PASS/FAIL line each.
// Run via ctest (test name "acceptance") or directly; exits non-zero when
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

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
#include "oracles.hpp"

using namespace madn;
namespace fs = std::filesystem;

namespace {

struct Criterion {
    std::string name;
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

int g_failed = 0;

void run_criterion(const std::string& name, const std::function<void(Criterion&)>& body) {
    Criterion c{name, {}};
    try {
        body(c);
    } catch (const std::exception& e) {
        c.failures.push_back(std::string("exception: ") + e.what());
    }
    if (c.failures.empty()) {
        std::printf("[PASS] %s\n", name.c_str());
    } else {
        ++g_failed;
        std::printf("[FAIL] %s\n", name.c_str());
        for (const std::string& f : c.failures) std::printf("       - %s\n", f.c_str());
    }
    std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool close(double a, double b, double tol) {
    if (std::isnan(a) && std::isnan(b)) return true;
    return std::abs(a - b) <= tol;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---- criterion 1 -----------------------------------------------------------

void construction_fidelity(Criterion& c) {
    auto start = std::chrono::steady_clock::now();

    SynthSpec spec;
    spec.block_sizes = {10, 10};
    spec.days = 30;
    spec.within_rate = 0.8;
    spec.cross_rate = 0.15;
    spec.entities_per_country = 3;
    spec.seed = 2024;
    SynthCorpus corpus = synth_generate(spec);

    BuildConfig cfg;
    cfg.k = 10;
    cfg.window = {spec.start, spec.start + (spec.days - 1)};

    Network attention = build_layer(corpus.records, corpus.registry, cfg, LayerKind::attention);
    Network disregard = build_layer(corpus.records, corpus.registry, cfg, LayerKind::disregard);
    Multiplex multiplex = assemble_multiplex(attention, disregard);

    auto check_layer = [&](const Network& net, LayerKind kind, const char* label) {
        auto expected = kind == LayerKind::attention
                            ? oracle::attention_weights_by_recount(corpus.records,
                                                                   corpus.registry, cfg)
                            : oracle::disregard_weights_by_recount(corpus.records,
                                                                   corpus.registry, cfg);
        std::map<std::pair<std::string, std::string>, int> got;
        std::size_t self_loops = 0;
        net.for_each_link([&](NodeId u, NodeId v, double w) {
            got[{net.code(u), net.code(v)}] = int(w);
            if (u == v) ++self_loops;
        });
        c.expect(got == expected, std::string(label) + ": superimposed weights != daily recount");
        c.expect(self_loops == 0, std::string(label) + ": self-loops survived");
        c.expect(!got.empty(), std::string(label) + ": no links built");
    };
    check_layer(attention, LayerKind::attention, "attention");
    check_layer(disregard, LayerKind::disregard, "disregard");

    c.expect(multiplex.attention.node_codes() == multiplex.disregard.node_codes(),
             "multiplex layers do not share one node set");

    double elapsed = seconds_since(start);
    c.expect(elapsed < 5.0, "runtime " + std::to_string(elapsed) + "s >= 5s");
}

// ---- criterion 2 -----------------------------------------------------------

void disregard_formula(Criterion& c) {
    DayCounts counts{{"c1", 5}, {"c2", 3}, {"c3", 2}};
    c.expect(close(disregard_score(counts, "c3", 0.1), 10.0 / 2.1, 1e-12), "c3 case");
    c.expect(close(disregard_score(counts, "c4", 0.1), 100.0, 1e-12), "absent-target case");
    c.expect(close(disregard_score(counts, "c1", 0.1), 10.0 / 5.1, 1e-12), "c1 case");

    Rng rng(901);
    for (int i = 0; i < 10000; ++i) {
        double total = 1e-6 + uniform_unit(rng) * 100;
        double own_low = uniform_unit(rng) * total;
        double own_high = own_low + (total - own_low) * (0.01 + 0.99 * uniform_unit(rng)) + 1e-9;
        DayCounts low{{"t", own_low}, {"rest", total - own_low}};
        DayCounts high{{"t", own_high}, {"rest", total - own_high}};
        if (!(disregard_score(low, "t", 0.1) > disregard_score(high, "t", 0.1))) {
            c.expect(false, "monotonicity violated at case " + std::to_string(i));
            break;
        }
    }
}

// ---- criterion 3 -----------------------------------------------------------

void topology_oracle(Criterion& c) {
    Rng rng(911);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        int n = 2 + int(uniform_index(rng, 11));
        Network net = oracle::random_network(rng, n, 0.05 + uniform_unit(rng) * 0.5);
        if (net.link_count() == 0) net.add_link(NodeId(0), NodeId(1), 1);
        TopologySummary got = summary(net);
        TopologySummary want = oracle::summary_by_brute_force(net);
        bool ok = got.n_nodes == want.n_nodes && got.n_links == want.n_links &&
                  close(got.mean_degree, want.mean_degree, 1e-9) &&
                  close(got.clustering, want.clustering, 1e-9) &&
                  close(got.assortativity, want.assortativity, 1e-9) &&
                  close(got.scc_fraction, want.scc_fraction, 1e-9) &&
                  close(got.mean_shortest_path, want.mean_shortest_path, 1e-9) &&
                  close(got.reciprocity, want.reciprocity, 1e-9);
        if (!ok) {
            c.expect(false, "mismatch on network " + std::to_string(i));
            return;
        }
        ++checked;
    }
    c.expect(checked == 200, "did not reach 200 networks");

    Rng rng2(913);
    for (int i = 0; i < 10; ++i) {
        Network net = oracle::random_network(rng2, 8, 0.3);
        Network sym;
        for (const std::string& code : net.node_codes()) sym.add_node(code);
        net.for_each_link([&](NodeId u, NodeId v, double w) {
            if (!sym.has_link(u, v)) sym.add_link(u, v, w);
            if (!sym.has_link(v, u)) sym.add_link(v, u, w);
        });
        if (sym.link_count() == 0) continue;
        c.expect(summary(sym).reciprocity == 1.0, "symmetrized reciprocity != 1");
    }
}

// ---- criterion 4 -----------------------------------------------------------

void pagerank_oracle(Criterion& c) {
    Rng rng(929);
    for (int i = 0; i < 100; ++i) {
        int n = 2 + int(uniform_index(rng, 49));
        Network net = oracle::random_network(rng, n, 0.02 + uniform_unit(rng) * 0.3);
        PageRankOptions opts;
        opts.damping = 0.85;
        opts.tolerance = 1e-13;
        opts.max_iterations = 100000;
        auto got = pagerank(net, opts);
        auto want = oracle::pagerank_dense(net, 0.85);
        double sum = 0, worst = 0;
        for (std::size_t u = 0; u < got.size(); ++u) {
            sum += got[u];
            worst = std::max(worst, std::abs(got[u] - want[u]));
        }
        if (worst >= 1e-10) {
            c.expect(false,
                     "network " + std::to_string(i) + ": max |diff| " + std::to_string(worst));
            return;
        }
        c.expect(std::abs(sum - 1.0) < 1e-9, "scores do not sum to 1");
    }

    for (int n : {3, 7, 12}) {
        Network cycle;
        for (int i = 0; i < n; ++i)
            cycle.add_link("N" + std::to_string(i), "N" + std::to_string((i + 1) % n), 1);
        for (double score : pagerank(cycle))
            c.expect(std::abs(score - 1.0 / n) < 1e-9, "cycle pagerank not uniform");
    }
}

// ---- criterion 5 -----------------------------------------------------------

void disparity_taxonomy(Criterion& c) {
    Rng rng(937);
    for (int i = 0; i < 1000; ++i) {
        double p = uniform_unit(rng);
        std::size_t k = 2 + uniform_index(rng, 20);
        c.expect(close(disparity_alpha(p, k), std::pow(1.0 - p, double(k - 1)), 1e-12),
                 "alpha closed form");
    }

    std::set<std::uint8_t> labels;
    bool swap_ok = true;
    for (int sig = 0; sig < 16; ++sig) {
        bool f0 = sig & 8, f1 = sig & 4, f2 = sig & 2, f3 = sig & 1;
        labels.insert(TaxonomyLabel::from_flags(f0, f1, f2, f3).signature());
        swap_ok &= TaxonomyLabel::from_flags(f0, f1, f2, f3) ==
                   TaxonomyLabel::from_flags(f2, f3, f0, f1);
    }
    c.expect(labels.size() == 10, "16 flag patterns did not fold to 10 labels");
    c.expect(swap_ok, "classify_pair not swap-invariant");

    for (int i = 0; i < 100; ++i) {
        Multiplex m = oracle::random_multiplex(rng, 3 + int(uniform_index(rng, 9)),
                                               uniform_unit(rng) * 0.6, uniform_unit(rng) * 0.6);
        for (const Network* net : {&m.attention, &m.disregard}) {
            if (net->link_count() == 0) continue;
            TaxonomyCensus census = taxonomy_census(*net, extract_backbone(*net, 0.05));
            std::set<std::pair<std::string, std::string>> unordered;
            net->for_each_link([&](NodeId u, NodeId v, double) {
                auto p = std::minmax(net->code(u), net->code(v));
                unordered.insert({p.first, p.second});
            });
            std::size_t total = 0;
            for (const auto& [label, count] : census.counts) total += count;
            if (total != unordered.size()) {
                c.expect(false, "census total != linked pairs on multiplex " + std::to_string(i));
                return;
            }
        }
    }
}

// ---- criterion 6 -----------------------------------------------------------

void motif_criteria(Criterion& c) {
    Rng rng(941);
    const TriadClassifier& classifier = TriadClassifier::instance();
    for (int i = 0; i < 200; ++i) {
        Network net = oracle::random_network(rng, 3 + int(uniform_index(rng, 10)),
                                             0.05 + uniform_unit(rng) * 0.5);
        auto counts = triad_census(net);
        std::map<unsigned, std::int64_t> got;
        for (int id = 1; id <= TriadClassifier::kNumClasses; ++id)
            if (counts[id - 1] > 0) got[classifier.canonical_code(id)] = counts[id - 1];
        if (got != oracle::triad_census_by_enumeration(net)) {
            c.expect(false, "census mismatch on network " + std::to_string(i));
            return;
        }
    }

    Network base = oracle::random_network(rng, 20, 0.18);
    for (int s = 0; s < 1000; ++s) {
        RewireResult r = rewire_null(base, s, 10);
        for (NodeId u = 0; u < NodeId(base.node_count()); ++u) {
            if (r.network.in_degree(u) != base.in_degree(u) ||
                r.network.out_degree(u) != base.out_degree(u)) {
                c.expect(false, "degree sequence broken at sample " + std::to_string(s));
                return;
            }
        }
    }

    // Planted FFL: deep cascade plus all one-hop shortcuts.
    Network planted;
    const int n = 60;
    for (int i = 0; i + 1 < n; ++i)
        planted.add_link("N" + std::to_string(i), "N" + std::to_string(i + 1), 1);
    for (int i = 0; i + 2 < n; ++i)
        planted.add_link("N" + std::to_string(i), "N" + std::to_string(i + 2), 1);
    MotifProfile ffl_profile = motif_zscores(planted, 5000, 977, 10);
    const MotifStats& ffl = ffl_profile.classes[4];
    c.expect(ffl.name == "feed-forward-loop", "class 5 is not the FFL");
    c.expect(ffl.z.has_value() && *ffl.z > 2.0,
             "planted FFL z = " + (ffl.z ? std::to_string(*ffl.z) : std::string("none")));

    // Networks drawn from the null should not light up at p < 0.01.
    Network null_base = oracle::random_network(rng, 30, 0.13);
    int clean_seeds = 0;
    for (std::uint64_t s = 0; s < 10; ++s) {
        Network draw = rewire_null(null_base, 3000 + s, 20).network;
        MotifProfile profile = motif_zscores(draw, 1000, 4000 + s, 10);
        bool any = false;
        for (const MotifStats& cls : profile.classes) any |= cls.p < 0.01;
        clean_seeds += any ? 0 : 1;
    }
    c.expect(clean_seeds >= 9,
             "null self-consistency: only " + std::to_string(clean_seeds) + "/10 clean seeds");

    // Timing bound: 5000 samples on a 129-node, ~3000-link network.
    Rng trng(953);
    Network big = oracle::random_network(trng, 129, 3000.0 / (129.0 * 128.0));
    auto start = std::chrono::steady_clock::now();
    MotifProfile timed = motif_zscores(big, 5000, 31337, 10);
    double elapsed = seconds_since(start);
    c.expect(timed.n_samples == 5000, "sample count wrong");
    c.expect(elapsed < 60.0, "5000-sample profile took " + std::to_string(elapsed) + "s");
    std::fprintf(stderr, "       (criterion 6 timing: %zu links, %.1fs for 5000 samples)\n",
                 big.link_count(), elapsed);
}

// ---- criterion 7 -----------------------------------------------------------

void map_equation_criteria(Criterion& c) {
    Network net;
    net.add_link("A", "B", 1);
    net.add_link("B", "C", 1);
    net.add_link("C", "A", 1);
    net.add_link("X", "Y", 1);
    net.add_link("Y", "Z", 1);
    net.add_link("Z", "X", 1);
    std::vector<int> one(6, 0);
    c.expect(close(map_equation(net, one, 0.0), std::log2(6.0), 1e-9), "one-module codelength");
    std::vector<int> cycles(6);
    for (int i = 0; i < 6; ++i) cycles[i] = net.code(NodeId(i)) < "X" ? 0 : 1;
    c.expect(close(map_equation(net, cycles, 0.0), std::log2(3.0), 1e-9),
             "two-module codelength");

    Partition best = detect_communities(net, 0.0, 5, 10);
    c.expect(best.module_count() == 2 && close(best.codelength, std::log2(3.0), 1e-9),
             "two-cycle partition not recovered");

    // 50 well-separated instances, n <= 8, vs exhaustive search.
    Rng rng(967);
    for (int inst = 0; inst < 50; ++inst) {
        Network g;
        int n1 = 3 + int(uniform_index(rng, 2)), n2 = 3 + int(uniform_index(rng, 3));
        auto code = [](int b, int i) { return "B" + std::to_string(b) + std::to_string(i); };
        for (int b = 0; b < 2; ++b) {
            int size = b == 0 ? n1 : n2;
            for (int i = 0; i < size; ++i)
                for (int j = 0; j < size; ++j)
                    if (i != j)
                        g.add_link(code(b, i), code(b, j), 8 + double(uniform_index(rng, 5)));
        }
        g.add_link(code(0, 0), code(1, 0), 1);
        g.add_link(code(1, 0), code(0, 0), 1);

        Partition got = detect_communities(g, 0.15, inst, 10);
        double best_L = 1e100;
        oracle::for_each_partition(int(g.node_count()), [&](const std::vector<int>& labels) {
            best_L = std::min(best_L, oracle::map_equation_direct(g, labels, 0.15));
        });
        if (!close(got.codelength, best_L, 1e-9)) {
            c.expect(false, "instance " + std::to_string(inst) + ": greedy " +
                                std::to_string(got.codelength) + " vs optimal " +
                                std::to_string(best_L));
            return;
        }
    }

    // Planted two-block corpus, exact recovery.
    SynthSpec spec;
    spec.block_sizes = {10, 10};
    spec.days = 30;
    spec.within_rate = 0.9;
    spec.cross_rate = 0.05;
    spec.seed = 4242;
    SynthCorpus corpus = synth_generate(spec);
    BuildConfig cfg;
    cfg.k = 10;
    cfg.window = {spec.start, spec.start + (spec.days - 1)};
    Network attention = build_layer(corpus.records, corpus.registry, cfg, LayerKind::attention);
    Partition planted = detect_communities(attention, 0.15, 7, 10);
    c.expect(planted.module_count() == 2, "planted corpus: wrong module count");
    std::map<int, std::set<int>> blocks;
    for (std::size_t i = 0; i < attention.node_count(); ++i) {
        auto it = std::find(corpus.codes.begin(), corpus.codes.end(), attention.code(NodeId(i)));
        blocks[planted.assignment[i]].insert(corpus.block_of[it - corpus.codes.begin()]);
    }
    for (const auto& [module, planted_blocks] : blocks)
        c.expect(planted_blocks.size() == 1, "a module mixes planted blocks");
}

// ---- criterion 8 -----------------------------------------------------------

Network two_block_graph(int block, double strong, double weak) {
    Network net;
    auto code = [](int b, int i) { return std::string(b == 0 ? "A" : "B") + std::to_string(i); };
    for (int b = 0; b < 2; ++b)
        for (int i = 0; i < block; ++i)
            for (int j = 0; j < block; ++j)
                if (i != j) net.add_link(code(b, i), code(b, j), strong);
    net.add_link(code(0, 0), code(1, 0), weak);
    net.add_link(code(1, 0), code(0, 0), weak);
    return net;
}

void embedding_criteria(Criterion& c) {
    // Gradients against central finite differences, 1e-5 relative.
    Rng rng(971);
    for (int trial = 0; trial < 30; ++trial) {
        const int d = 9;
        auto vec = [&] {
            std::vector<double> v(d);
            for (double& x : v) x = (uniform_unit(rng) - 0.5) * 2;
            return v;
        };
        SgnsExample x{vec(), vec(), {vec(), vec()}};
        SgnsExample g = sgns_gradient(x);
        const double h = 1e-6;
        auto probe = [&](std::vector<double>& slot, int k, double grad) {
            double saved = slot[k];
            slot[k] = saved + h;
            double up = sgns_loss(x);
            slot[k] = saved - h;
            double down = sgns_loss(x);
            slot[k] = saved;
            double fd = (up - down) / (2 * h);
            double scale = std::max({1.0, std::abs(fd), std::abs(grad)});
            return std::abs(fd - grad) / scale < 1e-5;
        };
        for (int k = 0; k < d; ++k) {
            if (!probe(x.center, k, g.center[k]) || !probe(x.context, k, g.context[k]) ||
                !probe(x.negatives[0], k, g.negatives[0][k]) ||
                !probe(x.negatives[1], k, g.negatives[1][k])) {
                c.expect(false, "gradient mismatch, trial " + std::to_string(trial));
                return;
            }
        }
    }

    Network graph = two_block_graph(6, 5.0, 1.0);
    int cosine_wins = 0;
    bool loss_ok = true;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        WalkConfig walk;
        walk.walks_per_node = 8;
        walk.walk_length = 30;
        walk.seed = seed;
        TrainConfig train;
        train.dimension = 24;
        train.window = 5;
        train.epochs = 5;
        train.seed = derive_seed(seed, 1);
        EmbeddingMatrix emb = train_skipgram(generate_walks(graph, walk), train);
        loss_ok &= emb.epoch_loss.back() < emb.epoch_loss.front();

        double intra = 0, inter = 0;
        int n_intra = 0, n_inter = 0;
        for (std::size_t i = 0; i < emb.vocab.size(); ++i)
            for (std::size_t j = i + 1; j < emb.vocab.size(); ++j) {
                double cos = cosine_similarity(emb.vectors[i], emb.vectors[j]);
                if (emb.vocab[i][0] == emb.vocab[j][0]) {
                    intra += cos;
                    ++n_intra;
                } else {
                    inter += cos;
                    ++n_inter;
                }
            }
        cosine_wins += intra / n_intra > inter / n_inter ? 1 : 0;
    }
    c.expect(loss_ok, "epoch loss did not decrease");
    c.expect(cosine_wins >= 9,
             "intra > inter cosine in only " + std::to_string(cosine_wins) + "/10 seeds");

    // Constructed exact analogy.
    EmbeddingMatrix emb;
    emb.dimension = 6;
    Rng arng(977);
    for (int i = 0; i < 8; ++i) {
        emb.vocab.push_back("n" + std::to_string(i));
        std::vector<double> v(6);
        for (double& x : v) x = uniform_unit(arng) - 0.5;
        emb.vectors.push_back(v);
    }
    for (int k = 0; k < 6; ++k)
        emb.vectors[5][k] = emb.vectors[0][k] - emb.vectors[1][k] + emb.vectors[2][k];
    auto ranked = analogy(emb, "n0", "n1", "n2");
    c.expect(!ranked.empty() && ranked[0].code == "n5", "planted analogy answer not rank 1");
}

// ---- criterion 9 -----------------------------------------------------------

void determinism_criteria(Criterion& c) {
    fs::path dir = fs::temp_directory_path() / "madn_acceptance_run";
    fs::remove_all(dir);
    fs::create_directories(dir);

    SynthSpec spec;
    spec.block_sizes = {6, 6};
    spec.days = 12;
    spec.seed = 808;
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
    cfg.set("build", "k", "8");
    cfg.set("build", "from", "1970-01-01");
    cfg.set("build", "to", "1970-01-12");
    cfg.set("backbone", "alpha", "0.05");
    cfg.set("motifs", "samples", "120");
    cfg.set("motifs", "seed", "11");
    cfg.set("colored-motifs", "samples", "120");
    cfg.set("colored-motifs", "seed", "12");
    cfg.set("communities", "seed", "13");
    cfg.set("embed", "dim", "16");
    cfg.set("embed", "walks", "4");
    cfg.set("embed", "length", "20");
    cfg.set("embed", "epochs", "2");
    cfg.set("embed", "seed", "14");

    std::ostringstream log;
    cfg.set("input", "outdir", (dir / "run1").string());
    PipelineResult first = run_pipeline(cfg, log, 2);
    cfg.set("input", "outdir", (dir / "run2").string());
    PipelineResult second = run_pipeline(cfg, log, 1);  // thread count must not matter
    c.expect(first.ok, "first run failed");
    c.expect(second.ok, "second run failed");
    c.expect(first.artifacts == second.artifacts, "artifact lists differ");
    if (first.ok && second.ok && first.artifacts == second.artifacts) {
        for (const std::string& name : first.artifacts)
            if (slurp(dir / "run1" / name) != slurp(dir / "run2" / name))
                c.expect(false, "artifact differs between runs: " + name);
    }
    fs::remove_all(dir);
}

// ---- criterion 10 ----------------------------------------------------------

void roundtrip_criteria(Criterion& c) {
    Rng rng(991);
    for (int i = 0; i < 100; ++i) {
        int n = 1 + int(uniform_index(rng, 20));
        Network net = oracle::random_network(rng, n, uniform_unit(rng) * 0.4);
        for (NetFormat format : {NetFormat::graphml, NetFormat::edge_list}) {
            Network back = deserialize_network(serialize_network(net, format), format);
            if (!(back == net)) {
                c.expect(false, "round trip failed on network " + std::to_string(i));
                return;
            }
        }
    }

    SynthSpec spec;
    spec.block_sizes = {5, 5};
    spec.days = 10;
    spec.seed = 515;
    SynthCorpus corpus = synth_generate(spec);
    std::ostringstream out;
    serialize_records(corpus.records, out);
    std::istringstream in(out.str());
    c.expect(parse_records(in) == corpus.records, "record parse(serialize) != identity");
}

}  // namespace

int main() {
    std::printf("madn acceptance suite\n");
    run_criterion("1. construction fidelity (synthetic corpus, day-by-day recount)",
                  construction_fidelity);
    run_criterion("2. disregard formula (hand arithmetic + monotonicity over 10^4 cases)",
                  disregard_formula);
    run_criterion("3. topology oracle (200 random networks, n <= 12)", topology_oracle);
    run_criterion("4. pagerank vs dense oracle (100 networks, n <= 50)", pagerank_oracle);
    run_criterion("5. disparity alpha / 10-label taxonomy / census totals", disparity_taxonomy);
    run_criterion("6. motifs: census oracle, null invariants, planted FFL, timing",
                  motif_criteria);
    run_criterion("7. map equation values, exhaustive optima, planted blocks",
                  map_equation_criteria);
    run_criterion("8. embeddings: gradients, loss, block cosine, analogy", embedding_criteria);
    run_criterion("9. pipeline determinism (byte-identical artifacts)", determinism_criteria);
    run_criterion("10. format round trips (networks + records)", roundtrip_criteria);

    if (g_failed == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criteria FAILED\n", g_failed);
    return 1;
}
