#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "madn/embed.hpp"
#include "madn/util.hpp"
#include "oracles.hpp"

using namespace madn;

namespace {

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

}  // namespace

TEST_CASE("step distribution with p=q=1 is the first-order weighted walk") {
    Network net;
    net.add_link("T", "V", 1);
    net.add_link("V", "X", 3);
    net.add_link("V", "Y", 1);
    net.add_link("T", "X", 1);  // X adjacent to the previous node T

    WalkConfig cfg;
    auto first_order = step_distribution(net, std::nullopt, *net.find("V"), cfg);
    auto biased_neutral = step_distribution(net, *net.find("T"), *net.find("V"), cfg);
    REQUIRE(first_order.size() == 2);
    for (std::size_t i = 0; i < first_order.size(); ++i) {
        CHECK(first_order[i].first == biased_neutral[i].first);
        CHECK(first_order[i].second == doctest::Approx(biased_neutral[i].second).epsilon(1e-12));
    }
    CHECK(first_order[0].second == doctest::Approx(0.75).epsilon(1e-12));  // X: weight 3 of 4
}

TEST_CASE("bias parameters reshape the step distribution") {
    // From prev T at cur V: X is adjacent to T (factor 1), Y is not (1/q),
    // T itself gets 1/p.
    Network net;
    net.add_link("T", "V", 1);
    net.add_link("T", "X", 1);
    net.add_link("V", "X", 2);
    net.add_link("V", "Y", 1);
    net.add_link("V", "T", 1);

    WalkConfig cfg;
    cfg.return_param = 4.0;  // discourage returning
    cfg.inout_param = 0.25;  // encourage exploration
    auto dist = step_distribution(net, *net.find("T"), *net.find("V"), cfg);
    // Unnormalized: T: 1*(1/4)=0.25, X: 2*1=2, Y: 1*(1/0.25)=4 -> total 6.25
    std::map<NodeId, double> by_node(dist.begin(), dist.end());
    CHECK(by_node[*net.find("T")] == doctest::Approx(0.25 / 6.25).epsilon(1e-12));
    CHECK(by_node[*net.find("X")] == doctest::Approx(2.0 / 6.25).epsilon(1e-12));
    CHECK(by_node[*net.find("Y")] == doctest::Approx(4.0 / 6.25).epsilon(1e-12));
}

TEST_CASE("tiny q drives walks toward unexplored nodes") {
    // V links to A (adjacent to prev) and B (not adjacent): q -> 0 sends
    // nearly all steps to B. Frequencies must match the exact distribution.
    Network net;
    net.add_link("T", "V", 1);
    net.add_link("T", "A", 1);
    net.add_link("V", "A", 1);
    net.add_link("V", "B", 1);

    WalkConfig cfg;
    cfg.inout_param = 1e-4;
    auto dist = step_distribution(net, *net.find("T"), *net.find("V"), cfg);
    std::map<NodeId, double> by_node(dist.begin(), dist.end());
    double p_b = by_node[*net.find("B")];
    CHECK(p_b > 0.99);

    Rng rng(7);
    int picks_b = 0;
    const int steps = 100000;
    std::vector<double> cumulative;
    for (int s = 0; s < steps; ++s) {
        double u = uniform_unit(rng);
        double acc = 0;
        for (const auto& [node, prob] : dist) {
            acc += prob;
            if (u < acc) {
                picks_b += node == *net.find("B");
                break;
            }
        }
    }
    CHECK(std::abs(double(picks_b) / steps - p_b) < 0.005);
}

TEST_CASE("a directed cycle walks forward forever") {
    Network net;
    net.add_link("A", "B", 1);
    net.add_link("B", "C", 1);
    net.add_link("C", "A", 1);
    WalkConfig cfg;
    cfg.inout_param = 1e-4;
    cfg.walks_per_node = 2;
    cfg.walk_length = 30;
    WalkCorpus corpus = generate_walks(net, cfg);
    for (const auto& walk : corpus.walks) {
        CHECK(int(walk.size()) == cfg.walk_length);
        for (std::size_t i = 1; i < walk.size(); ++i)
            CHECK(net.has_link(NodeId(walk[i - 1]), NodeId(walk[i])));
    }
}

TEST_CASE("every generated walk is a valid directed path") {
    Rng rng(311);
    Network net = oracle::random_network(rng, 12, 0.25);
    WalkConfig cfg;
    cfg.walks_per_node = 3;
    cfg.walk_length = 12;
    cfg.return_param = 0.5;
    cfg.inout_param = 2.0;
    cfg.seed = 5;
    WalkCorpus corpus = generate_walks(net, cfg);
    CHECK(corpus.walks.size() == net.node_count() * 3);
    for (const auto& walk : corpus.walks) {
        REQUIRE(!walk.empty());
        CHECK(int(walk.size()) <= cfg.walk_length);
        for (std::size_t i = 1; i < walk.size(); ++i)
            CHECK(net.has_link(NodeId(walk[i - 1]), NodeId(walk[i])));
    }
}

TEST_CASE("walks from a node with no out-links stop at the start node") {
    Network net;
    net.add_link("A", "SINK", 1);
    net.add_node("LONER");
    WalkConfig cfg;
    cfg.walks_per_node = 4;
    cfg.walk_length = 10;
    WalkCorpus corpus = generate_walks(net, cfg);
    int loner_walks = 0, sink_walks = 0;
    for (const auto& walk : corpus.walks) {
        if (corpus.vocab[walk[0]] == "LONER") {
            ++loner_walks;
            CHECK(walk.size() == 1);
        }
        if (corpus.vocab[walk[0]] == "SINK") {
            ++sink_walks;
            CHECK(walk.size() == 1);
        }
    }
    CHECK(loner_walks == 4);
    CHECK(sink_walks == 4);
}

TEST_CASE("walk corpora are bit-reproducible per seed") {
    Rng rng(313);
    Network net = oracle::random_network(rng, 10, 0.3);
    WalkConfig cfg;
    cfg.seed = 77;
    cfg.walks_per_node = 2;
    cfg.walk_length = 15;
    CHECK(generate_walks(net, cfg).walks == generate_walks(net, cfg).walks);
    WalkConfig other = cfg;
    other.seed = 78;
    CHECK(generate_walks(net, cfg).walks != generate_walks(net, other).walks);
}

TEST_CASE("sgns gradients match central finite differences") {
    Rng rng(317);
    const int d = 7;
    auto random_vec = [&] {
        std::vector<double> v(d);
        for (double& x : v) x = (uniform_unit(rng) - 0.5) * 2;
        return v;
    };
    for (int trial = 0; trial < 20; ++trial) {
        SgnsExample x{random_vec(), random_vec(), {random_vec(), random_vec(), random_vec()}};
        SgnsExample g = sgns_gradient(x);
        const double h = 1e-6;
        auto check_component = [&](std::vector<double>& slot, int k, double grad) {
            double saved = slot[k];
            slot[k] = saved + h;
            double up = sgns_loss(x);
            slot[k] = saved - h;
            double down = sgns_loss(x);
            slot[k] = saved;
            double fd = (up - down) / (2 * h);
            double scale = std::max({1.0, std::abs(fd), std::abs(grad)});
            CHECK(std::abs(fd - grad) / scale < 1e-5);
        };
        for (int k = 0; k < d; ++k) {
            check_component(x.center, k, g.center[k]);
            check_component(x.context, k, g.context[k]);
            for (std::size_t neg = 0; neg < x.negatives.size(); ++neg)
                check_component(x.negatives[neg], k, g.negatives[neg][k]);
        }
    }
}

TEST_CASE("training loss decreases across epochs on the two-block corpus") {
    Network net = two_block_graph(5, 5.0, 1.0);
    WalkConfig walk;
    walk.walks_per_node = 6;
    walk.walk_length = 20;
    walk.seed = 3;
    TrainConfig train;
    train.dimension = 16;
    train.window = 4;
    train.epochs = 5;
    train.seed = 4;
    EmbeddingMatrix emb = train_skipgram(generate_walks(net, walk), train);
    REQUIRE(emb.epoch_loss.size() == 5);
    CHECK(emb.epoch_loss[4] < emb.epoch_loss[0]);
    for (const auto& vec : emb.vectors)
        for (double x : vec) CHECK(std::isfinite(x));
}

TEST_CASE("lock-free parallel training runs and stays finite") {
    Network net = two_block_graph(5, 4.0, 1.0);
    WalkConfig walk;
    walk.walks_per_node = 4;
    walk.walk_length = 15;
    walk.seed = 31;
    TrainConfig train;
    train.dimension = 12;
    train.epochs = 2;
    train.seed = 32;
    train.threads = 3;
    EmbeddingMatrix emb = train_skipgram(generate_walks(net, walk), train);
    CHECK(emb.vectors.size() == net.node_count());
    for (const auto& vec : emb.vectors)
        for (double x : vec) CHECK(std::isfinite(x));
    CHECK(emb.epoch_loss.size() == 2);
}

TEST_CASE("training is deterministic per seed") {
    Network net = two_block_graph(4, 3.0, 1.0);
    WalkConfig walk;
    walk.walks_per_node = 3;
    walk.walk_length = 10;
    walk.seed = 11;
    TrainConfig train;
    train.dimension = 8;
    train.epochs = 2;
    train.seed = 12;
    WalkCorpus corpus = generate_walks(net, walk);
    EmbeddingMatrix a = train_skipgram(corpus, train);
    EmbeddingMatrix b = train_skipgram(corpus, train);
    CHECK(a.vectors == b.vectors);
}

TEST_CASE("intra-block cosine beats inter-block cosine") {
    Network net = two_block_graph(6, 5.0, 1.0);
    WalkConfig walk;
    walk.walks_per_node = 8;
    walk.walk_length = 30;
    walk.seed = 21;
    TrainConfig train;
    train.dimension = 24;
    train.window = 5;
    train.epochs = 4;
    train.seed = 22;
    EmbeddingMatrix emb = train_skipgram(generate_walks(net, walk), train);

    double intra = 0, inter = 0;
    int n_intra = 0, n_inter = 0;
    for (std::size_t i = 0; i < emb.vocab.size(); ++i)
        for (std::size_t j = i + 1; j < emb.vocab.size(); ++j) {
            double c = cosine_similarity(emb.vectors[i], emb.vectors[j]);
            if (emb.vocab[i][0] == emb.vocab[j][0]) {
                intra += c;
                ++n_intra;
            } else {
                inter += c;
                ++n_inter;
            }
        }
    CHECK(intra / n_intra > inter / n_inter);
}

TEST_CASE("a constructed exact analogy ranks the planted answer first") {
    EmbeddingMatrix emb;
    emb.dimension = 4;
    emb.vocab = {"a", "b", "c", "d", "e", "f"};
    Rng rng(331);
    for (std::size_t i = 0; i < emb.vocab.size(); ++i) {
        std::vector<double> v(4);
        for (double& x : v) x = uniform_unit(rng) - 0.5;
        emb.vectors.push_back(v);
    }
    for (int k = 0; k < 4; ++k)
        emb.vectors[3][k] = emb.vectors[0][k] - emb.vectors[1][k] + emb.vectors[2][k];

    auto ranked = analogy(emb, "a", "b", "c");
    REQUIRE(!ranked.empty());
    CHECK(ranked[0].code == "d");
    CHECK(ranked[0].cosine == doctest::Approx(1.0).epsilon(1e-9));
    for (const auto& r : ranked) {
        CHECK(r.code != "a");
        CHECK(r.code != "b");
        CHECK(r.code != "c");
    }
    CHECK_THROWS_AS(analogy(emb, "a", "b", "nope"), std::invalid_argument);
}

TEST_CASE("a == b reduces the analogy to nearest neighbors of c") {
    EmbeddingMatrix emb;
    emb.dimension = 3;
    emb.vocab = {"a", "c", "x", "y"};
    emb.vectors = {{1, 0, 0}, {0, 1, 0}, {0, 0.9, 0.1}, {0.9, 0, 0.1}};
    auto ranked = analogy(emb, "a", "a", "c");
    REQUIRE(ranked.size() == 2);
    CHECK(ranked[0].code == "x");  // closest to c
    CHECK(ranked[1].code == "y");
}

TEST_CASE("analogy ranking is invariant under uniform scaling") {
    Rng rng(337);
    EmbeddingMatrix emb;
    emb.dimension = 5;
    for (int i = 0; i < 8; ++i) {
        emb.vocab.push_back("n" + std::to_string(i));
        std::vector<double> v(5);
        for (double& x : v) x = uniform_unit(rng) - 0.5;
        emb.vectors.push_back(v);
    }
    EmbeddingMatrix scaled = emb;
    for (auto& v : scaled.vectors)
        for (double& x : v) x *= 7.5;
    auto r1 = analogy(emb, "n0", "n1", "n2");
    auto r2 = analogy(scaled, "n0", "n1", "n2");
    REQUIRE(r1.size() == r2.size());
    for (std::size_t i = 0; i < r1.size(); ++i) CHECK(r1[i].code == r2[i].code);
}

TEST_CASE("embedding tsv round-trips exactly") {
    Rng rng(347);
    EmbeddingMatrix emb;
    emb.dimension = 6;
    for (int i = 0; i < 5; ++i) {
        emb.vocab.push_back("C" + std::to_string(i));
        std::vector<double> v(6);
        for (double& x : v) x = (uniform_unit(rng) - 0.5) * 3;
        emb.vectors.push_back(v);
    }
    std::ostringstream out;
    write_embedding_tsv(emb, out);
    std::istringstream in(out.str());
    EmbeddingMatrix back = read_embedding_tsv(in);
    REQUIRE(back.vocab == emb.vocab);  // already sorted here
    CHECK(back.vectors == emb.vectors);
    CHECK(back.dimension == emb.dimension);

    std::istringstream bad("C0\t1\t2\nC1\t3\n");
    CHECK_THROWS_AS(read_embedding_tsv(bad), ParseError);
}
