#include "madn/motifs.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "madn/util.hpp"

namespace madn {
namespace {

// Ordered-pair bit layout shared by plain (1 bit/pair) and colored
// (2 bits/pair) triad codes.
constexpr int kPair[6][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
constexpr int kPairIndex[3][3] = {{-1, 0, 1}, {2, -1, 3}, {4, 5, -1}};
constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

unsigned remap_plain(unsigned code, const int* perm) {
    unsigned out = 0;
    for (int k = 0; k < 6; ++k)
        if (code >> k & 1u) out |= 1u << kPairIndex[perm[kPair[k][0]]][perm[kPair[k][1]]];
    return out;
}

unsigned remap_colored(unsigned code, const int* perm) {
    unsigned out = 0;
    for (int k = 0; k < 6; ++k) {
        int to = kPairIndex[perm[kPair[k][0]]][perm[kPair[k][1]]];
        out |= (code >> (2 * k) & 3u) << (2 * to);
    }
    return out;
}

bool weakly_connected_plain(unsigned code) {
    int adjacent = (code & 0b000101 ? 1 : 0) + (code & 0b010010 ? 1 : 0) +
                   (code & 0b101000 ? 1 : 0);
    return adjacent >= 2;
}

const std::array<std::uint16_t, 4096>& colored_canon_table() {
    static const std::array<std::uint16_t, 4096> table = [] {
        std::array<std::uint16_t, 4096> t{};
        for (unsigned code = 0; code < 4096; ++code) {
            unsigned best = code;
            for (const auto& perm : kPerms) best = std::min(best, remap_colored(code, perm));
            t[code] = static_cast<std::uint16_t>(best);
        }
        return t;
    }();
    return table;
}

// Directed adjacency matrix plus undirected bitset rows for triple scans.
struct TripleScanGraph {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> und;  // n rows of `words` words
    std::vector<std::uint8_t> dir;   // row-major n*n

    explicit TripleScanGraph(int nodes) : n(nodes), words((nodes + 63) / 64) {
        und.assign(std::size_t(n) * words, 0);
        dir.assign(std::size_t(n) * n, 0);
    }
    void add_edge(int u, int v) {
        dir[std::size_t(u) * n + v] = 1;
        und[std::size_t(u) * words + v / 64] |= 1ULL << (v % 64);
        und[std::size_t(v) * words + u / 64] |= 1ULL << (u % 64);
    }
    bool und_test(int u, int v) const {
        return und[std::size_t(u) * words + v / 64] >> (v % 64) & 1ULL;
    }
};

// Enumerates each weakly connected node triple exactly once and hands the
// 6-bit (plain) adjacency code of (u,v,w) to `emit`. Batagelj-Mrvar style:
// the triple {u<v<w'} is attributed to one specific adjacent pair.
template <typename Emit>
void scan_connected_triples(const TripleScanGraph& g, Emit&& emit) {
    std::vector<std::uint64_t> merged(g.words);
    for (int u = 0; u < g.n; ++u) {
        const std::uint64_t* row_u = &g.und[std::size_t(u) * g.words];
        for (int wu = u / 64; wu < g.words; ++wu) {
            std::uint64_t bits = row_u[wu];
            if (wu == u / 64) {  // keep v > u
                int shift = u % 64 + 1;
                bits = shift >= 64 ? 0 : bits & (~0ULL << shift);
            }
            while (bits) {
                int v = wu * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                const std::uint64_t* row_v = &g.und[std::size_t(v) * g.words];
                for (int ww = 0; ww < g.words; ++ww) merged[ww] = row_u[ww] | row_v[ww];
                merged[u / 64] &= ~(1ULL << (u % 64));
                merged[v / 64] &= ~(1ULL << (v % 64));
                for (int ww = 0; ww < g.words; ++ww) {
                    std::uint64_t sbits = merged[ww];
                    while (sbits) {
                        int w = ww * 64 + std::countr_zero(sbits);
                        sbits &= sbits - 1;
                        if (w < v && (w < u || g.und_test(u, w))) continue;
                        const std::uint8_t* du = &g.dir[std::size_t(u) * g.n];
                        const std::uint8_t* dv = &g.dir[std::size_t(v) * g.n];
                        const std::uint8_t* dw = &g.dir[std::size_t(w) * g.n];
                        unsigned code = unsigned(du[v]) | unsigned(du[w]) << 1 |
                                        unsigned(dv[u]) << 2 | unsigned(dv[w]) << 3 |
                                        unsigned(dw[u]) << 4 | unsigned(dw[v]) << 5;
                        emit(u, v, w, code);
                    }
                }
            }
        }
    }
}

struct EdgeList {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<double> weights;
};

EdgeList edges_of(const Network& net) {
    EdgeList el;
    el.n = static_cast<int>(net.node_count());
    net.for_each_link([&](NodeId u, NodeId v, double w) {
        el.edges.emplace_back(u, v);
        el.weights.push_back(w);
    });
    return el;
}

std::array<std::int64_t, TriadClassifier::kNumClasses> census_plain(const EdgeList& el) {
    const TriadClassifier& classifier = TriadClassifier::instance();
    TripleScanGraph g(el.n);
    for (const auto& [u, v] : el.edges) g.add_edge(u, v);
    std::array<std::int64_t, TriadClassifier::kNumClasses> counts{};
    scan_connected_triples(g, [&](int, int, int, unsigned code) {
        ++counts[classifier.class_of(code)];
    });
    return counts;
}

std::map<unsigned, std::int64_t> census_colored(const EdgeList& attention,
                                                const EdgeList& disregard) {
    const auto& canon = colored_canon_table();
    const int n = attention.n;
    TripleScanGraph g(n);  // union structure drives the scan
    std::vector<std::uint8_t> dir_a(std::size_t(n) * n, 0), dir_d(std::size_t(n) * n, 0);
    for (const auto& [u, v] : attention.edges) {
        g.add_edge(u, v);
        dir_a[std::size_t(u) * n + v] = 1;
    }
    for (const auto& [u, v] : disregard.edges) {
        g.add_edge(u, v);
        dir_d[std::size_t(u) * n + v] = 1;
    }
    std::map<unsigned, std::int64_t> counts;
    scan_connected_triples(g, [&](int u, int v, int w, unsigned) {
        const int ids[3] = {u, v, w};
        unsigned code = 0;
        for (int k = 0; k < 6; ++k) {
            std::size_t at = std::size_t(ids[kPair[k][0]]) * n + ids[kPair[k][1]];
            code |= unsigned(dir_a[at]) << (2 * k);
            code |= unsigned(dir_d[at]) << (2 * k + 1);
        }
        ++counts[canon[code]];
    });
    return counts;
}

// target successful swaps; returns true when the attempt budget ran out.
bool rewire_edges(EdgeList& el, Rng& rng, std::int64_t target, std::int64_t* swaps_done) {
    const std::size_t m = el.edges.size();
    if (m < 2) throw std::invalid_argument("rewire_null: need at least 2 links");
    auto key = [](int u, int v) { return std::uint64_t(std::uint32_t(u)) << 32 | std::uint32_t(v); };
    std::unordered_set<std::uint64_t> present;
    present.reserve(m * 2);
    for (const auto& [u, v] : el.edges) present.insert(key(u, v));

    const std::int64_t fail_budget = 200 * std::int64_t(m) + 1000;
    std::int64_t successes = 0, fails = 0;
    while (successes < target) {
        if (fails > fail_budget) {
            if (swaps_done) *swaps_done = successes;
            return true;
        }
        std::size_t i = uniform_index(rng, m), j = uniform_index(rng, m);
        auto [a, b] = el.edges[i];
        auto [c, d] = el.edges[j];
        if (i == j || a == d || c == b || present.count(key(a, d)) || present.count(key(c, b))) {
            ++fails;
            continue;
        }
        present.erase(key(a, b));
        present.erase(key(c, d));
        present.insert(key(a, d));
        present.insert(key(c, b));
        el.edges[i] = {a, d};
        el.edges[j] = {c, b};
        ++successes;
        fails = 0;
    }
    if (swaps_done) *swaps_done = successes;
    return false;
}

Network rebuild_network(const Network& original, const EdgeList& el) {
    Network net;
    for (const std::string& code : original.node_codes()) net.add_node(code);
    for (std::size_t i = 0; i < el.edges.size(); ++i)
        net.add_link(el.edges[i].first, el.edges[i].second, el.weights[i]);
    return net;
}

struct NullStats {
    double mean = 0, std_dev = 0;
    std::int64_t ge_observed = 0;
};

NullStats null_stats(const std::vector<std::int64_t>& samples, std::int64_t observed) {
    NullStats s;
    const std::size_t n = samples.size();
    double sum = 0;
    for (std::int64_t x : samples) {
        sum += double(x);
        if (x >= observed) ++s.ge_observed;
    }
    s.mean = sum / double(n);
    if (n > 1) {
        double ss = 0;
        for (std::int64_t x : samples) ss += (double(x) - s.mean) * (double(x) - s.mean);
        s.std_dev = std::sqrt(ss / double(n - 1));
    }
    return s;
}

void run_parallel(int n_tasks, int threads, const std::function<void(int)>& task) {
    int t = threads > 0 ? threads : int(std::thread::hardware_concurrency());
    t = std::clamp(t, 1, std::max(1, n_tasks));
    if (t == 1) {
        for (int i = 0; i < n_tasks; ++i) task(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < t; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n_tasks; i = next.fetch_add(1)) task(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace

TriadClassifier::TriadClassifier() {
    std::array<unsigned, 64> canon{};
    for (unsigned code = 0; code < 64; ++code) {
        unsigned best = code;
        for (const auto& perm : kPerms) best = std::min(best, remap_plain(code, perm));
        canon[code] = best;
    }
    std::vector<unsigned> codes;
    for (unsigned code = 0; code < 64; ++code)
        if (weakly_connected_plain(code) && canon[code] == code) codes.push_back(code);
    if (codes.size() != kNumClasses)
        throw std::logic_error("triad class table construction is broken");

    const unsigned fan_out = canon[0b000011];   // 0->1, 0->2
    const unsigned cascade = canon[0b001001];   // 0->1, 1->2
    const unsigned fan_in = canon[0b001010];    // 0->2, 1->2
    const unsigned ffl = canon[0b001011];       // cascade plus shortcut 0->2
    class_codes_[0] = fan_out;
    class_codes_[1] = cascade;
    class_codes_[3] = fan_in;
    class_codes_[4] = ffl;
    std::size_t slot = 0;
    for (unsigned code : codes) {
        if (code == fan_out || code == cascade || code == fan_in || code == ffl) continue;
        while (slot == 0 || slot == 1 || slot == 3 || slot == 4) ++slot;
        class_codes_[slot++] = code;
    }

    class_by_code_.fill(-1);
    for (unsigned code = 0; code < 64; ++code) {
        if (!weakly_connected_plain(code)) continue;
        for (int idx = 0; idx < kNumClasses; ++idx)
            if (class_codes_[idx] == canon[code]) class_by_code_[code] = idx;
    }
}

const TriadClassifier& TriadClassifier::instance() {
    static const TriadClassifier classifier;
    return classifier;
}

std::string TriadClassifier::signature(int id) const {
    unsigned code = canonical_code(id);
    std::string s(6, '.');
    for (int k = 0; k < 6; ++k)
        if (code >> k & 1u) s[k] = '1';
    return s;
}

const char* TriadClassifier::name(int id) const {
    switch (id) {
        case 1: return "fan-out";
        case 2: return "cascade";
        case 4: return "fan-in";
        case 5: return "feed-forward-loop";
        default: return "";
    }
}

std::array<std::int64_t, TriadClassifier::kNumClasses> triad_census(const Network& net) {
    return census_plain(edges_of(net));
}

std::string colored_signature(unsigned code) {
    std::string s(6, '.');
    for (int k = 0; k < 6; ++k) {
        unsigned bits = code >> (2 * k) & 3u;
        s[k] = bits == 0 ? '.' : bits == 1 ? 'a' : bits == 2 ? 'd' : 'b';
    }
    return s;
}

std::map<unsigned, std::int64_t> colored_triad_census(const Multiplex& multiplex) {
    if (multiplex.attention.node_codes() != multiplex.disregard.node_codes())
        throw std::invalid_argument("multiplex layers do not share the node set");
    return census_colored(edges_of(multiplex.attention), edges_of(multiplex.disregard));
}

RewireResult rewire_null(const Network& net, std::uint64_t seed, int swaps_per_link) {
    if (swaps_per_link < 0) throw ConfigError("swaps_per_link must be >= 0");
    EdgeList el = edges_of(net);
    Rng rng(seed);
    RewireResult result;
    result.stalled = rewire_edges(el, rng, swaps_per_link * std::int64_t(el.edges.size()),
                                  &result.swaps_done);
    result.network = rebuild_network(net, el);
    return result;
}

MotifProfile motif_zscores(const Network& net, int n_samples, std::uint64_t seed,
                           int swaps_per_link, int threads) {
    if (n_samples < 1) throw ConfigError("n_samples must be >= 1");
    const EdgeList el = edges_of(net);
    const auto observed = census_plain(el);
    const std::int64_t target = swaps_per_link * std::int64_t(el.edges.size());

    std::vector<std::array<std::int64_t, TriadClassifier::kNumClasses>> samples(n_samples);
    std::vector<char> stalled(n_samples, 0);
    run_parallel(n_samples, threads, [&](int i) {
        EdgeList copy = el;
        Rng rng(derive_seed(seed, i));
        stalled[i] = rewire_edges(copy, rng, target, nullptr);
        samples[i] = census_plain(copy);
    });

    MotifProfile profile;
    profile.n_samples = n_samples;
    profile.seed = seed;
    profile.swaps_per_link = swaps_per_link;
    profile.p_threshold = 0.05;
    profile.stalled_samples = std::count(stalled.begin(), stalled.end(), 1);

    const TriadClassifier& classifier = TriadClassifier::instance();
    std::vector<std::int64_t> column(n_samples);
    for (int idx = 0; idx < TriadClassifier::kNumClasses; ++idx) {
        for (int i = 0; i < n_samples; ++i) column[i] = samples[i][idx];
        NullStats stats = null_stats(column, observed[idx]);
        MotifStats ms;
        ms.id = idx + 1;
        ms.signature = classifier.signature(ms.id);
        ms.name = classifier.name(ms.id);
        ms.observed = observed[idx];
        ms.null_mean = stats.mean;
        ms.null_std = stats.std_dev;
        if (stats.std_dev > 0) ms.z = (double(ms.observed) - stats.mean) / stats.std_dev;
        ms.p = double(1 + stats.ge_observed) / double(1 + n_samples);
        ms.significant = ms.p < profile.p_threshold;
        ms.low_count = ms.observed < 5;
        profile.classes.push_back(std::move(ms));
    }
    return profile;
}

MotifProfile colored_motif_zscores(const Multiplex& multiplex, int n_samples, std::uint64_t seed,
                                   int swaps_per_link, int threads) {
    if (n_samples < 1) throw ConfigError("n_samples must be >= 1");
    if (multiplex.attention.node_codes() != multiplex.disregard.node_codes())
        throw std::invalid_argument("multiplex layers do not share the node set");

    const EdgeList el_a = edges_of(multiplex.attention);
    const EdgeList el_d = edges_of(multiplex.disregard);
    const auto observed = census_colored(el_a, el_d);
    const std::int64_t target_a = swaps_per_link * std::int64_t(el_a.edges.size());
    const std::int64_t target_d = swaps_per_link * std::int64_t(el_d.edges.size());

    std::vector<std::map<unsigned, std::int64_t>> samples(n_samples);
    std::vector<char> stalled(n_samples, 0);
    run_parallel(n_samples, threads, [&](int i) {
        EdgeList copy_a = el_a, copy_d = el_d;
        bool bad = false;
        if (!copy_a.edges.empty()) {
            Rng rng(derive_seed(seed, 2 * std::uint64_t(i)));
            bad |= copy_a.edges.size() >= 2 && rewire_edges(copy_a, rng, target_a, nullptr);
        }
        if (!copy_d.edges.empty()) {
            Rng rng(derive_seed(seed, 2 * std::uint64_t(i) + 1));
            bad |= copy_d.edges.size() >= 2 && rewire_edges(copy_d, rng, target_d, nullptr);
        }
        stalled[i] = bad;
        samples[i] = census_colored(copy_a, copy_d);
    });

    // Class universe: everything seen in the original or any null draw.
    std::set<unsigned> codes;
    for (const auto& [code, count] : observed) codes.insert(code);
    for (const auto& sample : samples)
        for (const auto& [code, count] : sample) codes.insert(code);

    MotifProfile profile;
    profile.n_samples = n_samples;
    profile.seed = seed;
    profile.swaps_per_link = swaps_per_link;
    profile.p_threshold = 0.01;
    profile.min_abs_z = 1.0;
    profile.stalled_samples = std::count(stalled.begin(), stalled.end(), 1);

    std::vector<std::int64_t> column(n_samples);
    int id = 0;
    for (unsigned code : codes) {
        ++id;
        auto it = observed.find(code);
        std::int64_t obs = it == observed.end() ? 0 : it->second;
        for (int i = 0; i < n_samples; ++i) {
            auto sit = samples[i].find(code);
            column[i] = sit == samples[i].end() ? 0 : sit->second;
        }
        NullStats stats = null_stats(column, obs);
        MotifStats ms;
        ms.id = id;
        ms.signature = colored_signature(code);
        ms.observed = obs;
        ms.null_mean = stats.mean;
        ms.null_std = stats.std_dev;
        if (stats.std_dev > 0) ms.z = (double(obs) - stats.mean) / stats.std_dev;
        ms.p = double(1 + stats.ge_observed) / double(1 + n_samples);
        ms.significant = ms.p < profile.p_threshold && ms.z && std::abs(*ms.z) > *profile.min_abs_z;
        ms.low_count = obs < 5;
        profile.classes.push_back(std::move(ms));
    }
    std::stable_sort(profile.classes.begin(), profile.classes.end(),
                     [](const MotifStats& a, const MotifStats& b) {
                         double za = a.z ? std::abs(*a.z) : -1.0;
                         double zb = b.z ? std::abs(*b.z) : -1.0;
                         if (za != zb) return za > zb;
                         return a.id < b.id;
                     });
    return profile;
}

}  // namespace madn
