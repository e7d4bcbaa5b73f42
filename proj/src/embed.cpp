#include "madn/embed.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "madn/util.hpp"

namespace madn {
namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// Neighborhood view honoring the undirected flag: (neighbor, weight) pairs.
std::vector<std::pair<NodeId, double>> neighbors_of(const Network& net, NodeId u,
                                                    bool undirected) {
    if (!undirected) {
        std::vector<std::pair<NodeId, double>> out;
        for (const Link& l : net.out_links(u)) out.emplace_back(l.to, l.weight);
        return out;
    }
    std::map<NodeId, double> merged;
    for (const Link& l : net.out_links(u)) merged[l.to] += l.weight;
    for (const Link& l : net.in_links(u)) merged[l.to] += l.weight;
    return {merged.begin(), merged.end()};
}

bool linked(const Network& net, NodeId from, NodeId to, bool undirected) {
    return net.has_link(from, to) || (undirected && net.has_link(to, from));
}

}  // namespace

void WalkConfig::validate() const {
    if (!(return_param > 0) || !(inout_param > 0))
        throw ConfigError("walk bias parameters p and q must be > 0");
    if (walks_per_node < 1) throw ConfigError("walks_per_node must be >= 1");
    if (walk_length < 2) throw ConfigError("walk_length must be >= 2");
}

std::vector<std::pair<NodeId, double>> step_distribution(const Network& net,
                                                         std::optional<NodeId> prev, NodeId cur,
                                                         const WalkConfig& config) {
    config.validate();
    auto nbrs = neighbors_of(net, cur, config.undirected);
    std::vector<std::pair<NodeId, double>> dist;
    double total = 0;
    for (const auto& [x, w] : nbrs) {
        double bias = 1.0;
        if (prev) {
            if (x == *prev)
                bias = 1.0 / config.return_param;
            else if (linked(net, *prev, x, config.undirected))
                bias = 1.0;
            else
                bias = 1.0 / config.inout_param;
        }
        dist.emplace_back(x, w * bias);
        total += w * bias;
    }
    for (auto& [x, p] : dist) p /= total;
    return dist;
}

WalkCorpus generate_walks(const Network& net, const WalkConfig& config) {
    config.validate();
    if (net.link_count() == 0) throw std::invalid_argument("generate_walks: network has no links");

    WalkCorpus corpus;
    corpus.vocab = net.node_codes();
    const NodeId n = static_cast<NodeId>(net.node_count());

    std::vector<double> cumulative;
    for (NodeId start = 0; start < n; ++start) {
        for (int r = 0; r < config.walks_per_node; ++r) {
            // Per-(node, walk) seeds keep the corpus independent of scheduling.
            Rng rng(derive_seed(config.seed, std::uint64_t(start) * config.walks_per_node + r));
            std::vector<int> walk{start};
            std::optional<NodeId> prev;
            NodeId cur = start;
            while (static_cast<int>(walk.size()) < config.walk_length) {
                auto nbrs = neighbors_of(net, cur, config.undirected);
                if (nbrs.empty()) break;
                cumulative.clear();
                double total = 0;
                for (const auto& [x, w] : nbrs) {
                    double bias = 1.0;
                    if (prev) {
                        if (x == *prev)
                            bias = 1.0 / config.return_param;
                        else if (!linked(net, *prev, x, config.undirected))
                            bias = 1.0 / config.inout_param;
                    }
                    total += w * bias;
                    cumulative.push_back(total);
                }
                double u = uniform_unit(rng) * total;
                std::size_t pick =
                    std::lower_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin();
                if (pick >= nbrs.size()) pick = nbrs.size() - 1;
                prev = cur;
                cur = nbrs[pick].first;
                walk.push_back(cur);
            }
            corpus.walks.push_back(std::move(walk));
        }
    }
    return corpus;
}

void TrainConfig::validate() const {
    if (dimension < 1) throw ConfigError("dimension must be >= 1");
    if (window < 1) throw ConfigError("window must be >= 1");
    if (negatives < 0) throw ConfigError("negatives must be >= 0");
    if (epochs < 1) throw ConfigError("epochs must be >= 1");
    if (!(learning_rate > 0)) throw ConfigError("learning rate must be > 0");
    if (threads < 0) throw ConfigError("threads must be >= 0");
}

double sgns_loss(const SgnsExample& x) {
    auto dot = [](const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s;
    };
    double loss = -std::log(sigmoid(dot(x.context, x.center)));
    for (const auto& neg : x.negatives) loss += -std::log(sigmoid(-dot(neg, x.center)));
    return loss;
}

SgnsExample sgns_gradient(const SgnsExample& x) {
    const std::size_t d = x.center.size();
    auto dot = [](const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s;
    };
    SgnsExample g;
    g.center.assign(d, 0.0);
    g.context.assign(d, 0.0);
    g.negatives.assign(x.negatives.size(), std::vector<double>(d, 0.0));

    double gpos = sigmoid(dot(x.context, x.center)) - 1.0;  // d loss / d (u.v)
    for (std::size_t i = 0; i < d; ++i) {
        g.center[i] += gpos * x.context[i];
        g.context[i] = gpos * x.center[i];
    }
    for (std::size_t k = 0; k < x.negatives.size(); ++k) {
        double gneg = sigmoid(dot(x.negatives[k], x.center));
        for (std::size_t i = 0; i < d; ++i) {
            g.center[i] += gneg * x.negatives[k][i];
            g.negatives[k][i] = gneg * x.center[i];
        }
    }
    return g;
}

EmbeddingMatrix train_skipgram(const WalkCorpus& corpus, const TrainConfig& config) {
    config.validate();
    if (corpus.walks.empty()) throw std::invalid_argument("train_skipgram: empty corpus");
    const std::size_t v = corpus.vocab.size();
    const int d = config.dimension;

    // Unigram^(3/4) cumulative table for negative draws.
    std::vector<double> freq(v, 0.0);
    std::size_t total_pairs = 0;
    for (const auto& walk : corpus.walks) {
        for (std::size_t i = 0; i < walk.size(); ++i) {
            freq[walk[i]] += 1.0;
            std::size_t lo = i > std::size_t(config.window) ? i - config.window : 0;
            std::size_t hi = std::min(walk.size() - 1, i + config.window);
            total_pairs += (hi - lo);  // contexts excluding the center itself
        }
    }
    std::vector<double> neg_cumulative(v);
    double acc = 0;
    for (std::size_t i = 0; i < v; ++i) {
        acc += std::pow(freq[i], 0.75);
        neg_cumulative[i] = acc;
    }
    if (acc <= 0) throw std::invalid_argument("train_skipgram: corpus has no tokens");

    Rng rng(config.seed);
    EmbeddingMatrix emb;
    emb.vocab = corpus.vocab;
    emb.dimension = d;
    emb.window = config.window;
    emb.negatives = config.negatives;
    emb.epochs = config.epochs;
    emb.learning_rate = config.learning_rate;

    // word2vec-style init: small random input vectors, zero output vectors.
    std::vector<double> input(v * d), output(v * d, 0.0);
    for (double& x : input) x = (uniform_unit(rng) - 0.5) / d;

    const double min_alpha = config.learning_rate * 1e-4;
    const double total_updates = double(total_pairs) * config.epochs;
    std::atomic<std::size_t> processed{0};

    // All pair updates for the walks in [first, last); returns summed loss
    // and pair count. With several workers the vector writes race (hogwild);
    // the sequential path is the deterministic one.
    auto train_range = [&](std::size_t first, std::size_t last, Rng& worker_rng) {
        std::pair<double, std::size_t> result{0.0, 0};
        std::vector<double> center_grad(d);
        auto draw_negative = [&]() {
            double u = uniform_unit(worker_rng) * acc;
            return std::size_t(std::lower_bound(neg_cumulative.begin(), neg_cumulative.end(), u) -
                               neg_cumulative.begin());
        };
        for (std::size_t w = first; w < last; ++w) {
            const auto& walk = corpus.walks[w];
            for (std::size_t i = 0; i < walk.size(); ++i) {
                const int center = walk[i];
                double* vc = &input[std::size_t(center) * d];
                std::size_t lo = i > std::size_t(config.window) ? i - config.window : 0;
                std::size_t hi = std::min(walk.size() - 1, i + config.window);
                for (std::size_t j = lo; j <= hi; ++j) {
                    if (j == i) continue;
                    const int context = walk[j];
                    std::size_t done = processed.fetch_add(1, std::memory_order_relaxed);
                    double alpha = std::max(
                        min_alpha, config.learning_rate * (1.0 - double(done) / total_updates));

                    std::fill(center_grad.begin(), center_grad.end(), 0.0);
                    double pair_loss = 0;

                    double* uc = &output[std::size_t(context) * d];
                    double dot = 0;
                    for (int k = 0; k < d; ++k) dot += uc[k] * vc[k];
                    double s = sigmoid(dot);
                    pair_loss -= std::log(std::max(s, 1e-300));
                    double gpos = s - 1.0;
                    for (int k = 0; k < d; ++k) {
                        center_grad[k] += gpos * uc[k];
                        uc[k] -= alpha * gpos * vc[k];
                    }
                    for (int neg = 0; neg < config.negatives; ++neg) {
                        std::size_t sample = draw_negative();
                        if (sample == std::size_t(context)) continue;  // word2vec convention
                        double* un = &output[sample * d];
                        double ndot = 0;
                        for (int k = 0; k < d; ++k) ndot += un[k] * vc[k];
                        double ns = sigmoid(-ndot);
                        pair_loss -= std::log(std::max(ns, 1e-300));
                        double gneg = sigmoid(ndot);
                        for (int k = 0; k < d; ++k) {
                            center_grad[k] += gneg * un[k];
                            un[k] -= alpha * gneg * vc[k];
                        }
                    }
                    for (int k = 0; k < d; ++k) vc[k] -= alpha * center_grad[k];
                    result.first += pair_loss;
                    ++result.second;
                }
            }
        }
        return result;
    };

    const int workers = std::max(1, config.threads);
    for (int epoch = 0; epoch < config.epochs; ++epoch) {
        double loss_sum = 0;
        std::size_t loss_count = 0;
        if (workers == 1) {
            auto [sum, count] = train_range(0, corpus.walks.size(), rng);
            loss_sum = sum;
            loss_count = count;
        } else {
            std::vector<std::pair<double, std::size_t>> partial(workers);
            std::vector<std::thread> pool;
            for (int t = 0; t < workers; ++t)
                pool.emplace_back([&, t] {
                    std::size_t first = corpus.walks.size() * t / workers;
                    std::size_t last = corpus.walks.size() * (t + 1) / workers;
                    Rng worker_rng(derive_seed(config.seed, std::uint64_t(epoch) * workers + t));
                    partial[t] = train_range(first, last, worker_rng);
                });
            for (auto& th : pool) th.join();
            for (const auto& [sum, count] : partial) {
                loss_sum += sum;
                loss_count += count;
            }
        }
        double epoch_mean = loss_count ? loss_sum / double(loss_count) : 0.0;
        if (!std::isfinite(epoch_mean))
            throw std::runtime_error("training diverged (non-finite loss); lower the learning rate");
        emb.epoch_loss.push_back(epoch_mean);
    }
    emb.final_loss = emb.epoch_loss.back();

    emb.vectors.assign(v, std::vector<double>(d));
    for (std::size_t i = 0; i < v; ++i)
        for (int k = 0; k < d; ++k) emb.vectors[i][k] = input[i * d + k];
    return emb;
}

std::optional<std::size_t> EmbeddingMatrix::index_of(std::string_view code) const {
    for (std::size_t i = 0; i < vocab.size(); ++i)
        if (vocab[i] == code) return i;
    return std::nullopt;
}

double cosine_similarity(const std::vector<double>& x, const std::vector<double>& y) {
    double dot = 0, nx = 0, ny = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        dot += x[i] * y[i];
        nx += x[i] * x[i];
        ny += y[i] * y[i];
    }
    if (nx == 0 || ny == 0) return 0;
    return dot / std::sqrt(nx * ny);
}

std::vector<RankedCountry> analogy(const EmbeddingMatrix& embedding, const std::string& a,
                                   const std::string& b, const std::string& c) {
    auto ia = embedding.index_of(a), ib = embedding.index_of(b), ic = embedding.index_of(c);
    if (!ia || !ib || !ic)
        throw std::invalid_argument("analogy: unknown country code among '" + a + "', '" + b +
                                    "', '" + c + "'");
    std::vector<double> query(embedding.dimension);
    for (int k = 0; k < embedding.dimension; ++k)
        query[k] = embedding.vectors[*ia][k] - embedding.vectors[*ib][k] + embedding.vectors[*ic][k];

    std::vector<RankedCountry> ranked;
    for (std::size_t i = 0; i < embedding.vocab.size(); ++i) {
        if (i == *ia || i == *ib || i == *ic) continue;
        ranked.push_back({embedding.vocab[i], cosine_similarity(query, embedding.vectors[i])});
    }
    std::sort(ranked.begin(), ranked.end(), [](const RankedCountry& x, const RankedCountry& y) {
        if (x.cosine != y.cosine) return x.cosine > y.cosine;
        return x.code < y.code;
    });
    return ranked;
}

void write_embedding_tsv(const EmbeddingMatrix& embedding, std::ostream& out) {
    std::vector<std::size_t> order(embedding.vocab.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return embedding.vocab[a] < embedding.vocab[b];
    });
    for (std::size_t i : order) {
        out << embedding.vocab[i];
        for (int k = 0; k < embedding.dimension; ++k)
            out << '\t' << format_double(embedding.vectors[i][k]);
        out << '\n';
    }
}

EmbeddingMatrix read_embedding_tsv(std::istream& in) {
    EmbeddingMatrix emb;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        auto fields = split(trim(line), '\t');
        if (fields.size() < 2) throw ParseError("embedding row needs code and values", lineno);
        std::vector<double> vec;
        for (std::size_t i = 1; i < fields.size(); ++i) vec.push_back(parse_double(fields[i]));
        if (emb.dimension == 0)
            emb.dimension = int(vec.size());
        else if (int(vec.size()) != emb.dimension)
            throw ParseError("inconsistent embedding dimension", lineno);
        emb.vocab.emplace_back(fields[0]);
        emb.vectors.push_back(std::move(vec));
    }
    return emb;
}

}  // namespace madn
