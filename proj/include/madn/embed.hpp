#ifndef MADN_EMBED_HPP_
#define MADN_EMBED_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "madn/network.hpp"

namespace madn {

struct WalkConfig {
    double return_param = 1.0;   // p: weight 1/p for stepping back to the previous node
    double inout_param = 1.0;    // q: weight 1/q for stepping outside the previous neighborhood
    int walks_per_node = 10;     // r
    int walk_length = 80;        // l, counting the start node
    std::uint64_t seed = 0;
    bool undirected = false;     // walk the undirected projection instead of out-links
    void validate() const;       // throws ConfigError
};

struct WalkCorpus {
    std::vector<std::string> vocab;       // node codes, index-aligned with tokens
    std::vector<std::vector<int>> walks;  // token sequences
};

// Second-order biased random walks: from previous node t standing at v, the
// unnormalized probability of stepping to x is weight(v->x) scaled by 1/p if
// x == t, by 1 if t links to x, and by 1/q otherwise. Walks truncate at
// nodes with no out-links. Bit-reproducible per seed.
WalkCorpus generate_walks(const Network& net, const WalkConfig& config);

// The exact normalized step distribution (for tests and inspection);
// prev == nullopt gives the first-order distribution.
std::vector<std::pair<NodeId, double>> step_distribution(const Network& net,
                                                         std::optional<NodeId> prev, NodeId cur,
                                                         const WalkConfig& config);

struct TrainConfig {
    int dimension = 128;
    int window = 10;
    int negatives = 5;
    int epochs = 5;
    double learning_rate = 0.025;  // decays linearly to 1e-4 of itself
    std::uint64_t seed = 0;
    // 0 or 1: sequential updates, deterministic per seed. Greater values
    // train lock-free over walk shards (hogwild); faster, not reproducible.
    int threads = 1;
    void validate() const;
};

struct EmbeddingMatrix {
    std::vector<std::string> vocab;
    int dimension = 0;
    std::vector<std::vector<double>> vectors;  // input vectors, vocab-aligned
    // training metadata
    int window = 0, negatives = 0, epochs = 0;
    double learning_rate = 0;
    std::vector<double> epoch_loss;            // mean pair loss per epoch
    double final_loss = 0;

    std::optional<std::size_t> index_of(std::string_view code) const;
};

// Skip-gram with negative sampling over the walk corpus, sequential SGD,
// deterministic per seed. Negatives are drawn from the corpus unigram
// distribution raised to the 3/4 power.
EmbeddingMatrix train_skipgram(const WalkCorpus& corpus, const TrainConfig& config);

// Per-pair negative-sampling loss and its analytic gradients, the exact
// objective optimized by train_skipgram. Public so correctness can be
// checked against finite differences.
struct SgnsExample {
    std::vector<double> center;
    std::vector<double> context;
    std::vector<std::vector<double>> negatives;
};
double sgns_loss(const SgnsExample& x);
SgnsExample sgns_gradient(const SgnsExample& x);  // same shapes, d(loss)/d(input)

struct RankedCountry {
    std::string code;
    double cosine;
};

// Countries ranked by cosine similarity to v(a) - v(b) + v(c), excluding
// a, b and c themselves.
std::vector<RankedCountry> analogy(const EmbeddingMatrix& embedding, const std::string& a,
                                   const std::string& b, const std::string& c);

double cosine_similarity(const std::vector<double>& x, const std::vector<double>& y);

void write_embedding_tsv(const EmbeddingMatrix& embedding, std::ostream& out);
EmbeddingMatrix read_embedding_tsv(std::istream& in);  // vectors only, metadata zeroed

}  // namespace madn

#endif  // MADN_EMBED_HPP_
