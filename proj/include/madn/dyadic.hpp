#ifndef MADN_DYADIC_HPP_
#define MADN_DYADIC_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "madn/network.hpp"

namespace madn {

// Joint distribution of link weights across the two layers. A pair linked in
// only one layer counts the other weight as 0.
struct WeightJointHistogram {
    int bin_size = 5;
    std::map<std::pair<int, int>, std::size_t> cells;  // (attention bin, disregard bin) -> count
    std::size_t total() const;
};

WeightJointHistogram weight_joint_histogram(const Network& attention, const Network& disregard,
                                            int bin_size = 5);

// Five shapes of a linked country pair after the combination rule: when both
// layers link an ordered pair, the higher-weight layer wins (tie -> attention).
enum class PairKind {
    attention_one_way,
    disregard_one_way,
    mutual_attention,
    mutual_disregard,
    opposed,
};
constexpr std::array<PairKind, 5> kAllPairKinds = {
    PairKind::attention_one_way, PairKind::disregard_one_way, PairKind::mutual_attention,
    PairKind::mutual_disregard, PairKind::opposed};
std::string to_string(PairKind kind);

struct PairwiseBreakdown {
    std::map<PairKind, std::size_t> counts;
    std::size_t total() const;
};

PairwiseBreakdown pairwise_breakdown(const Network& attention, const Network& disregard);

// Disparity-filter p-value of one link against the uniform-split null at an
// endpoint of degree k: alpha = (1 - p)^(k - 1). A degree-1 endpoint carries
// no evidence of heterogeneity, so alpha is defined as 1 there.
double disparity_alpha(double p, std::size_t k);

struct LinkSignificance {
    NodeId from, to;
    double weight;
    double alpha_sender;    // against the sender's other out-links
    double alpha_receiver;  // against the receiver's other in-links
    bool sig_to_sender;
    bool sig_to_receiver;
};

struct Backbone {
    double alpha_threshold;
    std::vector<LinkSignificance> links;        // all links of the network
    std::vector<const LinkSignificance*> kept;  // significant from either endpoint

    const LinkSignificance* find(NodeId from, NodeId to) const;
};

Backbone extract_backbone(const Network& net, double alpha_threshold = 0.05);

// The kept links as a network over the full original node set.
Network backbone_network(const Network& net, const Backbone& backbone);

// Canonical pairwise significance label. For an ordered pair (i, j) the four
// flags are: i->j significant to sender i, i->j significant to receiver j,
// j->i significant to sender j, j->i significant to receiver i. Swapping the
// endpoints maps (f0,f1,f2,f3) to (f2,f3,f0,f1); the canonical form puts the
// significance on the forward link, so label(i,j) == label(j,i). Exactly 10
// distinct labels exist.
class TaxonomyLabel {
public:
    TaxonomyLabel() = default;
    static TaxonomyLabel from_flags(bool sender_fwd, bool receiver_fwd, bool sender_rev,
                                    bool receiver_rev);
    static std::vector<TaxonomyLabel> all();     // the 10 canonical labels, sorted

    std::uint8_t signature() const { return signature_; }
    std::string notation() const;                // e.g. "[>->> .<-.]" in ASCII art
    std::string notation_utf8() const;           // with the triangle glyphs
    auto operator<=>(const TaxonomyLabel&) const = default;

private:
    explicit TaxonomyLabel(std::uint8_t canonical) : signature_(canonical) {}
    std::uint8_t signature_ = 0;
};

struct TaxonomyCensus {
    double alpha_threshold;
    std::map<TaxonomyLabel, std::size_t> counts;
    std::map<TaxonomyLabel, std::vector<std::pair<std::string, std::string>>> examples;
    std::map<std::string, std::map<TaxonomyLabel, std::size_t>> country_profile;
    std::size_t linked_pairs = 0;  // unordered pairs with at least one link
};

// Census over all unordered pairs with at least one link in the layer the
// backbone was extracted from. Keeps up to `max_examples` example pairs per
// label, in lexicographic pair order.
TaxonomyCensus taxonomy_census(const Network& net, const Backbone& backbone,
                               std::size_t max_examples = 2);

}  // namespace madn

#endif  // MADN_DYADIC_HPP_
