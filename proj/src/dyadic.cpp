#include "madn/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "madn/util.hpp"

namespace madn {
namespace {

void require_shared_nodes(const Network& a, const Network& b) {
    if (a.node_count() != b.node_count())
        throw std::invalid_argument("layers do not share a node set");
    for (const std::string& code : a.node_codes())
        if (!b.find(code)) throw std::invalid_argument("layers do not share a node set");
}

}  // namespace

std::size_t WeightJointHistogram::total() const {
    std::size_t t = 0;
    for (const auto& [cell, count] : cells) t += count;
    return t;
}

WeightJointHistogram weight_joint_histogram(const Network& attention, const Network& disregard,
                                            int bin_size) {
    if (bin_size < 1) throw ConfigError("bin size must be >= 1");
    require_shared_nodes(attention, disregard);

    WeightJointHistogram hist;
    hist.bin_size = bin_size;
    std::set<std::pair<std::string, std::string>> pairs;
    attention.for_each_link([&](NodeId u, NodeId v, double) {
        pairs.insert({attention.code(u), attention.code(v)});
    });
    disregard.for_each_link([&](NodeId u, NodeId v, double) {
        pairs.insert({disregard.code(u), disregard.code(v)});
    });
    for (const auto& [src, dst] : pairs) {
        double wa = attention.link_weight(*attention.find(src), *attention.find(dst));
        double wd = disregard.link_weight(*disregard.find(src), *disregard.find(dst));
        ++hist.cells[{int(std::floor(wa / bin_size)), int(std::floor(wd / bin_size))}];
    }
    return hist;
}

std::string to_string(PairKind kind) {
    switch (kind) {
        case PairKind::attention_one_way: return "attention-one-way";
        case PairKind::disregard_one_way: return "disregard-one-way";
        case PairKind::mutual_attention: return "mutual-attention";
        case PairKind::mutual_disregard: return "mutual-disregard";
        case PairKind::opposed: return "opposed";
    }
    return "?";
}

std::size_t PairwiseBreakdown::total() const {
    std::size_t t = 0;
    for (const auto& [kind, count] : counts) t += count;
    return t;
}

PairwiseBreakdown pairwise_breakdown(const Network& attention, const Network& disregard) {
    require_shared_nodes(attention, disregard);

    // Combined layer per ordered pair: the higher-weight relationship wins,
    // ties resolve toward attention.
    std::map<std::pair<std::string, std::string>, bool> is_attention;
    attention.for_each_link([&](NodeId u, NodeId v, double) {
        is_attention[{attention.code(u), attention.code(v)}] = true;
    });
    disregard.for_each_link([&](NodeId u, NodeId v, double wd) {
        auto key = std::make_pair(disregard.code(u), disregard.code(v));
        auto it = is_attention.find(key);
        if (it == is_attention.end()) {
            is_attention[key] = false;
        } else {
            double wa =
                attention.link_weight(*attention.find(key.first), *attention.find(key.second));
            it->second = wa >= wd;
        }
    });

    PairwiseBreakdown breakdown;
    for (PairKind kind : kAllPairKinds) breakdown.counts[kind] = 0;
    std::set<std::pair<std::string, std::string>> done;
    for (const auto& [pair, fwd_attention] : is_attention) {
        auto unordered = std::minmax(pair.first, pair.second);
        if (!done.insert({unordered.first, unordered.second}).second) continue;
        auto rev = is_attention.find({pair.second, pair.first});
        PairKind kind;
        if (rev == is_attention.end()) {
            kind = fwd_attention ? PairKind::attention_one_way : PairKind::disregard_one_way;
        } else if (fwd_attention && rev->second) {
            kind = PairKind::mutual_attention;
        } else if (!fwd_attention && !rev->second) {
            kind = PairKind::mutual_disregard;
        } else {
            kind = PairKind::opposed;
        }
        ++breakdown.counts[kind];
    }
    return breakdown;
}

double disparity_alpha(double p, std::size_t k) {
    if (p < 0 || p > 1) throw std::invalid_argument("normalized weight outside [0,1]");
    if (k < 1) throw std::invalid_argument("endpoint degree must be >= 1");
    if (k == 1) return 1.0;
    return std::pow(1.0 - p, double(k - 1));
}

Backbone extract_backbone(const Network& net, double alpha_threshold) {
    if (!(alpha_threshold > 0 && alpha_threshold < 1))
        throw ConfigError("alpha threshold must lie in (0,1)");
    Backbone backbone;
    backbone.alpha_threshold = alpha_threshold;
    backbone.links.reserve(net.link_count());
    net.for_each_link([&](NodeId u, NodeId v, double w) {
        double a_out = disparity_alpha(w / net.out_strength(u), net.out_degree(u));
        double a_in = disparity_alpha(w / net.in_strength(v), net.in_degree(v));
        backbone.links.push_back({u, v, w, a_out, a_in, a_out < alpha_threshold,
                                  a_in < alpha_threshold});
    });
    for (const LinkSignificance& link : backbone.links)
        if (link.sig_to_sender || link.sig_to_receiver) backbone.kept.push_back(&link);
    return backbone;
}

const LinkSignificance* Backbone::find(NodeId from, NodeId to) const {
    // links are sorted by (from, to): for_each_link iterates them that way.
    auto it = std::lower_bound(links.begin(), links.end(), std::make_pair(from, to),
                               [](const LinkSignificance& l, const std::pair<NodeId, NodeId>& key) {
                                   return std::tie(l.from, l.to) < std::tie(key.first, key.second);
                               });
    if (it != links.end() && it->from == from && it->to == to) return &*it;
    return nullptr;
}

Network backbone_network(const Network& net, const Backbone& backbone) {
    Network out;
    for (const std::string& code : net.node_codes()) out.add_node(code);
    for (const LinkSignificance* link : backbone.kept)
        out.add_link(net.code(link->from), net.code(link->to), link->weight);
    return out;
}

TaxonomyLabel TaxonomyLabel::from_flags(bool sender_fwd, bool receiver_fwd, bool sender_rev,
                                        bool receiver_rev) {
    std::uint8_t sig = std::uint8_t(sender_fwd) << 3 | std::uint8_t(receiver_fwd) << 2 |
                       std::uint8_t(sender_rev) << 1 | std::uint8_t(receiver_rev);
    std::uint8_t swapped = std::uint8_t(((sig & 0b0011) << 2) | ((sig & 0b1100) >> 2));
    // Of the two orientations, keep the one carrying significance on the
    // forward link, so a one-way significant pair always reads as
    // [sig -> ...] rather than as its mirrored twin.
    return TaxonomyLabel(std::max(sig, swapped));
}

std::vector<TaxonomyLabel> TaxonomyLabel::all() {
    std::set<TaxonomyLabel> labels;
    for (int sig = 0; sig < 16; ++sig)
        labels.insert(from_flags(sig & 8, sig & 4, sig & 2, sig & 1));
    return {labels.begin(), labels.end()};
}

namespace {
std::string render_label(std::uint8_t sig, const char* fwd_sig, const char* rev_sig,
                         const char* dot, const char* right, const char* left) {
    std::string s = "[";
    s += (sig & 8) ? fwd_sig : dot;
    s += right;
    s += (sig & 4) ? fwd_sig : dot;
    s += " ";
    s += (sig & 1) ? rev_sig : dot;
    s += left;
    s += (sig & 2) ? rev_sig : dot;
    return s + "]";
}
}  // namespace

std::string TaxonomyLabel::notation() const {
    return render_label(signature_, ">", "<", ".", "->", "<-");
}

std::string TaxonomyLabel::notation_utf8() const {
    return render_label(signature_, "▷", "◁", "·", "→", "←");
}

TaxonomyCensus taxonomy_census(const Network& net, const Backbone& backbone,
                               std::size_t max_examples) {
    TaxonomyCensus census;
    census.alpha_threshold = backbone.alpha_threshold;
    for (TaxonomyLabel label : TaxonomyLabel::all()) census.counts[label] = 0;

    // Unordered linked pairs, ordered by code so examples are deterministic.
    std::set<std::pair<std::string, std::string>> pairs;
    net.for_each_link([&](NodeId u, NodeId v, double) {
        auto p = std::minmax(net.code(u), net.code(v));
        pairs.insert({p.first, p.second});
    });

    for (const auto& [ci, cj] : pairs) {
        NodeId i = *net.find(ci), j = *net.find(cj);
        const LinkSignificance* fwd = backbone.find(i, j);
        const LinkSignificance* rev = backbone.find(j, i);
        TaxonomyLabel label = TaxonomyLabel::from_flags(
            fwd && fwd->sig_to_sender, fwd && fwd->sig_to_receiver, rev && rev->sig_to_sender,
            rev && rev->sig_to_receiver);
        ++census.counts[label];
        auto& ex = census.examples[label];
        if (ex.size() < max_examples) ex.push_back({ci, cj});
        ++census.country_profile[ci][label];
        ++census.country_profile[cj][label];
        ++census.linked_pairs;
    }
    return census;
}

}  // namespace madn
