#ifndef MADN_NETWORK_HPP_
#define MADN_NETWORK_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace madn {

using NodeId = std::int32_t;

struct Link {
    NodeId to;
    double weight;
    bool operator==(const Link&) const = default;
};

// Directed weighted network over string-labeled nodes. At most one link per
// ordered pair, no self-loops, weights strictly positive. Adjacency is kept
// sorted by neighbor id so iteration order is deterministic.
class Network {
public:
    NodeId add_node(std::string_view code);               // idempotent per code
    void add_link(NodeId from, NodeId to, double weight); // throws on violation
    void add_link(std::string_view from, std::string_view to, double weight);

    std::optional<NodeId> find(std::string_view code) const;
    const std::string& code(NodeId id) const { return codes_[id]; }
    const std::vector<std::string>& node_codes() const { return codes_; }

    std::size_t node_count() const { return codes_.size(); }
    std::size_t link_count() const { return n_links_; }

    bool has_link(NodeId from, NodeId to) const;
    double link_weight(NodeId from, NodeId to) const;     // 0 when absent

    const std::vector<Link>& out_links(NodeId id) const { return out_[id]; }
    const std::vector<Link>& in_links(NodeId id) const { return in_[id]; }
    std::size_t out_degree(NodeId id) const { return out_[id].size(); }
    std::size_t in_degree(NodeId id) const { return in_[id].size(); }
    double out_strength(NodeId id) const;
    double in_strength(NodeId id) const;

    template <typename F>  // F(NodeId from, NodeId to, double weight)
    void for_each_link(F&& f) const {
        for (NodeId u = 0; u < static_cast<NodeId>(out_.size()); ++u)
            for (const Link& l : out_[u]) f(u, l.to, l.weight);
    }

    // Value equality: same node set and same code-labeled link map, exact
    // weights. Node ordering is presentation, not identity.
    bool operator==(const Network& other) const;

private:
    std::vector<std::string> codes_;
    std::unordered_map<std::string, NodeId> index_;
    std::vector<std::vector<Link>> out_;
    std::vector<std::vector<Link>> in_;
    std::size_t n_links_ = 0;
};

// Two directed layers sharing one node set (same codes, same order).
struct Multiplex {
    Network attention;
    Network disregard;
    const std::vector<std::string>& node_codes() const { return attention.node_codes(); }
};

}  // namespace madn

#endif  // MADN_NETWORK_HPP_
