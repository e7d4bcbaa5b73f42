#include "madn/network.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace madn {
namespace {

std::vector<Link>::const_iterator find_link(const std::vector<Link>& links, NodeId to) {
    auto it = std::lower_bound(links.begin(), links.end(), to,
                               [](const Link& l, NodeId id) { return l.to < id; });
    if (it != links.end() && it->to == to) return it;
    return links.end();
}

}  // namespace

NodeId Network::add_node(std::string_view code) {
    if (code.empty()) throw std::invalid_argument("empty node code");
    auto it = index_.find(std::string(code));
    if (it != index_.end()) return it->second;
    NodeId id = static_cast<NodeId>(codes_.size());
    codes_.emplace_back(code);
    index_.emplace(codes_.back(), id);
    out_.emplace_back();
    in_.emplace_back();
    return id;
}

void Network::add_link(NodeId from, NodeId to, double weight) {
    if (from < 0 || to < 0 || from >= static_cast<NodeId>(codes_.size()) ||
        to >= static_cast<NodeId>(codes_.size()))
        throw std::invalid_argument("link endpoint is not a node");
    if (from == to)
        throw std::invalid_argument("self-loop rejected: " + codes_[from]);
    if (!(weight > 0))
        throw std::invalid_argument("link weight must be positive");
    auto& links = out_[from];
    auto pos = std::lower_bound(links.begin(), links.end(), to,
                                [](const Link& l, NodeId id) { return l.to < id; });
    if (pos != links.end() && pos->to == to)
        throw std::invalid_argument("duplicate link " + codes_[from] + " -> " + codes_[to]);
    links.insert(pos, Link{to, weight});
    auto& rev = in_[to];
    auto rpos = std::lower_bound(rev.begin(), rev.end(), from,
                                 [](const Link& l, NodeId id) { return l.to < id; });
    rev.insert(rpos, Link{from, weight});
    ++n_links_;
}

void Network::add_link(std::string_view from, std::string_view to, double weight) {
    add_link(add_node(from), add_node(to), weight);
}

std::optional<NodeId> Network::find(std::string_view code) const {
    auto it = index_.find(std::string(code));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool Network::has_link(NodeId from, NodeId to) const {
    return find_link(out_[from], to) != out_[from].end();
}

double Network::link_weight(NodeId from, NodeId to) const {
    auto it = find_link(out_[from], to);
    return it == out_[from].end() ? 0.0 : it->weight;
}

double Network::out_strength(NodeId id) const {
    double s = 0;
    for (const Link& l : out_[id]) s += l.weight;
    return s;
}

double Network::in_strength(NodeId id) const {
    double s = 0;
    for (const Link& l : in_[id]) s += l.weight;
    return s;
}

bool Network::operator==(const Network& other) const {
    if (codes_.size() != other.codes_.size() || n_links_ != other.n_links_) return false;
    std::set<std::string> a(codes_.begin(), codes_.end());
    std::set<std::string> b(other.codes_.begin(), other.codes_.end());
    if (a != b) return false;
    std::map<std::pair<std::string, std::string>, double> la, lb;
    for_each_link([&](NodeId u, NodeId v, double w) { la[{codes_[u], codes_[v]}] = w; });
    other.for_each_link(
        [&](NodeId u, NodeId v, double w) { lb[{other.codes_[u], other.codes_[v]}] = w; });
    return la == lb;
}

}  // namespace madn
