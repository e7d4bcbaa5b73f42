#include "madn/community.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "madn/topology.hpp"
#include "madn/util.hpp"

namespace madn {
namespace {

double plogp(double x) { return x > 0 ? x * std::log2(x) : 0.0; }

constexpr double kMoveGain = 1e-10;  // improvement required to accept a move

// One aggregation level of the search. Link flows are exact walk-step
// probabilities between super-nodes; the dense teleportation component is
// carried analytically via (tele_out, size) so aggregation stays exact.
struct FlowNode {
    double rate = 0;            // summed visit rate of the originals inside
    double tele_out = 0;        // rate mass leaving by teleport, uniform over originals
    double size = 0;            // number of originals inside
    double link_out_total = 0;
    std::vector<std::pair<int, double>> out;  // link flows, no self entries
    std::vector<std::pair<int, double>> in;
};

struct FlowGraph {
    double n_orig = 0;
    std::vector<FlowNode> nodes;
};

FlowGraph build_flow_graph(const Network& net, const FlowDistribution& flow) {
    const std::size_t n = net.node_count();
    FlowGraph g;
    g.n_orig = double(n);
    g.nodes.resize(n);
    const double tau = flow.teleport;
    for (std::size_t u = 0; u < n; ++u) {
        FlowNode& node = g.nodes[u];
        node.rate = flow.rate[u];
        node.size = 1;
        double strength = net.out_strength(static_cast<NodeId>(u));
        bool dangling = strength == 0;
        node.tele_out = node.rate * ((1.0 - tau) * (dangling ? 1.0 : 0.0) + tau);
        if (!dangling) {
            for (const Link& l : net.out_links(static_cast<NodeId>(u))) {
                double f = node.rate * (1.0 - tau) * l.weight / strength;
                node.out.emplace_back(l.to, f);
                node.link_out_total += f;
            }
        }
    }
    for (std::size_t u = 0; u < n; ++u)
        for (const auto& [v, f] : g.nodes[u].out) g.nodes[v].in.emplace_back(int(u), f);
    return g;
}

FlowGraph aggregate(const FlowGraph& g, const std::vector<int>& module_of, int n_modules) {
    FlowGraph out;
    out.n_orig = g.n_orig;
    out.nodes.resize(n_modules);
    std::map<std::pair<int, int>, double> flows;
    for (std::size_t u = 0; u < g.nodes.size(); ++u) {
        const FlowNode& node = g.nodes[u];
        FlowNode& target = out.nodes[module_of[u]];
        target.rate += node.rate;
        target.tele_out += node.tele_out;
        target.size += node.size;
        for (const auto& [v, f] : node.out) {
            if (module_of[u] != module_of[v]) flows[{module_of[u], module_of[v]}] += f;
        }
    }
    for (const auto& [key, f] : flows) {
        out.nodes[key.first].out.emplace_back(key.second, f);
        out.nodes[key.first].link_out_total += f;
        out.nodes[key.second].in.emplace_back(key.first, f);
    }
    return out;
}

// Node-move search state over one flow graph. Module exit flow splits into a
// link part (maintained incrementally) and a teleport part that only depends
// on (tele_sum, size) of the module.
class MoveSearch {
public:
    explicit MoveSearch(const FlowGraph& g) : g_(g) {
        const std::size_t n = g.nodes.size();
        module_of_.resize(n);
        std::iota(module_of_.begin(), module_of_.end(), 0);
        rate_.resize(n);
        tele_.resize(n);
        size_.resize(n);
        qlink_.resize(n);
        members_.resize(n, 1);
        for (std::size_t i = 0; i < n; ++i) {
            rate_[i] = g.nodes[i].rate;
            tele_[i] = g.nodes[i].tele_out;
            size_[i] = g.nodes[i].size;
            qlink_[i] = g.nodes[i].link_out_total;
        }
        sum_q_ = 0;
        for (std::size_t m = 0; m < n; ++m) sum_q_ += q_of(m);
    }

    // Repeated passes in rng-shuffled order until no move improves.
    void optimize(Rng& rng) {
        std::vector<int> order(g_.nodes.size());
        std::iota(order.begin(), order.end(), 0);
        bool moved = true;
        while (moved) {
            moved = false;
            for (std::size_t i = order.size(); i > 1; --i)
                std::swap(order[i - 1], order[uniform_index(rng, i)]);
            for (int node : order) moved |= try_move(node);
        }
    }

    const std::vector<int>& module_of() const { return module_of_; }

private:
    double q_of(std::size_t m) const {
        return qlink_[m] + tele_[m] * (g_.n_orig - size_[m]) / g_.n_orig;
    }

    struct ModuleDelta {
        double qlink, tele, size, rate;
    };

    double q_value(const ModuleDelta& d) const {
        return d.qlink + d.tele * (g_.n_orig - d.size) / g_.n_orig;
    }

    bool try_move(int node) {
        const int a = module_of_[node];
        const FlowNode& fn = g_.nodes[node];

        // Link flow between `node` and each adjacent module.
        std::map<int, double> out_to, in_from;
        for (const auto& [v, f] : fn.out) out_to[module_of_[v]] += f;
        for (const auto& [v, f] : fn.in) in_from[module_of_[v]] += f;

        std::set<int> candidates;
        for (const auto& [m, f] : out_to) candidates.insert(m);
        for (const auto& [m, f] : in_from) candidates.insert(m);
        candidates.erase(a);
        if (members_[a] > 1) {  // splitting out into a fresh module
            if (free_.empty()) {
                grow_module_slot();
            }
            candidates.insert(free_.back());
        }
        if (candidates.empty()) return false;

        auto flow_to = [&](const std::map<int, double>& map, int m) {
            auto it = map.find(m);
            return it == map.end() ? 0.0 : it->second;
        };

        const double q_a_old = q_of(a);
        ModuleDelta a_new{qlink_[a] - (fn.link_out_total - flow_to(out_to, a)) + flow_to(in_from, a),
                          tele_[a] - fn.tele_out, size_[a] - fn.size, rate_[a] - fn.rate};
        const double q_a_new = q_value(a_new);

        double best_delta = -kMoveGain;
        int best_module = -1;
        ModuleDelta best_b{};
        double best_q_b_new = 0;
        for (int b : candidates) {
            const double q_b_old = q_of(b);
            ModuleDelta b_new{
                qlink_[b] + (fn.link_out_total - flow_to(out_to, b)) - flow_to(in_from, b),
                tele_[b] + fn.tele_out, size_[b] + fn.size, rate_[b] + fn.rate};
            const double q_b_new = q_value(b_new);
            const double sum_q_new = sum_q_ - q_a_old - q_b_old + q_a_new + q_b_new;
            double delta = plogp(sum_q_new) - plogp(sum_q_)
                         - 2 * (plogp(q_a_new) - plogp(q_a_old) + plogp(q_b_new) - plogp(q_b_old))
                         + plogp(q_a_new + a_new.rate) - plogp(q_a_old + rate_[a])
                         + plogp(q_b_new + b_new.rate) - plogp(q_b_old + rate_[b]);
            // Candidates ascend, so the smallest module id wins ties.
            if (delta < best_delta) {
                best_delta = delta;
                best_module = b;
                best_b = b_new;
                best_q_b_new = q_b_new;
            }
        }
        if (best_module < 0) return false;

        const double q_b_old = q_of(best_module);
        sum_q_ += q_a_new + best_q_b_new - q_a_old - q_b_old;
        qlink_[a] = a_new.qlink;
        tele_[a] = a_new.tele;
        size_[a] = a_new.size;
        rate_[a] = a_new.rate;
        qlink_[best_module] = best_b.qlink;
        tele_[best_module] = best_b.tele;
        size_[best_module] = best_b.size;
        rate_[best_module] = best_b.rate;
        module_of_[node] = best_module;
        if (--members_[a] == 0) free_.push_back(a);
        if (members_[best_module]++ == 0)
            free_.erase(std::remove(free_.begin(), free_.end(), best_module), free_.end());
        return true;
    }

    void grow_module_slot() {
        qlink_.push_back(0);
        tele_.push_back(0);
        size_.push_back(0);
        rate_.push_back(0);
        members_.push_back(0);
        free_.push_back(int(qlink_.size()) - 1);
    }

    const FlowGraph& g_;
    std::vector<int> module_of_;
    std::vector<double> rate_, tele_, size_, qlink_;
    std::vector<int> members_;
    std::vector<int> free_;
    double sum_q_ = 0;
};

std::vector<int> renumber(const std::vector<int>& labels, int* count_out) {
    std::vector<int> out(labels.size());
    std::map<int, int> remap;
    for (std::size_t i = 0; i < labels.size(); ++i)
        out[i] = remap.emplace(labels[i], int(remap.size())).first->second;
    if (count_out) *count_out = int(remap.size());
    return out;
}

// Full multi-pass search: optimize, aggregate, repeat; returns the partition
// of the original nodes.
std::vector<int> run_search(const FlowGraph& base, Rng& rng) {
    FlowGraph level = base;
    std::vector<int> mapping(base.nodes.size());
    std::iota(mapping.begin(), mapping.end(), 0);

    while (true) {
        MoveSearch search(level);
        search.optimize(rng);
        int n_modules = 0;
        std::vector<int> module_of = renumber(search.module_of(), &n_modules);
        if (n_modules == int(level.nodes.size())) break;  // nothing merged
        for (int& m : mapping) m = module_of[m];
        level = aggregate(level, module_of, n_modules);
        if (n_modules == 1) break;
    }
    return renumber(mapping, nullptr);
}

}  // namespace

std::size_t Partition::module_count() const {
    return assignment.empty()
               ? 0
               : std::size_t(*std::max_element(assignment.begin(), assignment.end())) + 1;
}

FlowDistribution visit_rates(const Network& net, double teleport, double tolerance,
                             int max_iterations) {
    if (teleport < 0 || teleport >= 1) throw ConfigError("teleport rate must lie in [0,1)");
    FlowDistribution flow;
    flow.teleport = teleport;
    flow.rate = stationary_distribution(net, 1.0 - teleport, tolerance, max_iterations);
    return flow;
}

double map_equation(const Network& net, const std::vector<int>& assignment, double teleport) {
    if (assignment.size() != net.node_count())
        throw std::invalid_argument("assignment size does not match the node count");
    int n_modules = 0;
    std::vector<int> module_of = renumber(assignment, &n_modules);

    FlowDistribution flow = visit_rates(net, teleport);
    FlowGraph g = build_flow_graph(net, flow);

    std::vector<double> q(n_modules, 0), p(n_modules, 0), tele(n_modules, 0), size(n_modules, 0);
    double node_term = 0;
    for (std::size_t u = 0; u < g.nodes.size(); ++u) {
        int m = module_of[u];
        p[m] += g.nodes[u].rate;
        tele[m] += g.nodes[u].tele_out;
        size[m] += g.nodes[u].size;
        node_term += plogp(g.nodes[u].rate);
        for (const auto& [v, f] : g.nodes[u].out)
            if (module_of[v] != m) q[m] += f;
    }
    double sum_q = 0, mod_terms = 0;
    for (int m = 0; m < n_modules; ++m) {
        q[m] += tele[m] * (g.n_orig - size[m]) / g.n_orig;
        sum_q += q[m];
        mod_terms += -2 * plogp(q[m]) + plogp(q[m] + p[m]);
    }
    return plogp(sum_q) + mod_terms - node_term;
}

std::vector<int> normalize_assignment(const std::vector<int>& assignment) {
    return renumber(assignment, nullptr);
}

Partition detect_communities(const Network& net, double teleport, std::uint64_t seed,
                             int n_trials) {
    if (n_trials < 1) throw ConfigError("n_trials must be >= 1");
    FlowDistribution flow = visit_rates(net, teleport);
    FlowGraph base = build_flow_graph(net, flow);

    Partition best;
    bool have_best = false;
    auto consider = [&](std::vector<int> assignment) {
        assignment = normalize_assignment(assignment);
        double L = map_equation(net, assignment, teleport);
        if (!have_best || L < best.codelength ||
            (L == best.codelength && assignment < best.assignment)) {
            best = {std::move(assignment), L};
            have_best = true;
        }
    };

    for (int trial = 0; trial < n_trials; ++trial) {
        Rng rng(derive_seed(seed, trial));
        consider(run_search(base, rng));
    }
    // Contract: never worse than the trivial partitions.
    consider(std::vector<int>(net.node_count(), 0));
    std::vector<int> singletons(net.node_count());
    std::iota(singletons.begin(), singletons.end(), 0);
    consider(singletons);
    return best;
}

}  // namespace madn
