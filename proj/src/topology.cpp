#include "madn/topology.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

#include "madn/util.hpp"

namespace madn {
namespace {

// Undirected unweighted projection as sorted adjacency lists.
std::vector<std::vector<NodeId>> undirected_projection(const Network& net) {
    std::vector<std::vector<NodeId>> adj(net.node_count());
    net.for_each_link([&](NodeId u, NodeId v, double) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    });
    for (auto& nbrs : adj) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return adj;
}

double mean_local_clustering(const std::vector<std::vector<NodeId>>& adj) {
    const std::size_t n = adj.size();
    double sum = 0;
    for (std::size_t u = 0; u < n; ++u) {
        const auto& nbrs = adj[u];
        if (nbrs.size() < 2) continue;
        std::size_t triangles = 0;
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                if (std::binary_search(adj[nbrs[i]].begin(), adj[nbrs[i]].end(), nbrs[j]))
                    ++triangles;
        sum += 2.0 * triangles / (double(nbrs.size()) * (nbrs.size() - 1));
    }
    return sum / n;
}

double degree_assortativity(const std::vector<std::vector<NodeId>>& adj) {
    // Pearson over edge-endpoint degree pairs, both orientations per edge.
    double n = 0, sx = 0, sxx = 0, sxy = 0;
    for (std::size_t u = 0; u < adj.size(); ++u) {
        for (NodeId v : adj[u]) {
            if (static_cast<std::size_t>(v) <= u) continue;
            double du = adj[u].size(), dv = adj[v].size();
            n += 2;
            sx += du + dv;
            sxx += du * du + dv * dv;
            sxy += 2 * du * dv;
        }
    }
    double num = n * sxy - sx * sx;
    double den = n * sxx - sx * sx;
    if (n == 0 || den == 0) return std::numeric_limits<double>::quiet_NaN();
    return num / den;
}

// Kosaraju: components in some order, plus per-node component index.
std::vector<std::vector<NodeId>> strongly_connected_components(const Network& net) {
    const NodeId n = static_cast<NodeId>(net.node_count());
    std::vector<NodeId> order;
    order.reserve(n);
    std::vector<char> seen(n, 0);
    for (NodeId start = 0; start < n; ++start) {
        if (seen[start]) continue;
        // Iterative DFS recording finish order.
        std::vector<std::pair<NodeId, std::size_t>> stack{{start, 0}};
        seen[start] = 1;
        while (!stack.empty()) {
            auto& [u, next] = stack.back();
            const auto& links = net.out_links(u);
            if (next < links.size()) {
                NodeId v = links[next++].to;
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back({v, 0});
                }
            } else {
                order.push_back(u);
                stack.pop_back();
            }
        }
    }
    std::vector<std::vector<NodeId>> components;
    std::vector<char> assigned(n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (assigned[*it]) continue;
        components.emplace_back();
        std::vector<NodeId> stack{*it};
        assigned[*it] = 1;
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            components.back().push_back(u);
            for (const Link& l : net.in_links(u)) {
                if (!assigned[l.to]) {
                    assigned[l.to] = 1;
                    stack.push_back(l.to);
                }
            }
        }
    }
    return components;
}

}  // namespace

TopologySummary summary(const Network& net) {
    if (net.node_count() == 0) throw std::invalid_argument("summary: empty network");
    TopologySummary s;
    s.n_nodes = net.node_count();
    s.n_links = net.link_count();
    s.mean_degree = double(s.n_links) / double(s.n_nodes);

    auto projection = undirected_projection(net);
    s.clustering = mean_local_clustering(projection);
    s.assortativity = degree_assortativity(projection);

    auto components = strongly_connected_components(net);
    // Largest component; ties break toward the smallest member code.
    const std::vector<NodeId>* largest = nullptr;
    std::string best_code;
    for (const auto& comp : components) {
        std::string min_code = net.code(*std::min_element(
            comp.begin(), comp.end(),
            [&](NodeId a, NodeId b) { return net.code(a) < net.code(b); }));
        if (!largest || comp.size() > largest->size() ||
            (comp.size() == largest->size() && min_code < best_code)) {
            largest = &comp;
            best_code = min_code;
        }
    }
    s.scc_fraction = double(largest->size()) / double(s.n_nodes);

    // Intra-component distances; any shortest path between members stays
    // inside the component, so plain BFS on the full graph suffices.
    if (largest->size() >= 2) {
        std::vector<char> in_scc(net.node_count(), 0);
        for (NodeId u : *largest) in_scc[u] = 1;
        long long total = 0, pairs = 0;
        std::vector<int> dist(net.node_count());
        for (NodeId src : *largest) {
            std::fill(dist.begin(), dist.end(), -1);
            dist[src] = 0;
            std::deque<NodeId> queue{src};
            while (!queue.empty()) {
                NodeId u = queue.front();
                queue.pop_front();
                for (const Link& l : net.out_links(u)) {
                    if (dist[l.to] < 0) {
                        dist[l.to] = dist[u] + 1;
                        queue.push_back(l.to);
                    }
                }
            }
            for (NodeId v : *largest) {
                if (v == src) continue;
                total += dist[v];
                ++pairs;
            }
        }
        s.mean_shortest_path = double(total) / double(pairs);
    }

    std::size_t mutual = 0;
    net.for_each_link([&](NodeId u, NodeId v, double) {
        if (net.has_link(v, u)) ++mutual;
    });
    s.reciprocity = s.n_links == 0 ? 0.0 : double(mutual) / double(s.n_links);
    return s;
}

std::vector<DegreePair> degree_centrality(const Network& net) {
    std::vector<DegreePair> degrees(net.node_count());
    for (NodeId u = 0; u < static_cast<NodeId>(net.node_count()); ++u)
        degrees[u] = {net.in_degree(u), net.out_degree(u)};
    return degrees;
}

std::vector<double> stationary_distribution(const Network& net, double damping, double tolerance,
                                            int max_iterations) {
    const std::size_t n = net.node_count();
    if (n == 0) throw std::invalid_argument("stationary_distribution: empty network");
    const bool lazy = damping == 1.0;  // half-steps keep periodic chains convergent

    std::vector<double> strength(n), x(n, 1.0 / double(n)), next(n);
    for (std::size_t u = 0; u < n; ++u) strength[u] = net.out_strength(static_cast<NodeId>(u));

    for (int iter = 0; iter < max_iterations; ++iter) {
        double dangling = 0;
        for (std::size_t u = 0; u < n; ++u)
            if (strength[u] == 0) dangling += x[u];
        double base = (damping * dangling + (1.0 - damping)) / double(n);
        std::fill(next.begin(), next.end(), base);
        for (std::size_t u = 0; u < n; ++u) {
            if (strength[u] == 0) continue;
            double scale = damping * x[u] / strength[u];
            for (const Link& l : net.out_links(static_cast<NodeId>(u)))
                next[l.to] += scale * l.weight;
        }
        if (lazy)
            for (std::size_t u = 0; u < n; ++u) next[u] = 0.5 * (x[u] + next[u]);
        double delta = 0;
        for (std::size_t u = 0; u < n; ++u) delta += std::abs(next[u] - x[u]);
        x.swap(next);
        if (delta < tolerance) {
            double sum = 0;
            for (double v : x) sum += v;
            for (double& v : x) v /= sum;
            return x;
        }
        if (iter == max_iterations - 1)
            throw std::runtime_error("power iteration did not converge within " +
                                     std::to_string(max_iterations) +
                                     " iterations (L1 residual " + format_double(delta) + ")");
    }
    throw std::runtime_error("power iteration did not converge");
}

std::vector<double> pagerank(const Network& net, const PageRankOptions& opts) {
    if (!(opts.damping > 0 && opts.damping < 1))
        throw ConfigError("pagerank damping must lie in (0,1)");
    return stationary_distribution(net, opts.damping, opts.tolerance, opts.max_iterations);
}

namespace {

std::vector<double> fit_tail(const std::vector<double>& degrees, int k_min) {
    std::vector<double> tail;
    for (double k : degrees)
        if (k >= k_min) tail.push_back(k);
    if (tail.size() < 2)
        throw std::invalid_argument("degree fit needs at least 2 tail points >= k_min");
    std::sort(tail.begin(), tail.end());
    return tail;
}

double ks_statistic(const std::vector<double>& sorted_tail, const auto& cdf) {
    const double n = double(sorted_tail.size());
    double d = 0;
    for (std::size_t i = 0; i < sorted_tail.size(); ++i) {
        double f = cdf(sorted_tail[i]);
        d = std::max(d, std::abs(double(i + 1) / n - f));
        d = std::max(d, std::abs(double(i) / n - f));
    }
    return d;
}

}  // namespace

DegreeFit fit_exponential(const std::vector<double>& degrees, int k_min) {
    auto tail = fit_tail(degrees, k_min);
    double mean_excess = 0;
    for (double k : tail) mean_excess += k - k_min;
    mean_excess /= double(tail.size());
    if (mean_excess == 0)
        throw std::invalid_argument("exponential fit: all tail degrees equal k_min");
    double rate = 1.0 / mean_excess;
    auto cdf = [&](double k) { return 1.0 - std::exp(-rate * (k - k_min)); };
    return {FitFamily::exponential, k_min, rate, ks_statistic(tail, cdf), tail.size()};
}

DegreeFit fit_powerlaw_tail(const std::vector<double>& degrees, int k_min) {
    if (k_min < 1) throw std::invalid_argument("power-law fit needs k_min >= 1");
    auto tail = fit_tail(degrees, k_min);
    double log_sum = 0;
    for (double k : tail) log_sum += std::log(k / double(k_min));
    if (log_sum == 0)
        throw std::invalid_argument("power-law fit: all tail degrees equal k_min");
    double alpha = 1.0 + double(tail.size()) / log_sum;
    auto cdf = [&](double k) { return 1.0 - std::pow(k / double(k_min), -(alpha - 1.0)); };
    return {FitFamily::power_law, k_min, alpha, ks_statistic(tail, cdf), tail.size()};
}

}  // namespace madn
