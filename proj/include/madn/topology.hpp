#ifndef MADN_TOPOLOGY_HPP_
#define MADN_TOPOLOGY_HPP_

#include <cstddef>
#include <vector>

#include "madn/network.hpp"

namespace madn {

// Whole-network characteristics. Conventions:
//  - clustering: mean local clustering coefficient on the undirected
//    unweighted projection; nodes of projected degree < 2 contribute 0.
//  - assortativity: Pearson correlation of endpoint degrees over the
//    projection's edges (each edge contributes both orientations); NaN when
//    degenerate (zero variance).
//  - mean_shortest_path: unweighted directed distances averaged over ordered
//    pairs of distinct nodes inside the largest strongly connected
//    component (ties between equal-sized components break toward the one
//    holding the lexicographically smallest code); 0 when that component is
//    a single node.
struct TopologySummary {
    std::size_t n_nodes = 0;
    std::size_t n_links = 0;
    double mean_degree = 0;        // L / N
    double clustering = 0;
    double assortativity = 0;      // may be NaN
    double scc_fraction = 0;       // largest SCC size / N
    double mean_shortest_path = 0;
    double reciprocity = 0;        // fraction of links whose reverse exists
};

TopologySummary summary(const Network& net);  // throws on empty network

struct DegreePair {
    std::size_t in = 0;
    std::size_t out = 0;
};

// Unweighted link counts per node, aligned with node ids.
std::vector<DegreePair> degree_centrality(const Network& net);

struct PageRankOptions {
    double damping = 0.85;
    double tolerance = 1e-10;     // L1 convergence threshold
    int max_iterations = 1000;
};

// Weighted PageRank: transition probability proportional to link weight over
// the source's out-strength; dangling mass spread uniformly; scores sum to 1.
std::vector<double> pagerank(const Network& net, const PageRankOptions& opts = {});

// Power-iteration core behind pagerank and random-walk visit rates. Accepts
// damping == 1 (no teleportation), where it takes lazy half-steps so that
// periodic chains still converge; the fixed point is unchanged.
std::vector<double> stationary_distribution(const Network& net, double damping, double tolerance,
                                            int max_iterations);

enum class FitFamily { exponential, power_law };

struct DegreeFit {
    FitFamily family;
    int k_min = 0;
    double parameter = 0;    // MLE rate (exponential) or exponent (power law)
    double ks_statistic = 0;
    std::size_t n_tail = 0;  // degrees >= k_min used for the fit
};

// Continuous-approximation MLE over the tail {k >= k_min}:
//   exponential: rate = 1 / mean(k - k_min)
//   power law:   exponent = 1 + n / sum ln(k_i / k_min)
// The stored parameter is the rate/exponent itself; the fitted survival laws
// are exp(-rate * (k - k_min)) and (k / k_min)^-(exponent - 1). Inputs are
// real-valued so continuous samples can be fitted too.
DegreeFit fit_exponential(const std::vector<double>& degrees, int k_min);
DegreeFit fit_powerlaw_tail(const std::vector<double>& degrees, int k_min);

}  // namespace madn

#endif  // MADN_TOPOLOGY_HPP_
