#ifndef MADN_COMMUNITY_HPP_
#define MADN_COMMUNITY_HPP_

#include <cstdint>
#include <vector>

#include "madn/network.hpp"

namespace madn {

// Stationary distribution of the weighted random walk with uniform
// teleportation at rate `teleport` (recorded-teleportation flow); identical
// to PageRank with damping 1 - teleport.
struct FlowDistribution {
    std::vector<double> rate;  // per node, sums to 1
    double teleport = 0;
};

FlowDistribution visit_rates(const Network& net, double teleport, double tolerance = 1e-13,
                             int max_iterations = 100000);

struct Partition {
    std::vector<int> assignment;  // node -> module id, contiguous from 0
    double codelength = 0;        // bits
    std::size_t module_count() const;
};

// Two-level map equation L(M) = q H(Q) + sum_m p_m H(P_m), in bits, with
// recorded teleportation: every step of the walk (link-following or
// teleporting, uniformly over all nodes) contributes to the flows. Module
// labels may be arbitrary; they are normalized internally.
double map_equation(const Network& net, const std::vector<int>& assignment, double teleport);

// Greedy search for the minimum-codelength partition: repeated node-move
// passes over random orders until no move improves, then module aggregation,
// to a fixpoint; best of n_trials restarts. Deterministic per (seed, trials).
Partition detect_communities(const Network& net, double teleport = 0.15, std::uint64_t seed = 0,
                             int n_trials = 10);

// Module ids relabeled in order of first appearance; the canonical form used
// for tie-breaking between equal-codelength partitions.
std::vector<int> normalize_assignment(const std::vector<int>& assignment);

}  // namespace madn

#endif  // MADN_COMMUNITY_HPP_
