#ifndef MADN_MOTIFS_HPP_
#define MADN_MOTIFS_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "madn/network.hpp"

namespace madn {

// The 13 isomorphism classes of weakly connected 3-node directed graphs.
//
// A triad over nodes (0,1,2) is encoded as a 6-bit adjacency code, one bit
// per ordered pair in the fixed order (0,1),(0,2),(1,0),(1,2),(2,0),(2,1);
// the canonical code of a class is the minimum over the 6 node relabelings.
// Ids pin the named classes to 1 (fan-out), 2 (cascade), 4 (fan-in) and
// 5 (feed-forward loop); the other nine classes take the remaining ids in
// ascending canonical-code order. Every emitted profile carries the full
// id -> signature table, so the numbering is self-describing.
class TriadClassifier {
public:
    static constexpr int kNumClasses = 13;

    TriadClassifier();
    static const TriadClassifier& instance();

    int class_of(unsigned code) const { return class_by_code_[code & 63]; }  // -1: not connected
    unsigned canonical_code(int id) const { return class_codes_[id - 1]; }
    std::string signature(int id) const;        // e.g. "11...." over the pair order above
    const char* name(int id) const;             // anchored classes only, else ""

private:
    std::array<int, 64> class_by_code_;
    std::array<unsigned, kNumClasses> class_codes_;
};

// Counts of induced weakly connected triads, indexed by class id - 1.
std::array<std::int64_t, TriadClassifier::kNumClasses> triad_census(const Network& net);

// Colored triads: each ordered pair carries up to one attention and one
// disregard edge (2 bits per pair, 12-bit codes). Classes are keyed by
// canonical code; signatures use '.', 'a', 'd', 'b' per ordered pair.
std::map<unsigned, std::int64_t> colored_triad_census(const Multiplex& multiplex);
std::string colored_signature(unsigned canonical_code);

struct RewireResult {
    Network network;
    bool stalled = false;        // no legal swap found within the attempt budget
    std::int64_t swaps_done = 0;
};

// Degree-preserving randomization by double-edge swaps: pick links (a->b),
// (c->d), replace with (a->d),(c->b) unless a self-loop or duplicate would
// arise. Runs swaps_per_link * L successful swaps; weights travel with their
// source endpoint. Deterministic per seed.
RewireResult rewire_null(const Network& net, std::uint64_t seed, int swaps_per_link = 10);

struct MotifStats {
    int id = 0;
    std::string signature;
    std::string name;            // anchored plain classes only
    std::int64_t observed = 0;
    double null_mean = 0;
    double null_std = 0;         // sample standard deviation over the null draws
    std::optional<double> z;     // absent when null_std == 0
    double p = 1;                // add-one estimator: (1 + #{null >= obs}) / (1 + n)
    bool significant = false;
    bool low_count = false;      // observed < 5: Z unreliable
};

struct MotifProfile {
    std::vector<MotifStats> classes;
    int n_samples = 0;
    std::uint64_t seed = 0;
    int swaps_per_link = 0;
    double p_threshold = 0;
    std::optional<double> min_abs_z;  // colored profiles additionally require |Z| > this
    int stalled_samples = 0;
};

// Plain profile: significance rule p < 0.05; classes listed by id.
MotifProfile motif_zscores(const Network& net, int n_samples = 5000, std::uint64_t seed = 0,
                           int swaps_per_link = 10, int threads = 0);

// Colored profile: each layer is rewired independently (per-layer degree
// sequences preserved); significance rule p < 0.01 and |Z| > 1; classes
// listed by |Z| descending.
MotifProfile colored_motif_zscores(const Multiplex& multiplex, int n_samples = 5000,
                                   std::uint64_t seed = 0, int swaps_per_link = 10,
                                   int threads = 0);

}  // namespace madn

#endif  // MADN_MOTIFS_HPP_
