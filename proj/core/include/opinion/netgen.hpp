#pragma once

#include <cstdint>
#include <vector>

#include "opinion/homogeneous.hpp"
#include "opinion/types.hpp"

namespace opinion {

struct GeneratedNetwork {
    InteractionNetwork net;
    GroupAssignment groups;
};

/// Complete network over the given group sizes. Every agent splits attention
/// equally over n-1 links, one self-loop and the signal: each share is 1/(n+1).
GeneratedNetwork complete_network(const std::vector<int>& group_sizes);

/// Circulant ring with the given labels in ring order. Each agent weights the
/// two neighbors, the self-loop and the signal at 1/4.
GeneratedNetwork ring_network(const std::vector<int>& ring_labels);

/// n-agent realization of a two-group homogeneous society. Group A occupies
/// indices 0..nA-1 with nA = eta*n (must be integral). In-group entries (self
/// included) are rho_C (1-w_C)/n_C, cross-group entries (1-rho_C)(1-w_C)/n_other;
/// with no homophily this is the uniform (1-w_C)/n rule.
GeneratedNetwork homogeneous_network(const HomogeneousSociety& s, int n);

struct RandomNetworkOptions {
    double link_density{0.7};
    double min_truth_weight{0.05};
    double max_truth_weight{0.9};
};

/// Seeded random valid network: every agent keeps a truth weight in
/// [min_truth_weight, max_truth_weight] and spreads the rest over a random
/// link set. Used by property tests; deterministic across platforms.
GeneratedNetwork random_network(int n, int group_count, std::uint64_t seed,
                                const RandomNetworkOptions& options = {});

}  // namespace opinion
