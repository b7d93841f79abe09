#pragma once

#include <optional>
#include <vector>

#include "opinion/types.hpp"

namespace opinion {

/// Outcome of a structural-balance check on a signed network.
///
/// Strong balance: every cycle of the symmetrized sign graph carries an even
/// number of negative edges (two-clique structure). Weak balance: no cycle
/// carries exactly one negative edge (k-clique structure). Strong implies weak.
/// `witness` names a violating cycle (vertex sequence, closing edge implied)
/// and is empty exactly when the network is strongly balanced.
struct BalanceReport {
    bool strongly_balanced{false};
    bool weakly_balanced{false};
    std::optional<GroupAssignment> recovered_partition;
    std::vector<int> witness;
};

/// Decides strong balance by 2-coloring the symmetrized sign graph (positive
/// edge: same color, negative edge: different color) and weak balance by
/// checking that components of the positive subgraph contain no internal
/// negative edge. Zero entries carry no sign; only the support graph matters.
/// A pair with conflicting signs across the diagonal, or a negative self-loop,
/// fails both notions.
BalanceReport check_structural_balance(const OpinionExchangeNetwork& x);

}  // namespace opinion
