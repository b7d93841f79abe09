#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "opinion/errors.hpp"

namespace opinion::exact {

/// Arbitrary-precision rational scalar. Results of the exact pipeline are
/// bit-exact fractions, free of binary64 rounding.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// The exact mode targets desk-scale reproduction work, not large systems.
inline constexpr int kMaxExactAgents = 32;

/// num/den reduced to canonical form.
Rational ratio(long num, long den);

/// The exact dyadic value stored in a binary64 (lossless).
Rational from_double(double x);

double to_double(const Rational& q);

/// Solves a * x = rhs by fraction-exact Gaussian elimination.
/// Throws SingularSystemError on rank deficiency and ValidationError when the
/// system is larger than kMaxExactAgents.
RationalVector solve(RationalMatrix a, RationalVector rhs);

/// Exact mirror of the floating-point model inputs.
struct Problem {
    RationalMatrix attention;
    RationalVector truth_weights;
    std::vector<int> labels;
    Rational alpha{1};
    Rational beta{-1};
    Rational theta_star{1};

    int n() const { return static_cast<int>(truth_weights.size()); }
};

/// Exact signed exchange structure.
struct Exchange {
    RationalMatrix weights;
    RationalVector truth_weights;

    int n() const { return static_cast<int>(truth_weights.size()); }
};

Exchange build_exchange(const Problem& p);

/// (I - Wt)^{-1} wt * theta.
RationalVector steady_state(const Exchange& x, const Rational& theta_star);

/// Injection-side bias: biased agents receive wt_i * (theta + xi).
RationalVector steady_state_biased(const Exchange& x, const std::vector<int>& labels,
                                   const Rational& theta_star, const Rational& xi,
                                   int biased_group);

/// (I - Wt)^{-1} wt.
RationalVector weighted_bonacich(const Exchange& x);

/// (I - |Wt|)^{-1} 1.
RationalVector bonacich_unsigned(const Exchange& x);

/// (I - W)^{-1} 1 on the interaction side.
RationalVector bonacich(const Problem& p);

// Exact counterparts of the network generators. Shares follow the
// 1/(links + 2) rule, so a complete network on n agents uses 1/(n+1).
Problem complete_network(const std::vector<int>& group_sizes);
Problem ring_network(const std::vector<int>& ring_labels);
Problem homogeneous_network(const Rational& eta, const Rational& w_a,
                            const Rational& w_b, const Rational& h_a,
                            const Rational& h_b, int n);

/// Representative-agent closed form for two homogeneous groups, exact.
std::pair<Rational, Rational> homogeneous_steady_state(const Rational& eta,
                                                       const Rational& w_a,
                                                       const Rational& w_b,
                                                       const Rational& h_a,
                                                       const Rational& h_b,
                                                       const Rational& theta_star);

}  // namespace opinion::exact
