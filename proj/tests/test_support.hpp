#pragma once

// Shared helpers for the test suites: fixture locations, tolerance checks,
// deterministic random inputs and the brute-force oracles the module tests
// compare against. Oracles live here, independent of the library internals.

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "opinion/balance.hpp"
#include "opinion/netgen.hpp"
#include "opinion/types.hpp"

namespace testsupport {

inline std::string fixture_path(const std::string& name) {
    return std::string(OPINION_FIXTURE_DIR) + "/" + name;
}

inline double max_abs_diff(const opinion::Vector& a, const opinion::Vector& b) {
    return (a - b).lpNorm<Eigen::Infinity>();
}

inline double max_abs_diff(const opinion::Vector& a, const std::vector<double>& b) {
    opinion::Vector v = Eigen::Map<const opinion::Vector>(b.data(),
                                                          static_cast<long>(b.size()));
    return max_abs_diff(a, v);
}

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

/// Deterministic uniform double in [0,1), stable across standard libraries.
class Uniform {
public:
    explicit Uniform(std::uint64_t seed) : rng_(seed) {}
    double operator()() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
    double range(double lo, double hi) { return lo + (hi - lo) * (*this)(); }
    int below(int n) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(n)); }

private:
    std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------
// Signed-graph machinery for balance tests
// ---------------------------------------------------------------------------

/// Symmetric sign pattern: entries -1/0/+1, zero diagonal.
using SignMatrix = std::vector<std::vector<int>>;

/// Wraps a sign pattern into a valid exchange network (uniform magnitudes,
/// positive truth weights keep every row strictly sub-stochastic).
inline opinion::OpinionExchangeNetwork exchange_from_signs(const SignMatrix& sign) {
    const int n = static_cast<int>(sign.size());
    double magnitude = 0.5 / std::max(1, n);
    opinion::Matrix w = opinion::Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            w(i, j) = magnitude * sign[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }
    return opinion::OpinionExchangeNetwork(std::move(w),
                                           opinion::Vector::Constant(n, 0.25));
}

struct BruteForceBalance {
    bool strong{true};
    bool weak{true};
};

/// Enumerates every simple cycle (length >= 3) of the symmetric sign pattern
/// and classifies by negative-edge count: any odd count breaks strong balance,
/// a count of exactly one breaks weak balance.
inline BruteForceBalance brute_force_balance(const SignMatrix& sign) {
    const int n = static_cast<int>(sign.size());
    BruteForceBalance result;
    std::vector<int> path;
    std::vector<char> used(static_cast<std::size_t>(n), 0);

    auto edge = [&](int a, int b) { return sign[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };

    // Cycles are rooted at their smallest vertex; requiring the second vertex
    // to be smaller than the last de-duplicates the two traversal directions.
    std::function<void(int, int, int)> extend = [&](int root, int current, int negatives) {
        for (int next = root; next < n; ++next) {
            if (edge(current, next) == 0) continue;
            int negs = negatives + (edge(current, next) < 0 ? 1 : 0);
            if (next == root) {
                if (path.size() >= 3 && path[1] < path.back()) {
                    if (negs % 2 == 1) result.strong = false;
                    if (negs == 1) result.weak = false;
                }
                continue;
            }
            if (used[static_cast<std::size_t>(next)]) continue;
            used[static_cast<std::size_t>(next)] = 1;
            path.push_back(next);
            extend(root, next, negs);
            path.pop_back();
            used[static_cast<std::size_t>(next)] = 0;
        }
    };

    for (int root = 0; root < n && (result.strong || result.weak); ++root) {
        used[static_cast<std::size_t>(root)] = 1;
        path = {root};
        extend(root, root, 0);
        used[static_cast<std::size_t>(root)] = 0;
    }
    return result;
}

/// Seeded connected symmetric signed graph on n vertices (no self-loops).
inline SignMatrix random_connected_signs(int n, Uniform& rnd, double edge_prob = 0.5,
                                         double negative_prob = 0.4) {
    SignMatrix sign(static_cast<std::size_t>(n),
                    std::vector<int>(static_cast<std::size_t>(n), 0));
    auto put = [&](int a, int b, int s) {
        sign[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = s;
        sign[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = s;
    };
    // Random spanning tree first, extra edges afterwards.
    for (int v = 1; v < n; ++v) {
        int u = rnd.below(v);
        put(u, v, rnd() < negative_prob ? -1 : 1);
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (sign[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) continue;
            if (rnd() < edge_prob) put(i, j, rnd() < negative_prob ? -1 : 1);
        }
    }
    return sign;
}

/// Negative-edge count of a reported witness cycle (closing edge included),
/// or -1 when the sequence is not a genuine cycle of the sign pattern.
/// Length-1 and length-2 witnesses cover self-loops and mixed-sign pairs,
/// which the samplers here never produce.
inline int witness_negative_count(const std::vector<int>& witness, const SignMatrix& sign) {
    if (witness.size() < 3) return -1;
    int negatives = 0;
    for (std::size_t k = 0; k < witness.size(); ++k) {
        int a = witness[k];
        int b = witness[(k + 1) % witness.size()];
        int s = sign[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        if (s == 0) return -1;
        if (s < 0) ++negatives;
    }
    return negatives;
}

// ---------------------------------------------------------------------------
// Random model inputs
// ---------------------------------------------------------------------------

struct RandomExchange {
    opinion::GeneratedNetwork generated;
    opinion::IdentityParams params;
    opinion::OpinionExchangeNetwork exchange;
};

/// Random valid network + random valid intensities, built through the public
/// constructors so every draw satisfies the model invariants.
inline RandomExchange random_exchange(int n, int groups, std::uint64_t seed) {
    Uniform rnd(seed ^ 0x9e3779b97f4a7c15ULL);
    opinion::GeneratedNetwork gen = opinion::random_network(n, groups, seed);
    double alpha = rnd.range(0.1, 1.0);
    double beta = -rnd.range(0.0, alpha);  // alpha + beta >= 0 keeps params valid
    opinion::IdentityParams params{alpha, beta};
    opinion::OpinionExchangeNetwork x =
        opinion::build_opinion_exchange(gen.net, gen.groups, params);
    return {std::move(gen), params, std::move(x)};
}

}  // namespace testsupport
