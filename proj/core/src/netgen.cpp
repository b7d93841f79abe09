#include "opinion/netgen.hpp"

#include <cmath>
#include <random>

namespace opinion {

GeneratedNetwork complete_network(const std::vector<int>& group_sizes) {
    GroupAssignment groups = GroupAssignment::blocks(group_sizes);
    const int n = groups.size();
    if (n < 2) throw ValidationError("complete network needs at least 2 agents");

    double share = 1.0 / (n + 1);
    return {InteractionNetwork(Matrix::Constant(n, n, share), Vector::Constant(n, share)),
            groups};
}

GeneratedNetwork ring_network(const std::vector<int>& ring_labels) {
    const int n = static_cast<int>(ring_labels.size());
    if (n < 3) throw ValidationError("ring network needs at least 3 agents");
    GroupAssignment groups{ring_labels};

    Matrix w = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        w(i, i) = 0.25;
        w(i, (i + 1) % n) = 0.25;
        w(i, (i + n - 1) % n) = 0.25;
    }
    return {InteractionNetwork(std::move(w), Vector::Constant(n, 0.25)), groups};
}

GeneratedNetwork homogeneous_network(const HomogeneousSociety& s, int n) {
    if (n < 2) throw ValidationError("homogeneous network needs at least 2 agents");
    double size_a = s.eta() * n;
    double rounded = std::round(size_a);
    if (std::abs(size_a - rounded) > 1e-9 || rounded < 1.0 || rounded > n - 1.0) {
        throw ValidationError("eta * n must be an integral group size in [1, n-1]");
    }
    const int n_a = static_cast<int>(rounded);
    const int n_b = n - n_a;

    std::vector<int> labels(static_cast<std::size_t>(n), 1);
    for (int i = 0; i < n_a; ++i) labels[static_cast<std::size_t>(i)] = 0;

    Matrix w(n, n);
    Vector tw(n);
    for (int i = 0; i < n; ++i) {
        bool in_a = i < n_a;
        double w_own = in_a ? s.truth_weight_a() : s.truth_weight_b();
        double rho = in_a ? s.meeting_rate_a() : s.meeting_rate_b();
        double in_share = rho * (1.0 - w_own) / (in_a ? n_a : n_b);
        double cross_share = (1.0 - rho) * (1.0 - w_own) / (in_a ? n_b : n_a);
        for (int j = 0; j < n; ++j) {
            bool j_in_a = j < n_a;
            w(i, j) = (in_a == j_in_a) ? in_share : cross_share;
        }
        tw(i) = w_own;
    }
    return {InteractionNetwork(std::move(w), std::move(tw)),
            GroupAssignment(std::move(labels))};
}

GeneratedNetwork random_network(int n, int group_count, std::uint64_t seed,
                                const RandomNetworkOptions& options) {
    if (n < 1) throw ValidationError("network needs at least one agent");
    if (group_count < 1 || group_count > n) {
        throw ValidationError("group count must lie in [1, n]");
    }

    std::mt19937_64 rng(seed);
    // Uniform doubles built from raw bits, stable across standard libraries.
    auto uniform = [&rng]() {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };

    // First k agents pin down the groups, the rest land anywhere.
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        labels[static_cast<std::size_t>(i)] =
            i < group_count ? i : static_cast<int>(rng() % static_cast<std::uint64_t>(
                                                              group_count));
    }

    Matrix w = Matrix::Zero(n, n);
    Vector tw(n);
    for (int i = 0; i < n; ++i) {
        double span = options.max_truth_weight - options.min_truth_weight;
        tw(i) = options.min_truth_weight + span * uniform();

        std::vector<double> raw(static_cast<std::size_t>(n), 0.0);
        double total = 0.0;
        for (int j = 0; j < n; ++j) {
            bool keep = (i == j) ? uniform() < 0.5 : uniform() < options.link_density;
            if (keep) {
                raw[static_cast<std::size_t>(j)] = 0.05 + uniform();
                total += raw[static_cast<std::size_t>(j)];
            }
        }
        if (total == 0.0) {
            // Isolated agent: all remaining mass on the self-loop.
            raw[static_cast<std::size_t>(i)] = 1.0;
            total = 1.0;
        }
        for (int j = 0; j < n; ++j) {
            w(i, j) = raw[static_cast<std::size_t>(j)] / total * (1.0 - tw(i));
        }
    }
    return {InteractionNetwork(std::move(w), std::move(tw)),
            GroupAssignment(std::move(labels))};
}

}  // namespace opinion
