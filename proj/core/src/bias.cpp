#include "opinion/bias.hpp"

#include <Eigen/LU>
#include <cmath>

namespace opinion {

namespace {

void require_compatible(const OpinionExchangeNetwork& x, const GroupAssignment& groups,
                        const BiasSpec& bias) {
    if (groups.size() != x.size()) {
        throw DimensionError("group assignment does not cover the network");
    }
    if (bias.biased_group < 0 || bias.biased_group >= groups.group_count()) {
        throw ValidationError("biased group id does not exist in the assignment");
    }
}

Vector masked_truth_weights(const OpinionExchangeNetwork& x,
                            const GroupAssignment& groups, int group) {
    Vector masked = Vector::Zero(x.size());
    for (int i = 0; i < x.size(); ++i) {
        if (groups.group_of(i) == group) masked(i) = x.truth_weights()(i);
    }
    return masked;
}

}  // namespace

OpinionVector steady_state_biased(const OpinionExchangeNetwork& x,
                                  const GroupAssignment& groups, double theta_star,
                                  const BiasSpec& bias) {
    require_compatible(x, groups, bias);
    double rho = spectral_radius(x.weights());
    if (rho >= 1.0) {
        throw SingularSystemError("steady_state_biased: spectral radius of |Wt| >= 1",
                                  rho);
    }

    const auto n = x.size();
    Vector injection(n);
    for (int i = 0; i < n; ++i) {
        double signal = theta_star;
        if (groups.group_of(i) == bias.biased_group) signal += bias.xi;
        injection(i) = x.truth_weights()(i) * signal;
    }
    Matrix system = Matrix::Identity(n, n) - x.weights();
    return Eigen::PartialPivLU<Matrix>(system).solve(injection);
}

BiasDecomposition decompose_bias(const OpinionExchangeNetwork& x,
                                 const GroupAssignment& groups, const BiasSpec& bias) {
    require_compatible(x, groups, bias);
    double rho = spectral_radius(x.weights());
    if (rho >= 1.0) {
        throw SingularSystemError("decompose_bias: spectral radius of |Wt| >= 1", rho);
    }

    const auto n = x.size();
    Eigen::PartialPivLU<Matrix> lu(Matrix::Identity(n, n) - x.weights());
    return {lu.solve(x.truth_weights()),
            lu.solve(masked_truth_weights(x, groups, bias.biased_group))};
}

BiasedSteadyState solve_biased(const OpinionExchangeNetwork& x,
                               const GroupAssignment& groups, double theta_star,
                               const BiasSpec& bias) {
    BiasedSteadyState out;
    out.xi = bias.xi;
    out.biased_group = bias.biased_group;

    BiasDecomposition parts = decompose_bias(x, groups, bias);
    out.b_tilde_biased = parts.b_tilde_biased;
    out.result.b_tilde = parts.b_tilde;
    out.result.mu = steady_state_biased(x, groups, theta_star, bias);

    const auto n = x.size();
    out.result.b =
        Eigen::PartialPivLU<Matrix>(Matrix::Identity(n, n) - x.weights().cwiseAbs())
            .solve(Vector::Ones(n));
    out.result.iterations = 0;

    // Residual against the biased fixed-point map, which is also the biased
    // best-response map (each agent replies to their own signal).
    Vector injection(n);
    for (int i = 0; i < n; ++i) {
        double signal = theta_star;
        if (groups.group_of(i) == bias.biased_group) signal += bias.xi;
        injection(i) = x.truth_weights()(i) * signal;
    }
    out.result.residual = (out.result.mu - x.weights() * out.result.mu - injection)
                              .lpNorm<Eigen::Infinity>();
    out.result.nash_residual = out.result.residual;
    return out;
}

}  // namespace opinion
