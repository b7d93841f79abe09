#pragma once

#include "opinion/dynamics.hpp"
#include "opinion/types.hpp"

namespace opinion {

/// A constant offset xi on the information source of one group's agents
/// (same units as theta_star). The matrix is untouched; only the injection
/// side of the dynamics changes.
struct BiasSpec {
    double xi{0.0};
    int biased_group{1};
};

/// Split of long-run opinions into signal and bias responses:
/// mu = b_tilde * theta_star + b_tilde_biased * xi, componentwise.
struct BiasDecomposition {
    Vector b_tilde;
    Vector b_tilde_biased;
};

/// Bundle the CLI serializes for biased solves.
struct BiasedSteadyState {
    SteadyStateResult result;
    Vector b_tilde_biased;
    double xi{0.0};
    int biased_group{1};
};

/// Solves (I - Wt) mu = injection with injection_i = wt_i * theta for unbiased
/// agents and wt_i * (theta + xi) for agents of the biased group.
OpinionVector steady_state_biased(const OpinionExchangeNetwork& x,
                                  const GroupAssignment& groups, double theta_star,
                                  const BiasSpec& bias);

/// Returns the signal-response vector (I - Wt)^{-1} wt and the bias-response
/// vector (I - Wt)^{-1} (wt masked to the biased group).
BiasDecomposition decompose_bias(const OpinionExchangeNetwork& x,
                                 const GroupAssignment& groups, const BiasSpec& bias);

/// Biased solve plus decomposition and diagnostics in one call.
BiasedSteadyState solve_biased(const OpinionExchangeNetwork& x,
                               const GroupAssignment& groups, double theta_star,
                               const BiasSpec& bias);

}  // namespace opinion
