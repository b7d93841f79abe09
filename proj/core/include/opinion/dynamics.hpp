#pragma once

#include <vector>

#include "opinion/types.hpp"

namespace opinion {

namespace defaults {
/// Stopping tolerance for fixed-point iteration (sup-norm step size).
inline constexpr double iteration_tol = 1e-12;
/// Residual bound a direct solve is expected to meet.
inline constexpr double residual_tol = 1e-10;
/// Tolerance for the equilibrium check.
inline constexpr double nash_tol = 1e-10;
/// Power-iteration stopping tolerance and iteration cap.
inline constexpr double power_tol = 1e-10;
inline constexpr int power_max_iterations = 10000;
}  // namespace defaults

/// Long-run solution of mu = Wt * mu + wt * theta_star together with both
/// centrality vectors and the diagnostics that certify it.
struct SteadyStateResult {
    OpinionVector mu;
    /// Centralities of the unsigned structure: (I - |Wt|)^{-1} 1. Coincides
    /// with the interaction-network centrality when alpha = -beta = 1.
    Vector b;
    /// Signed, truth-weighted centralities: (I - Wt)^{-1} wt. Long-run
    /// opinions equal b_tilde * theta_star.
    Vector b_tilde;
    /// 0 for a direct solve, iteration count otherwise.
    int iterations{0};
    /// max_i |mu - Wt*mu - wt*theta|.
    double residual{0.0};
    /// max_i |mu_i - best_response_i(mu)|.
    double nash_residual{0.0};
};

struct SimulationResult {
    /// Every iterate, starting with mu0.
    std::vector<OpinionVector> trajectory;
    bool converged{false};
    /// Number of update steps applied (trajectory.size() - 1).
    int steps{0};
    /// Sup-norm of the last step taken.
    double final_delta{0.0};
};

/// One reply from a (possibly indifferent) agent.
struct BestReply {
    double value{0.0};
    /// True when the agent has no incident weight at all, so every opinion is
    /// a best reply; `value` then carries the agent's current opinion.
    bool indifferent{false};
};

struct NashReport {
    double max_deviation{0.0};
    int worst_agent{-1};
    bool is_nash{false};
    double tol{defaults::nash_tol};
    /// |mu_i - best_response_i(mu)| per agent.
    Vector deviations;
};

/// One synchronous update: Wt * mu + wt * theta_star.
OpinionVector step(const OpinionExchangeNetwork& x, const OpinionVector& mu,
                   double theta_star);

/// Iterates `step` until the sup-norm step size drops below tol or max_steps
/// is reached. Divergence is observable (flag stays false), never fatal.
SimulationResult simulate(const OpinionExchangeNetwork& x, OpinionVector mu0,
                          double theta_star, int max_steps,
                          double tol = defaults::iteration_tol);

/// Solves (I - Wt) mu = wt * theta_star by dense LU with partial pivoting.
/// The contraction certificate rho(|Wt|) < 1 is checked first; failure raises
/// SingularSystemError carrying the offending estimate.
SteadyStateResult steady_state_direct(const OpinionExchangeNetwork& x,
                                      double theta_star);

/// Walk-counting centralities of the interaction network: (I - W)^{-1} 1.
Vector bonacich(const InteractionNetwork& net);

/// Truth-weighted centralities of the signed network: (I - Wt)^{-1} wt.
Vector weighted_bonacich(const OpinionExchangeNetwork& x);

/// Spectral radius of the entrywise absolute value |m|, via power iteration
/// (diagonal-shifted so periodic sign-off patterns do not stall). This upper-
/// bounds rho(m) and certifies convergence of the opinion dynamics. Raises
/// ConvergenceError with the last two estimates if the iteration stalls.
double spectral_radius(const Matrix& m);

/// Quadratic payoff of agent i at opinion profile mu: in-group disagreement
/// and distance from the signal cost utility, out-group distance earns it.
double utility(int i, const OpinionVector& mu, const InteractionNetwork& net,
               const GroupAssignment& groups, const IdentityParams& params,
               double theta_star);

/// Row-i affine map: sum_j Wt(i,j) mu_j + wt(i) theta_star.
BestReply best_response(int i, const OpinionVector& mu,
                        const OpinionExchangeNetwork& x, double theta_star);

/// Largest gap between any agent's opinion and their best response; the
/// profile is a Nash equilibrium of the opinion game iff it is <= tol.
NashReport verify_nash(const OpinionVector& mu, const OpinionExchangeNetwork& x,
                       double theta_star, double tol = defaults::nash_tol);

}  // namespace opinion
