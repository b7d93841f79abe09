#include "opinion/dynamics.hpp"

#include <Eigen/LU>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

namespace opinion {

namespace {

void require_same_size(const OpinionExchangeNetwork& x, const OpinionVector& mu) {
    if (mu.size() != x.size()) {
        throw DimensionError("opinion vector length does not match the network");
    }
}

void require_finite(const OpinionVector& mu) {
    if (!mu.allFinite()) {
        throw ValidationError("opinion vector contains non-finite entries");
    }
}

// Solve certificate shared by the direct solvers: rho(|M|) must stay below 1.
void require_contraction(const Matrix& m, const char* what) {
    double rho = spectral_radius(m);
    if (rho >= 1.0) {
        std::ostringstream msg;
        msg << what << ": spectral radius of |W| is " << rho
            << " (>= 1), the system may have no unique steady state";
        throw SingularSystemError(msg.str(), rho);
    }
}

}  // namespace

OpinionVector step(const OpinionExchangeNetwork& x, const OpinionVector& mu,
                   double theta_star) {
    require_same_size(x, mu);
    return x.weights() * mu + x.truth_weights() * theta_star;
}

SimulationResult simulate(const OpinionExchangeNetwork& x, OpinionVector mu0,
                          double theta_star, int max_steps, double tol) {
    require_same_size(x, mu0);
    require_finite(mu0);
    if (tol <= 0.0) throw ValidationError("iteration tolerance must be > 0");
    if (max_steps < 0) throw ValidationError("max_steps must be >= 0");

    SimulationResult result;
    result.trajectory.reserve(static_cast<std::size_t>(max_steps) + 1);
    result.trajectory.push_back(std::move(mu0));
    for (int t = 1; t <= max_steps; ++t) {
        OpinionVector next = step(x, result.trajectory.back(), theta_star);
        result.final_delta = (next - result.trajectory.back()).lpNorm<Eigen::Infinity>();
        result.trajectory.push_back(std::move(next));
        result.steps = t;
        if (result.final_delta < tol) {
            result.converged = true;
            break;
        }
    }
    return result;
}

double spectral_radius(const Matrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionError("spectral radius needs a square matrix");
    }
    const auto n = m.rows();
    if (n == 0) return 0.0;

    // Power iteration on |m| + I; the unit shift keeps the dominant eigenvalue
    // simple-signed on periodic patterns while moving rho by exactly 1.
    Matrix a = m.cwiseAbs();
    a.diagonal().array() += 1.0;

    Vector x = Vector::Ones(n);
    double estimate = 0.0;
    double previous = -1.0;
    double previous_diff = -1.0;
    int settled = 0;
    for (int it = 0; it < defaults::power_max_iterations; ++it) {
        Vector y = a * x;
        double norm = y.lpNorm<Eigen::Infinity>();
        if (norm == 0.0) return 0.0;  // unreachable with the shift, kept for safety
        previous = estimate;
        estimate = norm;
        x = y / norm;
        if (it > 0) {
            double diff = std::abs(estimate - previous);
            // Accept once the geometric tail bound diff*r/(1-r) drops below
            // the tolerance, or the sequence sits at the rounding floor.
            bool at_floor = diff <= 8.0 * std::numeric_limits<double>::epsilon() *
                                        std::max(1.0, estimate);
            bool tail_small = false;
            if (!at_floor && previous_diff > 0.0) {
                double ratio = diff / previous_diff;
                tail_small = ratio < 1.0 &&
                             diff * ratio / (1.0 - ratio) <= defaults::power_tol;
            }
            settled = (at_floor || tail_small) ? settled + 1 : 0;
            if (settled >= 2) {
                return std::max(0.0, estimate - 1.0);
            }
            previous_diff = diff;
        }
    }
    std::ostringstream msg;
    msg << "power iteration did not settle within " << defaults::power_max_iterations
        << " iterations; last estimates " << previous - 1.0 << " and " << estimate - 1.0;
    throw ConvergenceError(msg.str(), estimate - 1.0, previous - 1.0);
}

SteadyStateResult steady_state_direct(const OpinionExchangeNetwork& x,
                                      double theta_star) {
    const auto n = x.size();
    require_contraction(x.weights(), "steady_state_direct");

    Matrix system = Matrix::Identity(n, n) - x.weights();
    Eigen::PartialPivLU<Matrix> lu(system);

    SteadyStateResult result;
    result.b_tilde = lu.solve(x.truth_weights());
    result.mu = result.b_tilde * theta_star;
    result.b = Eigen::PartialPivLU<Matrix>(Matrix::Identity(n, n) - x.weights().cwiseAbs())
                   .solve(Vector::Ones(n));
    result.iterations = 0;
    result.residual = (result.mu - x.weights() * result.mu -
                       x.truth_weights() * theta_star)
                          .lpNorm<Eigen::Infinity>();
    result.nash_residual = verify_nash(result.mu, x, theta_star).max_deviation;
    return result;
}

Vector bonacich(const InteractionNetwork& net) {
    require_contraction(net.attention(), "bonacich");
    const auto n = net.size();
    Matrix system = Matrix::Identity(n, n) - net.attention();
    return Eigen::PartialPivLU<Matrix>(system).solve(Vector::Ones(n));
}

Vector weighted_bonacich(const OpinionExchangeNetwork& x) {
    require_contraction(x.weights(), "weighted_bonacich");
    const auto n = x.size();
    Matrix system = Matrix::Identity(n, n) - x.weights();
    return Eigen::PartialPivLU<Matrix>(system).solve(x.truth_weights());
}

double utility(int i, const OpinionVector& mu, const InteractionNetwork& net,
               const GroupAssignment& groups, const IdentityParams& params,
               double theta_star) {
    if (i < 0 || i >= net.size()) throw DimensionError("agent index out of range");
    if (mu.size() != net.size()) {
        throw DimensionError("opinion vector length does not match the network");
    }
    if (groups.size() != net.size()) {
        throw DimensionError("group assignment does not cover the network");
    }
    params.require_valid();

    const Matrix& w = net.attention();
    double own_group = 0.0;
    double other_group = 0.0;
    for (int j = 0; j < net.size(); ++j) {
        double gap = mu(i) - mu(j);
        if (groups.same_group(i, j)) {
            own_group += w(i, j) * gap * gap;
        } else {
            other_group += w(i, j) * gap * gap;
        }
    }
    double truth_gap = mu(i) - theta_star;
    return -params.alpha * own_group - params.beta * other_group -
           params.truth_scale() * net.truth_weights()(i) * truth_gap * truth_gap;
}

BestReply best_response(int i, const OpinionVector& mu,
                        const OpinionExchangeNetwork& x, double theta_star) {
    if (i < 0 || i >= x.size()) throw DimensionError("agent index out of range");
    require_same_size(x, mu);

    double incident = x.weights().row(i).cwiseAbs().sum() + x.truth_weights()(i);
    if (incident == 0.0) {
        return {mu(i), true};
    }
    return {x.weights().row(i).dot(mu) + x.truth_weights()(i) * theta_star, false};
}

NashReport verify_nash(const OpinionVector& mu, const OpinionExchangeNetwork& x,
                       double theta_star, double tol) {
    require_same_size(x, mu);

    NashReport report;
    report.tol = tol;
    report.deviations = Vector::Zero(x.size());
    for (int i = 0; i < x.size(); ++i) {
        BestReply reply = best_response(i, mu, x, theta_star);
        double deviation = reply.indifferent ? 0.0 : std::abs(mu(i) - reply.value);
        report.deviations(i) = deviation;
        if (deviation > report.max_deviation || report.worst_agent < 0) {
            report.max_deviation = deviation;
            report.worst_agent = i;
        }
    }
    report.is_nash = report.max_deviation <= tol;
    return report;
}

}  // namespace opinion
