#pragma once

#include "opinion/errors.hpp"

namespace opinion {

/// A society of two internally homogeneous groups: group A holds a share eta
/// of the population, each group shares one truth weight and one inbreeding
/// homophily level. Own-group meeting rates derive as
/// rho_A = h_A + (1-h_A) eta and rho_B = h_B + (1-h_B)(1-eta).
class HomogeneousSociety {
public:
    HomogeneousSociety(double eta, double w_a, double w_b, double h_a = 0.0,
                       double h_b = 0.0, double theta_star = 1.0);

    double eta() const { return eta_; }
    double truth_weight_a() const { return w_a_; }
    double truth_weight_b() const { return w_b_; }
    double homophily_a() const { return h_a_; }
    double homophily_b() const { return h_b_; }
    double theta_star() const { return theta_star_; }

    double meeting_rate_a() const { return h_a_ + (1.0 - h_a_) * eta_; }
    double meeting_rate_b() const { return h_b_ + (1.0 - h_b_) * (1.0 - eta_); }

private:
    double eta_, w_a_, w_b_, h_a_, h_b_, theta_star_;
};

/// Long-run opinions of the two representative agents.
struct GroupOpinions {
    double mu_a{0.0};
    double mu_b{0.0};
};

/// All partial derivatives of the representative-agent steady states with
/// respect to the society parameters, evaluated at the given society.
struct ComparativeStatics {
    double dmuA_deta, dmuA_dwA, dmuA_dwB, dmuA_dhA, dmuA_dhB;
    double dmuB_deta, dmuB_dwA, dmuB_dwB, dmuB_dhA, dmuB_dhB;
};

/// Closed form for the no-homophily case (requires h_A = h_B = 0).
/// Throws ValidationError "no anchor to truth" when both truth weights vanish.
GroupOpinions steady_state_no_homophily(const HomogeneousSociety& s);

/// Solves the representative-agent 2x2 system, homophily included.
/// Reduces exactly to steady_state_no_homophily when h_A = h_B = 0.
GroupOpinions steady_state_homophily(const HomogeneousSociety& s);

/// Analytic partials. Requires strictly interior parameters: eta and both
/// truth weights in (0,1), both homophily levels in [0,1). For theta_star > 0
/// the signs are fixed: own share, own truth weight and own homophily raise an
/// agent's long-run opinion, the other group's truth weight and homophily
/// lower it.
ComparativeStatics comparative_statics(const HomogeneousSociety& s);

/// One application of the 2x2 representative-agent update map.
GroupOpinions reduced_step(const HomogeneousSociety& s, GroupOpinions current);

}  // namespace opinion
