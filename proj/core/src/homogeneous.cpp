#include "opinion/homogeneous.hpp"

#include <cmath>
#include <sstream>

namespace opinion {

namespace {

// Entries of the steady-state system (I - M) mu = (w_A, w_B) theta, where M is
// the representative-agent update map.
struct System {
    double a00, a01, a10, a11;
    double det() const { return a00 * a11 - a01 * a10; }
};

System steady_system(const HomogeneousSociety& s) {
    double rho_a = s.meeting_rate_a();
    double rho_b = s.meeting_rate_b();
    double ra = 1.0 - s.truth_weight_a();
    double rb = 1.0 - s.truth_weight_b();
    return {1.0 - rho_a * ra, (1.0 - rho_a) * ra, (1.0 - rho_b) * rb, 1.0 - rho_b * rb};
}

void require_anchor(const HomogeneousSociety& s, double det) {
    if (s.truth_weight_a() == 0.0 && s.truth_weight_b() == 0.0) {
        throw ValidationError("no anchor to truth: both truth weights are zero");
    }
    if (det == 0.0) {
        throw ValidationError("representative-agent system is singular");
    }
}

}  // namespace

HomogeneousSociety::HomogeneousSociety(double eta, double w_a, double w_b, double h_a,
                                       double h_b, double theta_star)
    : eta_(eta), w_a_(w_a), w_b_(w_b), h_a_(h_a), h_b_(h_b), theta_star_(theta_star) {
    auto in_unit = [](double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; };
    if (!(std::isfinite(eta) && eta > 0.0 && eta < 1.0)) {
        throw ValidationError("group share eta must lie strictly in (0,1)");
    }
    if (!in_unit(w_a_) || !in_unit(w_b_)) {
        throw ValidationError("truth weights must lie in [0,1]");
    }
    if (!in_unit(h_a_) || !in_unit(h_b_)) {
        throw ValidationError("homophily levels must lie in [0,1]");
    }
    if (!std::isfinite(theta_star_)) {
        throw ValidationError("theta_star must be finite");
    }
}

GroupOpinions steady_state_no_homophily(const HomogeneousSociety& s) {
    if (s.homophily_a() != 0.0 || s.homophily_b() != 0.0) {
        throw ValidationError("steady_state_no_homophily requires h_A = h_B = 0");
    }
    double eta = s.eta();
    double w_a = s.truth_weight_a();
    double w_b = s.truth_weight_b();
    double den = 1.0 - eta * (1.0 - w_a) - (1.0 - eta) * (1.0 - w_b);
    require_anchor(s, den);

    double cross = w_a + w_b - 2.0 * w_a * w_b;
    return {(w_a - (1.0 - eta) * cross) / den * s.theta_star(),
            (w_b - eta * cross) / den * s.theta_star()};
}

GroupOpinions steady_state_homophily(const HomogeneousSociety& s) {
    System sys = steady_system(s);
    double det = sys.det();
    require_anchor(s, det);

    double rhs_a = s.truth_weight_a() * s.theta_star();
    double rhs_b = s.truth_weight_b() * s.theta_star();
    return {(sys.a11 * rhs_a - sys.a01 * rhs_b) / det,
            (sys.a00 * rhs_b - sys.a10 * rhs_a) / det};
}

ComparativeStatics comparative_statics(const HomogeneousSociety& s) {
    double eta = s.eta();
    double w_a = s.truth_weight_a();
    double w_b = s.truth_weight_b();
    double h_a = s.homophily_a();
    double h_b = s.homophily_b();
    if (w_a <= 0.0 || w_a >= 1.0 || w_b <= 0.0 || w_b >= 1.0 || h_a >= 1.0 ||
        h_b >= 1.0) {
        throw ValidationError(
            "comparative statics are defined for interior parameters only "
            "(truth weights in (0,1), homophily in [0,1))");
    }

    double theta = s.theta_star();
    // The A-side partials over delta^2, delta = det of the 2x2 system; the
    // B-side follows from the A<->B relabeling symmetry (eta <-> 1-eta).
    auto a_side = [theta](double e, double wa, double wb, double ha, double hb) {
        double rho_a = ha + (1.0 - ha) * e;
        double rho_b = hb + (1.0 - hb) * (1.0 - e);
        double ra = 1.0 - wa;
        double rb = 1.0 - wb;
        double delta = (1.0 - rho_a * ra) * (1.0 - rho_b * rb) -
                       (1.0 - rho_a) * ra * (1.0 - rho_b) * rb;
        double d2 = delta * delta;
        ComparativeStatics out{};
        out.dmuA_deta = 2.0 * (1.0 - ha) * ra * wa * (1.0 - hb * rb) * wb / d2 * theta;
        out.dmuA_dhA =
            2.0 * ra * wa * wb * (1.0 - e) * (wb + (1.0 - hb) * rb * e) / d2 * theta;
        out.dmuA_dhB = -2.0 * (1.0 - ha) * ra * rb * wa * wb * (1.0 - e) * e / d2 * theta;
        out.dmuA_dwA =
            2.0 * (1.0 - ha) * wb * (1.0 - e) * (wb + (1.0 - hb) * rb * e) / d2 * theta;
        out.dmuA_dwB = -2.0 * (1.0 - ha) * (1.0 - hb) * ra * wa * (1.0 - e) * e / d2 * theta;
        return out;
    };

    ComparativeStatics a = a_side(eta, w_a, w_b, h_a, h_b);
    ComparativeStatics b = a_side(1.0 - eta, w_b, w_a, h_b, h_a);

    ComparativeStatics out{};
    out.dmuA_deta = a.dmuA_deta;
    out.dmuA_dwA = a.dmuA_dwA;
    out.dmuA_dwB = a.dmuA_dwB;
    out.dmuA_dhA = a.dmuA_dhA;
    out.dmuA_dhB = a.dmuA_dhB;
    out.dmuB_deta = -b.dmuA_deta;  // d eta_B = -d eta
    out.dmuB_dwB = b.dmuA_dwA;
    out.dmuB_dwA = b.dmuA_dwB;
    out.dmuB_dhB = b.dmuA_dhA;
    out.dmuB_dhA = b.dmuA_dhB;
    return out;
}

GroupOpinions reduced_step(const HomogeneousSociety& s, GroupOpinions current) {
    double rho_a = s.meeting_rate_a();
    double rho_b = s.meeting_rate_b();
    double ra = 1.0 - s.truth_weight_a();
    double rb = 1.0 - s.truth_weight_b();
    double theta = s.theta_star();
    return {rho_a * ra * current.mu_a - (1.0 - rho_a) * ra * current.mu_b +
                s.truth_weight_a() * theta,
            rho_b * rb * current.mu_b - (1.0 - rho_b) * rb * current.mu_a +
                s.truth_weight_b() * theta};
}

}  // namespace opinion
