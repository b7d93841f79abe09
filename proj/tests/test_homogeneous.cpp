#include <doctest.h>

#include <cmath>

#include "opinion/dynamics.hpp"
#include "opinion/homogeneous.hpp"
#include "opinion/netgen.hpp"
#include "test_support.hpp"

using namespace opinion;
using testsupport::close;

TEST_CASE("society parameters are validated") {
    CHECK_NOTHROW(HomogeneousSociety(0.25, 0.2, 0.2));
    CHECK_THROWS_AS(HomogeneousSociety(0.0, 0.2, 0.2), ValidationError);
    CHECK_THROWS_AS(HomogeneousSociety(1.0, 0.2, 0.2), ValidationError);
    CHECK_THROWS_AS(HomogeneousSociety(0.5, 1.2, 0.2), ValidationError);
    CHECK_THROWS_AS(HomogeneousSociety(0.5, 0.2, 0.2, -0.1, 0.0), ValidationError);

    HomogeneousSociety s(0.25, 0.2, 0.2, 0.0, 0.5);
    CHECK(close(s.meeting_rate_a(), 0.25, 1e-15));
    CHECK(close(s.meeting_rate_b(), 0.875, 1e-15));
}

TEST_CASE("no-homophily closed form") {
    SUBCASE("minority-of-one society") {
        GroupOpinions mu = steady_state_no_homophily(HomogeneousSociety(0.25, 0.2, 0.2));
        CHECK(close(mu.mu_a, -0.2, 1e-15));
        CHECK(close(mu.mu_b, 0.6, 1e-15));
    }
    SUBCASE("equal groups meet in the middle") {
        GroupOpinions mu = steady_state_no_homophily(HomogeneousSociety(0.5, 0.2, 0.2));
        CHECK(close(mu.mu_a, 0.2, 1e-15));
        CHECK(close(mu.mu_b, 0.2, 1e-15));
    }
    SUBCASE("full truth weight pins both groups to the signal") {
        GroupOpinions mu =
            steady_state_no_homophily(HomogeneousSociety(0.3, 1.0, 1.0, 0.0, 0.0, 4.2));
        CHECK(close(mu.mu_a, 4.2, 1e-15));
        CHECK(close(mu.mu_b, 4.2, 1e-15));
    }
    SUBCASE("requires h = 0 and some anchor") {
        CHECK_THROWS_AS(steady_state_no_homophily(HomogeneousSociety(0.25, 0.2, 0.2, 0.5)),
                        ValidationError);
        CHECK_THROWS_AS(steady_state_no_homophily(HomogeneousSociety(0.25, 0.0, 0.0)),
                        ValidationError);
    }
}

TEST_CASE("homophily steady state solves the representative 2x2 system") {
    SUBCASE("half-homophilous majority") {
        GroupOpinions mu =
            steady_state_homophily(HomogeneousSociety(0.25, 0.2, 0.2, 0.0, 0.5));
        CHECK(close(mu.mu_a, -1.0 / 3.0, 1e-15));
        CHECK(close(mu.mu_b, 7.0 / 9.0, 1e-15));
    }
    SUBCASE("reduces to the no-homophily closed form at h = 0") {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            testsupport::Uniform rnd(seed);
            HomogeneousSociety s(rnd.range(0.05, 0.95), rnd.range(0.05, 0.95),
                                 rnd.range(0.05, 0.95), 0.0, 0.0, rnd.range(-2.0, 2.0));
            GroupOpinions direct = steady_state_no_homophily(s);
            GroupOpinions general = steady_state_homophily(s);
            CAPTURE(seed);
            CHECK(close(direct.mu_a, general.mu_a, 1e-14));
            CHECK(close(direct.mu_b, general.mu_b, 1e-14));
        }
    }
    SUBCASE("full segregation lets both groups learn the signal") {
        GroupOpinions mu =
            steady_state_homophily(HomogeneousSociety(0.25, 0.2, 0.2, 1.0, 1.0, -1.5));
        CHECK(close(mu.mu_a, -1.5, 1e-15));
        CHECK(close(mu.mu_b, -1.5, 1e-15));
    }
    SUBCASE("no anchor to truth") {
        CHECK_THROWS_AS(steady_state_homophily(HomogeneousSociety(0.25, 0.0, 0.0, 0.2, 0.3)),
                        ValidationError);
    }
}

TEST_CASE("comparative statics") {
    SUBCASE("share derivative at the reference point") {
        ComparativeStatics cs =
            comparative_statics(HomogeneousSociety(0.25, 0.2, 0.2));
        CHECK(close(cs.dmuA_deta, 1.6, 1e-13));  // 2(1-wA)wA wB / (wA eta + wB(1-eta))^2
    }
    SUBCASE("A-B symmetry at symmetric points") {
        ComparativeStatics cs =
            comparative_statics(HomogeneousSociety(0.5, 0.3, 0.3, 0.2, 0.2));
        CHECK(close(cs.dmuA_dwA, cs.dmuB_dwB, 1e-14));
        CHECK(close(cs.dmuA_dhA, cs.dmuB_dhB, 1e-14));
        CHECK(close(cs.dmuA_deta, -cs.dmuB_deta, 1e-14));
    }
    SUBCASE("matches central finite differences on a random interior grid") {
        testsupport::Uniform rnd(314159);
        const double h = 1e-6;
        for (int trial = 0; trial < 100; ++trial) {
            double eta = rnd.range(0.05, 0.95);
            double wa = rnd.range(0.05, 0.95);
            double wb = rnd.range(0.05, 0.95);
            double ha = rnd.range(0.0, 0.9);
            double hb = rnd.range(0.0, 0.9);
            HomogeneousSociety s(eta, wa, wb, ha, hb, 1.0);
            ComparativeStatics cs = comparative_statics(s);

            auto fd = [&](int which, bool of_b) {
                double p[5] = {eta, wa, wb, ha, hb};
                p[which] += h;
                HomogeneousSociety up(p[0], p[1], p[2], p[3], p[4], 1.0);
                p[which] -= 2 * h;
                HomogeneousSociety down(p[0], p[1], p[2], p[3], p[4], 1.0);
                GroupOpinions u = steady_state_homophily(up);
                GroupOpinions d = steady_state_homophily(down);
                return ((of_b ? u.mu_b : u.mu_a) - (of_b ? d.mu_b : d.mu_a)) / (2 * h);
            };
            auto check_rel = [&](double analytic, double numeric) {
                double scale = std::max({std::abs(analytic), std::abs(numeric), 1e-8});
                CAPTURE(trial);
                CHECK(std::abs(analytic - numeric) / scale <= 1e-4);
            };
            check_rel(cs.dmuA_deta, fd(0, false));
            check_rel(cs.dmuA_dwA, fd(1, false));
            check_rel(cs.dmuA_dwB, fd(2, false));
            check_rel(cs.dmuA_dhA, fd(3, false));
            check_rel(cs.dmuA_dhB, fd(4, false));
            check_rel(cs.dmuB_deta, fd(0, true));
            check_rel(cs.dmuB_dwA, fd(1, true));
            check_rel(cs.dmuB_dwB, fd(2, true));
            check_rel(cs.dmuB_dhA, fd(3, true));
            check_rel(cs.dmuB_dhB, fd(4, true));
        }
    }
    SUBCASE("signs on an interior sample") {
        testsupport::Uniform rnd(2718);
        for (int trial = 0; trial < 100; ++trial) {
            HomogeneousSociety s(rnd.range(0.05, 0.95), rnd.range(0.05, 0.95),
                                 rnd.range(0.05, 0.95), rnd.range(0.0, 0.9),
                                 rnd.range(0.0, 0.9), 1.0);
            ComparativeStatics cs = comparative_statics(s);
            CAPTURE(trial);
            CHECK(cs.dmuA_deta > 0.0);
            CHECK(cs.dmuA_dwA > 0.0);
            CHECK(cs.dmuA_dwB < 0.0);
            CHECK(cs.dmuA_dhA > 0.0);
            CHECK(cs.dmuA_dhB < 0.0);
            CHECK(cs.dmuB_deta < 0.0);
            CHECK(cs.dmuB_dwB > 0.0);
            CHECK(cs.dmuB_dwA < 0.0);
            CHECK(cs.dmuB_dhB > 0.0);
            CHECK(cs.dmuB_dhA < 0.0);
        }
    }
    SUBCASE("boundary parameters are rejected") {
        CHECK_THROWS_AS(comparative_statics(HomogeneousSociety(0.25, 1.0, 0.2)),
                        ValidationError);
        CHECK_THROWS_AS(comparative_statics(HomogeneousSociety(0.25, 0.2, 0.2, 0.0, 1.0)),
                        ValidationError);
    }
    SUBCASE("partials scale linearly with the signal") {
        ComparativeStatics unit = comparative_statics(HomogeneousSociety(0.3, 0.4, 0.5, 0.1, 0.2, 1.0));
        ComparativeStatics scaled =
            comparative_statics(HomogeneousSociety(0.3, 0.4, 0.5, 0.1, 0.2, -3.0));
        CHECK(close(scaled.dmuA_deta, -3.0 * unit.dmuA_deta, 1e-12));
        CHECK(close(scaled.dmuB_dhA, -3.0 * unit.dmuB_dhA, 1e-12));
    }
}

TEST_CASE("reduced step") {
    SUBCASE("fixed point at the homophily steady state") {
        HomogeneousSociety s(0.25, 0.2, 0.2, 0.0, 0.5);
        GroupOpinions fixed{-1.0 / 3.0, 7.0 / 9.0};
        GroupOpinions next = reduced_step(s, fixed);
        CHECK(close(next.mu_a, fixed.mu_a, 1e-15));
        CHECK(close(next.mu_b, fixed.mu_b, 1e-15));
    }
    SUBCASE("segregated groups at the signal stay put") {
        HomogeneousSociety s(0.4, 0.3, 0.25, 1.0, 1.0, 2.0);
        GroupOpinions next = reduced_step(s, {2.0, 2.0});
        CHECK(close(next.mu_a, 2.0, 1e-15));
        CHECK(close(next.mu_b, 2.0, 1e-15));
    }
    SUBCASE("iterating from zero reaches the closed form") {
        HomogeneousSociety s(0.25, 0.2, 0.2);
        GroupOpinions mu{0.0, 0.0};
        for (int t = 0; t < 500; ++t) mu = reduced_step(s, mu);
        CHECK(close(mu.mu_a, -0.2, 1e-12));
        CHECK(close(mu.mu_b, 0.6, 1e-12));
    }
}

TEST_CASE("representative agents agree with the full matrix engine") {
    testsupport::Uniform rnd(808);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 4 + 2 * rnd.below(5);            // 4..12 agents
        int n_a = 1 + rnd.below(n - 1);          // both groups nonempty
        HomogeneousSociety s(static_cast<double>(n_a) / n, rnd.range(0.05, 0.95),
                             rnd.range(0.05, 0.95), rnd.range(0.0, 1.0),
                             rnd.range(0.0, 1.0), rnd.range(-2.0, 2.0));
        auto [net, groups] = homogeneous_network(s, n);
        OpinionExchangeNetwork x = build_opinion_exchange(net, groups, {1.0, -1.0});
        SteadyStateResult full = steady_state_direct(x, s.theta_star());
        GroupOpinions reduced = steady_state_homophily(s);
        CAPTURE(trial);
        for (int i = 0; i < n; ++i) {
            double expected = i < n_a ? reduced.mu_a : reduced.mu_b;
            CHECK(close(full.mu(i), expected, 1e-10));
        }
        // within-group spread stays at solver noise
        double spread_a = 0.0, spread_b = 0.0;
        for (int i = 0; i < n_a; ++i) spread_a = std::max(spread_a, std::abs(full.mu(i) - full.mu(0)));
        for (int i = n_a; i < n; ++i) spread_b = std::max(spread_b, std::abs(full.mu(i) - full.mu(n_a)));
        CHECK(spread_a < 1e-12);
        CHECK(spread_b < 1e-12);
    }
}
