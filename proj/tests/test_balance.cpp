#include <doctest.h>

#include "opinion/balance.hpp"
#include "opinion/netgen.hpp"
#include "test_support.hpp"

using namespace opinion;
using testsupport::SignMatrix;

TEST_CASE("complete 1-3 network is strongly balanced with the original partition") {
    auto [net, groups] = complete_network({1, 3});
    BalanceReport report =
        check_structural_balance(build_opinion_exchange(net, groups, {1.0, -1.0}));
    REQUIRE(report.strongly_balanced);
    CHECK(report.weakly_balanced);
    CHECK(report.witness.empty());
    REQUIRE(report.recovered_partition.has_value());
    const GroupAssignment& part = *report.recovered_partition;
    CHECK(part.group_count() == 2);
    CHECK(part.group_of(0) != part.group_of(1));
    CHECK(part.same_group(1, 2));
    CHECK(part.same_group(2, 3));
}

TEST_CASE("all-positive network forms a single cluster") {
    auto [net, groups] = complete_network({2, 2});
    BalanceReport report = check_structural_balance(
        build_opinion_exchange(net, GroupAssignment::single_group(4), {1.0, -1.0}));
    CHECK(report.strongly_balanced);
    REQUIRE(report.recovered_partition.has_value());
    CHECK(report.recovered_partition->group_count() == 1);
}

TEST_CASE("triangle with one negative edge is unbalanced in both senses") {
    SignMatrix sign{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    sign[0][1] = sign[1][0] = -1;
    OpinionExchangeNetwork x = testsupport::exchange_from_signs(sign);

    testsupport::BruteForceBalance oracle = testsupport::brute_force_balance(sign);
    CHECK(!oracle.strong);
    CHECK(!oracle.weak);

    BalanceReport report = check_structural_balance(x);
    CHECK(!report.strongly_balanced);
    CHECK(!report.weakly_balanced);
    CHECK(!report.recovered_partition.has_value());
    CHECK(testsupport::witness_negative_count(report.witness, sign) == 1);
}

TEST_CASE("all-negative triangle is weakly but not strongly balanced") {
    SignMatrix sign{{0, -1, -1}, {-1, 0, -1}, {-1, -1, 0}};
    BalanceReport report = check_structural_balance(testsupport::exchange_from_signs(sign));
    CHECK(!report.strongly_balanced);
    CHECK(report.weakly_balanced);
    REQUIRE(report.recovered_partition.has_value());
    CHECK(report.recovered_partition->group_count() == 3);
    // the witness must be an odd cycle that is not a one-negative cycle
    int negs = testsupport::witness_negative_count(report.witness, sign);
    CHECK(negs % 2 == 1);
    CHECK(negs > 1);
}

TEST_CASE("conflicting directed signs defeat balance") {
    Matrix w = Matrix::Zero(2, 2);
    w(0, 1) = 0.3;
    w(1, 0) = -0.3;
    BalanceReport report =
        check_structural_balance(OpinionExchangeNetwork(w, Vector::Constant(2, 0.5)));
    CHECK(!report.strongly_balanced);
    CHECK(!report.weakly_balanced);
    CHECK(report.witness == std::vector<int>{0, 1});
}

TEST_CASE("a negative self-loop defeats balance") {
    Matrix w = Matrix::Zero(2, 2);
    w(1, 1) = -0.25;
    BalanceReport report =
        check_structural_balance(OpinionExchangeNetwork(w, Vector::Constant(2, 0.5)));
    CHECK(!report.strongly_balanced);
    CHECK(!report.weakly_balanced);
    CHECK(report.witness == std::vector<int>{1});
}

TEST_CASE("checker matches brute-force cycle enumeration on sampled graphs") {
    testsupport::Uniform rnd(20240817);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 3 + rnd.below(5);  // up to 7 vertices
        SignMatrix sign = testsupport::random_connected_signs(n, rnd);
        testsupport::BruteForceBalance oracle = testsupport::brute_force_balance(sign);
        BalanceReport report =
            check_structural_balance(testsupport::exchange_from_signs(sign));
        CAPTURE(trial);
        CAPTURE(n);
        CHECK(report.strongly_balanced == oracle.strong);
        CHECK(report.weakly_balanced == oracle.weak);
        if (!report.strongly_balanced) {
            int negs = testsupport::witness_negative_count(report.witness, sign);
            if (!report.weakly_balanced) {
                CHECK(negs == 1);
            } else {
                CHECK(negs % 2 == 1);
            }
        } else {
            // strong balance comes with a certifying 2-coloring
            REQUIRE(report.recovered_partition.has_value());
            const GroupAssignment& part = *report.recovered_partition;
            CHECK(part.group_count() <= 2);
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    int s = sign[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                    if (s > 0) CHECK(part.same_group(i, j));
                    if (s < 0) CHECK(!part.same_group(i, j));
                }
            }
        }
    }
}
