#include "skipqn/oracle.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <numeric>

#include "fixtures.hpp"
#include "skipqn/error.hpp"

using namespace skipqn;
using namespace skipqn::testing;

TEST(EnumerateStates, DescendingLexicographic) {
    const std::vector<int> caps{1, 1};
    EXPECT_EQ(enumerate_states(caps, 1), (std::vector<StateVector>{{1, 0}, {0, 1}}));
    const std::vector<int> caps3{2, 1, 2};
    EXPECT_EQ(enumerate_states(caps3, 4), (std::vector<StateVector>{{2, 1, 1}, {2, 0, 2}, {1, 1, 2}}));
}

TEST(EnumerateStates, EdgeCases) {
    const std::vector<int> caps{2, 3};
    EXPECT_EQ(enumerate_states(caps, 0), (std::vector<StateVector>{{0, 0}}));
    EXPECT_EQ(enumerate_states(caps, 5), (std::vector<StateVector>{{2, 3}}));
    EXPECT_TRUE(enumerate_states(caps, 6).empty());
}

TEST(EnumerateStates, CountsMatchPolynomialCoefficients) {
    // #states(n) is the x^n coefficient of prod_i (1 + x + ... + x^{c_i}).
    const std::vector<int> caps{3, 1, 4, 2};
    std::vector<std::size_t> poly{1};
    for (int c : caps) {
        std::vector<std::size_t> next(poly.size() + static_cast<std::size_t>(c), 0);
        for (std::size_t a = 0; a < poly.size(); ++a)
            for (int k = 0; k <= c; ++k) next[a + static_cast<std::size_t>(k)] += poly[a];
        poly = next;
    }
    for (int n = 0; n <= 10; ++n) {
        const auto states = enumerate_states(caps, n);
        EXPECT_EQ(states.size(), poly[static_cast<std::size_t>(n)]) << n;
        EXPECT_EQ(count_states(caps, n), poly[static_cast<std::size_t>(n)]) << n;
        for (const auto& s : states) EXPECT_EQ(std::accumulate(s.begin(), s.end(), 0), n);
    }
}

TEST(EnumerateStates, SizeLimit) {
    const std::vector<int> caps(6, 10);
    try {
        enumerate_states(caps, 30, 1000);
        FAIL() << "expected SizeLimit";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SizeLimit);
    }
    EXPECT_EQ(enumerate_states(std::vector<int>{1, 1}, 1, 2).size(), 2u);
}

TEST(CountStates, SaturatesInsteadOfOverflowing) {
    const std::vector<int> caps(200, 100);
    EXPECT_EQ(count_states(caps, 10000), std::numeric_limits<std::size_t>::max());
    EXPECT_EQ(count_states(std::vector<int>{2, 3}, 7), 0u);
    EXPECT_EQ(count_states(std::vector<int>{2, 3}, -1), 0u);
}

TEST(DirectSolution, NetB) {
    const auto model = net_b();
    const auto r = direct_solution(model, solve_visit_ratios(model), 2);
    EXPECT_EQ(r.states, (std::vector<StateVector>{{2, 0}, {1, 1}}));
    EXPECT_EQ(r.normalization.to_double(), 3.0);
    ASSERT_EQ(r.weights.size(), 2u);
    EXPECT_EQ(r.weights[0].to_double(), 1.0);
    EXPECT_EQ(r.weights[1].to_double(), 2.0);
    EXPECT_DOUBLE_EQ(r.marginals[0][1], 2.0 / 3);
    EXPECT_DOUBLE_EQ(r.marginals[0][2], 1.0 / 3);
    EXPECT_DOUBLE_EQ(r.marginals[1][0], 1.0 / 3);
}

TEST(DirectSolution, MarginalsSumToOne) {
    for (const auto& model : corpus(30, 51)) {
        const auto visits = solve_visit_ratios(model);
        for (int n = 0; n <= n_max(model); ++n) {
            const auto r = direct_solution(model, visits, n);
            for (const auto& p : r.marginals) EXPECT_NEAR(std::accumulate(p.begin(), p.end(), 0.0), 1.0, 1e-14);
        }
    }
}
