#include "skipqn/stable_mva.hpp"

#include <gtest/gtest.h>

#include <numeric>

#include "compare.hpp"
#include "fixtures.hpp"
#include "reference_values.hpp"
#include "skipqn/convolution.hpp"
#include "skipqn/error.hpp"
#include "skipqn/metrics.hpp"

using namespace skipqn;
using namespace skipqn::testing;

namespace {

StableMvaResult stable_of(const NetworkModel& model, int n) {
    return solve_stable_mva(model, solve_visit_ratios(model), n);
}

}  // namespace

TEST(StableQldStep, EmptyEntryFromShortedThroughput) {
    const std::vector<double> shorted{0.0, 1.0};
    const std::vector<double> previous{1.0};
    EXPECT_EQ(stable_qld_step(0.5, 1.0, shorted, previous, 1, 1), (std::vector<double>{0.5, 0.5}));
}

TEST(StableQldStep, RestCannotHoldPopulation) {
    const std::vector<double> shorted{0.0, 1.0, 0.0};
    const std::vector<double> previous{0.5, 0.5};
    const auto p = stable_qld_step(2.0, 1.0, shorted, previous, 2, 1);
    EXPECT_EQ(p, (std::vector<double>{0.0, 1.0}));
}

TEST(StableQldStep, TruncatesAtCapacity) {
    const std::vector<double> shorted{0.0, 2.0, 2.0, 2.0};
    const std::vector<double> previous{0.25, 0.5, 0.25};
    const auto p = stable_qld_step(1.0, 0.5, shorted, previous, 3, 2);
    ASSERT_EQ(p.size(), 3u);
    EXPECT_DOUBLE_EQ(p[0], 0.125);
    EXPECT_DOUBLE_EQ(p[1], 0.125);
    EXPECT_DOUBLE_EQ(p[2], 0.25);
}

TEST(TandemChain, NetA) {
    const auto model = net_a();
    const auto chain = solve_tandem_chain(station_params(model, solve_visit_ratios(model)), 2);
    ASSERT_EQ(chain.profiles.size(), 2u);
    EXPECT_EQ(chain.profiles[0].throughputs, (std::vector<double>{0.0, 1.0, 0.0}));
    EXPECT_EQ(chain.profiles[0].capacity, 1);
    EXPECT_EQ(chain.profiles[1].capacity, 2);
    EXPECT_EQ(chain.network_throughputs(), (std::vector<double>{0.0, 0.5, 2.0}));
    ASSERT_EQ(chain.history.size(), 1u);
    EXPECT_EQ(chain.history[0].station[1], (std::vector<double>{0.5, 0.5}));
    EXPECT_EQ(chain.history[0].aggregate[2], (std::vector<double>{0.0, 1.0}));
}

TEST(TandemChain, SingleStation) {
    const std::vector<StationParams> one{{3, 1.0, 0.25}};
    const auto result = solve_stable_mva(one, 3);
    EXPECT_EQ(result.chain.network_throughputs(), (std::vector<double>{0.0, 4.0, 4.0, 4.0}));
    EXPECT_EQ(result.distributions[0][2], (std::vector<double>{0.0, 0.0, 1.0}));
    EXPECT_DOUBLE_EQ(result.reports[3][0].productive_throughput, 4.0);
    EXPECT_DOUBLE_EQ(result.reports[3][0].mean_queue_length, 3.0);
}

TEST(TandemChain, RejectsShortedStationsAndInfeasiblePopulation) {
    const std::vector<StationParams> shorted{{1, 1.0, 1.0}, {1, 1.0, 0.0}};
    try {
        solve_tandem_chain(shorted, 1);
        FAIL() << "expected BadStation";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::BadStation);
    }
    try {
        stable_of(net_a(), 3);
        FAIL() << "expected InfeasiblePopulation";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InfeasiblePopulation);
    }
}

TEST(StableMva, ReferenceNetworks) {
    for (const auto& net : reference_networks()) {
        SCOPED_TRACE(std::string(net.name));
        const auto model = net.build();
        const auto result = stable_of(model, n_max(model));
        for (const auto& want : net.reports) {
            SCOPED_TRACE("n=" + std::to_string(want.population) + " i=" + std::to_string(want.station));
            const auto& got = result.reports[static_cast<std::size_t>(want.population)][want.station];
            EXPECT_LE(max_abs_difference(got.distribution, want.distribution), 1e-14);
            EXPECT_LE(relative_error(got.total_throughput, want.total_throughput), 1e-14);
            EXPECT_LE(relative_error(got.productive_throughput, want.productive_throughput), 1e-14);
            EXPECT_NEAR(got.skipping_throughput, want.skipping_throughput, 1e-14);
            EXPECT_LE(relative_error(got.utilization, want.utilization), 1e-14);
            EXPECT_LE(relative_error(got.mean_queue_length, want.mean_queue_length), 1e-14);
            EXPECT_LE(relative_error(got.mean_waiting_time, want.mean_waiting_time), 1e-14);
        }
    }
}

TEST(StableMva, PropertyProfilesMatchPrefixNetworks) {
    // X_EQ_i(k) is station i's throughput in the prefix 0..i closed on itself.
    for (const auto& model : corpus(60, 41)) {
        const auto params = station_params(model, solve_visit_ratios(model));
        const int top = n_max(params);
        const auto chain = solve_tandem_chain(params, top);
        const auto g = compute_g(params, top);
        for (std::size_t i = 0; i < params.size(); ++i) {
            const auto& x = chain.profiles[i].throughputs;
            for (int k = 1; k <= top; ++k) {
                const ScaledValue gk = g.at(k, i);
                const double want = gk.is_zero() ? 0.0 : params[i].visit_ratio * ratio(g.at(k - 1, i), gk);
                EXPECT_LE(relative_error(x[static_cast<std::size_t>(k)], want), 1e-10) << "i " << i << " k " << k;
            }
        }
    }
}

TEST(StableMva, PropertyAgreesWithConvolutionEverywhere) {
    for (const auto& model : corpus(100, 42)) {
        const auto visits = solve_visit_ratios(model);
        const int top = n_max(model);
        const ConvolutionAnalysis conv(model, visits, top);
        const auto result = solve_stable_mva(model, visits, top);
        for (int n = 0; n <= top; ++n)
            for (std::size_t i = 0; i < model.size(); ++i) {
                const auto want = conv.report(i, n);
                const auto& got = result.reports[static_cast<std::size_t>(n)][i];
                EXPECT_LE(max_abs_difference(got.distribution, want.distribution), 1e-9);
                EXPECT_LE(relative_error(got.total_throughput, want.total_throughput), 1e-9);
                EXPECT_LE(relative_error(got.productive_throughput, want.productive_throughput), 1e-9);
                EXPECT_LE(std::fabs(got.skipping_throughput - want.skipping_throughput), 1e-9 * want.total_throughput);
                EXPECT_LE(relative_error(got.mean_queue_length, want.mean_queue_length), 1e-9);
                EXPECT_LE(relative_error(got.mean_waiting_time, want.mean_waiting_time), 1e-9);
            }
    }
}

TEST(StableMva, StressStaysNonNegative) {
    const auto model = make_model({30, 30}, {10.0, 1.0}, {{0, 1}, {1, 0}});
    const auto result = stable_of(model, 60);
    for (const auto& station : result.distributions)
        for (const auto& p : station) {
            for (double v : p) EXPECT_GE(v, 0.0);
            EXPECT_NEAR(std::accumulate(p.begin(), p.end(), 0.0), 1.0, 1e-12);
        }
}
