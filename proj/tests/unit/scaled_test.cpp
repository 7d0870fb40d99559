#include "skipqn/scaled.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using skipqn::ScaledValue;

TEST(ScaledValue, ZeroIsCanonical) {
    const ScaledValue z = ScaledValue::from_double(0.0);
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.mantissa(), 0.0);
    EXPECT_EQ(z.exponent(), 0);
    EXPECT_EQ(z, ScaledValue::zero());
    EXPECT_TRUE((z * ScaledValue::from_double(3.0)).is_zero());
}

TEST(ScaledValue, MantissaInUnitOctave) {
    for (double x : {1.0, 1.5, 2.0, 3.0, 0.1, 1e-300, 1e300, 4.9e-324, 12345.678}) {
        const ScaledValue v = ScaledValue::from_double(x);
        EXPECT_GE(v.mantissa(), 1.0) << x;
        EXPECT_LT(v.mantissa(), 2.0) << x;
        EXPECT_DOUBLE_EQ(v.to_double(), x);
    }
    const ScaledValue two = ScaledValue::from_double(2.0);
    EXPECT_EQ(two.mantissa(), 1.0);
    EXPECT_EQ(two.exponent(), 1);
}

TEST(ScaledValue, SurvivesBeyondDoubleRange) {
    const ScaledValue big = ScaledValue::pow(ScaledValue::from_double(10.0), 1000);
    EXPECT_NEAR(big.log2(), 1000.0 * std::log2(10.0), 1e-9);
    EXPECT_TRUE(std::isinf(big.to_double()));
    const ScaledValue back = big / ScaledValue::pow(ScaledValue::from_double(10.0), 999);
    EXPECT_NEAR(back.to_double(), 10.0, 1e-12);
    const ScaledValue tiny = ScaledValue::pow(ScaledValue::from_double(0.1), 1000);
    EXPECT_EQ(tiny.to_double(), 0.0);
    EXPECT_NEAR(ratio(tiny * big, ScaledValue::one()), 1.0, 1e-12);
}

TEST(ScaledValue, AdditionAlignsExponents) {
    const ScaledValue a = ScaledValue::pow(ScaledValue::from_double(2.0), 2000);
    EXPECT_EQ(a + ScaledValue::one(), a);  // far below the last mantissa bit
    EXPECT_EQ(ratio(a + a, a), 2.0);
    EXPECT_EQ((ScaledValue::from_double(3.0) - ScaledValue::from_double(3.0)), ScaledValue::zero());
    EXPECT_TRUE((ScaledValue::from_double(1.0) - ScaledValue::from_double(3.0)).is_negative());
}

TEST(ScaledValue, OrderingFollowsValue) {
    const auto v = [](double x) { return ScaledValue::from_double(x); };
    EXPECT_LT(v(1.0), v(2.0));
    EXPECT_LT(v(0.0), v(1e-300));
    EXPECT_LT(v(-5.0), v(-1.0));
    EXPECT_LT(v(-1.0), v(0.0));
    EXPECT_GT(ScaledValue::pow(v(3.0), 900), ScaledValue::pow(v(3.0), 899));
}

// Random arithmetic against long double within the overlapping range.
TEST(ScaledValue, PropertyMatchesLongDouble) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> mant(0.0, 10.0);
    std::uniform_int_distribution<int> expo(-40, 40);
    for (int trial = 0; trial < 2000; ++trial) {
        const double a = std::ldexp(mant(rng), expo(rng));
        const double b = std::ldexp(mant(rng), expo(rng));
        const auto sa = ScaledValue::from_double(a);
        const auto sb = ScaledValue::from_double(b);
        const long double la = a, lb = b;
        EXPECT_NEAR((sa * sb).to_double(), static_cast<double>(la * lb), 1e-15 * static_cast<double>(la * lb));
        EXPECT_NEAR((sa + sb).to_double(), static_cast<double>(la + lb), 1e-15 * static_cast<double>(la + lb));
        if (b != 0.0) {
            EXPECT_NEAR(ratio(sa, sb), static_cast<double>(la / lb), 1e-15 * static_cast<double>(la / lb));
        }
    }
}
