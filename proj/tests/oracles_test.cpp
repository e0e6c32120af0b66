#include <stdexcept>

#include <gtest/gtest.h>

#include <motivic/oracles.hpp>
#include <motivic/power.hpp>
#include <motivic/selftest.hpp>

#include "test_support.hpp"

namespace motivic {
namespace {

using testing::int_series;
using testing::int_series_full;

TEST(Partitions, CountsMatchPartitionNumbers) {
    EXPECT_EQ(partitions(0).size(), 1u);
    EXPECT_TRUE(partitions(0)[0].multiplicities().empty());
    EXPECT_EQ(partitions(1).size(), 1u);
    EXPECT_EQ(partitions(4).size(), 5u);
    EXPECT_EQ(partitions(6).size(), 11u);
}

TEST(Partitions, MultiplicityFormInvariants) {
    for (int n = 0; n <= 8; ++n) {
        for (const Partition& p : partitions(n)) {
            EXPECT_EQ(p.weight(), n);
            EXPECT_LE(p.part_count(), n);
            int weight = 0;
            for (int i = 1; i <= n; ++i) {
                weight += i * p.multiplicity(i);
            }
            EXPECT_EQ(weight, n);
        }
    }
    EXPECT_EQ(partitions(3)[0].multiplicity(99), 0);
}

TEST(Partitions, RejectsNegativeInput) {
    EXPECT_THROW(partitions(-1), std::invalid_argument);
    EXPECT_THROW(Partition({1, -1}), std::invalid_argument);
}

// Independent generating-function check: p(n) is the t^n coefficient of
// prod_k 1/(1 - t^k).
TEST(Partitions, CountAgreesWithGeneratingFunction) {
    const int r = 10;
    auto product = TruncSeries<BigInt>::one(r);
    for (int k = 1; k <= r; ++k) {
        std::vector<BigInt> factor(r + 1);
        factor[0] = 1;
        factor[k] = -1;
        product = product * inv(TruncSeries<BigInt>(std::move(factor)));
    }
    for (int n = 0; n <= r; ++n) {
        EXPECT_EQ(product.coeff(n), BigInt(partitions(n).size())) << "n=" << n;
    }
}

TEST(FallingFactorial, SmallValues) {
    EXPECT_EQ(falling_factorial(5, 0), BigInt(1));
    EXPECT_EQ(falling_factorial(3, 2), BigInt(6));
    EXPECT_EQ(falling_factorial(3, 4), BigInt(0));
    EXPECT_EQ(falling_factorial(-2, 3), BigInt(-24));
}

TEST(FallingFactorialPower, CubeOfOnePlusT) {
    const auto cube = falling_factorial_power(int_series(4, {1}), BigInt(3));
    EXPECT_EQ(cube, int_series_full({1, 3, 3, 1, 0}));
}

TEST(FallingFactorialPower, ZeroExponentGivesOne) {
    const auto a = int_series(5, {2, 0, 1, 4, 3});
    EXPECT_EQ(falling_factorial_power(a, BigInt(0)), TruncSeries<BigInt>::one(5));
}

TEST(FallingFactorialPower, GeometricSeriesGivesMultisetCounts) {
    const auto geometric = int_series(6, {1, 1, 1, 1, 1, 1});
    for (int m = 0; m <= 6; ++m) {
        const auto powered = falling_factorial_power(geometric, BigInt(m));
        for (int k = 0; k <= 6; ++k) {
            EXPECT_EQ(powered.coeff(k), multiset_binomial(m, k)) << "m=" << m << " k=" << k;
        }
    }
}

TEST(FallingFactorialPower, NegativeExponentsStayIntegral) {
    const auto a = int_series(6, {3, 1, 0, 2, 1, 1});
    for (int m = -4; m <= -1; ++m) {
        const auto direct = falling_factorial_power(a, BigInt(m));
        EXPECT_EQ(direct, inv(falling_factorial_power(a, BigInt(-m)))) << "m=" << m;
    }
}

TEST(FallingFactorialPower, RequiresUnitConstantTerm) {
    EXPECT_THROW(falling_factorial_power(int_series_full({2, 1}), BigInt(2)),
                 std::domain_error);
}

TEST(ConfigCount, PinnedModels) {
    EXPECT_EQ(config_count({2, {1, 1}}, 2), BigInt(3));
    EXPECT_EQ(config_count({3, {1}}, 2), BigInt(3));
    EXPECT_EQ(config_count({5, {0, 0, 0}}, 1), BigInt(0));
    EXPECT_EQ(config_count({5, {0, 0, 0}}, 3), BigInt(0));
    EXPECT_EQ(config_count({4, {2, 1}}, 0), BigInt(1));
    EXPECT_EQ(config_count({0, {3, 3}}, 2), BigInt(0));
}

TEST(ConfigCount, MatchesBinomialModel) {
    // A one-piece model (a_1 = 1) counts k-subsets of the m points.
    for (int m = 0; m <= 6; ++m) {
        for (int k = 0; k <= 4; ++k) {
            const BigInt k_factorial = falling_factorial(k, k);
            const BigInt expected = exact_div(falling_factorial(m, k), k_factorial);
            EXPECT_EQ(config_count({m, {1}}, k), expected) << "m=" << m << " k=" << k;
        }
    }
}

TEST(ConfigCount, RejectsNegativeK) {
    EXPECT_THROW(config_count({2, {1}}, -1), std::invalid_argument);
}

// The counting heart of the artifact: the generic power, the iterated
// product, the classical coefficient formula, and direct configuration
// enumeration all produce the same series over Z.
TEST(OracleAgreement, FourRoutesCoincide) {
    selftest::Rng rng(501);
    const int r = 6;
    for (int c = 0; c < 20; ++c) {
        const auto a = selftest::random_int_series(rng, r, 0, 4);
        FiniteModel model;
        for (int i = 1; i <= r; ++i) {
            model.piece_counts.push_back(a.coeff(i).convert_to<int>());
        }
        for (int m = 0; m <= 6; ++m) {
            model.point_count = m;
            const auto generic = power(a, BigInt(m));
            auto iterated = TruncSeries<BigInt>::one(r);
            for (int j = 0; j < m; ++j) {
                iterated = iterated * a;
            }
            ASSERT_EQ(generic, iterated) << "m=" << m;
            ASSERT_EQ(generic, falling_factorial_power(a, BigInt(m))) << "m=" << m;
            for (int k = 0; k <= r; ++k) {
                ASSERT_EQ(generic.coeff(k), config_count(model, k))
                    << "m=" << m << " k=" << k;
            }
        }
    }
}

}  // namespace
}  // namespace motivic
