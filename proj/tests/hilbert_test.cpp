#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include <motivic/hilbert.hpp>
#include <motivic/partitions.hpp>

#include "test_support.hpp"

namespace motivic {
namespace {

using testing::L;

SurfaceClass affine_plane() { return SurfaceClass(L("L^2")); }
SurfaceClass projective_plane() { return SurfaceClass(L("1+L+L^2")); }
SurfaceClass quadric() { return SurfaceClass(L("1+2L+L^2")); }

TEST(Hilbert, LinearCoefficientIsTheSurfaceClass) {
    for (const auto& s : {affine_plane(), projective_plane(), quadric()}) {
        EXPECT_EQ(hilb_series_product(s, 4).coeff(1), s.cls);
        EXPECT_EQ(hilb_series_power(s, 4).coeff(1), s.cls);
        EXPECT_EQ(hilb_direct_sum(s, 1), s.cls);
    }
}

TEST(Hilbert, AffinePlanePinnedCoefficients) {
    const auto series = hilb_series_product(affine_plane(), 3);
    EXPECT_EQ(series.coeff(0), L("1"));
    EXPECT_EQ(series.coeff(1), L("L^2"));
    EXPECT_EQ(series.coeff(2), L("L^4+L^3"));
    EXPECT_EQ(series.coeff(3), L("L^6+L^5+L^4"));
}

TEST(Hilbert, DirectSumSmallCases) {
    EXPECT_EQ(hilb_direct_sum(affine_plane(), 0), LaurentPoly{1});
    EXPECT_EQ(hilb_direct_sum(affine_plane(), 2), L("L^4+L^3"));
    EXPECT_EQ(hilb_direct_sum(projective_plane(), 0), LaurentPoly{1});
    EXPECT_THROW(hilb_direct_sum(affine_plane(), -1), std::invalid_argument);
}

TEST(Hilbert, ZeroSurfaceGivesConstantOne) {
    const SurfaceClass zero(LaurentPoly{});
    EXPECT_EQ(hilb_series_power(zero, 5), TruncSeries<LaurentPoly>::one(5));
}

TEST(Hilbert, AllFiveRoutesAgree) {
    const std::vector<SurfaceClass> classes = {
        affine_plane(), projective_plane(), quadric(),
        SurfaceClass(L("1+L")),  // not a surface class; still a ring identity
    };
    for (const auto& s : classes) {
        const auto product = hilb_zeta_product(s, 6);
        EXPECT_EQ(product, hilb_zeta_product_shifted(s, 6));
        EXPECT_EQ(product, hilb_power_of_geometric(s, 6));
        EXPECT_EQ(product, hilb_product_of_powers(s, 6));
        EXPECT_EQ(product, hilb_direct_sum_series(s, 6));
        EXPECT_EQ(product, hilb_series_power(s, 6));
    }
}

TEST(Hilbert, AffinePlaneEulerNumbersArePartitionNumbers) {
    const auto counts = euler_characteristic(hilb_series_product(affine_plane(), 6));
    const long expected[] = {1, 1, 2, 3, 5, 7, 11};
    for (int n = 0; n <= 6; ++n) {
        EXPECT_EQ(counts.coeff(n), BigInt(expected[n])) << "n=" << n;
        EXPECT_EQ(counts.coeff(n), BigInt(partitions(n).size())) << "n=" << n;
    }
}

// chi(Hilb^n P^2) are the 3-colored partition numbers; derived here
// independently by expanding prod (1 - t^k)^{-3} with plain series ops.
TEST(Hilbert, ProjectivePlaneEulerNumbers) {
    const int r = 5;
    auto expected = TruncSeries<BigInt>::one(r);
    for (int k = 1; k <= r; ++k) {
        std::vector<BigInt> factor(r + 1);
        factor[0] = 1;
        factor[k] = -1;
        const auto geometric = inv(TruncSeries<BigInt>(std::move(factor)));
        expected = expected * geometric * geometric * geometric;
    }

    const auto got = euler_characteristic(hilb_series_product(projective_plane(), r));
    EXPECT_EQ(got, expected);

    const long frozen[] = {1, 3, 9, 22, 51, 108};
    for (int n = 0; n <= r; ++n) {
        EXPECT_EQ(got.coeff(n), BigInt(frozen[n])) << "n=" << n;
    }
}

TEST(Hilbert, EulerSpecializationMatchesColoredPartitions) {
    // For any class, chi of the Hilbert series only depends on chi of the
    // class: prod (1 - t^k)^{-chi}.
    for (const auto& s : {affine_plane(), projective_plane(), quadric()}) {
        const int r = 5;
        const BigInt chi = euler_characteristic(s.cls);
        auto expected = TruncSeries<BigInt>::one(r);
        for (int k = 1; k <= r; ++k) {
            std::vector<BigInt> factor(r + 1);
            factor[0] = 1;
            factor[k] = -1;
            expected = expected * power(inv(TruncSeries<BigInt>(std::move(factor))), chi);
        }
        EXPECT_EQ(euler_characteristic(hilb_series_product(s, r)), expected);
    }
}

}  // namespace
}  // namespace motivic
