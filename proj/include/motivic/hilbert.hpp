#ifndef MOTIVIC_HILBERT_HPP
#define MOTIVIC_HILBERT_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include <motivic/laurent.hpp>
#include <motivic/partitions.hpp>
#include <motivic/power.hpp>
#include <motivic/series.hpp>
#include <motivic/zeta.hpp>

namespace motivic {

// Class [M] of a smooth quasi-projective surface in Z[L, L^-1]. The identities
// below are ring identities and compute for any Laurent class; the geometric
// reading as 1 + sum [Hilb^n M] t^n only attaches when cls really is the
// class of a smooth surface.
struct SurfaceClass {
    LaurentPoly cls;

    explicit SurfaceClass(LaurentPoly c) : cls(std::move(c)) {}
};

// The generating series of Hilbert schemes of points in its four equivalent
// forms. Each factor k first contributes at t^k, so the infinite product is
// truncated at k = r. The forms are computed along genuinely different
// routes and cross-checked in the tests.

// prod_{k>=1} zeta_{L^-1 M}((L t)^k)
inline TruncSeries<LaurentPoly> hilb_zeta_product(const SurfaceClass& s, int order) {
    const auto twisted_zeta = zeta(LaurentPoly::lefschetz(-1) * s.cls, order);
    auto result = TruncSeries<LaurentPoly>::one(order);
    for (int k = 1; k <= order; ++k) {
        result = result * substitute(twisted_zeta, LaurentPoly::lefschetz(k), k);
    }
    return result;
}

// prod_{k>=1} zeta_M(L^{k-1} t^k)
inline TruncSeries<LaurentPoly> hilb_zeta_product_shifted(const SurfaceClass& s, int order) {
    const auto surface_zeta = zeta(s.cls, order);
    auto result = TruncSeries<LaurentPoly>::one(order);
    for (int k = 1; k <= order; ++k) {
        result = result * substitute(surface_zeta, LaurentPoly::lefschetz(k - 1), k);
    }
    return result;
}

// ( prod_{k>=1} 1/(1 - L^{k-1} t^k) )^M
inline TruncSeries<LaurentPoly> hilb_power_of_geometric(const SurfaceClass& s, int order) {
    auto base = TruncSeries<LaurentPoly>::one(order);
    for (int k = 1; k <= order; ++k) {
        std::vector<LaurentPoly> factor(static_cast<std::size_t>(order) + 1);
        factor[0] = LaurentPoly{1};
        factor[static_cast<std::size_t>(k)] = -LaurentPoly::lefschetz(k - 1);
        base = base * inv(TruncSeries<LaurentPoly>(std::move(factor)));
    }
    return power(base, s.cls);
}

// prod_{k>=1} ( 1/(1 - t^k) )^{L^{k-1} M}
inline TruncSeries<LaurentPoly> hilb_product_of_powers(const SurfaceClass& s, int order) {
    auto result = TruncSeries<LaurentPoly>::one(order);
    for (int k = 1; k <= order; ++k) {
        std::vector<LaurentPoly> factor(static_cast<std::size_t>(order) + 1);
        factor[0] = LaurentPoly{1};
        factor[static_cast<std::size_t>(k)] = LaurentPoly{-1};
        result = result * power(inv(TruncSeries<LaurentPoly>(std::move(factor))),
                                LaurentPoly::lefschetz(k - 1) * s.cls);
    }
    return result;
}

// The product form of the generating series, prod zeta_{L^-1 M}((L t)^k).
inline TruncSeries<LaurentPoly> hilb_series_product(const SurfaceClass& s, int order) {
    return hilb_zeta_product(s, order);
}

// The power-structure form. Both displayed power forms are computed and must
// agree; a mismatch would mean the power operation itself is broken.
inline TruncSeries<LaurentPoly> hilb_series_power(const SurfaceClass& s, int order) {
    auto via_power_of_product = hilb_power_of_geometric(s, order);
    auto via_product_of_powers = hilb_product_of_powers(s, order);
    if (via_power_of_product != via_product_of_powers) {
        throw std::logic_error("hilb_series_power: the two power forms disagree");
    }
    return via_power_of_product;
}

// Class of Hilb^n via Goettsche's decomposition over partitions of n:
//
//   M^[n] = sum_{(k_1..k_n)} S^{k_1}M * ... * S^{k_n}M * L^{n - |k|}.
inline LaurentPoly hilb_direct_sum(const SurfaceClass& s, int n) {
    if (n < 0) {
        throw std::invalid_argument("hilb_direct_sum: negative n");
    }
    LaurentPoly total;
    for (const Partition& p : partitions(n)) {
        LaurentPoly stratum = LaurentPoly::lefschetz(n - p.part_count());
        for (int i = 1; i <= n; ++i) {
            const int ki = p.multiplicity(i);
            if (ki > 0) {
                stratum = stratum * sym_pow(s.cls, ki);
            }
        }
        total = total + stratum;
    }
    return total;
}

// Series assembled term-by-term from hilb_direct_sum; the partition-sum
// route to the same generating function.
inline TruncSeries<LaurentPoly> hilb_direct_sum_series(const SurfaceClass& s, int order) {
    std::vector<LaurentPoly> coeffs(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        coeffs[static_cast<std::size_t>(n)] = hilb_direct_sum(s, n);
    }
    return TruncSeries<LaurentPoly>(std::move(coeffs));
}

}  // namespace motivic

#endif  // MOTIVIC_HILBERT_HPP
