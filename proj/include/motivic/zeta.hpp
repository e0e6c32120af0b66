#ifndef MOTIVIC_ZETA_HPP
#define MOTIVIC_ZETA_HPP

#include <vector>

#include <motivic/bigint.hpp>
#include <motivic/laurent.hpp>
#include <motivic/series.hpp>

namespace motivic {

// zeta(m, r) over Z: the truncation of (1 - t)^{-m}. For m >= 0 the t^k
// coefficient counts size-k multisets drawn from an m-point set, i.e. the
// symmetric power S^k of the set; additivity zeta(m+n) = zeta(m)*zeta(n) and
// zeta(-m) = inv(zeta(m)) then hold for all integers.
inline TruncSeries<BigInt> zeta(const BigInt& m, int order) {
    std::vector<BigInt> coeffs(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) {
        coeffs[static_cast<std::size_t>(k)] = multiset_binomial(m, k);
    }
    return TruncSeries<BigInt>(std::move(coeffs));
}

// zeta(M, r) over Z[L, L^-1]: for M = sum c_e * L^e this is the product over
// terms of (1 - L^e t)^{-c_e}, each factor having t^k coefficient
// multiset_binomial(c_e, k) * L^{e k}. The closed form realizes, in one
// stroke, additivity in M, negation as series inversion, and the scaling law
// zeta(L^s M, t) = zeta(M, L^s t) for every integer s.
inline TruncSeries<LaurentPoly> zeta(const LaurentPoly& m, int order) {
    auto result = TruncSeries<LaurentPoly>::one(order);
    for (const auto& [e, c] : m.terms()) {
        std::vector<LaurentPoly> factor(static_cast<std::size_t>(order) + 1);
        for (int k = 0; k <= order; ++k) {
            factor[static_cast<std::size_t>(k)] =
                LaurentPoly::term(multiset_binomial(c, k), e * k);
        }
        result = result * TruncSeries<LaurentPoly>(std::move(factor));
    }
    return result;
}

// Ring that carries a zeta function: the pre-lambda datum every power
// operation here is built from.
template <typename R>
concept zeta_ring = ring_element<R> && requires(const R& m, int order) {
    { zeta(m, order) } -> std::same_as<TruncSeries<R>>;
};

// Euler-characteristic specialization L -> 1: the unique ring homomorphism
// Z[L, L^-1] -> Z sending L to 1, so chi(M) is the sum of coefficients.
inline BigInt euler_characteristic(const LaurentPoly& m) {
    BigInt total = 0;
    for (const auto& [e, c] : m.terms()) {
        total += c;
    }
    return total;
}

// Coefficientwise lift of the specialization to series.
inline TruncSeries<BigInt> euler_characteristic(const TruncSeries<LaurentPoly>& a) {
    std::vector<BigInt> coeffs(static_cast<std::size_t>(a.order()) + 1);
    for (int k = 0; k <= a.order(); ++k) {
        coeffs[static_cast<std::size_t>(k)] = euler_characteristic(a.coeff(k));
    }
    return TruncSeries<BigInt>(std::move(coeffs));
}

}  // namespace motivic

#endif  // MOTIVIC_ZETA_HPP
