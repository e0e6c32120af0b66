#ifndef MOTIVIC_POWER_HPP
#define MOTIVIC_POWER_HPP

#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include <motivic/series.hpp>
#include <motivic/zeta.hpp>

namespace motivic {

// The unique factorization of a series with constant term 1 as
//
//   J^r( zeta_{E_1}(t) * zeta_{E_2}(t^2) * ... * zeta_{E_r}(t^r) ),
//
// stored as the exponent sequence E_1, ..., E_r. E_1 always equals the
// t^1 coefficient of the source series.
template <zeta_ring R>
struct ZetaDecomposition {
    int order = 0;
    std::vector<R> exponents;  // E_1 .. E_r

    friend bool operator==(const ZetaDecomposition& a, const ZetaDecomposition& b) = default;
};

// zeta_{m}(t^s) at the given order: zeta of m with t replaced by t^s. Only
// the first floor(order/s) zeta coefficients can reach the truncation, so
// zeta is computed at that order and the result spread onto multiples of s.
template <zeta_ring R>
TruncSeries<R> zeta_in_power(const R& m, int s, int order) {
    const auto z = zeta(m, order / s);
    std::vector<R> out(static_cast<std::size_t>(order) + 1, R{0});
    for (int i = 0; i * s <= order; ++i) {
        out[static_cast<std::size_t>(i * s)] = z.coeff(i);
    }
    return TruncSeries<R>(std::move(out));
}

// Peels the zeta factors off `a` in ascending order i = 1..r: the residual's
// t^i coefficient is E_i because zeta_{E}(t^i) = 1 + E t^i + O(t^{2i}), and
// dividing by that factor clears degree i without touching lower degrees.
template <zeta_ring R>
ZetaDecomposition<R> decompose(const TruncSeries<R>& a) {
    if (a.coeff(0) != R{1}) {
        throw std::domain_error("decompose: constant term must be 1");
    }
    const int r = a.order();
    ZetaDecomposition<R> dec{r, {}};
    dec.exponents.reserve(static_cast<std::size_t>(r));
    TruncSeries<R> residual = a;
    for (int i = 1; i <= r; ++i) {
        R e = residual.coeff(i);
        if (e != R{0}) {
            residual = residual * inv(zeta_in_power(e, i, r));
        }
        dec.exponents.push_back(std::move(e));
    }
    assert(residual.is_one());
    return dec;
}

// Multiplies the zeta factors back together; inverse of decompose.
template <zeta_ring R>
TruncSeries<R> recompose(const ZetaDecomposition<R>& dec) {
    auto result = TruncSeries<R>::one(dec.order);
    for (int i = 1; i <= dec.order; ++i) {
        const R& e = dec.exponents[static_cast<std::size_t>(i - 1)];
        if (e != R{0}) {
            result = result * zeta_in_power(e, i, dec.order);
        }
    }
    return result;
}

// The power operation (A(t))^M: scale every exponent of the zeta
// decomposition of A by M and recompose,
//
//   J^r((A(t))^M) = J^r( zeta_{M E_1}(t) * ... * zeta_{M E_r}(t^r) ).
//
// Together with the zeta functions of the coefficient rings this satisfies
// all five power-structure axioms, exactly, at every truncation order.
template <zeta_ring R>
TruncSeries<R> power(const TruncSeries<R>& a, const R& exponent) {
    const auto dec = decompose(a);
    auto result = TruncSeries<R>::one(a.order());
    for (int i = 1; i <= a.order(); ++i) {
        const R& e = dec.exponents[static_cast<std::size_t>(i - 1)];
        if (e != R{0}) {
            result = result * zeta_in_power(exponent * e, i, a.order());
        }
    }
    return result;
}

// k-th symmetric power of a ring element: the t^k coefficient of its zeta
// function, so zeta stays the single source of truth.
template <zeta_ring R>
R sym_pow(const R& m, int k) {
    if (k < 0) {
        throw std::invalid_argument("sym_pow: negative k");
    }
    return zeta(m, k).coeff(k);
}

}  // namespace motivic

#endif  // MOTIVIC_POWER_HPP
