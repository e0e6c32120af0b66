#ifndef MOTIVIC_BIGINT_HPP
#define MOTIVIC_BIGINT_HPP

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace motivic {

// Arbitrary-precision signed integer. Expression templates are disabled so
// BigInt behaves as a plain value type inside generic series code.
using BigInt =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;

// m * (m - 1) * ... * (m - count + 1); empty product for count == 0.
inline BigInt falling_factorial(const BigInt& m, int count) {
    BigInt result = 1;
    for (int i = 0; i < count; ++i) {
        result *= m - i;
    }
    return result;
}

// Coefficient of t^k in (1 - t)^{-m}, i.e. C(m + k - 1, k) read as the
// polynomial m(m+1)...(m+k-1)/k!. Integral for every integer m: each partial
// product m(m+1)...(m+i-1)/i! is itself a binomial coefficient up to sign.
inline BigInt multiset_binomial(const BigInt& m, int k) {
    BigInt result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * (m + i - 1) / i;
    }
    return result;
}

// Exact quotient; throws if the division leaves a remainder.
inline BigInt exact_div(const BigInt& numerator, const BigInt& denominator) {
    BigInt quotient, remainder;
    boost::multiprecision::divide_qr(numerator, denominator, quotient,
                                     remainder);
    if (remainder != 0) {
        throw std::logic_error("exact_div: division is not exact");
    }
    return quotient;
}

}  // namespace motivic

#endif  // MOTIVIC_BIGINT_HPP
