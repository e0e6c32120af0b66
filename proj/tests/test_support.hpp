#ifndef MOTIVIC_TEST_SUPPORT_HPP
#define MOTIVIC_TEST_SUPPORT_HPP

#include <string>
#include <vector>

#include <motivic/motivic.hpp>

namespace motivic::testing {

// Shorthand for Laurent literals in expected values.
inline LaurentPoly L(const std::string& text) { return LaurentPoly::parse(text); }

inline TruncSeries<LaurentPoly> laurent_series(int order, const std::vector<std::string>& tail) {
    std::vector<LaurentPoly> coeffs;
    coeffs.reserve(tail.size());
    for (const auto& s : tail) {
        coeffs.push_back(L(s));
    }
    return unit_series(order, coeffs);
}

inline TruncSeries<BigInt> int_series(int order, const std::vector<long>& tail) {
    std::vector<BigInt> coeffs(tail.begin(), tail.end());
    return unit_series(order, coeffs);
}

// Full coefficient list, constant term included.
inline TruncSeries<BigInt> int_series_full(const std::vector<long>& coeffs) {
    return TruncSeries<BigInt>(std::vector<BigInt>(coeffs.begin(), coeffs.end()));
}

}  // namespace motivic::testing

#endif  // MOTIVIC_TEST_SUPPORT_HPP
