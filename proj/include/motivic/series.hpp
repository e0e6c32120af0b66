#ifndef MOTIVIC_SERIES_HPP
#define MOTIVIC_SERIES_HPP

#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace motivic {

// Exact element of a commutative ring with unit: value semantics, ring
// operators, and constants reachable as R{0} / R{1}.
template <typename R>
concept ring_element = std::regular<R> && requires(R mut, const R& a, const R& b) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    mut += a;
    R{0};
    R{1};
};

// Power series over R truncated at a fixed order r: exactly r+1 coefficients,
// index k holding the coefficient of t^k. Truncation is structural; there is
// no coefficient beyond index r. Values are immutable after construction.
//
// Binary operations require equal orders. Nothing here re-truncates silently:
// degree accounting is the caller's job.
template <ring_element R>
class TruncSeries {
public:
    // Zero series of the given order.
    explicit TruncSeries(int order) {
        if (order < 0) {
            throw std::invalid_argument("TruncSeries: negative order");
        }
        coeffs_.assign(static_cast<std::size_t>(order) + 1, R{0});
    }

    // Takes the full coefficient vector t^0..t^r; order is size - 1.
    explicit TruncSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) {
            throw std::invalid_argument("TruncSeries: empty coefficient vector");
        }
    }

    // The constant series 1 at the given order.
    static TruncSeries one(int order) {
        TruncSeries s(order);
        s.coeffs_[0] = R{1};
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const R& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }

    const std::vector<R>& coeffs() const { return coeffs_; }

    bool is_one() const {
        if (coeffs_[0] != R{1}) {
            return false;
        }
        for (std::size_t k = 1; k < coeffs_.size(); ++k) {
            if (coeffs_[k] != R{0}) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) = default;

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        require_same_order(a, b);
        std::vector<R> sum(a.coeffs_.size());
        for (std::size_t k = 0; k < sum.size(); ++k) {
            sum[k] = a.coeffs_[k] + b.coeffs_[k];
        }
        return TruncSeries(std::move(sum));
    }

    // Cauchy product truncated at the common order.
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        require_same_order(a, b);
        std::vector<R> prod(a.coeffs_.size(), R{0});
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == R{0}) {
                continue;
            }
            for (std::size_t j = 0; i + j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j] == R{0}) {
                    continue;
                }
                prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return TruncSeries(std::move(prod));
    }

private:
    static void require_same_order(const TruncSeries& a, const TruncSeries& b) {
        if (a.order() != b.order()) {
            throw std::invalid_argument("TruncSeries: order mismatch");
        }
    }

    std::vector<R> coeffs_;
};

// Series with constant term 1 and the given coefficients of t^1, t^2, ...;
// entries past the end of `tail` are zero. Throws if tail is longer than r.
template <ring_element R>
TruncSeries<R> unit_series(int order, const std::vector<R>& tail) {
    if (static_cast<int>(tail.size()) > order) {
        throw std::invalid_argument("unit_series: more coefficients than the order admits");
    }
    std::vector<R> coeffs(static_cast<std::size_t>(order) + 1, R{0});
    coeffs[0] = R{1};
    for (std::size_t i = 0; i < tail.size(); ++i) {
        coeffs[i + 1] = tail[i];
    }
    return TruncSeries<R>(std::move(coeffs));
}

// Multiplicative inverse of a series with constant term 1, via the recurrence
// b_0 = 1, b_k = -sum_{i=1..k} a_i b_{k-i}.
template <ring_element R>
TruncSeries<R> inv(const TruncSeries<R>& a) {
    if (a.coeff(0) != R{1}) {
        throw std::domain_error("inv: constant term must be 1");
    }
    std::vector<R> b(static_cast<std::size_t>(a.order()) + 1, R{0});
    b[0] = R{1};
    for (int k = 1; k <= a.order(); ++k) {
        R acc{0};
        for (int i = 1; i <= k; ++i) {
            if (a.coeff(i) == R{0} || b[static_cast<std::size_t>(k - i)] == R{0}) {
                continue;
            }
            acc += a.coeff(i) * b[static_cast<std::size_t>(k - i)];
        }
        b[static_cast<std::size_t>(k)] = -acc;
    }
    return TruncSeries<R>(std::move(b));
}

// The substitution t -> c * t^s: the coefficient of t^{s*i} in the result is
// a_i * c^i for s*i <= r, every other coefficient is zero. Input coefficients
// with index > floor(r/s) cannot influence the output.
template <ring_element R>
TruncSeries<R> substitute(const TruncSeries<R>& a, const R& c, int s) {
    if (s < 1) {
        throw std::invalid_argument("substitute: exponent s must be >= 1");
    }
    const int r = a.order();
    std::vector<R> out(static_cast<std::size_t>(r) + 1, R{0});
    R c_power{1};
    for (int i = 0; i * s <= r; ++i) {
        out[static_cast<std::size_t>(i * s)] = a.coeff(i) * c_power;
        c_power = c_power * c;
    }
    return TruncSeries<R>(std::move(out));
}

template <ring_element R>
std::ostream& operator<<(std::ostream& os, const TruncSeries<R>& a) {
    os << "[";
    for (int k = 0; k <= a.order(); ++k) {
        if (k > 0) {
            os << ", ";
        }
        os << a.coeff(k);
    }
    return os << "]";
}

}  // namespace motivic

#endif  // MOTIVIC_SERIES_HPP
