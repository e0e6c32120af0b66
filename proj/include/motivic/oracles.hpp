#ifndef MOTIVIC_ORACLES_HPP
#define MOTIVIC_ORACLES_HPP

#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <motivic/bigint.hpp>
#include <motivic/partitions.hpp>
#include <motivic/series.hpp>

// Brute-force counting realizations of the power operation over Z, kept
// independent of the zeta-decomposition code path so they can serve as
// oracles for it.

namespace motivic {

// Classical coefficient formula for (1 + a_1 t + a_2 t^2 + ...)^m: the t^k
// coefficient is the sum over partitions (k_1, ..., k_k) of k of
//
//   m(m-1)...(m - sum k_i + 1) / prod k_i!  *  prod a_i^{k_i}.
//
// The quotient is a multinomial coefficient, hence integral for every
// integer m; the division is asserted exact.
inline TruncSeries<BigInt> falling_factorial_power(const TruncSeries<BigInt>& a,
                                                   const BigInt& m) {
    if (a.coeff(0) != 1) {
        throw std::domain_error("falling_factorial_power: constant term must be 1");
    }
    const int r = a.order();
    std::vector<BigInt> out(static_cast<std::size_t>(r) + 1);
    out[0] = 1;
    for (int k = 1; k <= r; ++k) {
        BigInt acc = 0;
        for (const Partition& p : partitions(k)) {
            BigInt factorials = 1;
            BigInt powers = 1;
            for (int i = 1; i <= k; ++i) {
                const int ki = p.multiplicity(i);
                for (int j = 2; j <= ki; ++j) {
                    factorials *= j;
                }
                if (ki > 0) {
                    powers *= boost::multiprecision::pow(a.coeff(i), static_cast<unsigned>(ki));
                }
            }
            acc += exact_div(falling_factorial(m, p.part_count()), factorials) * powers;
        }
        out[static_cast<std::size_t>(k)] = acc;
    }
    return TruncSeries<BigInt>(std::move(out));
}

// Finite-set instance of the configuration model: M is a set of m points and
// each A_i a set of a_i points. Point counts beyond the stored list are zero.
struct FiniteModel {
    int point_count = 0;          // |M|
    std::vector<int> piece_counts;  // |A_1|, |A_2|, ...

    int piece_count(int i) const {
        if (i < 1 || static_cast<std::size_t>(i) > piece_counts.size()) {
            return 0;
        }
        return piece_counts[static_cast<std::size_t>(i - 1)];
    }
};

namespace detail {

// Literal enumeration of configurations: walk the points of M, give each a
// multiplicity s (0 = absent) and one of a_s labels, and count the
// assignments of total multiplicity k.
inline BigInt enumerate_configs(const FiniteModel& model, int point, int remaining) {
    if (point == model.point_count) {
        return remaining == 0 ? 1 : 0;
    }
    BigInt total = enumerate_configs(model, point + 1, remaining);
    for (int s = 1; s <= remaining; ++s) {
        const int labels = model.piece_count(s);
        if (labels != 0) {
            total += labels * enumerate_configs(model, point + 1, remaining - s);
        }
    }
    return total;
}

}  // namespace detail

// Number of multiplicity-k configurations on the model: finite subsets K of M
// with total multiplicity k together with a map sending each multiplicity-s
// point into A_s. Computed by the closed partition formula
//
//   sum over (k_1,...,k_k):  m! / ((m - |k|)! prod k_i!)  *  prod a_i^{k_i},
//
// and cross-checked against literal enumeration when m <= 6 and k <= 6.
inline BigInt config_count(const FiniteModel& model, int k) {
    if (k < 0) {
        throw std::invalid_argument("config_count: negative k");
    }
    const BigInt m = model.point_count;
    BigInt closed = 0;
    for (const Partition& p : partitions(k)) {
        if (p.part_count() > model.point_count) {
            continue;  // no injective placement exists
        }
        BigInt factorials = 1;
        BigInt powers = 1;
        for (int i = 1; i <= k; ++i) {
            const int ki = p.multiplicity(i);
            for (int j = 2; j <= ki; ++j) {
                factorials *= j;
            }
            if (ki > 0) {
                powers *= boost::multiprecision::pow(BigInt(model.piece_count(i)),
                                                     static_cast<unsigned>(ki));
            }
        }
        closed += exact_div(falling_factorial(m, p.part_count()), factorials) * powers;
    }
    if (model.point_count <= 6 && k <= 6) {
        const BigInt enumerated = detail::enumerate_configs(model, 0, k);
        if (enumerated != closed) {
            throw std::logic_error("config_count: enumeration disagrees with closed formula");
        }
    }
    return closed;
}

}  // namespace motivic

#endif  // MOTIVIC_ORACLES_HPP
