#ifndef MOTIVIC_LAURENT_HPP
#define MOTIVIC_LAURENT_HPP

#include <cctype>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <motivic/bigint.hpp>

namespace motivic {

// Element of Z[L, L^-1]: a finite map from integer exponent to nonzero
// coefficient, representing sum c_e * L^e. This is the computable stand-in
// for a class in the Grothendieck ring of varieties localized by the class L
// of the affine line; exponents may be negative.
//
// Canonical form: zero coefficients are never stored, so map equality is
// value equality.
class LaurentPoly {
public:
    using Exponent = std::int64_t;
    using TermMap = std::map<Exponent, BigInt>;

    LaurentPoly() = default;

    LaurentPoly(int constant) {  // NOLINT(google-explicit-constructor)
        if (constant != 0) {
            terms_[0] = constant;
        }
    }

    LaurentPoly(BigInt constant) {  // NOLINT(google-explicit-constructor)
        if (constant != 0) {
            terms_[0] = std::move(constant);
        }
    }

    // c * L^e.
    static LaurentPoly term(BigInt c, Exponent e) {
        LaurentPoly p;
        if (c != 0) {
            p.terms_[e] = std::move(c);
        }
        return p;
    }

    // The monomial L^e.
    static LaurentPoly lefschetz(Exponent e = 1) { return term(1, e); }

    bool is_zero() const { return terms_.empty(); }

    BigInt coefficient(Exponent e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    // Nonzero terms in ascending exponent order.
    const TermMap& terms() const { return terms_; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

    LaurentPoly& operator+=(const LaurentPoly& other) {
        for (const auto& [e, c] : other.terms_) {
            add_term(e, c);
        }
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& other) {
        for (const auto& [e, c] : other.terms_) {
            add_term(e, -c);
        }
        return *this;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly sum = a;
        sum += b;
        return sum;
    }

    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly neg;
        for (const auto& [e, c] : a.terms_) {
            neg.terms_[e] = -c;
        }
        return neg;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly diff = a;
        diff -= b;
        return diff;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly prod;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                prod.add_term(ea + eb, ca * cb);
            }
        }
        return prod;
    }

    // Parses the term grammar: terms separated by + / -, a term being an
    // integer, an integer optionally followed by "*" and an L-power, or a
    // bare L-power "L"/"L^e" with e possibly negative. Whitespace ignored.
    static LaurentPoly parse(std::string_view text);

    // Canonical form, ascending exponent: e.g. "-2*L^-1+3" prints as
    // "-2L^-1+3" and L^4 - L^2 prints as "-L^2+L^4". Zero prints as "0".
    std::string to_string() const {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        for (const auto& [e, c] : terms_) {
            const bool negative = c < 0;
            if (!out.empty() && !negative) {
                out += '+';
            }
            if (negative) {
                out += '-';
            }
            const BigInt magnitude = boost::multiprecision::abs(c);
            if (e == 0) {
                out += magnitude.str();
            } else {
                if (magnitude != 1) {
                    out += magnitude.str();
                }
                out += 'L';
                if (e != 1) {
                    out += '^';
                    out += std::to_string(e);
                }
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
        return os << p.to_string();
    }

private:
    void add_term(Exponent e, const BigInt& c) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        } else if (it->second == 0) {
            terms_.erase(it);
        }
    }

    TermMap terms_;
};

inline LaurentPoly LaurentPoly::parse(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s += ch;
        }
    }
    if (s.empty()) {
        throw std::invalid_argument("LaurentPoly::parse: empty input");
    }

    LaurentPoly result;
    std::size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = (s[pos] == '-') ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw std::invalid_argument("LaurentPoly::parse: expected '+' or '-' before term");
        }
        first = false;
        if (pos >= s.size()) {
            throw std::invalid_argument("LaurentPoly::parse: dangling sign");
        }

        BigInt coeff = 1;
        bool have_digits = false;
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                ++pos;
            }
            coeff = BigInt(s.substr(start, pos - start));
            have_digits = true;
        }

        if (pos < s.size() && s[pos] == '*') {
            if (!have_digits || pos + 1 >= s.size() || s[pos + 1] != 'L') {
                throw std::invalid_argument("LaurentPoly::parse: '*' must join an integer and L");
            }
            ++pos;
        }

        Exponent exponent = 0;
        bool have_l = false;
        if (pos < s.size() && s[pos] == 'L') {
            ++pos;
            have_l = true;
            exponent = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                std::size_t start = pos;
                if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
                    ++pos;
                }
                std::size_t digits_start = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                    ++pos;
                }
                if (pos == digits_start) {
                    throw std::invalid_argument("LaurentPoly::parse: missing exponent after '^'");
                }
                exponent = std::stoll(s.substr(start, pos - start));
            }
        }

        if (!have_digits && !have_l) {
            throw std::invalid_argument("LaurentPoly::parse: expected a term");
        }
        result.add_term(have_l ? exponent : 0, sign < 0 ? BigInt(-coeff) : coeff);
    }
    return result;
}

}  // namespace motivic

#endif  // MOTIVIC_LAURENT_HPP
