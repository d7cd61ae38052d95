#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ocseq {

/// Exact fraction with a positive denominator, always stored reduced.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;

    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0)
            throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool operator==(const Rational&) const = default;

    bool is_integer() const { return den == 1; }

    /// "5/2" for proper fractions, "2" when the denominator reduces to 1.
    std::string str() const {
        if (den == 1)
            return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

inline bool operator>=(const Rational& r, std::int64_t v) {
    return r.num >= v * r.den;
}

}  // namespace ocseq
