#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ocseq {

/// Unsigned arbitrary-precision integer, just big enough for continuant
/// arithmetic: construction from machine words, addition, multiplication by
/// a machine word, comparison and decimal rendering.
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t value);  // NOLINT: implicit by design

    BigUint& operator+=(const BigUint& other);
    BigUint& operator*=(std::uint64_t factor);

    bool operator==(const BigUint& other) const = default;
    std::strong_ordering operator<=>(const BigUint& other) const;

    bool is_zero() const { return limbs_.empty(); }

    /// Decimal rendering, no sign, no separators.
    std::string str() const;

    /// Exact conversion back to a machine word; throws std::overflow_error
    /// when the value does not fit.
    std::uint64_t to_u64() const;

private:
    // base 10^9 limbs, least significant first, no trailing zero limbs
    std::vector<std::uint32_t> limbs_;
};

inline BigUint operator+(BigUint lhs, const BigUint& rhs) {
    lhs += rhs;
    return lhs;
}

inline BigUint operator*(BigUint lhs, std::uint64_t factor) {
    lhs *= factor;
    return lhs;
}

}  // namespace ocseq
