#include "ocseq/bigint.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ocseq {

namespace {
constexpr std::uint64_t kBase = 1'000'000'000;
}

BigUint::BigUint(std::uint64_t value) {
    while (value != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(value % kBase));
        value /= kBase;
    }
}

BigUint& BigUint::operator+=(const BigUint& other) {
    const std::size_t n = std::max(limbs_.size(), other.limbs_.size());
    limbs_.resize(n, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t sum = carry + limbs_[i];
        if (i < other.limbs_.size())
            sum += other.limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(sum % kBase);
        carry = sum / kBase;
    }
    if (carry != 0)
        limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigUint& BigUint::operator*=(std::uint64_t factor) {
    if (factor == 0 || limbs_.empty()) {
        limbs_.clear();
        return *this;
    }
    unsigned __int128 carry = 0;
    for (auto& limb : limbs_) {
        const unsigned __int128 cur = static_cast<unsigned __int128>(limb) * factor + carry;
        limb = static_cast<std::uint32_t>(cur % kBase);
        carry = cur / kBase;
    }
    while (carry != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
        carry /= kBase;
    }
    return *this;
}

std::strong_ordering BigUint::operator<=>(const BigUint& other) const {
    if (limbs_.size() != other.limbs_.size())
        return limbs_.size() <=> other.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != other.limbs_[i])
            return limbs_[i] <=> other.limbs_[i];
    }
    return std::strong_ordering::equal;
}

std::string BigUint::str() const {
    if (limbs_.empty())
        return "0";
    std::string out = std::to_string(limbs_.back());
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
        std::string chunk = std::to_string(limbs_[i]);
        out += std::string(9 - chunk.size(), '0');
        out += chunk;
    }
    return out;
}

std::uint64_t BigUint::to_u64() const {
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t value = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (value > (kMax - limbs_[i]) / kBase)
            throw std::overflow_error("BigUint::to_u64: value does not fit in 64 bits");
        value = value * kBase + limbs_[i];
    }
    return value;
}

}  // namespace ocseq
