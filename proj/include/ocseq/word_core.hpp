#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ocseq/rational.hpp"

namespace ocseq {

// Words are plain character strings; every distinct character is a symbol.
// Prefix, border and run indices are 1-based in all documentation and in
// every rendered output, matching the usual stringology convention; the
// containers below store them 0-based.

/// entries[i] = length of the longest border of the prefix of length i+1.
using BorderArray = std::vector<std::int64_t>;

/// The open/closed sequence of a word: bit i is 1 when the prefix of length
/// i+1 is closed, 0 when it is open. Instances may hold arbitrary bit
/// strings (e.g. candidate inputs for reconstruction); only the outputs of
/// compute_oc_sequence are guaranteed to be realizable.
class OcSequence {
public:
    OcSequence() = default;
    explicit OcSequence(std::vector<std::uint8_t> bits);

    /// Parses a '0'/'1' text token; throws std::invalid_argument on any
    /// other character.
    static OcSequence parse(std::string_view text);

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }

    void push_back(std::uint8_t bit) { bits_.push_back(bit); }
    void reserve(std::size_t n) { bits_.reserve(n); }

    std::uint64_t count_ones() const;
    std::uint64_t count_zeros() const { return size() - count_ones(); }

    /// '0'/'1' text, leftmost character = prefix of length 1.
    std::string str() const;

    bool operator==(const OcSequence&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// One maximal run of equal bits.
struct Run {
    std::uint8_t bit;
    std::uint64_t length;

    bool operator==(const Run&) const = default;
};

/// Sorted distinct symbols occurring in w.
std::string alphabet_of(std::string_view w);

std::string reversed(std::string_view w);
bool is_palindrome(std::string_view w);

/// Exchanges 'a' and 'b'; other symbols are left untouched.
std::string swap_ab(std::string_view w);

/// Longest-border array of w (Morris-Pratt preprocessing), linear time.
BorderArray compute_border_array(std::string_view w);

/// oc(w), computed as the successive differences of the running maximum of
/// the border array (the running maximum before the first prefix counts as
/// -1, which makes the first bit 1 without a special case). Linear time.
OcSequence compute_oc_sequence(std::string_view w);

/// A word is closed when it is empty or its longest border has no internal
/// occurrence; equivalently, the last bit of its oc-sequence is 1.
bool is_closed(std::string_view w);

/// Longest proper prefix of w that is also a suffix. Throws
/// std::invalid_argument for the empty word, whose borders are undefined.
std::string longest_border(std::string_view w);

/// Minimal period: |w| minus the length of the longest border; 1 for the
/// empty word by convention.
std::uint64_t period(std::string_view w);

/// |w| / period(w) as an exact rational. Throws std::invalid_argument for
/// the empty word.
Rational exponent(std::string_view w);

/// The unique symbol x of the alphabet such that wx is closed, if any.
/// Symbols are tried in the order they appear in `alphabet`; at most one
/// can succeed. Requires |w| >= 1.
std::optional<char> closed_extension(std::string_view w, std::string_view alphabet);

/// For a closed word, the factor it is a complete return to: its prefix of
/// length (number of ones in oc(w)) - 1, which is also its longest border.
/// Empty optional for open words. Requires |w| >= 1.
std::optional<std::string> complete_return_root(std::string_view w);

/// Maximal-run decomposition of a bit sequence.
std::vector<Run> runs(const OcSequence& oc);

/// Inverse of runs().
OcSequence runs_to_sequence(const std::vector<Run>& rs);

/// "(1,2)(0,2)(1,4)" rendering.
std::string runs_to_string(const std::vector<Run>& rs);

/// True when every factor 1^t 0^s 1 of the sequence satisfies t <= s, a
/// necessary condition for the sequence to be the oc-sequence of any word.
bool check_run_inequality(const OcSequence& oc);

/// Comma-separated decimal rendering of a border array.
std::string border_array_to_string(const BorderArray& b);

}  // namespace ocseq
