#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ocseq/bigint.hpp"
#include "ocseq/word_core.hpp"

namespace ocseq {

/// Digits (d_0, d_1, ..., d_m) of the slope's continued fraction, all
/// positive. A finite digit list denotes the eventually constant expansion
/// in which the last digit repeats forever, so every directive names one
/// infinite standard Sturmian word starting with 'a'. The Fibonacci word
/// is the directive "1".
class DirectiveSequence {
public:
    explicit DirectiveSequence(std::vector<std::uint64_t> digits);

    /// Parses comma-separated positive decimal digits, e.g. "2,2,1".
    static DirectiveSequence parse(std::string_view text);

    const std::vector<std::uint64_t>& digits() const { return digits_; }

    /// d_n, with the last digit repeating beyond the stored list.
    std::uint64_t digit(std::size_t n) const {
        return digits_[std::min(n, digits_.size() - 1)];
    }

    std::string str() const;

private:
    std::vector<std::uint64_t> digits_;
};

// Generated words are capped at this many bytes; generation throws
// std::length_error beyond it rather than exhausting memory on huge digits.
inline constexpr std::uint64_t kGenerationByteCap = std::uint64_t{1} << 27;

/// The standard sequence s_{-1} = b, s_0 = a, s_{n+1} = s_n^{d_n} s_{n-1},
/// returned for n = -1 .. n_max (element i holds s_{i-1}).
std::vector<std::string> standard_words(const DirectiveSequence& d, int n_max);

/// Core of the n-th standard word: s_n with its final two letters removed,
/// for n = 1 .. n_max (element i holds the core of s_{i+1}). Cores are
/// central words; they satisfy core(n+1) = (core(n) xy)^{d_n} core(n-1)
/// where xy is "ab" for odd n and "ba" for even n, and they drive the
/// entire run structure of the oc-sequence.
std::vector<std::string> standard_cores(const DirectiveSequence& d, int n_max);

/// Prefix of the infinite standard word, length characters, O(length).
std::string standard_prefix(const DirectiveSequence& d, std::uint64_t length);

/// Continuant K[a_0, ..., a_n]: K[] = 1, K[a_0] = a_0,
/// K[a_0..a_n] = a_n K[a_0..a_{n-1}] + K[a_0..a_{n-2}].
BigUint continuant(std::span<const std::uint64_t> entries);

/// The half-run lengths (k_0, ..., k_{count-1}) of the standard word's
/// oc-sequence, which is the infinite product over n of 1^{k_n} 0^{k_n}.
/// k_0 = d_0 and k_n = K[1, d_0, ..., d_{n-1}, d_n - 1] for n >= 1.
std::vector<BigUint> run_lengths_closed_form(const DirectiveSequence& d, std::size_t count);

/// Prefix of the standard word's oc-sequence built directly from the
/// closed-form run lengths, without generating the word itself.
OcSequence oc_closed_form(const DirectiveSequence& d, std::uint64_t length);

/// The semicentral prefixes (core xy core) of the standard word, lengths
/// <= max_length, shortest first. These are exactly the prefixes after
/// which the oc-sequence flips from open to closed.
std::vector<std::string> semicentral_prefixes(const DirectiveSequence& d,
                                              std::uint64_t max_length);

/// All central prefixes of the standard word with length <= max_length,
/// found by testing every prefix with is_central (the empty prefix counts:
/// it is central). Cubic in max_length, intended for moderate sizes.
std::vector<std::string> central_prefixes(const DirectiveSequence& d,
                                          std::uint64_t max_length);

enum class FlipKind { closed_to_open, open_to_closed };

struct Flip {
    std::uint64_t position;  // 1-based index of the first bit after the flip
    FlipKind kind;

    bool operator==(const Flip&) const = default;
};

/// Every position <= max_position where the standard word's oc-sequence
/// changes value, in increasing order. Computed from core lengths alone.
std::vector<Flip> run_boundaries(const DirectiveSequence& d, std::uint64_t max_position);

/// Factorization of the standard word as head times a product of squares:
/// w = a^{d_0} b a^{d_0-1} * prod_n (h_n)^2 where h_n is core(n+1) with the
/// prefix core(n) removed. Each half h_n is the reversal of a standard
/// word; square_factorization checks that against the reversed recurrence
/// h_n = reversed(s_{n-1}) reversed(s_n)^{d_n - 1} and throws
/// std::logic_error if the identity ever failed.
struct SquareFactorization {
    std::string head;
    std::vector<std::string> half_factors;
};

SquareFactorization square_factorization(const DirectiveSequence& d, std::size_t terms);

/// Balance test over {a,b}: every pair of equal-length factors must have
/// 'a'-counts differing by at most 1 (checked per length via the extreme
/// counts). Balanced words are exactly the finite Sturmian words. Throws
/// std::invalid_argument when w uses symbols outside {a,b}. Quadratic; a
/// linear-time test could be substituted here if it ever mattered.
bool is_balanced(std::string_view w);

/// Same predicate through the unbalance criterion: w is unbalanced iff
/// some palindrome v makes both ava and bvb factors of w. Kept as an
/// independent route; must agree with is_balanced everywhere.
bool is_balanced_by_palindromes(std::string_view w);

/// Central words: palindromes whose four one-letter extensions av, bv, va,
/// vb are all balanced.
bool is_central(std::string_view w);

/// Semicentral words: u x y u with u central and x != y. Checked
/// structurally from that shape.
bool is_semicentral(std::string_view w);

/// aw and bw both balanced; such words are precisely the prefixes of
/// standard Sturmian words.
bool is_left_special_sturmian(std::string_view w);

/// wa and wb both balanced.
bool is_right_special_sturmian(std::string_view w);

/// awa, awb, bwa, bwb all balanced.
bool is_strictly_bispecial(std::string_view w);

/// For a bit sequence of the shape 1^{k_0} 0^{k'_0} ... 1^{k_n} 0^{k'_n} 1+,
/// true iff k_j = k'_j for every j; such sequences are exactly the
/// oc-sequences of prefixes of standard Sturmian words. Throws
/// std::invalid_argument when the sequence is empty or does not both start
/// and end with 1.
bool is_standard_oc_shape(const OcSequence& oc);

/// Every predicate of interest for one word, for reporting. The Sturmian
/// flags are absent when the word uses symbols outside {a,b}; exponent is
/// absent for the empty word.
struct Classification {
    std::string word;
    bool binary = false;
    std::optional<bool> balanced;
    std::optional<bool> central;
    std::optional<bool> semicentral;
    std::optional<bool> left_special;
    std::optional<bool> right_special;
    std::optional<bool> strictly_bispecial;
    bool closed = false;
    std::uint64_t period = 1;
    std::optional<Rational> exponent;
    std::string oc;
};

Classification classify(std::string_view w);

}  // namespace ocseq
