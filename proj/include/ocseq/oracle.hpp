#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ocseq::oracle {

// Brute-force reference implementations, deliberately sharing no code with
// the linear-time paths they certify. Everything here is meant for words of
// desk size (a dozen letters or so).

/// Closed test straight from the definition: some factor v != w occurs in w
/// exactly twice, once as a prefix and once as a suffix. Cubic.
bool naive_is_closed(std::string_view w);

/// Balance test straight from the definition: every pair of equal-length
/// factors is compared symbol by symbol. Only for words over {a,b}.
bool naive_is_balanced(std::string_view w);

/// Semicentral test straight from the definition: the longest repeated
/// prefix, longest repeated suffix, longest left-special factor and longest
/// right-special factor must all exist (uniquely, for the special factors)
/// and coincide.
bool naive_is_semicentral(std::string_view w);

/// Longest prefix of w occurring at least twice in w.
std::string longest_repeated_prefix(std::string_view w);

/// Longest border of w found by direct prefix/suffix comparison, requiring
/// it to have no internal occurrence for the closed test.
bool border_without_internal_occurrence(std::string_view w);

enum class Filter { all, balanced, left_special, closed };

struct EnumerationSpec {
    std::string alphabet;
    std::size_t max_length = 0;
    Filter filter = Filter::all;
    std::uint64_t candidate_cap = std::uint64_t{1} << 20;
};

struct BoundsExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// All words over the alphabet with length in [1, max_length] matching the
/// filter, in length-then-lexicographic order (alphabet order as given).
/// Throws BoundsExceeded when the raw candidate count passes the cap.
std::vector<std::string> enumerate(const EnumerationSpec& spec);

/// Calls fn for every word over the alphabet with length in [1, max_length],
/// length-then-lexicographic, without materializing the list.
void for_each_word(std::string_view alphabet, std::size_t max_length,
                   const std::function<void(const std::string&)>& fn);

struct OcClass {
    std::string oc;
    std::vector<std::string> members;
};

struct UniquenessReport {
    std::size_t max_length = 0;
    std::vector<std::size_t> classes_per_length;  // entry i = classes at length i+1
    std::vector<OcClass> classes;                 // every class, shortest oc first
    std::vector<OcClass> violations;              // classes with non-isomorphic members
};

/// Groups all balanced binary words of each length <= n by oc-sequence and
/// reports every class whose members are not all equal up to the a/b swap.
UniquenessReport uniqueness_census(std::size_t n);

/// Per-length summary table of a census, one text row per length.
std::string render_census_table(const UniquenessReport& report);

/// Machine-readable census: one class per line, the oc-sequence followed by
/// its member words, space-separated.
std::string render_census_records(const UniquenessReport& report);

struct WitnessPair {
    std::string unbalanced;
    std::string balanced;
    std::string oc;
};

struct MaximalityReport {
    std::size_t max_length = 0;
    std::uint64_t pair_count = 0;
    std::vector<WitnessPair> sample;  // first few pairs found
};

/// Looks for an unbalanced word sharing its oc-sequence with a balanced,
/// non-isomorphic word, over all binary words of length <= n. Such pairs
/// witness that no oc-distinguishing class can contain all of the balanced
/// words plus an unbalanced one.
MaximalityReport maximality_witness(std::size_t n);

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs every exhaustive cross-check suite up to the given word length and
/// returns one result per suite. max_n is capped at 16.
std::vector<SuiteResult> run_selftest(std::size_t max_n);

}  // namespace ocseq::oracle
