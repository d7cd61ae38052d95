#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "ocseq/oracle.hpp"
#include "ocseq/reconstruct.hpp"
#include "ocseq/sturmian.hpp"
#include "ocseq/word_core.hpp"

using namespace ocseq;

namespace {

OcSequence oc(std::string_view bits) {
    return OcSequence::parse(bits);
}

// brute force: the balanced words starting with 'a' that realize the given
// oc-sequence
std::vector<std::string> sturmian_words_with_oc(std::string_view bits) {
    std::vector<std::string> found;
    oracle::for_each_word("ab", bits.size(), [&](const std::string& w) {
        if (w.size() != bits.size() || w[0] != 'a')
            return;
        if (!oracle::naive_is_balanced(w))
            return;
        if (compute_oc_sequence(w).str() == bits)
            found.push_back(w);
    });
    return found;
}

}  // anonymous namespace

TEST_CASE("reconstruction fixtures") {
    CHECK(reconstruct(oc("1100")) == "aaba");
    CHECK(reconstruct(oc("101001")) == "abaaab");
    CHECK(reconstruct(oc("10011")) == "abbab");
    CHECK(reconstruct(oc("1")) == "a");

    // the frozen expectations agree with the exhaustive search
    CHECK(sturmian_words_with_oc("1100") == std::vector<std::string>{"aaba"});
    CHECK(sturmian_words_with_oc("10011") == std::vector<std::string>{"abbab"});
}

TEST_CASE("invalid starts") {
    CHECK_THROWS_AS(reconstruct(oc("0")), InvalidOcStart);
    CHECK_THROWS_AS(reconstruct(oc("0101")), InvalidOcStart);
    CHECK_THROWS_AS(reconstruct(OcSequence()), InvalidOcStart);
}

TEST_CASE("round-trip over every balanced word") {
    oracle::for_each_word("ab", 13, [&](const std::string& w) {
        if (w[0] != 'a' || !is_balanced(w))
            return;
        const OcSequence bits = compute_oc_sequence(w);
        const ReconstructionResult r = reconstruct_with_border(bits);
        CHECK(r.word == w);
        CHECK(r.border == compute_border_array(w));
    });
}

TEST_CASE("border array from the scan always matches the output word") {
    // also on sequences that fail validation, the scan's border array must
    // be the border array of whatever word it built
    oracle::for_each_word("ab", 12, [&](const std::string& bits_text) {
        std::string bits = bits_text;
        bits[0] = '1';
        for (char& c : bits)
            c = (c == 'a') ? '0' : '1';
        const ReconstructionResult r = reconstruct_with_border(oc(bits), false);
        CHECK(r.border == compute_border_array(r.word));
    });
}

TEST_CASE("validation rejects non-Sturmian sequences") {
    // 110100 violates the run inequality, so no word realizes it
    CHECK_FALSE(check_run_inequality(oc("110100")));
    CHECK_THROWS_AS(reconstruct(oc("110100")), NotSturmianOc);

    // every sequence violating the run inequality must be rejected
    oracle::for_each_word("ab", 12, [&](const std::string& bits_text) {
        std::string bits = bits_text;
        bits[0] = '1';
        for (char& c : bits)
            c = (c == 'a') ? '0' : '1';
        if (!check_run_inequality(oc(bits)))
            CHECK_THROWS_AS(reconstruct(oc(bits)), NotSturmianOc);
    });
}

TEST_CASE("validation helper") {
    CHECK(validate_roundtrip(oc("101001"), "abaaab"));
    CHECK_FALSE(validate_roundtrip(oc("1100"), "aabb"));  // oc matches, unbalanced
    CHECK(compute_oc_sequence("aabb").str() == "1100");
    CHECK(validate_roundtrip(oc("11"), "aa"));
    CHECK_FALSE(validate_roundtrip(oc("11"), "ab"));
    CHECK_FALSE(validate_roundtrip(oc("11"), "ac"));
}

TEST_CASE("mirror words share the oc-sequence") {
    oracle::for_each_word("ab", 12, [&](const std::string& w) {
        if (w[0] != 'a' || !is_balanced(w))
            return;
        CHECK(compute_oc_sequence(swap_ab(w)) == compute_oc_sequence(w));
    });
}

TEST_CASE("reconstruction is deterministic") {
    const OcSequence bits = oc_closed_form(DirectiveSequence({2, 1, 3}), 400);
    const std::string once = reconstruct(bits);
    const std::string twice = reconstruct(bits);
    CHECK(once == twice);
    CHECK(once == standard_prefix(DirectiveSequence({2, 1, 3}), 400));
}
