#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <string_view>
#include <vector>

#include "ocseq/oracle.hpp"
#include "ocseq/word_core.hpp"

using namespace ocseq;

namespace {

// direct prefix/suffix comparison, independent of the library path
std::int64_t border_by_direct_scan(std::string_view w) {
    for (std::size_t len = w.size(); len-- > 0;) {
        if (w.substr(0, len) == w.substr(w.size() - len))
            return static_cast<std::int64_t>(len);
    }
    return 0;
}

BorderArray border_array_by_direct_scan(std::string_view w) {
    BorderArray out;
    for (std::size_t i = 1; i <= w.size(); ++i)
        out.push_back(border_by_direct_scan(w.substr(0, i)));
    return out;
}

}  // anonymous namespace

TEST_CASE("border array fixtures") {
    CHECK(compute_border_array("abcaacab") == BorderArray{0, 0, 0, 1, 1, 0, 1, 2});
    CHECK(compute_border_array("") == BorderArray{});
    CHECK(compute_border_array("aaaa") == BorderArray{0, 1, 2, 3});
    CHECK(border_array_by_direct_scan("aaaa") == BorderArray{0, 1, 2, 3});
    CHECK(border_array_to_string(compute_border_array("abcaacab")) == "0,0,0,1,1,0,1,2");
}

TEST_CASE("border array matches the direct scan on every short word") {
    oracle::for_each_word("ab", 10, [&](const std::string& w) {
        CHECK(compute_border_array(w) == border_array_by_direct_scan(w));
    });
    oracle::for_each_word("abc", 6, [&](const std::string& w) {
        CHECK(compute_border_array(w) == border_array_by_direct_scan(w));
    });
}

TEST_CASE("oc-sequence fixtures") {
    CHECK(compute_oc_sequence("abcab").str() == "10011");
    CHECK(compute_oc_sequence("abaaab").str() == "101001");
    CHECK(compute_oc_sequence("abcaacab").str() == "10010001");
    CHECK(compute_oc_sequence("aaaa").str() == "1111");
    CHECK(compute_oc_sequence("").str() == "");
}

TEST_CASE("oc-sequence equals the naive closed test on every prefix") {
    const auto check_word = [&](const std::string& w) {
        const OcSequence oc = compute_oc_sequence(w);
        for (std::size_t i = 1; i <= w.size(); ++i) {
            const bool closed = oracle::naive_is_closed(std::string_view(w).substr(0, i));
            CHECK(oc[i - 1] == (closed ? 1 : 0));
        }
    };
    oracle::for_each_word("ab", 11, check_word);
    oracle::for_each_word("abc", 7, check_word);
}

TEST_CASE("oc-sequence structural invariants") {
    oracle::for_each_word("ab", 12, [&](const std::string& w) {
        const OcSequence oc = compute_oc_sequence(w);
        CHECK(oc[0] == 1);
        CHECK(check_run_inequality(oc));
    });
    for (std::size_t n = 1; n <= 12; ++n)
        CHECK(compute_oc_sequence(std::string(n, 'c')).str() == std::string(n, '1'));
}

TEST_CASE("is_closed fixtures") {
    CHECK(is_closed("abca"));
    CHECK(is_closed("ababa"));
    CHECK(is_closed("aabaab"));
    CHECK_FALSE(is_closed("ab"));
    CHECK_FALSE(is_closed("aab"));
    CHECK_FALSE(is_closed("aaba"));
    CHECK(is_closed(""));
    CHECK(is_closed("z"));
}

TEST_CASE("longest border") {
    CHECK(longest_border("abcaacab") == "ab");
    CHECK(longest_border("ab") == "");
    CHECK(longest_border("ababa") == "aba");
    CHECK(border_by_direct_scan("ababa") == 3);
    CHECK_THROWS_AS(longest_border(""), std::invalid_argument);
}

TEST_CASE("period and exponent") {
    CHECK(period("aabaab") == 3);
    CHECK(period("") == 1);
    CHECK(period("abc") == 3);
    CHECK(exponent("aabaab") == Rational(2, 1));
    CHECK(exponent("abc") == Rational(1, 1));
    CHECK(exponent("ababa") == Rational(5, 2));
    CHECK(exponent("ababa").str() == "5/2");
    CHECK_THROWS_AS(exponent(""), std::invalid_argument);
}

TEST_CASE("closed extensions") {
    // derived via the definition: aba closed, abb open
    CHECK(oracle::naive_is_closed("aba"));
    CHECK_FALSE(oracle::naive_is_closed("abb"));
    CHECK(closed_extension("ab", "ab") == 'a');

    CHECK_FALSE(oracle::naive_is_closed("aaba"));
    CHECK_FALSE(oracle::naive_is_closed("aabb"));
    CHECK(closed_extension("aab", "ab") == std::nullopt);

    CHECK(closed_extension("a", "ab") == 'a');
    CHECK_THROWS_AS(closed_extension("", "ab"), std::invalid_argument);
}

TEST_CASE("closed extension laws on every short word") {
    oracle::for_each_word("ab", 11, [&](const std::string& w) {
        std::size_t closed_count = 0;
        for (const char x : std::string_view("ab")) {
            if (is_closed(w + x)) {
                ++closed_count;
                CHECK(period(w + x) == period(w));
            }
        }
        CHECK(closed_count <= 1);
        if (is_closed(w))
            CHECK(closed_count == 1);
        CHECK(closed_extension(w, "ab").has_value() == (closed_count == 1));
    });
}

TEST_CASE("complete return root") {
    CHECK(complete_return_root("aabaab") == "aab");
    CHECK(complete_return_root("aaba") == std::nullopt);
    CHECK(complete_return_root("a") == "");
    oracle::for_each_word("ab", 11, [&](const std::string& w) {
        const auto root = complete_return_root(w);
        if (is_closed(w)) {
            REQUIRE(root.has_value());
            CHECK(*root == longest_border(w));
            CHECK(period(w) == 1 + compute_oc_sequence(w).count_zeros());
        } else {
            CHECK_FALSE(root.has_value());
        }
    });
}

TEST_CASE("exponent at least 2 implies closed") {
    oracle::for_each_word("ab", 12, [&](const std::string& w) {
        if (exponent(w) >= 2)
            CHECK(is_closed(w));
    });
}

TEST_CASE("runs and the run inequality") {
    const auto rs = runs(OcSequence::parse("110011110000111"));
    CHECK(runs_to_string(rs) == "(1,2)(0,2)(1,4)(0,4)(1,3)");
    CHECK(runs(OcSequence()).empty());
    CHECK(runs_to_string(runs(OcSequence::parse("101001"))) == "(1,1)(0,1)(1,1)(0,2)(1,1)");

    CHECK(check_run_inequality(OcSequence::parse("10011")));
    CHECK_FALSE(check_run_inequality(OcSequence::parse("110100")));
    CHECK(check_run_inequality(OcSequence::parse("1100110000111")));
}

TEST_CASE("runs round-trip with their inverse") {
    oracle::for_each_word("ab", 10, [&](const std::string& w) {
        const OcSequence oc = compute_oc_sequence(w);
        const auto rs = runs(oc);
        CHECK(runs_to_sequence(rs) == oc);
        for (std::size_t i = 1; i < rs.size(); ++i)
            CHECK(rs[i].bit != rs[i - 1].bit);
        for (const auto& run : rs)
            CHECK(run.length > 0);
    });
}

TEST_CASE("oc parsing rejects foreign characters") {
    CHECK_THROWS_AS(OcSequence::parse("10a1"), std::invalid_argument);
    CHECK(OcSequence::parse("").empty());
}

TEST_CASE("alphabet and word helpers") {
    CHECK(alphabet_of("abcaacab") == "abc");
    CHECK(alphabet_of("") == "");
    CHECK(reversed("abaab") == "baaba");
    CHECK(is_palindrome("abaaba"));
    CHECK_FALSE(is_palindrome("aaba"));
    CHECK(swap_ab("aabz") == "bbaz");
}
