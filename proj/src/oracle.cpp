#include "ocseq/oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>

#include "ocseq/reconstruct.hpp"
#include "ocseq/sturmian.hpp"
#include "ocseq/word_core.hpp"

namespace ocseq::oracle {

namespace {

void require_binary(std::string_view w, const char* who) {
    for (const char c : w) {
        if (c != 'a' && c != 'b')
            throw std::invalid_argument(std::string(who) + ": expects a word over {a,b}");
    }
}

// occurrences of `factor` in `w`, overlaps included; the empty factor
// occurs |w|+1 times
std::size_t count_occurrences(std::string_view w, std::string_view factor) {
    std::size_t count = 0;
    for (std::size_t i = 0; i + factor.size() <= w.size(); ++i) {
        if (w.substr(i, factor.size()) == factor)
            ++count;
    }
    return count;
}

std::size_t count_a(std::string_view w) {
    std::size_t count = 0;
    for (const char c : w)
        count += (c == 'a') ? 1 : 0;
    return count;
}

std::optional<std::string> longest_repeated_suffix(std::string_view w) {
    for (std::size_t len = w.size(); len-- > 0;) {
        const std::string_view suffix = w.substr(w.size() - len);
        if (count_occurrences(w, suffix) >= 2)
            return std::string(suffix);
    }
    return std::nullopt;
}

bool left_special_at(std::string_view w, std::string_view factor) {
    char seen = '\0';
    for (std::size_t pos = 1; pos + factor.size() <= w.size(); ++pos) {
        if (w.substr(pos, factor.size()) != factor)
            continue;
        if (seen == '\0')
            seen = w[pos - 1];
        else if (w[pos - 1] != seen)
            return true;
    }
    return false;
}

bool right_special_at(std::string_view w, std::string_view factor) {
    char seen = '\0';
    for (std::size_t pos = 0; pos + factor.size() < w.size(); ++pos) {
        if (w.substr(pos, factor.size()) != factor)
            continue;
        if (seen == '\0')
            seen = w[pos + factor.size()];
        else if (w[pos + factor.size()] != seen)
            return true;
    }
    return false;
}

// "the longest left special factor" exists only when a single factor
// attains the maximal special length; two distinct longest special factors
// leave it undefined
std::optional<std::string> longest_left_special_factor(std::string_view w) {
    for (std::size_t len = w.size(); len-- > 0;) {
        std::optional<std::string> found;
        for (std::size_t i = 0; i + len <= w.size(); ++i) {
            const std::string_view factor = w.substr(i, len);
            if (found && *found == factor)
                continue;
            if (left_special_at(w, factor)) {
                if (found)
                    return std::nullopt;  // ambiguous at this length
                found = std::string(factor);
            }
        }
        if (found)
            return found;
    }
    return std::nullopt;
}

std::optional<std::string> longest_right_special_factor(std::string_view w) {
    for (std::size_t len = w.size(); len-- > 0;) {
        std::optional<std::string> found;
        for (std::size_t i = 0; i + len <= w.size(); ++i) {
            const std::string_view factor = w.substr(i, len);
            if (found && *found == factor)
                continue;
            if (right_special_at(w, factor)) {
                if (found)
                    return std::nullopt;
                found = std::string(factor);
            }
        }
        if (found)
            return found;
    }
    return std::nullopt;
}

// oc-sequence computed prefix by prefix with the naive closed test only
std::string naive_oc(std::string_view w) {
    std::string bits;
    bits.reserve(w.size());
    for (std::size_t len = 1; len <= w.size(); ++len)
        bits += naive_is_closed(w.substr(0, len)) ? '1' : '0';
    return bits;
}

}  // namespace

bool naive_is_closed(std::string_view w) {
    if (w.empty())
        return true;
    for (std::size_t len = 0; len < w.size(); ++len) {
        if (w.substr(0, len) != w.substr(w.size() - len))
            continue;  // not a border
        if (count_occurrences(w, w.substr(0, len)) == 2)
            return true;
    }
    return false;
}

bool naive_is_balanced(std::string_view w) {
    require_binary(w, "naive_is_balanced");
    for (std::size_t len = 1; len <= w.size(); ++len) {
        for (std::size_t i = 0; i + len <= w.size(); ++i) {
            for (std::size_t j = i + 1; j + len <= w.size(); ++j) {
                const std::size_t ca = count_a(w.substr(i, len));
                const std::size_t cb = count_a(w.substr(j, len));
                const std::size_t diff = ca > cb ? ca - cb : cb - ca;
                if (diff > 1)
                    return false;
            }
        }
    }
    return true;
}

bool naive_is_semicentral(std::string_view w) {
    if (w.empty())
        return false;
    const std::string lrp = longest_repeated_prefix(w);
    const std::optional<std::string> lrs = longest_repeated_suffix(w);
    const std::optional<std::string> lls = longest_left_special_factor(w);
    const std::optional<std::string> lrsp = longest_right_special_factor(w);
    if (!lrs || !lls || !lrsp)
        return false;
    return lrp == *lrs && lrp == *lls && lrp == *lrsp;
}

std::string longest_repeated_prefix(std::string_view w) {
    for (std::size_t len = w.size(); len-- > 0;) {
        const std::string_view prefix = w.substr(0, len);
        if (count_occurrences(w, prefix) >= 2)
            return std::string(prefix);
    }
    return std::string();
}

bool border_without_internal_occurrence(std::string_view w) {
    if (w.empty())
        return true;
    for (std::size_t len = w.size(); len-- > 0;) {
        if (w.substr(0, len) != w.substr(w.size() - len))
            continue;
        // found the longest border; closed iff it occurs exactly twice
        return count_occurrences(w, w.substr(0, len)) == 2;
    }
    return false;
}

void for_each_word(std::string_view alphabet, std::size_t max_length,
                   const std::function<void(const std::string&)>& fn) {
    if (alphabet.empty())
        return;
    for (std::size_t len = 1; len <= max_length; ++len) {
        std::vector<std::size_t> digits(len, 0);
        std::string word(len, alphabet[0]);
        while (true) {
            fn(word);
            std::size_t pos = len;
            while (pos-- > 0) {
                if (++digits[pos] < alphabet.size()) {
                    word[pos] = alphabet[digits[pos]];
                    break;
                }
                digits[pos] = 0;
                word[pos] = alphabet[0];
            }
            if (pos == static_cast<std::size_t>(-1))
                break;
        }
    }
}

std::vector<std::string> enumerate(const EnumerationSpec& spec) {
    if (spec.alphabet.empty())
        throw std::invalid_argument("enumerate: alphabet must be nonempty");
    unsigned __int128 candidates = 0;
    unsigned __int128 layer = 1;
    for (std::size_t len = 1; len <= spec.max_length; ++len) {
        layer *= spec.alphabet.size();
        candidates += layer;
        if (candidates > spec.candidate_cap)
            throw BoundsExceeded("enumerate: candidate count exceeds the cap");
    }
    std::vector<std::string> out;
    for_each_word(spec.alphabet, spec.max_length, [&](const std::string& w) {
        switch (spec.filter) {
            case Filter::all:
                out.push_back(w);
                break;
            case Filter::balanced:
                if (naive_is_balanced(w))
                    out.push_back(w);
                break;
            case Filter::left_special:
                if (naive_is_balanced("a" + w) && naive_is_balanced("b" + w))
                    out.push_back(w);
                break;
            case Filter::closed:
                if (naive_is_closed(w))
                    out.push_back(w);
                break;
        }
    });
    return out;
}

UniquenessReport uniqueness_census(std::size_t n) {
    UniquenessReport report;
    report.max_length = n;
    report.classes_per_length.resize(n, 0);
    for (std::size_t len = 1; len <= n; ++len) {
        std::map<std::string, std::vector<std::string>> classes;
        for_each_word("ab", len, [&](const std::string& w) {
            if (w.size() != len || !naive_is_balanced(w))
                return;
            classes[naive_oc(w)].push_back(w);
        });
        report.classes_per_length[len - 1] = classes.size();
        for (auto& [oc, members] : classes) {
            bool ok = true;
            for (std::size_t i = 1; i < members.size() && ok; ++i)
                ok = members[i] == members[0] || members[i] == swap_ab(members[0]);
            if (!ok)
                report.violations.push_back({oc, members});
            report.classes.push_back({oc, std::move(members)});
        }
    }
    return report;
}

std::string render_census_table(const UniquenessReport& report) {
    std::string out = "length  words  classes  violations\n";
    std::vector<std::size_t> words_per_length(report.max_length, 0);
    std::vector<std::size_t> violations_per_length(report.max_length, 0);
    for (const auto& cls : report.classes)
        words_per_length[cls.oc.size() - 1] += cls.members.size();
    for (const auto& cls : report.violations)
        ++violations_per_length[cls.oc.size() - 1];
    char row[96];
    for (std::size_t len = 1; len <= report.max_length; ++len) {
        std::snprintf(row, sizeof row, "%6zu  %5zu  %7zu  %10zu\n", len,
                      words_per_length[len - 1], report.classes_per_length[len - 1],
                      violations_per_length[len - 1]);
        out += row;
    }
    return out;
}

std::string render_census_records(const UniquenessReport& report) {
    std::string out;
    for (const auto& cls : report.classes) {
        out += cls.oc;
        for (const auto& member : cls.members) {
            out += ' ';
            out += member;
        }
        out += '\n';
    }
    return out;
}

MaximalityReport maximality_witness(std::size_t n) {
    MaximalityReport report;
    report.max_length = n;
    for (std::size_t len = 1; len <= n; ++len) {
        std::map<std::string, std::pair<std::vector<std::string>, std::vector<std::string>>>
            classes;  // oc -> (balanced members, unbalanced members)
        for_each_word("ab", len, [&](const std::string& w) {
            if (w.size() != len)
                return;
            auto& bucket = classes[naive_oc(w)];
            (naive_is_balanced(w) ? bucket.first : bucket.second).push_back(w);
        });
        for (auto& [oc, bucket] : classes) {
            for (const auto& bad : bucket.second) {
                for (const auto& good : bucket.first) {
                    ++report.pair_count;
                    if (report.sample.size() < 8)
                        report.sample.push_back({bad, good, oc});
                }
            }
        }
    }
    return report;
}

namespace {

struct SuiteRunner {
    std::size_t max_n;
    std::vector<SuiteResult> results;

    void add(std::string name, bool passed, std::string detail) {
        results.push_back({std::move(name), passed, std::move(detail)});
    }
};

std::string count_detail(std::uint64_t checked) {
    return "checked " + std::to_string(checked) + " words";
}

void suite_closed_oracle(SuiteRunner& r) {
    for (const auto& [alphabet, cap] :
         {std::pair<std::string, std::size_t>{"ab", 14}, {"abc", 9}}) {
        const std::size_t limit = std::min(r.max_n, cap);
        std::uint64_t checked = 0;
        bool ok = true;
        for_each_word(alphabet, limit, [&](const std::string& w) {
            ++checked;
            if (is_closed(w) != naive_is_closed(w))
                ok = false;
        });
        r.add("closed test matches the definition over {" + alphabet + "}", ok,
              count_detail(checked));
    }
}

void suite_closed_characterizations(SuiteRunner& r) {
    std::uint64_t checked = 0;
    bool ok = true;
    for_each_word("ab", std::min<std::size_t>(r.max_n, 12), [&](const std::string& w) {
        ++checked;
        const bool closed = is_closed(w);
        if (closed != border_without_internal_occurrence(w))
            ok = false;
        // the longest repeated prefix must occur exactly as prefix and suffix
        const std::string lrp = longest_repeated_prefix(w);
        const bool via_prefix = count_occurrences(w, lrp) == 2 &&
                                w.substr(w.size() - lrp.size()) == lrp;
        if (closed != via_prefix)
            ok = false;
    });
    r.add("closed characterizations agree (border, repeated prefix)", ok,
          count_detail(checked));
}

void suite_run_inequality(SuiteRunner& r) {
    std::uint64_t checked = 0;
    bool ok = true;
    const auto visit = [&](const std::string& w) {
        ++checked;
        if (!check_run_inequality(compute_oc_sequence(w)))
            ok = false;
    };
    for_each_word("ab", r.max_n, visit);
    for_each_word("abc", std::min<std::size_t>(r.max_n, 9), visit);
    r.add("every oc-sequence satisfies the run inequality", ok, count_detail(checked));
}

void suite_closed_extensions(SuiteRunner& r) {
    std::uint64_t checked = 0;
    bool ok = true;
    const auto visit_with = [&](std::string_view alphabet) {
        return [&, alphabet](const std::string& w) {
            ++checked;
            std::size_t closed_count = 0;
            for (const char x : alphabet) {
                const std::string wx = w + x;
                if (is_closed(wx)) {
                    ++closed_count;
                    if (period(wx) != period(w))
                        ok = false;  // closed extensions keep the period
                }
            }
            if (closed_count > 1)
                ok = false;
            if (is_closed(w) && closed_count != 1)
                ok = false;  // closed words have exactly one closed extension
            const auto ext = closed_extension(w, alphabet);
            if (ext.has_value() != (closed_count == 1))
                ok = false;
        };
    };
    for_each_word("ab", r.max_n, visit_with("ab"));
    for_each_word("abc", std::min<std::size_t>(r.max_n, 8), visit_with("abc"));
    r.add("closed extensions: at most one, period-preserving", ok, count_detail(checked));
}

void suite_complete_return(SuiteRunner& r) {
    std::uint64_t checked = 0;
    bool ok = true;
    for_each_word("ab", r.max_n, [&](const std::string& w) {
        ++checked;
        const auto root = complete_return_root(w);
        const OcSequence oc = compute_oc_sequence(w);
        if (is_closed(w)) {
            if (!root || *root != longest_border(w))
                ok = false;
            if (period(w) != 1 + oc.count_zeros())
                ok = false;  // period of a closed word = 1 + number of 0s
        } else if (root) {
            ok = false;
        }
    });
    r.add("closed words are complete returns to their longest border", ok,
          count_detail(checked));
}

void suite_exponent(SuiteRunner& r) {
    std::uint64_t checked = 0;
    bool ok = true;
    const auto visit = [&](const std::string& w) {
        ++checked;
        if (exponent(w) >= 2 && !is_closed(w))
            ok = false;
    };
    for_each_word("ab", r.max_n, visit);
    for_each_word("abc", std::min<std::size_t>(r.max_n, 9), visit);
    r.add("exponent at least 2 implies closed", ok, count_detail(checked));
}

void suite_balance_agreement(SuiteRunner& r) {
    std::uint64_t checked = 0;
    bool ok = true;
    for_each_word("ab", r.max_n, [&](const std::string& w) {
        ++checked;
        const bool reference = naive_is_balanced(w);
        if (is_balanced(w) != reference || is_balanced_by_palindromes(w) != reference)
            ok = false;
    });
    r.add("balance tests agree (pairwise, extremes, palindrome criterion)", ok,
          count_detail(checked));
}

void suite_central_semicentral(SuiteRunner& r) {
    std::uint64_t checked = 0;
    bool ok = true;
    for_each_word("ab", std::min<std::size_t>(r.max_n, 12), [&](const std::string& w) {
        ++checked;
        if (is_central(w) && (!is_palindrome(w) || !is_closed(w)))
            ok = false;  // central words are closed palindromes
        const bool semi = is_semicentral(w);
        if (semi && is_closed(w))
            ok = false;  // semicentral words are open
        // the four-coincide definition characterizes the uxyu form on
        // balanced words only
        if (is_balanced(w)) {
            if (semi != naive_is_semicentral(w))
                ok = false;
        } else if (semi) {
            ok = false;
        }
    });
    r.add("central words closed, semicentral words open, tests agree", ok,
          count_detail(checked));
}

void suite_letter_powers(SuiteRunner& r) {
    bool ok = true;
    std::uint64_t checked = 0;
    for (std::size_t n = 1; n <= r.max_n; ++n) {
        ++checked;
        const std::string w(n, 'a');
        if (compute_oc_sequence(w).str() != std::string(n, '1'))
            ok = false;
    }
    r.add("powers of a letter are closed at every prefix", ok, count_detail(checked));
}

void suite_right_special(SuiteRunner& r) {
    std::uint64_t checked = 0;
    bool ok = true;
    for_each_word("ab", r.max_n, [&](const std::string& w) {
        if (!is_right_special_sturmian(w))
            return;
        ++checked;
        const bool a_closed = is_closed(w + 'a');
        const bool b_closed = is_closed(w + 'b');
        if (a_closed == b_closed)
            ok = false;  // exactly one extension of a right special word is closed
    });
    r.add("right special words: exactly one closed extension", ok, count_detail(checked));
}

void suite_standard_shape(SuiteRunner& r) {
    std::uint64_t checked = 0;
    bool ok = true;
    for_each_word("ab", r.max_n, [&](const std::string& w) {
        const OcSequence oc = compute_oc_sequence(w);
        if (oc[oc.size() - 1] != 1)
            return;
        ++checked;
        const bool shape = is_standard_oc_shape(oc);
        const bool prefix_of_standard = is_left_special_sturmian(w);
        if (shape != prefix_of_standard)
            ok = false;
    });
    r.add("oc shape test matches the prefix-of-standard oracle", ok, count_detail(checked));
}

void suite_border_invariants(SuiteRunner& r) {
    std::uint64_t checked = 0;
    bool ok = true;
    for_each_word("ab", std::min<std::size_t>(r.max_n, 12), [&](const std::string& w) {
        ++checked;
        const BorderArray b = compute_border_array(w);
        std::int64_t best = -1;
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (b[i] < 0 || b[i] > static_cast<std::int64_t>(i))
                ok = false;
            if (i > 0 && b[i] > b[i - 1] + 1)
                ok = false;
            const std::string_view prefix(w.data(), i + 1);
            if (prefix.substr(0, static_cast<std::size_t>(b[i])) !=
                prefix.substr(prefix.size() - static_cast<std::size_t>(b[i])))
                ok = false;  // the recorded border really is one
            const std::int64_t next_best = std::max(best, b[i]);
            if (next_best - best != (compute_oc_sequence(prefix)[i] == 1 ? 1 : 0))
                ok = false;
            best = next_best;
        }
    });
    r.add("border array bounds and running-maximum steps", ok, count_detail(checked));
}

void suite_roundtrip(SuiteRunner& r) {
    std::uint64_t checked = 0;
    bool ok = true;
    for_each_word("ab", r.max_n, [&](const std::string& w) {
        if (w[0] != 'a' || !is_balanced(w))
            return;
        ++checked;
        if (reconstruct(compute_oc_sequence(w)) != w)
            ok = false;
    });
    r.add("reconstruction round-trips every balanced word", ok, count_detail(checked));
}

void suite_census(SuiteRunner& r) {
    const std::size_t limit = std::min<std::size_t>(r.max_n, 14);
    const UniquenessReport report = uniqueness_census(limit);
    r.add("oc-classes of balanced words contain only isomorphic members",
          report.violations.empty(),
          std::to_string(report.violations.size()) + " violations up to length " +
              std::to_string(limit));
}

void suite_standard_generation(SuiteRunner& r) {
    const std::vector<std::vector<std::uint64_t>> directives = {
        {1}, {2, 2, 1}, {3}, {1, 2, 3}, {2, 1, 2, 1}, {4, 4}};
    bool ok = true;
    std::uint64_t checked = 0;
    for (const auto& digits : directives) {
        const DirectiveSequence d(digits);
        constexpr std::uint64_t kLen = 400;
        const std::string w = standard_prefix(d, kLen);
        const OcSequence direct = compute_oc_sequence(w);
        if (oc_closed_form(d, kLen) != direct)
            ok = false;

        // flips of the scanned sequence vs the boundary formula
        std::vector<Flip> scanned;
        for (std::size_t i = 1; i < direct.size(); ++i) {
            if (direct[i] != direct[i - 1])
                scanned.push_back({i + 1, direct[i] == 0 ? FlipKind::closed_to_open
                                                         : FlipKind::open_to_closed});
        }
        if (run_boundaries(d, kLen) != scanned)
            ok = false;

        // open->closed flips happen right after the semicentral prefixes
        const auto semis = semicentral_prefixes(d, kLen);
        std::vector<std::uint64_t> reentries;
        for (const auto& flip : scanned) {
            if (flip.kind == FlipKind::open_to_closed)
                reentries.push_back(flip.position);
        }
        if (semis.size() < reentries.size())
            ok = false;
        for (std::size_t i = 0; i < reentries.size() && ok; ++i) {
            if (semis[i].size() + 1 != reentries[i])
                ok = false;
            if (w.compare(0, semis[i].size(), semis[i]) != 0)
                ok = false;
        }
        ++checked;
    }
    r.add("closed form, boundaries and semicentral prefixes consistent", ok,
          std::to_string(checked) + " directives at length 400");
}

}  // namespace

std::vector<SuiteResult> run_selftest(std::size_t max_n) {
    SuiteRunner runner{std::min<std::size_t>(max_n, 16), {}};
    suite_closed_oracle(runner);
    suite_closed_characterizations(runner);
    suite_run_inequality(runner);
    suite_closed_extensions(runner);
    suite_complete_return(runner);
    suite_exponent(runner);
    suite_balance_agreement(runner);
    suite_central_semicentral(runner);
    suite_letter_powers(runner);
    suite_right_special(runner);
    suite_standard_shape(runner);
    suite_border_invariants(runner);
    suite_roundtrip(runner);
    suite_census(runner);
    if (runner.max_n >= 1)
        suite_standard_generation(runner);
    return runner.results;
}

}  // namespace ocseq::oracle
