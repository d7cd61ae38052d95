#include "ocseq/sturmian.hpp"

#include <charconv>
#include <stdexcept>

namespace ocseq {

namespace {

constexpr unsigned __int128 kHugeLength = static_cast<unsigned __int128>(1) << 96;

void require_binary(std::string_view w, const char* who) {
    for (const char c : w) {
        if (c != 'a' && c != 'b')
            throw std::invalid_argument(std::string(who) + ": expects a word over {a,b}");
    }
}

bool uses_only_ab(std::string_view w) {
    for (const char c : w) {
        if (c != 'a' && c != 'b')
            return false;
    }
    return true;
}

// letter pair closing the n-th standard word: s_n = core(n) + xy
std::string_view parity_pair(std::size_t n) {
    return (n % 2 == 1) ? std::string_view("ab") : std::string_view("ba");
}

void check_generation_cap(unsigned __int128 bytes, const char* who) {
    if (bytes > kGenerationByteCap)
        throw std::length_error(std::string(who) + ": generated words would exceed the size cap");
}

std::string repeat(std::string_view part, std::uint64_t times) {
    std::string out;
    out.reserve(part.size() * times);
    for (std::uint64_t i = 0; i < times; ++i)
        out += part;
    return out;
}

// Incremental table of standard-word cores u_1, u_2, ... for one directive.
class CoreSequence {
public:
    explicit CoreSequence(const DirectiveSequence& d) : d_(d) {}

    const std::string& at(std::size_t n) {
        while (cores_.size() < n)
            grow();
        return cores_[n - 1];
    }

    // length the next core would have, without materializing it
    unsigned __int128 next_length() const {
        const std::size_t n = cores_.size() + 1;  // index of the core to build
        if (n == 1)
            return d_.digit(0) - 1;
        if (n == 2) {
            const unsigned __int128 block = d_.digit(0) + 1;
            return (d_.digit(1) - 1) * block + d_.digit(0);
        }
        const std::size_t m = n - 1;
        return static_cast<unsigned __int128>(d_.digit(m)) * (cores_[m - 1].size() + 2) +
               cores_[m - 2].size();
    }

private:
    void grow() {
        const unsigned __int128 len = next_length();
        check_generation_cap(len, "standard_cores");
        const std::size_t n = cores_.size() + 1;
        if (n == 1) {
            cores_.push_back(std::string(d_.digit(0) - 1, 'a'));
        } else if (n == 2) {
            // seed derived from s_2 = (a^{d_0} b)^{d_1} a with the last two
            // letters removed
            std::string block(d_.digit(0), 'a');
            block += 'b';
            std::string u = repeat(block, d_.digit(1) - 1);
            u += std::string(d_.digit(0), 'a');
            cores_.push_back(std::move(u));
        } else {
            const std::size_t m = n - 1;
            std::string block = cores_[m - 1];
            block += parity_pair(m);
            std::string u = repeat(block, d_.digit(m));
            u += cores_[m - 2];
            cores_.push_back(std::move(u));
        }
    }

    const DirectiveSequence& d_;
    std::vector<std::string> cores_;
};

}  // namespace

DirectiveSequence::DirectiveSequence(std::vector<std::uint64_t> digits)
    : digits_(std::move(digits)) {
    if (digits_.empty())
        throw std::invalid_argument("DirectiveSequence: needs at least one digit");
    if (digits_[0] == 0)
        throw std::invalid_argument(
            "DirectiveSequence: the first digit must be positive; for a word starting "
            "with b, swap a and b and use the complementary expansion");
    for (const auto d : digits_) {
        if (d == 0)
            throw std::invalid_argument("DirectiveSequence: all digits must be positive");
    }
}

DirectiveSequence DirectiveSequence::parse(std::string_view text) {
    std::vector<std::uint64_t> digits;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view token =
            text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        std::uint64_t value = 0;
        const auto [ptr, ec] = std::from_chars(token.begin(), token.end(), value);
        if (ec != std::errc() || ptr != token.end() || token.empty())
            throw std::invalid_argument(
                "DirectiveSequence: expected comma-separated positive integers");
        digits.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return DirectiveSequence(std::move(digits));
}

std::string DirectiveSequence::str() const {
    std::string out;
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (i > 0)
            out += ',';
        out += std::to_string(digits_[i]);
    }
    return out;
}

std::vector<std::string> standard_words(const DirectiveSequence& d, int n_max) {
    if (n_max < -1)
        throw std::invalid_argument("standard_words: n_max must be >= -1");
    std::vector<std::string> words;
    words.reserve(static_cast<std::size_t>(n_max + 2));
    words.emplace_back("b");
    if (n_max >= 0)
        words.emplace_back("a");
    for (int n = 0; n < n_max; ++n) {
        const std::string& cur = words[words.size() - 1];
        const std::string& prev = words[words.size() - 2];
        const std::uint64_t dn = d.digit(static_cast<std::size_t>(n));
        check_generation_cap(
            static_cast<unsigned __int128>(dn) * cur.size() + prev.size(), "standard_words");
        std::string next = repeat(cur, dn);
        next += prev;
        words.push_back(std::move(next));
    }
    return words;
}

std::vector<std::string> standard_cores(const DirectiveSequence& d, int n_max) {
    if (n_max < 1)
        throw std::invalid_argument("standard_cores: n_max must be >= 1");
    CoreSequence cores(d);
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n)
        out.push_back(cores.at(static_cast<std::size_t>(n)));
    return out;
}

std::string standard_prefix(const DirectiveSequence& d, std::uint64_t length) {
    if (length == 0)
        throw std::invalid_argument("standard_prefix: length must be >= 1");
    check_generation_cap(length, "standard_prefix");
    std::string prev = "b";
    std::string cur = "a";
    std::size_t n = 0;
    while (cur.size() < length) {
        const std::uint64_t dn = d.digit(n);
        std::string next;
        for (std::uint64_t k = 0; k < dn && next.size() < length; ++k)
            next += cur;
        if (next.size() < length)
            next += prev;
        prev = std::move(cur);
        cur = std::move(next);
        ++n;
    }
    cur.resize(length);
    return cur;
}

BigUint continuant(std::span<const std::uint64_t> entries) {
    BigUint before_prev(1);  // K of the empty sequence
    if (entries.empty())
        return before_prev;
    BigUint prev(entries[0]);
    for (std::size_t i = 1; i < entries.size(); ++i) {
        BigUint cur = prev;
        cur *= entries[i];
        cur += before_prev;
        before_prev = std::move(prev);
        prev = std::move(cur);
    }
    return prev;
}

std::vector<BigUint> run_lengths_closed_form(const DirectiveSequence& d, std::size_t count) {
    if (count == 0)
        throw std::invalid_argument("run_lengths_closed_form: count must be >= 1");
    std::vector<BigUint> ks;
    ks.reserve(count);
    ks.emplace_back(d.digit(0));
    BigUint len_prev(1);  // |s_{n-1}|
    BigUint len_cur(1);   // |s_n|
    for (std::size_t n = 1; n < count; ++n) {
        BigUint len_next = len_cur;
        len_next *= d.digit(n - 1);
        len_next += len_prev;
        len_prev = std::move(len_cur);
        len_cur = std::move(len_next);
        BigUint k = len_cur;
        k *= d.digit(n) - 1;
        k += len_prev;
        ks.push_back(std::move(k));
    }
    return ks;
}

OcSequence oc_closed_form(const DirectiveSequence& d, std::uint64_t length) {
    if (length == 0)
        throw std::invalid_argument("oc_closed_form: length must be >= 1");
    OcSequence out;
    out.reserve(length);
    unsigned __int128 len_prev = 1;  // |s_{n-1}|
    unsigned __int128 len_cur = 1;   // |s_n|
    std::size_t n = 0;
    while (out.size() < length) {
        unsigned __int128 k;
        if (n == 0) {
            k = d.digit(0);
        } else {
            k = len_cur * (d.digit(n) - 1) + len_prev;
        }
        for (unsigned __int128 i = 0; i < k && out.size() < length; ++i)
            out.push_back(1);
        for (unsigned __int128 i = 0; i < k && out.size() < length; ++i)
            out.push_back(0);
        const unsigned __int128 len_next = len_cur * d.digit(n) + len_prev;
        len_prev = len_cur;
        len_cur = len_next > kHugeLength ? kHugeLength : len_next;
        ++n;
    }
    return out;
}

std::vector<std::string> semicentral_prefixes(const DirectiveSequence& d,
                                              std::uint64_t max_length) {
    if (max_length == 0)
        throw std::invalid_argument("semicentral_prefixes: max_length must be >= 1");
    CoreSequence cores(d);
    std::vector<std::string> out;
    for (std::size_t n = 1;; ++n) {
        if (2 * cores.next_length() + 2 > max_length)
            break;
        const std::string& u = cores.at(n);
        std::string v = u;
        v += parity_pair(n);
        v += u;
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<std::string> central_prefixes(const DirectiveSequence& d,
                                          std::uint64_t max_length) {
    if (max_length == 0)
        throw std::invalid_argument("central_prefixes: max_length must be >= 1");
    const std::string w = standard_prefix(d, max_length);
    std::vector<std::string> out;
    for (std::size_t len = 0; len <= w.size(); ++len) {
        const std::string_view prefix(w.data(), len);
        if (is_central(prefix))
            out.emplace_back(prefix);
    }
    return out;
}

std::vector<Flip> run_boundaries(const DirectiveSequence& d, std::uint64_t max_position) {
    if (max_position == 0)
        throw std::invalid_argument("run_boundaries: max_position must be >= 1");
    using int128 = __int128;
    const int128 limit = static_cast<int128>(max_position);
    std::vector<Flip> out;

    int128 core_prev = -1;                                    // formal |u_0|
    int128 core_cur = static_cast<int128>(d.digit(0)) - 1;    // |u_1|
    const int128 first = core_prev + core_cur + 3;            // position d_0 + 1
    if (first > limit)
        return out;
    out.push_back({static_cast<std::uint64_t>(first), FlipKind::closed_to_open});

    constexpr int128 kHuge = static_cast<int128>(1) << 96;
    for (std::size_t n = 1;; ++n) {
        const int128 reentry = 2 * core_cur + 3;  // after the semicentral prefix
        if (reentry > limit)
            break;
        out.push_back({static_cast<std::uint64_t>(reentry), FlipKind::open_to_closed});

        const int128 unit = core_cur + 2;
        const std::uint64_t dn = d.digit(n);
        int128 core_next;
        if (static_cast<int128>(dn) > (kHuge - core_prev) / unit)
            core_next = kHuge;
        else
            core_next = static_cast<int128>(dn) * unit + core_prev;

        const int128 exit = core_cur + core_next + 3;  // after the central prefix
        if (exit > limit)
            break;
        out.push_back({static_cast<std::uint64_t>(exit), FlipKind::closed_to_open});

        core_prev = core_cur;
        core_cur = core_next;
    }
    return out;
}

SquareFactorization square_factorization(const DirectiveSequence& d, std::size_t terms) {
    if (terms == 0)
        throw std::invalid_argument("square_factorization: terms must be >= 1");
    SquareFactorization out;
    out.head = std::string(d.digit(0), 'a');
    out.head += 'b';
    out.head += std::string(d.digit(0) - 1, 'a');

    CoreSequence cores(d);
    const std::vector<std::string> words = standard_words(d, static_cast<int>(terms));
    out.half_factors.reserve(terms);
    for (std::size_t n = 1; n <= terms; ++n) {
        // grow to n+1 first: at() may reallocate the core table
        const std::string& longer = cores.at(n + 1);
        const std::string& shorter = cores.at(n);
        if (longer.compare(0, shorter.size(), shorter) != 0)
            throw std::logic_error("square_factorization: core is not a prefix of its successor");
        std::string half = longer.substr(shorter.size());

        // each half must be the reversal of a standard word:
        // reversed(s_{n-1}) followed by d_n - 1 copies of reversed(s_n)
        std::string expected = reversed(words[n]);  // words[i] holds s_{i-1}
        const std::string rev_cur = reversed(words[n + 1]);
        for (std::uint64_t k = 1; k < d.digit(n); ++k)
            expected += rev_cur;
        if (half != expected)
            throw std::logic_error("square_factorization: reversed-word identity failed");
        out.half_factors.push_back(std::move(half));
    }
    return out;
}

bool is_balanced(std::string_view w) {
    require_binary(w, "is_balanced");
    const std::size_t n = w.size();
    std::vector<std::uint32_t> prefix_a(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i)
        prefix_a[i + 1] = prefix_a[i] + (w[i] == 'a' ? 1 : 0);
    for (std::size_t len = 1; len <= n; ++len) {
        std::uint32_t lo = prefix_a[len];
        std::uint32_t hi = lo;
        for (std::size_t i = 1; i + len <= n; ++i) {
            const std::uint32_t count = prefix_a[i + len] - prefix_a[i];
            lo = std::min(lo, count);
            hi = std::max(hi, count);
        }
        if (hi - lo > 1)
            return false;
    }
    return true;
}

bool is_balanced_by_palindromes(std::string_view w) {
    require_binary(w, "is_balanced_by_palindromes");
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (w[i] != 'a')
            continue;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (w[j] != 'a')
                continue;
            const std::string_view inner = w.substr(i + 1, j - i - 1);
            if (!is_palindrome(inner))
                continue;
            std::string mirrored = "b";
            mirrored += inner;
            mirrored += 'b';
            if (w.find(mirrored) != std::string_view::npos)
                return false;
        }
    }
    return true;
}

bool is_central(std::string_view w) {
    require_binary(w, "is_central");
    if (!is_palindrome(w))
        return false;
    std::string left(1, 'a');
    left += w;
    if (!is_balanced(left))
        return false;
    left[0] = 'b';
    if (!is_balanced(left))
        return false;
    std::string right(w);
    right += 'a';
    if (!is_balanced(right))
        return false;
    right.back() = 'b';
    return is_balanced(right);
}

bool is_semicentral(std::string_view w) {
    require_binary(w, "is_semicentral");
    const std::size_t n = w.size();
    if (n < 2 || n % 2 != 0)
        return false;
    const std::size_t k = n / 2 - 1;
    if (w[k] == w[k + 1])
        return false;
    if (w.substr(0, k) != w.substr(k + 2, k))
        return false;
    return is_central(w.substr(0, k));
}

bool is_left_special_sturmian(std::string_view w) {
    require_binary(w, "is_left_special_sturmian");
    std::string s(1, 'a');
    s += w;
    if (!is_balanced(s))
        return false;
    s[0] = 'b';
    return is_balanced(s);
}

bool is_right_special_sturmian(std::string_view w) {
    require_binary(w, "is_right_special_sturmian");
    std::string s(w);
    s += 'a';
    if (!is_balanced(s))
        return false;
    s.back() = 'b';
    return is_balanced(s);
}

bool is_strictly_bispecial(std::string_view w) {
    require_binary(w, "is_strictly_bispecial");
    std::string s(1, 'a');
    s += w;
    s += 'a';
    if (!is_balanced(s))
        return false;
    s.back() = 'b';
    if (!is_balanced(s))
        return false;
    s[0] = 'b';
    if (!is_balanced(s))
        return false;
    s.back() = 'a';
    return is_balanced(s);
}

bool is_standard_oc_shape(const OcSequence& oc) {
    if (oc.empty() || oc[0] != 1)
        throw std::invalid_argument("is_standard_oc_shape: sequence must start with 1");
    if (oc[oc.size() - 1] != 1)
        throw std::invalid_argument("is_standard_oc_shape: sequence must end with 1");
    const std::vector<Run> rs = runs(oc);
    // pairs of (closed run, open run); the final run of 1s is unpaired
    for (std::size_t i = 0; i + 1 < rs.size(); i += 2) {
        if (rs[i].length != rs[i + 1].length)
            return false;
    }
    return true;
}

Classification classify(std::string_view w) {
    Classification c;
    c.word = w;
    c.binary = uses_only_ab(w);
    c.closed = is_closed(w);
    c.period = period(w);
    if (!w.empty())
        c.exponent = exponent(w);
    c.oc = compute_oc_sequence(w).str();
    if (c.binary) {
        c.balanced = is_balanced(w);
        c.central = is_central(w);
        c.semicentral = is_semicentral(w);
        c.left_special = is_left_special_sturmian(w);
        c.right_special = is_right_special_sturmian(w);
        c.strictly_bispecial = is_strictly_bispecial(w);
    }
    return c;
}

}  // namespace ocseq
