#include "ocseq/word_core.hpp"

#include <algorithm>
#include <stdexcept>

namespace ocseq {

OcSequence::OcSequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (const auto bit : bits_) {
        if (bit > 1)
            throw std::invalid_argument("OcSequence: bits must be 0 or 1");
    }
}

OcSequence OcSequence::parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (const char c : text) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("OcSequence: expected only '0' and '1' characters");
        bits.push_back(c == '1' ? 1 : 0);
    }
    return OcSequence(std::move(bits));
}

std::uint64_t OcSequence::count_ones() const {
    std::uint64_t ones = 0;
    for (const auto bit : bits_)
        ones += bit;
    return ones;
}

std::string OcSequence::str() const {
    std::string out(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i])
            out[i] = '1';
    }
    return out;
}

std::string alphabet_of(std::string_view w) {
    std::string symbols(w);
    std::sort(symbols.begin(), symbols.end());
    symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
    return symbols;
}

std::string reversed(std::string_view w) {
    return std::string(w.rbegin(), w.rend());
}

bool is_palindrome(std::string_view w) {
    for (std::size_t i = 0, j = w.size(); i < j; ++i, --j) {
        if (w[i] != w[j - 1])
            return false;
    }
    return true;
}

std::string swap_ab(std::string_view w) {
    std::string out(w);
    for (char& c : out) {
        if (c == 'a')
            c = 'b';
        else if (c == 'b')
            c = 'a';
    }
    return out;
}

BorderArray compute_border_array(std::string_view w) {
    BorderArray border(w.size());
    if (w.empty())
        return border;
    border[0] = 0;
    std::int64_t k = 0;
    for (std::size_t i = 1; i < w.size(); ++i) {
        while (k > 0 && w[i] != w[static_cast<std::size_t>(k)])
            k = border[static_cast<std::size_t>(k) - 1];
        if (w[i] == w[static_cast<std::size_t>(k)])
            ++k;
        border[i] = k;
    }
    return border;
}

OcSequence compute_oc_sequence(std::string_view w) {
    const BorderArray border = compute_border_array(w);
    std::vector<std::uint8_t> bits(w.size());
    std::int64_t best = -1;
    for (std::size_t i = 0; i < border.size(); ++i) {
        if (border[i] > best) {
            bits[i] = 1;
            best = border[i];
        }
    }
    return OcSequence(std::move(bits));
}

bool is_closed(std::string_view w) {
    if (w.empty())
        return true;
    const BorderArray border = compute_border_array(w);
    std::int64_t best = -1;
    for (std::size_t i = 0; i + 1 < border.size(); ++i)
        best = std::max(best, border[i]);
    return border.back() > best;
}

std::string longest_border(std::string_view w) {
    if (w.empty())
        throw std::invalid_argument("longest_border: undefined for the empty word");
    const BorderArray border = compute_border_array(w);
    return std::string(w.substr(0, static_cast<std::size_t>(border.back())));
}

std::uint64_t period(std::string_view w) {
    if (w.empty())
        return 1;
    const BorderArray border = compute_border_array(w);
    return w.size() - static_cast<std::uint64_t>(border.back());
}

Rational exponent(std::string_view w) {
    if (w.empty())
        throw std::invalid_argument("exponent: undefined for the empty word");
    return Rational(static_cast<std::int64_t>(w.size()),
                    static_cast<std::int64_t>(period(w)));
}

std::optional<char> closed_extension(std::string_view w, std::string_view alphabet) {
    if (w.empty())
        throw std::invalid_argument("closed_extension: requires a nonempty word");
    std::string candidate(w);
    candidate.push_back('\0');
    for (const char x : alphabet) {
        candidate.back() = x;
        if (is_closed(candidate))
            return x;
    }
    return std::nullopt;
}

std::optional<std::string> complete_return_root(std::string_view w) {
    if (w.empty())
        throw std::invalid_argument("complete_return_root: requires a nonempty word");
    const OcSequence oc = compute_oc_sequence(w);
    if (oc[oc.size() - 1] == 0)
        return std::nullopt;
    return std::string(w.substr(0, oc.count_ones() - 1));
}

std::vector<Run> runs(const OcSequence& oc) {
    std::vector<Run> out;
    for (std::size_t i = 0; i < oc.size();) {
        std::size_t j = i;
        while (j < oc.size() && oc[j] == oc[i])
            ++j;
        out.push_back({oc[i], j - i});
        i = j;
    }
    return out;
}

OcSequence runs_to_sequence(const std::vector<Run>& rs) {
    OcSequence out;
    for (const auto& run : rs) {
        for (std::uint64_t k = 0; k < run.length; ++k)
            out.push_back(run.bit);
    }
    return out;
}

std::string runs_to_string(const std::vector<Run>& rs) {
    std::string out;
    for (const auto& run : rs) {
        out += '(';
        out += run.bit ? '1' : '0';
        out += ',';
        out += std::to_string(run.length);
        out += ')';
    }
    return out;
}

bool check_run_inequality(const OcSequence& oc) {
    const std::vector<Run> rs = runs(oc);
    for (std::size_t i = 0; i + 2 < rs.size(); ++i) {
        // a 0-run followed by another run is internal: a 1 comes after it
        if (rs[i].bit == 1 && rs[i + 1].bit == 0 && rs[i].length > rs[i + 1].length)
            return false;
    }
    return true;
}

std::string border_array_to_string(const BorderArray& b) {
    std::string out;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i > 0)
            out += ',';
        out += std::to_string(b[i]);
    }
    return out;
}

}  // namespace ocseq
