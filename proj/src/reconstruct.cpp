#include "ocseq/reconstruct.hpp"

#include "ocseq/sturmian.hpp"

namespace ocseq {

ReconstructionResult reconstruct_with_border(const OcSequence& oc, bool validate) {
    if (oc.empty() || oc[0] != 1)
        throw InvalidOcStart("reconstruct: the oc-sequence of a nonempty word starts with 1");
    const std::size_t n = oc.size();

    // 1-based arrays with sentinels: border[0] = -1 and word[0] = 'b', so
    // that word[border[i]] is the letter breaking the period when the
    // border chain bottoms out.
    std::vector<std::int64_t> border(n + 1);
    std::string word(n + 1, '\0');
    border[0] = -1;
    word[0] = 'b';
    border[1] = 0;
    word[1] = 'a';

    std::int64_t ones = 0;  // border length at the last closed-to-open flip
    constexpr std::int64_t kUnset = -2;
    std::int64_t j = kUnset;  // border-chain cursor, persists across bits

    for (std::size_t i = 2; i <= n; ++i) {
        if (oc[i - 1] == 1 || border[i - 1] < ones) {
            border[i] = border[i - 1] + 1;
        } else {
            if (oc[i - 2] == 1) {
                ones = border[i - 1];
                const char x = word[static_cast<std::size_t>(ones) + 1];
                j = border[static_cast<std::size_t>(ones)];
                while (j >= 0 && word[static_cast<std::size_t>(j) + 1] == x)
                    j = border[static_cast<std::size_t>(j)];
            }
            if (j == kUnset)
                throw std::logic_error("reconstruct: cursor read before any 1->0 flip");
            border[i] = j + 1;
        }
        word[i] = word[static_cast<std::size_t>(border[i])];
    }

    ReconstructionResult result;
    result.word = word.substr(1);
    result.border.assign(border.begin() + 1, border.end());

    if (validate && !validate_roundtrip(oc, result.word))
        throw NotSturmianOc("reconstruct: no Sturmian word has this oc-sequence");
    return result;
}

std::string reconstruct(const OcSequence& oc, bool validate) {
    return reconstruct_with_border(oc, validate).word;
}

bool validate_roundtrip(const OcSequence& oc, std::string_view w) {
    for (const char c : w) {
        if (c != 'a' && c != 'b')
            return false;
    }
    return compute_oc_sequence(w) == oc && is_balanced(w);
}

}  // namespace ocseq
