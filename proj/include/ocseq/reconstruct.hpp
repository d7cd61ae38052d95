#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "ocseq/word_core.hpp"

namespace ocseq {

/// The input bit sequence is empty or starts with 0, so it cannot be the
/// oc-sequence of any word.
struct InvalidOcStart : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The input passed the shape checks but no Sturmian word realizes it:
/// the reconstructed candidate failed round-trip validation.
struct NotSturmianOc : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ReconstructionResult {
    std::string word;
    BorderArray border;  // border array of `word`, built during the scan
};

/// Rebuilds the unique Sturmian word starting with 'a' whose oc-sequence is
/// `oc`, together with its border array, in linear time. Each bit extends
/// the border array: a 1 (or a 0 while the current right-special prefix is
/// not yet a suffix) keeps the minimal period, so the border grows by one;
/// the first 0 after a run of 1s switches letter and drops down the border
/// chain to find the longest border followed by that letter.
///
/// With validate set (the default), the output is checked to actually have
/// oc-sequence `oc` and to be balanced; NotSturmianOc is thrown otherwise.
/// Throws InvalidOcStart when oc is empty or starts with 0.
ReconstructionResult reconstruct_with_border(const OcSequence& oc, bool validate = true);

/// Word-only convenience wrapper around reconstruct_with_border.
std::string reconstruct(const OcSequence& oc, bool validate = true);

/// True iff w realizes oc and is balanced (hence finite Sturmian). Words
/// over alphabets other than {a,b} are never Sturmian and yield false.
bool validate_roundtrip(const OcSequence& oc, std::string_view w);

}  // namespace ocseq
