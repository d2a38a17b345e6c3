#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "courtsum/textnorm.hpp"

namespace courtsum {

struct SentenceSpan {
    std::size_t begin = 0;  // byte offsets into the source text
    std::size_t end = 0;
    std::string text;       // source slice with surrounding whitespace stripped

    bool operator==(const SentenceSpan&) const = default;
};

struct Sentence {
    int index = 0;
    std::string text;
    std::optional<bool> pseudo_relevant;
    std::optional<double> relevance_score;
    std::optional<std::string> rhetorical_role;

    bool operator==(const Sentence&) const = default;
};

/// Deterministic rule-based boundary detector.
///
/// Splits after '.', '?' or '!' followed by whitespace and an uppercase
/// letter, digit, opening quote, parenthesis or bracket. A closing quote
/// sitting after the terminator ('conviction. " It ...') stays with the
/// sentence it closes. Newlines (paragraph breaks in normalized text) are
/// hard boundaries. A statistical splitter can replace this behind the
/// same signature; the merge rules below do the legal-specific work.
std::vector<SentenceSpan> base_split(std::string_view text);

/// True when `token` (the final whitespace token of a candidate sentence)
/// is a discovered abbreviation, a built-in one, or has rule-(b) shape.
bool is_valid_abbreviation(std::string_view token, const AbbreviationSet& discovered);

/// Undoes abbreviation- and citation-induced false breaks. A sentence is
/// merged with its successor while it ends in a valid abbreviation, or
/// ends in a number and the successor does not begin with a capital
/// letter. Applied left to right until a fixed point; indices renumber
/// from 0.
std::vector<Sentence> merge_sentences(const std::vector<SentenceSpan>& spans,
                                      const AbbreviationSet& discovered);

/// base_split + merge_sentences.
std::vector<Sentence> tokenize(std::string_view text, const AbbreviationSet& discovered);

}  // namespace courtsum
