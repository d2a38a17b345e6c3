#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace courtsum {

/// Splits on runs of whitespace. No other normalization.
std::vector<std::string> whitespace_tokens(std::string_view text);

/// Whitespace tokens, lowercased, with every non-alphanumeric character
/// removed. Empty tokens are dropped. This is the tokenization shared by the
/// TF-IDF machinery and the ROUGE scorer.
std::vector<std::string> content_tokens(std::string_view text);

std::string to_lower(std::string_view text);

/// Final whitespace token of `text`, or empty string.
std::string last_token(std::string_view text);

std::size_t count_words(std::string_view text);

}  // namespace courtsum
