#include "courtsum/sentencizer.hpp"

#include <cctype>

#include "courtsum/tokens.hpp"

namespace courtsum {

namespace {

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
bool is_terminator(char c) { return c == '.' || c == '?' || c == '!'; }
bool is_quote(char c) { return c == '"' || c == '\''; }
bool is_opener(char c) { return c == '(' || c == '['; }
bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

void push_span(std::vector<SentenceSpan>& spans, std::string_view text, std::size_t begin,
               std::size_t end) {
    while (begin < end && is_ws(text[begin])) ++begin;
    while (end > begin && is_ws(text[end - 1])) --end;
    if (begin >= end) return;
    spans.push_back({begin, end, std::string(text.substr(begin, end - begin))});
}

// "ends in a number": the final token, after one trailing period is
// stripped, is all digits.
bool ends_in_number(std::string_view sentence) {
    std::string token = last_token(sentence);
    if (!token.empty() && token.back() == '.') token.pop_back();
    if (token.empty()) return false;
    for (char c : token)
        if (!is_digit(c)) return false;
    return true;
}

bool begins_with_capital(std::string_view sentence) {
    return !sentence.empty() && is_upper(sentence.front());
}

}  // namespace

std::vector<SentenceSpan> base_split(std::string_view text) {
    std::vector<SentenceSpan> spans;
    std::size_t start = 0;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            push_span(spans, text, start, i);
            start = i + 1;
            ++i;
            continue;
        }
        if (!is_terminator(c)) {
            ++i;
            continue;
        }
        std::size_t j = i + 1;
        while (j < text.size() && (text[j] == ' ' || text[j] == '\t')) ++j;
        if (j == i + 1 || j >= text.size()) {  // no whitespace after, or end of text
            ++i;
            continue;
        }
        char next = text[j];
        if (is_quote(next)) {
            if (j + 1 >= text.size() || is_ws(text[j + 1])) {
                // closing quote: it ends this sentence
                push_span(spans, text, start, j + 1);
                start = j + 1;
                i = j + 1;
            } else {
                // opening quote of the next sentence
                push_span(spans, text, start, i + 1);
                start = j;
                i = j;
            }
        } else if (is_upper(next) || is_digit(next) || is_opener(next)) {
            push_span(spans, text, start, i + 1);
            start = j;
            i = j;
        } else {
            ++i;
        }
    }
    push_span(spans, text, start, text.size());
    return spans;
}

bool is_valid_abbreviation(std::string_view token, const AbbreviationSet& discovered) {
    // shed wrapper punctuation but keep the trailing period
    std::size_t b = 0;
    while (b < token.size() && (is_quote(token[b]) || is_opener(token[b]))) ++b;
    std::size_t e = token.size();
    while (e > b && (is_quote(token[e - 1]) || token[e - 1] == ')' || token[e - 1] == ']' ||
                     token[e - 1] == ',' || token[e - 1] == ';'))
        --e;
    std::string_view core = token.substr(b, e - b);
    if (core.empty()) return false;
    return discovered.contains(core) || AbbreviationTable::builtin().contains(core) ||
           is_rule_b_token(core);
}

std::vector<Sentence> merge_sentences(const std::vector<SentenceSpan>& spans,
                                      const AbbreviationSet& discovered) {
    std::vector<Sentence> out;
    if (spans.empty()) return out;

    std::string current = spans[0].text;
    for (std::size_t k = 1; k < spans.size(); ++k) {
        const std::string& next = spans[k].text;
        bool merge = is_valid_abbreviation(last_token(current), discovered) ||
                     (ends_in_number(current) && !begins_with_capital(next));
        if (merge) {
            current += ' ';
            current += next;
        } else {
            out.push_back({static_cast<int>(out.size()), std::move(current), {}, {}, {}});
            current = next;
        }
    }
    out.push_back({static_cast<int>(out.size()), std::move(current), {}, {}, {}});
    return out;
}

std::vector<Sentence> tokenize(std::string_view text, const AbbreviationSet& discovered) {
    return merge_sentences(base_split(text), discovered);
}

}  // namespace courtsum
