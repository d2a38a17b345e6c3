#include "courtsum/textnorm.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "courtsum/errors.hpp"
#include "courtsum/tokens.hpp"

namespace courtsum {

namespace {

bool is_blank(std::string_view line) {
    return std::all_of(line.begin(), line.end(), [](char c) {
        return c == ' ' || c == '\t' || c == '\r';
    });
}

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

char fold(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }

std::string fold_copy(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = fold(c);
    return out;
}

constexpr std::string_view kLeadWrappers = "([{'\"";
constexpr std::string_view kTrailWrappers = ")]}'\",;:";

// Splits a raw whitespace token into wrapper punctuation and the core that
// abbreviation rules apply to. The trailing period stays with the core.
struct TokenParts {
    std::string_view lead;
    std::string_view core;
    std::string_view trail;
};

TokenParts split_wrappers(std::string_view token) {
    std::size_t b = 0;
    while (b < token.size() && kLeadWrappers.find(token[b]) != std::string_view::npos) ++b;
    std::size_t e = token.size();
    while (e > b && kTrailWrappers.find(token[e - 1]) != std::string_view::npos) --e;
    return {token.substr(0, b), token.substr(b, e - b), token.substr(e)};
}

}  // namespace

void AbbreviationTable::add(std::string_view surface, std::string_view expansion) {
    std::string key = fold_copy(surface);
    std::string value(expansion);
    while (!value.empty() && value.back() == '.') value.pop_back();
    entries_[std::move(key)] = std::move(value);
}

void AbbreviationTable::merge(const AbbreviationTable& other) {
    for (const auto& [k, v] : other.entries_) entries_[k] = v;
}

bool AbbreviationTable::contains(std::string_view surface) const {
    return entries_.count(fold_copy(surface)) > 0;
}

const AbbreviationTable& AbbreviationTable::builtin() {
    static const AbbreviationTable table = [] {
        AbbreviationTable t;
        const std::pair<const char*, const char*> entries[] = {
            {"no.", "number"},       {"num.", "number"},      {"nos.", "numbers"},
            {"cl.", "clause"},       {"cls.", "clause"},      {"vs.", "versus"},
            {"v.", "versus"},        {"s.", "section"},       {"ss.", "sections"},
            {"sec.", "section"},     {"secs.", "sections"},   {"art.", "article"},
            {"arts.", "articles"},   {"ors.", "others"},      {"anr.", "another"},
            {"govt.", "government"}, {"hon.", "honourable"},  {"ltd.", "limited"},
            {"pvt.", "private"},     {"co.", "company"},      {"rs.", "rupees"},
            {"dt.", "dated"},        {"i.e.", "that is"},     {"e.g.", "for example"},
            {"viz.", "namely"},      {"ord.", "ordinance"},   {"para.", "paragraph"},
            {"paras.", "paragraphs"},{"p.", "page"},          {"pp.", "pages"},
            {"vol.", "volume"},      {"dept.", "department"}, {"addl.", "additional"},
            {"adv.", "advocate"},    {"advs.", "advocates"},  {"distt.", "district"},
            {"exh.", "exhibit"},     {"supdt.", "superintendent"},
            {"corpn.", "corporation"},{"insp.", "inspector"}, {"asst.", "assistant"},
            {"u/s.", "under section"},{"w.e.f.", "with effect from"},
        };
        for (const auto& [k, v] : entries) t.add(k, v);
        return t;
    }();
    return table;
}

AbbreviationTable AbbreviationTable::load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ConfigError("cannot open abbreviation table: " + file.string());
    AbbreviationTable table;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (is_blank(line)) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw ConfigError("abbreviation table line has no tab: " + line);
        std::string surface = line.substr(0, tab);
        std::string expansion = line.substr(tab + 1);
        auto trim = [](std::string& s) {
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
            std::size_t b = 0;
            while (b < s.size() && (s[b] == ' ' || s[b] == '\t')) ++b;
            s.erase(0, b);
        };
        trim(surface);
        trim(expansion);
        if (surface.empty() || expansion.empty())
            throw ConfigError("abbreviation table line malformed: " + line);
        table.add(surface, expansion);
    }
    return table;
}

void AbbreviationSet::insert(std::string_view form) { forms.insert(fold_copy(form)); }

bool AbbreviationSet::contains(std::string_view form) const {
    return forms.count(fold_copy(form)) > 0;
}

std::string normalize_whitespace(std::string_view text) {
    std::vector<std::string> paragraphs;
    std::string paragraph;

    auto flush = [&] {
        // collapse inner whitespace runs and trim
        std::string collapsed;
        collapsed.reserve(paragraph.size());
        bool pending_space = false;
        for (char c : paragraph) {
            if (c == ' ' || c == '\t' || c == '\r') {
                pending_space = !collapsed.empty();
            } else {
                if (pending_space) collapsed.push_back(' ');
                pending_space = false;
                collapsed.push_back(c);
            }
        }
        if (!collapsed.empty()) paragraphs.push_back(std::move(collapsed));
        paragraph.clear();
    };

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line =
            nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
        if (is_blank(line)) {
            flush();
        } else {
            if (!paragraph.empty()) paragraph.push_back(' ');
            paragraph.append(line);
        }
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    flush();

    std::string out;
    for (std::size_t i = 0; i < paragraphs.size(); ++i) {
        if (i) out.push_back('\n');
        out += paragraphs[i];
    }
    return out;
}

std::string repair_hyphenation(std::string_view text, const std::set<std::string>& lexicon) {
    // words seen anywhere in the document (maximal alphabetic runs, folded)
    std::unordered_set<std::string> seen;
    {
        std::string word;
        for (std::size_t i = 0; i <= text.size(); ++i) {
            if (i < text.size() && is_alpha(text[i])) {
                word.push_back(fold(text[i]));
            } else if (!word.empty()) {
                seen.insert(word);
                word.clear();
            }
        }
    }

    // intervals [from, to) to drop: the "- " between the joined halves
    std::vector<std::pair<std::size_t, std::size_t>> drops;
    for (std::size_t p = 1; p + 1 < text.size(); ++p) {
        if (text[p] != '-' || !is_alpha(text[p - 1])) continue;
        std::size_t q = p + 1;
        bool ws = false;
        while (q < text.size() &&
               (text[q] == ' ' || text[q] == '\t' || text[q] == '\n' || text[q] == '\r')) {
            ws = true;
            ++q;
        }
        if (!ws || q >= text.size() || !is_alpha(text[q])) continue;

        std::size_t ls = p;
        while (ls > 0 && is_alpha(text[ls - 1])) --ls;
        std::size_t re = q;
        while (re < text.size() && is_alpha(text[re])) ++re;

        std::string candidate = fold_copy(text.substr(ls, p - ls));
        candidate += fold_copy(text.substr(q, re - q));
        if (seen.count(candidate) || lexicon.count(candidate))
            drops.emplace_back(p, q);
    }

    std::string out;
    out.reserve(text.size());
    std::size_t next_drop = 0;
    for (std::size_t i = 0; i < text.size();) {
        if (next_drop < drops.size() && i == drops[next_drop].first) {
            i = drops[next_drop].second;
            ++next_drop;
        } else {
            out.push_back(text[i]);
            ++i;
        }
    }
    return out;
}

std::string expand_abbreviations(std::string_view text, const AbbreviationTable& table) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r') {
            out.push_back(text[i]);
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\n' &&
               text[i] != '\r')
            ++i;
        std::string_view token = text.substr(start, i - start);
        TokenParts parts = split_wrappers(token);
        auto it = table.entries().find(fold_copy(parts.core));
        if (it == table.entries().end()) {
            out.append(token);
            continue;
        }
        std::string expansion = it->second;
        if (!parts.core.empty() && std::isupper(static_cast<unsigned char>(parts.core[0])) &&
            !expansion.empty())
            expansion[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(expansion[0])));
        out.append(parts.lead);
        out.append(expansion);
        out.append(parts.trail);
    }
    return out;
}

bool is_rule_b_token(std::string_view token) {
    for (std::size_t i = 1; i + 1 < token.size(); ++i)
        if (token[i] == '.' && is_alpha(token[i - 1]) && is_alpha(token[i + 1])) return true;
    return false;
}

namespace {

// Rule (a) shape: at most four characters before a trailing period, at
// least one of them alphabetic. Enumeration markers and page numbers
// ("3.", "104.") stay out so the sentencizer's number-merge rule keeps
// its capitalization condition.
bool is_rule_a_shape(std::string_view core) {
    if (core.size() < 2 || core.back() != '.') return false;
    std::string_view body = core.substr(0, core.size() - 1);
    if (body.size() > 4) return false;
    bool has_alpha = false;
    for (char c : body) {
        if (is_alpha(c)) has_alpha = true;
        else if (!is_digit(c) && c != '.') return false;
    }
    return has_alpha;
}

}  // namespace

AbbreviationSet discover_abbreviations(const std::vector<std::string>& documents,
                                       std::size_t min_doc_frequency) {
    AbbreviationSet result;
    result.min_doc_frequency = min_doc_frequency;

    std::unordered_map<std::string, std::size_t> doc_frequency;
    for (const std::string& doc : documents) {
        std::unordered_set<std::string> in_doc;
        for (const std::string& raw : whitespace_tokens(doc)) {
            TokenParts parts = split_wrappers(raw);
            if (parts.core.empty()) continue;
            std::string folded = fold_copy(parts.core);
            if (is_rule_b_token(folded)) result.forms.insert(folded);
            if (is_rule_a_shape(folded)) in_doc.insert(std::move(folded));
        }
        for (const std::string& form : in_doc) ++doc_frequency[form];
    }
    for (const auto& [form, df] : doc_frequency)
        if (df > min_doc_frequency) result.forms.insert(form);

    for (const auto& [surface, _] : AbbreviationTable::builtin().entries())
        result.forms.insert(surface);
    return result;
}

}  // namespace courtsum
