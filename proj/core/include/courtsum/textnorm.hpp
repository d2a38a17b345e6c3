#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace courtsum {

/// Surface form (case-folded, trailing period kept) -> expansion.
///
/// The built-in table covers the abbreviations most common in Indian
/// Supreme Court reports. It is a curated reconstruction, not an official
/// list; users can extend it through the TSV loader.
class AbbreviationTable {
public:
    static const AbbreviationTable& builtin();

    /// Loads `surface<TAB>expansion` lines; `#` starts a comment.
    static AbbreviationTable load(const std::filesystem::path& file);

    void add(std::string_view surface, std::string_view expansion);
    void merge(const AbbreviationTable& other);

    bool contains(std::string_view surface) const;
    const std::map<std::string, std::string>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

private:
    std::map<std::string, std::string> entries_;
};

/// Abbreviation surface forms discovered from a corpus (case-folded).
/// Members satisfy one of the two validity rules:
///   (a) at most four characters before a trailing period, document
///       frequency strictly greater than `min_doc_frequency`;
///   (b) a period between two letters anywhere in the token.
struct AbbreviationSet {
    std::set<std::string> forms;
    std::size_t min_doc_frequency = 20;

    void insert(std::string_view form);
    bool contains(std::string_view form) const;
};

/// Collapses runs of spaces/tabs to one space, joins line-wrapped lines
/// within a paragraph, and keeps paragraph breaks as a single newline.
/// Idempotent.
std::string normalize_whitespace(std::string_view text);

/// Joins `<alpha>- <alpha>` pairs left behind by line-wrap typing damage
/// when the joined word occurs elsewhere in the document or in `lexicon`
/// (lowercase entries). Everything else is left alone.
std::string repair_hyphenation(std::string_view text,
                               const std::set<std::string>& lexicon = {});

/// Token-boundary-anchored expansion of every table surface form. Leading
/// capitalization of the surface form carries over to the expansion.
/// Idempotent because no expansion is itself a surface form.
std::string expand_abbreviations(std::string_view text, const AbbreviationTable& table);

/// Rule (b): a period between two letters, decidable on the token alone.
bool is_rule_b_token(std::string_view token);

/// Scans the documents for rule-(a) and rule-(b) abbreviation forms and
/// returns them together with the built-in table's surface forms. Purely
/// numeric tokens ("104.") never qualify: they are handled by the
/// number-merge rule in the sentencizer instead.
AbbreviationSet discover_abbreviations(const std::vector<std::string>& documents,
                                       std::size_t min_doc_frequency = 20);

}  // namespace courtsum
