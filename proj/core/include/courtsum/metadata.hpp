#pragma once

#include <compare>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace courtsum {

struct Date {
    int year = 0;
    int month = 0;
    int day = 0;

    auto operator<=>(const Date&) const = default;

    bool valid() const;
    std::string iso() const;                               // YYYY-MM-DD
    static std::optional<Date> parse_iso(std::string_view);
};

enum class CitationSource { INSC, AIR, SCR, Other };

std::string_view citation_source_name(CitationSource source);
std::optional<CitationSource> citation_source_from_name(std::string_view name);

struct Citation {
    CitationSource source = CitationSource::Other;
    std::string raw;  // matched surface string, inner whitespace collapsed
    int year = 0;
    std::optional<int> volume;
    int page = 0;

    bool operator==(const Citation&) const = default;
};

struct Act {
    std::string act_id;
    std::string text;

    bool operator==(const Act&) const = default;
};

struct Judge {
    std::string name;  // canonical roster name, or the raw name when unmatched
    bool is_chief = false;
    bool delivered = false;

    bool operator==(const Judge&) const = default;
};

enum class Side { Plaintiff, Defendant, Intervenor };

std::string_view side_name(Side side);
std::optional<Side> side_from_name(std::string_view name);

struct Appearance {
    std::string attorney;
    std::string party;
    Side side = Side::Plaintiff;

    bool operator==(const Appearance&) const = default;
};

struct Parties {
    std::vector<std::string> plaintiffs;
    std::vector<std::string> defendants;
    std::vector<std::string> intervenors;

    bool operator==(const Parties&) const = default;
};

struct RosterEntry {
    std::string canonical_name;
    Date start_date;
    Date end_date;
    std::optional<Date> chief_from;
};

/// `canonical_name, start_date, end_date[, chief_from]` per line, ISO dates.
std::vector<RosterEntry> load_roster(const std::filesystem::path& file);

struct CaseHeader {
    std::string case_name;
    std::optional<Date> date;
    std::vector<std::string> warnings;
};

/// Case name from the title line; date from the DATE OF JUDGMENT marker
/// (DD/MM/YYYY) or the "... on D Month, YYYY" title suffix. The marker wins
/// when both are present. Throws HeaderNotFoundError when the info text has
/// no usable title line; a missing date is a warning, not an error.
CaseHeader parse_case_header(std::string_view info_text);

struct PartiesResult {
    Parties parties;
    std::vector<std::string> warnings;
};

/// Primary parties from the case name's versus split ("AND ANR"-style
/// suffixes stripped, all-caps names title-cased); PETITIONER/RESPONDENT/
/// INTERVENOR blocks in the info text override those verbatim.
PartiesResult parse_parties(std::string_view case_name, std::string_view info_text);

struct CitationScan {
    std::vector<Citation> citations;
    std::vector<std::string> other;
};

/// Structured AIR / SCR / INSC citations plus verbatim strings for every
/// other reporter. The CITATOR INFO block is not scanned. Duplicates keep
/// their first occurrence.
CitationScan parse_citations(std::string_view info_text);

/// Splits the ACT block on blank lines and top-level semicolons.
std::vector<Act> parse_acts(std::string_view info_text);

/// Raw bench names from the BENCH: blocks, first occurrence order, deduped.
std::vector<std::string> parse_bench(std::string_view info_text);

/// Name following "delivered by" in the judgment, with the ", J."-style
/// honorific stripped.
std::optional<std::string> find_delivery_name(std::string_view judgement_text);

std::size_t levenshtein(std::string_view a, std::string_view b);

/// Lowercases, strips punctuation, collapses runs of single-letter initials
/// ("R. S." -> "rs") and sorts the name tokens, so bench-order inversions
/// compare equal.
std::string normalize_person_name(std::string_view name);

/// Levenshtein over normalized names divided by the longer length.
double normalized_name_distance(std::string_view a, std::string_view b);

struct JudgeMatch {
    std::vector<Judge> judges;
    std::vector<std::string> unmatched;  // raw names kept verbatim in judges
    std::vector<std::string> warnings;
};

/// Matches each raw bench name to the roster entry with minimum normalized
/// edit distance among entries in service on the judgment date. Distances
/// above the ceiling keep the raw name and flag it unmatched.
JudgeMatch match_judges(const std::vector<std::string>& raw_names,
                        const std::vector<RosterEntry>& roster,
                        std::optional<Date> judgment_date,
                        std::optional<std::string> delivery_name = {},
                        double distance_ceiling = 0.4);

/// Best-effort scan of the judgment header for "<names> for the <party>"
/// appearance lines.
std::vector<Appearance> parse_appearances(std::string_view judgement_text,
                                          const Parties& parties);

}  // namespace courtsum
