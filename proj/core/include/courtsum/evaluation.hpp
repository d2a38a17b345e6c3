#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace courtsum {

struct RougeScore {
    int n = 1;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;

    bool operator==(const RougeScore&) const = default;
};

struct RougeOptions {
    bool stem = false;              // neutral classic configuration: both off
    bool remove_stopwords = false;
};

/// Clipped n-gram overlap over lowercased, punctuation-stripped whitespace
/// tokens. Texts shorter than n grams score 0.
RougeScore rouge_n(std::string_view candidate, std::string_view reference, int n,
                   const RougeOptions& options = {});

struct CaseScores {
    RougeScore r1{1};
    RougeScore r2{2};
    RougeScore r4{4};

    bool operator==(const CaseScores&) const = default;
};

struct EvaluationReport {
    std::map<std::string, CaseScores> per_case;
    CaseScores aggregate;  // arithmetic mean of the per-case values
};

/// Throws MissingReferenceError when a summary id has no reference.
EvaluationReport evaluate_corpus(const std::map<std::string, std::string>& summaries,
                                 const std::map<std::string, std::string>& references,
                                 const RougeOptions& options = {});

struct CaseAttributes {
    std::string domain;        // empty -> "unknown"
    std::optional<int> year;   // judgment year
};

/// `case_id, domain, year` per line.
std::map<std::string, CaseAttributes> load_attributes(const std::filesystem::path& file);

struct GroupedReport {
    std::map<std::string, CaseScores> by_domain;
    std::map<std::string, std::size_t> domain_counts;
    std::map<std::string, CaseScores> by_year;  // keys "1950".. and "unknown"
    std::map<std::string, std::size_t> year_counts;
};

/// Per-group arithmetic means; cases without attributes land in "unknown".
GroupedReport group_report(const EvaluationReport& report,
                           const std::map<std::string, CaseAttributes>& attributes);

}  // namespace courtsum
