#include "courtsum/evaluation.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "courtsum/errors.hpp"
#include "courtsum/tokens.hpp"

namespace courtsum {

namespace {

const std::unordered_set<std::string>& rouge_stopwords() {
    static const std::unordered_set<std::string> words = {
        "a", "an", "and", "are", "as", "at", "be", "by", "for", "from", "has", "he",
        "in", "is", "it", "its", "of", "on", "or", "that", "the", "to", "was", "were",
        "will", "with"};
    return words;
}

// minimal suffix stripper, off by default
std::string light_stem(const std::string& token) {
    auto ends_with = [&](std::string_view suffix) {
        return token.size() > suffix.size() + 2 &&
               token.compare(token.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    if (ends_with("ing")) return token.substr(0, token.size() - 3);
    if (ends_with("ed")) return token.substr(0, token.size() - 2);
    if (ends_with("es")) return token.substr(0, token.size() - 2);
    if (ends_with("s")) return token.substr(0, token.size() - 1);
    return token;
}

std::vector<std::string> rouge_tokens(std::string_view text, const RougeOptions& options) {
    std::vector<std::string> tokens = content_tokens(text);
    if (options.remove_stopwords)
        tokens.erase(std::remove_if(tokens.begin(), tokens.end(),
                                    [](const std::string& t) {
                                        return rouge_stopwords().count(t) > 0;
                                    }),
                     tokens.end());
    if (options.stem)
        for (std::string& t : tokens) t = light_stem(t);
    return tokens;
}

std::unordered_map<std::string, std::size_t> ngram_counts(const std::vector<std::string>& tokens,
                                                          int n) {
    std::unordered_map<std::string, std::size_t> counts;
    if (n <= 0 || tokens.size() < static_cast<std::size_t>(n)) return counts;
    for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= tokens.size(); ++i) {
        std::string gram = tokens[i];
        for (std::size_t k = 1; k < static_cast<std::size_t>(n); ++k) {
            gram.push_back(' ');
            gram += tokens[i + k];
        }
        ++counts[gram];
    }
    return counts;
}

CaseScores mean_scores(const std::vector<const CaseScores*>& members) {
    CaseScores mean;
    auto average = [&](auto pick, int n) {
        RougeScore out;
        out.n = n;
        for (const CaseScores* scores : members) {
            const RougeScore& s = pick(*scores);
            out.precision += s.precision;
            out.recall += s.recall;
            out.f1 += s.f1;
        }
        double count = static_cast<double>(members.size());
        out.precision /= count;
        out.recall /= count;
        out.f1 /= count;
        return out;
    };
    mean.r1 = average([](const CaseScores& s) -> const RougeScore& { return s.r1; }, 1);
    mean.r2 = average([](const CaseScores& s) -> const RougeScore& { return s.r2; }, 2);
    mean.r4 = average([](const CaseScores& s) -> const RougeScore& { return s.r4; }, 4);
    return mean;
}

}  // namespace

RougeScore rouge_n(std::string_view candidate, std::string_view reference, int n,
                   const RougeOptions& options) {
    RougeScore score;
    score.n = n;
    auto cand = ngram_counts(rouge_tokens(candidate, options), n);
    auto ref = ngram_counts(rouge_tokens(reference, options), n);

    std::size_t cand_total = 0, ref_total = 0, matches = 0;
    for (const auto& [_, c] : cand) cand_total += c;
    for (const auto& [_, c] : ref) ref_total += c;
    for (const auto& [gram, c] : cand) {
        auto it = ref.find(gram);
        if (it != ref.end()) matches += std::min(c, it->second);
    }
    if (cand_total > 0) score.precision = static_cast<double>(matches) / static_cast<double>(cand_total);
    if (ref_total > 0) score.recall = static_cast<double>(matches) / static_cast<double>(ref_total);
    if (score.precision + score.recall > 0.0)
        score.f1 = 2.0 * score.precision * score.recall / (score.precision + score.recall);
    return score;
}

EvaluationReport evaluate_corpus(const std::map<std::string, std::string>& summaries,
                                 const std::map<std::string, std::string>& references,
                                 const RougeOptions& options) {
    EvaluationReport report;
    for (const auto& [case_id, summary] : summaries) {
        auto it = references.find(case_id);
        if (it == references.end())
            throw MissingReferenceError("no reference summary for case " + case_id);
        CaseScores scores;
        scores.r1 = rouge_n(summary, it->second, 1, options);
        scores.r2 = rouge_n(summary, it->second, 2, options);
        scores.r4 = rouge_n(summary, it->second, 4, options);
        report.per_case[case_id] = scores;
    }
    if (!report.per_case.empty()) {
        std::vector<const CaseScores*> all;
        all.reserve(report.per_case.size());
        for (const auto& [_, scores] : report.per_case) all.push_back(&scores);
        report.aggregate = mean_scores(all);
    }
    return report;
}

std::map<std::string, CaseAttributes> load_attributes(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ConfigError("cannot open attributes file: " + file.string());
    std::map<std::string, CaseAttributes> attributes;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        bool blank = std::all_of(line.begin(), line.end(),
                                 [](char c) { return c == ' ' || c == '\t'; });
        if (blank) continue;
        std::stringstream ss(line);
        std::string case_id, domain, year;
        if (!std::getline(ss, case_id, ',') || !std::getline(ss, domain, ','))
            throw ConfigError("attributes line " + std::to_string(lineno) + " malformed");
        std::getline(ss, year, ',');
        auto strip = [](std::string& s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
        };
        strip(case_id);
        strip(domain);
        strip(year);
        CaseAttributes attrs;
        attrs.domain = domain;
        if (!year.empty()) {
            try {
                attrs.year = std::stoi(year);
            } catch (...) {
                throw ConfigError("attributes line " + std::to_string(lineno) + ": bad year");
            }
        }
        attributes[case_id] = attrs;
    }
    return attributes;
}

GroupedReport group_report(const EvaluationReport& report,
                           const std::map<std::string, CaseAttributes>& attributes) {
    GroupedReport grouped;
    std::map<std::string, std::vector<const CaseScores*>> by_domain, by_year;
    for (const auto& [case_id, scores] : report.per_case) {
        std::string domain = "unknown";
        std::string year = "unknown";
        auto it = attributes.find(case_id);
        if (it != attributes.end()) {
            if (!it->second.domain.empty()) domain = it->second.domain;
            if (it->second.year) year = std::to_string(*it->second.year);
        }
        by_domain[domain].push_back(&scores);
        by_year[year].push_back(&scores);
    }
    for (const auto& [domain, members] : by_domain) {
        grouped.by_domain[domain] = mean_scores(members);
        grouped.domain_counts[domain] = members.size();
    }
    for (const auto& [year, members] : by_year) {
        grouped.by_year[year] = mean_scores(members);
        grouped.year_counts[year] = members.size();
    }
    return grouped;
}

}  // namespace courtsum
