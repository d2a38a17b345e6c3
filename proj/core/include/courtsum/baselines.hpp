#pragma once

#include <optional>
#include <string>
#include <vector>

#include "courtsum/corpus.hpp"

namespace courtsum {

enum class LengthPolicyKind {
    WordRatio,        // ceil(ratio x judgement words)
    SentenceRatio,    // ceil(ratio x judgement sentences)
    MeanWords,        // corpus mean headnote words
    MeanSentences,    // corpus mean headnote sentences
    MedianWords,
    MedianSentences,
};

struct LengthPolicy {
    LengthPolicyKind kind = LengthPolicyKind::MeanWords;
    double value = 0.0;  // the ratio for the two ratio kinds; ignored otherwise
};

std::optional<LengthPolicy> length_policy_from_name(std::string_view name);
std::string length_policy_name(const LengthPolicy& policy);

struct LengthBudget {
    enum class Unit { Words, Sentences };
    Unit unit = Unit::Words;
    std::size_t amount = 0;
};

LengthBudget length_budget(const LengthPolicy& policy, const AnnotatedCase& annotated,
                           const CorpusStats& stats);

struct Summary {
    std::vector<int> sentence_indices;  // strictly increasing
    std::string text;                   // sentences joined with single spaces

    bool operator==(const Summary&) const = default;
};

/// Greedily takes sentences in descending score order (ties to the lower
/// index) until the budget is met, then restores document order. Word
/// budgets admit the last sentence whole.
Summary select_top_scores(const std::vector<double>& scores,
                          const std::vector<std::string>& sentences, const LengthBudget& budget);

struct LexRankConfig {
    double edge_threshold = 0.1;
    double damping = 0.15;      // teleport probability
    double tolerance = 1e-6;    // L1 stopping rule for power iteration
    std::size_t max_iterations = 10000;
};

/// Stationary distribution of the damped random walk over the thresholded
/// TF-IDF cosine graph. Scores sum to 1.
std::vector<double> lexrank_scores(const std::vector<std::string>& sentences,
                                   const LexRankConfig& config = {});
Summary lexrank(const std::vector<std::string>& sentences, const LengthBudget& budget,
                const LexRankConfig& config = {});

struct LsaConfig {
    int topics = 3;  // k = min(topics, rank)
};

/// Singular-value-weighted length of each sentence's row in the top-k right
/// singular vectors of the term x sentence TF-IDF matrix.
std::vector<double> lsa_scores(const std::vector<std::string>& sentences,
                               const LsaConfig& config = {});
Summary lsa_summary(const std::vector<std::string>& sentences, const LengthBudget& budget,
                    const LsaConfig& config = {});

/// KL(summary || document) over add-1-smoothed unigram distributions on the
/// document vocabulary, for a candidate summary extended by one sentence.
/// Exposed so tests can cross-check the greedy steps.
double kl_candidate_divergence(const std::vector<std::vector<std::string>>& sentence_tokens,
                               const std::vector<int>& selected, int candidate);

Summary greedy_kl(const std::vector<std::string>& sentences, const LengthBudget& budget);

struct SumBasicStep {
    std::string word;  // highest-probability word that drove the pick
    int sentence = 0;
};

Summary sumbasic(const std::vector<std::string>& sentences, const LengthBudget& budget,
                 std::vector<SumBasicStep>* trace = nullptr);

}  // namespace courtsum
