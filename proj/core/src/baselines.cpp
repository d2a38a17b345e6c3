#include "courtsum/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "courtsum/tokens.hpp"
#include "courtsum/weaklabel.hpp"

namespace courtsum {

std::optional<LengthPolicy> length_policy_from_name(std::string_view name) {
    std::string key(name);
    double value = 0.0;
    bool has_value = false;
    auto sep = key.find_first_of(":=");
    if (sep != std::string::npos) {
        try {
            value = std::stod(key.substr(sep + 1));
            has_value = true;
        } catch (...) {
            return std::nullopt;
        }
        key.erase(sep);
    }
    // default ratios are the corpus-level headnote/judgement ratios
    if (key == "word-ratio") return LengthPolicy{LengthPolicyKind::WordRatio, has_value ? value : 0.234};
    if (key == "sentence-ratio")
        return LengthPolicy{LengthPolicyKind::SentenceRatio, has_value ? value : 0.237};
    if (key == "mean-words") return LengthPolicy{LengthPolicyKind::MeanWords, 0.0};
    if (key == "mean-sentences") return LengthPolicy{LengthPolicyKind::MeanSentences, 0.0};
    if (key == "median-words") return LengthPolicy{LengthPolicyKind::MedianWords, 0.0};
    if (key == "median-sentences") return LengthPolicy{LengthPolicyKind::MedianSentences, 0.0};
    return std::nullopt;
}

std::string length_policy_name(const LengthPolicy& policy) {
    switch (policy.kind) {
        case LengthPolicyKind::WordRatio: return "word-ratio:" + std::to_string(policy.value);
        case LengthPolicyKind::SentenceRatio:
            return "sentence-ratio:" + std::to_string(policy.value);
        case LengthPolicyKind::MeanWords: return "mean-words";
        case LengthPolicyKind::MeanSentences: return "mean-sentences";
        case LengthPolicyKind::MedianWords: return "median-words";
        case LengthPolicyKind::MedianSentences: return "median-sentences";
    }
    return "mean-words";
}

LengthBudget length_budget(const LengthPolicy& policy, const AnnotatedCase& annotated,
                           const CorpusStats& stats) {
    using Unit = LengthBudget::Unit;
    switch (policy.kind) {
        case LengthPolicyKind::WordRatio: {
            double words = static_cast<double>(count_words(annotated.judgement.text));
            return {Unit::Words, static_cast<std::size_t>(std::ceil(policy.value * words))};
        }
        case LengthPolicyKind::SentenceRatio: {
            double sentences = static_cast<double>(annotated.judgement.sentences.size());
            return {Unit::Sentences, static_cast<std::size_t>(std::ceil(policy.value * sentences))};
        }
        case LengthPolicyKind::MeanWords:
            return {Unit::Words, static_cast<std::size_t>(std::llround(stats.words_headnote.mean))};
        case LengthPolicyKind::MeanSentences:
            return {Unit::Sentences,
                    static_cast<std::size_t>(std::llround(stats.sents_headnote.mean))};
        case LengthPolicyKind::MedianWords:
            return {Unit::Words, static_cast<std::size_t>(stats.words_headnote.median)};
        case LengthPolicyKind::MedianSentences:
            return {Unit::Sentences, static_cast<std::size_t>(stats.sents_headnote.median)};
    }
    return {Unit::Words, 0};
}

namespace {

Summary assemble(std::vector<int> indices, const std::vector<std::string>& sentences) {
    std::sort(indices.begin(), indices.end());
    Summary summary;
    summary.sentence_indices = std::move(indices);
    for (int idx : summary.sentence_indices) {
        if (!summary.text.empty()) summary.text.push_back(' ');
        summary.text += sentences[static_cast<std::size_t>(idx)];
    }
    return summary;
}

}  // namespace

Summary select_top_scores(const std::vector<double>& scores,
                          const std::vector<std::string>& sentences, const LengthBudget& budget) {
    std::vector<int> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return scores[static_cast<std::size_t>(a)] > scores[static_cast<std::size_t>(b)];
    });

    std::vector<int> chosen;
    if (budget.unit == LengthBudget::Unit::Sentences) {
        std::size_t take = std::min(budget.amount, order.size());
        chosen.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take));
    } else {
        std::size_t words = 0;
        for (int idx : order) {
            if (words >= budget.amount) break;
            chosen.push_back(idx);
            words += count_words(sentences[static_cast<std::size_t>(idx)]);
        }
    }
    return assemble(std::move(chosen), sentences);
}

std::vector<double> lexrank_scores(const std::vector<std::string>& sentences,
                                   const LexRankConfig& config) {
    std::size_t n = sentences.size();
    if (n == 0) return {};
    if (n == 1) return {1.0};

    std::vector<SparseVector> vectors = build_tfidf(sentences);
    std::vector<double> transition(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double row_sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double sim = cosine(vectors[i], vectors[j]);
            if (sim > config.edge_threshold) {
                transition[i * n + j] = sim;
                row_sum += sim;
            }
        }
        if (row_sum == 0.0) {
            for (std::size_t j = 0; j < n; ++j) transition[i * n + j] = 1.0 / static_cast<double>(n);
        } else {
            for (std::size_t j = 0; j < n; ++j) transition[i * n + j] /= row_sum;
        }
    }

    double uniform = 1.0 / static_cast<double>(n);
    std::vector<double> p(n, uniform), next(n, 0.0);
    for (std::size_t iter = 0; iter < config.max_iterations; ++iter) {
        for (std::size_t j = 0; j < n; ++j) {
            double mass = 0.0;
            for (std::size_t i = 0; i < n; ++i) mass += p[i] * transition[i * n + j];
            next[j] = config.damping * uniform + (1.0 - config.damping) * mass;
        }
        double diff = 0.0;
        for (std::size_t j = 0; j < n; ++j) diff += std::abs(next[j] - p[j]);
        p.swap(next);
        if (diff < config.tolerance) break;
    }
    return p;
}

Summary lexrank(const std::vector<std::string>& sentences, const LengthBudget& budget,
                const LexRankConfig& config) {
    return select_top_scores(lexrank_scores(sentences, config), sentences, budget);
}

std::vector<double> lsa_scores(const std::vector<std::string>& sentences,
                               const LsaConfig& config) {
    std::size_t n = sentences.size();
    if (n == 0) return {};

    std::vector<SparseVector> vectors = build_tfidf(sentences);
    int max_id = -1;
    for (const SparseVector& v : vectors)
        for (const auto& [id, _] : v.weights) max_id = std::max(max_id, id);
    if (max_id < 0) return std::vector<double>(n, 0.0);

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(max_id + 1, static_cast<Eigen::Index>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& [id, w] : vectors[j].weights)
            a(id, static_cast<Eigen::Index>(j)) = w;

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinV);
    const Eigen::VectorXd& sigma = svd.singularValues();
    const Eigen::MatrixXd& v = svd.matrixV();

    int rank = 0;
    double cutoff = sigma.size() > 0 ? sigma(0) * 1e-10 : 0.0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i)
        if (sigma(i) > cutoff) ++rank;
    int k = std::min(config.topics, rank);

    std::vector<double> scores(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double acc = 0.0;
        for (int i = 0; i < k; ++i) {
            double term = sigma(i) * v(static_cast<Eigen::Index>(j), i);
            acc += term * term;
        }
        scores[j] = std::sqrt(acc);
    }
    return scores;
}

Summary lsa_summary(const std::vector<std::string>& sentences, const LengthBudget& budget,
                    const LsaConfig& config) {
    return select_top_scores(lsa_scores(sentences, config), sentences, budget);
}

double kl_candidate_divergence(const std::vector<std::vector<std::string>>& sentence_tokens,
                               const std::vector<int>& selected, int candidate) {
    std::map<std::string, std::size_t> doc_counts;
    std::size_t doc_total = 0;
    for (const auto& tokens : sentence_tokens) {
        for (const std::string& t : tokens) {
            ++doc_counts[t];
            ++doc_total;
        }
    }
    std::map<std::string, std::size_t> summary_counts;
    std::size_t summary_total = 0;
    auto add_sentence = [&](int idx) {
        for (const std::string& t : sentence_tokens[static_cast<std::size_t>(idx)]) {
            ++summary_counts[t];
            ++summary_total;
        }
    };
    for (int idx : selected) add_sentence(idx);
    add_sentence(candidate);

    double vocab = static_cast<double>(doc_counts.size());
    double kl = 0.0;
    for (const auto& [term, doc_count] : doc_counts) {
        auto it = summary_counts.find(term);
        double sc = it == summary_counts.end() ? 0.0 : static_cast<double>(it->second);
        double p = (sc + 1.0) / (static_cast<double>(summary_total) + vocab);
        double q = (static_cast<double>(doc_count) + 1.0) / (static_cast<double>(doc_total) + vocab);
        kl += p * std::log(p / q);
    }
    return kl;
}

Summary greedy_kl(const std::vector<std::string>& sentences, const LengthBudget& budget) {
    std::size_t n = sentences.size();
    std::vector<std::vector<std::string>> tokens;
    tokens.reserve(n);
    for (const std::string& s : sentences) tokens.push_back(content_tokens(s));

    std::vector<int> selected;
    std::vector<bool> used(n, false);
    std::size_t words = 0;
    while (selected.size() < n) {
        if (budget.unit == LengthBudget::Unit::Sentences && selected.size() >= budget.amount) break;
        if (budget.unit == LengthBudget::Unit::Words && words >= budget.amount) break;
        int best = -1;
        double best_kl = 0.0;
        for (std::size_t cand = 0; cand < n; ++cand) {
            if (used[cand]) continue;
            double kl = kl_candidate_divergence(tokens, selected, static_cast<int>(cand));
            if (best < 0 || kl < best_kl) {
                best = static_cast<int>(cand);
                best_kl = kl;
            }
        }
        if (best < 0) break;
        used[static_cast<std::size_t>(best)] = true;
        selected.push_back(best);
        words += count_words(sentences[static_cast<std::size_t>(best)]);
    }
    return assemble(std::move(selected), sentences);
}

Summary sumbasic(const std::vector<std::string>& sentences, const LengthBudget& budget,
                 std::vector<SumBasicStep>* trace) {
    std::size_t n = sentences.size();
    std::vector<std::vector<std::string>> tokens;
    tokens.reserve(n);
    for (const std::string& s : sentences) tokens.push_back(content_tokens(s));

    std::map<std::string, double> prob;
    std::size_t total = 0;
    for (const auto& ts : tokens)
        for (const std::string& t : ts) {
            prob[t] += 1.0;
            ++total;
        }
    for (auto& [_, p] : prob) p /= static_cast<double>(total == 0 ? 1 : total);

    std::vector<int> selected;
    std::vector<bool> used(n, false);
    std::size_t words = 0;
    while (selected.size() < n) {
        if (budget.unit == LengthBudget::Unit::Sentences && selected.size() >= budget.amount) break;
        if (budget.unit == LengthBudget::Unit::Words && words >= budget.amount) break;

        // highest-probability word still present in an unpicked sentence;
        // ties go to the lexicographically smaller word
        std::string best_word;
        double best_p = -1.0;
        for (const auto& [word, p] : prob) {
            if (p <= best_p) continue;
            bool available = false;
            for (std::size_t i = 0; i < n && !available; ++i)
                if (!used[i] &&
                    std::find(tokens[i].begin(), tokens[i].end(), word) != tokens[i].end())
                    available = true;
            if (available) {
                best_word = word;
                best_p = p;
            }
        }
        if (best_p < 0.0) break;  // no unpicked sentence has any word left

        int best_sentence = -1;
        double best_avg = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i] || tokens[i].empty()) continue;
            if (std::find(tokens[i].begin(), tokens[i].end(), best_word) == tokens[i].end())
                continue;
            double avg = 0.0;
            for (const std::string& t : tokens[i]) avg += prob[t];
            avg /= static_cast<double>(tokens[i].size());
            if (best_sentence < 0 || avg > best_avg) {
                best_sentence = static_cast<int>(i);
                best_avg = avg;
            }
        }
        if (best_sentence < 0) break;

        used[static_cast<std::size_t>(best_sentence)] = true;
        selected.push_back(best_sentence);
        words += count_words(sentences[static_cast<std::size_t>(best_sentence)]);
        if (trace) trace->push_back({best_word, best_sentence});

        std::set<std::string> distinct(tokens[static_cast<std::size_t>(best_sentence)].begin(),
                                       tokens[static_cast<std::size_t>(best_sentence)].end());
        for (const std::string& w : distinct) prob[w] *= prob[w];
    }

    // word-less sentences can never be picked by the probability loop; pad
    // sentence budgets with the lowest remaining indices so they stay exact
    if (budget.unit == LengthBudget::Unit::Sentences) {
        for (std::size_t i = 0; i < n && selected.size() < std::min(budget.amount, n); ++i)
            if (!used[i]) {
                used[i] = true;
                selected.push_back(static_cast<int>(i));
            }
    }
    return assemble(std::move(selected), sentences);
}

}  // namespace courtsum
