#include "courtsum/weaklabel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

#include "courtsum/errors.hpp"
#include "courtsum/tokens.hpp"

namespace courtsum {

namespace {

const std::unordered_set<std::string>& stopwords() {
    static const std::unordered_set<std::string> words = {
        "a",    "an",  "and", "are", "as",   "at",   "be",   "by",   "for", "from",
        "has",  "he",  "in",  "is",  "it",   "its",  "of",   "on",   "or",  "that",
        "the",  "to",  "was", "were", "will", "with", "this", "had",  "not", "but",
        "his",  "her", "they", "their", "been", "have", "which", "who", "shall"};
    return words;
}

std::vector<std::vector<std::string>> tokenize_all(const std::vector<std::string>& sentences,
                                                   const TfidfOptions& options) {
    std::vector<std::vector<std::string>> tokens;
    tokens.reserve(sentences.size());
    for (const std::string& sentence : sentences) {
        std::vector<std::string> ts = content_tokens(sentence);
        if (options.remove_stopwords) {
            ts.erase(std::remove_if(ts.begin(), ts.end(),
                                    [](const std::string& t) { return stopwords().count(t) > 0; }),
                     ts.end());
        }
        tokens.push_back(std::move(ts));
    }
    return tokens;
}

}  // namespace

std::vector<SparseVector> build_tfidf(const std::vector<std::string>& sentences,
                                      const TfidfOptions& options) {
    std::vector<std::vector<std::string>> tokens = tokenize_all(sentences, options);

    std::map<std::string, int> term_ids;  // lexicographic rank
    std::map<std::string, std::size_t> doc_frequency;
    for (const auto& sentence_tokens : tokens) {
        std::unordered_set<std::string> distinct(sentence_tokens.begin(), sentence_tokens.end());
        for (const std::string& term : distinct) ++doc_frequency[term];
    }
    double pooled = static_cast<double>(sentences.size());
    std::vector<double> idf_by_id;
    idf_by_id.reserve(doc_frequency.size());
    int next_id = 0;
    for (const auto& [term, df] : doc_frequency) {
        term_ids[term] = next_id++;
        idf_by_id.push_back(std::log((1.0 + pooled) / (1.0 + static_cast<double>(df))) + 1.0);
    }

    std::vector<SparseVector> vectors;
    vectors.reserve(sentences.size());
    for (const auto& sentence_tokens : tokens) {
        std::map<int, double> counts;
        for (const std::string& term : sentence_tokens) counts[term_ids[term]] += 1.0;
        SparseVector v;
        v.weights.reserve(counts.size());
        for (const auto& [id, count] : counts)
            v.weights.emplace_back(id, count * idf_by_id[static_cast<std::size_t>(id)]);
        vectors.push_back(std::move(v));
    }
    return vectors;
}

double cosine(const SparseVector& u, const SparseVector& v) {
    double dot = 0.0, nu = 0.0, nv = 0.0;
    for (const auto& [_, w] : u.weights) nu += w * w;
    for (const auto& [_, w] : v.weights) nv += w * w;
    if (nu == 0.0 || nv == 0.0) return 0.0;
    std::size_t i = 0, j = 0;
    while (i < u.weights.size() && j < v.weights.size()) {
        if (u.weights[i].first < v.weights[j].first) ++i;
        else if (u.weights[i].first > v.weights[j].first) ++j;
        else dot += u.weights[i++].second * v.weights[j++].second;
    }
    double value = dot / (std::sqrt(nu) * std::sqrt(nv));
    return std::clamp(value, 0.0, 1.0);
}

SimilarityMatrix similarity_matrix(const AnnotatedCase& annotated, const TfidfOptions& options) {
    std::vector<std::string> pooled;
    pooled.reserve(annotated.judgement.sentences.size() + annotated.headnote.sentences.size());
    for (const Sentence& s : annotated.judgement.sentences) pooled.push_back(s.text);
    for (const Sentence& s : annotated.headnote.sentences) pooled.push_back(s.text);

    std::vector<SparseVector> vectors = build_tfidf(pooled, options);

    SimilarityMatrix m;
    m.rows = annotated.judgement.sentences.size();
    m.cols = annotated.headnote.sentences.size();
    m.values.assign(m.rows * m.cols, 0.0);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            m.values[i * m.cols + j] = cosine(vectors[i], vectors[m.rows + j]);
    return m;
}

AnnotatedCase label_pseudo_relevance(AnnotatedCase annotated, double threshold,
                                     const TfidfOptions& options) {
    SimilarityMatrix m = similarity_matrix(annotated, options);
    for (std::size_t i = 0; i < annotated.judgement.sentences.size(); ++i) {
        double row_max = 0.0;
        for (std::size_t j = 0; j < m.cols; ++j) row_max = std::max(row_max, m.at(i, j));
        Sentence& s = annotated.judgement.sentences[i];
        s.relevance_score = row_max;
        s.pseudo_relevant = row_max > threshold;
    }
    return annotated;
}

std::vector<ManualLabel> load_manual_labels(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ConfigError("cannot open manual labels file: " + file.string());
    std::vector<ManualLabel> labels;
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
        std::string case_id, index_s, label_s;
        if (!std::getline(ss, case_id, ',') || !std::getline(ss, index_s, ',') ||
            !std::getline(ss, label_s, ','))
            throw ConfigError("manual labels line " + std::to_string(lineno) + " malformed");
        auto strip = [](std::string& s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
        };
        strip(case_id);
        strip(index_s);
        strip(label_s);
        if (label_s != "0" && label_s != "1")
            throw ConfigError("manual labels line " + std::to_string(lineno) + ": label must be 0 or 1");
        labels.push_back({case_id, std::stoi(index_s), label_s == "1"});
    }
    return labels;
}

ThresholdCalibration calibrate_threshold(std::span<const AnnotatedCase> cases,
                                         const std::vector<ManualLabel>& labels,
                                         const std::vector<double>& grid,
                                         const TfidfOptions& options) {
    if (grid.empty()) throw EmptyGridError("calibration grid is empty");

    // row maxima per labeled sentence, pooled over all cases
    std::map<std::string, std::vector<double>> maxima;
    for (const AnnotatedCase& annotated : cases) {
        SimilarityMatrix m = similarity_matrix(annotated, options);
        std::vector<double> row(m.rows, 0.0);
        for (std::size_t i = 0; i < m.rows; ++i)
            for (std::size_t j = 0; j < m.cols; ++j) row[i] = std::max(row[i], m.at(i, j));
        maxima[annotated.case_id] = std::move(row);
    }

    std::vector<double> scores;
    std::vector<int> manual;
    for (const ManualLabel& label : labels) {
        auto it = maxima.find(label.case_id);
        if (it == maxima.end()) continue;
        if (label.sentence_index < 0 ||
            static_cast<std::size_t>(label.sentence_index) >= it->second.size())
            throw SchemaViolationError("manual label sentence index out of range for case " +
                                       label.case_id);
        scores.push_back(it->second[static_cast<std::size_t>(label.sentence_index)]);
        manual.push_back(label.relevant ? 1 : 0);
    }
    if (scores.empty()) throw DegenerateLabelsError("no manual labels match the given cases");

    long long positives = 0;
    for (int y : manual) positives += y;
    if (positives == 0 || positives == static_cast<long long>(manual.size()))
        throw DegenerateLabelsError("manual labels are all identical; correlation undefined");

    ThresholdCalibration calibration;
    calibration.grid = grid;
    double n = static_cast<double>(manual.size());
    for (double t : grid) {
        long long sum_x = 0, sum_y = positives, sum_xy = 0;
        for (std::size_t i = 0; i < scores.size(); ++i) {
            int x = scores[i] > t ? 1 : 0;
            sum_x += x;
            sum_xy += x * manual[i];
        }
        double sx = static_cast<double>(sum_x);
        double sy = static_cast<double>(sum_y);
        double sxy = static_cast<double>(sum_xy);
        // binary labels: sum of squares equals the sum
        double denom = std::sqrt((n * sx - sx * sx) * (n * sy - sy * sy));
        calibration.correlations.push_back(denom == 0.0 ? 0.0 : (n * sxy - sx * sy) / denom);
    }

    double best = calibration.correlations.front();
    double best_threshold = grid.front();
    for (std::size_t i = 1; i < grid.size(); ++i) {
        bool better = calibration.correlations[i] > best ||
                      (calibration.correlations[i] == best && grid[i] < best_threshold);
        if (better) {
            best = calibration.correlations[i];
            best_threshold = grid[i];
        }
    }
    calibration.best_threshold = best_threshold;
    return calibration;
}

}  // namespace courtsum
