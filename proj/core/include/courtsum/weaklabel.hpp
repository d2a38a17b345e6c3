#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "courtsum/corpus.hpp"

namespace courtsum {

/// Term-id -> weight, sorted by id, zero entries never stored.
struct SparseVector {
    std::vector<std::pair<int, double>> weights;

    bool operator==(const SparseVector&) const = default;
};

struct TfidfOptions {
    bool remove_stopwords = false;  // off by default
};

/// Per-case TF-IDF over the pooled sentence list: tf is the raw in-sentence
/// count, idf = ln((1+N)/(1+df)) + 1 with N the pooled sentence count.
/// Term ids are assigned by lexicographic rank over the pooled vocabulary.
std::vector<SparseVector> build_tfidf(const std::vector<std::string>& sentences,
                                      const TfidfOptions& options = {});

/// Standard cosine similarity; 0 when either vector is zero.
double cosine(const SparseVector& u, const SparseVector& v);

struct SimilarityMatrix {
    std::size_t rows = 0;  // judgement sentences
    std::size_t cols = 0;  // headnote sentences
    std::vector<double> values;

    double at(std::size_t i, std::size_t j) const { return values[i * cols + j]; }
};

/// Judgement x headnote cosine matrix under the case's pooled TF-IDF.
/// An empty headnote yields a zero-column matrix.
SimilarityMatrix similarity_matrix(const AnnotatedCase& annotated,
                                   const TfidfOptions& options = {});

/// Sets relevance_score to each judgement sentence's row maximum and
/// pseudo_relevant to score > threshold (strict). Headnote sentences are
/// never labeled. Idempotent.
AnnotatedCase label_pseudo_relevance(AnnotatedCase annotated, double threshold,
                                     const TfidfOptions& options = {});

struct ManualLabel {
    std::string case_id;
    int sentence_index = 0;
    bool relevant = false;
};

/// `case_id, sentence_index, label(0|1)` per line.
std::vector<ManualLabel> load_manual_labels(const std::filesystem::path& file);

struct ThresholdCalibration {
    std::vector<double> grid;
    std::vector<double> correlations;
    double best_threshold = 0.0;  // argmax correlation, ties to the smaller threshold
};

inline std::vector<double> default_calibration_grid() { return {0.20, 0.25, 0.30, 0.35}; }

/// Pearson correlation between pooled pseudo labels and manual labels at
/// each grid threshold. Constant manual labels make the correlation
/// undefined and raise DegenerateLabelsError; a constant pseudo column at
/// some threshold scores 0 at that point.
ThresholdCalibration calibrate_threshold(std::span<const AnnotatedCase> cases,
                                         const std::vector<ManualLabel>& labels,
                                         const std::vector<double>& grid,
                                         const TfidfOptions& options = {});

}  // namespace courtsum
