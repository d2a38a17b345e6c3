#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "courtsum/baselines.hpp"
#include "courtsum/corpus.hpp"

namespace courtsum {

/// Frequency-capped vocabulary with reserved padding and unknown ids.
/// Term ids start at 2 and are dense; build from the training split only.
struct Vocabulary {
    static constexpr int padding_id = 0;
    static constexpr int unknown_id = 1;
    static constexpr int first_term_id = 2;

    std::map<std::string, int> term_to_id;
    std::size_t cap = 10000;

    int id_for(const std::string& term) const {
        auto it = term_to_id.find(term);
        return it == term_to_id.end() ? unknown_id : it->second;
    }
    /// Total id count including the two reserved ids.
    std::size_t id_count() const { return term_to_id.size() + 2; }

    void save(const std::filesystem::path& file) const;  // term<TAB>id lines
    static Vocabulary load(const std::filesystem::path& file);
};

/// Top-`cap` whitespace terms by corpus frequency, ties broken
/// lexicographically.
Vocabulary build_vocab(const std::vector<std::string>& sentences, std::size_t cap = 10000);

/// Whitespace tokens mapped to ids, truncated or right-padded to max_len.
std::vector<int> encode_sentence(std::string_view sentence, const Vocabulary& vocab,
                                 std::size_t max_len = 150);

struct ScorerConfig {
    std::size_t vocab_size = 10000;
    std::size_t max_sentence_length = 150;
    std::size_t embedding_dim = 150;
    std::size_t hidden_dim = 128;
    std::size_t layers = 2;
    double dropout = 0.3;
    std::size_t batch_size = 32;
    double positive_class_weight = 4.0;
    std::size_t epochs = 10;        // unstated upstream; plain SGD default
    double learning_rate = 0.01;
    std::uint64_t seed = 42;

    bool operator==(const ScorerConfig&) const = default;
};

struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;  // row-major

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    bool operator==(const Matrix&) const = default;
};

/// One direction of one recurrent layer; gates stacked [input, forget,
/// cell, output], each hidden_dim rows.
struct LstmParams {
    Matrix w_input;             // 4H x D_in
    Matrix w_recurrent;         // 4H x H
    std::vector<double> bias;   // 4H

    bool operator==(const LstmParams&) const = default;
};

struct ScorerModel {
    ScorerConfig config;
    Matrix embeddings;  // (vocab_size + 2) x embedding_dim
    std::vector<LstmParams> forward_layers;
    std::vector<LstmParams> backward_layers;
    Matrix output_weight;              // 2 x 2H; row 1 is the summary-worthy class
    std::vector<double> output_bias;   // 2
    std::vector<double> training_log;  // per-epoch mean loss

    bool operator==(const ScorerModel&) const = default;
};

/// Same shapes as the model parameters.
struct ScorerGradients {
    Matrix embeddings;
    std::vector<LstmParams> forward_layers;
    std::vector<LstmParams> backward_layers;
    Matrix output_weight;
    std::vector<double> output_bias;
};

struct LabeledSentence {
    std::vector<int> ids;
    bool positive = false;
};

/// Xavier-normal parameters drawn from a Box-Muller generator seeded with
/// config.seed (bit-reproducible across platforms).
ScorerModel init_model(const ScorerConfig& config);

/// Mean class-weighted cross-entropy over the batch; positive examples
/// weigh config.positive_class_weight. Fills `grads` with the analytic
/// gradients when non-null. Dropout only applies when a training RNG is
/// passed in.
double batch_loss(const ScorerModel& model, std::span<const LabeledSentence> batch,
                  ScorerGradients* grads, std::mt19937_64* dropout_rng = nullptr);

/// Mini-batch SGD on class-weighted cross-entropy, negatives undersampled
/// 1:1 each epoch with the run seed. Deterministic given config + data.
ScorerModel train(const ScorerConfig& config, const std::vector<LabeledSentence>& data);

/// Softmax probability of the summary-worthy class; dropout disabled.
double score(const ScorerModel& model, const std::vector<int>& ids);

/// Sentences with score strictly above the threshold, in document order.
Summary select_by_threshold(const std::vector<double>& scores,
                            const std::vector<std::string>& sentence_texts, double threshold);

inline std::vector<double> default_sweep_grid() {
    std::vector<double> grid;
    for (int k = 0; k < 8; ++k) grid.push_back(0.5 + 0.05 * k);
    return grid;
}

struct SweepResult {
    double best_threshold = 0.0;  // argmax mean ROUGE-1 F, ties to the lower threshold
    std::vector<double> grid;
    std::vector<double> rouge1_f;
};

SweepResult threshold_sweep(const ScorerModel& model, const Vocabulary& vocab,
                            std::span<const AnnotatedCase> validation_cases,
                            const std::vector<double>& grid);

/// Text container: config lines plus hexfloat tensors with shape headers.
void save_checkpoint(const ScorerModel& model, const std::filesystem::path& file);
ScorerModel load_checkpoint(const std::filesystem::path& file);

}  // namespace courtsum
