#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "courtsum/metadata.hpp"
#include "courtsum/sentencizer.hpp"

namespace courtsum {

/// The three raw text files for one case, decoded as UTF-8 with invalid
/// bytes replaced. A case may legitimately have an empty headnote or info
/// section; the missing_* flags say whether the file itself was absent.
struct RawCaseBundle {
    std::string case_id;
    std::string judgement_text;
    std::string headnote_text;
    std::string info_text;
    bool headnote_missing = false;
    bool info_missing = false;
};

struct CaseSection {
    std::string text;
    std::vector<Sentence> sentences;

    bool operator==(const CaseSection&) const = default;
};

struct AnnotatedCase {
    std::string case_id;
    std::string case_name;
    std::optional<Date> judgement_date;
    std::vector<Citation> citations;
    std::vector<std::string> other_citations;
    std::vector<Act> acts;
    std::vector<Judge> judges;
    Parties parties;
    std::vector<Appearance> appearances;
    CaseSection judgement;
    CaseSection headnote;

    bool operator==(const AnnotatedCase&) const = default;
};

struct CorpusStats {
    struct Series {
        double mean = 0.0;
        std::uint64_t median = 0;  // lower-middle element for even counts
        std::uint64_t min = 0;
        std::uint64_t max = 0;

        bool operator==(const Series&) const = default;
    };
    Series sents_judgement;
    Series sents_headnote;
    Series words_judgement;
    Series words_headnote;
    std::size_t case_count = 0;
};

struct SplitAssignment {
    std::vector<std::string> train_ids;
    std::vector<std::string> validation_ids;
    std::vector<std::string> test_ids;
    std::uint64_t seed = 0;
};

/// Reads `<root>/<case_id>/{judgement,headnote,info}.txt`. A missing
/// judgement file is a hard error; missing headnote/info files yield empty
/// strings with the corresponding flag set.
RawCaseBundle load_bundle(const std::filesystem::path& root, const std::string& case_id);

/// Case ids found under `root` (directories containing judgement.txt),
/// sorted.
std::vector<std::string> list_case_ids(const std::filesystem::path& root);

/// Seeded Fisher-Yates shuffle (mt19937_64, modulo draw) over the sorted id
/// list; first `train_count` ids train, the remainder splits as evenly as
/// possible with validation taking the odd one. Output lists are sorted.
SplitAssignment split_corpus(std::vector<std::string> case_ids, std::size_t train_count,
                             std::uint64_t seed);

CorpusStats corpus_stats(std::span<const AnnotatedCase> cases);

nlohmann::json case_to_json(const AnnotatedCase& annotated);
AnnotatedCase case_from_json(const nlohmann::json& j);

void write_annotated(const AnnotatedCase& annotated, const std::filesystem::path& path);
AnnotatedCase read_annotated(const std::filesystem::path& path);

void write_split(const SplitAssignment& split, const std::filesystem::path& path);
SplitAssignment read_split(const std::filesystem::path& path);

/// Replaces bytes that do not form valid UTF-8 with U+FFFD.
std::string sanitize_utf8(std::string_view bytes);

}  // namespace courtsum
