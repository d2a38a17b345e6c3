#include "courtsum/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "courtsum/errors.hpp"
#include "courtsum/tokens.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace courtsum {

std::string sanitize_utf8(std::string_view bytes) {
    static constexpr std::string_view kReplacement = "\xEF\xBF\xBD";  // U+FFFD
    std::string out;
    out.reserve(bytes.size());
    std::size_t i = 0;
    while (i < bytes.size()) {
        unsigned char c = static_cast<unsigned char>(bytes[i]);
        std::size_t len = 0;
        if (c < 0x80) len = 1;
        else if ((c & 0xE0) == 0xC0 && c >= 0xC2) len = 2;
        else if ((c & 0xF0) == 0xE0) len = 3;
        else if ((c & 0xF8) == 0xF0 && c <= 0xF4) len = 4;

        bool ok = len > 0 && i + len <= bytes.size();
        for (std::size_t k = 1; ok && k < len; ++k)
            ok = (static_cast<unsigned char>(bytes[i + k]) & 0xC0) == 0x80;
        // reject overlong / out-of-range encodings
        if (ok && len == 3) {
            unsigned char c1 = static_cast<unsigned char>(bytes[i + 1]);
            if ((c == 0xE0 && c1 < 0xA0) || (c == 0xED && c1 > 0x9F)) ok = false;
        }
        if (ok && len == 4) {
            unsigned char c1 = static_cast<unsigned char>(bytes[i + 1]);
            if ((c == 0xF0 && c1 < 0x90) || (c == 0xF4 && c1 > 0x8F)) ok = false;
        }

        if (ok) {
            out.append(bytes.substr(i, len));
            i += len;
        } else {
            out.append(kReplacement);
            ++i;
        }
    }
    return out;
}

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return sanitize_utf8(ss.str());
}

}  // namespace

RawCaseBundle load_bundle(const fs::path& root, const std::string& case_id) {
    fs::path dir = root / case_id;
    fs::path judgement = dir / "judgement.txt";
    if (!fs::exists(judgement))
        throw MissingFileError("missing judgement file: " + judgement.string());

    RawCaseBundle bundle;
    bundle.case_id = case_id;
    bundle.judgement_text = read_file(judgement);

    fs::path headnote = dir / "headnote.txt";
    if (fs::exists(headnote)) bundle.headnote_text = read_file(headnote);
    else bundle.headnote_missing = true;

    fs::path info = dir / "info.txt";
    if (fs::exists(info)) bundle.info_text = read_file(info);
    else bundle.info_missing = true;

    return bundle;
}

std::vector<std::string> list_case_ids(const fs::path& root) {
    std::vector<std::string> ids;
    if (!fs::exists(root)) return ids;
    for (const auto& entry : fs::directory_iterator(root)) {
        if (!entry.is_directory()) continue;
        if (fs::exists(entry.path() / "judgement.txt")) ids.push_back(entry.path().filename().string());
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

SplitAssignment split_corpus(std::vector<std::string> case_ids, std::size_t train_count,
                             std::uint64_t seed) {
    if (train_count > case_ids.size())
        throw TrainCountTooLargeError("train_count " + std::to_string(train_count) +
                                      " exceeds corpus size " + std::to_string(case_ids.size()));
    std::sort(case_ids.begin(), case_ids.end());

    // Fisher-Yates with a modulo draw: reproducible across standard
    // libraries, unlike std::shuffle.
    std::mt19937_64 rng(seed);
    for (std::size_t i = case_ids.size(); i > 1; --i)
        std::swap(case_ids[i - 1], case_ids[rng() % i]);

    SplitAssignment split;
    split.seed = seed;
    std::size_t remainder = case_ids.size() - train_count;
    std::size_t validation_count = (remainder + 1) / 2;
    split.train_ids.assign(case_ids.begin(), case_ids.begin() + static_cast<std::ptrdiff_t>(train_count));
    split.validation_ids.assign(case_ids.begin() + static_cast<std::ptrdiff_t>(train_count),
                                case_ids.begin() + static_cast<std::ptrdiff_t>(train_count + validation_count));
    split.test_ids.assign(case_ids.begin() + static_cast<std::ptrdiff_t>(train_count + validation_count),
                          case_ids.end());
    std::sort(split.train_ids.begin(), split.train_ids.end());
    std::sort(split.validation_ids.begin(), split.validation_ids.end());
    std::sort(split.test_ids.begin(), split.test_ids.end());
    return split;
}

namespace {

CorpusStats::Series make_series(std::vector<std::uint64_t> values) {
    CorpusStats::Series series;
    std::sort(values.begin(), values.end());
    std::uint64_t total = 0;
    for (std::uint64_t v : values) total += v;
    series.mean = static_cast<double>(total) / static_cast<double>(values.size());
    series.median = values[(values.size() - 1) / 2];
    series.min = values.front();
    series.max = values.back();
    return series;
}

}  // namespace

CorpusStats corpus_stats(std::span<const AnnotatedCase> cases) {
    if (cases.empty()) throw EmptyCorpusError("corpus_stats over empty case list");
    std::vector<std::uint64_t> js, hs, jw, hw;
    js.reserve(cases.size());
    hs.reserve(cases.size());
    jw.reserve(cases.size());
    hw.reserve(cases.size());
    for (const AnnotatedCase& c : cases) {
        js.push_back(c.judgement.sentences.size());
        hs.push_back(c.headnote.sentences.size());
        jw.push_back(count_words(c.judgement.text));
        hw.push_back(count_words(c.headnote.text));
    }
    CorpusStats stats;
    stats.case_count = cases.size();
    stats.sents_judgement = make_series(std::move(js));
    stats.sents_headnote = make_series(std::move(hs));
    stats.words_judgement = make_series(std::move(jw));
    stats.words_headnote = make_series(std::move(hw));
    return stats;
}

namespace {

json sentence_to_json(const Sentence& s) {
    json j;
    j["index"] = s.index;
    j["text"] = s.text;
    j["pseudo_relevant"] = s.pseudo_relevant ? json(*s.pseudo_relevant) : json(nullptr);
    j["relevance_score"] = s.relevance_score ? json(*s.relevance_score) : json(nullptr);
    j["rhetorical_role"] = s.rhetorical_role ? json(*s.rhetorical_role) : json(nullptr);
    return j;
}

Sentence sentence_from_json(const json& j, int position) {
    if (!j.is_object()) throw SchemaViolationError("sentence is not an object");
    Sentence s;
    if (!j.contains("index") || !j["index"].is_number_integer())
        throw SchemaViolationError("sentence missing integer 'index'");
    s.index = j["index"].get<int>();
    if (s.index != position)
        throw SchemaViolationError("sentence index " + std::to_string(s.index) +
                                   " does not match position " + std::to_string(position));
    if (!j.contains("text") || !j["text"].is_string())
        throw SchemaViolationError("sentence missing string 'text'");
    s.text = j["text"].get<std::string>();
    if (j.contains("pseudo_relevant") && !j["pseudo_relevant"].is_null()) {
        if (!j["pseudo_relevant"].is_boolean())
            throw SchemaViolationError("pseudo_relevant must be bool or null");
        s.pseudo_relevant = j["pseudo_relevant"].get<bool>();
    }
    if (j.contains("relevance_score") && !j["relevance_score"].is_null()) {
        if (!j["relevance_score"].is_number())
            throw SchemaViolationError("relevance_score must be number or null");
        double score = j["relevance_score"].get<double>();
        if (score < 0.0 || score > 1.0)
            throw SchemaViolationError("relevance_score outside [0,1]");
        s.relevance_score = score;
    }
    if (j.contains("rhetorical_role") && !j["rhetorical_role"].is_null()) {
        if (!j["rhetorical_role"].is_string())
            throw SchemaViolationError("rhetorical_role must be string or null");
        s.rhetorical_role = j["rhetorical_role"].get<std::string>();
    }
    return s;
}

json section_to_json(const CaseSection& section) {
    json j;
    j["text"] = section.text;
    json sentences = json::array();
    for (const Sentence& s : section.sentences) sentences.push_back(sentence_to_json(s));
    j["sentences"] = std::move(sentences);
    return j;
}

CaseSection section_from_json(const json& j, const char* which) {
    if (!j.is_object() || !j.contains("text") || !j["text"].is_string() ||
        !j.contains("sentences") || !j["sentences"].is_array())
        throw SchemaViolationError(std::string(which) + " section malformed");
    CaseSection section;
    section.text = j["text"].get<std::string>();
    int position = 0;
    for (const json& sj : j["sentences"]) section.sentences.push_back(sentence_from_json(sj, position++));
    return section;
}

}  // namespace

json case_to_json(const AnnotatedCase& annotated) {
    json j;
    j["case_id"] = annotated.case_id;
    j["case_name"] = annotated.case_name;
    j["judgement_date"] =
        annotated.judgement_date ? json(annotated.judgement_date->iso()) : json(nullptr);

    json citations = json::array();
    for (const Citation& c : annotated.citations) {
        json cj;
        cj["source"] = std::string(citation_source_name(c.source));
        cj["raw"] = c.raw;
        cj["year"] = c.year;
        cj["volume"] = c.volume ? json(*c.volume) : json(nullptr);
        cj["page"] = c.page;
        citations.push_back(std::move(cj));
    }
    j["citations"] = std::move(citations);
    j["other_citations"] = annotated.other_citations;

    json acts = json::array();
    for (const Act& a : annotated.acts) acts.push_back({{"act_id", a.act_id}, {"text", a.text}});
    j["acts"] = std::move(acts);

    json judges = json::array();
    for (const Judge& judge : annotated.judges)
        judges.push_back({{"name", judge.name},
                          {"is_chief", judge.is_chief},
                          {"delivered", judge.delivered}});
    j["judges"] = std::move(judges);

    j["parties"] = {{"plaintiffs", annotated.parties.plaintiffs},
                    {"defendants", annotated.parties.defendants},
                    {"intervenors", annotated.parties.intervenors}};

    json appearances = json::array();
    for (const Appearance& a : annotated.appearances)
        appearances.push_back(json::array({a.attorney, a.party, std::string(side_name(a.side))}));
    j["appearances"] = std::move(appearances);

    j["judgement"] = section_to_json(annotated.judgement);
    j["headnote"] = section_to_json(annotated.headnote);
    return j;
}

AnnotatedCase case_from_json(const json& j) {
    if (!j.is_object()) throw SchemaViolationError("annotated case is not a JSON object");
    if (!j.contains("case_id") || !j["case_id"].is_string())
        throw SchemaViolationError("missing mandatory 'case_id'");
    if (!j.contains("judgement"))
        throw SchemaViolationError("missing mandatory 'judgement'");

    AnnotatedCase annotated;
    annotated.case_id = j["case_id"].get<std::string>();
    annotated.case_name = j.value("case_name", std::string());

    if (j.contains("judgement_date") && !j["judgement_date"].is_null()) {
        if (!j["judgement_date"].is_string())
            throw SchemaViolationError("judgement_date must be ISO string or null");
        auto date = Date::parse_iso(j["judgement_date"].get<std::string>());
        if (!date) throw SchemaViolationError("judgement_date is not a valid ISO date");
        annotated.judgement_date = *date;
    }

    if (j.contains("citations")) {
        if (!j["citations"].is_array()) throw SchemaViolationError("citations must be an array");
        for (const json& cj : j["citations"]) {
            if (!cj.is_object() || !cj.contains("source") || !cj["source"].is_string() ||
                !cj.contains("raw") || !cj.contains("year") || !cj.contains("page"))
                throw SchemaViolationError("citation entry malformed");
            Citation c;
            auto source = citation_source_from_name(cj["source"].get<std::string>());
            if (!source) throw SchemaViolationError("unknown citation source");
            c.source = *source;
            c.raw = cj["raw"].get<std::string>();
            c.year = cj["year"].get<int>();
            if (cj.contains("volume") && !cj["volume"].is_null()) c.volume = cj["volume"].get<int>();
            c.page = cj["page"].get<int>();
            annotated.citations.push_back(std::move(c));
        }
    }
    if (j.contains("other_citations")) {
        if (!j["other_citations"].is_array())
            throw SchemaViolationError("other_citations must be an array");
        for (const json& s : j["other_citations"]) {
            if (!s.is_string()) throw SchemaViolationError("other_citations entries must be strings");
            annotated.other_citations.push_back(s.get<std::string>());
        }
    }
    if (j.contains("acts")) {
        if (!j["acts"].is_array()) throw SchemaViolationError("acts must be an array");
        for (const json& aj : j["acts"]) {
            if (!aj.is_object() || !aj.contains("act_id") || !aj.contains("text"))
                throw SchemaViolationError("act entry malformed");
            annotated.acts.push_back({aj["act_id"].get<std::string>(), aj["text"].get<std::string>()});
        }
    }
    if (j.contains("judges")) {
        if (!j["judges"].is_array()) throw SchemaViolationError("judges must be an array");
        for (const json& jj : j["judges"]) {
            if (!jj.is_object() || !jj.contains("name"))
                throw SchemaViolationError("judge entry malformed");
            annotated.judges.push_back({jj["name"].get<std::string>(),
                                        jj.value("is_chief", false), jj.value("delivered", false)});
        }
    }
    if (j.contains("parties")) {
        const json& pj = j["parties"];
        if (!pj.is_object()) throw SchemaViolationError("parties must be an object");
        auto read_side = [&](const char* key, std::vector<std::string>& out) {
            if (!pj.contains(key)) return;
            if (!pj[key].is_array()) throw SchemaViolationError("parties lists must be arrays");
            for (const json& s : pj[key]) out.push_back(s.get<std::string>());
        };
        read_side("plaintiffs", annotated.parties.plaintiffs);
        read_side("defendants", annotated.parties.defendants);
        read_side("intervenors", annotated.parties.intervenors);
    }
    if (j.contains("appearances")) {
        if (!j["appearances"].is_array()) throw SchemaViolationError("appearances must be an array");
        for (const json& aj : j["appearances"]) {
            if (!aj.is_array() || aj.size() != 3)
                throw SchemaViolationError("appearance must be [attorney, party, side]");
            auto side = side_from_name(aj[2].get<std::string>());
            if (!side) throw SchemaViolationError("unknown appearance side");
            annotated.appearances.push_back(
                {aj[0].get<std::string>(), aj[1].get<std::string>(), *side});
        }
    }

    annotated.judgement = section_from_json(j["judgement"], "judgement");
    if (j.contains("headnote")) annotated.headnote = section_from_json(j["headnote"], "headnote");
    return annotated;
}

void write_annotated(const AnnotatedCase& annotated, const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw MissingFileError("cannot open for writing: " + path.string());
    out << case_to_json(annotated).dump(2) << '\n';
}

AnnotatedCase read_annotated(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MissingFileError("cannot open annotated case: " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw SchemaViolationError(std::string("invalid JSON: ") + e.what());
    }
    try {
        return case_from_json(j);
    } catch (const json::exception& e) {
        throw SchemaViolationError(std::string("schema mismatch: ") + e.what());
    }
}

void write_split(const SplitAssignment& split, const fs::path& path) {
    json j;
    j["seed"] = split.seed;
    j["train"] = split.train_ids;
    j["validation"] = split.validation_ids;
    j["test"] = split.test_ids;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw MissingFileError("cannot open for writing: " + path.string());
    out << j.dump(2) << '\n';
}

SplitAssignment read_split(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MissingFileError("cannot open split file: " + path.string());
    json j;
    try {
        in >> j;
        SplitAssignment split;
        split.seed = j.at("seed").get<std::uint64_t>();
        split.train_ids = j.at("train").get<std::vector<std::string>>();
        split.validation_ids = j.at("validation").get<std::vector<std::string>>();
        split.test_ids = j.at("test").get<std::vector<std::string>>();
        return split;
    } catch (const json::exception& e) {
        throw SchemaViolationError(std::string("invalid split file: ") + e.what());
    }
}

}  // namespace courtsum
