#include "courtsum/metadata.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>
#include <unordered_set>

#include "courtsum/errors.hpp"
#include "courtsum/textnorm.hpp"
#include "courtsum/tokens.hpp"

namespace courtsum {

namespace {

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
char fold(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string collapse_ws(std::string_view s) {
    std::string out;
    bool pending = false;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            pending = !out.empty();
        } else {
            if (pending) out.push_back(' ');
            pending = false;
            out.push_back(c);
        }
    }
    return out;
}

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line =
            nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
        std::string s(line);
        if (!s.empty() && s.back() == '\r') s.pop_back();
        lines.push_back(std::move(s));
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return lines;
}

bool has_lowercase(std::string_view s) {
    return std::any_of(s.begin(), s.end(),
                       [](char c) { return std::islower(static_cast<unsigned char>(c)) != 0; });
}

std::string title_case(std::string_view s) {
    std::string out;
    bool word_start = true;
    for (char c : s) {
        if (is_alpha(c)) {
            out.push_back(word_start ? static_cast<char>(std::toupper(static_cast<unsigned char>(c)))
                                     : fold(c));
            word_start = false;
        } else {
            out.push_back(c);
            word_start = true;
        }
    }
    return out;
}

int days_in_month(int year, int month) {
    static constexpr std::array<int, 12> kDays = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month < 1 || month > 12) return 0;
    int d = kDays[static_cast<std::size_t>(month - 1)];
    bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
    if (month == 2 && leap) d = 29;
    return d;
}

std::optional<int> month_from_name(std::string_view name) {
    static constexpr std::array<std::string_view, 12> kMonths = {
        "january", "february", "march",     "april",   "may",      "june",
        "july",    "august",   "september", "october", "november", "december"};
    std::string folded;
    for (char c : name) folded.push_back(fold(c));
    for (std::size_t i = 0; i < kMonths.size(); ++i)
        if (folded == kMonths[i]) return static_cast<int>(i + 1);
    return std::nullopt;
}

// Section headers in info files look like "CITATION:" / "PETITIONER:".
bool is_section_header(std::string_view line) {
    std::string t = trim(line);
    if (t.size() < 3 || t.back() != ':') return false;
    std::string_view head = std::string_view(t).substr(0, t.size() - 1);
    bool has_upper = false;
    for (char c : head) {
        if (std::islower(static_cast<unsigned char>(c))) return false;
        if (std::isupper(static_cast<unsigned char>(c))) has_upper = true;
    }
    return has_upper;
}

}  // namespace

bool Date::valid() const {
    return month >= 1 && month <= 12 && day >= 1 && day <= days_in_month(year, month) &&
           year >= 1000 && year <= 9999;
}

std::string Date::iso() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
    return buf;
}

std::optional<Date> Date::parse_iso(std::string_view s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u})
        if (!is_digit(s[i])) return std::nullopt;
    Date d;
    d.year = std::stoi(std::string(s.substr(0, 4)));
    d.month = std::stoi(std::string(s.substr(5, 2)));
    d.day = std::stoi(std::string(s.substr(8, 2)));
    if (!d.valid()) return std::nullopt;
    return d;
}

std::string_view citation_source_name(CitationSource source) {
    switch (source) {
        case CitationSource::INSC: return "INSC";
        case CitationSource::AIR: return "AIR";
        case CitationSource::SCR: return "SCR";
        case CitationSource::Other: return "OTHER";
    }
    return "OTHER";
}

std::optional<CitationSource> citation_source_from_name(std::string_view name) {
    if (name == "INSC") return CitationSource::INSC;
    if (name == "AIR") return CitationSource::AIR;
    if (name == "SCR") return CitationSource::SCR;
    if (name == "OTHER") return CitationSource::Other;
    return std::nullopt;
}

std::string_view side_name(Side side) {
    switch (side) {
        case Side::Plaintiff: return "plaintiff";
        case Side::Defendant: return "defendant";
        case Side::Intervenor: return "intervenor";
    }
    return "plaintiff";
}

std::optional<Side> side_from_name(std::string_view name) {
    if (name == "plaintiff") return Side::Plaintiff;
    if (name == "defendant") return Side::Defendant;
    if (name == "intervenor") return Side::Intervenor;
    return std::nullopt;
}

std::vector<RosterEntry> load_roster(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ConfigError("cannot open roster file: " + file.string());
    std::vector<RosterEntry> roster;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::vector<std::string> fields;
        std::stringstream ss(t);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(trim(field));
        if (fields.size() < 3)
            throw ConfigError("roster line " + std::to_string(lineno) + ": expected at least 3 fields");
        RosterEntry entry;
        entry.canonical_name = fields[0];
        auto start = Date::parse_iso(fields[1]);
        auto end = Date::parse_iso(fields[2]);
        if (!start || !end || *end < *start)
            throw ConfigError("roster line " + std::to_string(lineno) + ": bad service dates");
        entry.start_date = *start;
        entry.end_date = *end;
        if (fields.size() >= 4 && !fields[3].empty()) {
            auto chief = Date::parse_iso(fields[3]);
            if (!chief) throw ConfigError("roster line " + std::to_string(lineno) + ": bad chief date");
            entry.chief_from = *chief;
        }
        roster.push_back(std::move(entry));
    }
    return roster;
}

CaseHeader parse_case_header(std::string_view info_text) {
    CaseHeader header;
    std::string title;
    for (const std::string& line : split_lines(info_text)) {
        std::string t = collapse_ws(line);
        if (!t.empty()) {
            title = std::move(t);
            break;
        }
    }
    if (title.empty()) throw HeaderNotFoundError("info text has no title line");

    // "... on 2 March, 1983" title suffix
    std::optional<Date> title_date;
    static const std::regex kSuffix(
        R"(\s+on\s+(\d{1,2})(?:st|nd|rd|th)?\s+([A-Za-z]+),?\s+(\d{4})\s*$)",
        std::regex::icase);
    std::smatch m;
    if (std::regex_search(title, m, kSuffix)) {
        if (auto month = month_from_name(m[2].str())) {
            Date d{std::stoi(m[3].str()), *month, std::stoi(m[1].str())};
            if (d.valid()) title_date = d;
        }
        header.case_name = trim(title.substr(0, static_cast<std::size_t>(m.position(0))));
    } else {
        header.case_name = title;
    }

    // "DATE OF JUDGMENT02/03/1983" marker (DD/MM/YYYY); wins over the title
    std::optional<Date> marker_date;
    {
        std::string folded;
        folded.reserve(info_text.size());
        for (char c : info_text) folded.push_back(fold(c));
        std::size_t at = folded.find("date of judgment");
        if (at == std::string::npos) at = folded.find("date of judgement");
        if (at != std::string::npos) {
            static const std::regex kDmy(R"((\d{1,2})/(\d{1,2})/(\d{4}))");
            std::string tail(info_text.substr(at, std::min<std::size_t>(64, info_text.size() - at)));
            std::smatch dm;
            if (std::regex_search(tail, dm, kDmy)) {
                Date d{std::stoi(dm[3].str()), std::stoi(dm[2].str()), std::stoi(dm[1].str())};
                if (d.valid()) marker_date = d;
            }
        }
    }

    header.date = marker_date ? marker_date : title_date;
    if (!header.date) header.warnings.push_back("DateNotFound");
    return header;
}

namespace {

const std::array<std::string_view, 4> kVersusTokens = {"vs", "vs.", "v.", "versus"};

std::string strip_party_suffix(std::string name) {
    static const std::regex kSuffix(
        R"(\s*(,)?\s*(and|&)\s+(anr|ors|another|others|anors)\.?\s*$)", std::regex::icase);
    std::string prev;
    do {
        prev = name;
        name = std::regex_replace(name, kSuffix, "");
        name = trim(name);
        while (!name.empty() && (name.back() == ',' || name.back() == '.')) {
            if (name.back() == '.' && name.size() >= 2 &&
                is_alpha(name[name.size() - 2]) &&
                (name.size() < 3 || !is_alpha(name[name.size() - 3])))
                break;  // keep initials like "Smt." / "K."
            name.pop_back();
            name = trim(name);
        }
    } while (name != prev);
    return name;
}

}  // namespace

PartiesResult parse_parties(std::string_view case_name, std::string_view info_text) {
    PartiesResult result;

    // versus split of the case name
    std::vector<std::string> tokens = whitespace_tokens(case_name);
    std::size_t versus_at = tokens.size();
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        std::string folded;
        for (char c : tokens[i]) folded.push_back(fold(c));
        if (std::find(kVersusTokens.begin(), kVersusTokens.end(), folded) != kVersusTokens.end()) {
            versus_at = i;
            break;
        }
    }
    if (versus_at == tokens.size()) {
        result.warnings.push_back("VersusNotFound");
    } else {
        auto join = [&](std::size_t from, std::size_t to) {
            std::string s;
            for (std::size_t i = from; i < to; ++i) {
                if (!s.empty()) s.push_back(' ');
                s += tokens[i];
            }
            return s;
        };
        std::string left = strip_party_suffix(join(0, versus_at));
        std::string right = strip_party_suffix(join(versus_at + 1, tokens.size()));
        if (!has_lowercase(left)) left = title_case(left);
        if (!has_lowercase(right)) right = title_case(right);
        if (!left.empty()) result.parties.plaintiffs.push_back(left);
        if (!right.empty()) result.parties.defendants.push_back(right);
    }

    // PETITIONER / RESPONDENT / INTERVENOR blocks override the name-derived
    // values verbatim.
    std::vector<std::string> lines = split_lines(info_text);
    auto collect_block = [&](std::size_t header_idx, std::string_view remainder)
        -> std::vector<std::string> {
        std::vector<std::string> entries;
        std::string first = collapse_ws(remainder);
        if (!first.empty()) entries.push_back(first);
        for (std::size_t i = header_idx + 1; i < lines.size(); ++i) {
            std::string t = collapse_ws(lines[i]);
            if (t.empty() || is_section_header(lines[i])) break;
            entries.push_back(t);
        }
        return entries;
    };

    bool saw_petitioner = false, saw_respondent = false, saw_intervenor = false;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string t = trim(lines[i]);
        std::string folded;
        for (char c : t) folded.push_back(fold(c));
        auto block_for = [&](std::string_view key) -> std::optional<std::string> {
            if (folded.rfind(key, 0) != 0) return std::nullopt;
            std::size_t after = key.size();
            if (after >= t.size() || t[after] != ':') return std::nullopt;
            return t.substr(after + 1);
        };
        if (auto rest = block_for("petitioner")) {
            auto entries = collect_block(i, *rest);
            if (!entries.empty()) {
                if (!saw_petitioner) result.parties.plaintiffs.clear();
                saw_petitioner = true;
                for (auto& e : entries) result.parties.plaintiffs.push_back(std::move(e));
            }
        } else if (auto rest2 = block_for("respondent")) {
            auto entries = collect_block(i, *rest2);
            if (!entries.empty()) {
                if (!saw_respondent) result.parties.defendants.clear();
                saw_respondent = true;
                for (auto& e : entries) result.parties.defendants.push_back(std::move(e));
            }
        } else if (auto rest3 = block_for("intervenor")) {
            auto entries = collect_block(i, *rest3);
            if (!entries.empty()) {
                if (!saw_intervenor) result.parties.intervenors.clear();
                saw_intervenor = true;
                for (auto& e : entries) result.parties.intervenors.push_back(std::move(e));
            }
        }
    }
    return result;
}

CitationScan parse_citations(std::string_view info_text) {
    CitationScan scan;

    // The CITATOR INFO block lists treatment codes, not equivalent
    // citations; stop before it.
    std::string folded;
    folded.reserve(info_text.size());
    for (char c : info_text) folded.push_back(fold(c));
    std::size_t cut = folded.find("citator info");
    std::string text(info_text.substr(0, cut == std::string::npos ? info_text.size() : cut));

    static const std::regex kReporter(
        R"((\d{4})\s+([A-Z][A-Z]+[A-Za-z]*)\s*(?:\(\s*(\d+)\s*\))?\s*(\d+))");

    std::unordered_set<std::string> seen;
    auto begin = std::sregex_iterator(text.begin(), text.end(), kReporter);
    for (auto it = begin; it != std::sregex_iterator(); ++it) {
        const std::smatch& m = *it;
        int year = std::stoi(m[1].str());
        std::string reporter = m[2].str();
        std::optional<int> volume;
        if (m[3].matched) volume = std::stoi(m[3].str());
        int page = std::stoi(m[4].str());
        std::string raw = collapse_ws(m[0].str());
        bool year_ok = year >= 1947 && year <= 2100;

        CitationSource source = CitationSource::Other;
        if (year_ok && reporter == "AIR" && !volume) source = CitationSource::AIR;
        else if (year_ok && reporter == "SCR" && volume) source = CitationSource::SCR;
        else if (year_ok && reporter == "INSC" && !volume) source = CitationSource::INSC;

        if (source == CitationSource::Other) {
            if (seen.insert("other|" + raw).second) scan.other.push_back(raw);
            continue;
        }
        std::string key = std::string(citation_source_name(source)) + "|" + m[1].str() + "|" +
                          (volume ? std::to_string(*volume) : "") + "|" + m[4].str();
        if (!seen.insert(key).second) continue;
        scan.citations.push_back({source, raw, year, volume, page});
    }
    return scan;
}

std::vector<Act> parse_acts(std::string_view info_text) {
    std::vector<std::string> lines = split_lines(info_text);
    std::vector<std::string> block_lines;
    bool in_block = false;
    for (const std::string& line : lines) {
        std::string t = trim(line);
        std::string folded;
        for (char c : t) folded.push_back(fold(c));
        if (!in_block) {
            if (folded.rfind("act:", 0) == 0) {
                in_block = true;
                std::string rest = trim(t.substr(4));
                block_lines.push_back(rest);  // may be empty; keeps paragraph structure
            }
            continue;
        }
        if (is_section_header(line)) break;
        block_lines.push_back(line);
    }

    // paragraphs (blank-line separated), then top-level semicolons
    std::vector<std::string> entries;
    std::string paragraph;
    auto flush_paragraph = [&] {
        std::string collapsed = collapse_ws(paragraph);
        paragraph.clear();
        if (collapsed.empty()) return;
        int depth = 0;
        std::string current;
        for (char c : collapsed) {
            if (c == '(' || c == '[') ++depth;
            if (c == ')' || c == ']') --depth;
            if (c == ';' && depth <= 0) {
                std::string e = trim(current);
                if (!e.empty()) entries.push_back(e);
                current.clear();
            } else {
                current.push_back(c);
            }
        }
        std::string e = trim(current);
        if (!e.empty()) entries.push_back(e);
    };
    for (const std::string& line : block_lines) {
        if (trim(line).empty()) {
            flush_paragraph();
        } else {
            if (!paragraph.empty()) paragraph.push_back(' ');
            paragraph += line;
        }
    }
    flush_paragraph();

    std::vector<Act> acts;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const std::string& text = entries[i];
        std::size_t name_end = text.find('-');
        std::size_t comma = text.find(',');
        if (comma != std::string::npos && (name_end == std::string::npos || comma < name_end))
            name_end = comma;
        std::string name = trim(text.substr(0, name_end));
        std::string slug;
        for (char c : name) {
            if (std::isalnum(static_cast<unsigned char>(c))) slug.push_back(fold(c));
            else if (!slug.empty() && slug.back() != '-') slug.push_back('-');
        }
        while (!slug.empty() && slug.back() == '-') slug.pop_back();
        if (slug.empty()) slug = "act";
        acts.push_back({slug + "-" + std::to_string(i + 1), text});
    }
    return acts;
}

std::vector<std::string> parse_bench(std::string_view info_text) {
    std::vector<std::string> lines = split_lines(info_text);
    std::vector<std::string> names;
    std::unordered_set<std::string> seen;

    auto add = [&](std::string_view raw) {
        std::string name = collapse_ws(raw);
        if (name.empty()) return;
        std::string key = normalize_person_name(name);
        if (key.empty() || !seen.insert(key).second) return;
        names.push_back(std::move(name));
    };

    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string t = trim(lines[i]);
        std::string folded;
        for (char c : t) folded.push_back(fold(c));
        if (folded.rfind("bench:", 0) != 0) continue;
        add(t.substr(6));
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            std::string u = trim(lines[j]);
            if (u.empty() || is_section_header(lines[j])) break;
            add(u);
        }
    }
    return names;
}

std::optional<std::string> find_delivery_name(std::string_view judgement_text) {
    std::string folded;
    folded.reserve(judgement_text.size());
    for (char c : judgement_text) folded.push_back(fold(c));
    std::size_t at = folded.find("delivered by");
    if (at == std::string::npos) return std::nullopt;
    std::size_t begin = at + std::string_view("delivered by").size();

    std::size_t end = begin;
    while (end < judgement_text.size() && end - begin < 120) {
        char c = judgement_text[end];
        if (c == '\n') break;
        if (c == '.' && end + 1 < judgement_text.size() &&
            std::isspace(static_cast<unsigned char>(judgement_text[end + 1]))) {
            // ". " ends the clause unless it closes an initial ("O. Chinnappa")
            std::string token = last_token(judgement_text.substr(begin, end - begin));
            if (token.size() > 1) break;
        }
        ++end;
    }

    std::vector<std::string> tokens = whitespace_tokens(judgement_text.substr(begin, end - begin));
    static const std::unordered_set<std::string> kHonorifics = {"j", "jj", "cj"};
    while (!tokens.empty()) {
        std::string stripped;
        for (char c : tokens.back())
            if (is_alpha(c)) stripped.push_back(fold(c));
        if (kHonorifics.count(stripped)) {
            tokens.pop_back();
            continue;
        }
        break;
    }
    std::string name;
    for (const std::string& token : tokens) {
        if (!name.empty()) name.push_back(' ');
        name += token;
    }
    while (!name.empty() && (name.back() == ',' || name.back() == '.')) name.pop_back();
    name = trim(name);
    if (name.empty()) return std::nullopt;
    return name;
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
    std::vector<std::size_t> prev(b.size() + 1), curr(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        curr[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
            curr[j] = std::min({prev[j] + 1, curr[j - 1] + 1, prev[j - 1] + cost});
        }
        std::swap(prev, curr);
    }
    return prev[b.size()];
}

std::string normalize_person_name(std::string_view name) {
    // drop parenthesized annotations like "(J)"
    std::string cleaned;
    int depth = 0;
    for (char c : name) {
        if (c == '(') { ++depth; continue; }
        if (c == ')') { if (depth > 0) --depth; continue; }
        if (depth == 0) cleaned.push_back(c);
    }
    std::string spaced;
    for (char c : cleaned)
        spaced.push_back(std::isalnum(static_cast<unsigned char>(c)) ? fold(c) : ' ');

    std::vector<std::string> tokens = whitespace_tokens(spaced);
    std::vector<std::string> collapsed;
    for (std::size_t i = 0; i < tokens.size();) {
        if (tokens[i].size() == 1) {
            std::string run;
            while (i < tokens.size() && tokens[i].size() == 1) {
                run += tokens[i];
                ++i;
            }
            collapsed.push_back(std::move(run));
        } else {
            collapsed.push_back(tokens[i]);
            ++i;
        }
    }
    std::sort(collapsed.begin(), collapsed.end());
    std::string out;
    for (const std::string& token : collapsed) {
        if (!out.empty()) out.push_back(' ');
        out += token;
    }
    return out;
}

double normalized_name_distance(std::string_view a, std::string_view b) {
    std::string na = normalize_person_name(a);
    std::string nb = normalize_person_name(b);
    std::size_t longest = std::max(na.size(), nb.size());
    if (longest == 0) return 0.0;
    return static_cast<double>(levenshtein(na, nb)) / static_cast<double>(longest);
}

JudgeMatch match_judges(const std::vector<std::string>& raw_names,
                        const std::vector<RosterEntry>& roster,
                        std::optional<Date> judgment_date,
                        std::optional<std::string> delivery_name,
                        double distance_ceiling) {
    JudgeMatch result;
    if (!judgment_date) result.warnings.push_back("judge matching without judgment date");

    std::unordered_set<std::string> taken;
    for (const std::string& raw : raw_names) {
        const RosterEntry* best = nullptr;
        double best_distance = 0.0;
        for (const RosterEntry& entry : roster) {
            if (judgment_date &&
                (*judgment_date < entry.start_date || entry.end_date < *judgment_date))
                continue;
            double d = normalized_name_distance(raw, entry.canonical_name);
            if (!best || d < best_distance ||
                (d == best_distance && entry.canonical_name < best->canonical_name)) {
                best = &entry;
                best_distance = d;
            }
        }
        if (!best || best_distance > distance_ceiling) {
            if (taken.insert(normalize_person_name(raw)).second) {
                result.judges.push_back({raw, false, false});
                result.unmatched.push_back(raw);
            }
            continue;
        }
        if (!taken.insert(best->canonical_name).second) continue;  // bench repeats
        bool chief = judgment_date && best->chief_from && !(*judgment_date < *best->chief_from);
        result.judges.push_back({best->canonical_name, chief, false});
    }

    if (delivery_name) {
        double best_distance = 1.0;
        std::size_t best_idx = result.judges.size();
        for (std::size_t i = 0; i < result.judges.size(); ++i) {
            double d = normalized_name_distance(*delivery_name, result.judges[i].name);
            if (d < best_distance) {
                best_distance = d;
                best_idx = i;
            }
        }
        if (best_idx < result.judges.size() && best_distance <= distance_ceiling)
            result.judges[best_idx].delivered = true;
        else
            result.warnings.push_back("delivery name matched no bench judge: " + *delivery_name);
    }
    return result;
}

std::vector<Appearance> parse_appearances(std::string_view judgement_text, const Parties& parties) {
    // header region: everything before the delivery line
    std::string folded;
    folded.reserve(judgement_text.size());
    for (char c : judgement_text) folded.push_back(fold(c));
    std::size_t cut = folded.find("delivered by");
    std::string region(judgement_text.substr(0, cut == std::string::npos
                                                    ? std::min<std::size_t>(judgement_text.size(), 4000)
                                                    : cut));

    static const std::regex kForThe(R"(\bfor\s+the\s+([A-Za-z]+))");
    static const std::regex kSplit(R"(\s*,\s*|\s+and\s+)");

    std::vector<Appearance> out;
    std::size_t pos = 0;
    while (pos <= region.size()) {
        std::size_t nl = region.find('\n', pos);
        std::string paragraph =
            region.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
        pos = nl == std::string::npos ? region.size() + 1 : nl + 1;

        std::size_t names_from = 0;
        auto begin = std::sregex_iterator(paragraph.begin(), paragraph.end(), kForThe);
        for (auto it = begin; it != std::sregex_iterator(); ++it) {
            const std::smatch& m = *it;
            std::string designation;
            for (char c : m[1].str()) designation.push_back(fold(c));
            while (!designation.empty() && designation.back() == 's') designation.pop_back();

            std::optional<Side> side;
            if (designation == "appellant" || designation == "petitioner")
                side = Side::Plaintiff;
            else if (designation == "respondent" || designation == "defendant")
                side = Side::Defendant;
            else if (designation == "intervenor" || designation == "intervener")
                side = Side::Intervenor;

            std::string segment =
                paragraph.substr(names_from, static_cast<std::size_t>(m.position(0)) - names_from);
            names_from = static_cast<std::size_t>(m.position(0) + m.length(0));

            if (!side) continue;
            const std::vector<std::string>* party_list = nullptr;
            switch (*side) {
                case Side::Plaintiff: party_list = &parties.plaintiffs; break;
                case Side::Defendant: party_list = &parties.defendants; break;
                case Side::Intervenor: party_list = &parties.intervenors; break;
            }
            if (!party_list || party_list->empty()) continue;  // best effort

            segment = collapse_ws(segment);
            while (!segment.empty() && (segment.front() == '.' || segment.front() == ','))
                segment.erase(segment.begin());
            std::sregex_token_iterator tok(segment.begin(), segment.end(), kSplit, -1);
            for (; tok != std::sregex_token_iterator(); ++tok) {
                std::string attorney = trim(tok->str());
                while (!attorney.empty() && (attorney.front() == '.' || attorney.front() == ','))
                    attorney.erase(attorney.begin());
                attorney = trim(attorney);
                if (attorney.size() < 2 || attorney.size() > 80) continue;
                if (!std::any_of(attorney.begin(), attorney.end(), is_alpha)) continue;
                out.push_back({attorney, party_list->front(), *side});
            }
        }
    }
    return out;
}

}  // namespace courtsum
