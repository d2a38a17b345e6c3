#include "courtsum/roles.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "courtsum/errors.hpp"

namespace courtsum {

bool is_known_role(std::string_view role) {
    return std::find(kRhetoricalRoles.begin(), kRhetoricalRoles.end(), role) !=
           kRhetoricalRoles.end();
}

std::vector<RoleTag> load_role_tags(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ConfigError("cannot open role tags file: " + file.string());
    std::vector<RoleTag> tags;
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
        std::string case_id, index_s, role, confidence_s;
        if (!std::getline(ss, case_id, ',') || !std::getline(ss, index_s, ',') ||
            !std::getline(ss, role, ','))
            throw ConfigError("role tags line " + std::to_string(lineno) + " malformed");
        std::getline(ss, confidence_s, ',');
        auto strip = [](std::string& s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
        };
        strip(case_id);
        strip(index_s);
        strip(role);
        strip(confidence_s);
        RoleTag tag;
        tag.case_id = case_id;
        try {
            tag.sentence_index = std::stoi(index_s);
        } catch (...) {
            throw ConfigError("role tags line " + std::to_string(lineno) + ": bad index");
        }
        tag.role = role;
        if (!confidence_s.empty()) {
            try {
                tag.confidence = std::stod(confidence_s);
            } catch (...) {
                throw ConfigError("role tags line " + std::to_string(lineno) + ": bad confidence");
            }
        }
        tags.push_back(std::move(tag));
    }
    return tags;
}

RoleReport attach_roles(AnnotatedCase& annotated, std::span<const RoleTag> tags) {
    RoleReport report;
    for (const RoleTag& tag : tags) {
        if (tag.case_id != annotated.case_id) continue;
        if (tag.sentence_index < 0 ||
            static_cast<std::size_t>(tag.sentence_index) >= annotated.judgement.sentences.size()) {
            report.rejected.push_back("IndexOutOfRange: sentence " +
                                      std::to_string(tag.sentence_index) + " of case " +
                                      tag.case_id);
            continue;
        }
        if (!is_known_role(tag.role)) {
            report.rejected.push_back("UnknownRole: '" + tag.role + "' for case " + tag.case_id);
            continue;
        }
        if (tag.confidence && (*tag.confidence < 0.0 || *tag.confidence > 1.0)) {
            report.rejected.push_back("BadConfidence: " + std::to_string(*tag.confidence) +
                                      " for case " + tag.case_id);
            continue;
        }
        annotated.judgement.sentences[static_cast<std::size_t>(tag.sentence_index)]
            .rhetorical_role = tag.role;
        ++report.applied;
    }
    return report;
}

}  // namespace courtsum
