#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "courtsum/corpus.hpp"

namespace courtsum {

/// The seven rhetorical roles an external tagger may assign. Stored as
/// strings in the schema so taxonomy revisions do not break serialization.
inline constexpr std::array<std::string_view, 7> kRhetoricalRoles = {
    "Facts",
    "Ruling-by-Lower-Court",
    "Argument",
    "Statute",
    "Precedent",
    "Ratio-of-the-decision",
    "Ruling-by-Present-Court",
};

bool is_known_role(std::string_view role);

struct RoleTag {
    std::string case_id;
    int sentence_index = 0;
    std::string role;
    std::optional<double> confidence;
};

/// `case_id, sentence_index, role[, confidence]` per line.
std::vector<RoleTag> load_role_tags(const std::filesystem::path& file);

struct RoleReport {
    std::size_t applied = 0;
    std::vector<std::string> rejected;  // one message per bad tag
};

/// Attaches roles to the judgement sentences named by the tags. Out-of-range
/// indices and unknown roles are rejected with a report entry; everything
/// else still applies. Sentence text and order never change. Idempotent.
RoleReport attach_roles(AnnotatedCase& annotated, std::span<const RoleTag> tags);

}  // namespace courtsum
