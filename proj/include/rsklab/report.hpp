#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "rsklab/search.hpp"

namespace rsklab {

// Persistence formats for verification records. JSON keys are the
// VerificationRecord field names; matrices are arrays of row arrays.

/// Single-line JSON object, no trailing newline. Key order is fixed, so equal
/// records serialize to identical bytes apart from elapsed_seconds.
std::string to_jsonl_line(const VerificationRecord& rec, bool include_elapsed = true);

/// Partition field of a JSONL record; nullopt for blank or malformed lines.
std::optional<Partition> partition_of_jsonl_line(std::string_view line);

std::string csv_header();
std::string to_csv_row(const VerificationRecord& rec);

/// Short human-readable one-liner.
std::string render_text(const VerificationRecord& rec);

}  // namespace rsklab
