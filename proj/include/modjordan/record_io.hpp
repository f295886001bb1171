#pragma once

// Machine-readable and human renderings used by the command-line tool.
// Identical inputs always render to identical bytes.

#include <string>
#include <string_view>

#include "json.hpp"
#include "modjordan/partition.hpp"
#include "modjordan/survey.hpp"

namespace modjordan {

enum class Format { text, json_lines, csv };

Format format_from_string(std::string_view name);

/// Keys: r, s, p, m, lambda, epsilon, method, reductions. Each reduction is
/// {"kind": ..., "from": [r,s,p], "to": [r,s,p]}.
nlohmann::json record_to_json(const JordanRecord& rec);
JordanRecord record_from_json(const nlohmann::json& j);

std::string csv_record_header();
/// One line (newline-terminated) in the given format. For csv, the header
/// is emitted separately by csv_record_header().
std::string format_record(const JordanRecord& rec, Format fmt);

std::string format_table(const DeviationTable& table, Format fmt);

std::string format_census(const DeviationCensus& census, Format fmt, bool list_vectors);

}  // namespace modjordan
