#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>

#include "pqwpa/sim.hpp"

namespace pqwpa {

enum class ReportFormat { Csv, Json };

std::optional<ReportFormat> parse_report_format(std::string_view text);

// Stable columns and 3-decimal millisecond values, so equal inputs give
// byte-identical documents. Throws InvalidArgument on empty input.
//
// CSV columns: scenario_id,algorithm,band,situation,median_ms,p95_ms,
// client_ms,ap_ms,server_ms,eap_messages,frames,abort_rate
std::string emit_report(std::span<const MatrixRow> rows, ReportFormat format);

// Writes `document` to `path`, or to stdout when path is empty. Throws IoError.
void write_document(const std::string& document, const std::filesystem::path& path);

}  // namespace pqwpa
