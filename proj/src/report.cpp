#include "pqwpa/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include <fmt/format.h>
#include <json.hpp>

#include "csv.hpp"
#include "pqwpa/errors.hpp"

namespace pqwpa {

std::optional<ReportFormat> parse_report_format(std::string_view text) {
  if (text == "csv" || text == "CSV") return ReportFormat::Csv;
  if (text == "json" || text == "JSON") return ReportFormat::Json;
  return std::nullopt;
}

namespace {

std::string ms(Duration d) { return fmt::format("{:.3f}", to_millis(d)); }

double ms_value(Duration d) { return std::round(to_millis(d) * 1000.0) / 1000.0; }

double rate_value(double r) { return std::round(r * 1000.0) / 1000.0; }

std::string emit_csv(std::span<const MatrixRow> rows) {
  using detail::csv_field;
  std::string out =
      "scenario_id,algorithm,band,situation,median_ms,p95_ms,client_ms,ap_ms,server_ms,"
      "eap_messages,frames,abort_rate\n";
  for (const auto& row : rows) {
    const auto& s = row.scenario;
    out += fmt::format("{},{},{},{},", csv_field(s.id), csv_field(row.algorithm),
                       to_string(s.band.band), to_string(s.situation.situation));
    if (row.stats) {
      const auto& st = *row.stats;
      out += fmt::format("{},{},{},{},{},{},{},{:.3f}\n", ms(st.median), ms(st.p95),
                         ms(st.client_median), ms(st.ap_median), ms(st.server_median),
                         st.eap_messages, st.frames_median, st.abort_rate);
    } else {
      // Failed row: no statistics, every run counted as aborted.
      out += ",,,,,,,1.000\n";
    }
  }
  return out;
}

std::string emit_json(std::span<const MatrixRow> rows) {
  nlohmann::ordered_json doc;
  auto& arr = doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    const auto& s = row.scenario;
    nlohmann::ordered_json j;
    j["scenario_id"] = s.id;
    j["algorithm"] = row.algorithm;
    j["method"] = to_string(s.method);
    j["band"] = to_string(s.band.band);
    j["situation"] = to_string(s.situation.situation);
    j["resumption"] = s.resumption;
    j["seed"] = fmt::format("{:#x}", s.seed);
    j["repetitions"] = s.repetitions;
    if (row.stats) {
      const auto& st = *row.stats;
      j["median_ms"] = ms_value(st.median);
      j["p95_ms"] = ms_value(st.p95);
      j["client_ms"] = ms_value(st.client_median);
      j["ap_ms"] = ms_value(st.ap_median);
      j["server_ms"] = ms_value(st.server_median);
      j["eap_messages"] = st.eap_messages;
      j["frames"] = st.frames_median;
      j["abort_rate"] = rate_value(st.abort_rate);
    } else {
      j["error"] = row.error;
      j["abort_rate"] = 1.0;
    }
    arr.push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

}  // namespace

std::string emit_report(std::span<const MatrixRow> rows, ReportFormat format) {
  if (rows.empty()) throw InvalidArgument("refusing to emit a report with no rows");
  return format == ReportFormat::Csv ? emit_csv(rows) : emit_json(rows);
}

void write_document(const std::string& document, const std::filesystem::path& path) {
  if (path.empty()) {
    if (std::fwrite(document.data(), 1, document.size(), stdout) != document.size()) {
      throw IoError("failed writing to stdout");
    }
    std::fflush(stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << document;
  if (!out.flush()) throw IoError("failed writing " + path.string());
}

}  // namespace pqwpa
