#include "sumdiff/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sumdiff {

using ordered_json = nlohmann::ordered_json;

std::string_view status_name(RunStatus s) {
  switch (s) {
    case RunStatus::AllPass:
      return "AllPass";
    case RunStatus::Mismatch:
      return "Mismatch";
    case RunStatus::Error:
      return "Error";
  }
  return "Error";
}

RunStatus parse_status(std::string_view text) {
  if (text == "AllPass") return RunStatus::AllPass;
  if (text == "Mismatch") return RunStatus::Mismatch;
  if (text == "Error") return RunStatus::Error;
  throw std::invalid_argument("unknown status '" + std::string(text) + "'");
}

OutputFormat parse_format(std::string_view text) {
  if (text == "md" || text == "markdown") return OutputFormat::Markdown;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown format '" + std::string(text) + "' (md, csv, json)");
}

int exit_code(RunStatus s) {
  switch (s) {
    case RunStatus::AllPass:
      return 0;
    case RunStatus::Mismatch:
      return 1;
    case RunStatus::Error:
      return 2;
  }
  return 2;
}

ReportRow& ReportRow::add(std::string key, std::string value) {
  fields.emplace_back(std::move(key), std::move(value));
  return *this;
}

const std::string& ReportRow::get(std::string_view key) const {
  static const std::string empty;
  for (const auto& [k, v] : fields) {
    if (k == key) return v;
  }
  return empty;
}

namespace {

ordered_json fields_to_json(const FieldList& fields) {
  ordered_json obj = ordered_json::object();
  for (const auto& [k, v] : fields) obj[k] = v;
  return obj;
}

FieldList fields_from_json(const ordered_json& obj) {
  if (!obj.is_object()) throw std::invalid_argument("expected a JSON object of string fields");
  FieldList out;
  for (const auto& [k, v] : obj.items()) {
    if (!v.is_string()) throw std::invalid_argument("field '" + k + "' is not a string");
    out.emplace_back(k, v.get<std::string>());
  }
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_json(const RunReport& report) {
  ordered_json j;
  j["command"] = report.command;
  j["parameters"] = fields_to_json(report.parameters);
  j["rows"] = ordered_json::array();
  for (const auto& row : report.rows) j["rows"].push_back(fields_to_json(row.fields));
  j["notes"] = report.notes;
  j["status"] = status_name(report.status);
  j["elapsed_ms"] = report.elapsed_ms;
  return j.dump(2) + "\n";
}

RunReport report_from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("report is not valid JSON: ") + e.what());
  }
  try {
    RunReport r;
    r.command = j.at("command").get<std::string>();
    r.parameters = fields_from_json(j.at("parameters"));
    for (const auto& row : j.at("rows")) r.rows.push_back({fields_from_json(row)});
    r.notes = j.at("notes").get<std::vector<std::string>>();
    r.status = parse_status(j.at("status").get<std::string>());
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

std::string to_csv(const RunReport& report) {
  std::ostringstream out;
  if (report.rows.empty()) return {};
  const auto& header = report.rows.front().fields;
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << csv_escape(header[i].first);
  out << '\n';
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << csv_escape(row.get(header[i].first));
    out << '\n';
  }
  return out.str();
}

std::string to_markdown(const RunReport& report) {
  std::ostringstream out;
  out << "## " << report.command;
  for (const auto& [k, v] : report.parameters) out << "  " << k << "=" << v;
  out << "\n\n";
  if (!report.rows.empty()) {
    const auto& header = report.rows.front().fields;
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) {
      width[i] = header[i].first.size();
      for (const auto& row : report.rows) width[i] = std::max(width[i], row.get(header[i].first).size());
    }
    auto cell = [&](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
    out << "|";
    for (std::size_t i = 0; i < header.size(); ++i) out << " " << cell(header[i].first, width[i]) << " |";
    out << "\n|";
    for (std::size_t i = 0; i < header.size(); ++i) out << std::string(width[i] + 2, '-') << "|";
    out << "\n";
    for (const auto& row : report.rows) {
      out << "|";
      for (std::size_t i = 0; i < header.size(); ++i) out << " " << cell(row.get(header[i].first), width[i]) << " |";
      out << "\n";
    }
    out << "\n";
  }
  for (const auto& note : report.notes) out << "- " << note << "\n";
  out << "\nstatus: " << status_name(report.status) << " (" << report.elapsed_ms << " ms)\n";
  return out.str();
}

std::string render(const RunReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::Markdown:
      return to_markdown(report);
    case OutputFormat::Csv:
      return to_csv(report);
    case OutputFormat::Json:
      return to_json(report);
  }
  return {};
}

}  // namespace sumdiff
