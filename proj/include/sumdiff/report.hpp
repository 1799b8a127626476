#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sumdiff {

enum class RunStatus { AllPass, Mismatch, Error };
enum class OutputFormat { Markdown, Csv, Json };

std::string_view status_name(RunStatus s);
RunStatus parse_status(std::string_view text);
OutputFormat parse_format(std::string_view text);

// Exit code contract: 0 all pass, 1 mismatch or bound violation, 2 usage or runtime error.
int exit_code(RunStatus s);

// Ordered string fields; all counts are carried as decimal strings.
using FieldList = std::vector<std::pair<std::string, std::string>>;

struct ReportRow {
  FieldList fields;

  ReportRow& add(std::string key, std::string value);
  // Empty string when absent.
  const std::string& get(std::string_view key) const;
  bool operator==(const ReportRow&) const = default;
};

struct RunReport {
  std::string command;
  FieldList parameters;
  std::vector<ReportRow> rows;
  std::vector<std::string> notes;
  RunStatus status = RunStatus::AllPass;
  std::int64_t elapsed_ms = 0;

  bool operator==(const RunReport&) const = default;
};

std::string to_json(const RunReport& report);
// Throws std::invalid_argument on malformed input.
RunReport report_from_json(std::string_view text);

// Header is the key list of the first row; LF line endings.
std::string to_csv(const RunReport& report);
std::string to_markdown(const RunReport& report);
std::string render(const RunReport& report, OutputFormat format);

}  // namespace sumdiff
