#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace shatter::cli {

enum class Format { plain, json, csv };

/// One command invocation and its outcome, independent of rendering.
struct OutputRecord {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json result = nlohmann::json::object();
  std::vector<std::string> flags;
  nlohmann::json provenance = nlohmann::json::object();

  bool has_flag(const std::string& f) const;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

void to_json(nlohmann::json& j, const OutputRecord& r);
void from_json(const nlohmann::json& j, OutputRecord& r);

std::string render_json(const OutputRecord& r);
/// Human-readable `key: value` lines carrying the same values as the JSON form.
std::string render_plain(const OutputRecord& r);
OutputRecord parse_json(const std::string& text);

/// Mantissa/exponent scientific notation computed from a natural log, so
/// values far outside double range still print.
std::string scientific_from_log(double log_value, int digits = 6);

}  // namespace shatter::cli
