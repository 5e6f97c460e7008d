#include "shatter/output_record.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <sstream>

namespace shatter::cli {

using nlohmann::json;

bool OutputRecord::has_flag(const std::string& f) const {
  return std::find(flags.begin(), flags.end(), f) != flags.end();
}

void to_json(json& j, const OutputRecord& r) {
  j = json{{"command", r.command},
           {"inputs", r.inputs},
           {"result", r.result},
           {"flags", r.flags},
           {"provenance", r.provenance}};
}

void from_json(const json& j, OutputRecord& r) {
  j.at("command").get_to(r.command);
  r.inputs = j.at("inputs");
  r.result = j.at("result");
  j.at("flags").get_to(r.flags);
  r.provenance = j.at("provenance");
}

std::string render_json(const OutputRecord& r) { return json(r).dump(2) + "\n"; }

OutputRecord parse_json(const std::string& text) { return json::parse(text).get<OutputRecord>(); }

namespace {

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v.get<double>());
    return buf;
  }
  return v.dump();
}

std::string inline_object(const json& obj) {
  std::string s;
  for (const auto& [k, v] : obj.items()) {
    if (!s.empty()) s += ' ';
    s += k + '=' + (v.is_primitive() ? scalar(v) : v.dump());
  }
  return s;
}

}  // namespace

std::string render_plain(const OutputRecord& r) {
  std::ostringstream out;
  out << "command: " << r.command << '\n';
  out << "inputs: " << inline_object(r.inputs) << '\n';
  for (const auto& [k, v] : r.result.items()) {
    if (v.is_array()) {
      for (std::size_t i = 0; i < v.size(); ++i)
        out << k << '[' << i << "]: " << (v[i].is_object() ? inline_object(v[i]) : scalar(v[i])) << '\n';
    } else if (v.is_object()) {
      out << k << ": " << inline_object(v) << '\n';
    } else {
      out << k << ": " << scalar(v) << '\n';
    }
  }
  out << "flags:";
  for (const auto& f : r.flags) out << ' ' << f;
  out << '\n';
  out << "provenance: " << inline_object(r.provenance) << '\n';
  return out.str();
}

std::string scientific_from_log(double log_value, int digits) {
  if (std::isinf(log_value) && log_value < 0) return "0";
  const double log10_value = log_value / std::numbers::ln10;
  auto exponent = static_cast<long long>(std::floor(log10_value));
  double mantissa = std::pow(10.0, log10_value - static_cast<double>(exponent));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, mantissa);
  // Rounding can carry the mantissa to 10.
  if (std::strtod(buf, nullptr) >= 10.0) {
    mantissa /= 10.0;
    ++exponent;
    std::snprintf(buf, sizeof buf, "%.*f", digits, mantissa);
  }
  char out[96];
  std::snprintf(out, sizeof out, "%se%c%02lld", buf, exponent < 0 ? '-' : '+', exponent < 0 ? -exponent : exponent);
  return out;
}

}  // namespace shatter::cli
