#include "fermigas/curve.hpp"

#include <array>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace fermigas {
namespace {

constexpr std::array<std::string_view, 7> kLabels = {"t", "s", "q", "m", "c", "msd", "density"};

std::string_view trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r");
  return text.substr(first, last - first + 1);
}

double parse_double(std::string_view field, std::size_t line_no) {
  const std::string buffer(trim(field));
  errno = 0;
  char* end = nullptr;
  const double value = std::strtod(buffer.c_str(), &end);
  if (buffer.empty() || errno != 0 || end != buffer.c_str() + buffer.size()) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": not a number: '" +
                                buffer + "'");
  }
  return value;
}

}  // namespace

bool is_curve_label(std::string_view label) {
  for (auto known : kLabels) {
    if (label == known) return true;
  }
  return false;
}

void validate(const UniversalCurve& curve) {
  if (!is_curve_label(curve.x_label) || !is_curve_label(curve.y_label)) {
    throw std::invalid_argument("unknown curve label '" + curve.x_label + "' / '" +
                                curve.y_label + "'");
  }
  if (curve.samples.empty()) throw std::invalid_argument("curve has no samples");
  for (std::size_t i = 0; i < curve.samples.size(); ++i) {
    const auto [x, y] = curve.samples[i];
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw std::invalid_argument("curve sample " + std::to_string(i) + " is not finite");
    }
    if (i > 0 && !(x > curve.samples[i - 1][0])) {
      throw std::invalid_argument("curve abscissa is not strictly increasing at sample " +
                                  std::to_string(i));
    }
  }
}

std::string format_number(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

std::string to_csv(const UniversalCurve& curve, const std::vector<std::string>& metadata) {
  validate(curve);
  std::string out;
  for (const auto& entry : metadata) out += "# " + entry + "\n";
  out += curve.x_label + "," + curve.y_label + "\n";
  for (const auto& [x, y] : curve.samples) {
    out += format_number(x);
    out += ',';
    out += format_number(y);
    out += '\n';
  }
  return out;
}

nlohmann::json to_json(const UniversalCurve& curve) {
  validate(curve);
  nlohmann::json samples = nlohmann::json::array();
  for (const auto& [x, y] : curve.samples) samples.push_back({x, y});
  return {{"x_label", curve.x_label}, {"y_label", curve.y_label}, {"samples", samples}};
}

CsvTable parse_two_column_csv(std::string_view text) {
  CsvTable table;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto next = text.find('\n', pos);
    const auto line = trim(text.substr(pos, next == std::string_view::npos ? text.npos : next - pos));
    pos = (next == std::string_view::npos) ? text.size() + 1 : next + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected two columns");
    }
    if (!have_header) {
      table.x_label = std::string(trim(line.substr(0, comma)));
      table.y_label = std::string(trim(line.substr(comma + 1)));
      have_header = true;
      continue;
    }
    table.rows.push_back({parse_double(line.substr(0, comma), line_no),
                          parse_double(line.substr(comma + 1), line_no)});
  }
  if (!have_header) throw std::invalid_argument("CSV input has no header row");
  return table;
}

UniversalCurve parse_curve_csv(std::string_view text) {
  auto table = parse_two_column_csv(text);
  UniversalCurve curve{std::move(table.x_label), std::move(table.y_label), std::move(table.rows)};
  validate(curve);
  return curve;
}

}  // namespace fermigas
