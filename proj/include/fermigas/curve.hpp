#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace fermigas {

/// A sampled universal curve, the serialisation unit for every tabulated result.
/// Labels come from a fixed vocabulary: t, s, q, m, c, msd, density.
struct UniversalCurve {
  std::string x_label;
  std::string y_label;
  std::vector<std::array<double, 2>> samples;
};

bool is_curve_label(std::string_view label);

/// Throws std::invalid_argument for unknown labels, an empty sample list,
/// non-finite values or abscissae that are not strictly increasing.
void validate(const UniversalCurve& curve);

/// Shortest text that the C library formats with 17 significant digits.
std::string format_number(double value);

/// Header row `x_label,y_label`, then one `x,y` line per sample, LF endings.
/// Each metadata entry is written first as a `# entry` comment line.
std::string to_csv(const UniversalCurve& curve, const std::vector<std::string>& metadata = {});

/// {"x_label": ..., "y_label": ..., "samples": [[x, y], ...]}
nlohmann::json to_json(const UniversalCurve& curve);

/// Two-column numeric table with a header row. Lines starting with '#' and
/// blank lines are skipped. Throws std::invalid_argument on malformed input.
struct CsvTable {
  std::string x_label;
  std::string y_label;
  std::vector<std::array<double, 2>> rows;
};
CsvTable parse_two_column_csv(std::string_view text);

/// parse_two_column_csv followed by validate().
UniversalCurve parse_curve_csv(std::string_view text);

}  // namespace fermigas
