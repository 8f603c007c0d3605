#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fermigas::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Bad flags, unknown keys, malformed values or input files.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A fully parsed invocation. Parameter values are kept as the raw strings
/// from the command line or config file and validated by dispatch().
struct RunConfig {
  std::string command;
  std::map<std::string, std::string> params;
  std::string format = "csv";
  std::string output;  // empty: standard output
};

/// Flat `key=value` lines with `#` comments, turned into `--key=value` tokens.
std::vector<std::string> read_config_file(const std::string& path);

/// Parses argv (without the program name) plus the optional config file.
/// Returns nullopt after printing help to `out`. Throws UsageError.
std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out);

/// The complete output document for a config. Throws UsageError for invalid
/// parameters, std::domain_error for inputs outside a model's domain and
/// NumericalError when a computation fails.
std::string render(const RunConfig& config);

/// Renders and writes the output, mapping failures to exit statuses.
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Entry point used by main(). Reads FERMIGAS_CONFIG when --config is absent.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fermigas::cli
