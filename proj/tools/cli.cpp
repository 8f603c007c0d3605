#include "cli.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "fermigas/bose_comparison.hpp"
#include "fermigas/curve.hpp"
#include "fermigas/discrete_oracle.hpp"
#include "fermigas/distributions.hpp"
#include "fermigas/errors.hpp"
#include "fermigas/perturbation.hpp"
#include "fermigas/thermodynamics.hpp"
#include "fermigas/trap_scales.hpp"

namespace fermigas::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

struct OptionSpec {
  std::string key;
  std::string help;
  bool flag = false;
};

struct CommandSpec {
  std::string name;
  std::string help;
  std::vector<OptionSpec> options;
};

const std::vector<OptionSpec> kTGridOptions = {
    {"t-min", "lowest reduced temperature (default 0)"},
    {"t-max", "highest reduced temperature (default 2)"},
    {"steps", "number of grid points (default 200)"},
};

const std::vector<OptionSpec> kTrapOptions = {
    {"preset", "named trap, currently li6-top"},
    {"mass", "atomic mass in kg"},
    {"omega-r", "radial trap frequency in rad/s"},
    {"lambda", "anisotropy omega_z / omega_r"},
    {"n", "number of atoms"},
};

const std::vector<CommandSpec>& commands() {
  static const std::vector<CommandSpec> specs = {
      {"mu-curve", "chemical potential m(t)", kTGridOptions},
      {"heat-curve", "heat capacity per particle c(t)", kTGridOptions},
      {"msd-curve", "mean square size <rho^2>/R_F^2 vs t", kTGridOptions},
      {"profile",
       "spatial or momentum profiles, one block per temperature",
       {{"t", "comma-separated reduced temperatures (default 0,0.25,0.5,0.75,1)"},
        {"points", "samples per profile (default 300)"},
        {"s-max", "largest abscissa (default: 1.5 or the density cutoff if larger)"},
        {"space", "spatial profile n(rho) (default)", true},
        {"momentum", "momentum profile n(k)", true}}},
      {"scales", "characteristic scales of a trap", kTrapOptions},
      {"perturb",
       "linear density response to a small potential change",
       {{"input", "CSV file with header and columns s,dV/E_F covering [0, 1]"},
        {"mean-field", "interaction strength u_int for a one-shot mean-field shift"}}},
      {"bose-compare",
       "Thomas-Fermi Bose cloud in the same trap",
       {{"preset", "named trap, currently li6-top"},
        {"lambda", "anisotropy (default sqrt(8))"},
        {"n", "number of atoms (default 1e5)"},
        {"u-bose", "U = 4 pi a in trap units (default: Pauli pseudopotential)"},
        {"a-scatt", "scattering length in units of sigma_r"}}},
      {"oracle",
       "discrete-spectrum checks of the continuum results",
       {{"n", "number of atoms (default 10000)"},
        {"lambda", "anisotropy (default 1)"},
        {"t", "reduced temperature k_B T / E_F (default 0.2)"},
        {"shells", "closed shells for the central density, lambda = 1 only (default 10,20,40,80)"}}},
      {"validity",
       "local self-consistency of the zero-temperature density",
       {{"n", "number of atoms (default 1e5)"},
        {"lambda", "anisotropy (default sqrt(8))"},
        {"points", "radii on [0, 1.2] (default 121)"}}},
  };
  return specs;
}

const CommandSpec* find_command(std::string_view name) {
  for (const auto& c : commands()) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

// ---- parameter access -------------------------------------------------------

class Params {
 public:
  explicit Params(const std::map<std::string, std::string>& raw) : raw_(raw) {}

  bool has(const std::string& key) const { return raw_.count(key) > 0; }

  std::string text(const std::string& key, const std::string& fallback = {}) const {
    const auto it = raw_.find(key);
    return it == raw_.end() ? fallback : it->second;
  }

  double number(const std::string& key, double fallback) const {
    return has(key) ? parse_number(key, raw_.at(key)) : fallback;
  }

  int count(const std::string& key, int fallback, int minimum) const {
    const double v = number(key, fallback);
    if (v != std::floor(v) || v < minimum || v > 1e7) {
      throw UsageError("--" + key + " must be an integer >= " + std::to_string(minimum));
    }
    return static_cast<int>(v);
  }

  std::vector<double> list(const std::string& key, const std::vector<double>& fallback) const {
    if (!has(key)) return fallback;
    std::vector<double> out;
    std::stringstream ss(raw_.at(key));
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_number(key, trim(item)));
    if (out.empty()) throw UsageError("--" + key + " needs at least one value");
    return out;
  }

  bool flag(const std::string& key) const {
    if (!has(key)) return false;
    const auto v = raw_.at(key);
    if (v == "true" || v == "1" || v.empty()) return true;
    if (v == "false" || v == "0") return false;
    throw UsageError("--" + key + " expects true or false, got '" + v + "'");
  }

 private:
  static double parse_number(const std::string& key, const std::string& text) {
    const std::string t = trim(text);
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE || !std::isfinite(v)) {
      throw UsageError("--" + key + " expects a finite number, got '" + text + "'");
    }
    return v;
  }

  const std::map<std::string, std::string>& raw_;
};

// ---- output assembly --------------------------------------------------------

struct Block {
  std::vector<std::pair<std::string, double>> metadata;
  UniversalCurve curve;
};

std::string render_blocks(const std::vector<Block>& blocks, const std::string& format) {
  for (const auto& b : blocks) validate(b.curve);
  if (format == "csv") {
    std::string out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (i > 0) out += '\n';
      std::vector<std::string> meta;
      for (const auto& [k, v] : blocks[i].metadata) meta.push_back(k + "=" + format_number(v));
      out += to_csv(blocks[i].curve, meta);
    }
    return out;
  }
  auto one = [](const Block& b) {
    auto j = to_json(b.curve);
    if (!b.metadata.empty()) {
      nlohmann::json meta = nlohmann::json::object();
      for (const auto& [k, v] : b.metadata) meta[k] = v;
      j["metadata"] = meta;
    }
    return j;
  };
  nlohmann::json doc;
  if (blocks.size() == 1) {
    doc = one(blocks.front());
  } else {
    doc = nlohmann::json::array();
    for (const auto& b : blocks) doc.push_back(one(b));
  }
  return doc.dump(2) + "\n";
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// Ordered key/value record, optionally followed by tables.
struct Report {
  std::vector<std::pair<std::string, double>> values;
  std::vector<std::string> notes;
  std::vector<std::pair<std::string, Table>> tables;
};

std::string table_csv(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c > 0) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ',';
      out += format_number(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string render_report(const Report& report, const std::string& format) {
  if (format == "csv") {
    std::string out;
    for (const auto& note : report.notes) out += "# warning=" + note + "\n";
    if (!report.values.empty()) {
      out += "quantity,value\n";
      for (const auto& [k, v] : report.values) out += k + "," + format_number(v) + "\n";
    }
    for (const auto& [name, table] : report.tables) {
      if (!out.empty()) out += '\n';
      out += "# table=" + name + "\n" + table_csv(table);
    }
    return out;
  }
  ordered_json doc = ordered_json::object();
  for (const auto& [k, v] : report.values) doc[k] = v;
  if (!report.notes.empty()) doc["warnings"] = report.notes;
  for (const auto& [name, table] : report.tables) {
    ordered_json t = ordered_json::object();
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      ordered_json column = ordered_json::array();
      for (const auto& row : table.rows) column.push_back(row[c]);
      t[table.columns[c]] = column;
    }
    doc[name] = t;
  }
  return doc.dump(2) + "\n";
}

// ---- commands ---------------------------------------------------------------

std::vector<double> t_grid(const Params& p) {
  const double lo = p.number("t-min", 0.0);
  const double hi = p.number("t-max", 2.0);
  const int steps = p.count("steps", 200, 2);
  if (lo < 0.0 || !(hi > lo)) throw UsageError("need 0 <= t-min < t-max");
  return linear_grid(lo, hi, steps);
}

std::string thermo_command(const RunConfig& config, bool heat) {
  const Params p(config.params);
  const auto curves = thermo_curve(t_grid(p));
  return render_blocks({{{}, heat ? curves.heat_capacity : curves.chemical_potential}}, config.format);
}

std::string msd_command(const RunConfig& config) {
  const Params p(config.params);
  UniversalCurve curve{"t", "msd", {}};
  for (double t : t_grid(p)) curve.samples.push_back({t, mean_square_size(t)});
  return render_blocks({{{}, curve}}, config.format);
}

std::string profile_command(const RunConfig& config) {
  const Params p(config.params);
  const auto temps = p.list("t", {0.0, 0.25, 0.5, 0.75, 1.0});
  for (double t : temps) {
    if (t < 0.0) throw UsageError("--t values must be non-negative");
  }
  if (p.flag("space") && p.flag("momentum")) throw UsageError("--space and --momentum are exclusive");
  const auto variable = p.flag("momentum") ? ProfileVariable::Momentum : ProfileVariable::Space;
  const int points = p.count("points", 300, 2);
  double s_max = 1.5;
  for (double t : temps) s_max = std::max(s_max, DensityProfile(t).cutoff());
  s_max = p.number("s-max", s_max);
  if (!(s_max > 0.0)) throw UsageError("--s-max must be positive");
  const auto curves = profile_curves(temps, points, s_max, variable);
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < curves.size(); ++i) blocks.push_back({{{"t", temps[i]}}, curves[i]});
  return render_blocks(blocks, config.format);
}

TrapSpec trap_from(const Params& p) {
  TrapSpec spec;
  const bool from_preset = p.has("preset");
  if (from_preset) {
    const auto named = preset(p.text("preset"));
    if (!named) throw UsageError("unknown preset '" + p.text("preset") + "'");
    spec = *named;
  } else if (!p.has("mass") || !p.has("omega-r") || !p.has("n")) {
    throw UsageError("give --preset or all of --mass, --omega-r and --n");
  }
  spec.mass = p.number("mass", spec.mass);
  spec.omega_r = p.number("omega-r", spec.omega_r);
  spec.lambda = p.number("lambda", spec.lambda);
  const double n = p.number("n", static_cast<double>(spec.n_particles));
  if (n < 1.0 || n != std::floor(n) || n > 1e15) throw UsageError("--n must be a positive integer");
  spec.n_particles = static_cast<std::uint64_t>(n);
  spec.validate();
  return spec;
}

std::string scales_command(const RunConfig& config) {
  const Params p(config.params);
  const auto spec = trap_from(p);
  const auto sc = derive_scales(spec);
  Report r;
  r.values = {
      {"mass_kg", spec.mass},
      {"omega_r_per_s", spec.omega_r},
      {"lambda", sc.lambda},
      {"n_particles", static_cast<double>(sc.n_particles)},
      {"level_spacing_J", sc.level_spacing},
      {"e_fermi_J", sc.e_fermi},
      {"t_fermi_K", sc.t_fermi},
      {"t_fermi_uK", sc.t_fermi * 1e6},
      {"sigma_r_m", sc.sigma_r},
      {"sigma_r_um", sc.sigma_r * 1e6},
      {"r_fermi_m", sc.r_fermi},
      {"r_fermi_um", sc.r_fermi * 1e6},
      {"k_fermi_per_m", sc.k_fermi},
      {"inverse_k_fermi_um", 1e6 / sc.k_fermi},
  };
  return render_report(r, config.format);
}

PerturbationField field_from_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read perturbation file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const auto table = parse_two_column_csv(buffer.str());
  std::vector<double> s, dv;
  for (const auto& [x, y] : table.rows) {
    s.push_back(x);
    dv.push_back(y);
  }
  return PerturbationField::from_table(s, dv);
}

std::string perturb_command(const RunConfig& config) {
  const Params p(config.params);
  if (p.has("input") == p.has("mean-field")) throw UsageError("give exactly one of --input or --mean-field");
  const auto result = p.has("input")
                          ? density_response(field_from_csv(p.text("input")))
                          : mean_field_correction(p.number("mean-field", 0.0));
  UniversalCurve curve{"s", "density", {}};
  for (std::size_t i = 0; i < result.s.size(); ++i) curve.samples.push_back({result.s[i], result.delta_n[i]});
  return render_blocks({{{{"delta_e_fermi", result.delta_e_fermi}}, curve}}, config.format);
}

double slope(const std::function<double(double)>& f) {
  return (std::log(f(1e7)) - std::log(f(1e3))) / (std::log(1e7) - std::log(1e3));
}

std::string bose_command(const RunConfig& config) {
  const Params p(config.params);
  std::optional<TrapSpec> trap;
  if (p.has("preset")) {
    trap = preset(p.text("preset"));
    if (!trap) throw UsageError("unknown preset '" + p.text("preset") + "'");
  }
  const auto base = trap.value_or(li6_top_trap());
  const double lambda = p.number("lambda", base.lambda);
  const double n = p.number("n", static_cast<double>(base.n_particles));
  if (!(lambda > 0.0) || !(n >= 1.0)) throw UsageError("--lambda must be positive and --n at least 1");
  if (p.has("u-bose") && p.has("a-scatt")) throw UsageError("give at most one of --u-bose and --a-scatt");

  BoseParams bose = pauli_equivalent_bose(lambda, n);
  if (p.has("u-bose")) bose.u_bose = p.number("u-bose", 0.0);
  if (p.has("a-scatt")) bose = BoseParams::from_scattering_length(p.number("a-scatt", 0.0), n, lambda);
  bose.validate();

  const auto fermi = trap_unit_scales(lambda, n);
  const auto pauli = pauli_pseudopotential(fermi);
  Report r;
  r.values = {
      {"lambda", lambda},
      {"n_particles", n},
      {"u_bose", bose.u_bose},
      {"a_scatt", bose.scattering_length()},
      {"thomas_fermi_parameter", thomas_fermi_parameter(bose)},
      {"r_bose", bose_radius(bose)},
      {"r_fermi", fermi.r_fermi},
      {"radius_ratio", bose_radius(bose) / fermi.r_fermi},
      {"mu_bose", bose_chemical_potential(bose)},
      {"e_fermi", fermi.e_fermi},
      {"k_bose", bose_momentum_width(bose)},
      {"k_fermi", fermi.k_fermi},
      {"u_eff", pauli.u_eff},
      {"a_eff", pauli.a_eff},
      {"kf_a_eff", pauli.kf_a_eff},
  };
  const double u = bose.u_bose;
  r.values.push_back({"slope_r_fermi", slope([&](double x) { return trap_unit_scales(lambda, x).r_fermi; })});
  r.values.push_back({"slope_r_bose", slope([&](double x) { return bose_radius({u, x, lambda}); })});
  r.values.push_back({"slope_e_fermi", slope([&](double x) { return trap_unit_scales(lambda, x).e_fermi; })});
  r.values.push_back({"slope_mu_bose", slope([&](double x) { return bose_chemical_potential({u, x, lambda}); })});
  if (trap) {
    const auto si = pauli_pseudopotential(derive_scales(TrapSpec{trap->mass, trap->omega_r, lambda,
                                                                 static_cast<std::uint64_t>(n)}));
    r.values.push_back({"a_eff_m", si.a_eff});
  }
  r.notes = diagnostics(bose);
  return render_report(r, config.format);
}

std::string oracle_command(const RunConfig& config) {
  const Params p(config.params);
  const double n = p.number("n", 10000.0);
  const double lambda = p.number("lambda", 1.0);
  const double t = p.number("t", 0.2);
  if (n < 1.0 || n != std::floor(n) || n > 1e9) throw UsageError("--n must be a positive integer");
  if (!(lambda > 0.0) || !(t > 0.0)) throw UsageError("--lambda and --t must be positive");
  const auto count = static_cast<std::uint64_t>(n);
  const double e_fermi = std::cbrt(6.0 * lambda * n);
  const double t_abs = t * e_fermi;
  const double exact = exact_mu(count, lambda, t_abs);
  const double zpe = zero_point_energy(lambda);
  const double continuum = solve_mu(t);

  Report r;
  r.values = {
      {"n_particles", n},
      {"lambda", lambda},
      {"t", t},
      {"t_abs", t_abs},
      {"e_fermi", e_fermi},
      {"exact_mu", exact},
      {"zero_point_energy", zpe},
      {"exact_mu_over_e_fermi", (exact + zpe) / e_fermi},
      {"continuum_mu_over_e_fermi", continuum},
      {"deviation", std::abs((exact + zpe) / e_fermi - continuum)},
  };
  if (lambda == 1.0) {
    Table table{{"n_max", "n_particles", "exact", "semiclassical", "relative_deviation"}, {}};
    for (double shells : p.list("shells", {10, 20, 40, 80})) {
      if (shells < 0.0 || shells != std::floor(shells) || shells > 2000.0) {
        throw UsageError("--shells must be integers in [0, 2000]");
      }
      const auto closed = closed_shell_count(static_cast<std::uint64_t>(shells));
      const double ex = exact_central_density(closed);
      const double sc = semiclassical_central_density(static_cast<double>(closed));
      table.rows.push_back({shells, static_cast<double>(closed), ex, sc, std::abs(ex / sc - 1.0)});
    }
    r.tables.push_back({"central_density", table});
  } else if (p.has("shells")) {
    throw UsageError("--shells needs lambda = 1");
  }
  return render_report(r, config.format);
}

std::string validity_command(const RunConfig& config) {
  const Params p(config.params);
  const double n = p.number("n", 1e5);
  const double lambda = p.number("lambda", std::sqrt(8.0));
  const int points = p.count("points", 121, 2);
  if (!(n > 0.0) || !(lambda > 0.0)) throw UsageError("--n and --lambda must be positive");
  const auto radii = linear_grid(0.0, 1.2, points);
  const auto v = validity_report(n, lambda, radii);
  Report r;
  r.values = {
      {"n_particles", n},
      {"lambda", lambda},
      {"shell_thickness", v.shell_thickness},
      {"inverse_k_fermi", v.inverse_k_fermi},
      {"crossing_distance", v.crossing_distance},
  };
  Table table{{"s", "margin", "cell_scale", "valid"}, {}};
  for (std::size_t i = 0; i < v.s.size(); ++i) {
    table.rows.push_back({v.s[i], v.margin[i], v.cell_scale[i], v.valid[i] ? 1.0 : 0.0});
  }
  r.tables.push_back({"validity", table});
  return render_report(r, config.format);
}

}  // namespace

std::vector<std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::vector<std::string> tokens;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError(path + ":" + std::to_string(line_no) + ": expected key=value");
    }
    tokens.push_back("--" + trim(text.substr(0, eq)) + "=" + trim(text.substr(eq + 1)));
  }
  return tokens;
}

std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out) {
  // Config path first, so its entries can be placed ahead of the matching argv tokens.
  std::optional<std::string> config_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) config_path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) config_path = args[i].substr(9);
  }
  if (!config_path) {
    if (const char* env = std::getenv("FERMIGAS_CONFIG"); env != nullptr && *env != '\0') config_path = env;
  }

  std::vector<std::string> tokens = args;
  if (config_path) {
    std::vector<std::string> global, local;
    for (auto& t : read_config_file(*config_path)) {
      const bool is_global = t.rfind("--format=", 0) == 0 || t.rfind("--output=", 0) == 0;
      (is_global ? global : local).push_back(std::move(t));
    }
    const auto sub = std::find_if(tokens.begin(), tokens.end(),
                                  [](const std::string& t) { return find_command(t) != nullptr; });
    if (sub != tokens.end()) tokens.insert(sub + 1, local.begin(), local.end());
    tokens.insert(tokens.begin(), global.begin(), global.end());
  }

  CLI::App app{"Universal curves of the trapped ideal Fermi gas", "fermigas"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig config;
  std::string config_arg;
  app.add_option("--format", config.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", config.output, "output file (default standard output)");
  app.add_option("--config", config_arg, "key=value file; command-line flags override it");

  std::map<std::string, std::map<std::string, std::string>> storage;
  std::vector<std::pair<CLI::App*, const CommandSpec*>> subs;
  for (const auto& spec : commands()) {
    auto* sub = app.add_subcommand(spec.name, spec.help);
    auto& store = storage[spec.name];
    for (const auto& opt : spec.options) {
      if (opt.flag) {
        sub->add_flag_function("--" + opt.key,
                               [&store, key = opt.key](std::int64_t n) { store[key] = n > 0 ? "true" : "false"; }, opt.help);
      } else {
        sub->add_option("--" + opt.key, store[opt.key], opt.help);
      }
    }
    subs.push_back({sub, &spec});
  }

  std::vector<std::string> reversed(tokens.rbegin(), tokens.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  for (const auto& [sub, spec] : subs) {
    if (!sub->parsed()) continue;
    config.command = spec->name;
    for (const auto& opt : spec->options) {
      if (sub->count("--" + opt.key) > 0) config.params[opt.key] = storage[spec->name][opt.key];
    }
  }
  return config;
}

std::string render(const RunConfig& config) {
  if (config.format != "csv" && config.format != "json") {
    throw UsageError("unknown format '" + config.format + "'");
  }
  const auto* spec = find_command(config.command);
  if (spec == nullptr) throw UsageError("unknown command '" + config.command + "'");
  for (const auto& [key, value] : config.params) {
    const bool known = std::any_of(spec->options.begin(), spec->options.end(),
                                   [&](const OptionSpec& o) { return o.key == key; });
    if (!known) throw UsageError("unknown key '" + key + "' for " + config.command);
  }
  const auto& c = config.command;
  if (c == "mu-curve") return thermo_command(config, false);
  if (c == "heat-curve") return thermo_command(config, true);
  if (c == "msd-curve") return msd_command(config);
  if (c == "profile") return profile_command(config);
  if (c == "scales") return scales_command(config);
  if (c == "perturb") return perturb_command(config);
  if (c == "bose-compare") return bose_command(config);
  if (c == "oracle") return oracle_command(config);
  return validity_command(config);
}

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::string text;
  try {
    text = render(config);
  } catch (const NumericalError& e) {
    err << "fermigas: numerical failure: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    err << "fermigas: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "fermigas: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "fermigas: " << e.what() << "\n";
    return kExitFailure;
  }

  if (config.output.empty()) {
    out << text;
    out.flush();
    return out ? kExitOk : kExitFailure;
  }
  std::ofstream file(config.output, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "fermigas: cannot open '" << config.output << "' for writing\n";
    return kExitFailure;
  }
  file << text;
  file.close();
  if (!file) {
    err << "fermigas: failed writing '" << config.output << "'\n";
    return kExitFailure;
  }
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  std::optional<RunConfig> config;
  try {
    config = parse_args(args, out);
  } catch (const UsageError& e) {
    err << "fermigas: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!config) return kExitOk;
  return dispatch(*config, out, err);
}

}  // namespace fermigas::cli
