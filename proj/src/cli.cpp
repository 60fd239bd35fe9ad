#include "bergman/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "bergman/errors.hpp"
#include "bergman/kernel.hpp"
#include "bergman/models.hpp"
#include "bergman/report_json.hpp"
#include "bergman/scaling.hpp"
#include "bergman/verify.hpp"

namespace bergman {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

std::string render_csv(const Table& table) {
  std::string text;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    text += (i ? "," : "") + table.columns[i];
  }
  text += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) text += ',';
      text += format_number(row[i]);
    }
    text += '\n';
  }
  return text;
}

std::string json_number(double value) {
  if (std::isinf(value)) return value > 0 ? "\"inf\"" : "\"-inf\"";
  return format_number(value);
}

std::string render_json(const Table& table) {
  std::string text = "{\n  \"columns\": [";
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    text += (i ? ", \"" : "\"") + table.columns[i] + "\"";
  }
  text += "],\n  \"rows\": [";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    text += r ? ",\n    [" : "\n    [";
    for (std::size_t i = 0; i < table.rows[r].size(); ++i) {
      if (i) text += ", ";
      text += json_number(table.rows[r][i]);
    }
    text += "]";
  }
  text += table.rows.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return text;
}

double parse_double(std::string_view text, const char* what) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw DomainError(std::string("grid: cannot parse ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

bool is_pole(const RunConfig& config) { return config.model == "spindle-pole"; }

double nu_of(const RunConfig& config) {
  if (config.nu) return *config.nu;
  if (config.model == "spindle-pole" || config.model == "log-singular-demo") return 0.5;
  return 0.0;
}

SpindleParams params_of(const RunConfig& config) {
  return {config.s ? 1.0 / *config.s : config.a, nu_of(config)};
}

std::vector<int> powers(const RunConfig& config, std::vector<int> fallback) {
  if (!config.p_list.empty()) return config.p_list;
  if (config.p) return {*config.p};
  return fallback;
}

RadialGrid radial_grid(const RunConfig& config, const RadialModel& model) {
  if (!config.grid) return {0.05, model.chart_radius, 40, true};
  return {config.grid->min, config.grid->max, config.grid->count, config.grid->geometric};
}

Table profile_table(const RunConfig& config) {
  const Eigen::ArrayXd radius = config.grid->points();
  Table table{{"r", "P_p"}, {}};
  const int p = *config.p;
  if (config.s) {
    for (double r : radius) table.rows.push_back({r, spindle_kernel_closed(*config.s, p, r)});
    return table;
  }
  const KernelProfile profile = kernel_profile(make_model(config.model, params_of(config)), p, radius);
  for (Eigen::Index i = 0; i < radius.size(); ++i) {
    table.rows.push_back({radius(i), profile.value(i)});
  }
  return table;
}

Table scaled_table(const RunConfig& config) {
  const Eigen::ArrayXd y = config.grid->points();
  const ScaledProfile profile = scaled_profile(params_of(config), *config.p, y,
                                               is_pole(config) ? Variant::pole : Variant::flux);
  Table table{{"y", "F_p"}, {}};
  for (Eigen::Index i = 0; i < y.size(); ++i) table.rows.push_back({y(i), profile.value(i)});
  return table;
}

Table limit_table(const RunConfig& config) {
  const SpindleParams params = params_of(config);
  Table table{{"y", "F_limit"}, {}};
  for (double y : config.grid->points()) {
    double value = 0.0;
    try {
      value = is_pole(config) ? pole_limit_profile(params, *config.theta, y)
                              : limit_profile(params, y);
    } catch (const DomainError&) {
      if (y != 0.0) throw;
      value = kInf;  // negative exponent at y = 0
    }
    table.rows.push_back({y, value});
  }
  return table;
}

Table theta_table(const RunConfig& config) {
  std::vector<int> fallback(100);
  std::iota(fallback.begin(), fallback.end(), 1);
  Table table{{"p", "theta"}, {}};
  for (int p : powers(config, fallback)) {
    table.rows.push_back({static_cast<double>(p), theta_sequence(params_of(config), p)});
  }
  return table;
}

std::string verify_report(const RunConfig& config, bool& passed) {
  const std::vector<int> doubling = doubling_set(6, 11);
  if (config.suite == "gamma-lemma") {
    const Eigen::ArrayXd r = config.grid ? config.grid->points() : linear_grid(0.0, 10.0, 199);
    const CheckReport report = gamma_lemma_check(r, linear_grid(1.0, 100.0, 199));
    passed = report.pass;
    return to_json(report);
  }
  const RadialModel model = make_model(config.model, params_of(config));
  if (config.suite == "bound") {
    const BoundReport report = bound_check(model, powers(config, doubling), radial_grid(config, model));
    passed = report.pass;
    return to_json(report);
  }
  if (config.suite == "corollary") {
    const BoundReport report =
        corollary_check(model, config.eta.value_or(0.5), powers(config, doubling));
    passed = report.pass;
    return to_json(report);
  }
  if (config.suite == "b0") {
    const std::vector<int> p_set = powers(config, doubling);
    CheckReport merged;
    merged.model = model.name;
    merged.suite = "b0";
    merged.pass = true;
    const Eigen::ArrayXd radii =
        config.grid ? config.grid->points() : linear_grid(0.5 * model.chart_radius, model.chart_radius, 2);
    std::ostringstream desc;
    desc.precision(17);
    desc << "r=" << (config.grid ? config.grid->describe() : "lin[R/2,R]x2") << "; p={";
    for (std::size_t i = 0; i < p_set.size(); ++i) desc << (i ? "," : "") << p_set[i];
    desc << "}";
    merged.grid = desc.str();
    for (double r : radii) {
      const CheckReport one = b0_check(model, r, p_set);
      merged.pass = merged.pass && one.pass;
      for (const auto& [name, gap] : one.metrics) {
        auto [it, fresh] = merged.metrics.emplace(name, gap);
        if (!fresh) it->second = std::max(it->second, gap);
      }
    }
    passed = merged.pass;
    return to_json(merged);
  }
  // two-term
  std::vector<double> radii = {0.2, 0.3, 0.5};
  if (config.grid) {
    const Eigen::ArrayXd points = config.grid->points();
    radii.assign(points.begin(), points.end());
  }
  const CheckReport report = two_term_check(model, config.p.value_or(60), radii);
  passed = report.pass;
  return to_json(report);
}

void require_grid(const RunConfig& config) {
  if (!config.grid) throw DomainError("--grid MIN:MAX:COUNT is required for this command");
}

void require_p(const RunConfig& config) {
  if (!config.p) throw DomainError("--p is required for this command");
}

void require_spindle_family(const RunConfig& config) {
  if (config.model != "spindle" && config.model != "spindle-pole") {
    throw DomainError("this command needs --model spindle or spindle-pole (got '" + config.model + "')");
  }
}

}  // namespace

Command parse_command(std::string_view name) {
  if (name == "profile") return Command::profile;
  if (name == "scaled") return Command::scaled;
  if (name == "limit") return Command::limit;
  if (name == "verify") return Command::verify;
  if (name == "theta") return Command::theta;
  throw DomainError("unknown command '" + std::string(name) + "'");
}

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw DomainError("--format must be csv or json (got '" + std::string(name) + "')");
}

GridSpec GridSpec::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = text.find(':', start);
    parts.push_back(text.substr(start, colon == std::string_view::npos ? colon : colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() < 3 || parts.size() > 4) {
    throw DomainError("grid: expected MIN:MAX:COUNT[:geo] (got '" + std::string(text) + "')");
  }
  GridSpec grid;
  grid.min = parse_double(parts[0], "MIN");
  grid.max = parse_double(parts[1], "MAX");
  const double count = parse_double(parts[2], "COUNT");
  if (count != std::floor(count) || count < 0 || count > 1e7) {
    throw DomainError("grid: COUNT must be a nonnegative integer");
  }
  grid.count = static_cast<int>(count);
  if (parts.size() == 4) {
    if (parts[3] == "geo") {
      grid.geometric = true;
    } else if (parts[3] != "lin") {
      throw DomainError("grid: spacing must be geo or lin (got '" + std::string(parts[3]) + "')");
    }
  }
  if (!(grid.min < grid.max)) throw DomainError("grid: requires MIN < MAX");
  if (grid.count < 2) throw DomainError("grid: requires COUNT >= 2");
  if (grid.geometric && !(grid.min > 0.0)) throw DomainError("grid: geometric spacing requires MIN > 0");
  return grid;
}

Eigen::ArrayXd GridSpec::points() const {
  return geometric ? geometric_grid(min, max, count) : linear_grid(min, max, count);
}

std::string GridSpec::describe() const {
  return format_number(min) + ":" + format_number(max) + ":" + std::to_string(count) +
         (geometric ? ":geo" : "");
}

std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

void validate(const RunConfig& config) {
  const auto& names = model_names();
  if (std::find(names.begin(), names.end(), config.model) == names.end()) {
    throw DomainError("unknown model '" + config.model + "'");
  }
  if (config.s) {
    if (*config.s < 1) throw DomainError("--s must be a positive integer");
    if (config.model != "spindle") throw DomainError("--s applies to --model spindle only");
    if (nu_of(config) != 0.0) throw DomainError("--s requires nu = 0");
  }
  if (config.p && *config.p < 1) throw DomainError("--p must be a positive integer");
  for (int p : config.p_list) {
    if (p < 1) throw DomainError("--p-list entries must be positive integers");
  }
  if (config.grid) {
    const GridSpec& g = *config.grid;
    if (!(g.min < g.max) || g.count < 2) throw DomainError("grid: requires MIN < MAX and COUNT >= 2");
    if (!(g.min >= 0.0)) throw DomainError("grid: requires MIN >= 0");
    if (g.geometric && !(g.min > 0.0)) throw DomainError("grid: geometric spacing requires MIN > 0");
  }
  if (config.eta && !(*config.eta >= 0.0 && *config.eta <= 1.0)) {
    throw DomainError("--eta must lie in [0, 1]");
  }

  const SpindleParams params = params_of(config);
  const bool flux_model = config.model == "spindle" || config.model == "spindle-pole";
  if (flux_model) validate_spindle(params, is_pole(config));
  if (config.model == "log-singular-demo" && !(params.nu > 0.0 && params.nu < 1.0)) {
    throw DomainError("log-singular-demo requires 0 < nu < 1");
  }
  const RadialModel model = make_model(config.model, params);

  switch (config.command) {
    case Command::profile:
      require_p(config);
      require_grid(config);
      if (!(config.grid->max < model.r_max)) {
        throw DomainError("grid: MAX must lie inside the model domain (r < " +
                          format_number(model.r_max) + ")");
      }
      break;
    case Command::scaled:
      require_spindle_family(config);
      require_p(config);
      require_grid(config);
      break;
    case Command::limit:
      require_spindle_family(config);
      require_grid(config);
      if (is_pole(config)) {
        if (!config.theta) throw DomainError("limit --model spindle-pole needs --theta");
        if (!(params.nu < 1.0)) throw DomainError("pole limit requires nu < 1");
        if (!(*config.theta >= -params.a && *config.theta <= 1.0 - params.a)) {
          throw DomainError("--theta must lie in [-a, 1-a]");
        }
      }
      break;
    case Command::theta:
      if (!is_pole(config)) throw DomainError("theta needs --model spindle-pole");
      break;
    case Command::verify: {
      if (config.format == Format::csv) throw DomainError("verify emits JSON reports; use --format json");
      const std::string& suite = config.suite;
      if (suite != "bound" && suite != "corollary" && suite != "b0" && suite != "two-term" &&
          suite != "amm" && suite != "gamma-lemma") {
        throw DomainError("unknown suite '" + suite + "' (bound|corollary|b0|two-term|gamma-lemma)");
      }
      if ((suite == "two-term" || suite == "amm") && config.model != "poincare-disc") {
        throw DomainError("the two-term suite needs --model poincare-disc");
      }
      if (suite == "b0" && config.p_list.size() == 1) {
        throw DomainError("the b0 suite needs at least two powers in --p-list");
      }
      if (suite != "gamma-lemma" && config.grid) {
        if (!(config.grid->min > model.r_min) || !(config.grid->max <= model.chart_radius)) {
          throw DomainError("grid: radii must lie in (0, " + format_number(model.chart_radius) + "]");
        }
      }
      break;
    }
  }
}

std::string render(const RunConfig& config, bool* passed) {
  if (passed) *passed = true;
  const Format format = config.format.value_or(config.command == Command::verify ? Format::json
                                                                                  : Format::csv);
  Table table;
  switch (config.command) {
    case Command::profile: table = profile_table(config); break;
    case Command::scaled: table = scaled_table(config); break;
    case Command::limit: table = limit_table(config); break;
    case Command::theta: table = theta_table(config); break;
    case Command::verify: {
      bool ok = true;
      std::string text = verify_report(config, ok);
      if (passed) *passed = ok;
      return text;
    }
  }
  return format == Format::csv ? render_csv(table) : render_json(table);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::string text;
  bool passed = true;
  try {
    validate(config);
    text = render(config, &passed);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: numerical failure: " << e.what() << '\n';
    return 3;
  }
  if (config.out.empty()) {
    out << text;
    out.flush();
  } else {
    std::ofstream file(config.out, std::ios::binary);
    file << text;
    if (!file) {
      err << "error: cannot write '" << config.out << "'\n";
      return 2;
    }
  }
  return passed ? 0 : 1;
}

}  // namespace bergman
