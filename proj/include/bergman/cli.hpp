#pragma once

#include <Eigen/Dense>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace bergman {

enum class Command { profile, scaled, limit, verify, theta };
enum class Format { csv, json };

Command parse_command(std::string_view name);
Format parse_format(std::string_view name);

/// MIN:MAX:COUNT[:geo|:lin]. COUNT is the number of subintervals, so the grid
/// has COUNT + 1 points.
struct GridSpec {
  double min = 0.0;
  double max = 1.0;
  int count = 2;
  bool geometric = false;

  static GridSpec parse(std::string_view text);
  Eigen::ArrayXd points() const;
  std::string describe() const;
};

struct RunConfig {
  Command command = Command::profile;
  std::string model = "spindle";
  double a = 1.0;
  std::optional<double> nu;       // model default when unset
  std::optional<int> s;           // a = 1/s through the roots-of-unity formula
  std::optional<int> p;
  std::vector<int> p_list;
  std::optional<GridSpec> grid;
  std::string suite = "bound";    // verify: bound|corollary|b0|two-term (alias amm)|gamma-lemma
  std::optional<double> eta;
  std::optional<double> theta;
  std::string out;                // empty: standard output
  std::optional<Format> format;   // csv for tables, json for reports
};

/// Throws DomainError naming the first violated invariant. Called by run
/// before any computation.
void validate(const RunConfig& config);

/// The artifact text for a validated config. `passed` is cleared when a
/// verification report fails.
std::string render(const RunConfig& config, bool* passed = nullptr);

/// Validates, renders and writes the artifact. Returns 0 on success, 1 when a
/// verification report fails, 2 on invalid input, 3 on numerical failure;
/// diagnostics are a single line on `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// %.17g, with "inf" / "-inf" for infinities.
std::string format_number(double value);

}  // namespace bergman
