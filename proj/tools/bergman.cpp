#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bergman/cli.hpp"
#include "bergman/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Bergman kernels of singular metrics on punctured Riemann surfaces"};
  app.require_subcommand(1, 1);

  bergman::RunConfig config;
  std::string grid;
  std::string format;
  std::optional<double> nu, eta, theta;
  std::optional<int> s, p;

  const char* commands[] = {"profile", "scaled", "limit", "verify", "theta"};
  const char* help[] = {"kernel density P_p on a radius grid",
                        "rescaled profile F_p(y) = P_p(r)/p with r^{2a} = a y / p",
                        "Mittag-Leffler limit of the rescaled profile",
                        "verification report (JSON)",
                        "theta_p = j_p - p nu for the pole spindle"};
  for (int i = 0; i < 5; ++i) {
    CLI::App* sub = app.add_subcommand(commands[i], help[i]);
    sub->add_option("--model", config.model, "spindle|spindle-pole|poincare-disc|fubini-study|log-singular-demo");
    sub->add_option("--a", config.a, "cone order, 0 < a <= 1");
    sub->add_option("--nu", nu, "flux / pole coefficient");
    sub->add_option("--s", s, "use a = 1/s and the roots-of-unity formula");
    sub->add_option("--p", p, "tensor power");
    sub->add_option("--p-list", config.p_list, "comma separated powers")->delimiter(',');
    sub->add_option("--grid", grid, "MIN:MAX:COUNT[:geo]");
    sub->add_option("--eta", eta, "corollary exponent in [0, 1]");
    sub->add_option("--theta", theta, "limit point of theta_p for the pole limit");
    sub->add_option("--out", config.out, "output path (default stdout)");
    sub->add_option("--format", format, "csv|json");
    if (std::string(commands[i]) == "verify") {
      sub->add_option("--suite", config.suite, "bound|corollary|b0|two-term|gamma-lemma");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    config.command = bergman::parse_command(app.get_subcommands().front()->get_name());
    if (!grid.empty()) config.grid = bergman::GridSpec::parse(grid);
    if (!format.empty()) config.format = bergman::parse_format(format);
  } catch (const bergman::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  config.nu = nu;
  config.eta = eta;
  config.theta = theta;
  config.s = s;
  config.p = p;
  return bergman::run(config, std::cout, std::cerr);
}
