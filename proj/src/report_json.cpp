#include "bergman/report_json.hpp"

#include <cmath>
#include <limits>

#include "json.hpp"

namespace bergman {
namespace {

using Json = nlohmann::ordered_json;

Json number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return value;
}

double number(const Json& value) {
  if (value.is_string()) {
    const auto text = value.get<std::string>();
    if (text == "inf") return std::numeric_limits<double>::infinity();
    if (text == "-inf") return -std::numeric_limits<double>::infinity();
    if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
    throw DomainError("report JSON: unexpected numeric string '" + text + "'");
  }
  return value.get<double>();
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw DomainError(std::string("report JSON: ") + e.what());
  }
}

}  // namespace

std::string to_json(const BoundReport& report) {
  Json doc;
  doc["model"] = report.model;
  doc["exponents"] = {{"alpha", number(report.alpha)},
                      {"beta", number(report.beta)},
                      {"delta", number(report.delta)}};
  doc["grid"] = report.grid;
  doc["fitted_constant"] = number(report.fitted_constant);
  doc["stability_ratio"] = number(report.stability_ratio);
  doc["pass"] = report.pass;
  return doc.dump(2) + "\n";
}

BoundReport parse_bound_report(std::string_view text) {
  const Json doc = parse(text);
  try {
    BoundReport report;
    report.model = doc.at("model").get<std::string>();
    report.alpha = number(doc.at("exponents").at("alpha"));
    report.beta = number(doc.at("exponents").at("beta"));
    report.delta = number(doc.at("exponents").at("delta"));
    report.grid = doc.at("grid").get<std::string>();
    report.fitted_constant = number(doc.at("fitted_constant"));
    report.stability_ratio = number(doc.at("stability_ratio"));
    report.pass = doc.at("pass").get<bool>();
    return report;
  } catch (const Json::exception& e) {
    throw DomainError(std::string("bound report JSON: ") + e.what());
  }
}

std::string to_json(const CheckReport& report) {
  Json doc;
  doc["model"] = report.model;
  doc["suite"] = report.suite;
  doc["grid"] = report.grid;
  Json metrics = Json::object();
  for (const auto& [name, value] : report.metrics) metrics[name] = number(value);
  doc["metrics"] = metrics;
  doc["pass"] = report.pass;
  return doc.dump(2) + "\n";
}

CheckReport parse_check_report(std::string_view text) {
  const Json doc = parse(text);
  try {
    CheckReport report;
    report.model = doc.at("model").get<std::string>();
    report.suite = doc.at("suite").get<std::string>();
    report.grid = doc.at("grid").get<std::string>();
    for (const auto& [name, value] : doc.at("metrics").items()) {
      report.metrics[name] = number(value);
    }
    report.pass = doc.at("pass").get<bool>();
    return report;
  } catch (const Json::exception& e) {
    throw DomainError(std::string("check report JSON: ") + e.what());
  }
}

}  // namespace bergman
