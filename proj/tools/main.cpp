#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "manna/baselines.hpp"
#include "manna/errors.hpp"
#include "manna/io.hpp"
#include "manna/oracle.hpp"
#include "manna/report.hpp"
#include "manna/solve.hpp"
#include "manna/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailedCheck = 1;
constexpr int kExitError = 2;

void print_division(std::ostream& os, const manna::Problem& p,
                    const manna::CompetitiveDivision& d) {
  os << "  budget: " << manna::budget_value(d.budget) << "\n";
  os << "  profile: " << manna::profile_to_string(d.profile) << "\n";
  os << "  prices: " << manna::profile_to_string(d.prices) << "\n";
  os << "  allocation:\n";
  for (size_t i = 0; i < p.num_agents(); ++i)
    os << "    " << p.agents[i] << ": "
       << manna::profile_to_string(d.allocation[i]) << "\n";
}

int cmd_classify(const std::string& file, bool as_json) {
  const manna::Problem p = manna::load_problem(file);
  const manna::Classification cls = manna::classify(p);
  if (as_json) {
    std::cout << manna::classification_to_json(cls);
    return kExitOk;
  }
  std::cout << manna::to_string(cls.kind) << "\n";
  std::cout << "value: " << (cls.lpValue ? cls.lpValue->str() : "infeasible")
            << "\n";
  return kExitOk;
}

int cmd_solve(const std::string& file, const std::string& rule, bool as_json) {
  const manna::Problem p = manna::load_problem(file);
  if (rule == "fs" || rule == "er") {
    const manna::UtilityProfile profile = rule == "fs"
                                              ? manna::fair_share(p)
                                              : manna::egalitarian(p).profile;
    if (as_json) {
      json doc;
      doc["rule"] = rule;
      doc["profile"] = json::parse(
          "[]");
      for (const auto& u : profile) doc["profile"].push_back(u.str());
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << "rule: " << rule << "\n";
      std::cout << "profile: " << manna::profile_to_string(profile) << "\n";
    }
    return kExitOk;
  }
  const manna::CompetitiveSolution sol = manna::solve_competitive(p);
  if (as_json) {
    json doc;
    doc["rule"] = "cr";
    doc["classification"] = manna::to_string(sol.classification.kind);
    doc["divisions"] = json::array();
    for (const auto& d : sol.divisions)
      doc["divisions"].push_back(json::parse(manna::division_to_json(p, d)));
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "classification: " << manna::to_string(sol.classification.kind)
            << "\n";
  std::cout << "divisions: " << sol.divisions.size() << "\n";
  for (size_t k = 0; k < sol.divisions.size(); ++k) {
    std::cout << "division " << k + 1 << ":\n";
    print_division(std::cout, p, sol.divisions[k]);
  }
  return kExitOk;
}

int cmd_verify(const std::string& problem_file, const std::string& division_file,
               bool as_json) {
  const manna::Problem p = manna::load_problem(problem_file);
  const manna::CompetitiveDivision d =
      manna::load_division(division_file, p);
  const manna::Kind kind = manna::classify(p).kind;
  const manna::VerificationReport report = manna::verify_division(p, d, kind);
  if (as_json) {
    std::cout << manna::report_to_json(report);
  } else {
    for (const auto& [name, r] : report.entries()) {
      std::cout << name << ": " << (r->pass ? "pass" : "FAIL") << "\n";
      if (!r->pass) std::cout << "  " << r->witness << "\n";
    }
    std::cout << "result: " << (report.all_pass() ? "pass" : "fail") << "\n";
  }
  return report.all_pass() ? kExitOk : kExitFailedCheck;
}

int cmd_sweep(const std::string& file, const std::string& column,
              const std::string& values, bool as_json) {
  const manna::Problem base = manna::load_problem(file);
  size_t col = base.num_items();
  for (size_t a = 0; a < base.num_items(); ++a)
    if (base.items[a] == column) col = a;
  if (col == base.num_items())
    throw manna::InputError("no item named '" + column + "'");

  std::vector<manna::Rat> vals;
  std::stringstream ss(values);
  std::string tok;
  while (std::getline(ss, tok, ',')) vals.push_back(manna::Rat::parse(tok));
  if (vals.empty()) throw manna::InputError("sweep needs at least one value");

  json rows = json::array();
  std::vector<size_t> counts;
  for (const manna::Rat& v : vals) {
    manna::Problem p = base;
    for (size_t i = 0; i < p.num_agents(); ++i) p.u[i][col] = v;
    json row;
    row["value"] = v.str();
    try {
      const manna::CompetitiveSolution sol = manna::solve_competitive(p);
      row["kind"] = manna::to_string(sol.classification.kind);
      row["count"] = sol.divisions.size();
      counts.push_back(sol.divisions.size());
      row["profiles"] = json::array();
      bool ambiguous = false;
      for (const auto& d : sol.divisions) {
        json prof = json::array();
        for (const auto& u : d.profile) prof.push_back(u.str());
        row["profiles"].push_back(prof);
        if (manna::allocation_ambiguous(p, d.profile)) ambiguous = true;
      }
      row["allocationsUnique"] = !ambiguous;
      if (!as_json) {
        std::cout << column << "=" << v << ": " << row["kind"].get<std::string>()
                  << ", divisions=" << sol.divisions.size() << ", profiles=";
        for (size_t k = 0; k < sol.divisions.size(); ++k) {
          if (k) std::cout << " ";
          std::cout << "("
                    << manna::profile_to_string(sol.divisions[k].profile)
                    << ")";
        }
        if (ambiguous) std::cout << " [multiple allocations per profile]";
        std::cout << "\n";
      }
    } catch (const std::exception& e) {
      row["error"] = e.what();
      if (!as_json)
        std::cout << column << "=" << v << ": error: " << e.what() << "\n";
    }
    rows.push_back(row);
  }
  std::sort(counts.begin(), counts.end());
  if (as_json) {
    json doc;
    doc["rows"] = rows;
    doc["counts"] = counts;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "counts:";
    for (size_t c : counts) std::cout << " " << c;
    std::cout << "\n";
    std::cout << "distinct counts:";
    for (size_t k = 0; k < counts.size(); ++k)
      if (k == 0 || counts[k] != counts[k - 1]) std::cout << " " << counts[k];
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_oracle(const std::string& file, int resolution,
               const std::string& tolerance, bool as_json) {
  const manna::Problem p = manna::load_problem(file);
  manna::GridSpec spec;
  spec.resolution = resolution;
  spec.tolerance = manna::Rat::parse(tolerance);
  const auto clusters = manna::grid_critical_points(p, spec);
  if (as_json) {
    json doc;
    doc["clusters"] = clusters;
    doc["count"] = clusters.size();
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "clusters: " << clusters.size() << "\n";
  std::cout.precision(9);
  for (const auto& c : clusters) {
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) std::cout << " ";
      std::cout << c[i];
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_random(int agents, int items, std::uint64_t seed, double mix) {
  std::cout << manna::problem_to_json(
      manna::random_problem(agents, items, seed, mix));
  return kExitOk;
}

int cmd_report(const std::string& file, const std::string& format) {
  const manna::Problem p = manna::load_problem(file);
  if (format == "csv")
    std::cout << manna::report_csv(p);
  else
    std::cout << manna::report_svg(p);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "manna: exact competitive division of mixed goods and bads"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable JSON output");

  std::string file, division_file, rule = "cr", format = "csv";
  std::string column, values = "4,3,2,1,0,-1,-2,-3", tolerance = "1/1000000";
  int resolution = 200, agents = 3, items = 4;
  std::uint64_t seed = 0;
  double mix = 0.5;

  auto* classify = app.add_subcommand("classify",
                                      "positive / negative / null");
  classify->add_option("file", file, "problem JSON file")->required();

  auto* solve = app.add_subcommand("solve", "compute divisions");
  solve->add_option("file", file, "problem JSON file")->required();
  solve->add_option("--rule", rule, "cr, er or fs")
      ->check(CLI::IsMember({"cr", "er", "fs"}));

  auto* verify = app.add_subcommand("verify", "check a division");
  verify->add_option("problem", file, "problem JSON file")->required();
  verify->add_option("division", division_file, "division JSON file")
      ->required();

  auto* sweep = app.add_subcommand("sweep", "parametric column sweep");
  sweep->add_option("file", file, "base problem JSON file")->required();
  sweep->add_option("--column", column, "item whose utilities are replaced")
      ->required();
  sweep->add_option("--values", values, "comma-separated rationals");

  auto* oracle = app.add_subcommand("oracle",
                                    "approximate critical-point search");
  oracle->add_option("file", file, "problem JSON file")->required();
  oracle->add_option("--resolution", resolution, "weight grid subdivisions");
  oracle->add_option("--tolerance", tolerance, "matching tolerance (rational)");

  auto* random = app.add_subcommand("random", "emit a random problem");
  random->add_option("--agents", agents, "number of agents");
  random->add_option("--items", items, "number of items");
  random->add_option("--seed", seed, "generator seed");
  random->add_option("--mix", mix, "fraction of all-negative columns");

  auto* report = app.add_subcommand("report", "frontier and profile points");
  report->add_option("file", file, "problem JSON file")->required();
  report->add_option("--format", format, "csv or svg")
      ->check(CLI::IsMember({"csv", "svg"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(classify)) return cmd_classify(file, as_json);
    if (app.got_subcommand(solve)) return cmd_solve(file, rule, as_json);
    if (app.got_subcommand(verify))
      return cmd_verify(file, division_file, as_json);
    if (app.got_subcommand(sweep))
      return cmd_sweep(file, column, values, as_json);
    if (app.got_subcommand(oracle))
      return cmd_oracle(file, resolution, tolerance, as_json);
    if (app.got_subcommand(random))
      return cmd_random(agents, items, seed, mix);
    if (app.got_subcommand(report)) return cmd_report(file, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
