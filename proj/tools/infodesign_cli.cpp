// infodesign command-line front end: scenario JSON in, results on stdout,
// diagnostics on stderr. Exit codes: 0 ok, 2 bad input, 3 numerical failure.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "infodesign/json_io.hpp"
#include "infodesign/oracle.hpp"

namespace id = infodesign;
using id::json;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open " + path + " for writing");
  out << text;
}

// Beliefs come either verbatim ("beliefs": [[lo,hi],...]) or via the
// population/cost/goal pipeline.
std::vector<id::Interval> beliefs_from_scenario(const json& j, const id::Prior& prior) {
  if (j.contains("beliefs")) {
    std::vector<id::Interval> out;
    for (const auto& iv : j.at("beliefs")) {
      out.push_back({iv.at(0).get<double>(), iv.at(1).get<double>()});
    }
    return out;
  }
  id::Population pop = id::population_from_json(j.at("population"));
  id::CostModel cost = id::cost_from_json(j.at("cost"));
  id::GoalSpec goal = id::goal_from_json(j.at("goal"));
  return id::belief_preimage(pop, cost, id::intersect(pop, goal), prior.high());
}

int cmd_design_stateless(const std::string& scenario_path, const std::string& out_path) {
  json j = load_json(scenario_path);
  id::Prior prior = id::prior_from_json(j.at("prior"));
  std::vector<id::Interval> beliefs = beliefs_from_scenario(j, prior);
  if (beliefs.empty()) {
    std::cerr << "warning: desirable set unreachable, no belief intervals\n";
  }
  id::StatelessDesign d = id::design(prior, beliefs);
  std::cout << "regime " << id::regime_name(d.label.regime) << "\n";
  std::cout << "V* " << d.value << "\n";
  json out = id::mechanism_to_json(d.mechanism, d.direct);
  out["regime"] = id::regime_name(d.label.regime);
  out["value"] = d.value;
  if (!out_path.empty()) {
    write_text(out_path, out.dump(2) + "\n");
  } else {
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

int cmd_design_stateful(const std::string& scenario_path, const std::string& weights_csv,
                        const std::string& out_path) {
  json j = load_json(scenario_path);
  id::StatefulScenario s = id::stateful_scenario_from_json(j);
  id::StatefulDesign d;
  if (!weights_csv.empty()) {
    std::vector<double> w;
    std::stringstream ss(weights_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) w.push_back(std::stod(tok));
    d = id::design_weighted(s, w);
  } else {
    d = id::design_stateful(s);
  }
  std::cout << "V* " << d.value << "\n";
  std::cout << "V_j";
  for (double v : d.conditionals) std::cout << " " << v;
  std::cout << "\n";
  json out = id::stateful_design_to_json(d);
  if (!out_path.empty()) {
    write_text(out_path, out.dump(2) + "\n");
  } else {
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

int cmd_evaluate(const std::string& scenario_path, const std::string& mechanism_path) {
  json j = load_json(scenario_path);
  if (j.contains("states")) {
    id::StatefulScenario s = id::stateful_scenario_from_json(j);
    json m = load_json(mechanism_path);
    auto kernel = m.at("g").get<std::vector<std::vector<double>>>();
    id::EvaluationReport rep = id::evaluate_stateful_mech(kernel, s);
    std::cout << "V " << rep.value << "\n";
    std::cout << "V_j";
    for (double v : rep.conditionals) std::cout << " " << v;
    std::cout << "\n";
    return 0;
  }
  id::Prior prior = id::prior_from_json(j.at("prior"));
  std::vector<id::Interval> beliefs = beliefs_from_scenario(j, prior);
  id::SignallingMechanism mech = id::mechanism_from_json(load_json(mechanism_path));
  id::EvaluationReport rep = id::evaluate_stateless(id::to_direct(mech, prior), beliefs);
  std::cout << "V " << rep.value << "\n";
  return 0;
}

int cmd_oracle(const std::string& scenario_path, std::size_t grid) {
  if (grid < 2) throw InputError("--grid must be at least 2");
  json j = load_json(scenario_path);
  id::Prior prior = id::prior_from_json(j.at("prior"));
  std::vector<id::Interval> beliefs = beliefs_from_scenario(j, prior);
  id::OracleResult res = id::oracle_value(id::discretize(prior, grid, beliefs));
  json out;
  out["schema"] = "1";
  out["value"] = res.value;
  out["grid"] = grid;
  out["table"] = res.table.rows;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_sweep(const std::string& config_path, std::uint64_t seed, bool seed_set,
              const std::string& out_path) {
  id::ExperimentConfig cfg;
  if (!config_path.empty()) cfg = id::experiment_config_from_json(load_json(config_path));
  if (seed_set) cfg.seed = seed;
  std::vector<id::SweepRow> rows = id::run_capacity_sweep(cfg);
  std::ostringstream csv;
  id::write_sweep_csv(csv, rows, cfg);
  if (!out_path.empty()) {
    write_text(out_path, csv.str());
  } else {
    std::cout << csv.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"information design toolkit"};
  app.require_subcommand(1);

  std::string scenario, mechanism, out, weights, config;
  std::size_t grid = 2000;
  std::uint64_t seed = 0;

  auto* c_sl = app.add_subcommand("design-stateless", "optimal stateless mechanism");
  c_sl->add_option("--scenario", scenario, "scenario JSON")->required();
  c_sl->add_option("--out", out, "mechanism JSON output path");

  auto* c_sf = app.add_subcommand("design-stateful", "optimal stateful mechanism (LP)");
  c_sf->add_option("--scenario", scenario, "scenario JSON")->required();
  c_sf->add_option("--weights", weights, "comma-separated state weights");
  c_sf->add_option("--out", out, "design JSON output path");

  auto* c_ev = app.add_subcommand("evaluate", "score a mechanism against a scenario");
  c_ev->add_option("--scenario", scenario, "scenario JSON")->required();
  c_ev->add_option("--mechanism", mechanism, "mechanism/design JSON")->required();

  auto* c_or = app.add_subcommand("oracle", "discretized-LP lower bound");
  c_or->add_option("--scenario", scenario, "scenario JSON")->required();
  c_or->add_option("--grid", grid, "discretization cells (>= 2)");

  auto* c_sw = app.add_subcommand("sweep", "capacity sweep experiment, CSV out");
  c_sw->add_option("--config", config, "experiment config JSON");
  auto* seed_opt = c_sw->add_option("--seed", seed, "RNG seed override");
  c_sw->add_option("--out", out, "CSV output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (c_sl->parsed()) return cmd_design_stateless(scenario, out);
    if (c_sf->parsed()) return cmd_design_stateful(scenario, weights, out);
    if (c_ev->parsed()) return cmd_evaluate(scenario, mechanism);
    if (c_or->parsed()) return cmd_oracle(scenario, grid);
    if (c_sw->parsed()) return cmd_sweep(config, seed, seed_opt->count() > 0, out);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
