#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "infodesign/equilibrium.hpp"
#include "infodesign/goal.hpp"
#include "infodesign/harness.hpp"
#include "infodesign/mechanism.hpp"
#include "infodesign/prior.hpp"
#include "infodesign/stateful.hpp"
#include "infodesign/stateless.hpp"

namespace infodesign {

using json = nlohmann::json;

inline Prior prior_from_json(const json& j) {
  std::string family = j.at("family").get<std::string>();
  if (family == "uniform") {
    return Prior::uniform(j.at("low").get<double>(), j.at("high").get<double>());
  }
  if (family == "discrete") {
    return Prior::discrete(j.at("support").get<std::vector<double>>(),
                           j.at("probs").get<std::vector<double>>());
  }
  if (family == "pwl_cdf") {
    std::vector<std::pair<double, double>> knots;
    for (const auto& k : j.at("knots")) {
      knots.emplace_back(k.at(0).get<double>(), k.at(1).get<double>());
    }
    return Prior::pwl_cdf(knots);
  }
  throw std::invalid_argument("unknown prior family: " + family);
}

inline Population population_from_json(const json& j) {
  return Population(j.at("masses").get<std::vector<double>>(),
                    j.at("benefits").get<std::vector<double>>());
}

inline CostModel cost_from_json(const json& j) {
  return CostModel(j.value("kappa1", 1.0), j.value("p1", 1.0), j.value("kappa2", 0.0),
                   j.value("p2", 1.0));
}

inline GoalSpec goal_from_json(const json& j) {
  std::string type = j.at("type").get<std::string>();
  if (type == "capacity") return GoalSpec::capacity(j.at("b").get<double>());
  if (type == "polytope") {
    return GoalSpec::polytope(j.at("A").get<std::vector<std::vector<double>>>(),
                              j.at("d").get<std::vector<double>>());
  }
  throw std::invalid_argument("unknown goal type: " + type);
}

inline json mechanism_to_json(const SignallingMechanism& m, const DirectMechanism& direct) {
  json j;
  j["schema"] = "1";
  switch (m.kind) {
    case SignallingMechanism::Kind::MonotonePartition:
      j["type"] = "monotone_partition";
      j["thresholds"] = m.thresholds;
      break;
    case SignallingMechanism::Kind::PiecewiseMixture:
      j["type"] = "piecewise_mixture";
      j["t"] = m.breakpoint;
      j["lambda"] = m.lambda_low;
      j["alpha"] = m.alpha_high;
      break;
    case SignallingMechanism::Kind::DiscreteTable:
      j["type"] = "discrete_table";
      j["states"] = m.states;
      j["state_probs"] = m.state_probs;
      j["rows"] = m.rows;
      break;
  }
  json d = json::array();
  for (const DirectSignal& s : direct) d.push_back({{"q", s.q}, {"theta", s.theta}});
  j["direct"] = d;
  return j;
}

inline SignallingMechanism mechanism_from_json(const json& j) {
  std::string type = j.at("type").get<std::string>();
  if (type == "monotone_partition") {
    return SignallingMechanism::partition(j.at("thresholds").get<std::vector<double>>());
  }
  if (type == "piecewise_mixture") {
    return SignallingMechanism::mixture(j.at("t").get<double>(), j.at("lambda").get<double>(),
                                        j.at("alpha").get<double>());
  }
  if (type == "discrete_table") {
    return SignallingMechanism::table(j.at("states").get<std::vector<double>>(),
                                      j.at("state_probs").get<std::vector<double>>(),
                                      j.at("rows").get<std::vector<std::vector<double>>>());
  }
  throw std::invalid_argument("unknown mechanism type: " + type);
}

inline StatefulScenario stateful_scenario_from_json(const json& j) {
  std::vector<double> nu, p, b;
  for (const auto& st : j.at("states")) {
    nu.push_back(st.at("nu").get<double>());
    p.push_back(st.at("p").get<double>());
    if (st.contains("b")) b.push_back(st.at("b").get<double>());
  }
  if (j.contains("gammas")) {
    return StatefulScenario(std::move(nu), std::move(p), j.at("gammas").get<std::vector<double>>());
  }
  if (b.size() == nu.size() && j.contains("population") && j.contains("cost")) {
    Population pop = population_from_json(j.at("population"));
    CostModel cost = cost_from_json(j.at("cost"));
    return StatefulScenario::from_capacities(std::move(nu), std::move(p), b, pop, cost);
  }
  throw std::invalid_argument(
      "stateful scenario: need either \"gammas\" or per-state \"b\" with population+cost");
}

inline json stateful_design_to_json(const StatefulDesign& d) {
  json j;
  j["schema"] = "1";
  j["z"] = d.z;
  j["g"] = d.kernel;
  j["value"] = d.value;
  j["conditionals"] = d.conditionals;
  return j;
}

inline ExperimentConfig experiment_config_from_json(const json& j) {
  ExperimentConfig cfg;
  cfg.groups = j.value("K", std::size_t{10});
  cfg.trials = j.value("trials", std::size_t{10000});
  cfg.seed = j.value("seed", std::uint64_t{0});
  cfg.benefit_high = j.value("benefit_high", 10.0);
  if (j.contains("b_values")) {
    cfg.b_grid = j.at("b_values").get<std::vector<double>>();
  }
  if (j.contains("prior")) cfg.prior = prior_from_json(j.at("prior"));
  if (j.contains("cost")) cfg.cost = cost_from_json(j.at("cost"));
  return cfg;
}

}  // namespace infodesign
