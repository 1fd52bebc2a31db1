#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sig/dynamics.hpp"
#include "sig/errors.hpp"
#include "sig/game.hpp"
#include "sig/netgen.hpp"
#include "sig/network.hpp"
#include "sig/solvers.hpp"

namespace sig {

enum class Experiment { compare, scaling, budget_sweep, centrality_study, archetype };
enum class EgoSolver { il, pg_oracle, random, centrality, zero };
enum class OpponentPolicy { random, zero };

inline std::string to_string(Experiment e) {
  switch (e) {
    case Experiment::compare: return "compare";
    case Experiment::scaling: return "scaling";
    case Experiment::budget_sweep: return "budget_sweep";
    case Experiment::centrality_study: return "centrality_study";
    case Experiment::archetype: return "archetype";
  }
  return {};
}

inline std::string to_string(EgoSolver s) {
  switch (s) {
    case EgoSolver::il: return "il";
    case EgoSolver::pg_oracle: return "pg_oracle";
    case EgoSolver::random: return "random";
    case EgoSolver::centrality: return "centrality";
    case EgoSolver::zero: return "zero";
  }
  return {};
}

inline Experiment parse_experiment(const std::string& name) {
  if (name == "compare") return Experiment::compare;
  if (name == "scaling") return Experiment::scaling;
  if (name == "budget_sweep") return Experiment::budget_sweep;
  if (name == "centrality_study") return Experiment::centrality_study;
  if (name == "archetype") return Experiment::archetype;
  throw std::invalid_argument("unknown experiment: " + name);
}

inline EgoSolver parse_ego_solver(const std::string& name) {
  if (name == "il") return EgoSolver::il;
  if (name == "pg_oracle") return EgoSolver::pg_oracle;
  if (name == "random") return EgoSolver::random;
  if (name == "centrality") return EgoSolver::centrality;
  if (name == "zero") return EgoSolver::zero;
  throw std::invalid_argument("unknown solver: " + name);
}

inline OpponentPolicy parse_opponent_policy(const std::string& name) {
  if (name == "random") return OpponentPolicy::random;
  if (name == "zero") return OpponentPolicy::zero;
  throw std::invalid_argument("unknown opponent policy: " + name);
}

struct GeneratorSpec {
  std::string model = "er";  // er | ws | sbm | star | two_cliques | three_node_asymmetric
  nlohmann::json params = nlohmann::json::object();
};

// Declarative experiment description. The ego player always takes the last
// player slot; the other P-1 slots follow the opponent policy.
struct ScenarioConfig {
  Experiment experiment = Experiment::compare;
  GeneratorSpec generator;
  int network_size = 10;
  int players = 3;
  double budget = 0.5;
  std::vector<EgoSolver> ego_solvers = {EgoSolver::il};
  OpponentPolicy opponent_policy = OpponentPolicy::random;
  std::vector<std::uint64_t> seeds = {1};
  ILParams il_params;
  std::vector<int> sizes;       // scaling and budget_sweep size ladder
  std::vector<double> budgets;  // budget_sweep lambda ladder
  double timeout_s = 300.0;
  int pg_iters = 200;
  double fd_eps = 1e-6;
};

struct RunRecord {
  std::string experiment;
  std::string generator;
  int network_size = 0;
  int players = 0;
  double budget = 0.0;
  std::uint64_t seed = 0;
  std::string solver;
  double objective_j2_mean = 0.0;  // J2 / M
  double improvement = 0.0;        // vs the experiment's stated baseline, per individual
  double drift = 0.0;              // budget_sweep: mean distance from the zero-influence state
  Eigen::VectorXd allocation;
  std::vector<double> centrality_percentiles;  // centrality_study only
  int iterations = 0;
  double wall_time_s = 0.0;  // in-memory only; never serialized (see README)
  bool timed_out = false;
  std::string error;  // nonempty marks a failed run; numeric fields are then zero
};

namespace detail {

inline constexpr std::uint64_t kStreamNetwork = 1;
inline constexpr std::uint64_t kStreamEgoRandom = 2;
inline constexpr std::uint64_t kStreamOpponent = 16;

inline SocialNetwork make_network(const GeneratorSpec& gen, int m, std::uint64_t seed) {
  const auto& p = gen.params;
  if (gen.model == "er") {
    return gen_erdos_renyi(m, p.value("p", 0.6), seed);
  }
  if (gen.model == "ws") {
    return gen_watts_strogatz(m, p.value("ring_degree", 6), p.value("rewire_prob", 0.3), seed);
  }
  if (gen.model == "sbm") {
    std::vector<int> blocks;
    if (p.contains("blocks")) {
      blocks = p.at("blocks").get<std::vector<int>>();
    } else {
      blocks = {m / 2, m - m / 2};
    }
    return gen_sbm(blocks, p.value("p_in", 0.3), p.value("p_out", 0.05), seed);
  }
  if (gen.model == "star") {
    return gen_archetype(Archetype::star, p.value("leaves", m > 1 ? m - 1 : 4));
  }
  if (gen.model == "two_cliques") return gen_archetype(Archetype::two_cliques);
  if (gen.model == "three_node_asymmetric") {
    return gen_archetype(Archetype::three_node_asymmetric);
  }
  throw std::invalid_argument("unknown generator model: " + gen.model);
}

inline std::vector<InfluenceAllocation> make_opponents(OpponentPolicy policy, int m,
                                                       int players, double budget,
                                                       std::uint64_t seed) {
  std::vector<InfluenceAllocation> opponents;
  opponents.reserve(static_cast<std::size_t>(players) - 1);
  for (int j = 0; j < players - 1; ++j) {
    if (policy == OpponentPolicy::random) {
      opponents.push_back(random_allocation(m, budget, mix_seed(seed, kStreamOpponent + j)));
    } else {
      opponents.push_back({Eigen::VectorXd::Zero(m), budget});
    }
  }
  return opponents;
}

struct SolverOutcome {
  InfluenceAllocation allocation;
  double objective = 0.0;
  int iterations = 0;
  double wall_time_s = 0.0;
};

inline SolverOutcome run_ego_solver(EgoSolver solver, const ScenarioConfig& cfg,
                                    const SocialNetwork& net, const ReferenceSet& refs,
                                    const std::vector<InfluenceAllocation>& opponents,
                                    double budget, std::uint64_t seed) {
  const int ego = refs.count - 1;
  const auto start = std::chrono::steady_clock::now();
  const auto elapsed = [&start] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };
  switch (solver) {
    case EgoSolver::il: {
      SolveReport report = il_solve(net, refs, ego, opponents, budget, cfg.il_params);
      return {std::move(report.allocation), report.objective, report.iterations,
              report.wall_time_s};
    }
    case EgoSolver::pg_oracle: {
      SolveReport report =
          pg_oracle(net, refs, ego, opponents, budget, cfg.pg_iters, cfg.fd_eps);
      return {std::move(report.allocation), report.objective, report.iterations,
              report.wall_time_s};
    }
    case EgoSolver::random: {
      InfluenceAllocation a =
          random_allocation(net.size, budget, mix_seed(seed, kStreamEgoRandom));
      const double objective = evaluate_allocation_objective(
          net, refs, ego, with_ego(opponents, ego, a.weights, budget));
      return {std::move(a), objective, 0, elapsed()};
    }
    case EgoSolver::centrality: {
      InfluenceAllocation a = centrality_allocation(net, budget);
      const double objective = evaluate_allocation_objective(
          net, refs, ego, with_ego(opponents, ego, a.weights, budget));
      return {std::move(a), objective, 0, elapsed()};
    }
    case EgoSolver::zero: {
      InfluenceAllocation a{Eigen::VectorXd::Zero(net.size), budget};
      const double objective = evaluate_allocation_objective(
          net, refs, ego, with_ego(opponents, ego, a.weights, budget));
      return {std::move(a), objective, 0, elapsed()};
    }
  }
  throw std::logic_error("unreachable solver");
}

inline RunRecord base_record(const ScenarioConfig& cfg, int m, double budget,
                             std::uint64_t seed) {
  RunRecord rec;
  rec.experiment = to_string(cfg.experiment);
  rec.generator = cfg.generator.model;
  rec.network_size = m;
  rec.players = cfg.players;
  rec.budget = budget;
  rec.seed = seed;
  return rec;
}

inline void sort_records(std::vector<RunRecord>& records) {
  std::sort(records.begin(), records.end(), [](const RunRecord& a, const RunRecord& b) {
    if (a.network_size != b.network_size) return a.network_size < b.network_size;
    if (a.budget != b.budget) return a.budget < b.budget;
    if (a.seed != b.seed) return a.seed < b.seed;
    return a.solver < b.solver;
  });
}

}  // namespace detail

// One (network, opponents) draw per seed; every requested solver runs on the
// identical inputs and is scored against the seed's random-allocation ego
// baseline. Per-seed failures land in the record, not on the batch.
inline std::vector<RunRecord> run_compare(const ScenarioConfig& cfg) {
  std::vector<RunRecord> records;
  const ReferenceSet refs = simplex_references(cfg.players);
  const int ego = cfg.players - 1;
  for (const std::uint64_t seed : cfg.seeds) {
    RunRecord proto = detail::base_record(cfg, cfg.network_size, cfg.budget, seed);
    try {
      const SocialNetwork net = detail::make_network(
          cfg.generator, cfg.network_size, mix_seed(seed, detail::kStreamNetwork));
      const auto opponents = detail::make_opponents(cfg.opponent_policy, net.size,
                                                    cfg.players, cfg.budget, seed);
      const InfluenceAllocation baseline = random_allocation(
          net.size, cfg.budget, mix_seed(seed, detail::kStreamEgoRandom));
      const double baseline_objective = evaluate_allocation_objective(
          net, refs, ego, detail::with_ego(opponents, ego, baseline.weights, cfg.budget));
      for (const EgoSolver solver : cfg.ego_solvers) {
        RunRecord rec = proto;
        rec.solver = to_string(solver);
        try {
          const auto outcome =
              detail::run_ego_solver(solver, cfg, net, refs, opponents, cfg.budget, seed);
          rec.objective_j2_mean = outcome.objective / net.size;
          rec.improvement = (outcome.objective - baseline_objective) / net.size;
          rec.allocation = outcome.allocation.weights;
          rec.iterations = outcome.iterations;
          rec.wall_time_s = outcome.wall_time_s;
          rec.timed_out = outcome.wall_time_s > cfg.timeout_s;
        } catch (const std::exception& e) {
          rec.error = e.what();
        }
        records.push_back(std::move(rec));
      }
    } catch (const std::exception& e) {
      proto.error = e.what();
      records.push_back(std::move(proto));
    }
  }
  detail::sort_records(records);
  return records;
}

// IL wall-time feasibility across an ascending size ladder. The oracle, when
// requested, only runs for M <= 200.
inline std::vector<RunRecord> run_scaling(const ScenarioConfig& cfg) {
  std::vector<int> sizes = cfg.sizes.empty()
                               ? std::vector<int>{10, 50, 100, 200, 500, 1000}
                               : cfg.sizes;
  if (!std::is_sorted(sizes.begin(), sizes.end())) {
    throw std::invalid_argument("run_scaling: sizes must be ascending");
  }
  std::vector<RunRecord> records;
  const ReferenceSet refs = simplex_references(cfg.players);
  const int ego = cfg.players - 1;
  for (const int m : sizes) {
    for (const std::uint64_t seed : cfg.seeds) {
      RunRecord proto = detail::base_record(cfg, m, cfg.budget, seed);
      try {
        const SocialNetwork net =
            detail::make_network(cfg.generator, m, mix_seed(seed, detail::kStreamNetwork));
        const auto opponents = detail::make_opponents(cfg.opponent_policy, net.size,
                                                      cfg.players, cfg.budget, seed);
        const InfluenceAllocation baseline = random_allocation(
            net.size, cfg.budget, mix_seed(seed, detail::kStreamEgoRandom));
        const double baseline_objective = evaluate_allocation_objective(
            net, refs, ego, detail::with_ego(opponents, ego, baseline.weights, cfg.budget));
        for (const EgoSolver solver : cfg.ego_solvers) {
          if (solver == EgoSolver::pg_oracle && m > 200) continue;
          RunRecord rec = proto;
          rec.solver = to_string(solver);
          try {
            const auto outcome =
                detail::run_ego_solver(solver, cfg, net, refs, opponents, cfg.budget, seed);
            rec.objective_j2_mean = outcome.objective / net.size;
            rec.improvement = (outcome.objective - baseline_objective) / net.size;
            rec.allocation = outcome.allocation.weights;
            rec.iterations = outcome.iterations;
            rec.wall_time_s = outcome.wall_time_s;
            rec.timed_out = outcome.wall_time_s > cfg.timeout_s;
          } catch (const std::exception& e) {
            rec.error = e.what();
          }
          records.push_back(std::move(rec));
        }
      } catch (const std::exception& e) {
        proto.error = e.what();
        records.push_back(std::move(proto));
      }
    }
  }
  detail::sort_records(records);
  return records;
}

// Budget ladder on Watts-Strogatz networks, scored against the zero-influence
// consensus reached from all-zero initial opinions.
inline std::vector<RunRecord> run_budget_sweep(const ScenarioConfig& cfg) {
  if (cfg.generator.model != "ws") {
    throw std::invalid_argument("run_budget_sweep: requires the ws generator");
  }
  const std::vector<double> budgets =
      cfg.budgets.empty() ? std::vector<double>{0.1, 0.5, 1.0, 1.5} : cfg.budgets;
  const std::vector<int> sizes =
      cfg.sizes.empty() ? std::vector<int>{cfg.network_size} : cfg.sizes;
  std::vector<RunRecord> records;
  const ReferenceSet refs = simplex_references(cfg.players);
  const int ego = cfg.players - 1;
  for (const int m : sizes) {
    for (const std::uint64_t seed : cfg.seeds) {
      std::optional<SocialNetwork> net;
      std::optional<OpinionState> zero_state;
      try {
        net = detail::make_network(cfg.generator, m, mix_seed(seed, detail::kStreamNetwork));
        OpinionState origin{refs.dim, Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m) * refs.dim)};
        zero_state = consensus_state(*net, origin);
      } catch (const std::exception& e) {
        for (const double budget : budgets) {
          RunRecord rec = detail::base_record(cfg, m, budget, seed);
          rec.error = e.what();
          records.push_back(std::move(rec));
        }
        continue;
      }
      const double zero_objective = objective_j2(refs, ego, *zero_state);
      for (const double budget : budgets) {
        const auto opponents = detail::make_opponents(cfg.opponent_policy, m, cfg.players,
                                                      budget, seed);
        for (const EgoSolver solver : cfg.ego_solvers) {
          RunRecord rec = detail::base_record(cfg, m, budget, seed);
          rec.solver = to_string(solver);
          try {
            const auto outcome =
                detail::run_ego_solver(solver, cfg, *net, refs, opponents, budget, seed);
            const AugmentedSystem sys = assemble(
                *net, detail::with_ego(opponents, ego, outcome.allocation.weights, budget),
                refs);
            const OpinionState final_state = asymptotic_state(sys);
            rec.objective_j2_mean = outcome.objective / m;
            rec.improvement = (outcome.objective - zero_objective) / m;
            double drift = 0.0;
            for (int i = 0; i < m; ++i) {
              drift += (state_matrix(final_state).row(i) - state_matrix(*zero_state).row(i))
                           .norm();
            }
            rec.drift = drift / m;
            rec.allocation = outcome.allocation.weights;
            rec.iterations = outcome.iterations;
            rec.wall_time_s = outcome.wall_time_s;
            rec.timed_out = outcome.wall_time_s > cfg.timeout_s;
          } catch (const std::exception& e) {
            rec.error = e.what();
          }
          records.push_back(std::move(rec));
        }
      }
    }
  }
  detail::sort_records(records);
  return records;
}

// Stochastic-block networks scored against the centrality-proportional
// allocation; records carry the per-node centrality percentiles so the
// (percentile, allocation) pairs can be emitted for the hinge plot.
inline std::vector<RunRecord> run_centrality_study(const ScenarioConfig& cfg) {
  if (cfg.generator.model != "sbm") {
    throw std::invalid_argument("run_centrality_study: requires the sbm generator");
  }
  std::vector<RunRecord> records;
  const ReferenceSet refs = simplex_references(cfg.players);
  const int ego = cfg.players - 1;
  for (const std::uint64_t seed : cfg.seeds) {
    RunRecord proto = detail::base_record(cfg, cfg.network_size, cfg.budget, seed);
    try {
      const SocialNetwork net = detail::make_network(
          cfg.generator, cfg.network_size, mix_seed(seed, detail::kStreamNetwork));
      const CentralityVector centrality = eigenvector_centrality(net);
      const auto opponents = detail::make_opponents(cfg.opponent_policy, net.size,
                                                    cfg.players, cfg.budget, seed);
      const InfluenceAllocation reference = centrality_allocation(net, cfg.budget);
      const double reference_objective = evaluate_allocation_objective(
          net, refs, ego, detail::with_ego(opponents, ego, reference.weights, cfg.budget));
      for (const EgoSolver solver : cfg.ego_solvers) {
        RunRecord rec = proto;
        rec.solver = to_string(solver);
        rec.centrality_percentiles.assign(centrality.percentiles.data(),
                                          centrality.percentiles.data() + net.size);
        try {
          const auto outcome =
              detail::run_ego_solver(solver, cfg, net, refs, opponents, cfg.budget, seed);
          rec.objective_j2_mean = outcome.objective / net.size;
          rec.improvement = (outcome.objective - reference_objective) / net.size;
          rec.allocation = outcome.allocation.weights;
          rec.iterations = outcome.iterations;
          rec.wall_time_s = outcome.wall_time_s;
          rec.timed_out = outcome.wall_time_s > cfg.timeout_s;
        } catch (const std::exception& e) {
          rec.error = e.what();
        }
        records.push_back(std::move(rec));
      }
    } catch (const std::exception& e) {
      proto.error = e.what();
      records.push_back(std::move(proto));
    }
  }
  detail::sort_records(records);
  return records;
}

// The three fixture networks, P = 3, lambda = 1.0, optimized ego against
// random opponents.
inline std::vector<RunRecord> run_archetypes(const std::vector<std::uint64_t>& seeds = {7},
                                             const ILParams& il_params = {}) {
  std::vector<RunRecord> records;
  for (const char* model : {"star", "two_cliques", "three_node_asymmetric"}) {
    ScenarioConfig cfg;
    cfg.experiment = Experiment::archetype;
    cfg.generator.model = model;
    if (std::string(model) == "star") cfg.generator.params["leaves"] = 4;
    cfg.network_size = std::string(model) == "star" ? 5 : (std::string(model) == "two_cliques" ? 9 : 3);
    cfg.players = 3;
    cfg.budget = 1.0;
    cfg.ego_solvers = {EgoSolver::il};
    cfg.seeds = seeds;
    cfg.il_params = il_params;
    auto batch = run_compare(cfg);
    for (auto& rec : batch) {
      rec.experiment = to_string(Experiment::archetype);
      records.push_back(std::move(rec));
    }
  }
  return records;
}

inline std::vector<RunRecord> run_scenario(const ScenarioConfig& cfg) {
  switch (cfg.experiment) {
    case Experiment::compare: return run_compare(cfg);
    case Experiment::scaling: return run_scaling(cfg);
    case Experiment::budget_sweep: return run_budget_sweep(cfg);
    case Experiment::centrality_study: return run_centrality_study(cfg);
    case Experiment::archetype: return run_archetypes(cfg.seeds, cfg.il_params);
  }
  throw std::logic_error("unreachable experiment");
}

// ---- scenario JSON ----------------------------------------------------

namespace detail {

inline void reject_unknown_keys(const nlohmann::json& j,
                                std::initializer_list<const char*> allowed,
                                const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    if (std::find_if(allowed.begin(), allowed.end(),
                     [&key](const char* k) { return key == k; }) == allowed.end()) {
      throw std::invalid_argument("unknown key '" + key + "' in " + where);
    }
  }
}

}  // namespace detail

inline ScenarioConfig scenario_from_json(const nlohmann::json& j) {
  detail::reject_unknown_keys(
      j,
      {"experiment", "generator", "M", "players", "budget", "ego_solvers",
       "opponent_policy", "seeds", "il_params", "sizes", "budgets", "timeout_s",
       "pg_iters", "fd_eps"},
      "scenario");
  ScenarioConfig cfg;
  cfg.experiment = parse_experiment(j.at("experiment").get<std::string>());
  if (j.contains("generator")) {
    detail::reject_unknown_keys(j.at("generator"), {"model", "params"}, "generator");
    cfg.generator.model = j.at("generator").value("model", std::string("er"));
    cfg.generator.params = j.at("generator").value("params", nlohmann::json::object());
  }
  cfg.network_size = j.value("M", 10);
  cfg.players = j.value("players", 3);
  cfg.budget = j.value("budget", 0.5);
  if (j.contains("ego_solvers")) {
    cfg.ego_solvers.clear();
    for (const auto& name : j.at("ego_solvers")) {
      cfg.ego_solvers.push_back(parse_ego_solver(name.get<std::string>()));
    }
  }
  if (j.contains("opponent_policy")) {
    cfg.opponent_policy = parse_opponent_policy(j.at("opponent_policy").get<std::string>());
  }
  if (j.contains("seeds")) cfg.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
  if (j.contains("il_params")) {
    const auto& params = j.at("il_params");
    detail::reject_unknown_keys(params, {"step_size", "max_iters", "tol", "momentum"},
                                "il_params");
    cfg.il_params.step_size = params.value("step_size", cfg.il_params.step_size);
    cfg.il_params.max_iters = params.value("max_iters", cfg.il_params.max_iters);
    cfg.il_params.tol = params.value("tol", cfg.il_params.tol);
    if (params.contains("momentum")) {
      const auto name = params.at("momentum").get<std::string>();
      if (name == "nesterov") {
        cfg.il_params.momentum = Momentum::nesterov;
      } else if (name == "none") {
        cfg.il_params.momentum = Momentum::none;
      } else {
        throw std::invalid_argument("unknown momentum: " + name);
      }
    }
  }
  if (j.contains("sizes")) cfg.sizes = j.at("sizes").get<std::vector<int>>();
  if (j.contains("budgets")) cfg.budgets = j.at("budgets").get<std::vector<double>>();
  cfg.timeout_s = j.value("timeout_s", 300.0);
  cfg.pg_iters = j.value("pg_iters", 200);
  cfg.fd_eps = j.value("fd_eps", 1e-6);
  if (cfg.players < 2) throw std::invalid_argument("scenario: players must be >= 2");
  if (cfg.budget <= 0.0) throw std::invalid_argument("scenario: budget must be positive");
  if (cfg.seeds.empty()) throw std::invalid_argument("scenario: seeds must be nonempty");
  return cfg;
}

inline ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return scenario_from_json(j);
}

// ---- result serialization ---------------------------------------------

namespace detail {

// 17 significant digits: lossless decimal round-trip for doubles.
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace detail

inline constexpr const char* kCsvHeader =
    "experiment,generator,M,players,budget,seed,solver,objective_j2_mean,improvement,"
    "drift,iterations,error";

inline void write_csv(const std::vector<RunRecord>& records, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << kCsvHeader << "\n";
  for (const RunRecord& rec : records) {
    out << rec.experiment << ',' << rec.generator << ',' << rec.network_size << ','
        << rec.players << ',' << detail::format_double(rec.budget) << ',' << rec.seed << ','
        << rec.solver << ',' << detail::format_double(rec.objective_j2_mean) << ','
        << detail::format_double(rec.improvement) << ',' << detail::format_double(rec.drift)
        << ',' << rec.iterations << ',' << rec.error << "\n";
  }
}

inline nlohmann::json record_to_json(const RunRecord& rec) {
  nlohmann::json j;
  j["experiment"] = rec.experiment;
  j["generator"] = rec.generator;
  j["M"] = rec.network_size;
  j["players"] = rec.players;
  j["budget"] = rec.budget;
  j["seed"] = rec.seed;
  j["solver"] = rec.solver;
  j["objective_j2_mean"] = rec.objective_j2_mean;
  j["improvement"] = rec.improvement;
  j["drift"] = rec.drift;
  j["iterations"] = rec.iterations;
  j["error"] = rec.error;
  j["allocation"] = std::vector<double>(rec.allocation.data(),
                                        rec.allocation.data() + rec.allocation.size());
  if (!rec.centrality_percentiles.empty()) {
    j["centrality_percentiles"] = rec.centrality_percentiles;
  }
  return j;
}

inline void write_jsonl(const std::vector<RunRecord>& records, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  for (const RunRecord& rec : records) out << record_to_json(rec).dump() << "\n";
}

// (percentile, allocation) pairs for the hinge plot, pooled over records.
inline void write_hinge_pairs_csv(const std::vector<RunRecord>& records,
                                  const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "centrality_percentile,allocation\n";
  for (const RunRecord& rec : records) {
    if (rec.centrality_percentiles.empty() || !rec.error.empty()) continue;
    for (int i = 0; i < rec.allocation.size(); ++i) {
      out << detail::format_double(rec.centrality_percentiles[static_cast<std::size_t>(i)])
          << ',' << detail::format_double(rec.allocation(i)) << "\n";
    }
  }
}

// (M, lambda, improvement) triples from a budget sweep.
inline void write_budget_triples_csv(const std::vector<RunRecord>& records,
                                     const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "M,budget,improvement\n";
  for (const RunRecord& rec : records) {
    if (!rec.error.empty()) continue;
    out << rec.network_size << ',' << detail::format_double(rec.budget) << ','
        << detail::format_double(rec.improvement) << "\n";
  }
}

// Wall-clock sidecar, opt-in: inherently machine-dependent, so it is kept out
// of the deterministic result files.
inline void write_timings_csv(const std::vector<RunRecord>& records, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "experiment,generator,M,budget,seed,solver,wall_time_s,timed_out\n";
  for (const RunRecord& rec : records) {
    out << rec.experiment << ',' << rec.generator << ',' << rec.network_size << ','
        << detail::format_double(rec.budget) << ',' << rec.seed << ',' << rec.solver << ','
        << detail::format_double(rec.wall_time_s) << ',' << (rec.timed_out ? 1 : 0) << "\n";
  }
}

// Mean / standard error of one solver's records (failed runs excluded).
struct SolverSummary {
  int runs = 0;
  double mean_objective = 0.0;
  double mean_improvement = 0.0;
  double se_objective = 0.0;
  double se_improvement = 0.0;
};

inline SolverSummary summarize(const std::vector<RunRecord>& records,
                               const std::string& solver) {
  SolverSummary s;
  std::vector<double> objectives;
  std::vector<double> improvements;
  for (const RunRecord& rec : records) {
    if (rec.solver != solver || !rec.error.empty()) continue;
    objectives.push_back(rec.objective_j2_mean);
    improvements.push_back(rec.improvement);
  }
  s.runs = static_cast<int>(objectives.size());
  if (s.runs == 0) return s;
  const auto mean = [](const std::vector<double>& v) {
    double acc = 0.0;
    for (double x : v) acc += x;
    return acc / static_cast<double>(v.size());
  };
  const auto stderr_of = [&mean](const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    const double mu = mean(v);
    double acc = 0.0;
    for (double x : v) acc += (x - mu) * (x - mu);
    return std::sqrt(acc / (static_cast<double>(v.size()) - 1.0) /
                     static_cast<double>(v.size()));
  };
  s.mean_objective = mean(objectives);
  s.mean_improvement = mean(improvements);
  s.se_objective = stderr_of(objectives);
  s.se_improvement = stderr_of(improvements);
  return s;
}

}  // namespace sig
