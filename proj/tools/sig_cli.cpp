// Command-line front door: network generation, single-scenario solves,
// dynamics simulation, DC-reformulation verification, and benchmark runs.

#include <CLI11.hpp>
#include <Eigen/Dense>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sig/dcform.hpp"
#include "sig/dynamics.hpp"
#include "sig/game.hpp"
#include "sig/harness.hpp"
#include "sig/netgen.hpp"
#include "sig/network.hpp"
#include "sig/solvers.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitGenerationFailed = 3;
constexpr int kExitSolverFailed = 4;
constexpr int kExitIdentityViolated = 5;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<int> parse_blocks(const std::string& spec) {
  std::vector<int> blocks;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    const std::size_t comma = spec.find(',', pos);
    const std::string token = spec.substr(pos, comma == std::string::npos ? comma : comma - pos);
    blocks.push_back(std::stoi(token));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (blocks.empty()) throw std::invalid_argument("empty block list");
  return blocks;
}

struct GenerateArgs {
  std::string model;
  int nodes = 10;
  std::uint64_t seed = 0;
  bool seed_set = false;
  double p = 0.6;
  int ring_degree = 6;
  double rewire_prob = 0.3;
  std::string blocks = "";
  double p_in = 0.3;
  double p_out = 0.05;
  std::string out;
};

int cmd_generate(const GenerateArgs& args) {
  sig::SocialNetwork net;
  try {
    if (args.model == "er" || args.model == "ws" || args.model == "sbm") {
      if (!args.seed_set) {
        std::cerr << "error: --seed is required for stochastic models\n";
        return kExitBadInput;
      }
    }
    if (args.model == "er") {
      net = sig::gen_erdos_renyi(args.nodes, args.p, args.seed);
    } else if (args.model == "ws") {
      net = sig::gen_watts_strogatz(args.nodes, args.ring_degree, args.rewire_prob, args.seed);
    } else if (args.model == "sbm") {
      std::vector<int> blocks;
      if (args.blocks.empty()) {
        blocks = {args.nodes / 2, args.nodes - args.nodes / 2};
      } else {
        blocks = parse_blocks(args.blocks);
      }
      net = sig::gen_sbm(blocks, args.p_in, args.p_out, args.seed);
    } else if (args.model == "star") {
      if (args.nodes < 3) throw std::invalid_argument("star: --nodes must be >= 3");
      net = sig::gen_archetype(sig::Archetype::star, args.nodes - 1);
    } else if (args.model == "two-cliques" || args.model == "two_cliques") {
      net = sig::gen_archetype(sig::Archetype::two_cliques);
    } else if (args.model == "three-node-asymmetric" || args.model == "three_node_asymmetric") {
      net = sig::gen_archetype(sig::Archetype::three_node_asymmetric);
    } else {
      std::cerr << "error: unknown model '" << args.model << "'\n";
      return kExitBadInput;
    }
  } catch (const sig::GenerationError& e) {
    std::cerr << "generation failed: " << e.what() << "\n";
    return kExitGenerationFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  try {
    sig::save_network(net, args.out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  int self_loops = 0;
  for (int i = 0; i < net.size; ++i) self_loops += net.adjacency(i, i) ? 1 : 0;
  std::cout << "model=" << net.generator << "\n"
            << "nodes=" << net.size << "\n"
            << "edges=" << sig::undirected_edge_count(net) << "\n"
            << "self_loops=" << self_loops << "\n"
            << "connected=" << (sig::is_connected(net.adjacency) ? "true" : "false") << "\n"
            << "out=" << args.out << "\n";
  return kExitOk;
}

struct SolveArgs {
  std::string network;
  int players = 3;
  double budget = 0.5;
  std::string solver = "il";
  std::uint64_t seed = 0;
  std::string out;
  int max_iters = 500;
  double step_size = 0.1;
  int pg_iters = 200;
};

int cmd_solve(const SolveArgs& args) {
  sig::SocialNetwork net;
  sig::ReferenceSet refs;
  try {
    if (args.budget <= 0.0) throw std::invalid_argument("--budget must be positive");
    if (args.players < 2) throw std::invalid_argument("--players must be >= 2");
    net = sig::load_network(args.network);
    sig::validate_network(net);
    refs = sig::simplex_references(args.players);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  const int ego = args.players - 1;
  std::vector<sig::InfluenceAllocation> opponents;
  for (int j = 0; j < args.players - 1; ++j) {
    opponents.push_back(sig::random_allocation(
        net.size, args.budget, sig::mix_seed(args.seed, sig::detail::kStreamOpponent + j)));
  }
  sig::InfluenceAllocation allocation;
  double objective = 0.0;
  int iterations = 0;
  try {
    if (args.solver == "il") {
      sig::ILParams params;
      params.max_iters = args.max_iters;
      params.step_size = args.step_size;
      auto report = sig::il_solve(net, refs, ego, opponents, args.budget, params);
      allocation = std::move(report.allocation);
      objective = report.objective;
      iterations = report.iterations;
    } else if (args.solver == "pg" || args.solver == "pg_oracle") {
      auto report = sig::pg_oracle(net, refs, ego, opponents, args.budget, args.pg_iters);
      allocation = std::move(report.allocation);
      objective = report.objective;
      iterations = report.iterations;
    } else if (args.solver == "random") {
      allocation = sig::random_allocation(net.size, args.budget,
                                          sig::mix_seed(args.seed, sig::detail::kStreamEgoRandom));
      objective = sig::evaluate_allocation_objective(
          net, refs, ego, sig::detail::with_ego(opponents, ego, allocation.weights, args.budget));
    } else if (args.solver == "centrality") {
      allocation = sig::centrality_allocation(net, args.budget);
      objective = sig::evaluate_allocation_objective(
          net, refs, ego, sig::detail::with_ego(opponents, ego, allocation.weights, args.budget));
    } else {
      std::cerr << "error: unknown solver '" << args.solver << "'\n";
      return kExitBadInput;
    }
  } catch (const std::exception& e) {
    std::cerr << "solver failed: " << e.what() << "\n";
    return kExitSolverFailed;
  }
  std::cout << "solver=" << args.solver << "\n"
            << "objective_j2=" << fmt(objective) << "\n"
            << "objective_j2_mean=" << fmt(objective / net.size) << "\n"
            << "iterations=" << iterations << "\n";
  if (!args.out.empty()) {
    nlohmann::json j;
    j["M"] = net.size;
    j["players"] = args.players;
    j["budget"] = args.budget;
    j["solver"] = args.solver;
    j["seed"] = args.seed;
    j["weights"] = std::vector<double>(allocation.weights.data(),
                                       allocation.weights.data() + allocation.weights.size());
    j["objective_j2"] = objective;
    std::ofstream out(args.out);
    if (!out) {
      std::cerr << "error: cannot open " << args.out << "\n";
      return kExitBadInput;
    }
    out << j.dump(2) << "\n";
    std::cout << "out=" << args.out << "\n";
  }
  return kExitOk;
}

struct SimulateArgs {
  std::string network;
  int players = 3;
  double budget = 0.5;
  std::uint64_t seed = 0;
  int steps = 50;
  std::string out;
};

int cmd_simulate(const SimulateArgs& args) {
  try {
    if (args.budget <= 0.0) throw std::invalid_argument("--budget must be positive");
    if (args.players < 2) throw std::invalid_argument("--players must be >= 2");
    if (args.steps < 1) throw std::invalid_argument("--steps must be >= 1");
    const sig::SocialNetwork net = sig::load_network(args.network);
    sig::validate_network(net);
    const sig::ReferenceSet refs = sig::simplex_references(args.players);
    std::vector<sig::InfluenceAllocation> allocations;
    for (int p = 0; p < args.players; ++p) {
      allocations.push_back(sig::random_allocation(
          net.size, args.budget, sig::mix_seed(args.seed, sig::detail::kStreamOpponent + p)));
    }
    const sig::AugmentedSystem sys = sig::assemble(net, allocations, refs);
    sig::OpinionState x{refs.dim,
                        Eigen::VectorXd::Zero(static_cast<Eigen::Index>(net.size) * refs.dim)};
    double last_change = 0.0;
    nlohmann::json trajectory = nlohmann::json::array();
    for (int t = 0; t < args.steps; ++t) {
      const sig::OpinionState next = sig::step(sys, x);
      last_change = (next.values - x.values).cwiseAbs().maxCoeff();
      x = next;
      if (!args.out.empty()) {
        trajectory.push_back(std::vector<double>(x.values.data(),
                                                 x.values.data() + x.values.size()));
      }
    }
    std::cout << "steps=" << args.steps << "\n"
              << "last_step_change=" << fmt(last_change) << "\n";
    for (int p = 0; p < args.players; ++p) {
      std::cout << "objective_j2_mean_player" << p << "="
                << fmt(sig::objective_j2(refs, p, x) / net.size) << "\n";
    }
    if (!args.out.empty()) {
      nlohmann::json j;
      j["M"] = net.size;
      j["players"] = args.players;
      j["dim"] = refs.dim;
      j["budget"] = args.budget;
      j["seed"] = args.seed;
      j["trajectory"] = trajectory;
      std::ofstream out(args.out);
      if (!out) throw std::runtime_error("cannot open " + args.out);
      out << j.dump() << "\n";
      std::cout << "out=" << args.out << "\n";
    }
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}

struct VerifyDcArgs {
  std::string network;
  std::uint64_t seed = 0;
  int players = 3;
  double budget = 0.5;
  double perturb = 0.0;
};

int cmd_verify_dc(const VerifyDcArgs& args) {
  sig::SocialNetwork net;
  sig::ReferenceSet refs;
  std::vector<sig::InfluenceAllocation> allocations;
  try {
    if (args.budget <= 0.0) throw std::invalid_argument("--budget must be positive");
    net = sig::load_network(args.network);
    sig::validate_network(net);
    refs = sig::simplex_references(args.players);
    for (int p = 0; p < args.players; ++p) {
      allocations.push_back(sig::random_allocation(
          net.size, args.budget, sig::mix_seed(args.seed, sig::detail::kStreamOpponent + p)));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }

  const int player = args.players - 1;
  sig::DCInstance inst = sig::build_dc_instance(net, refs, player, allocations);
  if (args.perturb != 0.0) inst.z(0) += args.perturb;

  double max_residual = 0.0;
  double max_decomposition_error = 0.0;
  double max_printed = 0.0;
  for (int k = 0; k < inst.z.size(); ++k) {
    const double h = sig::row_residual(inst, net, refs, k);
    max_residual = std::max(max_residual, std::abs(h));
    const sig::DCRowSplit split = sig::dc_decompose_row(inst, net, refs, k);
    max_decomposition_error =
        std::max(max_decomposition_error, std::abs(split.convex_g - split.concave_g - h));
    max_printed = std::max(max_printed, std::abs(split.printed_g));
  }
  const sig::DCObjective objective = sig::dc_objective(inst);
  const double polarization_error = std::abs(objective.value - inst.z.dot(inst.delta));
  const double asymptotic_objective = sig::objective_j2(
      refs, player, sig::asymptotic_state(sig::assemble(net, allocations, refs)));
  const double objective_equality_error = std::abs(objective.value - asymptotic_objective);

  std::cout << "max_row_residual=" << fmt(max_residual) << "\n"
            << "objective_equality_error=" << fmt(objective_equality_error) << "\n"
            << "polarization_error=" << fmt(polarization_error) << "\n"
            << "decomposition_error=" << fmt(max_decomposition_error) << "\n"
            << "printed_formula_max_abs=" << fmt(max_printed) << "\n";

  const bool ok = max_residual < 1e-8 && objective_equality_error < 1e-9 &&
                  max_decomposition_error < 1e-10 && polarization_error < 1e-12;
  std::cout << "identities=" << (ok ? "ok" : "violated") << "\n";
  return ok ? kExitOk : kExitIdentityViolated;
}

struct BenchArgs {
  std::string scenario;
  std::string out_dir = ".";
  bool emit_timings = false;
};

int cmd_bench(const BenchArgs& args) {
  sig::ScenarioConfig cfg;
  try {
    cfg = sig::load_scenario(args.scenario);
  } catch (const std::exception& e) {
    std::cerr << "scenario error: " << e.what() << "\n";
    return kExitBadInput;
  }
  std::vector<sig::RunRecord> records;
  try {
    records = sig::run_scenario(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  try {
    std::filesystem::create_directories(args.out_dir);
    const auto path = [&](const char* name) {
      return (std::filesystem::path(args.out_dir) / name).string();
    };
    sig::write_csv(records, path("results.csv"));
    sig::write_jsonl(records, path("results.jsonl"));
    std::cout << "records=" << records.size() << "\n"
              << "csv=" << path("results.csv") << "\n"
              << "jsonl=" << path("results.jsonl") << "\n";
    if (cfg.experiment == sig::Experiment::centrality_study) {
      sig::write_hinge_pairs_csv(records, path("hinge_pairs.csv"));
      std::cout << "hinge_pairs=" << path("hinge_pairs.csv") << "\n";
    }
    if (cfg.experiment == sig::Experiment::budget_sweep) {
      sig::write_budget_triples_csv(records, path("budget_impact.csv"));
      std::cout << "budget_impact=" << path("budget_impact.csv") << "\n";
    }
    if (args.emit_timings) {
      sig::write_timings_csv(records, path("timings.csv"));
      std::cout << "timings=" << path("timings.csv") << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  std::vector<std::string> solver_names;
  for (const auto& rec : records) {
    if (std::find(solver_names.begin(), solver_names.end(), rec.solver) == solver_names.end() &&
        !rec.solver.empty()) {
      solver_names.push_back(rec.solver);
    }
  }
  for (const auto& name : solver_names) {
    const sig::SolverSummary s = sig::summarize(records, name);
    std::cout << "solver=" << name << " runs=" << s.runs
              << " mean_objective=" << fmt(s.mean_objective)
              << " mean_improvement=" << fmt(s.mean_improvement) << "\n";
  }
  int failures = 0;
  for (const auto& rec : records) failures += rec.error.empty() ? 0 : 1;
  std::cout << "failed_runs=" << failures << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Social influence game toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate a trust network as JSON");
  generate->add_option("--model", gen.model,
                       "er | ws | sbm | star | two-cliques | three-node-asymmetric")
      ->required();
  generate->add_option("--nodes", gen.nodes, "number of individuals M");
  generate->add_option("--seed", gen.seed, "random seed")->each([&gen](const std::string&) {
    gen.seed_set = true;
  });
  generate->add_option("--p", gen.p, "er edge probability");
  generate->add_option("--ring-degree", gen.ring_degree, "ws ring degree (even)");
  generate->add_option("--rewire-prob", gen.rewire_prob, "ws rewiring probability");
  generate->add_option("--blocks", gen.blocks, "sbm comma-separated block sizes");
  generate->add_option("--p-in", gen.p_in, "sbm intra-block edge probability");
  generate->add_option("--p-out", gen.p_out, "sbm inter-block edge probability");
  generate->add_option("--out", gen.out, "output JSON path")->required();

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Optimize one player's allocation");
  solve_cmd->add_option("--network", solve.network, "network JSON file")->required();
  solve_cmd->add_option("--players", solve.players, "number of players P");
  solve_cmd->add_option("--budget", solve.budget, "influence budget lambda");
  solve_cmd->add_option("--solver", solve.solver, "il | pg | random | centrality");
  solve_cmd->add_option("--seed", solve.seed, "seed for opponent draws")->required();
  solve_cmd->add_option("--out", solve.out, "allocation JSON path");
  solve_cmd->add_option("--max-iters", solve.max_iters, "IL iteration cap");
  solve_cmd->add_option("--step-size", solve.step_size, "IL step size");
  solve_cmd->add_option("--pg-iters", solve.pg_iters, "oracle iteration count");

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Run the influenced dynamics forward");
  simulate->add_option("--network", sim.network, "network JSON file")->required();
  simulate->add_option("--players", sim.players, "number of players P");
  simulate->add_option("--budget", sim.budget, "influence budget lambda");
  simulate->add_option("--seed", sim.seed, "seed for allocations")->required();
  simulate->add_option("--steps", sim.steps, "number of update steps");
  simulate->add_option("--out", sim.out, "trajectory JSON path");

  VerifyDcArgs dc;
  auto* verify = app.add_subcommand("verify-dc", "Check the DC reformulation identities");
  verify->add_option("--network", dc.network, "network JSON file")->required();
  verify->add_option("--seed", dc.seed, "seed for allocations")->required();
  verify->add_option("--players", dc.players, "number of players P");
  verify->add_option("--budget", dc.budget, "influence budget lambda");
  verify->add_option("--perturb", dc.perturb, "inject a z perturbation (diagnostics)");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run a scenario file");
  bench_cmd->add_option("--scenario", bench.scenario, "scenario JSON file")->required();
  bench_cmd->add_option("--out-dir", bench.out_dir, "output directory");
  bench_cmd->add_flag("--emit-timings", bench.emit_timings,
                      "also write machine-local timings.csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  if (generate->parsed()) return cmd_generate(gen);
  if (solve_cmd->parsed()) return cmd_solve(solve);
  if (simulate->parsed()) return cmd_simulate(sim);
  if (verify->parsed()) return cmd_verify_dc(dc);
  if (bench_cmd->parsed()) return cmd_bench(bench);
  return kExitBadInput;
}
