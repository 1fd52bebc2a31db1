// Acceptance suite: runs each shipping criterion end to end and prints one
// pass/fail line per criterion. Exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sig/dcform.hpp"
#include "sig/dynamics.hpp"
#include "sig/game.hpp"
#include "sig/harness.hpp"
#include "sig/netgen.hpp"
#include "sig/network.hpp"
#include "sig/solvers.hpp"

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, bool passed, const std::string& what, double seconds,
            const std::string& detail) {
  std::printf("[%s] criterion %2d: %s (%.1fs) %s\n", passed ? "PASS" : "FAIL", id, what.c_str(),
              seconds, detail.c_str());
  std::fflush(stdout);
  if (!passed) ++failures;
}

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return buf;
}

sig::OpinionState random_hull_state(const sig::ReferenceSet& refs, int individuals,
                                    std::mt19937_64& engine) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Eigen::MatrixXd rows(individuals, refs.dim);
  for (int i = 0; i < individuals; ++i) {
    Eigen::VectorXd gamma(refs.count);
    double total = 0.0;
    for (int p = 0; p < refs.count; ++p) {
      gamma(p) = -std::log(1.0 - unit(engine));
      total += gamma(p);
    }
    gamma /= total;
    rows.row(i) = (gamma.transpose() * refs.vectors).row(0);
  }
  return sig::state_from_matrix(rows);
}

std::vector<sig::InfluenceAllocation> random_players(int m, int count, double budget,
                                                     std::uint64_t seed) {
  std::vector<sig::InfluenceAllocation> out;
  for (int j = 0; j < count; ++j) {
    out.push_back(sig::random_allocation(m, budget, sig::mix_seed(seed, 500 + j)));
  }
  return out;
}

sig::ScenarioConfig comparison_config(int m, std::vector<sig::EgoSolver> solvers) {
  sig::ScenarioConfig cfg;
  cfg.experiment = sig::Experiment::compare;
  cfg.generator.model = "er";
  cfg.generator.params = {{"p", 0.6}};
  cfg.network_size = m;
  cfg.players = 3;
  cfg.budget = 0.5;
  cfg.ego_solvers = std::move(solvers);
  cfg.seeds = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  return cfg;
}

// criteria 1 and 2 share the comparison records
std::vector<sig::RunRecord> comparison_records;

void criterion_1_oracle_quality() {
  const auto t0 = Clock::now();
  for (const int m : {10, 50, 100}) {
    const auto batch = sig::run_compare(comparison_config(
        m, {sig::EgoSolver::il, sig::EgoSolver::pg_oracle, sig::EgoSolver::random}));
    comparison_records.insert(comparison_records.end(), batch.begin(), batch.end());
  }
  double il_mean = 0.0;
  double pg_mean = 0.0;
  double random_mean = 0.0;
  int n = 0;
  for (const auto& rec : comparison_records) {
    if (!rec.error.empty()) continue;
    if (rec.solver == "il") {
      il_mean += rec.objective_j2_mean;
      ++n;
    }
    if (rec.solver == "pg_oracle") pg_mean += rec.objective_j2_mean;
    if (rec.solver == "random") random_mean += rec.objective_j2_mean;
  }
  il_mean /= n;
  pg_mean /= n;
  random_mean /= n;
  const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  const bool passed =
      n == 30 && il_mean >= 0.93 * pg_mean && il_mean > random_mean && pg_mean > random_mean;
  report(1, passed, "IL within 7% of the projected-gradient oracle", seconds,
         fmt("mean IL=%.4f oracle=%.4f random=%.4f ratio=%.3f (needs >= 0.93, runs=%d)",
             il_mean, pg_mean, random_mean, il_mean / pg_mean, n));
}

void criterion_2_beats_baseline() {
  const auto t0 = Clock::now();
  std::vector<double> improvements;
  for (const auto& rec : comparison_records) {
    if (rec.solver == "il" && rec.error.empty()) improvements.push_back(rec.improvement);
  }
  double mean = 0.0;
  for (double v : improvements) mean += v;
  mean /= static_cast<double>(improvements.size());
  double var = 0.0;
  for (double v : improvements) var += (v - mean) * (v - mean);
  const double se = std::sqrt(var / (static_cast<double>(improvements.size()) - 1.0) /
                              static_cast<double>(improvements.size()));
  const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  const bool passed = mean > 0.0 && mean >= 10.0 * se;
  report(2, passed, "IL improvement over the random baseline is significant", seconds,
         fmt("mean=%.4f se=%.5f margin=%.1fx (reference magnitude from the source "
             "study: 0.425; reported, not asserted)",
             mean, se, se > 0 ? mean / se : 0.0));
}

void criterion_3_centrality_study() {
  const auto t0 = Clock::now();
  sig::ScenarioConfig cfg;
  cfg.experiment = sig::Experiment::centrality_study;
  cfg.generator.model = "sbm";
  cfg.generator.params = {{"blocks", {50, 50}}, {"p_in", 0.3}, {"p_out", 0.05}};
  cfg.network_size = 100;
  cfg.players = 3;
  cfg.budget = 0.5;
  cfg.ego_solvers = {sig::EgoSolver::il, sig::EgoSolver::centrality};
  cfg.seeds.clear();
  for (std::uint64_t s = 1; s <= 30; ++s) cfg.seeds.push_back(s);
  const auto records = sig::run_centrality_study(cfg);

  const sig::SolverSummary il = sig::summarize(records, "il");
  const sig::SolverSummary centrality = sig::summarize(records, "centrality");
  const bool ordering = il.mean_objective - il.se_objective >
                        centrality.mean_objective + centrality.se_objective;

  // budget share by centrality decile, pooled over the IL records
  double top_decile = 0.0;
  double bottom_half = 0.0;
  double total = 0.0;
  for (const auto& rec : records) {
    if (rec.solver != "il" || !rec.error.empty()) continue;
    for (int i = 0; i < rec.allocation.size(); ++i) {
      const double pct = rec.centrality_percentiles[static_cast<std::size_t>(i)];
      const double w = rec.allocation(i);
      total += w;
      if (pct > 90.0) top_decile += w;
      if (pct <= 50.0) bottom_half += w;
    }
  }
  const bool hinge = top_decile > bottom_half;
  const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  report(3, ordering && hinge && il.runs == 30,
         "IL beats centrality-proportional allocation; budget hinges on the top decile",
         seconds,
         fmt("IL=%.4f+-%.4f centrality=%.4f+-%.4f; top-decile share=%.2f%% bottom-five=%.2f%%",
             il.mean_objective, il.se_objective, centrality.mean_objective,
             centrality.se_objective, 100.0 * top_decile / total,
             100.0 * bottom_half / total));
}

void criterion_4_archetypes() {
  const auto t0 = Clock::now();
  const auto records = sig::run_archetypes({7});
  double hub_share = 0.0;
  double bridge_share = 1.0;
  double large_clique_share = 0.0;
  bool center_max = false;
  for (const auto& rec : records) {
    if (!rec.error.empty()) continue;
    if (rec.generator == "star") hub_share = rec.allocation(0) / rec.budget;
    if (rec.generator == "two_cliques") {
      bridge_share = rec.allocation(8) / rec.budget;
      large_clique_share = rec.allocation.head(5).sum() / rec.budget;
    }
    if (rec.generator == "three_node_asymmetric") {
      center_max = rec.allocation(0) >= rec.allocation.maxCoeff();
    }
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  const bool passed = hub_share >= 0.99 && bridge_share < 0.01 && large_clique_share > 0.5 &&
                      center_max && seconds < 10.0;
  report(4, passed, "archetype allocations match the qualitative fixtures", seconds,
         fmt("star hub=%.4f two-cliques bridge=%.4f large-clique=%.3f three-node center max=%s",
             hub_share, bridge_share, large_clique_share, center_max ? "yes" : "no"));
}

void criterion_5_objective_equivalence() {
  const auto t0 = Clock::now();
  int coupling_violations_p2 = 0;
  int coupling_violations_rest = 0;
  int fallback_violations = 0;
  std::mt19937_64 engine(1234);
  for (const int players : {2, 3, 4}) {
    const sig::ReferenceSet refs = sig::simplex_references(players);
    for (int pair = 0; pair < 200; ++pair) {
      const sig::OpinionState a = random_hull_state(refs, 8, engine);
      const sig::OpinionState b = random_hull_state(refs, 8, engine);
      for (int p = 0; p < players; ++p) {
        if (sig::objective_j1(refs, p, a) < sig::objective_j1(refs, p, b) - 1e-9 &&
            sig::objective_j2(refs, p, a) <= sig::objective_j2(refs, p, b)) {
          (players == 2 ? coupling_violations_p2 : coupling_violations_rest) += 1;
        }
      }
    }
    // optimizer coincidence: the all-reference state minimizes J1 and
    // maximizes J2 against every sampled state
    for (int p = 0; p < players; ++p) {
      Eigen::MatrixXd rows(8, refs.dim);
      for (int i = 0; i < 8; ++i) rows.row(i) = refs.vectors.row(p);
      const sig::OpinionState star = sig::state_from_matrix(rows);
      const double j1_star = sig::objective_j1(refs, p, star);
      const double j2_star = sig::objective_j2(refs, p, star);
      for (int trial = 0; trial < 200; ++trial) {
        const sig::OpinionState x = random_hull_state(refs, 8, engine);
        if (sig::objective_j1(refs, p, x) < j1_star - 1e-9 ||
            sig::objective_j2(refs, p, x) > j2_star + 1e-9) {
          ++fallback_violations;
        }
      }
    }
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  // Pairwise coupling is exact for P=2. For P>=3 interior counterexample
  // pairs exist (closer in distance yet smaller in projection), so the suite
  // falls back to the optimizer-coincidence property for those counts and
  // reports the observed coupling violation count alongside.
  const bool passed = coupling_violations_p2 == 0 && fallback_violations == 0;
  report(5, passed, "objective equivalence property suite", seconds,
         fmt("P=2 coupling violations=%d; optimizer-coincidence violations=%d "
             "(P>=3 pairwise coupling violations observed=%d; fallback engaged by design)",
             coupling_violations_p2, fallback_violations, coupling_violations_rest));
}

void criterion_6_hull_invariance() {
  const auto t0 = Clock::now();
  std::mt19937_64 engine(77);
  const sig::ReferenceSet refs = sig::simplex_references(3);
  int violations = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 5 + static_cast<int>(engine() % 16);
    const sig::SocialNetwork net = sig::gen_erdos_renyi(m, 0.6, engine());
    const auto allocations = random_players(m, 3, 1.0, engine());
    const sig::AugmentedSystem sys = sig::assemble(net, allocations, refs);
    std::vector<sig::OpinionState> trajectory;
    trajectory.push_back(random_hull_state(refs, m, engine));
    for (int t = 0; t < 100; ++t) trajectory.push_back(sig::step(sys, trajectory.back()));
    if (!sig::hull_check(refs, trajectory, 1e-9)) ++violations;
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  report(6, violations == 0, "trajectories never leave the reference hull", seconds,
         fmt("networks=20 steps=100 violations=%d", violations));
}

void criterion_7_dynamics_oracles() {
  const auto t0 = Clock::now();
  std::mt19937_64 engine(99);
  double fixed_point_error = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 5 + static_cast<int>(engine() % 20);
    const int players = 2 + static_cast<int>(engine() % 3);
    const sig::SocialNetwork net = sig::gen_erdos_renyi(m, 0.6, engine());
    const sig::ReferenceSet refs = sig::simplex_references(players);
    const auto allocations = random_players(m, players, 0.5, engine());
    const sig::AugmentedSystem sys = sig::assemble(net, allocations, refs);
    const sig::OpinionState limit = sig::asymptotic_state(sys);
    sig::OpinionState x = random_hull_state(refs, m, engine);
    for (int t = 0; t < 10000; ++t) x = sig::step(sys, x);
    fixed_point_error =
        std::max(fixed_point_error, (x.values - limit.values).cwiseAbs().maxCoeff());
  }

  double step_error = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const int m = 3 + static_cast<int>(engine() % 8);
    const int players = 2 + static_cast<int>(engine() % 2);
    const sig::SocialNetwork net = sig::gen_erdos_renyi(m, 0.6, engine());
    const sig::ReferenceSet refs = sig::simplex_references(players);
    const auto allocations = random_players(m, players, 1.0, engine());
    const sig::AugmentedSystem sys = sig::assemble(net, allocations, refs);
    const sig::OpinionState x = random_hull_state(refs, m, engine);

    // dense oracle: materialize the full (P+M)D update matrix
    const int d = refs.dim;
    const int total = (players + m) * d;
    Eigen::VectorXd n_i = Eigen::VectorXd::Ones(m);
    for (const auto& a : allocations) n_i += a.weights;
    Eigen::MatrixXd full = Eigen::MatrixXd::Zero(total, total);
    for (int p = 0; p < players; ++p) full.block(p * d, p * d, d, d).setIdentity();
    for (int i = 0; i < m; ++i) {
      for (int p = 0; p < players; ++p) {
        full.block((players + i) * d, p * d, d, d) =
            (allocations[static_cast<std::size_t>(p)].weights(i) / n_i(i)) *
            Eigen::MatrixXd::Identity(d, d);
      }
      for (int j = 0; j < m; ++j) {
        full.block((players + i) * d, (players + j) * d, d, d) =
            (net.trust(i, j) / n_i(i)) * Eigen::MatrixXd::Identity(d, d);
      }
    }
    Eigen::VectorXd stacked(total);
    for (int p = 0; p < players; ++p) stacked.segment(p * d, d) = refs.vectors.row(p);
    stacked.tail(m * d) = x.values;
    const Eigen::VectorXd dense = (full * stacked).tail(m * d);

    const sig::OpinionState fast = sig::step(sys, x);
    step_error = std::max(step_error, (fast.values - dense).cwiseAbs().maxCoeff());
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  const bool passed = fixed_point_error < 1e-8 && step_error < 1e-12;
  report(7, passed, "asymptotic and stepwise dynamics match their oracles", seconds,
         fmt("fixed-point max err=%.2e (tol 1e-8), dense-step max err=%.2e (tol 1e-12)",
             fixed_point_error, step_error));
}

void criterion_8_dc_certification() {
  const auto t0 = Clock::now();
  std::mt19937_64 engine(11);
  double max_residual = 0.0;
  double max_split_error = 0.0;
  double max_polarization = 0.0;
  double max_objective_gap = 0.0;
  int convexity_failures = 0;
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  for (int trial = 0; trial < 10; ++trial) {
    const int m = 4 + static_cast<int>(engine() % 10);
    const sig::SocialNetwork net = sig::gen_erdos_renyi(m, 0.6, engine());
    const sig::ReferenceSet refs = sig::simplex_references(3);
    const auto allocations = random_players(m, 3, 0.5, engine());
    const sig::DCInstance inst = sig::build_dc_instance(net, refs, 2, allocations);

    for (int k = 0; k < inst.z.size(); ++k) {
      const double h = sig::row_residual(inst, net, refs, k);
      max_residual = std::max(max_residual, std::abs(h));
      const sig::DCRowSplit split = sig::dc_decompose_row(inst, net, refs, k);
      max_split_error =
          std::max(max_split_error, std::abs(split.convex_g - split.concave_g - h));
    }
    const sig::DCObjective objective_pair = sig::dc_objective(inst);
    max_polarization =
        std::max(max_polarization, std::abs(objective_pair.value - inst.z.dot(inst.delta)));
    const double direct = sig::objective_j2(
        refs, 2, sig::asymptotic_state(sig::assemble(net, allocations, refs)));
    max_objective_gap = std::max(max_objective_gap, std::abs(objective_pair.value - direct));

    // midpoint convexity probes on both split parts
    for (int probe = 0; probe < 100; ++probe) {
      const int k = static_cast<int>(engine() % inst.z.size());
      sig::DCInstance a = inst;
      sig::DCInstance b = inst;
      for (int i = 0; i < a.z.size(); ++i) {
        a.z(i) = unit(engine);
        b.z(i) = unit(engine);
      }
      for (int i = 0; i < m; ++i) {
        a.s(i) = std::abs(unit(engine));
        b.s(i) = std::abs(unit(engine));
      }
      sig::DCInstance mid = inst;
      mid.z = 0.5 * (a.z + b.z);
      mid.s = 0.5 * (a.s + b.s);
      const sig::DCRowSplit sa = sig::dc_decompose_row(a, net, refs, k);
      const sig::DCRowSplit sb = sig::dc_decompose_row(b, net, refs, k);
      const sig::DCRowSplit sm = sig::dc_decompose_row(mid, net, refs, k);
      if (sm.convex_g > 0.5 * (sa.convex_g + sb.convex_g) + 1e-12) ++convexity_failures;
      if (sm.concave_g > 0.5 * (sa.concave_g + sb.concave_g) + 1e-12) ++convexity_failures;
    }
  }

  // scalar fixture: the published constraint form does not vanish
  sig::SocialNetwork one;
  one.size = 1;
  one.trust = Eigen::MatrixXd::Ones(1, 1);
  one.adjacency = sig::BoolMatrix::Constant(1, 1, true);
  sig::ReferenceSet unit_ref;
  unit_ref.count = 1;
  unit_ref.dim = 1;
  unit_ref.vectors = Eigen::MatrixXd::Ones(1, 1);
  const sig::DCInstance scalar =
      sig::build_dc_instance(one, unit_ref, 0, {{Eigen::VectorXd::Ones(1), 1.0}});
  const double printed = sig::dc_decompose_row(scalar, one, unit_ref, 0).printed_g;

  const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  const bool passed = max_residual < 1e-8 && max_split_error < 1e-10 &&
                      convexity_failures == 0 && max_polarization < 1e-12 &&
                      max_objective_gap < 1e-9 && std::abs(printed) > 1e-6;
  report(8, passed, "DC reformulation certified; published constraint discrepancy on record",
         seconds,
         fmt("residual=%.1e split=%.1e polarization=%.1e objective-gap=%.1e convexity "
             "failures=%d printed scalar=%g",
             max_residual, max_split_error, max_polarization, max_objective_gap,
             convexity_failures, printed));
}

void criterion_9_scaling_feasibility() {
  const auto t0 = Clock::now();
  const sig::SocialNetwork net = sig::gen_erdos_renyi(1000, 0.6, 123);
  const sig::ReferenceSet refs = sig::simplex_references(3);
  const auto opponents = random_players(1000, 2, 0.5, 321);
  const sig::SolveReport report_il = sig::il_solve(net, refs, 2, opponents, 0.5);
  const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  const bool passed = report_il.wall_time_s < 300.0 && report_il.allocation.weights.sum() > 0.0;
  report(9, passed, "IL solves a 1000-individual network within the time budget", seconds,
         fmt("solve wall time=%.1fs (limit 300s), objective=%.4f, iterations=%d",
             report_il.wall_time_s, report_il.objective / 1000.0, report_il.iterations));
}

void criterion_10_budget_sweep() {
  const auto t0 = Clock::now();
  sig::ScenarioConfig cfg;
  cfg.experiment = sig::Experiment::budget_sweep;
  cfg.generator.model = "ws";
  cfg.generator.params = {{"ring_degree", 6}, {"rewire_prob", 0.3}};
  cfg.network_size = 50;
  cfg.players = 3;
  cfg.ego_solvers = {sig::EgoSolver::il};
  cfg.budgets = {0.1, 1.0};
  cfg.seeds.clear();
  for (std::uint64_t s = 1; s <= 30; ++s) cfg.seeds.push_back(s);
  const auto records = sig::run_budget_sweep(cfg);

  double low = 0.0;
  double high = 0.0;
  int low_n = 0;
  int high_n = 0;
  for (const auto& rec : records) {
    if (!rec.error.empty()) continue;
    if (rec.budget == 0.1) {
      low += rec.improvement;
      ++low_n;
    }
    if (rec.budget == 1.0) {
      high += rec.improvement;
      ++high_n;
    }
  }
  low /= low_n;
  high /= high_n;
  const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  const bool passed = low_n == 30 && high_n == 30 && low > high;
  report(10, passed, "small budgets improve more than large ones", seconds,
         fmt("mean improvement lambda=0.1: %.5f, lambda=1.0: %.5f (seeds=30)", low, high));
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion_11_cli_determinism(const char* cli_path) {
  const auto t0 = Clock::now();
  if (cli_path == nullptr) {
    report(11, false, "CLI determinism", 0.0, "no CLI binary path supplied");
    return;
  }
  const fs::path dir = fs::temp_directory_path() / "sig_acceptance_cli";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string cli = std::string("\"") + cli_path + "\"";
  const auto shell = [&](const std::string& command) {
    return std::system((command + " > /dev/null 2>&1").c_str()) == 0;
  };

  bool ok = true;
  std::string detail;

  // generate, twice: er and star
  ok &= shell(cli + " generate --model er --nodes 40 --p 0.6 --seed 3 --out " +
              (dir / "era.json").string());
  ok &= shell(cli + " generate --model er --nodes 40 --p 0.6 --seed 3 --out " +
              (dir / "erb.json").string());
  ok &= shell(cli + " generate --model star --nodes 5 --out " + (dir / "stara.json").string());
  ok &= shell(cli + " generate --model star --nodes 5 --out " + (dir / "starb.json").string());
  if (slurp(dir / "era.json") != slurp(dir / "erb.json")) {
    ok = false;
    detail += " generate-er differs;";
  }
  if (slurp(dir / "stara.json") != slurp(dir / "starb.json")) {
    ok = false;
    detail += " generate-star differs;";
  }

  // solve, twice
  ok &= shell(cli + " solve --network " + (dir / "era.json").string() +
              " --players 3 --budget 0.5 --solver il --seed 5 --out " +
              (dir / "alloc_a.json").string());
  ok &= shell(cli + " solve --network " + (dir / "era.json").string() +
              " --players 3 --budget 0.5 --solver il --seed 5 --out " +
              (dir / "alloc_b.json").string());
  if (slurp(dir / "alloc_a.json") != slurp(dir / "alloc_b.json")) {
    ok = false;
    detail += " solve differs;";
  }

  // simulate, twice
  ok &= shell(cli + " simulate --network " + (dir / "era.json").string() +
              " --players 3 --budget 0.5 --seed 4 --steps 60 --out " +
              (dir / "sim_a.json").string());
  ok &= shell(cli + " simulate --network " + (dir / "era.json").string() +
              " --players 3 --budget 0.5 --seed 4 --steps 60 --out " +
              (dir / "sim_b.json").string());
  if (slurp(dir / "sim_a.json") != slurp(dir / "sim_b.json")) {
    ok = false;
    detail += " simulate differs;";
  }

  // bench (compare + budget_sweep emissions), twice each
  {
    std::ofstream out(dir / "compare.json");
    out << R"({"experiment":"compare","generator":{"model":"er","params":{"p":0.6}},)"
        << R"("M":10,"players":3,"budget":0.5,"ego_solvers":["il","random"],"seeds":[1,2,3]})";
  }
  {
    std::ofstream out(dir / "sweep.json");
    out << R"({"experiment":"budget_sweep","generator":{"model":"ws",)"
        << R"("params":{"ring_degree":4,"rewire_prob":0.2}},"M":16,"players":3,)"
        << R"("budgets":[0.1,0.5],"ego_solvers":["il"],"seeds":[1,2]})";
  }
  for (const char* scenario : {"compare", "sweep"}) {
    for (const char* tag : {"x", "y"}) {
      ok &= shell(cli + " bench --scenario " + (dir / (std::string(scenario) + ".json")).string() +
                  " --out-dir " + (dir / (std::string(scenario) + "_" + tag)).string());
    }
    for (const char* file : {"results.csv", "results.jsonl"}) {
      if (slurp(dir / (std::string(scenario) + "_x") / file) !=
          slurp(dir / (std::string(scenario) + "_y") / file)) {
        ok = false;
        detail += std::string(" bench-") + scenario + "-" + file + " differs;";
      }
    }
  }
  if (slurp(dir / "sweep_x" / "budget_impact.csv") !=
      slurp(dir / "sweep_y" / "budget_impact.csv")) {
    ok = false;
    detail += " budget emission differs;";
  }

  const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  report(11, ok, "CLI reruns produce byte-identical output files", seconds,
         detail.empty() ? "generate/solve/simulate/bench compared" : detail);
}

}  // namespace

int main(int argc, char** argv) {
  const auto t0 = Clock::now();
  criterion_1_oracle_quality();
  criterion_2_beats_baseline();
  criterion_3_centrality_study();
  criterion_4_archetypes();
  criterion_5_objective_equivalence();
  criterion_6_hull_invariance();
  criterion_7_dynamics_oracles();
  criterion_8_dc_certification();
  criterion_9_scaling_feasibility();
  criterion_10_budget_sweep();
  criterion_11_cli_determinism(argc > 1 ? argv[1] : nullptr);
  const double total = std::chrono::duration<double>(Clock::now() - t0).count();
  std::printf("%d/11 criteria passed in %.1fs\n", 11 - failures, total);
  return failures;
}
