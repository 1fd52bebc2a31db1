#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "sig/dynamics.hpp"
#include "sig/errors.hpp"
#include "sig/game.hpp"
#include "sig/netgen.hpp"
#include "sig/network.hpp"
#include "sig/rng.hpp"

namespace sig {

enum class Momentum { nesterov, none };

struct ILParams {
  double step_size = 0.1;
  int max_iters = 500;
  double tol = 1e-8;  // infinity-norm change in W_p
  Momentum momentum = Momentum::nesterov;
};

struct SolveReport {
  InfluenceAllocation allocation;
  double objective = 0.0;  // J2 at the asymptotic state of the returned allocation
  int iterations = 0;
  bool converged = false;
  double wall_time_s = 0.0;
};

namespace detail {

// Solves (N_i - W)^T y = 1_M for the combined per-individual influence `s`.
inline Eigen::VectorXd influence_response(const Eigen::MatrixXd& trust,
                                          const Eigen::VectorXd& s) {
  if (s.sum() <= 0.0) {
    throw SingularSystemError("zero total influence: system is singular");
  }
  Eigen::MatrixXd system = -trust.transpose();
  system.diagonal().array() += 1.0 + s.array();
  return Eigen::PartialPivLU<Eigen::MatrixXd>(system).solve(
      Eigen::VectorXd::Ones(trust.rows()));
}

// J2 of player p at the asymptotic state, evaluated through one transposed
// solve: J2 = y . d with d_i = sum_j W_j[i] (r_j . r_p).
inline double asymptotic_objective(const Eigen::MatrixXd& trust, const ReferenceSet& refs,
                                   int player, const Eigen::MatrixXd& player_weights) {
  const Eigen::VectorXd s = player_weights.rowwise().sum();
  const Eigen::VectorXd y = influence_response(trust, s);
  const Eigen::VectorXd ref_dots = refs.vectors * refs.vectors.row(player).transpose();
  return y.dot(player_weights * ref_dots);
}

inline Eigen::MatrixXd stack_allocations(const std::vector<InfluenceAllocation>& allocations,
                                         int m) {
  Eigen::MatrixXd cols(m, static_cast<Eigen::Index>(allocations.size()));
  for (std::size_t p = 0; p < allocations.size(); ++p) {
    if (allocations[p].weights.size() != m) {
      throw DimensionError("allocation length differs from network size");
    }
    cols.col(static_cast<Eigen::Index>(p)) = allocations[p].weights;
  }
  return cols;
}

// Full player list with the ego vector inserted at index `player`.
inline std::vector<InfluenceAllocation> with_ego(const std::vector<InfluenceAllocation>& opponents,
                                                 int player, Eigen::VectorXd ego_weights,
                                                 double budget) {
  std::vector<InfluenceAllocation> all;
  all.reserve(opponents.size() + 1);
  all.insert(all.end(), opponents.begin(), opponents.end());
  all.insert(all.begin() + player, InfluenceAllocation{std::move(ego_weights), budget});
  return all;
}

}  // namespace detail

// Euclidean projection onto {w >= 0, sum(w) <= budget}: clip the negatives,
// then project onto the scaled simplex if the sum still exceeds the budget.
inline Eigen::VectorXd project_budget(Eigen::VectorXd w, double budget) {
  w = w.cwiseMax(0.0);
  const double total = w.sum();
  if (total <= budget) return w;
  std::vector<double> sorted(w.data(), w.data() + w.size());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double threshold = 0.0;
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    cumulative += sorted[j];
    const double candidate = (cumulative - budget) / static_cast<double>(j + 1);
    if (j + 1 == sorted.size() || sorted[j + 1] <= candidate) {
      threshold = candidate;
      break;
    }
  }
  return (w.array() - threshold).cwiseMax(0.0);
}

// Marginal objective coefficients of W_p with N_i frozen at the current
// allocations: c = ((N_i - W)^-T 1_M) * (r_p . r_p).
inline Eigen::VectorXd linear_coeffs(const SocialNetwork& net, const ReferenceSet& refs,
                                     int player,
                                     const std::vector<InfluenceAllocation>& all_allocations) {
  const Eigen::MatrixXd cols = detail::stack_allocations(all_allocations, net.size);
  const Eigen::VectorXd y = detail::influence_response(net.trust, cols.rowwise().sum());
  return y * refs.vectors.row(player).squaredNorm();
}

// Closed-form optimum of max c.w over {w >= 0, 1.w <= budget}: the whole
// budget on the lowest-index maximizing coordinate, or zero if no coefficient
// is positive.
inline InfluenceAllocation lp_step(const Eigen::VectorXd& c, double budget) {
  if (budget <= 0.0) throw std::invalid_argument("lp_step: budget must be positive");
  InfluenceAllocation result{Eigen::VectorXd::Zero(c.size()), budget};
  Eigen::Index best = 0;
  for (Eigen::Index k = 1; k < c.size(); ++k) {
    if (c(k) > c(best)) best = k;
  }
  if (c(best) > 0.0) result.weights(best) = budget;
  return result;
}

// Iterated Linear solver: repeatedly freeze the normalization at the current
// point, take the linear program's vertex as a target, and move toward it
// with a damped, Nesterov-accelerated step. Returns the iterate with the
// highest true objective seen.
inline SolveReport il_solve(const SocialNetwork& net, const ReferenceSet& refs, int player,
                            const std::vector<InfluenceAllocation>& opponents, double budget,
                            const ILParams& params = {}) {
  if (budget <= 0.0) throw std::invalid_argument("il_solve: budget must be positive");
  if (params.step_size <= 0.0 || params.tol <= 0.0 || params.max_iters < 1) {
    throw std::invalid_argument("il_solve: parameters must be positive");
  }
  if (player < 0 || player >= refs.count ||
      static_cast<int>(opponents.size()) + 1 != refs.count) {
    throw DimensionError("il_solve: need one reference per player, ego index in range");
  }
  const auto start = std::chrono::steady_clock::now();
  const int m = net.size;
  const Eigen::MatrixXd opponent_cols = detail::stack_allocations(opponents, m);
  const Eigen::VectorXd opponent_s = opponent_cols.rowwise().sum();
  const Eigen::VectorXd ref_dots = refs.vectors * refs.vectors.row(player).transpose();
  const double rp_norm2 = refs.vectors.row(player).squaredNorm();

  // Opponents occupy the player slots other than `player`, in order.
  Eigen::VectorXd opponent_pull = Eigen::VectorXd::Zero(m);
  {
    int slot = 0;
    for (int j = 0; j < refs.count; ++j) {
      if (j == player) continue;
      opponent_pull += opponent_cols.col(slot++) * ref_dots(j);
    }
  }

  const auto objective_at = [&](const Eigen::VectorXd& ego) {
    const Eigen::VectorXd y = detail::influence_response(net.trust, opponent_s + ego);
    return y.dot(opponent_pull) + y.dot(ego) * ref_dots(player);
  };

  Eigen::VectorXd x = Eigen::VectorXd::Constant(m, budget / m);
  Eigen::VectorXd lookahead = x;
  double momentum_t = 1.0;

  SolveReport report;
  report.allocation = {x, budget};
  report.objective = objective_at(x);

  for (int iter = 1; iter <= params.max_iters; ++iter) {
    const Eigen::VectorXd c =
        detail::influence_response(net.trust, opponent_s + lookahead) * rp_norm2;
    const InfluenceAllocation target = lp_step(c, budget);
    const Eigen::VectorXd x_next =
        project_budget(lookahead + params.step_size * (target.weights - lookahead), budget);

    const double objective = objective_at(x_next);
    if (objective > report.objective) {
      report.objective = objective;
      report.allocation.weights = x_next;
    }

    const double change = (x_next - x).cwiseAbs().maxCoeff();
    if (params.momentum == Momentum::nesterov) {
      const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * momentum_t * momentum_t));
      lookahead = project_budget(
          x_next + ((momentum_t - 1.0) / t_next) * (x_next - x), budget);
      momentum_t = t_next;
    } else {
      lookahead = x_next;
    }
    x = x_next;
    report.iterations = iter;
    if (change < params.tol) {
      report.converged = true;
      break;
    }
  }
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// J2 at the asymptotic state for a full list of allocations, one per player.
inline double evaluate_allocation_objective(const SocialNetwork& net, const ReferenceSet& refs,
                                            int player,
                                            const std::vector<InfluenceAllocation>& allocations) {
  return detail::asymptotic_objective(
      net.trust, refs, player, detail::stack_allocations(allocations, net.size));
}

// Uniform draws scaled so the budget is spent exactly.
inline InfluenceAllocation random_allocation(int m, double budget, std::uint64_t seed) {
  if (budget <= 0.0) throw std::invalid_argument("random_allocation: budget must be positive");
  Rng rng(seed);
  Eigen::VectorXd w(m);
  for (int i = 0; i < m; ++i) w(i) = rng.uniform_positive();
  w *= budget / w.sum();
  return {w, budget};
}

// Budget spread proportionally to eigenvector centrality.
inline InfluenceAllocation centrality_allocation(const SocialNetwork& net, double budget) {
  if (budget <= 0.0) throw std::invalid_argument("centrality_allocation: budget must be positive");
  const CentralityVector centrality = eigenvector_centrality(net);
  return {centrality.values * budget, budget};
}

// Projected gradient ascent on the true objective J2(asymptotic_state(.)),
// with central finite differences. Serves as a solver-independent reference
// point; kept to small networks, where the 2M solves per gradient stay cheap.
inline SolveReport pg_oracle(const SocialNetwork& net, const ReferenceSet& refs, int player,
                             const std::vector<InfluenceAllocation>& opponents, double budget,
                             int iters = 200, double fd_eps = 1e-6) {
  if (net.size > 200) throw std::invalid_argument("pg_oracle: M <= 200 by policy");
  if (budget <= 0.0) throw std::invalid_argument("pg_oracle: budget must be positive");
  if (player < 0 || player >= refs.count ||
      static_cast<int>(opponents.size()) + 1 != refs.count) {
    throw DimensionError("pg_oracle: need one reference per player, ego index in range");
  }
  const auto start = std::chrono::steady_clock::now();
  const int m = net.size;

  const auto objective_at = [&](Eigen::VectorXd ego) {
    const AugmentedSystem sys =
        assemble(net, detail::with_ego(opponents, player, std::move(ego), budget), refs);
    return objective_j2(refs, player, asymptotic_state(sys));
  };

  Eigen::VectorXd x = Eigen::VectorXd::Constant(m, budget / m);
  SolveReport report;
  report.allocation = {x, budget};
  report.objective = objective_at(x);
  report.converged = true;

  Eigen::VectorXd gradient(m);
  Eigen::VectorXd probe = x;
  for (int iter = 1; iter <= iters; ++iter) {
    probe = x;
    for (int k = 0; k < m; ++k) {
      probe(k) = x(k) + fd_eps;
      const double up = objective_at(probe);
      probe(k) = x(k) - fd_eps;
      const double down = objective_at(probe);
      probe(k) = x(k);
      gradient(k) = (up - down) / (2.0 * fd_eps);
    }
    const double norm = gradient.norm();
    if (norm < 1e-15) break;
    const double step = 2.0 * budget / (8.0 + iter);  // diminishing, scale-free
    x = project_budget(x + (step / norm) * gradient, budget);
    const double objective = objective_at(x);
    report.iterations = iter;
    if (objective > report.objective) {
      report.objective = objective;
      report.allocation.weights = x;
    }
  }
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace sig
