#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <optional>
#include <vector>

#include "sig/errors.hpp"
#include "sig/game.hpp"
#include "sig/network.hpp"

namespace sig {

// One player's nonnegative per-individual budget allocation, sum <= budget.
struct InfluenceAllocation {
  Eigen::VectorXd weights;
  double budget = 0.0;
};

inline void validate_allocation(const InfluenceAllocation& a) {
  if (a.weights.minCoeff() < 0.0) {
    throw std::invalid_argument("allocation has a negative entry");
  }
  if (a.weights.sum() > a.budget + 1e-12) {
    throw std::invalid_argument("allocation exceeds its budget");
  }
}

// Normalized augmented system: the network, the P player allocations and the
// diagonal of N_i = diag(1 + sum_p W_p). The full (P+M)D update matrix is
// never materialized; `step` and `asymptotic_state` work on the M x M blocks.
// Immutable after assembly; the factorization of (N_i - W) is built eagerly
// when the total influence admits one.
class AugmentedSystem {
 public:
  AugmentedSystem(SocialNetwork network, std::vector<InfluenceAllocation> allocations,
                  ReferenceSet references)
      : network_(std::move(network)),
        allocations_(std::move(allocations)),
        references_(std::move(references)) {
    const int m = network_.size;
    const auto players = static_cast<int>(allocations_.size());
    if (references_.count != players) {
      throw DimensionError("assemble: one reference per allocation required");
    }
    player_weights_.resize(m, players);
    for (int p = 0; p < players; ++p) {
      if (allocations_[p].weights.size() != m) {
        throw DimensionError("assemble: allocation length differs from network size");
      }
      player_weights_.col(p) = allocations_[p].weights;
    }
    n_inv_diag_ = Eigen::VectorXd::Ones(m) + player_weights_.rowwise().sum();
    total_influence_ = player_weights_.sum();
    if (total_influence_ > 0.0) {
      Eigen::MatrixXd system = -network_.trust;
      system.diagonal() += n_inv_diag_;
      factorization_.emplace(system);
    }
  }

  const SocialNetwork& network() const { return network_; }
  const std::vector<InfluenceAllocation>& allocations() const { return allocations_; }
  const ReferenceSet& references() const { return references_; }
  const Eigen::VectorXd& n_inv_diag() const { return n_inv_diag_; }
  const Eigen::MatrixXd& player_weights() const { return player_weights_; }
  double total_influence() const { return total_influence_; }

  const Eigen::PartialPivLU<Eigen::MatrixXd>& factorization() const {
    if (!factorization_) {
      throw SingularSystemError(
          "zero total influence: (N_i - W) is the singular Laplacian");
    }
    return *factorization_;
  }

 private:
  SocialNetwork network_;
  std::vector<InfluenceAllocation> allocations_;
  ReferenceSet references_;
  Eigen::MatrixXd player_weights_;  // M x P, column p = W_p
  Eigen::VectorXd n_inv_diag_;
  double total_influence_ = 0.0;
  std::optional<Eigen::PartialPivLU<Eigen::MatrixXd>> factorization_;
};

inline AugmentedSystem assemble(SocialNetwork network,
                                std::vector<InfluenceAllocation> allocations,
                                ReferenceSet references) {
  return AugmentedSystem(std::move(network), std::move(allocations), std::move(references));
}

// One step of the influenced dynamics, blockwise per individual:
//   x_i' = (W*R + W x)_i / n_i
inline OpinionState step(const AugmentedSystem& sys, const OpinionState& x) {
  if (x.dim != sys.references().dim) throw DimensionError("step: dimension mismatch");
  if (x.individuals() != sys.network().size) throw DimensionError("step: state length mismatch");
  Eigen::MatrixXd next = sys.player_weights() * sys.references().vectors +
                         sys.network().trust * state_matrix(x);
  next.array().colwise() /= sys.n_inv_diag().array();
  return state_from_matrix(next);
}

// Steady state of the influenced dynamics: one factorized solve with the P
// player columns as right-hand sides, then a combination with the references.
inline OpinionState asymptotic_state(const AugmentedSystem& sys) {
  const Eigen::MatrixXd mixing = sys.factorization().solve(sys.player_weights());
  return state_from_matrix(mixing * sys.references().vectors);
}

// Unforced consensus: iterate x <- (W (x) I_D) x until the step difference
// falls below 1e-12 (cap 100000).
inline OpinionState consensus_state(const SocialNetwork& net, const OpinionState& x0) {
  if (x0.individuals() != net.size) throw DimensionError("consensus_state: state length mismatch");
  Eigen::MatrixXd x = state_matrix(x0);
  for (int iter = 0; iter < 100000; ++iter) {
    Eigen::MatrixXd next = net.trust * x;
    const double diff = (next - x).cwiseAbs().maxCoeff();
    x.swap(next);
    if (diff < 1e-12) return state_from_matrix(x);
  }
  throw ConvergenceError("consensus_state: no convergence in 100000 iterations (periodic chain?)");
}

// Membership test against ConvexHull(references). The references are the
// P = D+1 affinely independent vertices of a simplex, so membership reduces
// to nonnegative barycentric coordinates of each opinion block.
inline bool hull_check(const ReferenceSet& refs, const std::vector<OpinionState>& trajectory,
                       double tol = 1e-9) {
  if (refs.dim > 3) throw std::invalid_argument("hull_check: D <= 3 only");
  if (refs.count != refs.dim + 1) {
    throw DimensionError("hull_check: references must be D+1 simplex vertices");
  }
  Eigen::MatrixXd barycentric(refs.dim + 1, refs.count);
  barycentric.topRows(refs.dim) = refs.vectors.transpose();
  barycentric.bottomRows(1).setOnes();
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(barycentric);

  Eigen::VectorXd rhs(refs.dim + 1);
  for (const OpinionState& state : trajectory) {
    if (state.dim != refs.dim) throw DimensionError("hull_check: dimension mismatch");
    const auto x = state_matrix(state);
    for (int i = 0; i < x.rows(); ++i) {
      rhs.head(refs.dim) = x.row(i).transpose();
      rhs(refs.dim) = 1.0;
      const Eigen::VectorXd gamma = lu.solve(rhs);
      if (gamma.minCoeff() < -tol) return false;
    }
  }
  return true;
}

}  // namespace sig
