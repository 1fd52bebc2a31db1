#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "sig/errors.hpp"

namespace sig {

// P unit-norm reference opinions forming a regular simplex in R^D,
// D = max(P-1, 1). Row p of `vectors` is r_p.
struct ReferenceSet {
  int count = 0;
  int dim = 0;
  Eigen::MatrixXd vectors;
};

// Stacked opinions of M individuals; individual i occupies values[i*dim, (i+1)*dim).
struct OpinionState {
  int dim = 1;
  Eigen::VectorXd values;

  int individuals() const { return static_cast<int>(values.size()) / dim; }
};

inline Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
state_matrix(const OpinionState& x) {
  return {x.values.data(), x.values.size() / x.dim, x.dim};
}

inline OpinionState state_from_matrix(const Eigen::MatrixXd& rows) {
  OpinionState x;
  x.dim = static_cast<int>(rows.cols());
  x.values.resize(rows.size());
  Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      x.values.data(), rows.rows(), rows.cols()) = rows;
  return x;
}

// Vertices of the centered regular simplex, embedded in R^(P-1) through the
// Helmert basis of the zero-sum hyperplane. Closed form, so the orientation
// is canonical and the output is reproducible bit-for-bit:
//   v_i[k] = sqrt(P/(P-1)) * h_k[i],  h_k the k-th Helmert direction.
// Unit norms, pairwise dot products -1/(P-1), vectors sum to zero.
inline ReferenceSet simplex_references(int players) {
  if (players < 2 || players > 12) {
    throw std::invalid_argument("simplex_references: P must be in [2, 12]");
  }
  const int dim = players - 1;
  ReferenceSet refs;
  refs.count = players;
  refs.dim = dim;
  refs.vectors = Eigen::MatrixXd::Zero(players, dim);
  const double scale = std::sqrt(static_cast<double>(players) / (players - 1));
  for (int k = 1; k <= dim; ++k) {
    const double unit = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
    for (int i = 1; i <= k; ++i) refs.vectors(i - 1, k - 1) = scale * unit;
    refs.vectors(k, k - 1) = -scale * unit * k;
  }
  return refs;
}

inline void validate_reference_set(const ReferenceSet& refs) {
  if (refs.count < 2) throw std::invalid_argument("reference set needs P >= 2");
  if (refs.dim != std::max(refs.count - 1, 1)) {
    throw DimensionError("reference dimension must be max(P-1, 1)");
  }
  const double expected_dot = -1.0 / (refs.count - 1);
  for (int a = 0; a < refs.count; ++a) {
    if (std::abs(refs.vectors.row(a).norm() - 1.0) > 1e-12) {
      throw std::invalid_argument("reference vector is not unit norm");
    }
    for (int b = a + 1; b < refs.count; ++b) {
      if (std::abs(refs.vectors.row(a).dot(refs.vectors.row(b)) - expected_dot) > 1e-12) {
        throw std::invalid_argument("reference pair is not simplex-angled");
      }
    }
  }
  if (refs.vectors.colwise().sum().cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("reference vectors do not sum to zero");
  }
}

// J1: Euclidean distance between r_p and the mean individual opinion.
inline double objective_j1(const ReferenceSet& refs, int player, const OpinionState& x) {
  if (x.dim != refs.dim) throw DimensionError("objective_j1: dimension mismatch");
  const Eigen::VectorXd mean = state_matrix(x).colwise().mean();
  return (refs.vectors.row(player).transpose() - mean).norm();
}

// J2: projection of the summed individual opinions onto r_p
// (M times the mean projection).
inline double objective_j2(const ReferenceSet& refs, int player, const OpinionState& x) {
  if (x.dim != refs.dim) throw DimensionError("objective_j2: dimension mismatch");
  const Eigen::VectorXd total = state_matrix(x).colwise().sum();
  return refs.vectors.row(player).dot(total);
}

// Gain in mean projected opinion of `x_alg` over a baseline state.
inline double improvement(const ReferenceSet& refs, int player, const OpinionState& x_alg,
                          const OpinionState& x_base) {
  if (x_alg.values.size() != x_base.values.size() || x_alg.dim != x_base.dim) {
    throw DimensionError("improvement: states differ in shape");
  }
  const double m = x_alg.individuals();
  return (objective_j2(refs, player, x_alg) - objective_j2(refs, player, x_base)) / m;
}

}  // namespace sig
