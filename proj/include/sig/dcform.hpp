#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sig/dynamics.hpp"
#include "sig/errors.hpp"
#include "sig/game.hpp"
#include "sig/network.hpp"
#include "sig/solvers.hpp"

namespace sig {

// Auxiliary quantities of the difference-of-convex reformulation for one
// player: z solves the transposed system, delta stacks the reference-weighted
// allocations, s is the combined per-individual influence.
struct DCInstance {
  Eigen::VectorXd z;      // length M*D
  Eigen::VectorXd delta;  // length M*D, block i = sum_j W_j[i] r_j
  Eigen::VectorXd s;      // length M, sum_j W_j
  int player = 0;
  int dim = 1;
};

struct DCObjective {
  double value = 0.0;
  double convex_part = 0.0;   // 0.5 |z + delta|^2
  double concave_part = 0.0;  // 0.5 (|z|^2 + |delta|^2)
};

struct DCRowSplit {
  double convex_g = 0.0;
  double concave_g = 0.0;
  double printed_g = 0.0;  // the published constraint form, evaluated verbatim
};

// Solves (N_i - W)^T (x) I_D z = 1_M (x) r_p blockwise: z_i = y_i r_p with
// (N_i - W)^T y = 1_M, and assembles delta and s.
inline DCInstance build_dc_instance(const SocialNetwork& net, const ReferenceSet& refs,
                                    int player,
                                    const std::vector<InfluenceAllocation>& allocations) {
  if (player < 0 || player >= refs.count ||
      static_cast<int>(allocations.size()) != refs.count) {
    throw DimensionError("build_dc_instance: one allocation per reference required");
  }
  const int m = net.size;
  const int d = refs.dim;
  const Eigen::MatrixXd cols = detail::stack_allocations(allocations, m);

  DCInstance inst;
  inst.player = player;
  inst.dim = d;
  inst.s = cols.rowwise().sum();
  const Eigen::VectorXd y = detail::influence_response(net.trust, inst.s);

  inst.z.resize(m * d);
  inst.delta.resize(m * d);
  const Eigen::MatrixXd delta_rows = cols * refs.vectors;  // M x D
  for (int i = 0; i < m; ++i) {
    inst.z.segment(i * d, d) = y(i) * refs.vectors.row(player).transpose();
    inst.delta.segment(i * d, d) = delta_rows.row(i).transpose();
  }
  return inst;
}

namespace detail {

// Trust term (W^T (x) I_D z)_k for stacked row index k = i*D + d.
inline double trust_term(const DCInstance& inst, const SocialNetwork& net, int k) {
  const int i = k / inst.dim;
  const int component = k % inst.dim;
  double acc = 0.0;
  for (int j = 0; j < net.size; ++j) {
    acc += net.trust(j, i) * inst.z(j * inst.dim + component);
  }
  return acc;
}

}  // namespace detail

// Residual of the k-th row of the defining system of z:
//   h_k = (1 + s_block(k)) z_k - (W^T z)_k - (r_p)_{k mod D},
// block(k) = floor(k / D). Vanishes when z is consistent.
inline double row_residual(const DCInstance& inst, const SocialNetwork& net,
                           const ReferenceSet& refs, int k) {
  if (k < 0 || k >= inst.z.size()) throw DimensionError("row_residual: index out of range");
  const int i = k / inst.dim;
  const int component = k % inst.dim;
  return (1.0 + inst.s(i)) * inst.z(k) - detail::trust_term(inst, net, k) -
         refs.vectors(inst.player, component);
}

// DC objective f = 0.5 |z+delta|^2 - 0.5(|z|^2 + |delta|^2); the polarization
// identity makes the value equal z . delta.
inline DCObjective dc_objective(const DCInstance& inst) {
  DCObjective result;
  result.convex_part = 0.5 * (inst.z + inst.delta).squaredNorm();
  result.concave_part = 0.5 * (inst.z.squaredNorm() + inst.delta.squaredNorm());
  result.value = result.convex_part - result.concave_part;
  return result;
}

// Row-wise DC split of h_k. The bilinear term s z_k expands through
// 2ab = (a+b)^2 - a^2 - b^2, giving two convex quadratics:
//   convex_g  = z_k + 0.5 (s + z_k)^2 - u_k - (r_p)_{k mod D}
//   concave_g = 0.5 s^2 + 0.5 z_k^2
// with convex_g - concave_g = h_k exactly. `printed_g` evaluates the
// published constraint expression verbatim; it does not vanish at consistent
// points (the scalar fixture evaluates to 7), which is reported rather than
// patched over.
inline DCRowSplit dc_decompose_row(const DCInstance& inst, const SocialNetwork& net,
                                   const ReferenceSet& refs, int k) {
  if (k < 0 || k >= inst.z.size()) throw DimensionError("dc_decompose_row: index out of range");
  const int i = k / inst.dim;
  const int component = k % inst.dim;
  const double s = inst.s(i);
  const double z = inst.z(k);
  const double u = detail::trust_term(inst, net, k);
  const double r = refs.vectors(inst.player, component);

  DCRowSplit split;
  split.convex_g = z + 0.5 * (s + z) * (s + z) - u - r;
  split.concave_g = 0.5 * s * s + 0.5 * z * z;
  split.printed_g = (2.0 + s + z) * (2.0 + s + z) + (2.0 * u + 2.0 * r) * (2.0 * u + 2.0 * r) -
                    ((2.0 + 2.0 * s) * (2.0 + 2.0 * s) + z * z + 4.0 * u * u + 4.0 * r * r);
  return split;
}

}  // namespace sig
