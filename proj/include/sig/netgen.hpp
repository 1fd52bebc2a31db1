#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "sig/errors.hpp"
#include "sig/network.hpp"
#include "sig/rng.hpp"

namespace sig {

inline constexpr int kConnectivityRetries = 100;

// Eigenvector centrality scores. `values` is L1-normalized; `percentiles`
// holds the percentile rank of each node (ties share the mean rank).
struct CentralityVector {
  Eigen::VectorXd values;
  Eigen::VectorXd percentiles;
};

namespace detail {

// Samples one directed weight per skeleton edge and row-normalizes.
// Every node is expected to carry at least one edge (the self-loop), so
// row sums are strictly positive before normalization.
inline void weight_and_normalize(SocialNetwork& net, Rng& rng) {
  const int m = net.size;
  net.trust = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (net.adjacency(i, j)) net.trust(i, j) = rng.uniform_positive();
    }
  }
  for (int i = 0; i < m; ++i) {
    const double row_sum = net.trust.row(i).sum();
    net.trust.row(i) /= row_sum;
  }
}

template <typename SkeletonFn>
inline SocialNetwork generate_with_retries(int m, SkeletonFn&& build_skeleton,
                                           std::uint64_t seed, const char* name) {
  Rng rng(seed);
  for (int attempt = 0; attempt < kConnectivityRetries; ++attempt) {
    SocialNetwork net;
    net.size = m;
    net.adjacency = BoolMatrix::Constant(m, m, false);
    build_skeleton(net, rng);
    for (int i = 0; i < m; ++i) net.adjacency(i, i) = true;  // self-loops
    if (!is_connected(net.adjacency)) continue;
    weight_and_normalize(net, rng);
    net.seed = seed;
    return net;
  }
  throw GenerationError(std::string(name) +
                        ": no connected skeleton after 100 attempts "
                        "(edge probability too low for this size?)");
}

}  // namespace detail

inline SocialNetwork gen_erdos_renyi(int m, double edge_prob, std::uint64_t seed) {
  if (m < 2) throw DimensionError("gen_erdos_renyi: M must be >= 2");
  if (edge_prob < 0.0 || edge_prob > 1.0) {
    throw std::invalid_argument("gen_erdos_renyi: edge_prob must be in [0,1]");
  }
  SocialNetwork net = detail::generate_with_retries(
      m,
      [edge_prob](SocialNetwork& n, Rng& rng) {
        for (int i = 0; i < n.size; ++i) {
          for (int j = i + 1; j < n.size; ++j) {
            if (rng.bernoulli(edge_prob)) {
              n.adjacency(i, j) = true;
              n.adjacency(j, i) = true;
            }
          }
        }
      },
      seed, "gen_erdos_renyi");
  net.generator = "er";
  net.params = {{"nodes", m}, {"p", edge_prob}};
  return net;
}

inline SocialNetwork gen_watts_strogatz(int m, int ring_degree, double rewire_prob,
                                        std::uint64_t seed) {
  if (ring_degree < 2 || ring_degree % 2 != 0 || ring_degree >= m) {
    throw std::invalid_argument("gen_watts_strogatz: ring_degree must be even and < M");
  }
  if (rewire_prob < 0.0 || rewire_prob > 1.0) {
    throw std::invalid_argument("gen_watts_strogatz: rewire_prob must be in [0,1]");
  }
  SocialNetwork net = detail::generate_with_retries(
      m,
      [ring_degree, rewire_prob](SocialNetwork& n, Rng& rng) {
        const int half = ring_degree / 2;
        for (int d = 1; d <= half; ++d) {
          for (int i = 0; i < n.size; ++i) {
            const int j = (i + d) % n.size;
            n.adjacency(i, j) = true;
            n.adjacency(j, i) = true;
          }
        }
        // Standard rewiring pass: each ring edge (i, i+d) may be re-targeted
        // from i to a uniformly random non-neighbor.
        for (int d = 1; d <= half; ++d) {
          for (int i = 0; i < n.size; ++i) {
            if (!rng.bernoulli(rewire_prob)) continue;
            const int old_target = (i + d) % n.size;
            if (!n.adjacency(i, old_target)) continue;  // already rewired away
            int degree = 0;
            for (int v = 0; v < n.size; ++v) {
              if (v != i && n.adjacency(i, v)) ++degree;
            }
            if (degree >= n.size - 1) continue;  // saturated node, keep edge
            int target = i;
            do {
              target = static_cast<int>(rng.index(static_cast<std::size_t>(n.size)));
            } while (target == i || n.adjacency(i, target));
            n.adjacency(i, old_target) = false;
            n.adjacency(old_target, i) = false;
            n.adjacency(i, target) = true;
            n.adjacency(target, i) = true;
          }
        }
      },
      seed, "gen_watts_strogatz");
  net.generator = "ws";
  net.params = {{"nodes", m}, {"ring_degree", ring_degree}, {"rewire_prob", rewire_prob}};
  return net;
}

inline SocialNetwork gen_sbm(const std::vector<int>& block_sizes, double p_in,
                             double p_out, std::uint64_t seed) {
  if (block_sizes.empty()) throw std::invalid_argument("gen_sbm: no blocks");
  for (int b : block_sizes) {
    if (b < 1) throw std::invalid_argument("gen_sbm: block sizes must be >= 1");
  }
  if (p_in < 0.0 || p_in > 1.0 || p_out < 0.0 || p_out > 1.0) {
    throw std::invalid_argument("gen_sbm: probabilities must be in [0,1]");
  }
  const int m = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
  std::vector<int> block_of(static_cast<std::size_t>(m));
  {
    int node = 0;
    for (std::size_t b = 0; b < block_sizes.size(); ++b) {
      for (int k = 0; k < block_sizes[b]; ++k) block_of[node++] = static_cast<int>(b);
    }
  }
  SocialNetwork net = detail::generate_with_retries(
      m,
      [&block_of, p_in, p_out](SocialNetwork& n, Rng& rng) {
        for (int i = 0; i < n.size; ++i) {
          for (int j = i + 1; j < n.size; ++j) {
            const double p = block_of[i] == block_of[j] ? p_in : p_out;
            if (rng.bernoulli(p)) {
              n.adjacency(i, j) = true;
              n.adjacency(j, i) = true;
            }
          }
        }
      },
      seed, "gen_sbm");
  net.generator = "sbm";
  net.params = {{"blocks", block_sizes}, {"p_in", p_in}, {"p_out", p_out}};
  return net;
}

enum class Archetype { star, two_cliques, three_node_asymmetric };

inline Archetype parse_archetype(const std::string& name) {
  if (name == "star") return Archetype::star;
  if (name == "two_cliques" || name == "two-cliques") return Archetype::two_cliques;
  if (name == "three_node_asymmetric" || name == "three-node-asymmetric") {
    return Archetype::three_node_asymmetric;
  }
  throw std::invalid_argument("unknown archetype: " + name);
}

// Deterministic fixture networks. `star_leaves` is only read for the star
// archetype (node 0 is the hub).
inline SocialNetwork gen_archetype(Archetype kind, int star_leaves = 4) {
  SocialNetwork net;
  switch (kind) {
    case Archetype::star: {
      if (star_leaves < 2) throw std::invalid_argument("star: need at least 2 leaves");
      const int m = star_leaves + 1;
      net.size = m;
      net.trust = Eigen::MatrixXd::Zero(m, m);
      for (int leaf = 1; leaf < m; ++leaf) {
        net.trust(0, leaf) = 1.0 / star_leaves;  // hub spreads over leaves
        net.trust(leaf, leaf) = 0.5;
        net.trust(leaf, 0) = 0.5;
      }
      net.generator = "star";
      net.params = {{"leaves", star_leaves}};
      break;
    }
    case Archetype::two_cliques: {
      // Nodes 0-4: five-clique (0 touches the bridge); nodes 5-7: three-clique
      // (5 touches the bridge); node 8: bridge.
      const int m = 9;
      net.size = m;
      net.trust = Eigen::MatrixXd::Zero(m, m);
      for (int i = 0; i < 5; ++i) {
        const double share = i == 0 ? 1.0 / 6.0 : 1.0 / 5.0;
        for (int j = 0; j < 5; ++j) net.trust(i, j) = share;
        if (i == 0) net.trust(i, 8) = share;
      }
      for (int i = 5; i < 8; ++i) {
        const double share = i == 5 ? 1.0 / 4.0 : 1.0 / 3.0;
        for (int j = 5; j < 8; ++j) net.trust(i, j) = share;
        if (i == 5) net.trust(i, 8) = share;
      }
      net.trust(8, 0) = net.trust(8, 5) = net.trust(8, 8) = 1.0 / 3.0;
      net.generator = "two_cliques";
      break;
    }
    case Archetype::three_node_asymmetric: {
      net.size = 3;
      net.trust.resize(3, 3);
      net.trust << 0.1, 0.7, 0.2,
                   0.5, 0.5, 0.0,
                   0.5, 0.0, 0.5;
      net.generator = "three_node_asymmetric";
      break;
    }
  }
  net.adjacency = net.trust.array() > 0.0;
  return net;
}

// Power iteration on the symmetrized weighted adjacency (self-loops removed).
// The iteration runs on S + I: the shift leaves the principal eigenvector
// unchanged and removes the sign-flipping mode of bipartite skeletons (a bare
// star or path never settles otherwise).
inline CentralityVector eigenvector_centrality(const SocialNetwork& net) {
  const int m = net.size;
  Eigen::MatrixXd s = 0.5 * (net.trust + net.trust.transpose());
  s.diagonal().setZero();

  Eigen::VectorXd x = Eigen::VectorXd::Constant(m, 1.0 / m);
  bool converged = m == 1;
  for (int iter = 0; iter < 10000 && !converged; ++iter) {
    Eigen::VectorXd next = s * x + x;
    next /= next.sum();  // entries stay nonnegative, so sum == L1 norm
    converged = (next - x).cwiseAbs().sum() < 1e-12;
    x = next;
  }
  if (!converged) {
    throw ConvergenceError("eigenvector_centrality: no convergence in 10000 iterations");
  }

  CentralityVector result;
  result.values = x;
  result.percentiles.resize(m);

  // Mean-rank percentiles; values within 1e-9 (relative) share a rank group.
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return x(a) < x(b); });
  const double tie_tol = 1e-9 * std::max(1.0, x.maxCoeff());
  int group_start = 0;
  while (group_start < m) {
    int group_end = group_start + 1;
    while (group_end < m && x(order[group_end]) - x(order[group_end - 1]) <= tie_tol) {
      ++group_end;
    }
    const double mean_rank = 0.5 * (group_start + group_end + 1);  // 1-based mean
    for (int k = group_start; k < group_end; ++k) {
      result.percentiles(order[k]) = 100.0 * mean_rank / m;
    }
    group_start = group_end;
  }
  return result;
}

}  // namespace sig
