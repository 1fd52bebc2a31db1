#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <fstream>
#include <queue>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sig/errors.hpp"

namespace sig {

using BoolMatrix = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;

// Directed weighted trust network over M individuals. `trust` is
// row-stochastic; `adjacency` is the unweighted skeleton (self-loops
// included where present).
struct SocialNetwork {
  int size = 0;
  Eigen::MatrixXd trust;
  BoolMatrix adjacency;

  // Provenance, carried through serialization.
  std::string generator;
  nlohmann::json params = nlohmann::json::object();
  std::uint64_t seed = 0;
};

// Connectivity of the undirected skeleton, self-loops ignored.
inline bool is_connected(const BoolMatrix& adjacency) {
  const int m = static_cast<int>(adjacency.rows());
  if (m == 0) return false;
  if (m == 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int v = 0; v < m; ++v) {
      if (v == u || seen[v]) continue;
      if (adjacency(u, v) || adjacency(v, u)) {
        seen[v] = 1;
        ++reached;
        frontier.push(v);
      }
    }
  }
  return reached == m;
}

// Graph Laplacian L = I - W of a row-stochastic trust matrix.
inline Eigen::MatrixXd laplacian(const SocialNetwork& net) {
  return Eigen::MatrixXd::Identity(net.size, net.size) - net.trust;
}

// Enforces the type invariants; throws on violation.
inline void validate_network(const SocialNetwork& net) {
  if (net.size < 1) throw DimensionError("network size must be >= 1");
  if (net.trust.rows() != net.size || net.trust.cols() != net.size ||
      net.adjacency.rows() != net.size || net.adjacency.cols() != net.size) {
    throw DimensionError("trust/adjacency shape does not match network size");
  }
  for (int i = 0; i < net.size; ++i) {
    double row_sum = 0.0;
    for (int j = 0; j < net.size; ++j) {
      const double w = net.trust(i, j);
      if (w < 0.0) throw std::invalid_argument("negative trust entry");
      if (w > 0.0 && !net.adjacency(i, j)) {
        throw std::invalid_argument("positive trust on a non-edge");
      }
      row_sum += w;
    }
    if (std::abs(row_sum - 1.0) > 1e-12) {
      throw std::invalid_argument("trust row does not sum to 1");
    }
  }
  if (!is_connected(net.adjacency)) {
    throw std::invalid_argument("network skeleton is not connected");
  }
}

// Undirected edge count of the skeleton, self-loops excluded.
inline int undirected_edge_count(const SocialNetwork& net) {
  int count = 0;
  for (int i = 0; i < net.size; ++i) {
    for (int j = i + 1; j < net.size; ++j) {
      if (net.adjacency(i, j) || net.adjacency(j, i)) ++count;
    }
  }
  return count;
}

inline nlohmann::json to_json(const SocialNetwork& net) {
  nlohmann::json j;
  j["size"] = net.size;
  std::vector<double> trust;
  trust.reserve(static_cast<std::size_t>(net.size) * net.size);
  std::vector<bool> adjacency;
  adjacency.reserve(trust.capacity());
  for (int i = 0; i < net.size; ++i) {
    for (int k = 0; k < net.size; ++k) {
      trust.push_back(net.trust(i, k));
      adjacency.push_back(net.adjacency(i, k));
    }
  }
  j["trust"] = trust;
  j["adjacency"] = adjacency;
  j["generator"] = net.generator;
  j["params"] = net.params;
  j["seed"] = net.seed;
  return j;
}

inline SocialNetwork network_from_json(const nlohmann::json& j) {
  SocialNetwork net;
  net.size = j.at("size").get<int>();
  if (net.size < 1) throw DimensionError("network size must be >= 1");
  const auto trust = j.at("trust").get<std::vector<double>>();
  const auto adjacency = j.at("adjacency").get<std::vector<bool>>();
  const auto n = static_cast<std::size_t>(net.size) * static_cast<std::size_t>(net.size);
  if (trust.size() != n || adjacency.size() != n) {
    throw DimensionError("trust/adjacency array length does not match size");
  }
  net.trust.resize(net.size, net.size);
  net.adjacency.resize(net.size, net.size);
  for (int i = 0; i < net.size; ++i) {
    for (int k = 0; k < net.size; ++k) {
      const auto idx = static_cast<std::size_t>(i) * net.size + k;
      net.trust(i, k) = trust[idx];
      net.adjacency(i, k) = adjacency[idx];
    }
  }
  net.generator = j.value("generator", std::string{});
  net.params = j.value("params", nlohmann::json::object());
  net.seed = j.value("seed", std::uint64_t{0});
  return net;
}

inline void save_network(const SocialNetwork& net, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << to_json(net).dump(2) << "\n";
}

inline SocialNetwork load_network(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return network_from_json(j);
}

}  // namespace sig
