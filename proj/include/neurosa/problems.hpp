#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "neurosa/ising.hpp"

namespace neurosa {

struct WeightedEdge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;  // canonical form keeps u < v
  std::int32_t w = 1;

  bool operator==(const WeightedEdge&) const = default;
};

// Undirected weighted graph with integer edge weights (Gset graphs use
// weights in {-1, +1}). No self-loops, no duplicate edges.
struct WeightedGraph {
  std::uint32_t n = 0;
  std::vector<WeightedEdge> edges;
  std::string name;

  // Canonicalizes (u < v, sorted edge order) and validates.
  static WeightedGraph make(std::uint32_t n, std::vector<WeightedEdge> edges,
                            std::string name = "");

  std::int64_t total_weight() const;
  std::vector<std::uint32_t> degrees() const;
  double average_fanout() const;
};

struct CutSolution {
  StateVector partition;   // spin domain
  std::int64_t cut_value;  // sum of w over edges with endpoints apart
};

struct MisSolution {
  StateVector members;  // binary domain
  std::uint32_t size = 0;
  bool feasible = false;
};

// Spin-domain problem with Q equal to the weighted adjacency matrix (zero
// diagonal, no bias). Maximizing the cut is minimizing this energy:
//   cut(s) = (total_weight - energy(s)) / 2.
IsingProblem maxcut_encode(const WeightedGraph& g);

CutSolution maxcut_decode(const WeightedGraph& g, const StateVector& s);

// Binary-domain problem with Q_ii = -1 and Q_ij = Q_ji = beta per edge,
// i.e. minimizing  energy(x) = -(1/2) sum x_i + beta * (violated edges).
// The penalized set objective is  -2 * energy = |set| - 2 beta * violations;
// for beta > 1/2 every violated edge makes removing an endpoint strictly
// improving, so the minimizers are exactly the maximum independent sets.
IsingProblem mis_encode(const WeightedGraph& g, double beta = 0.75);

// Penalized objective -2 * energy(mis_encode(g, beta), x); equals the set
// size exactly whenever x is an independent set.
double mis_objective(const WeightedGraph& g, const StateVector& x, double beta);

// Decodes size/feasibility. With repair = true, violated edges are resolved
// by removing the lower-degree endpoint (ties remove the higher index) until
// the set is independent; at most |E| removals.
MisSolution mis_decode(const WeightedGraph& g, const StateVector& x,
                       bool repair = false);

}  // namespace neurosa
