#include "neurosa/problems.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace neurosa {

WeightedGraph WeightedGraph::make(std::uint32_t n,
                                  std::vector<WeightedEdge> edges,
                                  std::string name) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (auto& e : edges) {
    if (e.u == e.v) {
      throw std::invalid_argument("graph: self-loop at vertex " +
                                  std::to_string(e.u));
    }
    if (e.u >= n || e.v >= n) {
      throw std::invalid_argument("graph: edge endpoint out of range");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!seen.insert({e.u, e.v}).second) {
      throw std::invalid_argument("graph: duplicate edge (" +
                                  std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ")");
    }
  }
  std::sort(edges.begin(), edges.end(),
            [](const WeightedEdge& a, const WeightedEdge& b) {
              return std::tie(a.u, a.v) < std::tie(b.u, b.v);
            });
  WeightedGraph g;
  g.n = n;
  g.edges = std::move(edges);
  g.name = std::move(name);
  return g;
}

std::int64_t WeightedGraph::total_weight() const {
  std::int64_t w = 0;
  for (const auto& e : edges) w += e.w;
  return w;
}

std::vector<std::uint32_t> WeightedGraph::degrees() const {
  std::vector<std::uint32_t> deg(n, 0);
  for (const auto& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

double WeightedGraph::average_fanout() const {
  return n == 0 ? 0.0 : 2.0 * static_cast<double>(edges.size()) / n;
}

IsingProblem maxcut_encode(const WeightedGraph& g) {
  std::vector<MatrixEntry> entries;
  entries.reserve(2 * g.edges.size());
  for (const auto& e : g.edges) {
    entries.push_back({e.u, e.v, static_cast<double>(e.w)});
    entries.push_back({e.v, e.u, static_cast<double>(e.w)});
  }
  return IsingProblem(g.n, Domain::Spin, entries);
}

CutSolution maxcut_decode(const WeightedGraph& g, const StateVector& s) {
  if (s.size() != g.n) {
    throw std::invalid_argument("maxcut_decode: state length != vertex count");
  }
  std::int64_t cut = 0;
  for (const auto& e : g.edges) {
    if (s[e.u] != s[e.v]) cut += e.w;
  }
  return {s, cut};
}

IsingProblem mis_encode(const WeightedGraph& g, double beta) {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw std::invalid_argument("mis_encode: beta must lie in (0, 1)");
  }
  for (const auto& e : g.edges) {
    if (e.w != 1) {
      throw std::invalid_argument("mis_encode: graph must be unweighted");
    }
  }
  std::vector<MatrixEntry> entries;
  entries.reserve(2 * g.edges.size() + g.n);
  for (const auto& e : g.edges) {
    entries.push_back({e.u, e.v, beta});
    entries.push_back({e.v, e.u, beta});
  }
  for (std::uint32_t i = 0; i < g.n; ++i) entries.push_back({i, i, -1.0});
  return IsingProblem(g.n, Domain::Binary, entries);
}

double mis_objective(const WeightedGraph& g, const StateVector& x,
                     double beta) {
  if (x.size() != g.n) {
    throw std::invalid_argument("mis_objective: state length != vertex count");
  }
  double size = 0.0;
  double violations = 0.0;
  for (std::uint32_t i = 0; i < g.n; ++i) size += x[i];
  for (const auto& e : g.edges) {
    if (x[e.u] == 1 && x[e.v] == 1) violations += 1.0;
  }
  return size - 2.0 * beta * violations;
}

MisSolution mis_decode(const WeightedGraph& g, const StateVector& x,
                       bool repair) {
  if (x.size() != g.n) {
    throw std::invalid_argument("mis_decode: state length != vertex count");
  }
  MisSolution sol;
  sol.members = x;
  if (repair) {
    const auto deg = g.degrees();
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& e : g.edges) {
        if (sol.members[e.u] == 1 && sol.members[e.v] == 1) {
          std::uint32_t drop;
          if (deg[e.u] != deg[e.v]) {
            drop = deg[e.u] < deg[e.v] ? e.u : e.v;
          } else {
            drop = std::max(e.u, e.v);
          }
          sol.members[drop] = 0;
          changed = true;
        }
      }
    }
  }
  sol.feasible = true;
  sol.size = 0;
  for (std::uint32_t i = 0; i < g.n; ++i) {
    if (sol.members[i] == 1) ++sol.size;
  }
  for (const auto& e : g.edges) {
    if (sol.members[e.u] == 1 && sol.members[e.v] == 1) {
      sol.feasible = false;
      break;
    }
  }
  return sol;
}

}  // namespace neurosa
