#include "neurosa/graphgen.hpp"

#include <set>
#include <stdexcept>

#include "neurosa/rng.hpp"

namespace neurosa {

WeightedGraph gen_random_graph(std::uint32_t n, double p, std::uint64_t seed,
                               bool signed_weights, std::string name) {
  Rng rng(seed);
  std::vector<WeightedEdge> edges;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      if (rng.next_u01() <= p) {
        const std::int32_t w =
            signed_weights ? (rng.next_u64() & 1 ? 1 : -1) : 1;
        edges.push_back({i, j, w});
      }
    }
  }
  return WeightedGraph::make(n, std::move(edges), std::move(name));
}

WeightedGraph gen_random_graph_m(std::uint32_t n, std::size_t m,
                                 std::uint64_t seed, bool signed_weights,
                                 std::string name) {
  const std::size_t max_edges =
      static_cast<std::size_t>(n) * (n - 1) / 2;
  if (m > max_edges) {
    throw std::invalid_argument("gen_random_graph_m: too many edges requested");
  }
  Rng rng(seed);
  std::set<std::pair<std::uint32_t, std::uint32_t>> chosen;
  while (chosen.size() < m) {
    auto i = static_cast<std::uint32_t>(rng.next_below(n));
    auto j = static_cast<std::uint32_t>(rng.next_below(n));
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    chosen.insert({i, j});
  }
  std::vector<WeightedEdge> edges;
  edges.reserve(m);
  for (const auto& [i, j] : chosen) {
    const std::int32_t w = signed_weights ? (rng.next_u64() & 1 ? 1 : -1) : 1;
    edges.push_back({i, j, w});
  }
  return WeightedGraph::make(n, std::move(edges), std::move(name));
}

WeightedGraph gen_toroidal_grid(std::uint32_t rows, std::uint32_t cols,
                                std::uint64_t seed, bool signed_weights,
                                std::string name) {
  if (rows < 3 || cols < 3) {
    throw std::invalid_argument("gen_toroidal_grid: need rows, cols >= 3");
  }
  Rng rng(seed);
  std::vector<WeightedEdge> edges;
  const auto vertex = [cols](std::uint32_t r, std::uint32_t c) {
    return r * cols + c;
  };
  for (std::uint32_t r = 0; r < rows; ++r) {
    for (std::uint32_t c = 0; c < cols; ++c) {
      const std::uint32_t right = vertex(r, (c + 1) % cols);
      const std::uint32_t down = vertex((r + 1) % rows, c);
      const std::int32_t w1 = signed_weights ? (rng.next_u64() & 1 ? 1 : -1) : 1;
      const std::int32_t w2 = signed_weights ? (rng.next_u64() & 1 ? 1 : -1) : 1;
      edges.push_back({vertex(r, c), right, w1});
      edges.push_back({vertex(r, c), down, w2});
    }
  }
  return WeightedGraph::make(rows * cols, std::move(edges), std::move(name));
}

}  // namespace neurosa
