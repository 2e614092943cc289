#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "neurosa/graphgen.hpp"
#include "neurosa/oracle.hpp"
#include "neurosa/problems.hpp"
#include "neurosa/rng.hpp"

using namespace neurosa;

namespace {

// Direct brute-force maximum cut, independent of the Ising encoding.
std::int64_t brute_max_cut(const WeightedGraph& g) {
  std::int64_t best = INT64_MIN;
  for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
    std::int64_t cut = 0;
    for (const auto& e : g.edges) {
      if (((mask >> e.u) ^ (mask >> e.v)) & 1) cut += e.w;
    }
    best = std::max(best, cut);
  }
  return best;
}

StateVector mask_to_spins(std::uint32_t mask, std::uint32_t n) {
  StateVector s(n);
  for (std::uint32_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1 ? 1 : -1;
  return s;
}

StateVector mask_to_bits(std::uint32_t mask, std::uint32_t n) {
  StateVector x(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    x[i] = static_cast<std::int8_t>((mask >> i) & 1);
  }
  return x;
}

}  // namespace

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(WeightedGraph::make(3, {{1, 1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedGraph::make(3, {{0, 3, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedGraph::make(3, {{0, 1, 1}, {1, 0, 1}}),
                  std::invalid_argument);
  const auto g = WeightedGraph::make(3, {{2, 0, -1}, {0, 1, 1}});
  CHECK(g.edges[0].u == 0);  // canonicalized and sorted
  CHECK(g.edges[1].v == 2);
}

TEST_CASE("maxcut encode: single edge and triangle") {
  const auto edge = WeightedGraph::make(2, {{0, 1, 1}});
  const auto p = maxcut_encode(edge);
  CHECK(p.energy({1, -1}) == -1.0);
  CHECK(p.energy({1, 1}) == 1.0);
  const auto oracle = brute_force(p);
  CHECK(oracle.best_value == -1.0);
  CHECK(oracle.optima_count == 2);
  CHECK(maxcut_decode(edge, {1, -1}).cut_value == 1);

  const auto tri = WeightedGraph::make(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  const auto tp = maxcut_encode(tri);
  CHECK(brute_force(tp).best_value == -1.0);
  CHECK(brute_max_cut(tri) == 2);
}

TEST_CASE("maxcut decode basics") {
  const auto g = WeightedGraph::make(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
  CHECK(maxcut_decode(g, {1, 1, 1, 1}).cut_value == 0);
  CHECK(maxcut_decode(g, {-1, -1, -1, -1}).cut_value == 0);
  CHECK_THROWS_AS(maxcut_decode(g, {1, 1}), std::invalid_argument);
}

TEST_CASE("maxcut identity: cut = (total_weight - energy) / 2") {
  const auto g = gen_random_graph(12, 0.4, 321, true);
  const auto p = maxcut_encode(g);
  const double w = static_cast<double>(g.total_weight());

  std::int64_t best_decode = INT64_MIN;
  double min_energy = 1e300;
  for (std::uint32_t mask = 0; mask < (1u << 12); ++mask) {
    const auto s = mask_to_spins(mask, 12);
    const auto cut = maxcut_decode(g, s).cut_value;
    const double e = p.energy(s);
    CHECK(static_cast<double>(cut) == 0.5 * (w - e));
    best_decode = std::max(best_decode, cut);
    min_energy = std::min(min_energy, e);
  }
  CHECK(static_cast<double>(best_decode) == 0.5 * (w - min_energy));
  CHECK(best_decode == brute_max_cut(g));
}

TEST_CASE("maxcut gauge symmetry") {
  const auto g = gen_random_graph(10, 0.5, 11, true);
  Rng rng(6);
  for (int rep = 0; rep < 30; ++rep) {
    const auto s = mask_to_spins(static_cast<std::uint32_t>(rng.next_u64()), 10);
    auto neg = s;
    for (auto& v : neg) v = -v;
    CHECK(maxcut_decode(g, s).cut_value == maxcut_decode(g, neg).cut_value);
  }
}

TEST_CASE("mis encode: isolated vertices and a single edge") {
  const auto iso = WeightedGraph::make(2, {});
  const auto pi = mis_encode(iso, 0.75);
  const auto oi = brute_force(pi);
  CHECK(oi.best_state == StateVector{1, 1});
  CHECK(oi.best_value == -1.0);  // -(1/2) * size

  // beta = 0.75 > 1/2: the two singletons strictly beat {0,1} and {}.
  const auto edge = WeightedGraph::make(2, {{0, 1, 1}});
  const auto pe = mis_encode(edge, 0.75);
  const auto oe = brute_force(pe);
  CHECK(oe.best_value == -0.5);
  CHECK(oe.optima_count == 2);
  CHECK(pe.energy({1, 1}) == doctest::Approx(-1.0 + 0.75));

  // beta = 1/2 is the tie boundary: {1,1} matches the singletons, which is
  // why the default penalty sits above it.
  const auto ph = mis_encode(edge, 0.5);
  CHECK(ph.energy({1, 1}) == ph.energy({1, 0}));

  CHECK_THROWS_AS(mis_encode(edge, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(mis_encode(edge, 1.0), std::invalid_argument);
  const auto weighted = WeightedGraph::make(2, {{0, 1, -1}});
  CHECK_THROWS_AS(mis_encode(weighted, 0.75), std::invalid_argument);
}

TEST_CASE("mis decode: feasibility, repair, trivia") {
  const auto edge = WeightedGraph::make(2, {{0, 1, 1}});
  const auto zero = mis_decode(edge, {0, 0});
  CHECK(zero.size == 0);
  CHECK(zero.feasible);

  const auto both = mis_decode(edge, {1, 1});
  CHECK_FALSE(both.feasible);
  const auto repaired = mis_decode(edge, {1, 1}, true);
  CHECK(repaired.feasible);
  CHECK(repaired.size == 1);
}

TEST_CASE("mis feasibility flag matches a direct edge scan (14 nodes)") {
  const auto g = gen_random_graph(14, 0.25, 5150);
  for (std::uint32_t mask = 0; mask < (1u << 14); ++mask) {
    const auto x = mask_to_bits(mask, 14);
    bool ok = true;
    for (const auto& e : g.edges) {
      if (x[e.u] == 1 && x[e.v] == 1) {
        ok = false;
        break;
      }
    }
    CHECK(mis_decode(g, x).feasible == ok);
  }
}

TEST_CASE("mis penalized objective: identity and round trip") {
  const auto g = gen_random_graph(12, 0.3, 777);
  const double beta = 0.75;
  const auto p = mis_encode(g, beta);
  Rng rng(8);
  int feasible_seen = 0;
  for (int rep = 0; rep < 200; ++rep) {
    const auto x =
        mask_to_bits(static_cast<std::uint32_t>(rng.next_u64()) & 0xFFF, 12);
    // objective == -2 * energy identically
    CHECK(mis_objective(g, x, beta) == doctest::Approx(-2.0 * p.energy(x)));
    const auto sol = mis_decode(g, x);
    if (sol.feasible) {
      ++feasible_seen;
      CHECK(mis_objective(g, x, beta) == static_cast<double>(sol.size));
    }
  }
  CHECK(feasible_seen > 0);
}

TEST_CASE("repair never increases violations and terminates") {
  const auto g = gen_random_graph(16, 0.35, 909);
  Rng rng(14);
  for (int rep = 0; rep < 100; ++rep) {
    StateVector x(16);
    for (auto& v : x) v = static_cast<std::int8_t>(rng.next_u64() & 1);
    const auto repaired = mis_decode(g, x, true);
    CHECK(repaired.feasible);
    // repair only removes vertices
    for (std::size_t i = 0; i < x.size(); ++i) {
      CHECK(repaired.members[i] <= x[i]);
    }
  }
}

TEST_CASE("18-node ER instance: penalized optimum is the true MIS") {
  const auto g = gen_random_graph(18, 0.25, 424242);
  const auto p = mis_encode(g, 0.75);
  const auto oracle = brute_force(p);
  const auto sol = mis_decode(g, oracle.best_state);
  CHECK(sol.feasible);  // beta > 1/2: minimizers are independent sets
  CHECK(sol.size == max_independent_set_size(g));
  CHECK(oracle.best_value == -0.5 * static_cast<double>(sol.size));
}
