#pragma once

#include <cstdint>

#include "neurosa/problems.hpp"

namespace neurosa {

// Seeded instance generators used by tests and experiments. All are
// deterministic in (parameters, seed).

// Erdos-Renyi G(n, p); weights +1, or uniform {-1, +1} when signed_weights.
WeightedGraph gen_random_graph(std::uint32_t n, double p, std::uint64_t seed,
                               bool signed_weights = false,
                               std::string name = "");

// Erdos-Renyi with exactly m edges (uniform over edge sets).
WeightedGraph gen_random_graph_m(std::uint32_t n, std::size_t m,
                                 std::uint64_t seed,
                                 bool signed_weights = false,
                                 std::string name = "");

// rows x cols 2D toroidal grid; weights uniform {-1, +1} when signed_weights.
WeightedGraph gen_toroidal_grid(std::uint32_t rows, std::uint32_t cols,
                                std::uint64_t seed, bool signed_weights = true,
                                std::string name = "");

}  // namespace neurosa
