#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "neurosa/stats.hpp"

using namespace neurosa;

TEST_CASE("stopping ratio") {
  GainTracker t;
  CHECK_FALSE(t.stopping_ratio(100).has_value());  // nothing recorded yet

  t.record(1, -10.0);
  CHECK(*t.stopping_ratio(100) == doctest::Approx(0.99));

  GainTracker dense;
  const std::uint64_t n = 1000;
  for (std::uint64_t i = 1; i < n; ++i) dense.record(i, -static_cast<double>(i));
  CHECK(*dense.stopping_ratio(n) == doctest::Approx(1.0 / n));

  CHECK_THROWS_AS(t.stopping_ratio(0).has_value(), std::exception);
}

TEST_CASE("kde: degenerate samples") {
  const auto kde = kde_silverman({1.0, 1.0, 1.0, 1.0, 1.0});
  CHECK(kde.degenerate);
  CHECK(kde.point == 1.0);
}

TEST_CASE("kde integrates to one") {
  const std::vector<double> samples{0.989, 0.995, 0.999, 1.0, 0.9995};
  const auto kde = kde_silverman(samples);
  CHECK_FALSE(kde.degenerate);
  CHECK(kde.bandwidth > 0.0);
  CHECK(std::abs(kde.integral() - 1.0) < 1e-6);

  // Heavier, spread-out sample set.
  std::vector<double> wide;
  for (int i = 0; i < 200; ++i) wide.push_back(std::sin(i * 0.7) * 3.0 + i % 5);
  const auto kde2 = kde_silverman(wide);
  CHECK(std::abs(kde2.integral() - 1.0) < 1e-6);
}

TEST_CASE("histogram covers all samples") {
  const std::vector<double> xs{0.0, 0.1, 0.5, 0.9, 1.0, 1.0};
  const auto h = histogram(xs, 4);
  std::uint64_t total = 0;
  for (const auto c : h.counts) total += c;
  CHECK(total == xs.size());
  CHECK(h.edges.size() == 5);
}

TEST_CASE("jacobi eigensolver on a known matrix and residuals") {
  // [[2,1],[1,2]] has eigenvalues 3 and 1.
  const auto res = jacobi_eigen_symmetric({2.0, 1.0, 1.0, 2.0}, 2);
  CHECK(res.values[0] == doctest::Approx(3.0));
  CHECK(res.values[1] == doctest::Approx(1.0));

  // Random symmetric 8x8: A v = lambda v within 1e-8.
  std::vector<double> a(64);
  for (int i = 0; i < 8; ++i) {
    for (int j = i; j < 8; ++j) {
      const double x = std::sin(3.7 * i + 1.3 * j) * 2.0;
      a[i * 8 + j] = x;
      a[j * 8 + i] = x;
    }
  }
  const auto r8 = jacobi_eigen_symmetric(a, 8);
  for (int k = 0; k < 8; ++k) {
    if (k > 0) CHECK(r8.values[k - 1] >= r8.values[k]);
    for (int i = 0; i < 8; ++i) {
      double av = 0.0;
      for (int j = 0; j < 8; ++j) av += a[i * 8 + j] * r8.vectors[k][j];
      CHECK(av == doctest::Approx(r8.values[k] * r8.vectors[k][i])
                      .epsilon(1e-8)
                      .scale(10.0));
    }
  }
}

namespace {

RunTrace synthetic_trace(std::uint32_t dim, std::uint64_t iterations,
                         const std::vector<SpikeEvent>& spikes) {
  RunTrace t;
  t.dim = dim;
  t.iterations = iterations;
  t.spikes = spikes;
  t.spike_count = spikes.size();
  return t;
}

}  // namespace

TEST_CASE("pca: degenerate and error paths") {
  const auto empty = synthetic_trace(5, 1000, {});
  const auto res = analyze_trace(empty, 100, 50, 3);
  CHECK(res.degenerate);

  CHECK_THROWS_AS(analyze_trace(empty, 100, 100, 3), std::invalid_argument);
  CHECK_THROWS_AS(analyze_trace(empty, 1000, 0, 3), std::invalid_argument);
}

TEST_CASE("pca: a single varying neuron owns the first component") {
  std::vector<SpikeEvent> spikes;
  // Neuron 2 fires densely early, sparsely later: its axis carries all the
  // window-to-window variance.
  for (std::uint64_t i = 1; i <= 500; ++i) {
    spikes.push_back({i, 2, SpikeDirection::On, -1.0});
  }
  for (std::uint64_t i = 501; i <= 1000; i += 50) {
    spikes.push_back({i, 2, SpikeDirection::Off, 1.0});
  }
  const auto trace = synthetic_trace(6, 1000, spikes);
  const auto res = analyze_trace(trace, 100, 50, 3);
  REQUIRE_FALSE(res.degenerate);
  CHECK(std::abs(res.loadings[0][2]) == doctest::Approx(1.0));
  for (int p = 0; p < 6; ++p) {
    if (p != 2) CHECK(res.loadings[0][p] == doctest::Approx(0.0));
  }
}

TEST_CASE("pca: variance accounting and permutation invariance") {
  std::vector<SpikeEvent> spikes;
  std::uint64_t state = 12345;
  for (std::uint64_t i = 1; i <= 20000; ++i) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    if ((state >> 60) < 6) {
      const auto neuron = static_cast<std::uint32_t>((state >> 32) % 9);
      spikes.push_back({i, neuron, SpikeDirection::On, -1.0});
    }
  }
  const auto trace = synthetic_trace(9, 20000, spikes);
  const auto res = analyze_trace(trace, 1000, 500, 3);
  REQUIRE_FALSE(res.degenerate);
  CHECK(res.eigenvalues.size() == 3);

  // Captured variance equals top-3 eigenvalue mass.
  double proj_var = 0.0;
  for (const auto& row : res.coords) {
    for (const double c : row) proj_var += c * c;
  }
  double top3 = 0.0;
  for (const double ev : res.eigenvalues) top3 += ev;
  CHECK(proj_var == doctest::Approx(top3).epsilon(1e-9));
  CHECK(res.captured_fraction() == doctest::Approx(top3 / res.total_variance));
  CHECK(res.captured_fraction() <= 1.0 + 1e-12);

  // Permuting neuron indices permutes loadings but leaves the projected
  // trajectory unchanged up to per-component sign.
  auto permuted = spikes;
  const std::uint32_t perm[9] = {4, 7, 1, 0, 8, 2, 6, 3, 5};
  for (auto& ev : permuted) ev.neuron = perm[ev.neuron];
  const auto res2 = analyze_trace(synthetic_trace(9, 20000, permuted), 1000,
                                  500, 3);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(res2.eigenvalues[k] == doctest::Approx(res.eigenvalues[k]));
    const double sign =
        res.coords[0][k] * res2.coords[0][k] >= 0.0 ? 1.0 : -1.0;
    for (std::size_t w = 0; w < res.coords.size(); ++w) {
      CHECK(res2.coords[w][k] ==
            doctest::Approx(sign * res.coords[w][k]).epsilon(1e-6).scale(1.0));
    }
  }
}

TEST_CASE("graph metrics on known graphs") {
  const auto tri = WeightedGraph::make(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  const auto mt = graph_metrics(tri);
  CHECK(mt.transitivity == doctest::Approx(1.0));
  CHECK(mt.average_fanout == doctest::Approx(2.0));
  CHECK(mt.degree_entropy == doctest::Approx(0.0));  // regular graph

  const auto path = WeightedGraph::make(3, {{0, 1, 1}, {1, 2, 1}});
  const auto mp = graph_metrics(path);
  CHECK(mp.transitivity == doctest::Approx(0.0));

  const auto star = WeightedGraph::make(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
  const auto ms = graph_metrics(star);
  const double expect =
      -(0.25 * std::log2(0.25) + 0.75 * std::log2(0.75));
  CHECK(ms.degree_entropy == doctest::Approx(expect));
}
