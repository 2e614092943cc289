#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <vector>

#include "neurosa/ising.hpp"
#include "neurosa/rng.hpp"

using namespace neurosa;

namespace {

// Independent dense evaluation of 1/2 s^T M s + b^T s, used as the oracle
// against the sparse implementation.
double dense_energy(const std::vector<std::vector<double>>& m,
                    const std::vector<double>& bias, const StateVector& s) {
  const std::size_t n = m.size();
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      acc += 0.5 * m[i][j] * s[i] * s[j];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!bias.empty()) acc += bias[i] * s[i];
  }
  return acc;
}

std::vector<std::vector<double>> to_dense(std::size_t dim,
                                          const std::vector<MatrixEntry>& es) {
  std::vector<std::vector<double>> m(dim, std::vector<double>(dim, 0.0));
  for (const auto& e : es) m[e.row][e.col] += e.value;
  return m;
}

StateVector random_spins(std::size_t n, Rng& rng) {
  StateVector s(n);
  for (auto& v : s) v = rng.next_u64() & 1 ? 1 : -1;
  return s;
}

}  // namespace

TEST_CASE("symmetrize basic and idempotence") {
  const std::vector<MatrixEntry> raw{{0, 1, 2.0}};
  const auto sym = symmetrize(2, raw);
  const auto dense = to_dense(2, sym);
  CHECK(dense[0][1] == 1.0);
  CHECK(dense[1][0] == 1.0);
  CHECK(dense[0][0] == 0.0);

  const auto again = symmetrize(2, sym);
  CHECK(to_dense(2, again) == dense);
}

TEST_CASE("symmetrize rejects out-of-range entries") {
  CHECK_THROWS_AS(symmetrize(2, {{0, 2, 1.0}}), std::invalid_argument);
}

TEST_CASE("symmetrize preserves the quadratic form") {
  Rng rng(99);
  std::vector<MatrixEntry> raw;
  for (std::uint32_t i = 0; i < 5; ++i) {
    for (std::uint32_t j = 0; j < 5; ++j) {
      raw.push_back({i, j, 2.0 * rng.next_u01() - 1.0});
    }
  }
  const auto sym = symmetrize(5, raw);
  const auto m_raw = to_dense(5, raw);
  const auto m_sym = to_dense(5, sym);
  for (int rep = 0; rep < 10; ++rep) {
    const auto s = random_spins(5, rng);
    CHECK(dense_energy(m_raw, {}, s) ==
          doctest::Approx(dense_energy(m_sym, {}, s)).epsilon(1e-12));
  }
}

TEST_CASE("energy on trivial cases") {
  const IsingProblem zero(3, Domain::Spin, {});
  CHECK(zero.energy({1, -1, 1}) == 0.0);

  const IsingProblem two(2, Domain::Spin, {{0, 1, 1.0}, {1, 0, 1.0}});
  CHECK(two.energy({1, -1}) == -1.0);
  CHECK(two.energy({1, 1}) == 1.0);
}

TEST_CASE("energy contract errors") {
  const IsingProblem two(2, Domain::Spin, {{0, 1, 1.0}, {1, 0, 1.0}});
  CHECK_THROWS_AS(two.energy({1, -1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(two.energy({1, 0}), std::invalid_argument);
  const IsingProblem bin(2, Domain::Binary, {{0, 1, 1.0}, {1, 0, 1.0}});
  CHECK_THROWS_AS(bin.energy({1, -1}), std::invalid_argument);
}

TEST_CASE("10-node minimum matches exhaustive dense search") {
  Rng rng(1234);
  std::vector<MatrixEntry> entries;
  for (std::uint32_t i = 0; i < 10; ++i) {
    for (std::uint32_t j = i + 1; j < 10; ++j) {
      if (rng.next_u01() < 0.45) {
        const double w = rng.next_u64() & 1 ? 1.0 : -1.0;
        entries.push_back({i, j, w});
        entries.push_back({j, i, w});
      }
    }
  }
  const IsingProblem problem(10, Domain::Spin, entries);
  const auto dense = to_dense(10, entries);

  double best_sparse = 1e300;
  double best_dense = 1e300;
  StateVector s(10);
  for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
    for (std::size_t i = 0; i < 10; ++i) {
      s[i] = (mask >> i) & 1 ? 1 : -1;
    }
    best_sparse = std::min(best_sparse, problem.energy(s));
    best_dense = std::min(best_dense, dense_energy(dense, {}, s));
  }
  CHECK(best_sparse == best_dense);
  CHECK(best_sparse < 0.0);
}

TEST_CASE("delta_energy closed form equals recomputation") {
  Rng rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t dim = 4 + rng.next_below(10);
    const Domain domain = trial % 2 == 0 ? Domain::Spin : Domain::Binary;
    std::vector<MatrixEntry> entries;
    for (std::uint32_t i = 0; i < dim; ++i) {
      for (std::uint32_t j = i + 1; j < dim; ++j) {
        if (rng.next_u01() < 0.5) {
          const double w = static_cast<double>(rng.next_below(7)) - 3.0;
          entries.push_back({i, j, w});
          entries.push_back({j, i, w});
        }
      }
      if (domain == Domain::Binary) entries.push_back({i, i, -1.0});
    }
    std::vector<double> bias;
    if (trial % 3 == 0 && domain == Domain::Spin) {
      bias.resize(dim);
      for (auto& b : bias) b = static_cast<double>(rng.next_below(5)) - 2.0;
    }
    const IsingProblem problem(dim, domain, entries, bias);

    StateVector s(dim);
    for (auto& v : s) {
      v = domain == Domain::Spin ? (rng.next_u64() & 1 ? 1 : -1)
                                 : static_cast<std::int8_t>(rng.next_u64() & 1);
    }
    for (int k = 0; k < 25; ++k) {
      const std::size_t p = rng.next_below(dim);
      const double before = problem.energy(s);
      const double closed = problem.delta_energy(s, p);
      StateVector flipped = s;
      problem.flip(flipped, p);
      const double after = problem.energy(flipped);
      CHECK(closed == after - before);  // integer weights: bit-exact
      s = flipped;
    }
  }
}

TEST_CASE("delta_energy trivial cases and errors") {
  const IsingProblem zero(4, Domain::Spin, {});
  CHECK(zero.delta_energy({1, 1, -1, 1}, 2) == 0.0);

  const IsingProblem two(2, Domain::Spin, {{0, 1, 1.0}, {1, 0, 1.0}});
  CHECK(two.delta_energy({1, 1}, 1) == -2.0);
  CHECK_THROWS_AS(two.delta_energy({1, 1}, 2), std::out_of_range);
}

TEST_CASE("gauge symmetry for zero-bias zero-diagonal spin problems") {
  Rng rng(5150);
  std::vector<MatrixEntry> entries;
  for (std::uint32_t i = 0; i < 8; ++i) {
    for (std::uint32_t j = i + 1; j < 8; ++j) {
      const double w = rng.next_u64() & 1 ? 1.0 : -1.0;
      entries.push_back({i, j, w});
      entries.push_back({j, i, w});
    }
  }
  const IsingProblem problem(8, Domain::Spin, entries);
  for (int rep = 0; rep < 20; ++rep) {
    auto s = random_spins(8, rng);
    auto neg = s;
    for (auto& v : neg) v = -v;
    CHECK(problem.energy(s) == problem.energy(neg));
  }
}

TEST_CASE("fold_bias single spin") {
  const IsingProblem one(1, Domain::Spin, {}, {3.0});
  const auto folded = fold_bias(one);
  CHECK(folded.problem.dim() == 2);
  CHECK(folded.problem.is_frozen(0));
  CHECK_FALSE(folded.problem.has_bias());
  CHECK(folded.problem.energy({1, 1}) - folded.offset == 3.0);
  CHECK(folded.problem.energy({1, -1}) - folded.offset == -3.0);
}

TEST_CASE("fold_bias with zero bias keeps energies") {
  const IsingProblem p(3, Domain::Spin, {{0, 1, 1.0}, {1, 0, 1.0}},
                       {0.0, 0.0, 0.0});
  const auto folded = fold_bias(p);
  CHECK(folded.problem.dim() == 4);
  StateVector aug{1, 1, -1, 1};
  StateVector orig{1, -1, 1};
  CHECK(folded.problem.energy(aug) - folded.offset == p.energy(orig));
}

TEST_CASE("fold_bias preserves ordering and the argmin") {
  Rng rng(2024);
  std::vector<MatrixEntry> entries;
  const std::size_t dim = 8;
  for (std::uint32_t i = 0; i < dim; ++i) {
    for (std::uint32_t j = i + 1; j < dim; ++j) {
      if (rng.next_u01() < 0.5) {
        const double w = static_cast<double>(rng.next_below(5)) - 2.0;
        entries.push_back({i, j, w});
        entries.push_back({j, i, w});
      }
    }
  }
  std::vector<double> bias(dim);
  for (auto& b : bias) b = static_cast<double>(rng.next_below(7)) - 3.0;
  const IsingProblem orig(dim, Domain::Spin, entries, bias);
  const auto folded = fold_bias(orig);

  StateVector s(dim);
  StateVector aug(dim + 1);
  aug[0] = 1;
  std::uint32_t argmin_orig = 0;
  std::uint32_t argmin_fold = 0;
  double best_orig = 1e300;
  double best_fold = 1e300;
  bool have_prev = false;
  double prev_orig = 0.0;
  double prev_fold = 0.0;
  for (std::uint32_t mask = 0; mask < (1u << dim); ++mask) {
    for (std::size_t i = 0; i < dim; ++i) {
      s[i] = (mask >> i) & 1 ? 1 : -1;
      aug[i + 1] = s[i];
    }
    const double eo = orig.energy(s);
    const double ef = folded.problem.energy(aug) - folded.offset;
    CHECK(eo == ef);  // integer-weight identity, exact
    if (eo < best_orig) {
      best_orig = eo;
      argmin_orig = mask;
    }
    if (ef < best_fold) {
      best_fold = ef;
      argmin_fold = mask;
    }
    if (have_prev) {
      // sign of pairwise differences preserved
      const double d1 = eo - prev_orig;
      const double d2 = ef - prev_fold;
      CHECK(((d1 > 0) == (d2 > 0)));
      CHECK(((d1 < 0) == (d2 < 0)));
    }
    prev_orig = eo;
    prev_fold = ef;
    have_prev = true;
  }
  CHECK(argmin_orig == argmin_fold);
}
