#include "neurosa/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace neurosa {

// ---- GainTracker ----

void GainTracker::record(std::uint64_t iteration, double best_value) {
  events_.push_back({iteration, best_value});
}

std::optional<double> GainTracker::stopping_ratio(
    std::uint64_t current_iteration) const {
  if (events_.empty()) return std::nullopt;
  const std::uint64_t last = events_.back().iteration;
  if (last > current_iteration) {
    throw std::invalid_argument("stopping_ratio: query before last event");
  }
  return static_cast<double>(current_iteration - last) /
         static_cast<double>(current_iteration);
}

// ---- KDE ----

SummaryStats summarize(const std::vector<double>& xs) {
  SummaryStats st;
  if (xs.empty()) return st;
  st.min = xs[0];
  st.max = xs[0];
  double sum = 0.0;
  for (const double x : xs) {
    sum += x;
    st.min = std::min(st.min, x);
    st.max = std::max(st.max, x);
  }
  st.mean = sum / static_cast<double>(xs.size());
  double ss = 0.0;
  for (const double x : xs) ss += (x - st.mean) * (x - st.mean);
  st.sd = xs.size() > 1 ? std::sqrt(ss / static_cast<double>(xs.size() - 1))
                        : 0.0;
  return st;
}

namespace {

double quantile_sorted(const std::vector<double>& xs, double q) {
  const double pos = q * static_cast<double>(xs.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, xs.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return xs[lo] * (1.0 - frac) + xs[hi] * frac;
}

}  // namespace

KdeResult kde_silverman(const std::vector<double>& samples,
                        std::size_t grid_points) {
  if (samples.empty()) {
    throw std::invalid_argument("kde: no samples");
  }
  KdeResult out;
  std::vector<double> xs = samples;
  std::sort(xs.begin(), xs.end());
  const auto st = summarize(xs);
  const double iqr = quantile_sorted(xs, 0.75) - quantile_sorted(xs, 0.25);
  double spread = st.sd;
  if (iqr > 0.0) spread = std::min(spread, iqr / 1.34);
  const double h =
      0.9 * spread * std::pow(static_cast<double>(xs.size()), -0.2);
  if (!(h > 0.0)) {
    out.degenerate = true;
    out.point = xs[0];
    return out;
  }
  out.bandwidth = h;
  // +-5.5 bandwidths keep the truncated tail mass below 1e-7.
  const double lo = st.min - 5.5 * h;
  const double hi = st.max + 5.5 * h;
  out.grid.resize(grid_points);
  out.density.resize(grid_points);
  const double step = (hi - lo) / static_cast<double>(grid_points - 1);
  const double norm =
      1.0 / (static_cast<double>(xs.size()) * h * std::sqrt(2.0 * std::numbers::pi));
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double x = lo + step * static_cast<double>(i);
    double acc = 0.0;
    for (const double s : xs) {
      const double z = (x - s) / h;
      acc += std::exp(-0.5 * z * z);
    }
    out.grid[i] = x;
    out.density[i] = norm * acc;
  }
  return out;
}

double KdeResult::integral() const {
  if (grid.size() < 2) return degenerate ? 1.0 : 0.0;
  double acc = 0.0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    acc += 0.5 * (density[i] + density[i - 1]) * (grid[i] - grid[i - 1]);
  }
  return acc;
}

Histogram histogram(const std::vector<double>& samples, std::size_t bins) {
  if (samples.empty() || bins == 0) return {};
  const auto st = summarize(samples);
  Histogram h;
  h.edges.resize(bins + 1);
  h.counts.assign(bins, 0);
  const double lo = st.min;
  double width = (st.max - st.min) / static_cast<double>(bins);
  if (width == 0.0) width = 1.0;
  for (std::size_t i = 0; i <= bins; ++i) {
    h.edges[i] = lo + width * static_cast<double>(i);
  }
  for (const double x : samples) {
    auto b = static_cast<std::size_t>((x - lo) / width);
    if (b >= bins) b = bins - 1;
    ++h.counts[b];
  }
  return h;
}

// ---- Jacobi eigensolver ----

EigenResult jacobi_eigen_symmetric(std::vector<double> a, std::size_t n) {
  if (a.size() != n * n) {
    throw std::invalid_argument("jacobi: matrix size mismatch");
  }
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;

  auto off_norm = [&]() {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) s += a[i * n + j] * a[i * n + j];
    }
    return std::sqrt(2.0 * s);
  };
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    scale = std::max(scale, std::abs(a[i * n + i]));
  }
  scale = std::max(scale, off_norm());
  const double tol = scale > 0.0 ? 1e-10 * scale : 1e-300;

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && off_norm() > tol; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::abs(apq) <= tol / static_cast<double>(n)) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = 0.5 * (aqq - app) / apq;
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k][p];
          const double vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a[x * n + x] > a[y * n + y];
  });
  EigenResult res;
  res.values.resize(n);
  res.vectors.assign(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    res.values[i] = a[order[i] * n + order[i]];
    for (std::size_t k = 0; k < n; ++k) res.vectors[i][k] = v[k][order[i]];
  }
  return res;
}

// ---- PCA over windowed spike counts ----

double PcaTrajectory::captured_fraction() const {
  if (total_variance == 0.0) return 0.0;
  double top = 0.0;
  for (const double ev : eigenvalues) top += ev;
  return top / total_variance;
}

PcaTrajectory analyze_trace(const RunTrace& trace, std::uint64_t window,
                            std::uint64_t overlap, std::size_t components) {
  if (window == 0 || overlap >= window) {
    throw std::invalid_argument("analyze_trace: need window > overlap >= 0");
  }
  if (components == 0) {
    throw std::invalid_argument("analyze_trace: components >= 1");
  }
  const std::uint64_t stride = window - overlap;
  const std::uint64_t total = trace.iterations;
  std::size_t n_windows = 0;
  if (total >= window) {
    n_windows = static_cast<std::size_t>((total - window) / stride) + 1;
  }
  if (n_windows < components) {
    throw std::invalid_argument(
        "analyze_trace: fewer windows than requested components");
  }
  const std::size_t d = trace.dim;

  // rows[w][p] = spikes of pair p (either direction) in window w.
  std::vector<std::vector<double>> rows(n_windows, std::vector<double>(d, 0.0));
  std::uint64_t spikes_seen = 0;
  for (const auto& e : trace.spikes) {
    if (e.iteration == 0 || e.iteration > total) continue;
    const std::uint64_t t = e.iteration - 1;
    // Windows containing iteration t: start in [t - window + 1, t], stride grid.
    const std::uint64_t first =
        t + 1 >= window ? (t + 1 - window + stride - 1) / stride : 0;
    for (std::uint64_t wi = first; wi < n_windows && wi * stride <= t; ++wi) {
      rows[wi][e.neuron] += 1.0;
      ++spikes_seen;
    }
  }

  PcaTrajectory out;
  out.windows = n_windows;
  out.components = components;
  if (spikes_seen == 0) {
    out.degenerate = true;
    return out;
  }

  std::vector<double> mean(d, 0.0);
  for (const auto& r : rows) {
    for (std::size_t p = 0; p < d; ++p) mean[p] += r[p];
  }
  for (auto& m : mean) m /= static_cast<double>(n_windows);
  for (auto& r : rows) {
    for (std::size_t p = 0; p < d; ++p) r[p] -= mean[p];
  }

  // Scatter in whichever dimension is smaller: the d x d covariance or the
  // windows x windows Gram matrix (dual PCA).
  const bool dual = n_windows < d;
  const std::size_t m = dual ? n_windows : d;
  std::vector<double> scatter(m * m, 0.0);
  if (dual) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i; j < m; ++j) {
        double acc = 0.0;
        for (std::size_t p = 0; p < d; ++p) acc += rows[i][p] * rows[j][p];
        scatter[i * m + j] = acc;
        scatter[j * m + i] = acc;
      }
    }
  } else {
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < d; ++i) {
        if (r[i] == 0.0) continue;
        for (std::size_t j = i; j < d; ++j) {
          scatter[i * d + j] += r[i] * r[j];
        }
      }
    }
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < i; ++j) scatter[i * d + j] = scatter[j * d + i];
    }
  }

  const auto eig = jacobi_eigen_symmetric(std::move(scatter), m);
  for (const double ev : eig.values) out.total_variance += std::max(ev, 0.0);

  out.eigenvalues.assign(eig.values.begin(),
                         eig.values.begin() + static_cast<long>(components));
  out.loadings.assign(components, std::vector<double>(d, 0.0));
  out.coords.assign(n_windows, std::vector<double>(components, 0.0));
  for (std::size_t k = 0; k < components; ++k) {
    if (dual) {
      // Loading u_k = X^T w_k / ||X^T w_k||.
      const auto& wk = eig.vectors[k];
      auto& uk = out.loadings[k];
      for (std::size_t i = 0; i < n_windows; ++i) {
        for (std::size_t p = 0; p < d; ++p) uk[p] += rows[i][p] * wk[i];
      }
      double nrm = 0.0;
      for (const double u : uk) nrm += u * u;
      nrm = std::sqrt(nrm);
      if (nrm > 0.0) {
        for (auto& u : uk) u /= nrm;
      }
    } else {
      out.loadings[k] = eig.vectors[k];
    }
    for (std::size_t i = 0; i < n_windows; ++i) {
      double acc = 0.0;
      for (std::size_t p = 0; p < d; ++p) acc += rows[i][p] * out.loadings[k][p];
      out.coords[i][k] = acc;
    }
  }
  return out;
}

// ---- Graph metrics ----

GraphMetrics graph_metrics(const WeightedGraph& g) {
  GraphMetrics m;
  m.average_fanout = g.average_fanout();

  const auto deg = g.degrees();
  std::vector<std::uint64_t> hist;
  for (const auto d : deg) {
    if (d >= hist.size()) hist.resize(d + 1, 0);
    ++hist[d];
  }
  for (const auto count : hist) {
    if (count == 0) continue;
    const double p = static_cast<double>(count) / static_cast<double>(g.n);
    m.degree_entropy -= p * std::log2(p);
  }

  // Triangles via sorted adjacency intersection.
  std::vector<std::vector<std::uint32_t>> adj(g.n);
  for (const auto& e : g.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  std::uint64_t triangles = 0;
  for (const auto& e : g.edges) {
    const auto& a = adj[e.u];
    const auto& b = adj[e.v];
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) {
        ++triangles;
        ++i;
        ++j;
      } else if (a[i] < b[j]) {
        ++i;
      } else {
        ++j;
      }
    }
  }
  triangles /= 3;  // each triangle found once per edge

  std::uint64_t triples = 0;
  for (const auto d : deg) {
    triples += static_cast<std::uint64_t>(d) * (d > 0 ? d - 1 : 0) / 2;
  }
  m.transitivity =
      triples == 0 ? 0.0
                   : 3.0 * static_cast<double>(triangles) /
                         static_cast<double>(triples);
  return m;
}

}  // namespace neurosa
