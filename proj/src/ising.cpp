#include "neurosa/ising.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace neurosa {

std::vector<MatrixEntry> symmetrize(std::size_t dim,
                                    const std::vector<MatrixEntry>& entries) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, double> acc;
  for (const auto& e : entries) {
    if (e.row >= dim || e.col >= dim) {
      throw std::invalid_argument("symmetrize: entry (" +
                                  std::to_string(e.row) + "," +
                                  std::to_string(e.col) +
                                  ") outside a " + std::to_string(dim) +
                                  "-dimensional square matrix");
    }
    acc[{e.row, e.col}] += 0.5 * e.value;
    acc[{e.col, e.row}] += 0.5 * e.value;
  }
  std::vector<MatrixEntry> out;
  out.reserve(acc.size());
  for (const auto& [pos, v] : acc) {
    if (v != 0.0) out.push_back({pos.first, pos.second, v});
  }
  return out;
}

IsingProblem::IsingProblem(std::size_t dim, Domain domain,
                           const std::vector<MatrixEntry>& entries,
                           std::vector<double> bias)
    : dim_(dim), domain_(domain), bias_(std::move(bias)) {
  if (dim_ == 0) throw std::invalid_argument("IsingProblem: dim must be >= 1");
  if (!bias_.empty() && bias_.size() != dim_) {
    throw std::invalid_argument("IsingProblem: bias length != dim");
  }
  const auto sym = symmetrize(dim_, entries);

  diag_.assign(dim_, 0.0);
  std::vector<std::uint32_t> counts(dim_, 0);
  for (const auto& e : sym) {
    if (e.row == e.col) {
      diag_[e.row] = e.value;
    } else {
      ++counts[e.row];
    }
  }
  row_ptr_.assign(dim_ + 1, 0);
  for (std::size_t p = 0; p < dim_; ++p) row_ptr_[p + 1] = row_ptr_[p] + counts[p];
  cols_.resize(row_ptr_[dim_]);
  weights_.resize(row_ptr_[dim_]);
  std::vector<std::uint32_t> fill(row_ptr_.begin(), row_ptr_.end() - 1);
  for (const auto& e : sym) {
    if (e.row == e.col) continue;
    cols_[fill[e.row]] = e.col;
    weights_[fill[e.row]] = e.value;
    ++fill[e.row];
  }
  for (std::size_t p = 0; p < dim_; ++p) {
    double s = std::abs(diag_[p]);
    for (std::size_t k = row_ptr_[p]; k < row_ptr_[p + 1]; ++k) {
      s += std::abs(weights_[k]);
    }
    max_abs_row_sum_ = std::max(max_abs_row_sum_, s);
  }
  rebuild_free_list();
}

void IsingProblem::rebuild_free_list() {
  free_.clear();
  free_.reserve(dim_);
  for (std::uint32_t p = 0; p < dim_; ++p) {
    if (!is_frozen(p)) free_.push_back(p);
  }
}

void IsingProblem::freeze(std::size_t p) {
  if (p >= dim_) throw std::out_of_range("freeze: index out of range");
  if (frozen_.empty()) frozen_.assign(dim_, 0);
  frozen_[p] = 1;
  rebuild_free_list();
}

double IsingProblem::local_field(std::size_t p, const StateVector& s) const {
  double acc = 0.0;
  const auto* c = row_cols(p);
  const auto* w = row_weights(p);
  const std::size_t m = row_size(p);
  for (std::size_t k = 0; k < m; ++k) acc += w[k] * s[c[k]];
  return acc;
}

void IsingProblem::check_state(const StateVector& s) const {
  if (s.size() != dim_) {
    throw std::invalid_argument("state length " + std::to_string(s.size()) +
                                " does not match problem dim " +
                                std::to_string(dim_));
  }
  for (const auto v : s) {
    const bool ok = domain_ == Domain::Spin ? (v == -1 || v == 1)
                                            : (v == 0 || v == 1);
    if (!ok) {
      throw std::invalid_argument("state entry outside the problem domain");
    }
  }
}

double IsingProblem::energy(const StateVector& s) const {
  check_state(s);
  // 1/2 s^T Q s accumulated row-wise: each unordered pair appears twice, the
  // diagonal once.
  double off = 0.0;
  double diag = 0.0;
  double lin = 0.0;
  for (std::size_t p = 0; p < dim_; ++p) {
    off += s[p] * local_field(p, s);
    diag += diag_[p] * static_cast<double>(s[p]) * s[p];
    if (!bias_.empty()) lin += bias_[p] * s[p];
  }
  return 0.5 * off + 0.5 * diag + lin;
}

double IsingProblem::delta_energy(const StateVector& s, std::size_t p) const {
  if (p >= dim_) {
    throw std::out_of_range("delta_energy: index " + std::to_string(p) +
                            " out of range");
  }
  const double field = local_field(p, s) + (bias_.empty() ? 0.0 : bias_[p]);
  if (domain_ == Domain::Spin) {
    return -2.0 * s[p] * field;
  }
  const double dx = s[p] == 0 ? 1.0 : -1.0;
  return dx * (0.5 * diag_[p] + field);
}

void IsingProblem::flip(StateVector& s, std::size_t p) const {
  s[p] = domain_ == Domain::Spin ? static_cast<std::int8_t>(-s[p])
                                 : static_cast<std::int8_t>(1 - s[p]);
}

FoldedProblem fold_bias(const IsingProblem& problem) {
  if (problem.domain() != Domain::Spin) {
    throw std::invalid_argument("fold_bias: spin-domain problems only");
  }
  const std::size_t d = problem.dim();
  std::vector<MatrixEntry> entries;
  entries.reserve(2 * problem.coupling_count() + d + 2);
  for (std::uint32_t p = 0; p < d; ++p) {
    const auto* c = problem.row_cols(p);
    const auto* w = problem.row_weights(p);
    for (std::size_t k = 0; k < problem.row_size(p); ++k) {
      entries.push_back({p + 1, c[k] + 1, w[k]});
    }
    if (problem.diagonal(p) != 0.0) {
      entries.push_back({p + 1, p + 1, problem.diagonal(p)});
    }
    if (problem.has_bias() && problem.bias()[p] != 0.0) {
      // 1/2 (Q'_{0p} + Q'_{p0}) s_0 s_p = b_p s_p with s_0 = +1.
      entries.push_back({0, p + 1, problem.bias()[p]});
      entries.push_back({p + 1, 0, problem.bias()[p]});
    }
  }
  IsingProblem folded(d + 1, Domain::Spin, entries);
  folded.freeze(0);
  return {std::move(folded), 0.0};
}

}  // namespace neurosa
