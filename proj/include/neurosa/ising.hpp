#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace neurosa {

// Variable domain of an Ising/QUBO problem.
enum class Domain { Spin, Binary };

// One assignment of all variables: entries are {-1,+1} (Spin) or {0,1}
// (Binary), stored as int8.
using StateVector = std::vector<std::int8_t>;

// Coordinate-form matrix entry, used to build problems and by symmetrize().
struct MatrixEntry {
  std::uint32_t row = 0;
  std::uint32_t col = 0;
  double value = 0.0;
};

// Returns the entries of (M + M^T)/2 where M is given in coordinate form.
// Duplicate coordinates accumulate. Idempotent on symmetric input. Entries
// out of [0, dim) are rejected.
std::vector<MatrixEntry> symmetrize(std::size_t dim,
                                    const std::vector<MatrixEntry>& entries);

// Sparse symmetric Hamiltonian  H(s) = 1/2 s^T Q s + b^T s.
//
// Off-diagonal couplings are stored per row (CSR) so a single-variable flip
// touches only that row. The diagonal is kept separately; it matters only in
// the Binary domain (in the Spin domain s_p^2 = 1, so it is a constant).
// Variables may be flagged frozen (see fold_bias); frozen variables are never
// selected or flipped by solvers.
class IsingProblem {
 public:
  // Builds the problem from coordinate entries of the full matrix M; the
  // stored coupling matrix is (M + M^T)/2, so construction always yields an
  // exactly symmetric Q. `bias` may be empty (no external field).
  IsingProblem(std::size_t dim, Domain domain,
               const std::vector<MatrixEntry>& entries,
               std::vector<double> bias = {});

  std::size_t dim() const { return dim_; }
  Domain domain() const { return domain_; }
  bool has_bias() const { return !bias_.empty(); }
  const std::vector<double>& bias() const { return bias_; }
  double diagonal(std::size_t p) const { return diag_[p]; }

  bool is_frozen(std::size_t p) const {
    return !frozen_.empty() && frozen_[p] != 0;
  }
  bool has_frozen() const { return !free_.empty() && free_.size() != dim_; }
  // Indices that solvers may flip (all of [0, dim) unless variables are
  // frozen).
  const std::vector<std::uint32_t>& free_indices() const { return free_; }
  void freeze(std::size_t p);

  // Row p of Q excluding the diagonal: parallel arrays of column index and
  // weight.
  std::size_t row_size(std::size_t p) const {
    return row_ptr_[p + 1] - row_ptr_[p];
  }
  const std::uint32_t* row_cols(std::size_t p) const {
    return cols_.data() + row_ptr_[p];
  }
  const double* row_weights(std::size_t p) const {
    return weights_.data() + row_ptr_[p];
  }

  // Largest sum_j |Q_pj| over rows (diagonal included); bound on any
  // membrane potential magnitude.
  double max_abs_row_sum() const { return max_abs_row_sum_; }
  std::size_t coupling_count() const { return cols_.size() / 2; }

  // Local field sum_{j != p} Q_pj s_j.
  double local_field(std::size_t p, const StateVector& s) const;

  // H(s). Throws if s has the wrong length or entries outside the domain.
  double energy(const StateVector& s) const;

  // H(s with variable p flipped) - H(s), in closed form from row p.
  //   Spin:   -2 s_p (local_field + b_p)
  //   Binary: dx (Q_pp/2 + local_field + b_p),  dx = 1 - 2 x_p
  double delta_energy(const StateVector& s, std::size_t p) const;

  // In-place flip of variable p (s_p -> -s_p, or x_p -> 1 - x_p).
  void flip(StateVector& s, std::size_t p) const;

  // Validates length and domain membership; throws on violation.
  void check_state(const StateVector& s) const;

 private:
  std::size_t dim_;
  Domain domain_;
  std::vector<std::uint32_t> row_ptr_;
  std::vector<std::uint32_t> cols_;
  std::vector<double> weights_;
  std::vector<double> diag_;
  std::vector<double> bias_;
  std::vector<std::uint8_t> frozen_;
  std::vector<std::uint32_t> free_;
  double max_abs_row_sum_ = 0.0;

  void rebuild_free_list();
};

struct FoldedProblem {
  IsingProblem problem;  // dim + 1 variables, zero bias, variable 0 frozen
  double offset;         // energy(folded, (1, s)) = energy(orig, s) + offset
};

// Rewrites a biased spin problem as a zero-bias problem with one extra
// static variable pinned to +1, coupled to every variable p with weight b_p.
FoldedProblem fold_bias(const IsingProblem& problem);

}  // namespace neurosa
