#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "latmat/distmat.hpp"
#include "latmat/lattice.hpp"
#include "latmat/matrix.hpp"

namespace latmat {

/// A row vector of lattice elements bound to its host lattice.
class LatVector {
 public:
  LatVector(std::shared_ptr<const Lattice> lattice, std::vector<Elem> entries);
  static LatVector all_top(std::shared_ptr<const Lattice> lattice, int n);
  static LatVector all_bottom(std::shared_ptr<const Lattice> lattice, int n);

  int dim() const { return static_cast<int>(entries_.size()); }
  const Lattice& lattice() const { return *lattice_; }
  const std::shared_ptr<const Lattice>& lattice_ptr() const { return lattice_; }
  Elem operator()(int i) const { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<Elem>& entries() const { return entries_; }

  bool is_bottom() const;
  bool operator==(const LatVector& other) const;
  bool operator!=(const LatVector& other) const { return !(*this == other); }

 private:
  std::shared_ptr<const Lattice> lattice_;
  std::vector<Elem> entries_;
};

/// (xA)_j = sum_i x_i * a_ij.
LatVector vec_mat_mul(const LatVector& x, const LatMatrix& a);

/// Column convention A*x, as a wrapper over the transpose.
LatVector mat_vec_mul(const LatMatrix& a, const LatVector& x);

/// x <= y entrywise.
bool entrywise_leq(const LatVector& x, const LatVector& y);

struct GreatestFixpoint {
  LatVector limit;
  int steps = 0;  // first k with 1*A^k = 1*A^{k+1}
};

/// Iterates x0 = all-top, x_{k+1} = x_k*A until stationary. The sequence
/// decreases monotonically and the limit is the greatest solution of
/// x*A = x. Throws NotDistributive.
GreatestFixpoint greatest_fixpoint(const LatMatrix& a);

/// Greatest fixpoint is nonzero; equals "A is not nilpotent" and the
/// implementation insists on that equality. Throws NotDistributive.
bool has_nonzero_fixpoint(const LatMatrix& a);

/// All solutions of x*A = x by exhaustive scan of L^n.
/// Throws BudgetExceeded when |L|^n exceeds the budget.
std::vector<LatVector> solve_all_fixpoints(const LatMatrix& a,
                                           std::uint64_t budget = 1'000'000);

/// Orbit of an arbitrary start vector under x -> x*A. The tail is always
/// eventually periodic; `period` == 1 means the orbit converges.
struct Orbit {
  std::vector<LatVector> states;  // x0, x1, ... up to the first repeat
  int preperiod = 0;
  int period = 1;
};

Orbit iterate_orbit(const LatVector& start, const LatMatrix& a);

/// The six equivalent nilpotency characterizations over a distributive
/// lattice with meet-irreducible bottom, each evaluated independently:
/// (i) only the zero fixpoint, (ii) the all-top iteration reaches zero,
/// (iii) nilpotent, (iv) A^n = 0, (v) triangularizable by construction,
/// (vi) some permutation conjugate is strictly upper triangular, by a
/// direct scan over S_n. All six must agree.
struct EquivalenceReport {
  bool only_zero_fixpoint = false;
  bool limit_is_zero = false;
  bool nilpotent = false;
  bool nth_power_zero = false;
  bool triangularizable = false;
  bool permutation_upper_triangular = false;
  std::optional<Permutation> witness;  // pi with P_pi^-1 A P_pi strictly u.t.
  bool verdict = false;
};

/// Throws BottomNotMeetIrreducible when the precondition fails,
/// BudgetExceeded when the fixpoint scan or the S_n scan is too large.
EquivalenceReport equivalence_report(const LatMatrix& a,
                                     std::uint64_t budget = 1'000'000);

}  // namespace latmat
