#include "latmat/fixpoint.hpp"

#include <algorithm>

namespace latmat {

namespace {

void require_compatible(const LatVector& x, const LatMatrix& a) {
  if (x.dim() != a.dim()) {
    throw DimensionMismatch("vector length does not match matrix size");
  }
  if (x.lattice_ptr() != a.lattice_ptr() && !(x.lattice() == a.lattice())) {
    throw LatticeMismatch("vector and matrix live over different lattices");
  }
}

}  // namespace

LatVector::LatVector(std::shared_ptr<const Lattice> lattice,
                     std::vector<Elem> entries)
    : lattice_(std::move(lattice)), entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw DimensionMismatch("vectors must not be empty");
  }
  for (Elem e : entries_) lattice_->label(e);  // range check
}

LatVector LatVector::all_top(std::shared_ptr<const Lattice> lattice, int n) {
  const Elem top = lattice->top();
  return LatVector(std::move(lattice),
                   std::vector<Elem>(static_cast<std::size_t>(n), top));
}

LatVector LatVector::all_bottom(std::shared_ptr<const Lattice> lattice, int n) {
  const Elem bot = lattice->bottom();
  return LatVector(std::move(lattice),
                   std::vector<Elem>(static_cast<std::size_t>(n), bot));
}

bool LatVector::is_bottom() const {
  const Elem bot = lattice_->bottom();
  return std::all_of(entries_.begin(), entries_.end(),
                     [bot](Elem e) { return e == bot; });
}

bool LatVector::operator==(const LatVector& other) const {
  return entries_ == other.entries_ &&
         (lattice_ == other.lattice_ || *lattice_ == *other.lattice_);
}

LatVector vec_mat_mul(const LatVector& x, const LatMatrix& a) {
  require_compatible(x, a);
  const Lattice& L = x.lattice();
  const int n = x.dim();
  std::vector<Elem> out(static_cast<std::size_t>(n), L.bottom());
  for (int j = 0; j < n; ++j) {
    Elem acc = L.bottom();
    for (int i = 0; i < n; ++i) {
      acc = L.join(acc, L.meet(x(i), a(i, j)));
    }
    out[static_cast<std::size_t>(j)] = acc;
  }
  return LatVector(x.lattice_ptr(), std::move(out));
}

LatVector mat_vec_mul(const LatMatrix& a, const LatVector& x) {
  return vec_mat_mul(x, transpose(a));
}

bool entrywise_leq(const LatVector& x, const LatVector& y) {
  if (x.dim() != y.dim()) {
    throw DimensionMismatch("vectors have different lengths");
  }
  const Lattice& L = x.lattice();
  for (int i = 0; i < x.dim(); ++i) {
    if (!L.leq(x(i), y(i))) return false;
  }
  return true;
}

GreatestFixpoint greatest_fixpoint(const LatMatrix& a) {
  if (!a.lattice().distributive()) {
    throw NotDistributive("fixpoint iteration needs a distributive lattice");
  }
  // stabilization is guaranteed well inside this cap; exceeding it means
  // the monotonicity invariant broke
  const int cap = 2 * a.lattice().size() * a.dim() + 2;
  LatVector x = LatVector::all_top(a.lattice_ptr(), a.dim());
  for (int k = 0; k < cap; ++k) {
    LatVector next = vec_mat_mul(x, a);
    if (!entrywise_leq(next, x)) {
      throw std::logic_error("fixpoint iteration is not decreasing");
    }
    if (next == x) return GreatestFixpoint{std::move(x), k};
    x = std::move(next);
  }
  throw std::logic_error("fixpoint iteration failed to stabilize");
}

bool has_nonzero_fixpoint(const LatMatrix& a) {
  const bool nonzero = !greatest_fixpoint(a).limit.is_bottom();
  if (nonzero == is_nilpotent(a)) {
    throw std::logic_error(
        "nonzero fixpoint and nilpotency answers are inconsistent");
  }
  return nonzero;
}

std::vector<LatVector> solve_all_fixpoints(const LatMatrix& a,
                                           std::uint64_t budget) {
  const Lattice& L = a.lattice();
  const int n = a.dim();
  const std::uint64_t m = static_cast<std::uint64_t>(L.size());
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > budget / m + 1) {
      throw BudgetExceeded("vector space exceeds the budget");
    }
    total *= m;
  }
  if (total > budget) throw BudgetExceeded("vector space exceeds the budget");

  std::vector<LatVector> out;
  std::vector<Elem> entries(static_cast<std::size_t>(n), 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (int t = n - 1; t >= 0; --t) {
      entries[static_cast<std::size_t>(t)] = static_cast<Elem>(rest % m);
      rest /= m;
    }
    LatVector x(a.lattice_ptr(), entries);
    if (vec_mat_mul(x, a) == x) out.push_back(std::move(x));
  }
  return out;
}

Orbit iterate_orbit(const LatVector& start, const LatMatrix& a) {
  require_compatible(start, a);
  Orbit orbit;
  orbit.states.push_back(start);
  for (;;) {
    LatVector next = vec_mat_mul(orbit.states.back(), a);
    const auto hit = std::find(orbit.states.begin(), orbit.states.end(), next);
    if (hit != orbit.states.end()) {
      orbit.preperiod = static_cast<int>(hit - orbit.states.begin());
      orbit.period = static_cast<int>(orbit.states.size()) - orbit.preperiod;
      return orbit;
    }
    orbit.states.push_back(std::move(next));
  }
}

EquivalenceReport equivalence_report(const LatMatrix& a,
                                     std::uint64_t budget) {
  const Lattice& L = a.lattice();
  if (!L.distributive()) {
    throw NotDistributive("the equivalence needs a distributive lattice");
  }
  if (!L.bound_irreducibility().bottom_meet_irreducible) {
    throw BottomNotMeetIrreducible(
        "the equivalence needs a meet-irreducible bottom element");
  }

  EquivalenceReport r;

  const auto solutions = solve_all_fixpoints(a, budget);
  r.only_zero_fixpoint =
      solutions.size() == 1 && solutions.front().is_bottom();

  r.limit_is_zero = greatest_fixpoint(a).limit.is_bottom();
  r.nilpotent = is_nilpotent(a);
  r.nth_power_zero = power(a, a.dim()).is_zero();

  try {
    triangularize(a);
    r.triangularizable = true;
  } catch (const NotNilpotent&) {
    r.triangularizable = false;
  }

  // independent route: scan S_n for sigma with P_sigma A P_sigma^-1
  // strictly upper triangular; report pi = sigma^-1 so that
  // P_pi^-1 A P_pi is the triangular conjugate
  if (a.dim() > 8) {
    throw BudgetExceeded("permutation scan capped at n = 8");
  }
  for (const Permutation& sigma : Permutation::all(a.dim())) {
    if (is_strictly_upper_triangular(conjugate(a, sigma))) {
      r.permutation_upper_triangular = true;
      r.witness = sigma.inverse();
      break;
    }
  }

  const bool all[] = {r.only_zero_fixpoint,  r.limit_is_zero,
                      r.nilpotent,           r.nth_power_zero,
                      r.triangularizable,    r.permutation_upper_triangular};
  for (bool b : all) {
    if (b != all[0]) {
      throw std::logic_error("the six equivalent conditions disagree");
    }
  }
  r.verdict = all[0];
  return r;
}

}  // namespace latmat
