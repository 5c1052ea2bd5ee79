#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "latmat/bracketing.hpp"
#include "latmat/matrix.hpp"

namespace latmat {

/// A finite groupoid given by its multiplication table.
class TableGroupoid {
 public:
  using value_type = int;

  /// `table` is row-major: table[a*size + b] = a*b.
  TableGroupoid(int size, std::vector<int> table);

  std::uint64_t carrier_size() const { return static_cast<std::uint64_t>(size_); }
  value_type element(std::uint64_t i) const { return static_cast<int>(i); }
  value_type mul(value_type a, value_type b) const;
  bool equal(value_type a, value_type b) const { return a == b; }
  std::optional<value_type> identity() const;

 private:
  int size_;
  std::vector<int> table_;
};

/// The groupoid of all n x n matrices over one lattice. Elements are
/// indexed by base-|L| digits of the entries in row-major order, most
/// significant first, so index 0 is the zero matrix.
class MatrixGroupoid {
 public:
  using value_type = LatMatrix;

  MatrixGroupoid(std::shared_ptr<const Lattice> lattice, int n);

  /// |L|^{n*n}, saturating at 2^63 when the true count overflows.
  std::uint64_t carrier_size() const { return carrier_size_; }
  LatMatrix element(std::uint64_t idx) const;
  LatMatrix mul(const LatMatrix& a, const LatMatrix& b) const { return a * b; }
  bool equal(const LatMatrix& a, const LatMatrix& b) const { return a == b; }
  std::optional<LatMatrix> identity() const;

  const std::shared_ptr<const Lattice>& lattice_ptr() const { return lattice_; }
  int dim() const { return n_; }

 private:
  std::shared_ptr<const Lattice> lattice_;
  int n_;
  std::uint64_t carrier_size_;
};

enum class SpectrumMode { exhaustive, witness };

struct SpectrumBudget {
  int max_k = 12;                              // bracketing size cap
  std::uint64_t max_evaluations = 10'000'000;  // term evaluations / products
};

template <typename V>
struct SpectrumWitness {
  int p = 0;  // indices into enumerate_bracketings order
  int q = 0;
  std::vector<V> assignment;
};

/// Result of a spectrum query: `count` distinct term functions among the
/// `catalan_bound` bracketings of size k. In witness mode the count is
/// certified equal to the bound by one distinguishing assignment per pair;
/// in exhaustive mode it is the exact number of classes over all
/// assignments, with a witness recorded for every separated pair.
template <typename V>
struct SpectrumReport {
  int k = 0;
  SpectrumMode mode = SpectrumMode::exhaustive;
  std::uint64_t count = 0;
  std::uint64_t catalan_bound = 0;
  std::vector<SpectrumWitness<V>> witnesses;
};

namespace detail {

template <typename G>
using value_t = typename G::value_type;

template <typename G>
value_t<G> eval_term(const G& g, const Bracketing& t,
                     std::span<const value_t<G>> args) {
  return eval_bracketing(t, args, [&g](const value_t<G>& a, const value_t<G>& b) {
    return g.mul(a, b);
  });
}

/// The proof-pattern assignment for two bracketings whose outermost splits
/// coincide: recurse into the first differing factor (left preferred) and
/// pad the other positions with the identity; when the splits differ,
/// place a, b, c at positions 1, s+1, t+1 (s < t the two splits) so that
/// one side evaluates to a(bc) and the other to (ab)c.
template <typename G>
std::vector<value_t<G>> distinguishing_assignment(
    const G& g, const Bracketing& p, const Bracketing& q,
    const std::array<value_t<G>, 3>& triple, const value_t<G>& e) {
  const int k = p.leaves();
  const int kp = p.split();
  const int kq = q.split();
  if (kp == kq) {
    if (!(p.left() == q.left())) {
      auto sub = distinguishing_assignment(g, p.left(), q.left(), triple, e);
      sub.resize(static_cast<std::size_t>(k), e);
      return sub;
    }
    std::vector<value_t<G>> out(static_cast<std::size_t>(kp), e);
    auto sub = distinguishing_assignment(g, p.right(), q.right(), triple, e);
    out.insert(out.end(), sub.begin(), sub.end());
    return out;
  }
  const int s = std::min(kp, kq);
  const int t = std::max(kp, kq);
  std::vector<value_t<G>> out(static_cast<std::size_t>(k), e);
  out[0] = triple[0];
  out[static_cast<std::size_t>(s)] = triple[1];
  out[static_cast<std::size_t>(t)] = triple[2];
  return out;
}

}  // namespace detail

/// First associativity violation (a, b, c) in deterministic scan order
/// over carrier indices, or nullopt after a complete scan. Throws
/// BudgetExceeded when `budget` products are spent before either outcome.
template <typename G>
std::optional<std::array<detail::value_t<G>, 3>> find_nonassociative_triple(
    const G& g, std::uint64_t budget = 10'000'000) {
  const std::uint64_t size = g.carrier_size();
  std::uint64_t spent = 0;
  auto pay = [&](std::uint64_t cost) {
    spent += cost;
    if (spent > budget) throw BudgetExceeded("triple search budget exhausted");
  };
  for (std::uint64_t i = 0; i < size; ++i) {
    const auto a = g.element(i);
    for (std::uint64_t j = 0; j < size; ++j) {
      const auto b = g.element(j);
      pay(1);
      const auto ab = g.mul(a, b);
      for (std::uint64_t l = 0; l < size; ++l) {
        const auto c = g.element(l);
        pay(3);
        const auto lhs = g.mul(ab, c);
        const auto rhs = g.mul(a, g.mul(b, c));
        if (!g.equal(lhs, rhs)) {
          return std::array<detail::value_t<G>, 3>{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

/// Builds an assignment on which p and q evaluate differently, following
/// the recursive pattern above; returns nullopt iff p == q. Throws
/// NotAnIdentity if e fails as a two-sided identity against the supplied
/// probes, NotAWitness if the triple is associative.
template <typename G>
std::optional<std::vector<detail::value_t<G>>> distinguish_with_identity(
    const G& g, const Bracketing& p, const Bracketing& q,
    const std::array<detail::value_t<G>, 3>& triple,
    const detail::value_t<G>& e) {
  for (const auto& probe : {triple[0], triple[1], triple[2], e}) {
    if (!g.equal(g.mul(e, probe), probe) || !g.equal(g.mul(probe, e), probe)) {
      throw NotAnIdentity("supplied element is not a two-sided identity");
    }
  }
  if (g.equal(g.mul(g.mul(triple[0], triple[1]), triple[2]),
              g.mul(triple[0], g.mul(triple[1], triple[2])))) {
    throw NotAWitness("triple does not violate associativity");
  }
  if (p.leaves() != q.leaves()) {
    throw DimensionMismatch("bracketings have different sizes");
  }
  if (p == q) return std::nullopt;

  auto asg = detail::distinguishing_assignment(g, p, q, triple, e);
  const std::span<const detail::value_t<G>> view(asg);
  if (g.equal(detail::eval_term(g, p, view), detail::eval_term(g, q, view))) {
    throw std::logic_error("distinguishing assignment failed to separate");
  }
  return asg;
}

/// Counts distinct bracketing-induced term functions of size k.
///
/// Exhaustive mode compares all bracketings over every assignment of
/// carrier values (budget permitting). Witness mode requires an identity
/// element and a nonassociative triple (found automatically unless
/// `seed_triple` is given) and certifies count = C_{k-1} by constructing
/// a verified distinguishing assignment for every bracketing pair.
template <typename G>
SpectrumReport<detail::value_t<G>> spectrum_count(
    const G& g, int k, SpectrumMode mode, const SpectrumBudget& budget = {},
    std::optional<std::array<detail::value_t<G>, 3>> seed_triple = std::nullopt) {
  using V = detail::value_t<G>;
  const auto brackets = enumerate_bracketings(k, budget.max_k);
  SpectrumReport<V> report;
  report.k = k;
  report.mode = mode;
  report.catalan_bound = brackets.size();

  if (brackets.size() == 1) {
    report.count = 1;
    return report;
  }

  if (mode == SpectrumMode::witness) {
    const auto e = g.identity();
    if (!e) {
      throw WitnessModeUnavailable("the groupoid has no identity element");
    }
    std::optional<std::array<V, 3>> triple = seed_triple;
    if (!triple) {
      triple = find_nonassociative_triple(g, budget.max_evaluations);
      if (!triple) {
        throw WitnessModeUnavailable("the groupoid is associative");
      }
    }
    const std::uint64_t pairs =
        report.catalan_bound * (report.catalan_bound - 1) / 2;
    if (pairs * static_cast<std::uint64_t>(k) > budget.max_evaluations) {
      throw BudgetExceeded("too many bracketing pairs for the budget");
    }
    for (std::size_t i = 0; i < brackets.size(); ++i) {
      for (std::size_t j = i + 1; j < brackets.size(); ++j) {
        auto w = distinguish_with_identity(g, brackets[i], brackets[j],
                                           *triple, *e);
        report.witnesses.push_back(SpectrumWitness<V>{
            static_cast<int>(i), static_cast<int>(j), std::move(*w)});
      }
    }
    report.count = report.catalan_bound;
    return report;
  }

  // exhaustive: refine the partition of bracketings over all assignments
  const std::uint64_t size = g.carrier_size();
  std::uint64_t assignments = 1;
  for (int i = 0; i < k; ++i) {
    if (assignments > budget.max_evaluations / size + 1) {
      throw BudgetExceeded("assignment space exceeds the evaluation budget");
    }
    assignments *= size;
  }
  if (assignments * brackets.size() > budget.max_evaluations) {
    throw BudgetExceeded("assignment space exceeds the evaluation budget");
  }

  std::vector<std::vector<int>> classes{std::vector<int>()};
  classes[0].resize(brackets.size());
  for (std::size_t i = 0; i < brackets.size(); ++i) {
    classes[0][i] = static_cast<int>(i);
  }

  std::vector<std::uint64_t> digits(static_cast<std::size_t>(k), 0);
  std::vector<V> args;
  for (std::uint64_t a = 0; a < assignments; ++a) {
    args.clear();
    for (int i = 0; i < k; ++i) {
      args.push_back(g.element(digits[static_cast<std::size_t>(i)]));
    }
    const std::span<const V> view(args);

    std::vector<std::vector<int>> next;
    for (const auto& cls : classes) {
      if (cls.size() == 1) {
        next.push_back(cls);
        continue;
      }
      std::vector<V> values;
      values.reserve(cls.size());
      for (int b : cls) {
        values.push_back(
            detail::eval_term(g, brackets[static_cast<std::size_t>(b)], view));
      }
      std::vector<std::vector<int>> groups;      // indices into cls
      for (std::size_t t = 0; t < cls.size(); ++t) {
        bool placed = false;
        for (auto& grp : groups) {
          if (g.equal(values[static_cast<std::size_t>(grp[0])], values[t])) {
            grp.push_back(static_cast<int>(t));
            placed = true;
            break;
          }
        }
        if (!placed) groups.push_back({static_cast<int>(t)});
      }
      if (groups.size() > 1) {
        // the current assignment separates every cross pair
        for (std::size_t gi = 0; gi < groups.size(); ++gi) {
          for (std::size_t gj = gi + 1; gj < groups.size(); ++gj) {
            for (int x : groups[gi]) {
              for (int y : groups[gj]) {
                int bp = cls[static_cast<std::size_t>(x)];
                int bq = cls[static_cast<std::size_t>(y)];
                if (bp > bq) std::swap(bp, bq);
                report.witnesses.push_back(SpectrumWitness<V>{bp, bq, args});
              }
            }
          }
        }
      }
      for (const auto& grp : groups) {
        std::vector<int> sub;
        for (int t : grp) sub.push_back(cls[static_cast<std::size_t>(t)]);
        next.push_back(std::move(sub));
      }
    }
    classes = std::move(next);

    // odometer over carrier indices, last position fastest
    for (int i = k - 1; i >= 0; --i) {
      if (++digits[static_cast<std::size_t>(i)] < size) break;
      digits[static_cast<std::size_t>(i)] = 0;
    }
  }
  report.count = classes.size();
  return report;
}

}  // namespace latmat
