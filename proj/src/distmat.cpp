#include "latmat/distmat.hpp"

#include <algorithm>

namespace latmat {

CutFamily cut_decompose(const LatMatrix& a) {
  CutFamily f{birkhoff_cuts(a.lattice_ptr()), a.dim(), {}};
  const auto& omega = f.index.omega();
  f.cuts.reserve(omega.size());
  for (std::size_t t = 0; t < omega.size(); ++t) {
    BoolRel cut(a.dim());
    for (int i = 0; i < a.dim(); ++i) {
      for (int j = 0; j < a.dim(); ++j) {
        if ((f.index.embed(a(i, j)) >> t) & 1u) cut.set(i, j, true);
      }
    }
    f.cuts.push_back(std::move(cut));
  }
  return f;
}

LatMatrix reconstruct(const CutFamily& family) {
  const int n = family.n;
  std::vector<Elem> entries(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::uint64_t mask = 0;
      for (std::size_t t = 0; t < family.cuts.size(); ++t) {
        if (family.cuts[t].get(i, j)) mask |= std::uint64_t{1} << t;
      }
      const auto e = family.index.element_with_embed(mask);
      if (!e) {
        throw Error("cut pattern does not match any lattice element");
      }
      entries[static_cast<std::size_t>(i) * n + j] = *e;
    }
  }
  return LatMatrix(family.index.lattice_ptr(), n, std::move(entries));
}

bool is_idempotent_mat(const LatMatrix& a) {
  if (!a.lattice().distributive()) {
    throw NotDistributive("idempotence test needs a distributive lattice");
  }
  const bool direct = (a * a) == a;
  bool via_cuts = true;
  for (const BoolRel& cut : cut_decompose(a).cuts) {
    if (!analyze_pseudo_order(cut).verdict) {
      via_cuts = false;
      break;
    }
  }
  if (direct != via_cuts) {
    throw std::logic_error("squaring and the cut criterion disagree");
  }
  return direct;
}

LatMatrix chain_idempotent_from_nested(std::shared_ptr<const Lattice> chain,
                                       const std::vector<BoolRel>& rels) {
  if (!chain->is_chain()) {
    throw std::invalid_argument("the host lattice must be a chain");
  }
  if (rels.empty() ||
      chain->size() != static_cast<int>(rels.size()) + 1) {
    throw DimensionMismatch("need exactly m-1 relations for an m-chain");
  }
  const int n = rels.front().dim();
  for (std::size_t k = 0; k < rels.size(); ++k) {
    if (rels[k].dim() != n) {
      throw DimensionMismatch("relations have different dimensions");
    }
    if (!analyze_pseudo_order(rels[k]).verdict) {
      throw NotPseudoOrder(static_cast<int>(k) + 1,
                           "cut " + std::to_string(k + 1) +
                               " is not a pseudo-order");
    }
    if (k > 0 && !rels[k].leq(rels[k - 1])) {
      throw NotNested("cut " + std::to_string(k + 1) +
                      " is not contained in its predecessor");
    }
  }

  // chain elements by height; entry (i, j) becomes the element at the
  // number of levels whose relation contains (i, j)
  std::vector<Elem> by_height(static_cast<std::size_t>(chain->size()));
  by_height[0] = chain->bottom();
  for (std::size_t h = 1; h < by_height.size(); ++h) {
    by_height[h] = chain->upper_covers(by_height[h - 1]).front();
  }

  std::vector<Elem> entries(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int levels = 0;
      for (const auto& rel : rels) {
        if (rel.get(i, j)) ++levels;
      }
      entries[static_cast<std::size_t>(i) * n + j] =
          by_height[static_cast<std::size_t>(levels)];
    }
  }
  return LatMatrix(std::move(chain), n, std::move(entries));
}

InvertResult invert(const LatMatrix& a, InvertMode mode,
                    std::uint64_t budget) {
  InvertResult result;
  result.mode = mode;
  const auto& L = a.lattice();
  const int n = a.dim();

  if (mode == InvertMode::theorem) {
    const auto irr = L.bound_irreducibility();
    if (!irr.bottom_meet_irreducible && !irr.top_join_irreducible) {
      throw IrreducibilityNotSatisfied(
          "neither bound of the lattice is irreducible; use exhaustive "
          "mode");
    }
    if (const auto pi = as_permutation(a)) {
      result.inverses.push_back(
          permutation_matrix(a.lattice_ptr(), pi->inverse()));
    }
    return result;
  }

  const std::uint64_t m = static_cast<std::uint64_t>(L.size());
  std::uint64_t total = 1;
  for (int i = 0; i < n * n; ++i) {
    if (total > budget / m + 1) {
      throw BudgetExceeded("candidate space exceeds the budget");
    }
    total *= m;
  }
  if (total > budget) {
    throw BudgetExceeded("candidate space exceeds the budget");
  }

  const LatMatrix id = LatMatrix::identity(a.lattice_ptr(), n);
  std::vector<Elem> entries(static_cast<std::size_t>(n) * n, 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (int t = n * n - 1; t >= 0; --t) {
      entries[static_cast<std::size_t>(t)] = static_cast<Elem>(rest % m);
      rest /= m;
    }
    LatMatrix b(a.lattice_ptr(), n, entries);
    if (a * b == id) result.inverses.push_back(std::move(b));
  }
  return result;
}

bool is_nilpotent(const LatMatrix& a) {
  const auto& L = a.lattice();
  if (!L.distributive()) {
    throw NotDistributive("nilpotency test needs a distributive lattice");
  }
  const int n = a.dim();

  LatMatrix p = a;
  Elem cycle_cap = L.bottom();
  for (int i = 0; i < n; ++i) cycle_cap = L.join(cycle_cap, p(i, i));
  for (int k = 2; k <= n; ++k) {
    p = p * a;
    for (int i = 0; i < n; ++i) cycle_cap = L.join(cycle_cap, p(i, i));
  }
  const bool power_zero = p.is_zero();
  const bool cycles_zero = cycle_cap == L.bottom();
  if (power_zero != cycles_zero) {
    throw std::logic_error("power and cycle criteria disagree");
  }
  return power_zero;
}

bool is_strictly_upper_triangular(const LatMatrix& a) {
  const Elem bot = a.lattice().bottom();
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j <= i; ++j) {
      if (a(i, j) != bot) return false;
    }
  }
  return true;
}

LatMatrix strictly_upper_ones(std::shared_ptr<const Lattice> lattice, int n) {
  const Elem top = lattice->top();
  const Elem bot = lattice->bottom();
  std::vector<Elem> e(static_cast<std::size_t>(n) * n, bot);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      e[static_cast<std::size_t>(i) * n + j] = top;
    }
  }
  return LatMatrix(std::move(lattice), n, std::move(e));
}

Permutation triangularize(const LatMatrix& a) {
  const auto& L = a.lattice();
  if (!L.bound_irreducibility().bottom_meet_irreducible) {
    throw BottomNotMeetIrreducible(
        "triangularization needs a meet-irreducible bottom element");
  }
  if (!is_nilpotent(a)) {
    throw NotNilpotent("matrix is not nilpotent");
  }

  // the nonzero pattern is acyclic here; Kahn's algorithm with the least
  // available original index first fixes one linear extension
  const int n = a.dim();
  std::vector<int> indegree(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (a(i, j) != L.bottom()) ++indegree[static_cast<std::size_t>(j)];
    }
  }
  std::vector<int> order;
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (!placed[static_cast<std::size_t>(v)] &&
          indegree[static_cast<std::size_t>(v)] == 0) {
        pick = v;
        break;
      }
    }
    if (pick == -1) {
      throw std::logic_error("nonzero pattern of a nilpotent matrix has a "
                             "cycle");
    }
    placed[static_cast<std::size_t>(pick)] = true;
    order.push_back(pick);
    for (int j = 0; j < n; ++j) {
      if (a(pick, j) != L.bottom()) --indegree[static_cast<std::size_t>(j)];
    }
  }

  const Permutation pi{std::move(order)};
  if (!is_strictly_upper_triangular(conjugate(a, pi))) {
    throw std::logic_error("topological order failed to triangularize");
  }
  return pi;
}

std::vector<LatMatrix> hclass_chain(const LatMatrix& a, int cap) {
  if (!a.lattice().is_chain()) {
    throw std::invalid_argument("the host lattice must be a chain");
  }
  if (!is_idempotent_mat(a)) {
    throw NotIdempotent("matrix is not idempotent");
  }
  const CutFamily f = cut_decompose(a);
  const int n = a.dim();
  for (std::size_t k = 0; k < f.cuts.size(); ++k) {
    if (!f.cuts[k].is_partial_order()) {
      throw CutNotPartialOrder(static_cast<int>(k) + 1,
                               "cut " + std::to_string(k + 1) +
                                   " is not a partial order on the full "
                                   "vertex set");
    }
  }
  if (n > cap) {
    throw SizeLimit("common automorphism search capped at " +
                    std::to_string(cap) + " vertices");
  }

  // common automorphisms of all cut posets, by backtracking over images
  std::vector<int> carrier(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) carrier[static_cast<std::size_t>(i)] = i;

  std::vector<Permutation> autos;
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto consistent = [&](int x, int y) {
    for (const BoolRel& cut : f.cuts) {
      for (int u = 0; u < x; ++u) {
        const int v = map[static_cast<std::size_t>(u)];
        if (cut.get(u, x) != cut.get(v, y)) return false;
        if (cut.get(x, u) != cut.get(y, v)) return false;
      }
      if (cut.get(x, x) != cut.get(y, y)) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int x) -> void {
    if (x == n) {
      autos.push_back(Permutation(map));
      return;
    }
    for (int y = 0; y < n; ++y) {
      if (used[static_cast<std::size_t>(y)] || !consistent(x, y)) continue;
      map[static_cast<std::size_t>(x)] = y;
      used[static_cast<std::size_t>(y)] = true;
      self(self, x + 1);
      used[static_cast<std::size_t>(y)] = false;
      map[static_cast<std::size_t>(x)] = -1;
    }
  };
  rec(rec, 0);

  std::vector<LatMatrix> out;
  out.reserve(autos.size());
  for (const Permutation& fperm : autos) {
    out.push_back(permutation_matrix(a.lattice_ptr(), fperm) * a);
  }
  return out;
}

ClassifyReport classify(const LatMatrix& a) {
  ClassifyReport r;
  r.distributive = a.lattice().distributive();
  r.bounds = a.lattice().bound_irreducibility();
  r.permutation = as_permutation(a).has_value();
  if (r.distributive) {
    r.idempotent = is_idempotent_mat(a);
    r.nilpotent = is_nilpotent(a);
  }
  return r;
}

}  // namespace latmat
