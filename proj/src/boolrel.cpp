#include "latmat/boolrel.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace latmat {

BoolRel::BoolRel(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) {
  if (n < 0 || n > 64) throw SizeLimit("relation dimension must be in 0..64");
}

BoolRel BoolRel::from_rows(int n, std::vector<std::uint64_t> rows) {
  BoolRel r(n);
  if (rows.size() != static_cast<std::size_t>(n)) {
    throw DimensionMismatch("row count does not match dimension");
  }
  const std::uint64_t mask =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (auto& row : rows) row &= mask;
  r.rows_ = std::move(rows);
  return r;
}

BoolRel BoolRel::identity(int n) {
  BoolRel r(n);
  for (int i = 0; i < n; ++i) r.set(i, i, true);
  return r;
}

BoolRel BoolRel::full(int n) {
  BoolRel r(n);
  const std::uint64_t mask =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (auto& row : r.rows_) row = mask;
  return r;
}

BoolRel BoolRel::from_code(int n, std::uint64_t code) {
  if (n > 8) throw SizeLimit("code packing is limited to n <= 8");
  BoolRel r(n);
  for (int i = 0; i < n; ++i) {
    r.rows_[static_cast<std::size_t>(i)] =
        (code >> (i * n)) & ((std::uint64_t{1} << n) - 1);
  }
  return r;
}

std::uint64_t BoolRel::code() const {
  if (n_ > 8) throw SizeLimit("code packing is limited to n <= 8");
  std::uint64_t code = 0;
  for (int i = 0; i < n_; ++i) {
    code |= rows_[static_cast<std::size_t>(i)] << (i * n_);
  }
  return code;
}

bool BoolRel::get(int i, int j) const {
  return (rows_[static_cast<std::size_t>(i)] >> j) & 1u;
}

void BoolRel::set(int i, int j, bool v) {
  if (v) {
    rows_[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
  } else {
    rows_[static_cast<std::size_t>(i)] &= ~(std::uint64_t{1} << j);
  }
}

std::uint64_t BoolRel::column(int j) const {
  std::uint64_t col = 0;
  for (int i = 0; i < n_; ++i) {
    col |= static_cast<std::uint64_t>(get(i, j)) << i;
  }
  return col;
}

std::uint64_t BoolRel::loops() const {
  std::uint64_t out = 0;
  for (int i = 0; i < n_; ++i) {
    out |= static_cast<std::uint64_t>(get(i, i)) << i;
  }
  return out;
}

BoolRel BoolRel::operator*(const BoolRel& other) const {
  if (n_ != other.n_) throw DimensionMismatch("relation dimensions differ");
  BoolRel out(n_);
  for (int i = 0; i < n_; ++i) {
    std::uint64_t acc = 0;
    std::uint64_t r = rows_[static_cast<std::size_t>(i)];
    while (r) {
      const int j = std::countr_zero(r);
      r &= r - 1;
      acc |= other.rows_[static_cast<std::size_t>(j)];
    }
    out.rows_[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

BoolRel BoolRel::operator&(const BoolRel& other) const {
  if (n_ != other.n_) throw DimensionMismatch("relation dimensions differ");
  BoolRel out(n_);
  for (int i = 0; i < n_; ++i) {
    out.rows_[static_cast<std::size_t>(i)] =
        rows_[static_cast<std::size_t>(i)] &
        other.rows_[static_cast<std::size_t>(i)];
  }
  return out;
}

BoolRel BoolRel::operator|(const BoolRel& other) const {
  if (n_ != other.n_) throw DimensionMismatch("relation dimensions differ");
  BoolRel out(n_);
  for (int i = 0; i < n_; ++i) {
    out.rows_[static_cast<std::size_t>(i)] =
        rows_[static_cast<std::size_t>(i)] |
        other.rows_[static_cast<std::size_t>(i)];
  }
  return out;
}

BoolRel BoolRel::transpose() const {
  BoolRel out(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (get(i, j)) out.set(j, i, true);
    }
  }
  return out;
}

BoolRel BoolRel::reflexive_closure() const {
  BoolRel out = *this;
  for (int i = 0; i < n_; ++i) out.set(i, i, true);
  return out;
}

BoolRel BoolRel::transitive_closure() const {
  BoolRel out = *this;
  for (int k = 0; k < n_; ++k) {
    for (int i = 0; i < n_; ++i) {
      if (out.get(i, k)) {
        out.rows_[static_cast<std::size_t>(i)] |=
            out.rows_[static_cast<std::size_t>(k)];
      }
    }
  }
  return out;
}

bool BoolRel::leq(const BoolRel& other) const {
  if (n_ != other.n_) throw DimensionMismatch("relation dimensions differ");
  for (int i = 0; i < n_; ++i) {
    if (rows_[static_cast<std::size_t>(i)] &
        ~other.rows_[static_cast<std::size_t>(i)]) {
      return false;
    }
  }
  return true;
}

bool BoolRel::is_reflexive() const {
  for (int i = 0; i < n_; ++i) {
    if (!get(i, i)) return false;
  }
  return true;
}

bool BoolRel::is_transitive() const { return ((*this) * (*this)).leq(*this); }

bool BoolRel::is_antisymmetric() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (get(i, j) && get(j, i)) return false;
    }
  }
  return true;
}

bool BoolRel::is_partial_order() const {
  return is_reflexive() && is_transitive() && is_antisymmetric();
}

std::size_t BoolRel::edge_count() const {
  std::size_t c = 0;
  for (auto r : rows_) c += static_cast<std::size_t>(std::popcount(r));
  return c;
}

bool is_idempotent_rel(const BoolRel& a) { return a * a == a; }

PseudoOrderAnalysis analyze_pseudo_order(const BoolRel& a) {
  const int n = a.dim();
  PseudoOrderAnalysis r{0, BoolRel(n), BoolRel(n), {}, false,
                        PseudoOrderFailure::none};
  r.park = a.loops();
  r.quasi = a.reflexive_closure();
  r.sim = r.quasi & r.quasi.transpose();

  const bool transitive = r.quasi.is_transitive();

  // cover pairs of the block order, deduplicated on least-index
  // representatives of the sim blocks
  auto rep = [&](int x) { return std::countr_zero(r.sim.row(x)); };
  std::vector<std::pair<int, int>> element_covers;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!r.quasi.get(x, y) || r.sim.get(x, y)) continue;
      bool cover = true;
      for (int z = 0; z < n && cover; ++z) {
        if (r.quasi.get(x, z) && r.quasi.get(z, y) && !r.sim.get(x, z) &&
            !r.sim.get(z, y)) {
          cover = false;
        }
      }
      if (cover) element_covers.emplace_back(x, y);
    }
  }
  for (auto [x, y] : element_covers) {
    const std::pair<int, int> blocks{rep(x), rep(y)};
    if (std::find(r.covers.begin(), r.covers.end(), blocks) == r.covers.end()) {
      r.covers.push_back(blocks);
    }
  }
  std::sort(r.covers.begin(), r.covers.end());

  bool cond_a = true;
  for (int x = 0; x < n && cond_a; ++x) {
    if (!((r.park >> x) & 1u)) {
      cond_a = r.sim.row(x) == (std::uint64_t{1} << x);
    }
  }

  bool cond_b = true;
  for (auto [bx, by] : r.covers) {
    const std::uint64_t b1 = r.sim.row(bx);
    const std::uint64_t b2 = r.sim.row(by);
    if ((b1 & ~r.park) != 0 && (b2 & ~r.park) != 0) {
      cond_b = false;
      break;
    }
  }

  if (!transitive) {
    r.failure = PseudoOrderFailure::transitivity;
  } else if (!cond_a) {
    r.failure = PseudoOrderFailure::condition_a;
  } else if (!cond_b) {
    r.failure = PseudoOrderFailure::condition_b;
  } else {
    r.verdict = true;
  }
  return r;
}

bool check_pseudo_order_routes(const BoolRel& a) {
  if (!a.is_transitive()) return false;
  const std::uint64_t park = a.loops();
  const int n = a.dim();
  for (int x = 0; x < n; ++x) {
    std::uint64_t targets = a.row(x);
    if ((park >> x) & 1u) continue;  // x itself is a parking lot
    while (targets) {
      const int y = std::countr_zero(targets);
      targets &= targets - 1;
      if ((park >> y) & 1u) continue;
      // need an intermediate looped vertex p with x -> p -> y
      if ((a.row(x) & park & a.column(y)) == 0) return false;
    }
  }
  return true;
}

SubsetLattice neighborhood_lattice(const BoolRel& a, Side side) {
  const BoolRel base = side == Side::out ? a : a.transpose();
  SubsetLattice sl;
  sl.ground = a.dim();
  std::vector<std::uint64_t> work = {0};
  auto known = [&](std::uint64_t s) {
    return std::find(work.begin(), work.end(), s) != work.end();
  };
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (int x = 0; x < a.dim(); ++x) {
      const std::uint64_t s = work[i] | base.row(x);
      if (!known(s)) work.push_back(s);
    }
  }
  std::sort(work.begin(), work.end());
  sl.members = std::move(work);
  return sl;
}

Poset::Poset(std::vector<int> c, BoolRel o)
    : carrier(std::move(c)), order(std::move(o)) {
  if (order.dim() != static_cast<int>(carrier.size())) {
    throw DimensionMismatch("order dimension does not match carrier");
  }
  if (!order.is_partial_order()) {
    throw std::invalid_argument("relation is not a partial order");
  }
}

Poset poset_of_inclusion(const SubsetLattice& sl) {
  const int t = static_cast<int>(sl.members.size());
  BoolRel order(t);
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < t; ++j) {
      if ((sl.members[static_cast<std::size_t>(i)] &
           ~sl.members[static_cast<std::size_t>(j)]) == 0) {
        order.set(i, j, true);
      }
    }
  }
  std::vector<int> carrier(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) carrier[static_cast<std::size_t>(i)] = i;
  return Poset(std::move(carrier), std::move(order));
}

namespace {

struct PosetSignature {
  int below;   // size of the down-set
  int above;   // size of the up-set
  int height;  // longest chain strictly below

  bool operator==(const PosetSignature&) const = default;
};

std::vector<PosetSignature> signatures(const Poset& p) {
  const int t = p.size();
  std::vector<PosetSignature> sig(static_cast<std::size_t>(t));
  std::vector<int> height(static_cast<std::size_t>(t), -1);
  // heights by increasing down-set size
  std::vector<int> order_of(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) order_of[static_cast<std::size_t>(i)] = i;
  auto down_size = [&](int x) {
    return std::popcount(p.order.column(x));
  };
  std::sort(order_of.begin(), order_of.end(),
            [&](int x, int y) { return down_size(x) < down_size(y); });
  for (int x : order_of) {
    int h = 0;
    for (int y = 0; y < t; ++y) {
      if (y != x && p.order.get(y, x)) {
        h = std::max(h, height[static_cast<std::size_t>(y)] + 1);
      }
    }
    height[static_cast<std::size_t>(x)] = h;
  }
  for (int x = 0; x < t; ++x) {
    sig[static_cast<std::size_t>(x)] = {
        std::popcount(p.order.column(x)),
        std::popcount(p.order.row(x)),
        height[static_cast<std::size_t>(x)]};
  }
  return sig;
}

/// Backtracking search for order isomorphisms p -> q. Invokes `emit` for
/// each one found; stops early once emit returns false.
template <typename Emit>
void iso_search(const Poset& p, const Poset& q, Emit&& emit) {
  const int t = p.size();
  if (q.size() != t) return;
  const auto sp = signatures(p);
  const auto sq = signatures(q);
  {
    auto a = sp;
    auto b = sq;
    auto key = [](const PosetSignature& s) {
      return std::tuple(s.below, s.above, s.height);
    };
    auto cmp = [&](const PosetSignature& x, const PosetSignature& y) {
      return key(x) < key(y);
    };
    std::sort(a.begin(), a.end(), cmp);
    std::sort(b.begin(), b.end(), cmp);
    if (a != b) return;
  }

  std::vector<int> map(static_cast<std::size_t>(t), -1);
  std::vector<bool> used(static_cast<std::size_t>(t), false);
  bool stop = false;

  auto consistent = [&](int x, int y) {
    if (!(sp[static_cast<std::size_t>(x)] == sq[static_cast<std::size_t>(y)])) {
      return false;
    }
    for (int u = 0; u < x; ++u) {
      const int v = map[static_cast<std::size_t>(u)];
      if (p.order.get(u, x) != q.order.get(v, y)) return false;
      if (p.order.get(x, u) != q.order.get(y, v)) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, int x) -> void {
    if (stop) return;
    if (x == t) {
      stop = !emit(map);
      return;
    }
    for (int y = 0; y < t && !stop; ++y) {
      if (used[static_cast<std::size_t>(y)] || !consistent(x, y)) continue;
      map[static_cast<std::size_t>(x)] = y;
      used[static_cast<std::size_t>(y)] = true;
      self(self, x + 1);
      used[static_cast<std::size_t>(y)] = false;
      map[static_cast<std::size_t>(x)] = -1;
    }
  };
  rec(rec, 0);
}

}  // namespace

std::optional<std::vector<int>> poset_isomorphism(const Poset& p,
                                                  const Poset& q) {
  std::optional<std::vector<int>> found;
  iso_search(p, q, [&](const std::vector<int>& map) {
    found = map;
    return false;  // first hit is enough
  });
  return found;
}

std::vector<Permutation> poset_automorphisms(const Poset& p, int cap) {
  if (p.size() > cap) {
    throw SizeLimit("poset automorphism search capped at " +
                    std::to_string(cap) + " elements");
  }
  std::vector<Permutation> out;
  iso_search(p, p, [&](const std::vector<int>& map) {
    out.push_back(Permutation(map));
    return true;
  });
  return out;
}

bool greens(const BoolRel& a, const BoolRel& b, GreensRelation which) {
  if (a.dim() != b.dim()) throw DimensionMismatch("relation dimensions differ");
  switch (which) {
    case GreensRelation::L:
      return neighborhood_lattice(a, Side::out) ==
             neighborhood_lattice(b, Side::out);
    case GreensRelation::R:
      return neighborhood_lattice(a, Side::in) ==
             neighborhood_lattice(b, Side::in);
    case GreensRelation::H:
      return greens(a, b, GreensRelation::L) &&
             greens(a, b, GreensRelation::R);
    case GreensRelation::D: {
      const auto pa = poset_of_inclusion(neighborhood_lattice(a, Side::out));
      const auto pb = poset_of_inclusion(neighborhood_lattice(b, Side::out));
      return poset_isomorphism(pa, pb).has_value();
    }
  }
  throw std::logic_error("unreachable");
}

BoolRelUniverse::BoolRelUniverse(int n) : n_(n) {
  if (n < 1 || n > 3) {
    throw SizeLimit("the exhaustive oracle is limited to n <= 3");
  }
  const std::size_t total = count();
  left_.resize(total);
  right_.resize(total);
  std::vector<BoolRel> rels;
  rels.reserve(total);
  for (std::size_t c = 0; c < total; ++c) {
    rels.push_back(BoolRel::from_code(n, c));
  }
  for (std::size_t a = 0; a < total; ++a) {
    for (std::size_t c = 0; c < total; ++c) {
      left_[a].set(static_cast<std::size_t>((rels[c] * rels[a]).code()));
      right_[a].set(static_cast<std::size_t>((rels[a] * rels[c]).code()));
    }
  }
}

const BoolRelUniverse& BoolRelUniverse::instance(int n) {
  if (n < 1 || n > 3) {
    throw SizeLimit("the exhaustive oracle is limited to n <= 3");
  }
  static const BoolRelUniverse u1(1), u2(2), u3(3);
  switch (n) {
    case 1: return u1;
    case 2: return u2;
    default: return u3;
  }
}

bool BoolRelUniverse::l_related(std::uint64_t a, std::uint64_t b) const {
  return left_[a][b] && left_[b][a];
}

bool BoolRelUniverse::r_related(std::uint64_t a, std::uint64_t b) const {
  return right_[a][b] && right_[b][a];
}

bool BoolRelUniverse::h_related(std::uint64_t a, std::uint64_t b) const {
  return l_related(a, b) && r_related(a, b);
}

bool BoolRelUniverse::d_related(std::uint64_t a, std::uint64_t b) const {
  for (std::size_t z = 0; z < count(); ++z) {
    if (l_related(a, z) && r_related(z, b)) return true;
  }
  return false;
}

bool greens_oracle(const BoolRel& a, const BoolRel& b, GreensRelation which) {
  if (a.dim() != b.dim()) throw DimensionMismatch("relation dimensions differ");
  const BoolRelUniverse& u = BoolRelUniverse::instance(a.dim());
  const std::uint64_t ca = a.code(), cb = b.code();
  switch (which) {
    case GreensRelation::L: return u.l_related(ca, cb);
    case GreensRelation::R: return u.r_related(ca, cb);
    case GreensRelation::H: return u.h_related(ca, cb);
    case GreensRelation::D: return u.d_related(ca, cb);
  }
  throw std::logic_error("unreachable");
}

ReducedIdempotent reduced_idempotent(const BoolRel& a) {
  if (!is_idempotent_rel(a)) {
    throw NotIdempotent("relation is not idempotent");
  }
  const int n = a.dim();
  const std::uint64_t park = a.loops();
  const BoolRel sym = a & a.transpose();

  // least-index representative per block of the symmetric part; for an
  // idempotent relation those blocks partition the looped vertices
  std::vector<int> transversal;
  std::uint64_t tmask = 0;
  for (int i = 0; i < n; ++i) {
    if (!((park >> i) & 1u)) continue;
    if ((sym.row(i) & tmask) == 0) {
      transversal.push_back(i);
      tmask |= std::uint64_t{1} << i;
    }
  }

  BoolRel diag(n);
  for (int i : transversal) diag.set(i, i, true);

  ReducedIdempotent out{diag, diag * a * diag, std::move(transversal)};
  return out;
}

Poset core_poset(const BoolRel& a) {
  const ReducedIdempotent red = reduced_idempotent(a);
  const int t = static_cast<int>(red.transversal.size());
  BoolRel order(t);
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < t; ++j) {
      if (red.reduced.get(red.transversal[static_cast<std::size_t>(i)],
                          red.transversal[static_cast<std::size_t>(j)])) {
        order.set(i, j, true);
      }
    }
  }
  return Poset(red.transversal, std::move(order));
}

bool is_reduced_idempotent(const BoolRel& a) {
  const std::uint64_t park = a.loops();
  for (int i = 0; i < a.dim(); ++i) {
    if (a.row(i) != 0 && !((park >> i) & 1u)) return false;  // edge out of T
    if (a.row(i) & ~park) return false;                      // edge into X\T
  }
  return a.is_transitive() && a.is_antisymmetric();
}

BoolRel permute_rows(const BoolRel& a, const Permutation& f) {
  if (f.degree() != a.dim()) {
    throw DimensionMismatch("permutation degree does not match relation");
  }
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) {
    rows[static_cast<std::size_t>(i)] = a.row(f(i));
  }
  return BoolRel::from_rows(a.dim(), std::move(rows));
}

std::vector<BoolRel> hclass_of_reduced_idempotent(const BoolRel& a, int cap) {
  if (!is_reduced_idempotent(a)) {
    throw NotReducedIdempotent(
        "relation is not a partial order on its looped vertices with the "
        "rest isolated");
  }
  const int n = a.dim();
  const std::uint64_t park = a.loops();
  std::vector<int> carrier;
  for (int i = 0; i < n; ++i) {
    if ((park >> i) & 1u) carrier.push_back(i);
  }
  const int t = static_cast<int>(carrier.size());
  BoolRel order(t);
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < t; ++j) {
      if (a.get(carrier[static_cast<std::size_t>(i)],
                carrier[static_cast<std::size_t>(j)])) {
        order.set(i, j, true);
      }
    }
  }

  std::vector<BoolRel> out;
  const Poset poset(carrier, std::move(order));
  for (const Permutation& f : poset_automorphisms(poset, cap)) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < t; ++i) {
      images[static_cast<std::size_t>(carrier[static_cast<std::size_t>(i)])] =
          carrier[static_cast<std::size_t>(f(i))];
    }
    out.push_back(permute_rows(a, Permutation(std::move(images))));
  }
  return out;
}

}  // namespace latmat
