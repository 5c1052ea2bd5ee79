#include "latmat/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace latmat {

namespace {

void require_names(const std::vector<std::string>& names) {
  if (names.size() < 2) {
    throw NotALattice("a lattice needs at least two elements");
  }
  std::set<std::string> seen(names.begin(), names.end());
  if (seen.size() != names.size()) {
    throw NotALattice("duplicate element labels");
  }
}

}  // namespace

std::size_t Lattice::idx(Elem a, Elem b) const {
  return static_cast<std::size_t>(check(a)) * m_ + check(b);
}

Elem Lattice::check(Elem a) const {
  if (a < 0 || a >= m_) {
    throw Error("element id out of range");
  }
  return a;
}

const std::string& Lattice::label(Elem a) const { return names_[check(a)]; }

std::optional<Elem> Lattice::element(std::string_view label) const {
  for (Elem a = 0; a < m_; ++a) {
    if (names_[a] == label) return a;
  }
  return std::nullopt;
}

Lattice Lattice::from_covers(std::vector<std::string> names,
                             const std::vector<std::pair<Elem, Elem>>& covers) {
  require_names(names);
  Lattice L;
  L.m_ = static_cast<int>(names.size());
  L.names_ = std::move(names);
  const int m = L.m_;

  L.leq_.assign(static_cast<std::size_t>(m) * m, 0);
  for (Elem a = 0; a < m; ++a) L.leq_[static_cast<std::size_t>(a) * m + a] = 1;
  for (const auto& [lo, hi] : covers) {
    if (lo < 0 || lo >= m || hi < 0 || hi >= m) {
      throw NotALattice("cover pair references an unknown element");
    }
    L.leq_[static_cast<std::size_t>(lo) * m + hi] = 1;
  }
  // reflexive-transitive closure
  for (Elem k = 0; k < m; ++k) {
    for (Elem a = 0; a < m; ++a) {
      if (!L.leq_[static_cast<std::size_t>(a) * m + k]) continue;
      for (Elem b = 0; b < m; ++b) {
        if (L.leq_[static_cast<std::size_t>(k) * m + b]) {
          L.leq_[static_cast<std::size_t>(a) * m + b] = 1;
        }
      }
    }
  }
  for (Elem a = 0; a < m; ++a) {
    for (Elem b = 0; b < a; ++b) {
      if (L.leq_[static_cast<std::size_t>(a) * m + b] &&
          L.leq_[static_cast<std::size_t>(b) * m + a]) {
        throw NotALattice("cover list contains a cycle");
      }
    }
  }

  // bounds
  auto global_min = [&]() -> std::optional<Elem> {
    for (Elem a = 0; a < m; ++a) {
      bool ok = true;
      for (Elem b = 0; b < m && ok; ++b) ok = L.leq(a, b);
      if (ok) return a;
    }
    return std::nullopt;
  };
  auto global_max = [&]() -> std::optional<Elem> {
    for (Elem a = 0; a < m; ++a) {
      bool ok = true;
      for (Elem b = 0; b < m && ok; ++b) ok = L.leq(b, a);
      if (ok) return a;
    }
    return std::nullopt;
  };
  auto lo = global_min();
  auto hi = global_max();
  if (!lo || !hi) throw Unbounded("no global minimum or maximum");
  L.bottom_ = *lo;
  L.top_ = *hi;

  // join/meet from the order: unique least upper / greatest lower bounds
  L.join_.assign(static_cast<std::size_t>(m) * m, 0);
  L.meet_.assign(static_cast<std::size_t>(m) * m, 0);
  for (Elem a = 0; a < m; ++a) {
    for (Elem b = 0; b < m; ++b) {
      std::optional<Elem> lub, glb;
      for (Elem c = 0; c < m; ++c) {
        if (!(L.leq(a, c) && L.leq(b, c))) continue;
        bool least = true;
        for (Elem d = 0; d < m && least; ++d) {
          if (L.leq(a, d) && L.leq(b, d)) least = L.leq(c, d);
        }
        if (least) {
          lub = c;
          break;
        }
      }
      for (Elem c = 0; c < m; ++c) {
        if (!(L.leq(c, a) && L.leq(c, b))) continue;
        bool greatest = true;
        for (Elem d = 0; d < m && greatest; ++d) {
          if (L.leq(d, a) && L.leq(d, b)) greatest = L.leq(d, c);
        }
        if (greatest) {
          glb = c;
          break;
        }
      }
      if (!lub || !glb) {
        throw NotALattice("pair without a unique least upper or greatest "
                          "lower bound");
      }
      L.join_[static_cast<std::size_t>(a) * m + b] = *lub;
      L.meet_[static_cast<std::size_t>(a) * m + b] = *glb;
    }
  }

  L.finish_construction();
  return L;
}

Lattice Lattice::from_tables(std::vector<std::string> names,
                             const std::vector<std::vector<Elem>>& join,
                             const std::vector<std::vector<Elem>>& meet) {
  require_names(names);
  Lattice L;
  L.m_ = static_cast<int>(names.size());
  L.names_ = std::move(names);
  const int m = L.m_;

  auto load = [&](const std::vector<std::vector<Elem>>& t,
                  std::vector<Elem>& out) {
    if (static_cast<int>(t.size()) != m) {
      throw InconsistentTables("table has wrong number of rows");
    }
    out.assign(static_cast<std::size_t>(m) * m, 0);
    for (int i = 0; i < m; ++i) {
      if (static_cast<int>(t[i].size()) != m) {
        throw InconsistentTables("table row has wrong length");
      }
      for (int j = 0; j < m; ++j) {
        if (t[i][j] < 0 || t[i][j] >= m) {
          throw InconsistentTables("table entry out of range");
        }
        out[static_cast<std::size_t>(i) * m + j] = t[i][j];
      }
    }
  };
  load(join, L.join_);
  load(meet, L.meet_);

  auto jn = [&](Elem a, Elem b) {
    return L.join_[static_cast<std::size_t>(a) * m + b];
  };
  auto mt = [&](Elem a, Elem b) {
    return L.meet_[static_cast<std::size_t>(a) * m + b];
  };
  for (Elem a = 0; a < m; ++a) {
    if (jn(a, a) != a || mt(a, a) != a) {
      throw InconsistentTables("idempotence fails");
    }
    for (Elem b = 0; b < m; ++b) {
      if (jn(a, b) != jn(b, a) || mt(a, b) != mt(b, a)) {
        throw InconsistentTables("commutativity fails");
      }
      if (jn(a, mt(a, b)) != a || mt(a, jn(a, b)) != a) {
        throw InconsistentTables("absorption fails");
      }
      for (Elem c = 0; c < m; ++c) {
        if (jn(jn(a, b), c) != jn(a, jn(b, c)) ||
            mt(mt(a, b), c) != mt(a, mt(b, c))) {
          throw InconsistentTables("associativity fails");
        }
      }
    }
  }

  L.leq_.assign(static_cast<std::size_t>(m) * m, 0);
  for (Elem a = 0; a < m; ++a) {
    for (Elem b = 0; b < m; ++b) {
      bool le = jn(a, b) == b;
      if (le != (mt(a, b) == a)) {
        throw InconsistentTables("join and meet induce different orders");
      }
      L.leq_[static_cast<std::size_t>(a) * m + b] = le ? 1 : 0;
    }
  }

  std::optional<Elem> lo, hi;
  for (Elem a = 0; a < m; ++a) {
    bool is_min = true, is_max = true;
    for (Elem b = 0; b < m; ++b) {
      is_min = is_min && L.leq(a, b);
      is_max = is_max && L.leq(b, a);
    }
    if (is_min) lo = a;
    if (is_max) hi = a;
  }
  if (!lo || !hi) throw Unbounded("no global minimum or maximum");
  L.bottom_ = *lo;
  L.top_ = *hi;

  L.finish_construction();
  return L;
}

void Lattice::finish_construction() {
  distributive_ = true;
  for (Elem a = 0; a < m_ && distributive_; ++a) {
    for (Elem b = 0; b < m_ && distributive_; ++b) {
      for (Elem c = 0; c < m_; ++c) {
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) {
          distributive_ = false;
          break;
        }
      }
    }
  }
}

Lattice Lattice::builtin(std::string_view name) {
  auto chain = [](int m) {
    std::vector<std::string> names;
    std::vector<std::pair<Elem, Elem>> covers;
    for (int i = 0; i < m; ++i) {
      names.push_back(std::to_string(i));
      if (i + 1 < m) covers.emplace_back(i, i + 1);
    }
    Lattice L = from_covers(std::move(names), covers);
    L.name_ = "chain:" + std::to_string(m);
    return L;
  };

  if (name == "bool") {
    Lattice L = chain(2);
    return L;
  }
  if (name.rfind("chain:", 0) == 0) {
    const std::string_view digits = name.substr(6);
    int m = 0;
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (ec != std::errc() || p != digits.data() + digits.size() || m < 2) {
      throw ParseError("chain:<m> needs an integer m >= 2");
    }
    return chain(m);
  }
  if (name == "M3") {
    Lattice L = from_covers({"0", "a", "b", "c", "1"},
                            {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
    L.name_ = "M3";
    return L;
  }
  if (name == "N5") {
    // 0 < a < c < 1 on one side, 0 < b < 1 on the other
    Lattice L = from_covers({"0", "a", "b", "c", "1"},
                            {{0, 1}, {0, 2}, {1, 3}, {3, 4}, {2, 4}});
    L.name_ = "N5";
    return L;
  }
  if (name == "2x2") {
    Lattice L = from_covers({"0", "a", "b", "1"},
                            {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    L.name_ = "2x2";
    return L;
  }
  if (name == "2x2+1") {
    // the four-element diamond with a new top adjoined above it
    Lattice L = from_covers({"0", "a", "b", "m", "1"},
                            {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}});
    L.name_ = "2x2+1";
    return L;
  }
  throw ParseError("unknown built-in lattice: " + std::string(name));
}

std::shared_ptr<const Lattice> Lattice::builtin_shared(std::string_view name) {
  return std::make_shared<const Lattice>(builtin(name));
}

BoundIrreducibility Lattice::bound_irreducibility() const {
  BoundIrreducibility r{true, true};
  for (Elem a = 0; a < m_; ++a) {
    for (Elem b = 0; b < m_; ++b) {
      if (meet(a, b) == bottom_ && a != bottom_ && b != bottom_) {
        r.bottom_meet_irreducible = false;
      }
      if (join(a, b) == top_ && a != top_ && b != top_) {
        r.top_join_irreducible = false;
      }
    }
  }
  return r;
}

bool Lattice::is_chain() const {
  for (Elem a = 0; a < m_; ++a) {
    for (Elem b = 0; b < m_; ++b) {
      if (!leq(a, b) && !leq(b, a)) return false;
    }
  }
  return true;
}

std::vector<Elem> Lattice::lower_covers(Elem a) const {
  check(a);
  std::vector<Elem> out;
  for (Elem b = 0; b < m_; ++b) {
    if (b == a || !leq(b, a)) continue;
    bool covered = true;
    for (Elem c = 0; c < m_ && covered; ++c) {
      if (c != a && c != b && leq(b, c) && leq(c, a)) covered = false;
    }
    if (covered) out.push_back(b);
  }
  return out;
}

std::vector<Elem> Lattice::upper_covers(Elem a) const {
  check(a);
  std::vector<Elem> out;
  for (Elem b = 0; b < m_; ++b) {
    if (b == a || !leq(a, b)) continue;
    bool covers = true;
    for (Elem c = 0; c < m_ && covers; ++c) {
      if (c != a && c != b && leq(a, c) && leq(c, b)) covers = false;
    }
    if (covers) out.push_back(b);
  }
  return out;
}

std::vector<std::pair<Elem, Elem>> Lattice::cover_pairs() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem a = 0; a < m_; ++a) {
    for (Elem b : upper_covers(a)) out.emplace_back(a, b);
  }
  return out;
}

std::vector<Elem> Lattice::join_irreducibles() const {
  std::vector<Elem> out;
  for (Elem a = 0; a < m_; ++a) {
    if (a != bottom_ && lower_covers(a).size() == 1) out.push_back(a);
  }
  return out;
}

bool Lattice::operator==(const Lattice& other) const {
  return m_ == other.m_ && names_ == other.names_ && leq_ == other.leq_ &&
         join_ == other.join_ && meet_ == other.meet_;
}

std::uint64_t CutIndex::embed(Elem a) const {
  lattice_->label(a);  // range check
  return embed_[static_cast<std::size_t>(a)];
}

bool CutIndex::cut(Elem omega_elem, Elem a) const {
  auto it = std::find(omega_.begin(), omega_.end(), omega_elem);
  if (it == omega_.end()) {
    throw UnknownOmega("element is not join-irreducible in this lattice");
  }
  const auto pos = static_cast<int>(it - omega_.begin());
  return (embed(a) >> pos) & 1u;
}

std::optional<Elem> CutIndex::element_with_embed(std::uint64_t mask) const {
  auto it = by_mask_.find(mask);
  if (it == by_mask_.end()) return std::nullopt;
  return it->second;
}

CutIndex birkhoff_cuts(std::shared_ptr<const Lattice> lattice) {
  if (!lattice->distributive()) {
    throw NotDistributive("cut representation needs a distributive lattice");
  }
  CutIndex c;
  c.lattice_ = std::move(lattice);
  c.omega_ = c.lattice_->join_irreducibles();
  if (c.omega_.size() > 64) {
    throw SizeLimit("more than 64 join-irreducible elements");
  }
  const int m = c.lattice_->size();
  c.embed_.assign(static_cast<std::size_t>(m), 0);
  for (Elem a = 0; a < m; ++a) {
    std::uint64_t mask = 0;
    for (std::size_t t = 0; t < c.omega_.size(); ++t) {
      if (c.lattice_->leq(c.omega_[t], a)) mask |= std::uint64_t{1} << t;
    }
    c.embed_[static_cast<std::size_t>(a)] = mask;
    c.by_mask_.emplace(mask, a);
  }
  if (c.by_mask_.size() != static_cast<std::size_t>(m)) {
    throw std::logic_error("cut embedding is not injective");
  }
  return c;
}

std::vector<Elem> generated_sublattice(const Lattice& lattice,
                                       const std::vector<Elem>& seed) {
  if (seed.empty()) {
    throw std::invalid_argument("generated_sublattice needs a nonempty seed");
  }
  std::vector<bool> in(lattice.size(), false);
  std::vector<Elem> work;
  for (Elem a : seed) {
    lattice.label(a);  // range check
    if (!in[a]) {
      in[a] = true;
      work.push_back(a);
    }
  }
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (Elem x : {lattice.join(work[i], work[j]),
                     lattice.meet(work[i], work[j])}) {
        if (!in[x]) {
          in[x] = true;
          work.push_back(x);
        }
      }
    }
  }
  std::sort(work.begin(), work.end());
  return work;
}

}  // namespace latmat
