#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latmat/errors.hpp"

namespace latmat {

/// Element id inside one lattice. Identity is by index; labels are I/O only.
using Elem = int;

struct BoundIrreducibility {
  bool bottom_meet_irreducible = false;  // a*b = 0 implies a = 0 or b = 0
  bool top_join_irreducible = false;     // a+b = 1 implies a = 1 or b = 1
};

/// Finite bounded lattice given by its order and operation tables.
/// Immutable after construction; all queries are pure.
class Lattice {
 public:
  /// Builds a lattice from a Hasse diagram (list of cover pairs, by id).
  /// Throws NotALattice if some pair lacks a unique lub/glb or the covers
  /// contain a cycle, Unbounded if there is no global minimum or maximum.
  static Lattice from_covers(std::vector<std::string> names,
                             const std::vector<std::pair<Elem, Elem>>& covers);

  /// Builds a lattice from explicit join/meet tables (entries are ids).
  /// Throws InconsistentTables if the tables violate the lattice axioms,
  /// Unbounded if bounds are missing.
  static Lattice from_tables(std::vector<std::string> names,
                             const std::vector<std::vector<Elem>>& join,
                             const std::vector<std::vector<Elem>>& meet);

  /// Named built-ins: "chain:<m>", "bool" (= chain:2), "M3", "N5",
  /// "2x2", "2x2+1". Throws ParseError for unknown names.
  static Lattice builtin(std::string_view name);
  static std::shared_ptr<const Lattice> builtin_shared(std::string_view name);

  int size() const { return m_; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }
  bool leq(Elem a, Elem b) const { return leq_[idx(a, b)] != 0; }
  Elem join(Elem a, Elem b) const { return join_[idx(a, b)]; }
  Elem meet(Elem a, Elem b) const { return meet_[idx(a, b)]; }
  const std::string& label(Elem a) const;
  std::optional<Elem> element(std::string_view label) const;

  /// Canonical built-in tag ("M3", "chain:4", ...) or "" for custom lattices.
  const std::string& name() const { return name_; }

  /// True iff a*(b+c) = a*b + a*c for all triples (decided exhaustively
  /// at construction).
  bool distributive() const { return distributive_; }

  BoundIrreducibility bound_irreducibility() const;
  bool is_chain() const;

  std::vector<Elem> lower_covers(Elem a) const;
  std::vector<Elem> upper_covers(Elem a) const;
  std::vector<std::pair<Elem, Elem>> cover_pairs() const;

  /// Elements with exactly one lower cover (bottom excluded).
  std::vector<Elem> join_irreducibles() const;

  /// Structural equality: same labels and same tables.
  bool operator==(const Lattice& other) const;

 private:
  Lattice() = default;
  void finish_construction();
  std::size_t idx(Elem a, Elem b) const;
  Elem check(Elem a) const;

  int m_ = 0;
  std::vector<std::string> names_;
  std::vector<std::uint8_t> leq_;  // m x m
  std::vector<Elem> join_;         // m x m
  std::vector<Elem> meet_;         // m x m
  Elem bottom_ = 0;
  Elem top_ = 0;
  bool distributive_ = false;
  std::string name_;
};

/// Birkhoff set representation of a finite bounded distributive lattice:
/// each element maps to the set of join-irreducibles below it, so that
/// join becomes union and meet becomes intersection.
class CutIndex {
 public:
  const Lattice& lattice() const { return *lattice_; }
  const std::shared_ptr<const Lattice>& lattice_ptr() const { return lattice_; }

  /// Join-irreducible elements, ascending by id.
  const std::vector<Elem>& omega() const { return omega_; }

  /// Bitmask over positions of omega(): bit t set iff omega()[t] <= a.
  std::uint64_t embed(Elem a) const;

  /// 1 iff omega_elem lies below a. Throws UnknownOmega if omega_elem is
  /// not join-irreducible in the host lattice.
  bool cut(Elem omega_elem, Elem a) const;

  /// The unique element whose embedded set equals `mask`, if any.
  std::optional<Elem> element_with_embed(std::uint64_t mask) const;

 private:
  friend CutIndex birkhoff_cuts(std::shared_ptr<const Lattice> lattice);
  CutIndex() = default;

  std::shared_ptr<const Lattice> lattice_;
  std::vector<Elem> omega_;
  std::vector<std::uint64_t> embed_;
  std::unordered_map<std::uint64_t, Elem> by_mask_;
};

/// Throws NotDistributive for nondistributive hosts, SizeLimit if the
/// lattice has more than 64 join-irreducibles.
CutIndex birkhoff_cuts(std::shared_ptr<const Lattice> lattice);

/// Smallest subset of L containing `seed` and closed under join and meet.
/// Result is sorted ascending. `seed` must be nonempty.
std::vector<Elem> generated_sublattice(const Lattice& lattice,
                                       const std::vector<Elem>& seed);

}  // namespace latmat
