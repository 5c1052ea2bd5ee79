#pragma once

#include <bitset>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "latmat/errors.hpp"
#include "latmat/matrix.hpp"

namespace latmat {

/// A binary relation on {0..n-1} stored as a bit matrix, one word per row.
/// Multiplication is relational composition, i.e. the matrix product over
/// the two-element lattice.
class BoolRel {
 public:
  explicit BoolRel(int n);
  static BoolRel from_rows(int n, std::vector<std::uint64_t> rows);
  static BoolRel identity(int n);
  static BoolRel full(int n);

  /// Packs/unpacks the n*n bits into one word, bit i*n+j for (i, j).
  /// Only available for n <= 8; used by the exhaustive scans.
  static BoolRel from_code(int n, std::uint64_t code);
  std::uint64_t code() const;

  int dim() const { return n_; }
  bool get(int i, int j) const;
  void set(int i, int j, bool v);
  std::uint64_t row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
  std::uint64_t column(int j) const;

  /// Mask of looped vertices {x : (x, x) in the relation}.
  std::uint64_t loops() const;

  BoolRel operator*(const BoolRel& other) const;
  BoolRel operator&(const BoolRel& other) const;
  BoolRel operator|(const BoolRel& other) const;
  BoolRel transpose() const;
  BoolRel reflexive_closure() const;
  BoolRel transitive_closure() const;

  bool leq(const BoolRel& other) const;  // containment
  bool is_reflexive() const;
  bool is_transitive() const;
  bool is_antisymmetric() const;
  bool is_partial_order() const;
  std::size_t edge_count() const;

  bool operator==(const BoolRel&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// A * A == A, by direct squaring.
bool is_idempotent_rel(const BoolRel& a);

enum class PseudoOrderFailure { none, transitivity, condition_a, condition_b };

/// Decomposition of a relation against the pseudo-order definition: the
/// reflexive closure must be a quasi-order, loopless vertices must form
/// singleton blocks of its symmetric part, and every cover pair must keep
/// a loop on at least one side.
struct PseudoOrderAnalysis {
  std::uint64_t park = 0;  // looped vertices
  BoolRel quasi;           // reflexive closure
  BoolRel sim;             // quasi intersected with its converse
  std::vector<std::pair<int, int>> covers;  // between block representatives
  bool verdict = false;
  PseudoOrderFailure failure = PseudoOrderFailure::none;
};

PseudoOrderAnalysis analyze_pseudo_order(const BoolRel& a);

/// The route characterization: the relation is transitive and every edge
/// (x, y) admits a route from x to y through a looped vertex. Equivalent
/// to analyze_pseudo_order(a).verdict.
bool check_pseudo_order_routes(const BoolRel& a);

enum class Side { out, in };

/// All unions of rows (out) or columns (in), including the empty union,
/// ordered by inclusion. Join is union; meet of two members is the
/// largest member contained in their intersection.
struct SubsetLattice {
  int ground = 0;
  std::vector<std::uint64_t> members;  // sorted ascending

  bool operator==(const SubsetLattice&) const = default;
};

SubsetLattice neighborhood_lattice(const BoolRel& a, Side side);

/// A partial order on a subset of the original vertex set. `order` is
/// indexed by positions into `carrier`.
struct Poset {
  std::vector<int> carrier;  // original vertex labels, ascending
  BoolRel order;

  Poset() : order(0) {}
  Poset(std::vector<int> c, BoolRel o);
  int size() const { return static_cast<int>(carrier.size()); }
};

/// Inclusion order of a subset lattice as a Poset (carrier positions
/// index `members`).
Poset poset_of_inclusion(const SubsetLattice& sl);

/// An order isomorphism as a map of positions, or nullopt. Backtracking
/// pruned by (in-degree, out-degree, height) signatures.
std::optional<std::vector<int>> poset_isomorphism(const Poset& p,
                                                  const Poset& q);

/// All order automorphisms, in lexicographic order of image vectors.
/// Throws SizeLimit when the carrier exceeds `cap`.
std::vector<Permutation> poset_automorphisms(const Poset& p, int cap = 10);

enum class GreensRelation { L, R, H, D };

/// Formula-based Green's relations: L iff equal out-neighborhood systems,
/// R iff equal in-neighborhood systems, H = L and R, D iff the two
/// out-neighborhood lattices are order-isomorphic.
bool greens(const BoolRel& a, const BoolRel& b, GreensRelation which);

/// All 2^{n^2} relations of one dimension with the membership structure
/// of their principal one-sided ideals precomputed. Ground truth for the
/// formula-based checks; n <= 3.
class BoolRelUniverse {
 public:
  explicit BoolRelUniverse(int n);
  static const BoolRelUniverse& instance(int n);

  int dim() const { return n_; }
  std::size_t count() const { return std::size_t{1} << (n_ * n_); }

  bool l_related(std::uint64_t a, std::uint64_t b) const;
  bool r_related(std::uint64_t a, std::uint64_t b) const;
  bool h_related(std::uint64_t a, std::uint64_t b) const;
  bool d_related(std::uint64_t a, std::uint64_t b) const;  // D = L o R

 private:
  int n_;
  std::vector<std::bitset<512>> left_;   // left_[a]  = {code(C*A) : C}
  std::vector<std::bitset<512>> right_;  // right_[a] = {code(A*C) : C}
};

/// Definitional check by exhaustive search over multiplier matrices;
/// D is decided as the composition L o R. Throws SizeLimit for n > 3.
bool greens_oracle(const BoolRel& a, const BoolRel& b, GreensRelation which);

/// The diagonal restriction of an idempotent to a transversal of its
/// symmetric-part blocks (least index per block).
struct ReducedIdempotent {
  BoolRel diag;              // D: loops on the transversal only
  BoolRel reduced;           // A1 = D*A*D, a partial order on the transversal
  std::vector<int> transversal;
};

/// Throws NotIdempotent unless a*a == a. Guarantees a*diag*a == a,
/// reduced idempotent, and (a, reduced) D-related.
ReducedIdempotent reduced_idempotent(const BoolRel& a);

/// The poset of transversal representatives of an idempotent; its
/// isomorphism type classifies the D-class.
Poset core_poset(const BoolRel& a);

/// True iff the relation is a partial order on its looped vertex set with
/// every other vertex isolated.
bool is_reduced_idempotent(const BoolRel& a);

/// The H-class of a reduced idempotent: {P_f * A : f fixes the complement
/// of the carrier pointwise and restricts to a poset automorphism}.
/// Throws NotReducedIdempotent; `cap` bounds the automorphism search.
std::vector<BoolRel> hclass_of_reduced_idempotent(const BoolRel& a,
                                                  int cap = 10);

/// Rows permuted by f: row i of the result is row f(i) of a. This is the
/// relation product P_f o a.
BoolRel permute_rows(const BoolRel& a, const Permutation& f);

}  // namespace latmat
