#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "latmat/boolrel.hpp"
#include "latmat/lattice.hpp"
#include "latmat/matrix.hpp"

namespace latmat {

/// The Birkhoff image of a matrix: one Boolean relation per
/// join-irreducible element, obtained by cutting every entry.
struct CutFamily {
  CutIndex index;
  int n = 0;
  std::vector<BoolRel> cuts;  // parallel to index.omega()
};

/// Entrywise cut of the matrix at every join-irreducible. Each cut map is
/// a multiplicative homomorphism into the Boolean matrix semigroup.
/// Throws NotDistributive.
CutFamily cut_decompose(const LatMatrix& a);

/// Inverse of cut_decompose: entry (i, j) is the unique lattice element
/// whose embedded set matches the bits of the cuts at (i, j).
LatMatrix reconstruct(const CutFamily& family);

/// A*A == A. Also evaluates the cut criterion (every cut is a
/// pseudo-order) and insists the two answers agree. Throws NotDistributive.
bool is_idempotent_mat(const LatMatrix& a);

/// Builds the idempotent over the m-element chain whose cuts are the given
/// nested pseudo-orders. `chain` must be a chain with rels.size() + 1
/// elements. Throws NotPseudoOrder(k) / NotNested.
LatMatrix chain_idempotent_from_nested(std::shared_ptr<const Lattice> chain,
                                       const std::vector<BoolRel>& rels);

enum class InvertMode { theorem, exhaustive };

struct InvertResult {
  InvertMode mode = InvertMode::theorem;
  std::vector<LatMatrix> inverses;  // all right inverses found
};

/// Right inverses of A, i.e. solutions of A*B = I.
///
/// Theorem mode applies only when the bottom is meet-irreducible or the
/// top is join-irreducible (throws IrreducibilityNotSatisfied otherwise);
/// there the solutions are exactly the permutation pairs, so it answers
/// without search. Exhaustive mode scans all |L|^{n^2} candidates and
/// returns every solution; nonuniqueness is possible and reported.
InvertResult invert(const LatMatrix& a, InvertMode mode,
                    std::uint64_t budget = 1'000'000);

/// A^n == 0, cross-checked against the cycle criterion: the join of the
/// diagonals of A, A^2, ..., A^n must be bottom, i.e. every directed cycle
/// has meet-capacity zero. Throws NotDistributive.
bool is_nilpotent(const LatMatrix& a);

/// True iff a_ij != 0 implies i < j.
bool is_strictly_upper_triangular(const LatMatrix& a);

/// The matrix with top strictly above the diagonal and bottom elsewhere;
/// nilpotent with nonzero (n-1)-st power.
LatMatrix strictly_upper_ones(std::shared_ptr<const Lattice> lattice, int n);

/// A permutation pi with conjugate(a, pi) strictly upper triangular,
/// built by topologically sorting the nonzero pattern (least original
/// index first among ties). Requires a meet-irreducible bottom (throws
/// BottomNotMeetIrreducible) and a nilpotent matrix (throws NotNilpotent).
Permutation triangularize(const LatMatrix& a);

/// The H-class of an idempotent over a chain whose cuts are all partial
/// orders on the full vertex set: {P_f * A : f a common automorphism of
/// the cut posets}. Throws NotIdempotent / CutNotPartialOrder(k);
/// `cap` bounds the automorphism search.
std::vector<LatMatrix> hclass_chain(const LatMatrix& a, int cap = 10);

/// One-stop classification; fields whose preconditions fail are left
/// unset instead of throwing, so arbitrary inputs can be inspected.
struct ClassifyReport {
  bool distributive = false;
  std::optional<bool> idempotent;  // distributive hosts only
  std::optional<bool> nilpotent;   // distributive hosts only
  bool permutation = false;
  BoundIrreducibility bounds;
};

ClassifyReport classify(const LatMatrix& a);

}  // namespace latmat
