#pragma once

#include <stdexcept>
#include <string>

namespace latmat {

/// Base class of every recoverable error raised by this library.
/// std::logic_error is reserved for internal invariant violations.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define LATMAT_ERROR(Name)    \
  struct Name : Error {       \
    using Error::Error;       \
  }

// lattice construction and interrogation
LATMAT_ERROR(NotALattice);
LATMAT_ERROR(Unbounded);
LATMAT_ERROR(InconsistentTables);
LATMAT_ERROR(NotDistributive);
LATMAT_ERROR(UnknownOmega);

// matrix and vector plumbing
LATMAT_ERROR(DimensionMismatch);
LATMAT_ERROR(LatticeMismatch);

// search and enumeration limits
LATMAT_ERROR(SizeLimit);
LATMAT_ERROR(BudgetExceeded);

// spectrum certification
LATMAT_ERROR(NotAnIdentity);
LATMAT_ERROR(NotAWitness);
LATMAT_ERROR(WitnessModeUnavailable);

// structure theory preconditions
LATMAT_ERROR(NotIdempotent);
LATMAT_ERROR(NotReducedIdempotent);
LATMAT_ERROR(NotNested);
LATMAT_ERROR(IrreducibilityNotSatisfied);
LATMAT_ERROR(BottomNotMeetIrreducible);
LATMAT_ERROR(NotNilpotent);

// file parsing
LATMAT_ERROR(ParseError);
LATMAT_ERROR(UnknownElement);

#undef LATMAT_ERROR

/// One of the nested relations handed to the chain idempotent builder is
/// not a pseudo-order; `level` is the 1-based cut index that failed.
struct NotPseudoOrder : Error {
  int level;
  explicit NotPseudoOrder(int k, const std::string& what)
      : Error(what), level(k) {}
};

/// A cut of the matrix is not a partial order on the whole vertex set;
/// `level` is the 1-based cut index that failed.
struct CutNotPartialOrder : Error {
  int level;
  explicit CutNotPartialOrder(int k, const std::string& what)
      : Error(what), level(k) {}
};

}  // namespace latmat
