#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "latmat/bracketing.hpp"
#include "latmat/lattice.hpp"

namespace latmat {

/// A bijection on {0..n-1} with composition written left to right, so that
/// permutation matrices satisfy P_f * P_g = P_{f.then(g)}.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);

  /// All of S_n in lexicographic order of image vectors.
  /// Throws SizeLimit for n > 8.
  static std::vector<Permutation> all(int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }
  Permutation inverse() const;
  Permutation then(const Permutation& g) const;
  bool is_identity() const;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// An n x n matrix of lattice elements, bound to its host lattice.
/// Values are immutable once built; all operations return fresh matrices.
class LatMatrix {
 public:
  LatMatrix(std::shared_ptr<const Lattice> lattice, int n,
            std::vector<Elem> entries);

  static LatMatrix identity(std::shared_ptr<const Lattice> lattice, int n);
  static LatMatrix zero(std::shared_ptr<const Lattice> lattice, int n);
  static LatMatrix constant(std::shared_ptr<const Lattice> lattice, int n,
                            Elem value);

  int dim() const { return n_; }
  const Lattice& lattice() const { return *lattice_; }
  const std::shared_ptr<const Lattice>& lattice_ptr() const { return lattice_; }
  Elem operator()(int i, int j) const;
  const std::vector<Elem>& entries() const { return entries_; }

  bool is_zero() const;
  bool is_identity() const;

  bool operator==(const LatMatrix& other) const;
  bool operator!=(const LatMatrix& other) const { return !(*this == other); }

 private:
  std::shared_ptr<const Lattice> lattice_;
  int n_ = 0;
  std::vector<Elem> entries_;  // row-major
};

/// (AB)_ik = sum_j a_ij * b_jk with join as sum and meet as product.
LatMatrix operator*(const LatMatrix& a, const LatMatrix& b);

/// Entrywise join.
LatMatrix operator+(const LatMatrix& a, const LatMatrix& b);

/// Entrywise order: a_ij <= b_ij for all i, j.
bool entrywise_leq(const LatMatrix& a, const LatMatrix& b);

LatMatrix transpose(const LatMatrix& a);

/// A^k for k >= 1. Only defined over distributive lattices, where all
/// bracketings of the k-fold product agree; throws NotDistributive
/// otherwise. Nondistributive hosts must use bracketed_power.
LatMatrix power(const LatMatrix& a, int k);

/// The product of leaves(t) copies of `a` parenthesized according to t.
LatMatrix bracketed_power(const LatMatrix& a, const Bracketing& t);

/// P_pi: top at (i, pi(i)), bottom elsewhere. P_pi*A permutes rows of A by
/// pi; A*P_pi permutes columns by pi^{-1}.
LatMatrix permutation_matrix(std::shared_ptr<const Lattice> lattice,
                             const Permutation& pi);

/// P_pi * A * P_pi^{-1}; entry (i, j) of the result is a_{pi(i) pi(j)}.
LatMatrix conjugate(const LatMatrix& a, const Permutation& pi);

/// The permutation pi with a = P_pi, if a is a permutation matrix.
std::optional<Permutation> as_permutation(const LatMatrix& a);

}  // namespace latmat
