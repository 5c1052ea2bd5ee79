#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "latmat/errors.hpp"

namespace latmat {

/// A parenthesization of x1...xk: a full binary tree with k ordered leaves.
/// Immutable; subtrees are shared, so copies are cheap.
class Bracketing {
 public:
  static Bracketing leaf();
  static Bracketing combine(const Bracketing& l, const Bracketing& r);

  int leaves() const { return node_->leaves; }
  bool is_leaf() const { return node_->l == nullptr; }
  Bracketing left() const;
  Bracketing right() const;

  /// Number of leaves in the left factor of the outermost product.
  int split() const;

  bool operator==(const Bracketing& other) const;
  bool operator!=(const Bracketing& other) const { return !(*this == other); }

  /// "((x1 x2) x3)" style rendering with 1-based variable positions.
  std::string to_string() const;

 private:
  struct Node {
    std::shared_ptr<const Node> l, r;
    int leaves = 1;
  };
  explicit Bracketing(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

/// C_n, exact in 64 bits for the sizes this library enumerates.
std::uint64_t catalan(std::uint64_t n);

/// All bracketings of x1...xk in deterministic order: outer loop over the
/// split position, then left factor, then right factor, recursively.
/// Throws SizeLimit for k > cap.
std::vector<Bracketing> enumerate_bracketings(int k, int cap = 12);

/// Bottom-up evaluation of a bracketing over the given arguments.
template <typename T, typename Mul>
T eval_bracketing(const Bracketing& t, std::span<const T> args, Mul&& mul) {
  if (static_cast<int>(args.size()) != t.leaves()) {
    throw DimensionMismatch("argument count does not match leaf count");
  }
  if (t.is_leaf()) return args[0];
  const int s = t.split();
  T lhs = eval_bracketing(t.left(), args.first(static_cast<std::size_t>(s)), mul);
  T rhs = eval_bracketing(t.right(), args.subspan(static_cast<std::size_t>(s)), mul);
  return mul(lhs, rhs);
}

}  // namespace latmat
