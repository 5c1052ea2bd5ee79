#include "latmat/bracketing.hpp"

namespace latmat {

Bracketing Bracketing::leaf() {
  static const auto n = std::make_shared<const Node>();
  return Bracketing(n);
}

Bracketing Bracketing::combine(const Bracketing& l, const Bracketing& r) {
  auto n = std::make_shared<Node>();
  n->l = l.node_;
  n->r = r.node_;
  n->leaves = l.leaves() + r.leaves();
  return Bracketing(std::move(n));
}

Bracketing Bracketing::left() const {
  if (is_leaf()) throw std::logic_error("leaf has no left factor");
  return Bracketing(node_->l);
}

Bracketing Bracketing::right() const {
  if (is_leaf()) throw std::logic_error("leaf has no right factor");
  return Bracketing(node_->r);
}

int Bracketing::split() const {
  if (is_leaf()) throw std::logic_error("leaf has no split");
  return node_->l->leaves;
}

bool Bracketing::operator==(const Bracketing& other) const {
  if (node_ == other.node_) return true;
  if (leaves() != other.leaves()) return false;
  if (is_leaf() || other.is_leaf()) return is_leaf() == other.is_leaf();
  return split() == other.split() && left() == other.left() &&
         right() == other.right();
}

namespace {

void render(const Bracketing& t, int offset, std::string& out) {
  if (t.is_leaf()) {
    out += "x" + std::to_string(offset + 1);
    return;
  }
  out += "(";
  render(t.left(), offset, out);
  out += " ";
  render(t.right(), offset + t.split(), out);
  out += ")";
}

}  // namespace

std::string Bracketing::to_string() const {
  std::string out;
  render(*this, 0, out);
  return out;
}

std::uint64_t catalan(std::uint64_t n) {
  std::uint64_t c = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    c = c * 2 * (2 * i + 1) / (i + 2);
  }
  return c;
}

std::vector<Bracketing> enumerate_bracketings(int k, int cap) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (k > cap) {
    throw SizeLimit("bracketing size " + std::to_string(k) +
                    " exceeds the cap of " + std::to_string(cap));
  }
  std::vector<std::vector<Bracketing>> memo(static_cast<std::size_t>(k) + 1);
  memo[1] = {Bracketing::leaf()};
  for (int size = 2; size <= k; ++size) {
    auto& out = memo[static_cast<std::size_t>(size)];
    for (int s = 1; s < size; ++s) {
      for (const auto& l : memo[static_cast<std::size_t>(s)]) {
        for (const auto& r : memo[static_cast<std::size_t>(size - s)]) {
          out.push_back(Bracketing::combine(l, r));
        }
      }
    }
  }
  return memo[static_cast<std::size_t>(k)];
}

}  // namespace latmat
