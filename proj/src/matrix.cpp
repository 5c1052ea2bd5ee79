#include "latmat/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace latmat {

namespace {

void require_compatible(const LatMatrix& a, const LatMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("matrices have different dimensions");
  }
  if (a.lattice_ptr() != b.lattice_ptr() && !(a.lattice() == b.lattice())) {
    throw LatticeMismatch("matrices live over different lattices");
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p = identity(n);
  std::swap(p.images_[static_cast<std::size_t>(a)],
            p.images_[static_cast<std::size_t>(b)]);
  return p;
}

std::vector<Permutation> Permutation::all(int n) {
  if (n > 8) throw SizeLimit("S_n enumeration capped at n = 8");
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(im));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 0; i < degree(); ++i) {
    im[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
  }
  return Permutation(std::move(im));
}

Permutation Permutation::then(const Permutation& g) const {
  if (degree() != g.degree()) {
    throw DimensionMismatch("permutations have different degrees");
  }
  std::vector<int> im(images_.size());
  for (int i = 0; i < degree(); ++i) im[static_cast<std::size_t>(i)] = g((*this)(i));
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if ((*this)(i) != i) return false;
  }
  return true;
}

LatMatrix::LatMatrix(std::shared_ptr<const Lattice> lattice, int n,
                     std::vector<Elem> entries)
    : lattice_(std::move(lattice)), n_(n), entries_(std::move(entries)) {
  if (n_ < 2) throw DimensionMismatch("matrices must be at least 2x2");
  if (entries_.size() != static_cast<std::size_t>(n_) * n_) {
    throw DimensionMismatch("entry count does not match dimension");
  }
  for (Elem e : entries_) lattice_->label(e);  // range check
}

LatMatrix LatMatrix::identity(std::shared_ptr<const Lattice> lattice, int n) {
  std::vector<Elem> e(static_cast<std::size_t>(n) * n, lattice->bottom());
  for (int i = 0; i < n; ++i) {
    e[static_cast<std::size_t>(i) * n + i] = lattice->top();
  }
  return LatMatrix(std::move(lattice), n, std::move(e));
}

LatMatrix LatMatrix::zero(std::shared_ptr<const Lattice> lattice, int n) {
  const Elem bot = lattice->bottom();
  return constant(std::move(lattice), n, bot);
}

LatMatrix LatMatrix::constant(std::shared_ptr<const Lattice> lattice, int n,
                              Elem value) {
  std::vector<Elem> e(static_cast<std::size_t>(n) * n, value);
  return LatMatrix(std::move(lattice), n, std::move(e));
}

Elem LatMatrix::operator()(int i, int j) const {
  return entries_[static_cast<std::size_t>(i) * n_ + j];
}

bool LatMatrix::is_zero() const {
  const Elem bot = lattice_->bottom();
  return std::all_of(entries_.begin(), entries_.end(),
                     [bot](Elem e) { return e == bot; });
}

bool LatMatrix::is_identity() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      const Elem want = i == j ? lattice_->top() : lattice_->bottom();
      if ((*this)(i, j) != want) return false;
    }
  }
  return true;
}

bool LatMatrix::operator==(const LatMatrix& other) const {
  return n_ == other.n_ && entries_ == other.entries_ &&
         (lattice_ == other.lattice_ || *lattice_ == *other.lattice_);
}

LatMatrix operator*(const LatMatrix& a, const LatMatrix& b) {
  require_compatible(a, b);
  const Lattice& L = a.lattice();
  const int n = a.dim();
  std::vector<Elem> out(static_cast<std::size_t>(n) * n, L.bottom());
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      Elem acc = L.bottom();
      for (int j = 0; j < n; ++j) {
        acc = L.join(acc, L.meet(a(i, j), b(j, k)));
      }
      out[static_cast<std::size_t>(i) * n + k] = acc;
    }
  }
  return LatMatrix(a.lattice_ptr(), n, std::move(out));
}

LatMatrix operator+(const LatMatrix& a, const LatMatrix& b) {
  require_compatible(a, b);
  const Lattice& L = a.lattice();
  const int n = a.dim();
  std::vector<Elem> out(static_cast<std::size_t>(n) * n);
  for (std::size_t t = 0; t < out.size(); ++t) {
    out[t] = L.join(a.entries()[t], b.entries()[t]);
  }
  return LatMatrix(a.lattice_ptr(), n, std::move(out));
}

bool entrywise_leq(const LatMatrix& a, const LatMatrix& b) {
  require_compatible(a, b);
  const Lattice& L = a.lattice();
  for (std::size_t t = 0; t < a.entries().size(); ++t) {
    if (!L.leq(a.entries()[t], b.entries()[t])) return false;
  }
  return true;
}

LatMatrix transpose(const LatMatrix& a) {
  const int n = a.dim();
  std::vector<Elem> out(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out[static_cast<std::size_t>(j) * n + i] = a(i, j);
    }
  }
  return LatMatrix(a.lattice_ptr(), n, std::move(out));
}

LatMatrix power(const LatMatrix& a, int k) {
  if (k < 1) throw std::invalid_argument("power needs k >= 1");
  if (!a.lattice().distributive()) {
    throw NotDistributive(
        "powers are only well-defined over distributive lattices; use "
        "bracketed_power instead");
  }
  LatMatrix out = a;
  for (int i = 1; i < k; ++i) out = out * a;
  return out;
}

LatMatrix bracketed_power(const LatMatrix& a, const Bracketing& t) {
  std::vector<LatMatrix> args(static_cast<std::size_t>(t.leaves()), a);
  return eval_bracketing(t, std::span<const LatMatrix>(args),
                         [](const LatMatrix& x, const LatMatrix& y) {
                           return x * y;
                         });
}

LatMatrix permutation_matrix(std::shared_ptr<const Lattice> lattice,
                             const Permutation& pi) {
  const int n = pi.degree();
  std::vector<Elem> e(static_cast<std::size_t>(n) * n, lattice->bottom());
  for (int i = 0; i < n; ++i) {
    e[static_cast<std::size_t>(i) * n + pi(i)] = lattice->top();
  }
  return LatMatrix(std::move(lattice), n, std::move(e));
}

LatMatrix conjugate(const LatMatrix& a, const Permutation& pi) {
  if (pi.degree() != a.dim()) {
    throw DimensionMismatch("permutation degree does not match matrix size");
  }
  const int n = a.dim();
  std::vector<Elem> out(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out[static_cast<std::size_t>(i) * n + j] = a(pi(i), pi(j));
    }
  }
  return LatMatrix(a.lattice_ptr(), n, std::move(out));
}

std::optional<Permutation> as_permutation(const LatMatrix& a) {
  const Lattice& L = a.lattice();
  const int n = a.dim();
  std::vector<int> im(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Elem e = a(i, j);
      if (e == L.top()) {
        if (im[static_cast<std::size_t>(i)] != -1) return std::nullopt;
        im[static_cast<std::size_t>(i)] = j;
      } else if (e != L.bottom()) {
        return std::nullopt;
      }
    }
    const int j = im[static_cast<std::size_t>(i)];
    if (j == -1 || used[static_cast<std::size_t>(j)]) return std::nullopt;
    used[static_cast<std::size_t>(j)] = true;
  }
  return Permutation(std::move(im));
}

}  // namespace latmat
