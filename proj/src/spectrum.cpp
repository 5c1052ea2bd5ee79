#include "latmat/spectrum.hpp"

namespace latmat {

TableGroupoid::TableGroupoid(int size, std::vector<int> table)
    : size_(size), table_(std::move(table)) {
  if (size_ < 1 || table_.size() != static_cast<std::size_t>(size_) * size_) {
    throw DimensionMismatch("multiplication table has the wrong shape");
  }
  for (int v : table_) {
    if (v < 0 || v >= size_) {
      throw DimensionMismatch("table entry out of range");
    }
  }
}

int TableGroupoid::mul(int a, int b) const {
  return table_[static_cast<std::size_t>(a) * size_ + b];
}

std::optional<int> TableGroupoid::identity() const {
  for (int e = 0; e < size_; ++e) {
    bool ok = true;
    for (int x = 0; x < size_ && ok; ++x) {
      ok = mul(e, x) == x && mul(x, e) == x;
    }
    if (ok) return e;
  }
  return std::nullopt;
}

MatrixGroupoid::MatrixGroupoid(std::shared_ptr<const Lattice> lattice, int n)
    : lattice_(std::move(lattice)), n_(n) {
  if (n_ < 2) throw DimensionMismatch("matrices must be at least 2x2");
  const std::uint64_t m = static_cast<std::uint64_t>(lattice_->size());
  const std::uint64_t cap = std::uint64_t{1} << 63;
  carrier_size_ = 1;
  for (int i = 0; i < n_ * n_; ++i) {
    if (carrier_size_ > cap / m) {
      carrier_size_ = cap;
      return;
    }
    carrier_size_ *= m;
  }
}

LatMatrix MatrixGroupoid::element(std::uint64_t idx) const {
  const std::uint64_t m = static_cast<std::uint64_t>(lattice_->size());
  std::vector<Elem> entries(static_cast<std::size_t>(n_) * n_);
  for (int t = n_ * n_ - 1; t >= 0; --t) {
    entries[static_cast<std::size_t>(t)] = static_cast<Elem>(idx % m);
    idx /= m;
  }
  return LatMatrix(lattice_, n_, std::move(entries));
}

std::optional<LatMatrix> MatrixGroupoid::identity() const {
  return LatMatrix::identity(lattice_, n_);
}

}  // namespace latmat
