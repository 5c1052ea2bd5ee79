#include <doctest.h>

#include <random>

#include "latmat/matrix.hpp"

using namespace latmat;

TEST_SUITE_BEGIN("matrix");

namespace {

LatMatrix mat(const std::shared_ptr<const Lattice>& L,
              const std::vector<std::vector<std::string>>& labels) {
  std::vector<Elem> entries;
  for (const auto& row : labels) {
    for (const auto& s : row) entries.push_back(*L->element(s));
  }
  return LatMatrix(L, static_cast<int>(labels.size()), std::move(entries));
}

LatMatrix random_matrix(const std::shared_ptr<const Lattice>& L, int n,
                        std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> pick(0, L->size() - 1);
  std::vector<Elem> entries(static_cast<std::size_t>(n) * n);
  for (auto& e : entries) e = pick(rng);
  return LatMatrix(L, n, std::move(entries));
}

}  // namespace

TEST_CASE("identity is neutral") {
  const auto L = Lattice::builtin_shared("chain:3");
  const auto I = LatMatrix::identity(L, 3);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const auto A = random_matrix(L, 3, rng);
    CHECK(I * A == A);
    CHECK(A * I == A);
    CHECK(A + LatMatrix::zero(L, 3) == A);
    CHECK(entrywise_leq(LatMatrix::zero(L, 3), A));
  }
}

TEST_CASE("two-element chain addition is bitwise or") {
  const auto L = Lattice::builtin_shared("bool");
  const auto A = mat(L, {{"0", "1"}, {"0", "0"}});
  const auto B = mat(L, {{"1", "0"}, {"0", "0"}});
  CHECK(A + B == mat(L, {{"1", "1"}, {"0", "0"}}));
}

TEST_CASE("the double-inverse example multiplies to the identity") {
  const auto L = Lattice::builtin_shared("N5");
  const auto A = mat(L, {{"c", "b"}, {"b", "c"}});
  const auto B = mat(L, {{"a", "b"}, {"b", "c"}});
  const auto I = LatMatrix::identity(L, 2);
  CHECK(A * A == I);
  CHECK(A * B == I);
  CHECK(B * A == I);
}

TEST_CASE("the nonassociativity witness evaluates exactly") {
  for (const char* name : {"M3", "N5"}) {
    CAPTURE(name);
    const auto L = Lattice::builtin_shared(name);
    const auto A = mat(L, {{"a", "b"}, {"0", "0"}});
    const auto B = mat(L, {{"1", "0"}, {"1", "0"}});
    const auto C = mat(L, {{"c", "0"}, {"0", "0"}});
    CHECK((A * B) * C != A * (B * C));
  }
  // frozen values over M3, checked by hand against the formula
  const auto L = Lattice::builtin_shared("M3");
  const auto A = mat(L, {{"a", "b"}, {"0", "0"}});
  const auto B = mat(L, {{"1", "0"}, {"1", "0"}});
  const auto C = mat(L, {{"c", "0"}, {"0", "0"}});
  CHECK((A * B) * C == mat(L, {{"c", "0"}, {"0", "0"}}));
  CHECK(A * (B * C) == LatMatrix::zero(L, 2));
}

TEST_CASE("associativity over a distributive host, exhaustively at n = 2") {
  const auto L = Lattice::builtin_shared("bool");
  std::vector<LatMatrix> all;
  for (int code = 0; code < 16; ++code) {
    std::vector<Elem> e = {(code >> 0) & 1, (code >> 1) & 1,
                           (code >> 2) & 1, (code >> 3) & 1};
    all.push_back(LatMatrix(L, 2, std::move(e)));
  }
  for (const auto& A : all) {
    for (const auto& B : all) {
      const auto AB = A * B;
      for (const auto& C : all) {
        CHECK(AB * C == A * (B * C));
      }
    }
  }
}

TEST_CASE("distributive product properties on random samples") {
  std::mt19937_64 rng(11);
  for (const char* name : {"chain:3", "2x2", "2x2+1"}) {
    CAPTURE(name);
    const auto L = Lattice::builtin_shared(name);
    for (int t = 0; t < 100; ++t) {
      const auto A = random_matrix(L, 3, rng);
      const auto B = random_matrix(L, 3, rng);
      const auto C = random_matrix(L, 3, rng);
      CHECK((A * B) * C == A * (B * C));
      CHECK(A * (B + C) == A * B + A * C);
      // monotonicity, with an upper bound built to order
      const auto D = A + B;
      CHECK(entrywise_leq(A, D));
      CHECK(entrywise_leq(A * C, D * C));
      CHECK(entrywise_leq(C * A, C * D));
    }
  }
}

TEST_CASE("permutation matrices act by row and column permutation") {
  const auto L = Lattice::builtin_shared("chain:3");
  std::mt19937_64 rng(3);
  const auto A = random_matrix(L, 4, rng);
  for (const Permutation& pi : Permutation::all(4)) {
    const auto P = permutation_matrix(L, pi);
    const auto rows = P * A;
    const auto cols = A * P;
    const auto inv = pi.inverse();
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        CHECK(rows(i, j) == A(pi(i), j));
        CHECK(cols(i, j) == A(i, inv(j)));
      }
    }
  }
}

TEST_CASE("permutation matrices form a group image") {
  const auto L = Lattice::builtin_shared("2x2");
  for (const Permutation& pi : Permutation::all(3)) {
    for (const Permutation& sigma : Permutation::all(3)) {
      CHECK(permutation_matrix(L, pi) * permutation_matrix(L, sigma) ==
            permutation_matrix(L, pi.then(sigma)));
    }
    CHECK(permutation_matrix(L, pi) * permutation_matrix(L, pi.inverse()) ==
          LatMatrix::identity(L, 3));
  }
}

TEST_CASE("identity permutation gives the identity matrix") {
  const auto L = Lattice::builtin_shared("bool");
  CHECK(permutation_matrix(L, Permutation::identity(3)) ==
        LatMatrix::identity(L, 3));
  const auto P = permutation_matrix(L, Permutation::transposition(2, 0, 1));
  CHECK(P * P == LatMatrix::identity(L, 2));
}

TEST_CASE("conjugation") {
  const auto L = Lattice::builtin_shared("2x2+1");
  const auto A = mat(L, {{"0", "a"}, {"b", "0"}});
  SUBCASE("by the identity") {
    CHECK(conjugate(A, Permutation::identity(2)) == A);
  }
  SUBCASE("by the transposition, frozen value") {
    CHECK(conjugate(A, Permutation::transposition(2, 0, 1)) ==
          mat(L, {{"0", "b"}, {"a", "0"}}));
  }
  SUBCASE("matches the matrix product definition") {
    std::mt19937_64 rng(5);
    for (const Permutation& pi : Permutation::all(3)) {
      const auto M = random_matrix(Lattice::builtin_shared("chain:4"), 3, rng);
      const auto P = permutation_matrix(M.lattice_ptr(), pi);
      const auto Pinv = permutation_matrix(M.lattice_ptr(), pi.inverse());
      CHECK(conjugate(M, pi) == P * M * Pinv);
      CHECK(conjugate(conjugate(M, pi), pi.inverse()) == M);
    }
  }
}

TEST_CASE("permutation detection") {
  const auto L = Lattice::builtin_shared("chain:3");
  CHECK(as_permutation(LatMatrix::identity(L, 3)).has_value());
  CHECK_FALSE(as_permutation(LatMatrix::zero(L, 3)).has_value());
  CHECK_FALSE(as_permutation(mat(L, {{"1", "1"}, {"0", "1"}})).has_value());
  // a mid element is neither top nor bottom
  CHECK_FALSE(as_permutation(mat(L, {{"1", "0"}, {"0", "1"}})).has_value());
  const Permutation pi({2, 0, 1});
  const auto detected = as_permutation(permutation_matrix(L, pi));
  REQUIRE(detected.has_value());
  CHECK(*detected == pi);
}

TEST_CASE("bracketed powers") {
  const auto L = Lattice::builtin_shared("M3");
  const auto A = mat(L, {{"0", "a", "0", "0", "0"},
                         {"0", "0", "b", "c", "0"},
                         {"0", "0", "0", "0", "b"},
                         {"0", "0", "0", "0", "c"},
                         {"0", "0", "0", "0", "0"}});
  const auto cubes = enumerate_bracketings(3);
  REQUIRE(cubes.size() == 2);
  // enumeration order: split 1 first, so x1(x2 x3) precedes (x1 x2)x3
  const auto right_comb = bracketed_power(A, cubes[0]);
  const auto left_comb = bracketed_power(A, cubes[1]);
  CHECK(left_comb == LatMatrix::zero(L, 5));
  CHECK(right_comb != LatMatrix::zero(L, 5));
  const Elem a = *L->element("a");
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      CHECK(right_comb(i, j) ==
            ((i == 0 && j == 4) ? a : L->bottom()));
    }
  }
  SUBCASE("single leaf is the matrix itself") {
    CHECK(bracketed_power(A, Bracketing::leaf()) == A);
  }
}

TEST_CASE("plain powers refuse nondistributive hosts") {
  const auto L = Lattice::builtin_shared("M3");
  const auto A = mat(L, {{"a", "b"}, {"0", "0"}});
  CHECK_THROWS_AS(power(A, 3), NotDistributive);
  CHECK(power(LatMatrix::identity(Lattice::builtin_shared("bool"), 2), 5) ==
        LatMatrix::identity(Lattice::builtin_shared("bool"), 2));
}

TEST_CASE("cross-lattice and cross-size operations are rejected") {
  const auto L1 = Lattice::builtin_shared("bool");
  const auto L2 = Lattice::builtin_shared("chain:3");
  CHECK_THROWS_AS(LatMatrix::identity(L1, 2) * LatMatrix::identity(L2, 2),
                  LatticeMismatch);
  CHECK_THROWS_AS(LatMatrix::identity(L1, 2) * LatMatrix::identity(L1, 3),
                  DimensionMismatch);
  CHECK_THROWS_AS(LatMatrix::identity(L1, 2) + LatMatrix::identity(L2, 2),
                  LatticeMismatch);
}

TEST_CASE("equal lattices loaded twice are compatible") {
  const auto L1 = Lattice::builtin_shared("chain:3");
  const auto L2 = Lattice::builtin_shared("chain:3");
  CHECK(LatMatrix::identity(L1, 2) * LatMatrix::identity(L2, 2) ==
        LatMatrix::identity(L1, 2));
}

TEST_SUITE_END();
