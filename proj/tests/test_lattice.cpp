#include <doctest.h>

#include <algorithm>
#include <bit>

#include "latmat/lattice.hpp"

using namespace latmat;

TEST_SUITE_BEGIN("lattice");

namespace {

const char* kBuiltins[] = {"bool", "chain:3", "chain:4", "M3",
                           "N5",   "2x2",     "2x2+1"};

void check_lattice_axioms(const Lattice& L) {
  const int m = L.size();
  for (Elem a = 0; a < m; ++a) {
    CHECK(L.join(a, a) == a);
    CHECK(L.meet(a, a) == a);
    CHECK(L.leq(L.bottom(), a));
    CHECK(L.leq(a, L.top()));
    for (Elem b = 0; b < m; ++b) {
      CHECK(L.join(a, b) == L.join(b, a));
      CHECK(L.meet(a, b) == L.meet(b, a));
      CHECK(L.join(a, L.meet(a, b)) == a);
      CHECK(L.meet(a, L.join(a, b)) == a);
      CHECK(L.leq(a, b) == (L.join(a, b) == b));
      CHECK(L.leq(a, b) == (L.meet(a, b) == a));
      for (Elem c = 0; c < m; ++c) {
        CHECK(L.join(L.join(a, b), c) == L.join(a, L.join(b, c)));
        CHECK(L.meet(L.meet(a, b), c) == L.meet(a, L.meet(b, c)));
      }
    }
  }
}

}  // namespace

TEST_CASE("two-element chain from covers") {
  const Lattice L = Lattice::from_covers({"0", "1"}, {{0, 1}});
  CHECK(L.size() == 2);
  CHECK(L.bottom() == 0);
  CHECK(L.top() == 1);
  CHECK(L.join(0, 1) == 1);
  CHECK(L.meet(0, 1) == 0);
  CHECK(L.distributive());
}

TEST_CASE("M3 from its cover list") {
  const Lattice L = Lattice::builtin("M3");
  const Elem a = *L.element("a"), b = *L.element("b");
  CHECK(L.join(a, b) == L.top());
  CHECK(L.meet(a, b) == L.bottom());
  check_lattice_axioms(L);
}

TEST_CASE("missing bottom is rejected") {
  // three elements x, y < z: no global minimum
  CHECK_THROWS_AS(Lattice::from_covers({"x", "y", "z"}, {{0, 2}, {1, 2}}),
                  Unbounded);
}

TEST_CASE("non-lattice order is rejected") {
  // two minimal and two maximal elements: {a,b} has no unique upper bound
  CHECK_THROWS_AS(Lattice::from_covers({"a", "b", "c", "d"},
                                       {{0, 2}, {0, 3}, {1, 2}, {1, 3}}),
                  Unbounded);
  // bounded version: the pair {a,b} has two minimal upper bounds
  CHECK_THROWS_AS(
      Lattice::from_covers(
          {"0", "a", "b", "c", "d", "1"},
          {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}}),
      NotALattice);
}

TEST_CASE("cycle in covers is rejected") {
  CHECK_THROWS_AS(Lattice::from_covers({"a", "b"}, {{0, 1}, {1, 0}}),
                  NotALattice);
}

TEST_CASE("explicit tables round trip and validate") {
  const Lattice L = Lattice::builtin("2x2");
  std::vector<std::vector<Elem>> jn(4, std::vector<Elem>(4));
  std::vector<std::vector<Elem>> mt(4, std::vector<Elem>(4));
  for (Elem a = 0; a < 4; ++a) {
    for (Elem b = 0; b < 4; ++b) {
      jn[a][b] = L.join(a, b);
      mt[a][b] = L.meet(a, b);
    }
  }
  const Lattice M = Lattice::from_tables({"0", "a", "b", "1"}, jn, mt);
  for (Elem a = 0; a < 4; ++a) {
    for (Elem b = 0; b < 4; ++b) {
      CHECK(M.join(a, b) == L.join(a, b));
      CHECK(M.meet(a, b) == L.meet(a, b));
      CHECK(M.leq(a, b) == L.leq(a, b));
    }
  }

  // breaking one entry must be caught
  jn[1][2] = 1;
  CHECK_THROWS_AS(Lattice::from_tables({"0", "a", "b", "1"}, jn, mt),
                  InconsistentTables);
}

TEST_CASE("axioms hold on every builtin") {
  for (const char* name : kBuiltins) {
    CAPTURE(name);
    check_lattice_axioms(Lattice::builtin(name));
  }
}

TEST_CASE("distributivity verdicts") {
  CHECK_FALSE(Lattice::builtin("M3").distributive());
  CHECK_FALSE(Lattice::builtin("N5").distributive());
  CHECK(Lattice::builtin("2x2").distributive());
  CHECK(Lattice::builtin("2x2+1").distributive());
  for (int m = 2; m <= 6; ++m) {
    CHECK(Lattice::builtin("chain:" + std::to_string(m)).distributive());
  }
}

TEST_CASE("bound irreducibility") {
  SUBCASE("chains have both bounds irreducible") {
    for (int m = 2; m <= 5; ++m) {
      const auto irr = Lattice::builtin("chain:" + std::to_string(m))
                           .bound_irreducibility();
      CHECK(irr.bottom_meet_irreducible);
      CHECK(irr.top_join_irreducible);
    }
  }
  SUBCASE("the diamond has neither") {
    const auto irr = Lattice::builtin("2x2").bound_irreducibility();
    CHECK_FALSE(irr.bottom_meet_irreducible);
    CHECK_FALSE(irr.top_join_irreducible);
  }
  SUBCASE("adjoining a top fixes only the top") {
    const auto irr = Lattice::builtin("2x2+1").bound_irreducibility();
    CHECK_FALSE(irr.bottom_meet_irreducible);
    CHECK(irr.top_join_irreducible);
  }
}

TEST_CASE("birkhoff cuts of chains") {
  for (int m = 2; m <= 6; ++m) {
    const auto L = Lattice::builtin_shared("chain:" + std::to_string(m));
    const CutIndex c = birkhoff_cuts(L);
    CHECK(c.omega().size() == static_cast<std::size_t>(m - 1));
    // embeds are the nested sets {1}, {1,2}, ...
    for (Elem a = 0; a < m; ++a) {
      CHECK(std::popcount(c.embed(a)) == a);
      if (a + 1 < m) CHECK((c.embed(a) & ~c.embed(a + 1)) == 0);
    }
  }
}

TEST_CASE("birkhoff cuts of the two-element chain") {
  const auto L = Lattice::builtin_shared("bool");
  const CutIndex c = birkhoff_cuts(L);
  REQUIRE(c.omega().size() == 1);
  CHECK(c.omega().front() == L->top());
  CHECK_FALSE(c.cut(L->top(), L->bottom()));
  CHECK(c.cut(L->top(), L->top()));
}

TEST_CASE("birkhoff cuts of the diamond") {
  const auto L = Lattice::builtin_shared("2x2");
  const CutIndex c = birkhoff_cuts(L);
  const Elem a = *L->element("a"), b = *L->element("b");
  REQUIRE(c.omega() == std::vector<Elem>{a, b});
  CHECK(c.embed(L->bottom()) == 0);
  CHECK(c.embed(L->top()) == 0b11);
  CHECK(c.embed(a) == 0b01);
  CHECK(c.embed(b) == 0b10);
  CHECK_THROWS_AS(c.cut(L->bottom(), a), UnknownOmega);
  CHECK_THROWS_AS(c.cut(L->top(), a), UnknownOmega);  // top is reducible here
}

TEST_CASE("cut homomorphism identities hold exhaustively") {
  for (const char* name : {"bool", "chain:3", "chain:4", "2x2", "2x2+1"}) {
    CAPTURE(name);
    const auto L = Lattice::builtin_shared(name);
    const CutIndex c = birkhoff_cuts(L);
    for (Elem a = 0; a < L->size(); ++a) {
      for (Elem b = 0; b < L->size(); ++b) {
        CHECK(c.embed(L->join(a, b)) == (c.embed(a) | c.embed(b)));
        CHECK(c.embed(L->meet(a, b)) == (c.embed(a) & c.embed(b)));
        if (a != b) CHECK(c.embed(a) != c.embed(b));
      }
    }
  }
}

TEST_CASE("cuts refuse nondistributive lattices") {
  CHECK_THROWS_AS(birkhoff_cuts(Lattice::builtin_shared("M3")),
                  NotDistributive);
}

TEST_CASE("three-chain cut levels") {
  const auto L = Lattice::builtin_shared("chain:3");
  const CutIndex c = birkhoff_cuts(L);
  const Elem mid = 1;
  REQUIRE(c.omega() == std::vector<Elem>{1, 2});
  CHECK(c.cut(1, mid));
  CHECK_FALSE(c.cut(2, mid));
  CHECK_FALSE(c.cut(1, L->bottom()));
  CHECK(c.cut(2, L->top()));
}

TEST_CASE("generated sublattice") {
  const Lattice chain = Lattice::builtin("chain:5");
  CHECK(generated_sublattice(chain, {0}) == std::vector<Elem>{0});
  CHECK(generated_sublattice(chain, {3, 1, 4}) == std::vector<Elem>{1, 3, 4});

  const Lattice m3 = Lattice::builtin("M3");
  const Elem a = *m3.element("a"), b = *m3.element("b");
  CHECK(generated_sublattice(m3, {a, b}) ==
        std::vector<Elem>({m3.bottom(), a, b, m3.top()}));
}

TEST_CASE("join irreducibles are the single-lower-cover elements") {
  const Lattice L = Lattice::builtin("2x2+1");
  const auto ji = L.join_irreducibles();
  CHECK(ji == std::vector<Elem>({*L.element("a"), *L.element("b"),
                                 *L.element("1")}));
}

TEST_CASE("builtin name parsing") {
  CHECK(Lattice::builtin("bool") == Lattice::builtin("chain:2"));
  CHECK_THROWS_AS(Lattice::builtin("chain:1"), ParseError);
  CHECK_THROWS_AS(Lattice::builtin("chain:x"), ParseError);
  CHECK_THROWS_AS(Lattice::builtin("frobnicate"), ParseError);
}

TEST_SUITE_END();
