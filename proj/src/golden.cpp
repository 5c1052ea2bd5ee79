#include "latmat/golden.hpp"

#include <algorithm>
#include <functional>

#include "latmat/boolrel.hpp"
#include "latmat/distmat.hpp"
#include "latmat/fixpoint.hpp"
#include "latmat/io.hpp"
#include "latmat/lattice.hpp"
#include "latmat/matrix.hpp"
#include "latmat/spectrum.hpp"

namespace latmat {

namespace {

using MatMul = std::function<LatMatrix(const LatMatrix&, const LatMatrix&)>;

/// Product with the roles of the two lattice operations swapped:
/// the deliberate mutation the suite must catch.
LatMatrix swapped_mul(const LatMatrix& a, const LatMatrix& b) {
  const Lattice& L = a.lattice();
  const int n = a.dim();
  std::vector<Elem> out(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      Elem acc = L.top();
      for (int j = 0; j < n; ++j) {
        acc = L.meet(acc, L.join(a(i, j), b(j, k)));
      }
      out[static_cast<std::size_t>(i) * n + k] = acc;
    }
  }
  return LatMatrix(a.lattice_ptr(), n, std::move(out));
}

LatMatrix mat(const std::shared_ptr<const Lattice>& L,
              const std::vector<std::vector<std::string>>& labels) {
  const int n = static_cast<int>(labels.size());
  std::vector<Elem> entries;
  for (const auto& row : labels) {
    for (const auto& s : row) entries.push_back(*L->element(s));
  }
  return LatMatrix(L, n, std::move(entries));
}

struct Case {
  GoldenCase meta;
  std::function<void(const MatMul&)> run;  // throws on failure
};

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

/// The shared nonassociativity witness triple over a five-element
/// nondistributive lattice (labels 0, a, b, c, 1).
std::array<LatMatrix, 3> witness_triple(
    const std::shared_ptr<const Lattice>& L) {
  return {mat(L, {{"a", "b"}, {"0", "0"}}),
          mat(L, {{"1", "0"}, {"1", "0"}}),
          mat(L, {{"c", "0"}, {"0", "0"}})};
}

std::vector<Case> build_cases() {
  std::vector<Case> cases;
  auto add = [&](std::string id, std::string topic, std::string description,
                 std::function<void(const MatMul&)> run) {
    cases.push_back(
        Case{GoldenCase{std::move(id), std::move(topic), std::move(description)},
             std::move(run)});
  };

  add("m3-lattice", "lattices",
      "M3 built from its diagram has a+b = 1 and a*b = 0 for distinct atoms",
      [](const MatMul&) {
        const auto L = Lattice::builtin_shared("M3");
        const Elem a = *L->element("a"), b = *L->element("b"),
                   c = *L->element("c");
        for (Elem x : {a, b, c}) {
          for (Elem y : {a, b, c}) {
            if (x == y) continue;
            expect(L->join(x, y) == L->top(), "atom join must be top");
            expect(L->meet(x, y) == L->bottom(), "atom meet must be bottom");
          }
        }
      });

  add("m3-not-distributive", "lattices", "M3 is not distributive",
      [](const MatMul&) {
        expect(!Lattice::builtin("M3").distributive(),
               "M3 reported distributive");
      });

  add("n5-not-distributive", "lattices", "N5 is not distributive",
      [](const MatMul&) {
        expect(!Lattice::builtin("N5").distributive(),
               "N5 reported distributive");
      });

  add("2x2-distributive", "lattices", "the four-element diamond 2x2 is "
      "distributive",
      [](const MatMul&) {
        expect(Lattice::builtin("2x2").distributive(),
               "2x2 reported nondistributive");
      });

  add("2x2-bounds-reducible", "lattices",
      "in 2x2 neither the bottom is meet-irreducible nor the top "
      "join-irreducible",
      [](const MatMul&) {
        const auto irr = Lattice::builtin("2x2").bound_irreducibility();
        expect(!irr.bottom_meet_irreducible && !irr.top_join_irreducible,
               "2x2 bounds reported irreducible");
      });

  add("chain-cuts-nested", "cuts",
      "an m-chain has m-1 join-irreducibles with nested embedded sets",
      [](const MatMul&) {
        const auto L = Lattice::builtin_shared("chain:5");
        const auto cuts = birkhoff_cuts(L);
        expect(cuts.omega().size() == 4, "chain:5 must have 4 irreducibles");
        for (Elem a = 0; a + 1 < L->size(); ++a) {
          const auto lo = cuts.embed(a), hi = cuts.embed(a + 1);
          expect((lo & ~hi) == 0, "chain cut sets must be nested");
          expect(lo != hi, "chain cut sets must be distinct");
        }
      });

  add("n5-double-inverse", "invertibility",
      "over N5, A = ((c,b),(b,c)) and B = ((a,b),(b,c)) satisfy "
      "AA = AB = BA = I",
      [](const MatMul& mul) {
        const auto L = Lattice::builtin_shared("N5");
        const auto A = mat(L, {{"c", "b"}, {"b", "c"}});
        const auto B = mat(L, {{"a", "b"}, {"b", "c"}});
        const auto I = LatMatrix::identity(L, 2);
        expect(mul(A, A) == I, "AA != I");
        expect(mul(A, B) == I, "AB != I");
        expect(mul(B, A) == I, "BA != I");
      });

  add("nonassoc-witness-m3", "associativity",
      "over M3 the witness matrices give (AB)C = ((c,0),(0,0)) and "
      "A(BC) = 0",
      [](const MatMul& mul) {
        const auto L = Lattice::builtin_shared("M3");
        const auto [A, B, C] = witness_triple(L);
        const auto lhs = mul(mul(A, B), C);
        const auto rhs = mul(A, mul(B, C));
        expect(lhs == mat(L, {{"c", "0"}, {"0", "0"}}),
               "(AB)C has unexpected value");
        expect(rhs == LatMatrix::zero(L, 2), "A(BC) must be the zero matrix");
        expect(lhs != rhs, "(AB)C must differ from A(BC)");
      });

  add("nonassoc-witness-n5", "associativity",
      "over N5 the same witness matrices satisfy (AB)C != A(BC)",
      [](const MatMul& mul) {
        const auto L = Lattice::builtin_shared("N5");
        const auto [A, B, C] = witness_triple(L);
        expect(mul(mul(A, B), C) != mul(A, mul(B, C)),
               "(AB)C must differ from A(BC)");
      });

  add("perm-row-swap", "permutations",
      "P_(12) * A swaps the first two rows of A",
      [](const MatMul& mul) {
        const auto L = Lattice::builtin_shared("bool");
        const auto A = mat(L, {{"1", "0"}, {"1", "1"}});
        const auto P =
            permutation_matrix(L, Permutation::transposition(2, 0, 1));
        expect(mul(P, A) == mat(L, {{"1", "1"}, {"1", "0"}}),
               "row swap failed");
        expect(mul(P, P) == LatMatrix::identity(L, 2),
               "a transposition must square to the identity");
      });

  add("conjugate-swap", "permutations",
      "conjugating ((0,a),(b,0)) by the transposition gives ((0,b),(a,0))",
      [](const MatMul&) {
        const auto L = Lattice::builtin_shared("2x2+1");
        const auto A = mat(L, {{"0", "a"}, {"b", "0"}});
        const auto got = conjugate(A, Permutation::transposition(2, 0, 1));
        expect(got == mat(L, {{"0", "b"}, {"a", "0"}}),
               "conjugate has unexpected value");
      });

  add("two-cubes", "associativity",
      "the 5x5 matrix over M3 has (AA)A = 0 while A(AA) has the single "
      "entry a at (1,5)",
      [](const MatMul& mul) {
        const auto L = Lattice::builtin_shared("M3");
        const auto A = mat(L, {{"0", "a", "0", "0", "0"},
                               {"0", "0", "b", "c", "0"},
                               {"0", "0", "0", "0", "b"},
                               {"0", "0", "0", "0", "c"},
                               {"0", "0", "0", "0", "0"}});
        const auto AA = mul(A, A);
        expect(mul(AA, A) == LatMatrix::zero(L, 5), "(AA)A must be zero");
        const auto right = mul(A, AA);
        expect(right != LatMatrix::zero(L, 5), "A(AA) must be nonzero");
        for (int i = 0; i < 5; ++i) {
          for (int j = 0; j < 5; ++j) {
            const Elem want =
                (i == 0 && j == 4) ? *L->element("a") : L->bottom();
            expect(right(i, j) == want, "A(AA) has an unexpected entry");
          }
        }
      });

  add("bracketing-counts", "spectrum",
      "sizes 1, 3 and 4 have 1, 2 and 5 bracketings",
      [](const MatMul&) {
        expect(enumerate_bracketings(1).size() == 1, "one bracketing of x1");
        const auto three = enumerate_bracketings(3);
        expect(three.size() == 2, "two bracketings of x1 x2 x3");
        expect(three[0].to_string() == "(x1 (x2 x3))" &&
                   three[1].to_string() == "((x1 x2) x3)",
               "size-3 bracketings must be the two classic ones");
        expect(enumerate_bracketings(4).size() == 5,
               "five bracketings of x1 x2 x3 x4");
      });

  add("parse-witness-matrix", "io",
      "the first witness matrix parses from a file naming M3 by label",
      [](const MatMul&) {
        const auto A = parse_matrix_file(
            R"({"lattice": "M3", "entries": [["a", "b"], ["0", "0"]]})");
        const auto L = A.lattice_ptr();
        expect(A.lattice().name() == "M3", "host lattice must resolve");
        expect(A == mat(L, {{"a", "b"}, {"0", "0"}}),
               "entries must parse by label");
      });

  add("distinguish-base", "spectrum",
      "the two bracketings of size 3 are separated by assigning the "
      "witness triple itself",
      [](const MatMul&) {
        const auto L = Lattice::builtin_shared("M3");
        const MatrixGroupoid g(L, 2);
        const auto triple = witness_triple(L);
        const auto brackets = enumerate_bracketings(3);
        const auto w = distinguish_with_identity(
            g, brackets[1], brackets[0], triple, *g.identity());
        expect(w.has_value(), "equal-looking bracketings");
        expect(w->size() == 3 && (*w)[0] == triple[0] &&
                   (*w)[1] == triple[1] && (*w)[2] == triple[2],
               "base case must assign the triple in order");
      });

  add("spectrum-distributive", "spectrum",
      "2x2 matrices over the two-element chain have a single term "
      "function of size 4",
      [](const MatMul&) {
        const MatrixGroupoid g(Lattice::builtin_shared("bool"), 2);
        const auto report = spectrum_count(g, 4, SpectrumMode::exhaustive);
        expect(report.count == 1, "distributive product must be associative");
      });

  add("spectrum-antiassociative-m3", "spectrum",
      "witness mode certifies 2 and 5 distinct term functions of sizes "
      "3 and 4 over M3",
      [](const MatMul&) {
        const auto L = Lattice::builtin_shared("M3");
        const MatrixGroupoid g(L, 2);
        const auto seed = witness_triple(L);
        for (int k : {3, 4}) {
          const auto report =
              spectrum_count(g, k, SpectrumMode::witness, {}, seed);
          expect(report.count == catalan(static_cast<std::uint64_t>(k) - 1),
                 "count must reach the Catalan bound");
        }
      });

  add("find-triple-m3", "spectrum",
      "a nonassociative triple exists among 2x2 matrices over M3 and the "
      "witness triple validates",
      [](const MatMul& mul) {
        const auto L = Lattice::builtin_shared("M3");
        const MatrixGroupoid g(L, 2);
        const auto found = find_nonassociative_triple(g);
        expect(found.has_value(), "scan must find a violating triple");
        const auto& [a, b, c] = *found;
        expect((a * b) * c != a * (b * c), "found triple must violate");
        const auto [A, B, C] = witness_triple(L);
        expect(mul(mul(A, B), C) != mul(A, mul(B, C)),
               "the canonical triple must validate");
      });

  add("find-triple-n5", "spectrum",
      "a nonassociative triple exists among 2x2 matrices over N5",
      [](const MatMul&) {
        const MatrixGroupoid g(Lattice::builtin_shared("N5"), 2);
        const auto found = find_nonassociative_triple(g);
        expect(found.has_value(), "scan must find a violating triple");
        const auto& [a, b, c] = *found;
        expect((a * b) * c != a * (b * c), "found triple must violate");
      });

  add("perm-inverse", "invertibility",
      "the unique inverse of a permutation matrix is the inverse "
      "permutation's matrix",
      [](const MatMul&) {
        for (const char* name : {"chain:3", "2x2+1"}) {
          const auto L = Lattice::builtin_shared(name);
          const Permutation pi({1, 2, 0});
          const auto result =
              invert(permutation_matrix(L, pi), InvertMode::theorem);
          expect(result.inverses.size() == 1, "theorem mode must answer");
          expect(result.inverses.front() ==
                     permutation_matrix(L, pi.inverse()),
                 "inverse must be the inverse permutation's matrix");
        }
      });

  add("self-inverse-2x2", "invertibility",
      "over 2x2 the non-permutation matrix ((a,b),(b,a)) is its own "
      "unique inverse",
      [](const MatMul&) {
        const auto L = Lattice::builtin_shared("2x2");
        const auto A = mat(L, {{"a", "b"}, {"b", "a"}});
        expect(!as_permutation(A).has_value(), "A must not be a permutation");
        const auto result = invert(A, InvertMode::exhaustive);
        expect(result.inverses.size() == 1 && result.inverses.front() == A,
               "A must be its own unique right inverse");
        expect(A * A == LatMatrix::identity(L, 2), "AA != I");
      });

  add("two-right-inverses-n5", "invertibility",
      "over N5 both ((c,b),(b,c)) and ((a,b),(b,c)) are right inverses "
      "of the former",
      [](const MatMul&) {
        const auto L = Lattice::builtin_shared("N5");
        const auto A = mat(L, {{"c", "b"}, {"b", "c"}});
        const auto B = mat(L, {{"a", "b"}, {"b", "c"}});
        const auto result = invert(A, InvertMode::exhaustive);
        const auto& inv = result.inverses;
        const auto I = LatMatrix::identity(L, 2);
        for (const auto& X : inv) expect(A * X == I, "non-inverse reported");
        expect(std::find(inv.begin(), inv.end(), A) != inv.end(),
               "A itself must be a right inverse");
        expect(std::find(inv.begin(), inv.end(), B) != inv.end(),
               "B must be a right inverse");
      });

  add("ones-above-diagonal-nilpotent", "nilpotency",
      "the ones-above-the-diagonal matrix V is nilpotent with nonzero "
      "(n-1)-st power",
      [](const MatMul&) {
        const auto L = Lattice::builtin_shared("bool");
        const auto V = strictly_upper_ones(L, 5);
        expect(is_nilpotent(V), "V must be nilpotent");
        expect(power(V, 5).is_zero(), "V^5 must vanish");
        expect(!power(V, 4).is_zero(), "V^4 must not vanish");
      });

  add("square-zero-2x2p1", "nilpotency",
      "((0,a),(b,0)) over the diamond with adjoined top squares to zero",
      [](const MatMul& mul) {
        const auto L = Lattice::builtin_shared("2x2+1");
        const auto A = mat(L, {{"0", "a"}, {"b", "0"}});
        expect(mul(A, A) == LatMatrix::zero(L, 2), "A^2 must be zero");
        expect(is_nilpotent(A), "A must be nilpotent");
      });

  add("triangularize-rejected-2x2p1", "nilpotency",
      "the same matrix is not conjugate to a strictly upper triangular "
      "matrix; triangularization refuses the reducible bottom",
      [](const MatMul&) {
        const auto L = Lattice::builtin_shared("2x2+1");
        const auto A = mat(L, {{"0", "a"}, {"b", "0"}});
        bool rejected = false;
        try {
          triangularize(A);
        } catch (const BottomNotMeetIrreducible&) {
          rejected = true;
        }
        expect(rejected, "triangularize must reject a reducible bottom");
        // and indeed no permutation conjugate is strictly upper triangular
        for (const Permutation& s : Permutation::all(2)) {
          expect(!is_strictly_upper_triangular(conjugate(A, s)),
                 "no conjugate may be strictly upper triangular");
        }
      });

  add("identity-hclass-full-symmetric", "maximal-subgroups",
      "the H-class of the identity over a chain is all permutation "
      "matrices",
      [](const MatMul&) {
        const auto L = Lattice::builtin_shared("chain:3");
        const auto members = hclass_chain(LatMatrix::identity(L, 3));
        expect(members.size() == 6, "identity H-class must have size n!");
        for (const auto& M : members) {
          expect(as_permutation(M).has_value(),
                 "H-class members must be permutation matrices");
        }
      });

  add("nilpotent-no-fixpoint", "fixed-points",
      "x*V = x has only the zero solution while the identity keeps the "
      "all-top vector",
      [](const MatMul&) {
        const auto L = Lattice::builtin_shared("bool");
        const auto V = strictly_upper_ones(L, 3);
        expect(!has_nonzero_fixpoint(V), "nilpotent V must have no nonzero "
                                         "fixpoint");
        const auto I = LatMatrix::identity(L, 3);
        expect(has_nonzero_fixpoint(I), "identity must keep the top vector");
        expect(greatest_fixpoint(I).limit ==
                   LatVector::all_top(L, 3),
               "identity limit must be all-top");
      });

  return cases;
}

}  // namespace

std::vector<GoldenCase> golden_cases() {
  std::vector<GoldenCase> out;
  for (const auto& c : build_cases()) out.push_back(c.meta);
  return out;
}

GoldenSummary run_golden_suite(bool mutate_matmul) {
  const MatMul mul =
      mutate_matmul
          ? MatMul(swapped_mul)
          : MatMul([](const LatMatrix& a, const LatMatrix& b) { return a * b; });

  GoldenSummary summary;
  for (const auto& c : build_cases()) {
    GoldenResult r;
    r.meta = c.meta;
    try {
      c.run(mul);
      r.pass = true;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    summary.results.push_back(std::move(r));
  }
  summary.total = static_cast<int>(summary.results.size());
  summary.passed = static_cast<int>(
      std::count_if(summary.results.begin(), summary.results.end(),
                    [](const GoldenResult& r) { return r.pass; }));
  return summary;
}

}  // namespace latmat
