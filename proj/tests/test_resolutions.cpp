#include "doctest.h"

#include <random>

#include "p3curves/liaison.hpp"
#include "p3curves/resolution.hpp"
#include "p3curves/textio.hpp"
#include "oracle.hpp"

using namespace p3;

namespace {
const PolyRing R;

std::vector<Poly> PL(const std::string& s) { return parse_poly_list(s, R); }
PresentedModule quot(const std::string& s) {
  return PresentedModule::quotient_by_ideal(R, PL(s));
}

// Betti twist lists of the whole resolution
std::vector<std::vector<int>> betti(const PresentedModule& M) {
  const FreeResolution& res = minimal_free_resolution(M);
  std::vector<std::vector<int>> out;
  for (const FreeModule& F : res.modules) out.push_back(F.twists);
  return out;
}
}  // namespace

TEST_CASE("Koszul resolution of the residue field") {
  PresentedModule k = quot("X, Y, Z, T");
  std::vector<std::vector<int>> b = betti(k);
  REQUIRE(b.size() == 5);
  CHECK(b[0] == std::vector<int>{0});
  CHECK(b[1] == std::vector<int>{1, 1, 1, 1});
  CHECK(b[2] == std::vector<int>{2, 2, 2, 2, 2, 2});
  CHECK(b[3] == std::vector<int>{3, 3, 3, 3});
  CHECK(b[4] == std::vector<int>{4});
  const FreeResolution& res = minimal_free_resolution(k);
  CHECK(res.is_minimal());
  CHECK(res.composes_to_zero());
  CHECK(regularity(k) == 0);
  CHECK(projective_dimension(k) == 4);
}

TEST_CASE("complete intersection (1,1,2,2) resolves as the tensor Koszul complex") {
  PresentedModule M = quot("X, Y, Z^2, T^2");
  std::vector<std::vector<int>> b = betti(M);
  REQUIRE(b.size() == 5);
  CHECK(b[1] == std::vector<int>{1, 1, 2, 2});
  CHECK(b[2] == std::vector<int>{2, 3, 3, 3, 3, 4});
  CHECK(b[3] == std::vector<int>{4, 4, 5, 5});
  CHECK(b[4] == std::vector<int>{6});
  CHECK(regularity(M) == 2);
  CHECK(minimal_free_resolution(M).composes_to_zero());
}

TEST_CASE("resolution twists are stable under presentation noise") {
  // redundant generators and rescalings do not change the minimal data
  PresentedModule a = quot("X, Y");
  PresentedModule b = quot("X, Y, 3*X + 5*Y");
  CHECK(betti(a) == betti(b));
  PresentedModule c = quot("X^2, X^2 + Y^2");
  PresentedModule d = quot("X^2, Y^2");
  CHECK(betti(c) == betti(d));
}

TEST_CASE("step-one twists of the two-module fixture") {
  PresentedModule M = PresentedModule::direct_sum(quot("X, Y, Z^2, T^2"),
                                                  quot("X, Y, Z^2 - T^2, Z*T"));
  std::vector<std::vector<int>> b = betti(M);
  CHECK(b[1] == std::vector<int>{1, 1, 1, 1, 2, 2, 2, 2});
}

TEST_CASE("hilbert function examples") {
  PresentedModule M = quot("X, Y, Z^2, T^2");
  CHECK(M.hilbert_function({0, 4}) == std::vector<long long>{1, 2, 1, 0, 0});

  PresentedModule tw = PresentedModule::free_module(R, FreeModule({2}));
  for (int n = 2; n <= 6; ++n) CHECK(tw.hilbert_dim(n) == binom3(n - 2));

  PresentedModule line = quot("X, Y");
  for (int n = 0; n <= 5; ++n) CHECK(line.hilbert_dim(n) == n + 1);
}

TEST_CASE("hilbert function is additive and shifts correctly") {
  PresentedModule A = quot("X, Y"), B = quot("X, Z^2");
  PresentedModule S = PresentedModule::direct_sum(A, B);
  PresentedModule Ashift = A.shifted(3);
  for (int n = -1; n <= 6; ++n) {
    CHECK(S.hilbert_dim(n) == A.hilbert_dim(n) + B.hilbert_dim(n));
    CHECK(Ashift.hilbert_dim(n) == A.hilbert_dim(n + 3));
  }
}

TEST_CASE("hilbert polynomial examples") {
  CHECK(hilbert_polynomial(quot("X, Y")).eval(10) == 11);

  // two skew lines: interpolate the oracle values and compare
  PresentedModule skew = quot("X*Z, X*T, Y*Z, Y*T");
  HilbertPolynomial hp = hilbert_polynomial(skew);
  CHECK(hp.degree() == 1);
  for (long long n = 3; n <= 5; ++n) CHECK(hp.eval(n) == 2 * n + 2);
  // ... and the polynomial agrees with the exact function from the regularity on
  for (int n = regularity(skew); n <= regularity(skew) + 4; ++n)
    CHECK(hp.eval(n) == skew.hilbert_dim(n));

  CHECK(hilbert_polynomial(quot("X, Y, Z^2, T^2")).is_zero());
}

TEST_CASE("regularity examples") {
  CHECK(regularity(quot("X, Y, Z, T")) == 0);
  CHECK(regularity(quot("X, Y, Z^2, T^2")) == 2);
  CHECK(regularity(PresentedModule::free_module(R, FreeModule({5}))) == 5);
  // hilbert function agrees with the polynomial from the regularity on
  PresentedModule M = quot("X*Z, X*T, Y*Z, Y*T");
  HilbertPolynomial hp = hilbert_polynomial(M);
  int reg = regularity(M);
  for (int n = reg; n <= reg + 5; ++n) CHECK(M.hilbert_dim(n) == hp.eval(n));
}

TEST_CASE("projective dimension examples") {
  CHECK(projective_dimension(PresentedModule::free_module(R, FreeModule({0, 2}))) == 0);
  CHECK(projective_dimension(quot("X, Y, Z, T")) == 4);
  PresentedModule cubic_quot = quot("X*Z - Y^2, X*T - Y*Z, Y*T - Z^2");
  CHECK(projective_dimension(cubic_quot) == 2);
  PresentedModule cubic_ideal =
      PresentedModule::ideal_module(R, PL("X*Z - Y^2, X*T - Y*Z, Y*T - Z^2"));
  CHECK(projective_dimension(cubic_ideal) == 1);
}

TEST_CASE("betti-hilbert alternating sum identity") {
  std::vector<PresentedModule> mods = {
      quot("X, Y, Z^2, T^2"), quot("X*Z, X*T, Y*Z, Y*T"),
      PresentedModule::ideal_module(R, PL("X*Z - Y^2, X*T - Y*Z, Y*T - Z^2"))};
  for (const PresentedModule& M : mods) {
    const FreeResolution& res = minimal_free_resolution(M);
    DegreeWindow w = default_window(M);
    for (int n = w.lo; n <= w.hi; ++n) {
      long long alt = 0;
      int sign = 1;
      for (const FreeModule& F : res.modules) {
        alt += sign * free_dim(F, n);
        sign = -sign;
      }
      CHECK(alt == M.hilbert_dim(n));
    }
  }
}

TEST_CASE("second syzygy of the residue field") {
  PresentedModule k = quot("X, Y, Z, T");
  SecondSyzygy s = second_syzygy(k);
  CHECK(minimal_free_resolution(s.bundle).sheaf_rank() == 3);
  CHECK(s.L0.twists == std::vector<int>{0});
  CHECK(s.L1.twists == std::vector<int>{1, 1, 1, 1});
  CHECK(s.bundle.gens().twists == std::vector<int>{2, 2, 2, 2, 2, 2});

  // shift equivariance: the same bundle with all twists moved by 3
  PresentedModule k3 = k.shifted(-3);
  SecondSyzygy s3 = second_syzygy(k3);
  CHECK(s3.bundle.gens().twists == std::vector<int>{5, 5, 5, 5, 5, 5});
  CHECK(s3.bundle.rels().twists == [&] {
    std::vector<int> t = s.bundle.rels().twists;
    for (int& x : t) x += 3;
    return t;
  }());
}

TEST_CASE("second syzygy of the two-module fixture") {
  PresentedModule M = PresentedModule::direct_sum(quot("X, Y, Z^2, T^2"),
                                                  quot("X, Y, Z^2 - T^2, Z*T"));
  SecondSyzygy s = second_syzygy(M);
  CHECK(minimal_free_resolution(s.bundle).sheaf_rank() == 6);
  CHECK(s.L1.twists == std::vector<int>{1, 1, 1, 1, 2, 2, 2, 2});
  CHECK(s.L0.twists == std::vector<int>{0, 0});

  // exactness accounting: hilb(F) + hilb(L0) = hilb(L1) + hilb(M) degreewise
  DegreeWindow w{0, 8};
  for (int n = w.lo; n <= w.hi; ++n)
    CHECK(s.bundle.hilbert_dim(n) + free_dim(s.L0, n) ==
          free_dim(s.L1, n) + M.hilbert_dim(n));

  // the embedding generates the kernel of L1 -> L0 exactly
  const FreeResolution& mres = minimal_free_resolution(M);
  for (const FreeVector& v : s.embedding)
    CHECK(mres.maps[0].apply(v, R).is_zero());
}

TEST_CASE("second syzygy rejects bad inputs") {
  CHECK_THROWS_AS(second_syzygy(quot("X, Y")), MathError);  // not finite length
  std::vector<Poly> unit = {Poly::constant(1, R)};
  CHECK_THROWS_AS(second_syzygy(PresentedModule::quotient_by_ideal(R, unit)), MathError);
}

TEST_CASE("resolution of a random finite-length module stays sane") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 3; ++t) {
    std::vector<Poly> gens = {random_form(R, 1, rng), random_form(R, 1, rng),
                              random_form(R, 2, rng), random_form(R, 2, rng)};
    PresentedModule M = PresentedModule::quotient_by_ideal(R, gens);
    const FreeResolution& res = minimal_free_resolution(M);
    CHECK(res.is_minimal());
    CHECK(res.composes_to_zero());
    CHECK(res.length() <= 4);
  }
}
