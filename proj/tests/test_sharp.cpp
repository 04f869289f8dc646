#include "doctest.h"

#include <random>

#include "p3curves/cohomology.hpp"
#include "p3curves/sharp.hpp"
#include "p3curves/textio.hpp"

using namespace p3;

namespace {
const PolyRing R;

SupportFunction SF(const std::string& s) { return parse_support_function(s); }

// independent truncated-product oracle for total Chern classes
std::array<long long, 4> chern_oracle(const std::vector<std::vector<int>>& steps) {
  std::array<long long, 4> total{1, 0, 0, 0};
  auto mul = [](std::array<long long, 4> a, std::array<long long, 4> b) {
    std::array<long long, 4> r{0, 0, 0, 0};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; i + j < 4; ++j) r[i + j] += a[i] * b[j];
    return r;
  };
  // alternate numerator/denominator by running the even steps against the
  // inverted odd steps, inverting by solving degreewise
  std::array<long long, 4> num{1, 0, 0, 0}, den{1, 0, 0, 0};
  for (std::size_t k = 0; k < steps.size(); ++k) {
    std::array<long long, 4> s{1, 0, 0, 0};
    for (int a : steps[k]) s = mul(s, {1, -a, 0, 0});
    if (k % 2 == 0)
      num = mul(num, s);
    else
      den = mul(den, s);
  }
  // invert den: i0 = 1
  std::array<long long, 4> inv{1, 0, 0, 0};
  for (int d = 1; d < 4; ++d) {
    long long acc = 0;
    for (int j = 0; j < d; ++j) acc += inv[j] * den[d - j];
    inv[d] = -acc;
  }
  total = mul(num, inv);
  return total;
}
}  // namespace

TEST_CASE("sharp transform examples") {
  SupportFunction zero = SF("{}");
  for (int n = -3; n <= 3; ++n) CHECK(zero.sharp(n) == 0);

  SupportFunction f = SF("{0:1, 2:1}");
  CHECK(f.sharp(-1) == 0);
  CHECK(f.sharp(0) == 1);
  CHECK(f.sharp(1) == 1);
  CHECK(f.sharp(2) == 2);
  CHECK(f.sharp(100) == 2);

  SupportFunction qp = SF("{3:4}");
  CHECK(qp.sharpsharp(5) == 12);  // 4 + 4 + 4
  CHECK(qp.sharpsharp(2) == 0);
}

TEST_CASE("sharp is additive and monotone") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> pt(-4, 6), val(0, 5);
  for (int t = 0; t < 50; ++t) {
    std::map<int, long long> fa, fb;
    for (int k = 0; k < 4; ++k) {
      fa[pt(rng)] += val(rng);
      fb[pt(rng)] += val(rng);
    }
    SupportFunction a(fa), b(fb), s = a.add(b);
    for (int n = -6; n <= 8; ++n) {
      CHECK(s.sharp(n) == a.sharp(n) + b.sharp(n));
      CHECK(a.add(b).sharp(n) >= a.sharp(n));  // monotone under pointwise growth
    }
  }
}

TEST_CASE("primitive identity from the minimality proof") {
  // sum n f(n) = (m+1) sum f(n) - f##(m) for every m at or past the support
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> pt(-5, 7), val(0, 6);
  for (int t = 0; t < 50; ++t) {
    std::map<int, long long> fv;
    for (int k = 0; k < 5; ++k) fv[pt(rng)] += val(rng);
    SupportFunction f(fv);
    if (f.is_zero()) continue;
    for (int m = f.max_support(); m <= f.max_support() + 3; ++m)
      CHECK(f.weighted() == (m + 1) * f.total() - f.sharpsharp(m));
  }
}

TEST_CASE("sharp dominance") {
  SupportFunction q = SF("{2:2, 3:3}"), qp = SF("{3:4}");
  CHECK(sharp_dominates(q, q).sharp_inequality_only);
  // q#(2) = 2 exceeds q'#(2) = 0
  DominanceCheck d = sharp_dominates(q, qp);
  CHECK_FALSE(d.sharp_inequality_only);
  CHECK(d.first_violation == 2);
  // and the other direction holds
  CHECK(sharp_dominates(qp, q).sharp_inequality_only);

  CHECK(sharp_dominates(SF("{5:1}"), SF("{0:1}")).sharp_inequality_only);
  CHECK_FALSE(sharp_dominates(SF("{0:2}"), SF("{0:1}")).sharp_inequality_only);
}

TEST_CASE("dominance with equal sharp-sharp tail forces equality") {
  // if l# <= q# everywhere and the gap q## - l## vanishes at the top of the
  // support, the two functions coincide
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<int> pt(-3, 5), val(0, 4);
  int verified = 0;
  for (int t = 0; t < 200; ++t) {
    std::map<int, long long> lv, qv;
    for (int k = 0; k < 3; ++k) qv[pt(rng)] += val(rng);
    if (t % 3 == 0) {
      lv = qv;  // the equality case must appear in the sample
    } else {
      for (int k = 0; k < 3; ++k) lv[pt(rng)] += val(rng);
    }
    SupportFunction l(lv), q(qv);
    if (l.is_zero() || q.is_zero()) continue;
    if (!sharp_dominates(l, q).sharp_inequality_only) continue;
    int m = std::max(l.max_support(), q.max_support());
    if (q.sharpsharp(m) - l.sharpsharp(m) == 0) {
      CHECK(l == q);
      ++verified;
    }
  }
  CHECK(verified > 0);
}

TEST_CASE("twist sums") {
  TwistSum a = twist_sum(SF("{3:4}"));
  CHECK(a.rank == 4);
  CHECK(a.weighted == 12);
  TwistSum b = twist_sum(SF("{2:2, 3:3}"));
  CHECK(b.rank == 5);
  CHECK(b.weighted == 13);
  TwistSum z = twist_sum(SF("{}"));
  CHECK(z.rank == 0);
  CHECK(z.weighted == 0);
}

TEST_CASE("chern classes of twisted free and ideal modules") {
  PresentedModule f5 = PresentedModule::free_module(R, FreeModule({5}));
  ChernData c = chern_classes(minimal_free_resolution(f5));
  CHECK(c.rank == 1);
  CHECK(c.c1 == -5);
  CHECK(c.c2 == 0);

  PresentedModule skew =
      PresentedModule::ideal_module(R, parse_poly_list("X*Z, X*T, Y*Z, Y*T", R));
  ChernData ci = chern_classes(minimal_free_resolution(skew));
  CHECK(ci.rank == 1);
  CHECK(ci.c1 == 0);
}

TEST_CASE("chern classes of the fixture bundle match the truncated product") {
  PresentedModule M = PresentedModule::direct_sum(
      PresentedModule::quotient_by_ideal(R, parse_poly_list("X, Y, Z^2, T^2", R)),
      PresentedModule::quotient_by_ideal(R, parse_poly_list("X, Y, Z^2 - T^2, Z*T", R)));
  SecondSyzygy s = second_syzygy(M);
  const FreeResolution& res = minimal_free_resolution(s.bundle);
  ChernData c = chern_classes(res);
  CHECK(c.rank == 6);
  CHECK(c.c1 == -12);
  CHECK(c.c2 == 62);
  CHECK(c.c3 == -180);

  // the same class from the defining sequence (1-t)^4 (1-2t)^4, and from the
  // resolution twists through the independent oracle
  std::array<long long, 4> direct =
      chern_oracle({{1, 1, 1, 1, 2, 2, 2, 2}});
  CHECK(direct[1] == c.c1);
  CHECK(direct[2] == c.c2);
  CHECK(direct[3] == c.c3);
  std::vector<std::vector<int>> steps;
  for (const FreeModule& F : res.modules) steps.push_back(F.twists);
  std::array<long long, 4> via_res = chern_oracle(steps);
  CHECK(via_res[1] == c.c1);
  CHECK(via_res[2] == c.c2);
  CHECK(via_res[3] == c.c3);
}

TEST_CASE("chern data is additive over direct sums") {
  PresentedModule A =
      PresentedModule::ideal_module(R, parse_poly_list("X*Z, X*T, Y*Z, Y*T", R));
  PresentedModule B = PresentedModule::free_module(R, FreeModule({2, 3}));
  ChernData ca = chern_classes(minimal_free_resolution(A));
  ChernData cb = chern_classes(minimal_free_resolution(B));
  ChernData cs = chern_classes(minimal_free_resolution(PresentedModule::direct_sum(A, B)));
  CHECK(cs.rank == ca.rank + cb.rank);
  CHECK(cs.c1 == ca.c1 + cb.c1);
  // total classes multiply: c2 picks up the cross term
  CHECK(cs.c2 == ca.c2 + cb.c2 + ca.c1 * cb.c1);
}

TEST_CASE("minimal first Chern class bound") {
  CHECK(minimal_c1_bound(-12, SF("{3:4}")) == 0);
  CHECK(minimal_c1_bound(-4, SF("{}")) == -4);
  // the curve-side variant lands on the twist 3 n1 - n3 = 1
  CHECK(-12 + twist_sum(SF("{2:2, 3:3}")).weighted == 1);
}

TEST_CASE("dissocie augmentation leaves the bound invariant") {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<int> pt(-4, 6), val(0, 4), c1d(-20, 20);
  for (int t = 0; t < 100; ++t) {
    std::map<int, long long> qv, lv;
    for (int k = 0; k < 4; ++k) {
      qv[pt(rng)] += val(rng);
      lv[pt(rng)] += val(rng);
    }
    SupportFunction qp(qv), lp(lv);
    long long c1F = c1d(rng);
    long long base = minimal_c1_bound(c1F, qp);
    // adding the dissocie l' to F adds l' to q' and drops c1(F) by sum n l'(n)
    CHECK(minimal_c1_bound(c1F - lp.weighted(), qp.add(lp)) == base);
  }
}

TEST_CASE("question-one criterion") {
  SupportFunction q = SF("{2:2, 3:3}"), qp = SF("{3:4}");
  QuestionOneResult r = question_one_criterion(q, qp);
  CHECK_FALSE(r.holds);
  CHECK(r.failing_n == 3);

  CHECK(question_one_criterion(qp, qp).holds);
  CHECK(question_one_criterion(SF("{1:2}"), SF("{1:1}")).holds);
  CHECK_FALSE(question_one_criterion(SF("{1:1}"), SF("{1:2}")).holds);
}
