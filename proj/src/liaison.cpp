#include "p3curves/liaison.hpp"

#include <algorithm>

#include "p3curves/degreewise.hpp"

namespace p3 {

namespace {

GroebnerBasis checked_ideal_gb(const PolyRing& R, const std::vector<Poly>& ideal) {
  GroebnerBasis gb = ideal_gb(R, ideal);
  if (gb.elems.empty()) throw MathError("the zero ideal does not define a curve");
  for (const FreeVector& g : gb.elems)
    if (to_poly(g).is_constant()) throw MathError("the unit ideal does not define a curve");
  return gb;
}

}  // namespace

CurveCheck check_lcm_curve(const PolyRing& R, const std::vector<Poly>& ideal) {
  CurveCheck c;
  GroebnerBasis gb = checked_ideal_gb(R, ideal);
  c.saturated = saturate(R, gb) == gb;
  if (!c.saturated) c.detail = "ideal is not saturated";

  PresentedModule RI = PresentedModule::quotient_by_ideal(R, gb_polys(gb));
  HilbertPolynomial hp = hilbert_polynomial(RI);
  c.dimension_one = hp.degree() == 1;
  if (!c.dimension_one && c.detail.empty())
    c.detail = "Hilbert polynomial has degree " + std::to_string(hp.degree()) +
               ", not a curve";

  c.locally_cm = is_finite_length(ext_module(RI, 3));
  if (!c.locally_cm && c.detail.empty())
    c.detail = "H^1_m(R/I) is not finite length (not locally CM of pure dimension 1)";
  if (c.ok()) c.detail = "saturated locally Cohen-Macaulay curve";
  return c;
}

bool is_lcm_curve(const PolyRing& R, const std::vector<Poly>& ideal) {
  return check_lcm_curve(R, ideal).ok();
}

CurveRecord make_curve_record(const PolyRing& R, const std::vector<Poly>& ideal) {
  CurveCheck c = check_lcm_curve(R, ideal);
  if (!c.ok()) throw MathError("curve validation failed: " + c.detail);
  GroebnerBasis gb = ideal_gb(R, ideal);

  CurveRecord rec{gb_polys(gb), 0, 0, FiniteLengthModule(),
                  PresentedModule::ideal_module(R, gb_polys(gb)), CohomologyTable{}};
  PresentedModule RI = PresentedModule::quotient_by_ideal(R, rec.ideal);
  HilbertPolynomial hp = hilbert_polynomial(RI);
  rec.degree = hp.eval(1) - hp.eval(0);
  rec.genus = 1 - hp.eval(0);
  rec.rao = h1_star_module(rec.ideal_mod);
  rec.table = sheaf_cohomology_table(rec.ideal_mod);
  return rec;
}

std::pair<long long, long long> curve_degree_genus(const PolyRing& R,
                                                   const std::vector<Poly>& ideal) {
  CurveRecord rec = make_curve_record(R, ideal);
  return {rec.degree, rec.genus};
}

FiniteLengthModule rao_module(const PolyRing& R, const std::vector<Poly>& ideal) {
  CurveCheck c = check_lcm_curve(R, ideal);
  if (!c.ok()) throw MathError("curve validation failed: " + c.detail);
  return h1_star_module(PresentedModule::ideal_module(R, ideal));
}

CurveRecord ci_link(const PolyRing& R, const std::vector<Poly>& curve, const Poly& F,
                    const Poly& G) {
  GroebnerBasis Igb = checked_ideal_gb(R, curve);
  if (!ideal_contains(R, Igb, F) || !ideal_contains(R, Igb, G))
    throw MathError("linkage forms must both lie in the curve ideal");
  if (!F.is_homogeneous() || !G.is_homogeneous() || F.is_zero() || G.is_zero())
    throw MathError("linkage forms must be nonzero homogeneous");

  PresentedModule RCI = PresentedModule::quotient_by_ideal(R, {F, G});
  HilbertPolynomial hp = hilbert_polynomial(RCI);
  long long ci_deg = static_cast<long long>(F.degree()) * G.degree();
  if (hp.degree() != 1 || hp.eval(1) - hp.eval(0) != ci_deg)
    throw MathError("linkage forms are not a regular sequence");

  GroebnerBasis J = ideal_quotient(R, ideal_gb(R, {F, G}), gb_polys(Igb));
  CurveRecord linked = make_curve_record(R, gb_polys(J));

  PresentedModule RI = PresentedModule::quotient_by_ideal(R, gb_polys(Igb));
  HilbertPolynomial hpI = hilbert_polynomial(RI);
  long long degC = hpI.eval(1) - hpI.eval(0);
  if (degC + linked.degree != ci_deg)
    throw MathError("internal: linkage degree additivity failed");
  return linked;
}

LiaisonAddition liaison_addition(const PolyRing& R, const std::vector<Poly>& I1,
                                 const std::vector<Poly>& I2, const Poly& Pp,
                                 const Poly& Ppp) {
  if (Pp.is_zero() || Ppp.is_zero() || !Pp.is_homogeneous() || !Ppp.is_homogeneous())
    throw MathError("liaison addition requires nonzero homogeneous forms");
  if (Pp.degree() != Ppp.degree())
    throw MathError("liaison addition requires forms of equal degree");
  int s = Pp.degree();
  GroebnerBasis gb1 = checked_ideal_gb(R, I1), gb2 = checked_ideal_gb(R, I2);
  if (!ideal_contains(R, gb1, Pp))
    throw MathError("the first form must lie in the first curve ideal");
  if (!ideal_contains(R, gb2, Ppp))
    throw MathError("the second form must lie in the second curve ideal");
  // coprimality: two equal-degree forms sharing a factor cut out a surface
  if (hilbert_polynomial(PresentedModule::quotient_by_ideal(R, {Pp, Ppp})).degree() != 1)
    throw MathError("liaison addition forms have a common divisor");

  std::vector<Poly> g1 = gb_polys(gb1), g2 = gb_polys(gb2);
  std::vector<Poly> gens;
  for (const Poly& g : g1) gens.push_back(g.mul(Ppp, R));
  for (const Poly& g : g2) gens.push_back(g.mul(Pp, R));
  CurveRecord curve = make_curve_record(R, gens);

  // the defining exact sequence 0 -> R(-2s) -> I1(-s) + I2(-s) -> I -> 0
  PresentedModule mid = PresentedModule::direct_sum(
      PresentedModule::ideal_module(R, g1).shifted(-s),
      PresentedModule::ideal_module(R, g2).shifted(-s));
  PresentedModule sub =
      PresentedModule::free_module(R, FreeModule(std::vector<int>{2 * s}));

  SubmoduleOps ops1(R, FreeModule({0}), [&] {
    std::vector<FreeVector> v;
    for (const Poly& g : g1) v.push_back(to_vector(g));
    return v;
  }());
  SubmoduleOps ops2(R, FreeModule({0}), [&] {
    std::vector<FreeVector> v;
    for (const Poly& g : g2) v.push_back(to_vector(g));
    return v;
  }());
  auto lift1 = ops1.lift(to_vector(Pp)), lift2 = ops2.lift(to_vector(Ppp));
  if (!lift1 || !lift2) throw MathError("internal: liaison membership lift failed");
  Matrix inj(mid.gens().rank(), 1);
  for (std::size_t k = 0; k < lift1->size(); ++k) inj.a[k][0] = (*lift1)[k];
  for (std::size_t k = 0; k < lift2->size(); ++k)
    inj.a[g1.size() + k][0] = (*lift2)[k].neg(R);

  SubmoduleOps opsI(R, FreeModule({0}), [&] {
    std::vector<FreeVector> v;
    for (const Poly& g : curve.ideal) v.push_back(to_vector(g));
    return v;
  }());
  Matrix surj(curve.ideal_mod.gens().rank(), mid.gens().rank());
  for (int j = 0; j < mid.gens().rank(); ++j) {
    Poly img = j < static_cast<int>(g1.size()) ? g1[j].mul(Ppp, R)
                                               : g2[j - g1.size()].mul(Pp, R);
    auto lift = opsI.lift(to_vector(img));
    if (!lift) throw MathError("internal: liaison image lift failed");
    for (int i = 0; i < surj.rows(); ++i) surj.a[i][j] = (*lift)[i];
  }

  ExactTriple triple{sub, mid, curve.ideal_mod, GradedMap(sub, mid, inj),
                     GradedMap(mid, curve.ideal_mod, surj)};
  DegreeWindow w = default_window(curve.ideal_mod);
  if (!verify_exact_triple(triple, w))
    throw MathError("internal: liaison addition sequence failed exactness check");
  return LiaisonAddition{std::move(curve), std::move(triple), s};
}

namespace {

// coker presented over E's generators with the extra relation columns
PresentedModule attach_relations(const PresentedModule& E, const Matrix& extra,
                                 const std::vector<int>& extra_tw) {
  std::vector<int> rel_tw = E.rels().twists;
  rel_tw.insert(rel_tw.end(), extra_tw.begin(), extra_tw.end());
  return PresentedModule(E.ring(), E.gens(), FreeModule(rel_tw),
                         E.rel_matrix().concat_cols(extra));
}

struct RankOneIdeal {
  bool ok = false;
  std::string diag;
  int twist = 0;
  std::vector<Poly> ideal;
};

// Q of generic rank one: find Hom(Q, R) = R(-t) and read off the image ideal.
RankOneIdeal rank_one_cokernel_ideal(const PresentedModule& Q) {
  RankOneIdeal out;
  const PolyRing& R = Q.ring();
  FreeModule U0 = Q.gens().dual();
  std::vector<FreeVector> K =
      module_kernel(R, U0, Q.rels().dual(), Q.rel_matrix().transpose()).embedding;
  std::vector<FreeVector> min_gens = prune_generators(R, U0, K);
  if (min_gens.size() != 1) {
    out.diag = "Hom(coker, R) is not cyclic (" + std::to_string(min_gens.size()) +
               " minimal generators)";
    return out;
  }
  const FreeVector& psi = min_gens[0];
  out.twist = *psi.homogeneous_degree(U0);
  for (const auto& [j, f] : psi.components()) out.ideal.push_back(f);
  out.ok = true;
  return out;
}

}  // namespace

SectionZeroLocusResult section_zero_locus(const PresentedModule& E, const FreeVector& s) {
  const PolyRing& R = E.ring();
  const FreeResolution& res = minimal_free_resolution(E);
  if (res.sheaf_rank() != 2)
    throw MathError("section zero locus requires a rank-2 module");
  if (!is_zero_module(ext_module(E, 4)) || !is_zero_module(ext_module(E, 3)))
    throw MathError("rank-2 module fails the depth certificate (sections != elements)");
  if (!sheaf_pd_at_most_one(E))
    throw MathError("rank-2 module fails the sheaf pd <= 1 certificate");
  if (s.is_zero()) throw MathError("zero section");
  auto deg = s.homogeneous_degree(E.gens());
  if (!deg) throw MathError("section must be homogeneous");
  if (normal_form(R, s, E.relations_gb()).is_zero()) throw MathError("zero section");
  int n = *deg;

  Matrix scol = Matrix::from_columns(E.gens().rank(), {s});
  PresentedModule Q = attach_relations(E, scol, {n});

  SectionZeroLocusResult out;
  out.twist = static_cast<int>(sheaf_c1(res)) + n;
  RankOneIdeal r1 = rank_one_cokernel_ideal(Q);
  if (!r1.ok) {
    out.diagnostic = r1.diag;
    return out;
  }
  if (r1.twist != out.twist) {
    out.diagnostic = "section vanishes in codimension 1: cokernel is I(" +
                     std::to_string(r1.twist) + "), expected twist " +
                     std::to_string(out.twist);
    return out;
  }
  CurveCheck c = check_lcm_curve(R, r1.ideal);
  if (!c.ok()) {
    out.diagnostic = "cokernel ideal fails curve validation: " + c.detail;
    return out;
  }
  out.curve = make_curve_record(R, r1.ideal);

  // certify coker(s) = I_C(t) and the section sequence degreewise
  DegreeWindow w = default_window(E);
  for (int d = w.lo; d <= w.hi; ++d) {
    if (Q.hilbert_dim(d) != out.curve.ideal_mod.hilbert_dim(d + out.twist)) {
      out.diagnostic = "cokernel does not match the twisted curve ideal degreewise";
      return out;
    }
    if (E.hilbert_dim(d) != binom3(d - n) + Q.hilbert_dim(d)) {
      out.diagnostic = "section is not injective degreewise";
      return out;
    }
  }
  out.is_curve = true;
  out.diagnostic = "section vanishes along a curve";
  return out;
}

BiliaisonVerdict biliaison_equivalent(const PolyRing& R, const std::vector<Poly>& I1,
                                      const std::vector<Poly>& I2, uint64_t seed) {
  BiliaisonVerdict v;
  CurveCheck c1 = check_lcm_curve(R, I1), c2 = check_lcm_curve(R, I2);
  v.preconditions_ok = c1.ok() && c2.ok();
  if (!v.preconditions_ok) {
    v.detail = "curve validation failed: " + (c1.ok() ? c2.detail : c1.detail);
    return v;
  }
  v.iso = modules_isomorphic(rao_module(R, I1), rao_module(R, I2), true, seed);
  v.detail = v.iso.detail;
  return v;
}

Poly random_form(const PolyRing& R, int degree, std::mt19937_64& rng) {
  if (degree < 0) return Poly();
  std::uniform_int_distribution<uint32_t> coeff(0, R.field.modulus() - 1);
  std::vector<Term> ts;
  for (const Monomial& m : monomials_of_degree(degree)) {
    uint32_t c = coeff(rng);
    if (c) ts.push_back({m, c});
  }
  return Poly::collect(std::move(ts), R);
}

namespace {

bool is_regular_sequence4(const PolyRing& R, const std::vector<Poly>& fs, long long want) {
  for (const Poly& f : fs)
    if (f.is_zero()) return false;
  PresentedModule Q = PresentedModule::quotient_by_ideal(R, fs);
  if (!hilbert_polynomial(Q).is_zero()) return false;
  DegreeWindow w = default_window(Q);
  long long total = 0;
  for (int n = w.lo; n <= w.hi; ++n) total += Q.hilbert_dim(n);
  return total == want;
}

}  // namespace

Ex39Scenario example39_construct(const PolyRing& R, int n1, int n3, uint64_t seed) {
  if (n1 < 1 || n1 >= n3) throw MathError("scenario requires 1 <= n1 < n3");
  if (n1 > 2 || n3 > 4) throw MathError("scenario degree cap exceeded (n1 <= 2, n3 <= 4)");

  Ex39Scenario s;
  s.n1 = n1;
  s.n3 = n3;
  s.seed = seed;
  long long ci_dim = static_cast<long long>(n1) * n1 * n3 * n3;

  std::mt19937_64 rng(seed ? seed : 0x39);
  const Poly X = Poly::variable(0), Y = Poly::variable(1), Z = Poly::variable(2),
             T = Poly::variable(3);
  auto pow = [&](const Poly& f, int e) {
    Poly r = Poly::constant(1, R);
    for (int k = 0; k < e; ++k) r = r.mul(f, R);
    return r;
  };

  for (int attempt = 0; attempt < 40; ++attempt) {
    if (seed == 0) {
      s.f1 = pow(X, n1);
      s.f2 = pow(Y, n1);
      s.fp3 = pow(Z, n3);
      s.fp4 = pow(T, n3);
      s.fpp3 = pow(Z, n3).sub(pow(T, n3), R);
      s.fpp4 = Z.mul(pow(T, n3 - 1), R);
      s.gp3 = s.f1;
      s.gp4 = s.f2;
      s.gpp3 = s.f1;
      s.gpp4 = s.f2;
      s.Pp = s.f1.mul(s.f1, R);
      s.Ppp = s.f2.mul(s.f2, R);
    } else {
      s.f1 = random_form(R, n1, rng);
      s.f2 = random_form(R, n1, rng);
      s.fp3 = random_form(R, n3, rng);
      s.fp4 = random_form(R, n3, rng);
      s.fpp3 = random_form(R, n3, rng);
      s.fpp4 = random_form(R, n3, rng);
      std::uniform_int_distribution<uint32_t> coeff(0, R.field.modulus() - 1);
      auto combo = [&](const Poly& a, const Poly& b) {
        return a.scale(coeff(rng), R).add(b.scale(coeff(rng), R), R);
      };
      s.gp3 = combo(s.f1, s.f2);
      s.gp4 = combo(s.f1, s.f2);
      s.gpp3 = combo(s.f1, s.f2);
      s.gpp4 = combo(s.f1, s.f2);
      Poly f11 = s.f1.mul(s.f1, R), f12 = s.f1.mul(s.f2, R), f22 = s.f2.mul(s.f2, R);
      auto combo3 = [&](const Poly& a, const Poly& b, const Poly& c) {
        return a.scale(coeff(rng), R).add(b.scale(coeff(rng), R), R).add(
            c.scale(coeff(rng), R), R);
      };
      s.Pp = combo3(f11, f12, f22);
      s.Ppp = combo3(f11, f12, f22);
    }

    try {
      if (!is_regular_sequence4(R, {s.f1, s.f2, s.fp3, s.fp4}, ci_dim)) continue;
      if (!is_regular_sequence4(R, {s.f1, s.f2, s.fpp3, s.fpp4}, ci_dim)) continue;
      if (s.Pp.is_zero() || s.Ppp.is_zero()) continue;
      if (hilbert_polynomial(PresentedModule::quotient_by_ideal(R, {s.Pp, s.Ppp}))
              .degree() != 1)
        continue;

      s.Mp = PresentedModule::quotient_by_ideal(R, {s.f1, s.f2, s.fp3, s.fp4});
      s.Mpp = PresentedModule::quotient_by_ideal(R, {s.f1, s.f2, s.fpp3, s.fpp4});
      s.M = PresentedModule::direct_sum(s.Mp, s.Mpp);
      s.F = second_syzygy(s.M);

      Poly f11 = s.f1.mul(s.f1, R), f12 = s.f1.mul(s.f2, R), f22 = s.f2.mul(s.f2, R);
      std::vector<Poly> Ip = {f11, f12, f22,
                              s.gp3.mul(s.fp3, R).add(s.gp4.mul(s.fp4, R), R)};
      std::vector<Poly> Ipp = {f11, f12, f22,
                               s.gpp3.mul(s.fpp3, R).add(s.gpp4.mul(s.fpp4, R), R)};
      s.Cp = make_curve_record(R, Ip);
      s.Cpp = make_curve_record(R, Ipp);
      s.C = liaison_addition(R, s.Cp.ideal, s.Cpp.ideal, s.Pp, s.Ppp);
    } catch (const MathError&) {
      if (seed == 0) throw;  // the deterministic specialization must not fail
      continue;
    }

    s.q_F = SupportFunction(std::map<int, long long>{{2 * n1, 2}, {n1 + n3, 3}});
    s.q_prime_F = SupportFunction(std::map<int, long long>{{n1 + n3, 4}});
    s.expected_deg_cp = 2LL * n1 * n1;
    s.expected_deg_c = 8LL * n1 * n1;
    s.expected_rao_shift_cp = n3 - n1;
    s.expected_rao_shift_c = n3 - 3 * n1;
    return s;
  }
  throw MathError("scenario construction failed to certify after the retry bound");
}

namespace {

Matrix random_bundle_map(const PresentedModule& F, const std::vector<int>& Ltw,
                         std::mt19937_64& rng, const PolyRing& R) {
  Matrix u(F.gens().rank(), static_cast<int>(Ltw.size()));
  for (int i = 0; i < u.rows(); ++i)
    for (int j = 0; j < u.cols(); ++j)
      u.a[i][j] = random_form(R, Ltw[j] - F.gens().twists[i], rng);
  return u;
}

std::vector<int> twists_of(const SupportFunction& q) {
  std::vector<int> tw;
  for (const auto& [n, v] : q.values())
    for (long long k = 0; k < v; ++k) tw.push_back(n);
  return tw;
}

}  // namespace

BundleQuotientCurve minimal_curve_from_bundle(const Ex39Scenario& s, uint64_t seed) {
  const PolyRing& R = s.M.ring();
  const PresentedModule& F = s.F.bundle;
  std::vector<int> Ltw = twists_of(s.q_F);
  long long c1L = 0;
  for (int t : Ltw) c1L -= t;
  int expected_twist =
      static_cast<int>(sheaf_c1(minimal_free_resolution(F)) - c1L);

  for (uint64_t k = 0; k < 16; ++k) {
    std::mt19937_64 rng(seed + k);
    Matrix u = random_bundle_map(F, Ltw, rng, R);
    PresentedModule Q = attach_relations(F, u, Ltw);
    RankOneIdeal r1 = rank_one_cokernel_ideal(Q);
    if (!r1.ok || r1.twist != expected_twist) continue;
    CurveCheck c = check_lcm_curve(R, r1.ideal);
    if (!c.ok()) continue;
    BundleQuotientCurve out{make_curve_record(R, r1.ideal), r1.twist, seed + k};
    return out;
  }
  throw MathError("no general map produced a curve within the retry bound");
}

ReflexiveQuotient minimal_reflexive_quotient(const Ex39Scenario& s, uint64_t seed) {
  const PolyRing& R = s.M.ring();
  const PresentedModule& F = s.F.bundle;
  std::vector<int> Ltw = twists_of(s.q_prime_F);
  for (uint64_t k = 0; k < 16; ++k) {
    std::mt19937_64 rng(seed + k);
    Matrix u = random_bundle_map(F, Ltw, rng, R);
    PresentedModule E = attach_relations(F, u, Ltw);
    if (minimal_free_resolution(E).sheaf_rank() != 2) continue;
    if (!is_zero_module(ext_module(E, 4)) || !is_zero_module(ext_module(E, 3))) continue;
    if (!sheaf_pd_at_most_one(E)) continue;
    ReflexiveQuotient out{E, sheaf_c1(minimal_free_resolution(E)), seed + k};
    return out;
  }
  throw MathError("no general map produced a reflexive quotient within the retry bound");
}

}  // namespace p3
