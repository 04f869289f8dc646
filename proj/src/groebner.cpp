#include "p3curves/groebner.hpp"

#include <algorithm>
#include <queue>

namespace p3 {

namespace {

void check_homogeneous(const FreeModule& amb, const std::vector<FreeVector>& gens) {
  for (const FreeVector& g : gens) {
    if (g.is_zero()) continue;
    if (!g.homogeneous_degree(amb))
      throw MathError("generators must be homogeneous in the ambient module");
  }
}

// Reduce f against monic basis elements; full tail reduction.
FreeVector reduce_full(const PolyRing& R, FreeVector f, const std::vector<FreeVector>& basis,
                       const ModOrder& ord) {
  FreeVector rem;
  while (!f.is_zero()) {
    ModTerm lt = lead_term(f, ord);
    const FreeVector* red = nullptr;
    for (const FreeVector& g : basis) {
      if (g.is_zero()) continue;
      ModTerm gl = lead_term(g, ord);
      if (gl.comp == lt.comp && gl.m.divides(lt.m)) {
        red = &g;
        break;
      }
    }
    if (red) {
      ModTerm gl = lead_term(*red, ord);
      f = f.sub(red->mul_term(lt.m / gl.m, R.field.div(lt.c, gl.c), R), R);
    } else {
      // move the irreducible leading term to the remainder
      FreeVector t = FreeVector::unit(lt.comp, Poly::term(lt.m, lt.c, R));
      rem = rem.add(t, R);
      f = f.sub(t, R);
    }
  }
  return rem;
}

// Lead-only reduction, used inside the Buchberger loop.
FreeVector reduce_lead(const PolyRing& R, FreeVector f, const std::vector<FreeVector>& basis,
                       const ModOrder& ord) {
  while (!f.is_zero()) {
    ModTerm lt = lead_term(f, ord);
    const FreeVector* red = nullptr;
    for (const FreeVector& g : basis) {
      if (g.is_zero()) continue;
      ModTerm gl = lead_term(g, ord);
      if (gl.comp == lt.comp && gl.m.divides(lt.m)) {
        red = &g;
        break;
      }
    }
    if (!red) return f;
    ModTerm gl = lead_term(*red, ord);
    f = f.sub(red->mul_term(lt.m / gl.m, R.field.div(lt.c, gl.c), R), R);
  }
  return f;
}

struct Pair {
  int deg;
  int i, j;
  bool operator>(const Pair& o) const {
    if (deg != o.deg) return deg > o.deg;
    if (i != o.i) return i > o.i;
    return j > o.j;
  }
};

}  // namespace

GroebnerBasis groebner_basis(const PolyRing& R, const FreeModule& amb,
                             const std::vector<FreeVector>& gens,
                             const BuchbergerOptions& opt) {
  check_homogeneous(amb, gens);
  ModOrder ord{R.order, opt.split};

  std::vector<FreeVector> basis;
  for (const FreeVector& g : gens) {
    if (g.is_zero()) continue;
    basis.push_back(make_monic(g, R, ord));
  }

  std::priority_queue<Pair, std::vector<Pair>, std::greater<Pair>> pairs;
  auto queue_pairs_with = [&](int j) {
    ModTerm lj = lead_term(basis[j], ord);
    for (int i = 0; i < j; ++i) {
      ModTerm li = lead_term(basis[i], ord);
      if (li.comp != lj.comp) continue;
      // the coprimality criterion is only sound in the ring case
      if (amb.rank() == 1 && Monomial::coprime(li.m, lj.m)) continue;
      Monomial l = Monomial::lcm(li.m, lj.m);
      int deg = l.degree() + amb.twists[li.comp];
      if (opt.degree_cap && deg > *opt.degree_cap) continue;
      pairs.push({deg, i, j});
    }
  };
  for (int j = 0; j < static_cast<int>(basis.size()); ++j) queue_pairs_with(j);

  while (!pairs.empty()) {
    Pair pr = pairs.top();
    pairs.pop();
    ModTerm li = lead_term(basis[pr.i], ord);
    ModTerm lj = lead_term(basis[pr.j], ord);
    if (li.comp != lj.comp) continue;  // leads may have changed; stale pair
    Monomial l = Monomial::lcm(li.m, lj.m);
    FreeVector s = basis[pr.i]
                       .mul_term(l / li.m, 1, R)
                       .sub(basis[pr.j].mul_term(l / lj.m, 1, R), R);
    s = reduce_lead(R, std::move(s), basis, ord);
    if (s.is_zero()) continue;
    basis.push_back(make_monic(s, R, ord));
    queue_pairs_with(static_cast<int>(basis.size()) - 1);
  }

  // minimalize: drop elements whose lead is divisible by another kept lead
  std::vector<int> idx(basis.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = static_cast<int>(k);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    ModTerm la = lead_term(basis[a], ord), lb = lead_term(basis[b], ord);
    int c = ord.cmp(la.m, la.comp, lb.m, lb.comp);
    if (c) return c < 0;
    return a < b;
  });
  std::vector<FreeVector> kept;
  for (int k : idx) {
    ModTerm lk = lead_term(basis[k], ord);
    bool redundant = false;
    for (const FreeVector& g : kept) {
      ModTerm gl = lead_term(g, ord);
      if (gl.comp == lk.comp && gl.m.divides(lk.m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(basis[k]);
  }

  // tail-reduce each element against the others
  std::vector<FreeVector> reduced;
  for (std::size_t k = 0; k < kept.size(); ++k) {
    std::vector<FreeVector> others;
    for (std::size_t l = 0; l < kept.size(); ++l)
      if (l != k) others.push_back(kept[l]);
    FreeVector r = reduce_full(R, kept[k], others, ord);
    if (!r.is_zero()) reduced.push_back(make_monic(r, R, ord));
  }

  std::sort(reduced.begin(), reduced.end(), [&](const FreeVector& a, const FreeVector& b) {
    ModTerm la = lead_term(a, ord), lb = lead_term(b, ord);
    int c = ord.cmp(la.m, la.comp, lb.m, lb.comp);
    if (c) return c < 0;
    return FreeVector::cmp(a, b, R) < 0;
  });

  GroebnerBasis gb;
  gb.ambient = amb;
  gb.elems = std::move(reduced);
  gb.split = opt.split;
  return gb;
}

FreeVector normal_form(const PolyRing& R, const FreeVector& f, const GroebnerBasis& gb) {
  if (!f.is_zero() && !f.homogeneous_degree(gb.ambient))
    throw MathError("normal form requires a homogeneous element of the ambient module");
  return reduce_full(R, f, gb.elems, ModOrder{R.order, gb.split});
}

bool submodule_contains(const PolyRing& R, const FreeVector& f, const GroebnerBasis& gb) {
  return normal_form(R, f, gb).is_zero();
}

SubmoduleOps::SubmoduleOps(const PolyRing& R, FreeModule amb, std::vector<FreeVector> gens,
                           const std::vector<int>* gen_twists)
    : R_(R), amb_(std::move(amb)), gens_(std::move(gens)) {
  check_homogeneous(amb_, gens_);
  if (gen_twists && gen_twists->size() != gens_.size())
    throw MathError("generator twist list has wrong length");
  int r = amb_.rank();
  ext_amb_ = amb_;
  std::vector<FreeVector> ext;
  std::vector<int> syz_tw;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    int d;
    if (gens_[i].is_zero()) {
      // a zero generator contributes a free syzygy component; the slot keeps
      // lift coefficients aligned
      d = gen_twists ? (*gen_twists)[i] : 0;
    } else {
      d = *gens_[i].homogeneous_degree(amb_);
      if (gen_twists && (*gen_twists)[i] != d)
        throw MathError("declared generator twist does not match its degree");
    }
    syz_tw.push_back(d);
    ext_amb_.twists.push_back(d);
    FreeVector v = gens_[i];
    v.set_component(r + static_cast<int>(i), Poly::constant(1, R_));
    ext.push_back(v);
  }
  syz_amb_ = FreeModule(syz_tw);
  BuchbergerOptions opt;
  opt.split = r;
  ext_gb_ = groebner_basis(R_, ext_amb_, ext, opt);

  // pure bookkeeping-block elements are the syzygies
  std::vector<FreeVector> syz_raw;
  for (const FreeVector& g : ext_gb_.elems) {
    bool pure = true;
    for (const auto& [c, f] : g.components())
      if (c < r) {
        pure = false;
        break;
      }
    if (!pure) continue;
    FreeVector s;
    for (const auto& [c, f] : g.components()) s.set_component(c - r, f);
    syz_raw.push_back(std::move(s));
  }
  syz_ = groebner_basis(R_, syz_amb_, syz_raw).elems;
}

bool SubmoduleOps::contains(const FreeVector& f) const { return lift(f).has_value(); }

std::optional<std::vector<Poly>> SubmoduleOps::lift(const FreeVector& f) const {
  if (!f.is_zero() && !f.homogeneous_degree(amb_))
    throw MathError("membership requires a homogeneous element");
  FreeVector nf = normal_form(R_, f, ext_gb_);
  // remainder must live entirely in the bookkeeping block
  for (const auto& [c, g] : nf.components())
    if (c < amb_.rank()) return std::nullopt;
  std::vector<Poly> coeffs(gens_.size());
  for (const auto& [c, g] : nf.components()) coeffs[c - amb_.rank()] = g.neg(R_);
  return coeffs;
}

FreeVector to_vector(const Poly& f) { return FreeVector::unit(0, f); }

Poly to_poly(const FreeVector& v) {
  if (v.is_zero()) return Poly();
  if (v.components().size() != 1 || v.components()[0].first != 0)
    throw MathError("vector is not supported on the single ideal component");
  return v.components()[0].second;
}

GroebnerBasis ideal_gb(const PolyRing& R, const std::vector<Poly>& gens) {
  std::vector<FreeVector> v;
  for (const Poly& f : gens)
    if (!f.is_zero()) v.push_back(to_vector(f));
  return groebner_basis(R, FreeModule({0}), v);
}

std::vector<Poly> gb_polys(const GroebnerBasis& gb) {
  std::vector<Poly> out;
  for (const FreeVector& v : gb.elems) out.push_back(to_poly(v));
  return out;
}

bool ideal_contains(const PolyRing& R, const GroebnerBasis& I, const Poly& f) {
  return submodule_contains(R, to_vector(f), I);
}

GroebnerBasis ideal_quotient(const PolyRing& R, const GroebnerBasis& I,
                             const std::vector<Poly>& J) {
  std::vector<Poly> js;
  for (const Poly& h : J)
    if (!h.is_zero()) js.push_back(h);
  if (js.empty()) throw MathError("ideal quotient by the zero ideal");
  for (const Poly& h : js)
    if (!h.is_homogeneous()) throw MathError("ideal quotient requires homogeneous forms");

  // (I : J) is the set of first coordinates of syzygies of
  //   u0 = (h_1,...,h_t), together with f e_j for f among the generators of I.
  int t = static_cast<int>(js.size());
  std::vector<int> tw(t);
  for (int j = 0; j < t; ++j) tw[j] = -js[j].degree();
  FreeModule amb(tw);
  std::vector<FreeVector> gens;
  FreeVector u0;
  for (int j = 0; j < t; ++j) u0.set_component(j, js[j]);
  gens.push_back(u0);
  for (const FreeVector& g : I.elems) {
    Poly f = to_poly(g);
    for (int j = 0; j < t; ++j) gens.push_back(FreeVector::unit(j, f));
  }
  SubmoduleOps ops(R, amb, gens);
  std::vector<Poly> quot;
  for (const FreeVector& s : ops.syzygy_basis()) {
    const Poly* c0 = s.component(0);
    if (c0) quot.push_back(*c0);
  }
  return ideal_gb(R, quot);
}

GroebnerBasis saturate(const PolyRing& R, const GroebnerBasis& I,
                       const std::vector<Poly>& J) {
  GroebnerBasis cur = I;
  for (;;) {
    GroebnerBasis next = ideal_quotient(R, cur, J);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

GroebnerBasis saturate(const PolyRing& R, const GroebnerBasis& I) {
  return saturate(R, I, variables());
}

}  // namespace p3
