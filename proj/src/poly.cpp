#include "p3curves/poly.hpp"

#include <algorithm>

namespace p3 {

Poly Poly::collect(std::vector<Term> ts, const PolyRing& R) {
  std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) {
    return mono_cmp(a.m, b.m, R.order) > 0;
  });
  Poly f;
  for (const Term& t : ts) {
    uint32_t c = t.c % R.field.modulus();
    if (!c) continue;
    if (!f.terms_.empty() && f.terms_.back().m == t.m) {
      uint32_t s = R.field.add(f.terms_.back().c, c);
      if (s)
        f.terms_.back().c = s;
      else
        f.terms_.pop_back();
    } else {
      f.terms_.push_back({t.m, c});
    }
  }
  return f;
}

Poly Poly::add(const Poly& o, const PolyRing& R) const {
  Poly r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = mono_cmp(terms_[i].m, o.terms_[j].m, R.order);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      uint32_t s = R.field.add(terms_[i].c, o.terms_[j].c);
      if (s) r.terms_.push_back({terms_[i].m, s});
      ++i;
      ++j;
    }
  }
  while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
  while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
  return r;
}

Poly Poly::sub(const Poly& o, const PolyRing& R) const { return add(o.neg(R), R); }

Poly Poly::neg(const PolyRing& R) const {
  Poly r = *this;
  for (Term& t : r.terms_) t.c = R.field.neg(t.c);
  return r;
}

Poly Poly::scale(uint32_t c, const PolyRing& R) const {
  c %= R.field.modulus();
  if (!c) return Poly();
  Poly r = *this;
  for (Term& t : r.terms_) t.c = R.field.mul(t.c, c);
  return r;
}

Poly Poly::mul_term(const Monomial& m, uint32_t c, const PolyRing& R) const {
  c %= R.field.modulus();
  if (!c) return Poly();
  Poly r;
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.m * m, R.field.mul(t.c, c)});
  return r;  // multiplying by a monomial preserves the term order
}

Poly Poly::mul(const Poly& o, const PolyRing& R) const {
  std::vector<Term> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const Term& a : terms_)
    for (const Term& b : o.terms_) acc.push_back({a.m * b.m, R.field.mul(a.c, b.c)});
  return collect(std::move(acc), R);
}

int Poly::cmp(const Poly& a, const Poly& b, const PolyRing& R) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = mono_cmp(a.terms_[i].m, b.terms_[i].m, R.order);
    if (c) return c;
    if (a.terms_[i].c != b.terms_[i].c) return a.terms_[i].c < b.terms_[i].c ? -1 : 1;
  }
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
  return 0;
}

std::string Poly::str(const PolyRing& R) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const Term& t : terms_) {
    long long c = R.field.lift_signed(t.c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    long long ac = c < 0 ? -c : c;
    if (ac != 1 || t.m.degree() == 0) {
      s += std::to_string(ac);
      if (t.m.degree() > 0) s += "*";
    }
    if (t.m.degree() > 0) s += t.m.str();
  }
  return s;
}

std::vector<Poly> variables() {
  std::vector<Poly> v;
  for (int i = 0; i < kNumVars; ++i) v.push_back(Poly::variable(i));
  return v;
}

}  // namespace p3
