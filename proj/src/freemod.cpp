#include "p3curves/freemod.hpp"

#include <algorithm>

namespace p3 {

int FreeModule::min_twist() const {
  if (twists.empty()) throw MathError("min twist of rank-0 module");
  return *std::min_element(twists.begin(), twists.end());
}

void FreeVector::set_component(int j, Poly f) {
  auto it = std::lower_bound(comps_.begin(), comps_.end(), j,
                             [](const auto& p, int c) { return p.first < c; });
  if (it != comps_.end() && it->first == j) {
    if (f.is_zero())
      comps_.erase(it);
    else
      it->second = std::move(f);
  } else if (!f.is_zero()) {
    comps_.insert(it, {j, std::move(f)});
  }
}

std::optional<int> FreeVector::homogeneous_degree(const FreeModule& amb) const {
  std::optional<int> deg;
  for (const auto& [c, f] : comps_) {
    if (c < 0 || c >= amb.rank()) throw MathError("component outside ambient module");
    if (!f.is_homogeneous()) return std::nullopt;
    int d = f.degree() + amb.twists[c];
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

FreeVector FreeVector::add(const FreeVector& o, const PolyRing& R) const {
  FreeVector r;
  std::size_t i = 0, j = 0;
  while (i < comps_.size() && j < o.comps_.size()) {
    if (comps_[i].first < o.comps_[j].first) {
      r.comps_.push_back(comps_[i++]);
    } else if (comps_[i].first > o.comps_[j].first) {
      r.comps_.push_back(o.comps_[j++]);
    } else {
      Poly s = comps_[i].second.add(o.comps_[j].second, R);
      if (!s.is_zero()) r.comps_.push_back({comps_[i].first, std::move(s)});
      ++i;
      ++j;
    }
  }
  while (i < comps_.size()) r.comps_.push_back(comps_[i++]);
  while (j < o.comps_.size()) r.comps_.push_back(o.comps_[j++]);
  return r;
}

FreeVector FreeVector::sub(const FreeVector& o, const PolyRing& R) const {
  return add(o.neg(R), R);
}

FreeVector FreeVector::neg(const PolyRing& R) const {
  FreeVector r = *this;
  for (auto& [c, f] : r.comps_) f = f.neg(R);
  return r;
}

FreeVector FreeVector::scale(uint32_t c, const PolyRing& R) const {
  if (c % R.field.modulus() == 0) return FreeVector();
  FreeVector r = *this;
  for (auto& [k, f] : r.comps_) f = f.scale(c, R);
  return r;
}

FreeVector FreeVector::mul_term(const Monomial& m, uint32_t c, const PolyRing& R) const {
  if (c % R.field.modulus() == 0) return FreeVector();
  FreeVector r = *this;
  for (auto& [k, f] : r.comps_) f = f.mul_term(m, c, R);
  return r;
}

FreeVector FreeVector::mul(const Poly& g, const PolyRing& R) const {
  FreeVector r;
  for (const auto& [k, f] : comps_) {
    Poly p = f.mul(g, R);
    if (!p.is_zero()) r.comps_.push_back({k, std::move(p)});
  }
  return r;
}

int FreeVector::cmp(const FreeVector& a, const FreeVector& b, const PolyRing& R) {
  std::size_t n = std::min(a.comps_.size(), b.comps_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.comps_[i].first != b.comps_[i].first)
      return a.comps_[i].first < b.comps_[i].first ? -1 : 1;
    int c = Poly::cmp(a.comps_[i].second, b.comps_[i].second, R);
    if (c) return c;
  }
  if (a.comps_.size() != b.comps_.size()) return a.comps_.size() < b.comps_.size() ? -1 : 1;
  return 0;
}

std::string FreeVector::str(const PolyRing& R) const {
  if (comps_.empty()) return "0";
  std::string s;
  for (const auto& [c, f] : comps_) {
    if (!s.empty()) s += " + ";
    s += "(" + f.str(R) + ")*e" + std::to_string(c);
  }
  return s;
}

FreeVector make_monic(const FreeVector& v, const PolyRing& R, const ModOrder& ord) {
  if (v.is_zero()) return v;
  ModTerm lt = lead_term(v, ord);
  return v.scale(R.field.inv(lt.c), R);
}

ModTerm lead_term(const FreeVector& v, const ModOrder& ord) {
  ModTerm best;
  for (const auto& [c, f] : v.components()) {
    const Term& t = f.lead();
    if (best.comp < 0 || ord.cmp(t.m, c, best.m, best.comp) > 0) {
      best.comp = c;
      best.m = t.m;
      best.c = t.c;
    }
  }
  if (best.comp < 0) throw MathError("leading term of zero vector");
  return best;
}

}  // namespace p3
