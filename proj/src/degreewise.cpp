#include "p3curves/degreewise.hpp"

#include <algorithm>

namespace p3 {

std::vector<Monomial> monomials_of_degree(int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  for (int x = d; x >= 0; --x)
    for (int y = d - x; y >= 0; --y)
      for (int z = d - x - y; z >= 0; --z) {
        Monomial m;
        m.e[0] = static_cast<uint8_t>(x);
        m.e[1] = static_cast<uint8_t>(y);
        m.e[2] = static_cast<uint8_t>(z);
        m.e[3] = static_cast<uint8_t>(d - x - y - z);
        out.push_back(m);
      }
  return out;
}

long long free_dim(const FreeModule& F, int d) {
  long long n = 0;
  for (int a : F.twists) n += binom3(d - a);
  return n;
}

FreePiece::FreePiece(const FreeModule& F, int d) : deg_(d) {
  for (int j = 0; j < F.rank(); ++j)
    for (const Monomial& m : monomials_of_degree(d - F.twists[j])) elems_.push_back({j, m});
}

int FreePiece::index_of(int comp, const Monomial& m) const {
  auto key = [](int c, const Monomial& mm) {
    return std::make_pair(c, std::array<uint8_t, 4>{mm.e[0], mm.e[1], mm.e[2], mm.e[3]});
  };
  // elems_ is grouped by component; monomials_of_degree emits x-major
  // descending, which is lexicographically descending on exponent tuples
  auto it = std::lower_bound(
      elems_.begin(), elems_.end(), key(comp, m), [&](const auto& e, const auto& k) {
        auto ke = key(e.first, e.second);
        if (ke.first != k.first) return ke.first < k.first;
        return ke.second > k.second;  // descending within a component
      });
  if (it == elems_.end() || it->first != comp || !(it->second == m)) return -1;
  return static_cast<int>(it - elems_.begin());
}

std::vector<uint32_t> FreePiece::coords(const FreeVector& v) const {
  std::vector<uint32_t> c(elems_.size(), 0);
  for (const auto& [comp, f] : v.components())
    for (const Term& t : f.terms()) {
      int i = index_of(comp, t.m);
      if (i < 0) throw MathError("element degree does not match the piece");
      c[static_cast<std::size_t>(i)] = t.c;
    }
  return c;
}

FreeVector FreePiece::from_coords(const std::vector<uint32_t>& c, const PolyRing& R) const {
  std::vector<std::vector<Term>> per_comp;
  FreeVector v;
  int cur = -1;
  std::vector<Term> ts;
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (elems_[i].first != cur) {
      if (!ts.empty()) v.set_component(cur, Poly::collect(ts, R));
      ts.clear();
      cur = elems_[i].first;
    }
    if (c[i] % R.field.modulus()) ts.push_back({elems_[i].second, c[i]});
  }
  if (!ts.empty()) v.set_component(cur, Poly::collect(ts, R));
  return v;
}

DenseMat degreewise_map(const PolyRing& R, const std::vector<FreeVector>& columns,
                        const FreeModule& src, const FreeModule& dst, int d) {
  FreePiece sp(src, d), dp(dst, d);
  DenseMat m(dp.dim(), sp.dim());
  for (int j = 0; j < sp.dim(); ++j) {
    const auto& [comp, mono] = sp[j];
    if (comp >= static_cast<int>(columns.size()))
      throw MathError("column count does not match source rank");
    FreeVector img = columns[comp].mul_term(mono, 1, R);
    std::vector<uint32_t> c = dp.coords(img);
    for (int i = 0; i < dp.dim(); ++i) m.at(i, j) = c[static_cast<std::size_t>(i)];
  }
  return m;
}

DenseMat degreewise_map(const PolyRing& R, const Matrix& m, const FreeModule& src,
                        const FreeModule& dst, int d) {
  return degreewise_map(R, m.columns(), src, dst, d);
}

DenseMat span_rows(const PolyRing& R, const std::vector<FreeVector>& gens,
                   const FreeModule& amb, int d, bool proper_multiples_only) {
  FreePiece piece(amb, d);
  std::vector<std::vector<uint32_t>> rows;
  for (const FreeVector& g : gens) {
    if (g.is_zero()) continue;
    auto dg = g.homogeneous_degree(amb);
    if (!dg) throw MathError("span requires homogeneous generators");
    int md = d - *dg;
    if (md < 0 || (proper_multiples_only && md == 0)) continue;
    for (const Monomial& m : monomials_of_degree(md))
      rows.push_back(piece.coords(g.mul_term(m, 1, R)));
  }
  DenseMat out(rows.size(), piece.dim());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < piece.dim(); ++j) out.at(i, j) = rows[i][static_cast<std::size_t>(j)];
  return out;
}

}  // namespace p3
