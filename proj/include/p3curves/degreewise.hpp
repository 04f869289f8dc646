// Degreewise bases of twisted free modules and dense matrices of graded maps,
// the linear-algebra substrate behind Hilbert data, Ext realizations and Hom
// spaces.
#pragma once

#include "p3curves/presented.hpp"

namespace p3 {

// all monomials of total degree d, in a fixed deterministic order
std::vector<Monomial> monomials_of_degree(int d);

inline long long binom3(long long x) {  // C(x+3, 3) for x >= 0, else 0
  return x < 0 ? 0 : (x + 1) * (x + 2) * (x + 3) / 6;
}

long long free_dim(const FreeModule& F, int d);

// ordered basis { (component, monomial) } of the degree-d piece of F
class FreePiece {
 public:
  FreePiece(const FreeModule& F, int d);

  int dim() const { return static_cast<int>(elems_.size()); }
  int degree() const { return deg_; }
  const std::pair<int, Monomial>& operator[](int i) const { return elems_[i]; }
  int index_of(int comp, const Monomial& m) const;

  // coordinate vector of a homogeneous element of degree d
  std::vector<uint32_t> coords(const FreeVector& v) const;
  FreeVector from_coords(const std::vector<uint32_t>& c, const PolyRing& R) const;

 private:
  int deg_;
  std::vector<std::pair<int, Monomial>> elems_;
};

// dense matrix of the multiplication-style map sending source basis vector j
// to columns[j], in degree d (source piece) -> degree d (target piece)
DenseMat degreewise_map(const PolyRing& R, const std::vector<FreeVector>& columns,
                        const FreeModule& src, const FreeModule& dst, int d);
DenseMat degreewise_map(const PolyRing& R, const Matrix& m, const FreeModule& src,
                        const FreeModule& dst, int d);

// matrix whose rows are the coordinates of all monomial multiples m*g (g in
// gens, deg(m*g) = d); its row space is the degree-d piece of the submodule
DenseMat span_rows(const PolyRing& R, const std::vector<FreeVector>& gens,
                   const FreeModule& amb, int d, bool proper_multiples_only = false);

}  // namespace p3
