// Twisted free modules over R and their homogeneous elements.
//
// Component j of a FreeModule with twist list (a_0,...,a_{r-1}) is a copy of
// R(-a_j): the basis vector e_j sits in degree a_j, and a homogeneous element
// of degree d carries a polynomial of degree d - a_j in component j.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "p3curves/poly.hpp"

namespace p3 {

struct FreeModule {
  std::vector<int> twists;

  FreeModule() = default;
  explicit FreeModule(std::vector<int> tw) : twists(std::move(tw)) {}

  int rank() const { return static_cast<int>(twists.size()); }
  int min_twist() const;

  FreeModule dual() const {  // Hom(-, R) negates twists
    FreeModule d;
    d.twists.reserve(twists.size());
    for (int a : twists) d.twists.push_back(-a);
    return d;
  }
  FreeModule shifted(int s) const {  // F(s): twists drop by s
    FreeModule d;
    d.twists.reserve(twists.size());
    for (int a : twists) d.twists.push_back(a - s);
    return d;
  }
  FreeModule concat(const FreeModule& o) const {
    FreeModule d = *this;
    d.twists.insert(d.twists.end(), o.twists.begin(), o.twists.end());
    return d;
  }
  bool operator==(const FreeModule& o) const { return twists == o.twists; }
};

// Sparse element of a twisted free module: nonzero components only, sorted by
// component index.
class FreeVector {
 public:
  FreeVector() = default;

  static FreeVector unit(int comp, const Poly& f) {
    FreeVector v;
    if (!f.is_zero()) v.comps_.push_back({comp, f});
    return v;
  }

  bool is_zero() const { return comps_.empty(); }
  const std::vector<std::pair<int, Poly>>& components() const { return comps_; }

  const Poly* component(int j) const {
    for (const auto& [c, f] : comps_)
      if (c == j) return &f;
    return nullptr;
  }

  void set_component(int j, Poly f);

  // Homogeneous degree relative to the ambient twists; nullopt when the
  // element is zero or inhomogeneous.
  std::optional<int> homogeneous_degree(const FreeModule& amb) const;

  FreeVector add(const FreeVector& o, const PolyRing& R) const;
  FreeVector sub(const FreeVector& o, const PolyRing& R) const;
  FreeVector neg(const PolyRing& R) const;
  FreeVector scale(uint32_t c, const PolyRing& R) const;
  FreeVector mul_term(const Monomial& m, uint32_t c, const PolyRing& R) const;
  FreeVector mul(const Poly& f, const PolyRing& R) const;

  bool operator==(const FreeVector& o) const { return comps_ == o.comps_; }
  bool operator!=(const FreeVector& o) const { return !(*this == o); }

  static int cmp(const FreeVector& a, const FreeVector& b, const PolyRing& R);

  std::string str(const PolyRing& R) const;

 private:
  std::vector<std::pair<int, Poly>> comps_;
};

// Module term and the module monomial order. Terms in lower components win
// ties (term-over-position); `split` installs a block order in which every
// term in a component < split dominates every term in a component >= split,
// which is what the elimination-style syzygy computation needs.
struct ModTerm {
  int comp = -1;
  Monomial m;
  uint32_t c = 0;
};

struct ModOrder {
  MonomialOrder mono;
  int split = 0;

  // <0, 0, >0 as (ma, ca) is smaller/equal/greater than (mb, cb)
  int cmp(const Monomial& ma, int ca, const Monomial& mb, int cb) const {
    bool blk_a = ca < split, blk_b = cb < split;
    if (blk_a != blk_b) return blk_a ? 1 : -1;
    int c = mono_cmp(ma, mb, mono);
    if (c) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }
};

// Leading term of v under the given module order; v must be nonzero.
ModTerm lead_term(const FreeVector& v, const ModOrder& ord);

// Rescale so the leading coefficient under ord becomes 1.
FreeVector make_monic(const FreeVector& v, const PolyRing& R, const ModOrder& ord);

}  // namespace p3
