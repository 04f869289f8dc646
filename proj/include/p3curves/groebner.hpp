// Buchberger engine for homogeneous submodules of twisted free modules,
// with syzygies and membership lifting via an elimination block order,
// plus the rank-one ideal operations (quotient, saturation) built on it.
#pragma once

#include <optional>

#include "p3curves/freemod.hpp"

namespace p3 {

// Reduced canonical Groebner basis: interreduced, monic, sorted by leading
// term. For a fixed submodule and ring this form is unique, so permuting or
// rescaling input generators yields the identical object.
struct GroebnerBasis {
  FreeModule ambient;
  std::vector<FreeVector> elems;
  // block split of the order the basis was computed under; normal forms must
  // reduce under the same order
  int split = 0;

  bool operator==(const GroebnerBasis& o) const {
    return ambient == o.ambient && elems == o.elems && split == o.split;
  }
};

struct BuchbergerOptions {
  // degree-truncated run: S-pairs of degree > cap are dropped and the result
  // is only a basis "up to degree cap"; full run when unset
  std::optional<int> degree_cap;
  int split = 0;  // block order split for elimination
};

GroebnerBasis groebner_basis(const PolyRing& R, const FreeModule& amb,
                             const std::vector<FreeVector>& gens,
                             const BuchbergerOptions& opt = {});

// Full normal form (leading and tail terms) against a monic basis.
FreeVector normal_form(const PolyRing& R, const FreeVector& f, const GroebnerBasis& gb);

bool submodule_contains(const PolyRing& R, const FreeVector& f, const GroebnerBasis& gb);

// Syzygy/lifting context for a fixed generating set. Holds the Groebner basis
// of {(g_i, e_i)} under the block order in which the original components
// dominate the bookkeeping ones.
class SubmoduleOps {
 public:
  // gen_twists, when given, fixes the degree slot of each generator; required
  // to match the actual degree of every nonzero generator, and it is what
  // keeps zero generators (e.g. zero matrix columns) correctly graded
  SubmoduleOps(const PolyRing& R, FreeModule amb, std::vector<FreeVector> gens,
               const std::vector<int>* gen_twists = nullptr);

  const FreeModule& ambient() const { return amb_; }
  const std::vector<FreeVector>& gens() const { return gens_; }
  // ambient of the syzygy module: one component per generator, twist = deg g_i
  const FreeModule& syzygy_ambient() const { return syz_amb_; }

  bool contains(const FreeVector& f) const;
  // coefficients c with f = sum c_i g_i; nullopt when f is not a member
  std::optional<std::vector<Poly>> lift(const FreeVector& f) const;
  // reduced canonical GB of the module of syzygies of the generators
  const std::vector<FreeVector>& syzygy_basis() const { return syz_; }

 private:
  PolyRing R_;
  FreeModule amb_, ext_amb_, syz_amb_;
  std::vector<FreeVector> gens_;
  GroebnerBasis ext_gb_;
  std::vector<FreeVector> syz_;
};

// ---- rank-one (ideal) conveniences ----

FreeVector to_vector(const Poly& f);
Poly to_poly(const FreeVector& v);

GroebnerBasis ideal_gb(const PolyRing& R, const std::vector<Poly>& gens);
std::vector<Poly> gb_polys(const GroebnerBasis& gb);
bool ideal_contains(const PolyRing& R, const GroebnerBasis& I, const Poly& f);

// (I : J) = { f : f*J inside I }
GroebnerBasis ideal_quotient(const PolyRing& R, const GroebnerBasis& I,
                             const std::vector<Poly>& J);

// (I : J^infinity) as the stabilization of iterated quotients
GroebnerBasis saturate(const PolyRing& R, const GroebnerBasis& I,
                       const std::vector<Poly>& J);
GroebnerBasis saturate(const PolyRing& R, const GroebnerBasis& I);  // J = (X,Y,Z,T)

}  // namespace p3
