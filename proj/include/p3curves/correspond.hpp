// The sheaf-to-module dictionary: pseudo-isomorphism checking through induced
// Ext maps, the cone construction, the Horrocks-style extension killing
// Ext^1, and stable equivalence decided through H^1_*.
#pragma once

#include "p3curves/cohomology.hpp"

namespace p3 {

struct PsiReport {
  bool src_pd_ok = false, dst_pd_ok = false;
  // (i) induced H^0 iso in low degrees: both vanish strictly below this bound
  int low_degree_bound = 0;
  bool cond_i = false;
  // (ii) induced H^1_* map bijective in every degree (checked on the exact
  // finite support of Ext^2 against R)
  bool cond_ii = false;
  // (iii) induced H^2_* map injective, decided as surjectivity of the induced
  // map Ext^1(dst, R) -> Ext^1(src, R)
  bool cond_iii = false;
  std::string detail;

  bool is_psi() const { return src_pd_ok && dst_pd_ok && cond_i && cond_ii && cond_iii; }
};

PsiReport is_pseudo_isomorphism(const GradedMap& f);

// 0 -> sub -> mid -> quot -> 0 with degreewise exactness certificates
struct ExactTriple {
  PresentedModule sub, mid, quot;
  GradedMap inj, surj;
  // set by psi_cone: the kernel is free as a module (holds whenever the
  // source has depth >= 2; the sheaf-level dissocie certificate always holds)
  bool sub_module_free = false;
};

// checks injectivity, surjectivity, composition zero and Hilbert additivity
// degreewise over the window
bool verify_exact_triple(const ExactTriple& t, const DegreeWindow& w);

// Cone of a certified psi f: builds a free cover L of coker(f) and returns
// 0 -> L' -> L + src -> dst -> 0. L' is certified dissocie at sheaf level:
// H^1_* = H^2_* = 0 and all positive Ext against R finite length, which pins
// the sheaf as a twist sum; when the source module has depth >= 2 the kernel
// module itself is free and sub_module_free reports it.
ExactTriple psi_cone(const GradedMap& f, const PsiReport& cert);

// Extension 0 -> L -> F -> N -> 0 with Ext^1(F, R) = 0, built from a minimal
// free cover of Ext^1(N, R). The quotient is N in its minimized presentation.
struct HorrocksExtension {
  ExactTriple triple;
  const PresentedModule& bundle() const { return triple.mid; }
};
HorrocksExtension horrocks_extension(const PresentedModule& N);

struct EquivalenceVerdict {
  bool preconditions_ok = false;
  IsoVerdict iso;
  std::string detail;
  bool equivalent() const { return preconditions_ok && iso.is_iso(); }
};

// F ~ F' iff H^1_* of the sheafifications are isomorphic with no shift;
// requires both locally free with H^2_* = 0
EquivalenceVerdict stably_equivalent(const PresentedModule& F, const PresentedModule& G,
                                     uint64_t seed = 1);

}  // namespace p3
