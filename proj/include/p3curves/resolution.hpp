// Minimal graded free resolutions and the invariants read off them: Betti
// twists, Hilbert polynomial, Castelnuovo-Mumford regularity, projective
// dimension, and the second-syzygy construction.
#pragma once

#include "p3curves/presented.hpp"

namespace p3 {

struct FreeResolution {
  PolyRing ring;
  std::vector<FreeModule> modules;  // F_0, ..., F_length
  std::vector<Matrix> maps;         // maps[k] : F_{k+1} -> F_k

  explicit FreeResolution(const PolyRing& R) : ring(R) {}

  int length() const { return static_cast<int>(maps.size()); }
  const std::vector<int>& twists(int k) const { return modules[k].twists; }

  // no nonzero scalar entry anywhere
  bool is_minimal() const;
  // exactness smoke check d_{k} o d_{k+1} = 0, exact arithmetic
  bool composes_to_zero() const;

  // alternating rank sum = generic rank of the resolved module's sheaf
  long long sheaf_rank() const;
};

// Resolution of coker(rel); cached on the module. Length <= 4 and
// deterministic: resolving the same presentation twice gives identical twists.
const FreeResolution& minimal_free_resolution(const PresentedModule& M);

// 6 P(n) = c6[3] n^3 + c6[2] n^2 + c6[1] n + c6[0]
struct HilbertPolynomial {
  std::array<long long, 4> c6{0, 0, 0, 0};

  long long eval(long long n) const {
    long long v6 = ((c6[3] * n + c6[2]) * n + c6[1]) * n + c6[0];
    if (v6 % 6) throw MathError("Hilbert polynomial evaluated to a non-integer");
    return v6 / 6;
  }
  int degree() const {
    for (int k = 3; k >= 0; --k)
      if (c6[k]) return k;
    return -1;  // zero polynomial
  }
  bool is_zero() const { return degree() < 0; }
  bool operator==(const HilbertPolynomial& o) const { return c6 == o.c6; }
};

HilbertPolynomial hilbert_polynomial(const PresentedModule& M);

// max over resolution steps of (twist - homological index); the zero module
// reports a sentinel far below any support
int regularity(const PresentedModule& M);
inline constexpr int kRegularityOfZero = -(1 << 28);

int projective_dimension(const PresentedModule& M);

// degrees [lowest generator twist - 1, regularity + 4]; every "for all n"
// check in the workbench runs over this window
DegreeWindow default_window(const PresentedModule& M);

// minimal generating subset of the submodule generated by cands modulo the
// submodule generated by background (graded Nakayama, degree by degree)
std::vector<FreeVector> prune_generators(const PolyRing& R, const FreeModule& amb,
                                         const std::vector<FreeVector>& cands,
                                         const std::vector<FreeVector>& background = {});

// F = ker(L1 -> L0) for the minimal resolution of a nonzero finite-length
// module, with the exact sequence 0 -> F -> L1 -> L0 -> M -> 0 recorded
struct SecondSyzygy {
  PresentedModule bundle;              // presented as coker(d3)
  FreeModule L1, L0;
  std::vector<FreeVector> embedding;   // generators of F as elements of L1
};

SecondSyzygy second_syzygy(const PresentedModule& M);

}  // namespace p3
