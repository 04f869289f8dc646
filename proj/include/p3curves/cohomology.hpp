// Ext modules against R, sheaf cohomology tables via graded local duality
// (Ext^j(M, R(-4)) dualized), and the finite-length H^1_* functor.
#pragma once

#include "p3curves/finitelength.hpp"
#include "p3curves/resolution.hpp"

namespace p3 {

// Ext^i_R(M, R) presented from the dualized minimal resolution:
// ker(d_{i+1}^T) modulo im(d_i^T).
PresentedModule ext_module(const PresentedModule& M, int i);

bool is_zero_module(const PresentedModule& M);
bool is_finite_length(const PresentedModule& M);

// sheafification certificates, all in terms of finite-length Ext against R
bool sheaf_pd_at_most_one(const PresentedModule& M);  // Ext^i finite length, i >= 2
bool sheaf_locally_free(const PresentedModule& M);    // additionally Ext^1 finite length
bool h2_star_vanishes(const PresentedModule& M);      // Ext^1(M, R) = 0

struct CohomologyTable {
  DegreeWindow window;
  std::array<std::vector<long long>, 4> h;  // h[i][n - window.lo] = h^i(M~(n))
  long long sheaf_rank = 0;
  long long c1 = 0;

  long long at(int i, int n) const {
    if (i < 0 || i > 3 || !window.contains(n)) throw MathError("table entry out of range");
    return h[i][n - window.lo];
  }
  long long euler(int n) const { return at(0, n) - at(1, n) + at(2, n) - at(3, n); }
  bool operator==(const CohomologyTable& o) const {
    return window.lo == o.window.lo && window.hi == o.window.hi && h == o.h;
  }
};

// Full h^i table of the sheafification on the window:
//   h^0(M~(n)) = dim M_n - dim Ext^4(M,R)_{-n-4} + dim Ext^3(M,R)_{-n-4}
//   h^i(M~(n)) = dim Ext^{3-i}(M,R)_{-n-4}            for i = 1, 2, 3
CohomologyTable sheaf_cohomology_table(const PresentedModule& M, const DegreeWindow& w);
CohomologyTable sheaf_cohomology_table(const PresentedModule& M);  // default window

// H^1_*(M~) = (Ext^2(M,R)(-4))^dual as a finite-length module with operators;
// requires Ext^2(M,R) to be finite length
FiniteLengthModule h1_star_module(const PresentedModule& M);

// first Chern class of the sheafified module, off the resolution twists
long long sheaf_c1(const FreeResolution& res);

}  // namespace p3
