#include "p3curves/cohomology.hpp"

namespace p3 {

PresentedModule ext_module(const PresentedModule& M, int i) {
  if (i < 0 || i > 4) throw MathError("Ext index out of range 0..4");
  const PolyRing& R = M.ring();
  const FreeResolution& res = minimal_free_resolution(M);
  if (i > res.length()) return PresentedModule::zero(R);

  FreeModule Ui = res.modules[i].dual();

  // generators: kernel of d_{i+1}^T : U_i -> U_{i+1} (everything when i = pd)
  std::vector<FreeVector> K;
  if (i == res.length()) {
    for (int j = 0; j < Ui.rank(); ++j)
      K.push_back(FreeVector::unit(j, Poly::constant(1, R)));
  } else {
    FreeModule Un = res.modules[i + 1].dual();
    K = module_kernel(R, Ui, Un, res.maps[i].transpose()).embedding;
  }

  // relations: coefficients lambda with sum lambda_l K_l inside im(d_i^T)
  std::vector<FreeVector> B;
  if (i >= 1)
    for (const FreeVector& c : res.maps[i - 1].transpose().columns()) B.push_back(c);

  if (K.empty()) return PresentedModule::zero(R);
  return subquotient_presentation(R, Ui, K, B);
}

bool is_zero_module(const PresentedModule& M) {
  return minimal_free_resolution(M).modules[0].rank() == 0;
}

bool is_finite_length(const PresentedModule& M) {
  return hilbert_polynomial(M).is_zero();
}

bool sheaf_pd_at_most_one(const PresentedModule& M) {
  for (int i = 2; i <= 4; ++i)
    if (!is_finite_length(ext_module(M, i))) return false;
  return true;
}

bool sheaf_locally_free(const PresentedModule& M) {
  for (int i = 1; i <= 4; ++i)
    if (!is_finite_length(ext_module(M, i))) return false;
  return true;
}

bool h2_star_vanishes(const PresentedModule& M) {
  return is_zero_module(ext_module(M, 1));
}

long long sheaf_c1(const FreeResolution& res) {
  long long c1 = 0;
  int sign = 1;
  for (const FreeModule& F : res.modules) {
    for (int a : F.twists) c1 -= sign * a;
    sign = -sign;
  }
  return c1;
}

CohomologyTable sheaf_cohomology_table(const PresentedModule& M, const DegreeWindow& w) {
  if (w.hi < w.lo) throw MathError("empty cohomology window");
  if (w.hi - w.lo > 200) throw MathError("cohomology window exceeds the size cap");
  CohomologyTable t;
  t.window = w;
  const FreeResolution& res = minimal_free_resolution(M);
  t.sheaf_rank = res.sheaf_rank();
  t.c1 = sheaf_c1(res);

  std::vector<PresentedModule> ext;
  for (int i = 0; i <= 4; ++i) ext.push_back(ext_module(M, i));

  for (int n = w.lo; n <= w.hi; ++n) {
    long long h0 = M.hilbert_dim(n) - ext[4].hilbert_dim(-n - 4) + ext[3].hilbert_dim(-n - 4);
    t.h[0].push_back(h0);
    t.h[1].push_back(ext[2].hilbert_dim(-n - 4));
    t.h[2].push_back(ext[1].hilbert_dim(-n - 4));
    t.h[3].push_back(ext[0].hilbert_dim(-n - 4));
  }
  for (int i = 0; i < 4; ++i)
    for (long long v : t.h[i])
      if (v < 0) throw MathError("internal: negative cohomology dimension");
  return t;
}

CohomologyTable sheaf_cohomology_table(const PresentedModule& M) {
  return sheaf_cohomology_table(M, default_window(M));
}

FiniteLengthModule h1_star_module(const PresentedModule& M) {
  PresentedModule E2 = ext_module(M, 2);
  if (!is_finite_length(E2))
    throw MathError("H^1_* is not finite length for this module");
  return graded_dual(finite_length_realization(E2).shifted(-4));
}

}  // namespace p3
