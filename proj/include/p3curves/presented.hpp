// Graded modules given by a presentation F1 -> F0 -> M -> 0 between twisted
// free modules, and degree-zero maps between them.
#pragma once

#include <memory>
#include <mutex>

#include "p3curves/groebner.hpp"

namespace p3 {

// Homogeneous matrix, row-major: entry (i,j) is the component of the image of
// source basis vector j along target basis vector i, of degree
// src_twist[j] - dst_twist[i].
struct Matrix {
  std::vector<std::vector<Poly>> a;
  // tracked explicitly so degenerate shapes (zero rows) keep their width
  int ncols = 0;

  Matrix() = default;
  Matrix(int rows, int cols) : a(rows, std::vector<Poly>(cols)), ncols(cols) {}

  int rows() const { return static_cast<int>(a.size()); }
  int cols() const { return ncols; }

  static Matrix from_columns(int rows, const std::vector<FreeVector>& cols);
  static Matrix identity(int n, const PolyRing& R);

  FreeVector column(int j) const;
  std::vector<FreeVector> columns() const;

  Matrix mul(const Matrix& o, const PolyRing& R) const;
  FreeVector apply(const FreeVector& v, const PolyRing& R) const;  // matrix * column
  Matrix transpose() const;
  Matrix neg(const PolyRing& R) const;
  // [this | o] side by side (same row count)
  Matrix concat_cols(const Matrix& o) const;
  // [this ; o] stacked (same column count)
  Matrix concat_rows(const Matrix& o) const;
  void erase_row(int i);
  void erase_col(int j);
  bool is_zero() const;

  bool operator==(const Matrix& o) const { return ncols == o.ncols && a == o.a; }
};

struct DegreeWindow {
  int lo = 0, hi = 0;
  bool contains(int n) const { return lo <= n && n <= hi; }
};

struct FreeResolution;  // resolution.hpp

// Immutable module-with-presentation M = coker(rel: F1 -> F0). Caches are
// mutex-guarded and shared across copies, so values stay cheap to pass around
// and safe for concurrent use.
class PresentedModule {
 public:
  PresentedModule() : PresentedModule(PolyRing(), FreeModule(), FreeModule(), Matrix()) {}
  PresentedModule(const PolyRing& R, FreeModule gens, FreeModule rels, Matrix rel);

  static PresentedModule zero(const PolyRing& R);
  static PresentedModule free_module(const PolyRing& R, FreeModule F0);
  // R/I for an ideal
  static PresentedModule quotient_by_ideal(const PolyRing& R, const std::vector<Poly>& gens);
  // the ideal I itself as a module (generators in their degrees, relations =
  // their syzygies); its sheafification is the ideal sheaf
  static PresentedModule ideal_module(const PolyRing& R, const std::vector<Poly>& gens);
  // submodule of a free module presented by its generators + their syzygies
  static PresentedModule submodule(const PolyRing& R, const FreeModule& amb,
                                   const std::vector<FreeVector>& gens);

  const PolyRing& ring() const { return ring_; }
  const FreeModule& gens() const { return gens_; }
  const FreeModule& rels() const { return rels_; }
  const Matrix& rel_matrix() const { return rel_; }

  bool is_zero_module() const { return gens_.rank() == 0; }

  PresentedModule shifted(int s) const;  // M(s)
  static PresentedModule direct_sum(const PresentedModule& a, const PresentedModule& b);

  // Groebner basis of the relation image inside F0 (lazy, shared)
  const GroebnerBasis& relations_gb() const;
  // lifting context for the relation columns (lazy, shared)
  const SubmoduleOps& relations_ops() const;

  // dim_k M_n by counting standard monomials against relations_gb
  long long hilbert_dim(int n) const;
  std::vector<long long> hilbert_function(const DegreeWindow& w) const;

  // resolution cache slot used by minimal_free_resolution
  std::shared_ptr<const FreeResolution> cached_resolution() const;
  void cache_resolution(std::shared_ptr<const FreeResolution> r) const;

 private:
  PolyRing ring_;
  FreeModule gens_, rels_;
  Matrix rel_;

  struct Memo {
    std::mutex mu;
    std::shared_ptr<const GroebnerBasis> image_gb;
    std::shared_ptr<const SubmoduleOps> image_ops;
    std::shared_ptr<const FreeResolution> res;
  };
  std::shared_ptr<Memo> memo_;
};

// kernel of a homogeneous map between twisted free modules, as a presented
// module together with its generators embedded in the source
struct KernelData {
  PresentedModule module;
  std::vector<FreeVector> embedding;  // generator k as an element of the source
};
KernelData module_kernel(const PolyRing& R, const FreeModule& src, const FreeModule& dst,
                         const Matrix& phi);

// Degree-zero map of presented modules, given on generators. Well-definedness
// (relations map into relations) is Groebner-certified on construction, which
// also produces the lift phi1 with dst_rel o phi1 = phi0 o src_rel.
class GradedMap {
 public:
  GradedMap() = default;  // zero map between zero modules
  GradedMap(PresentedModule src, PresentedModule dst, Matrix phi0);

  static GradedMap zero_map(const PresentedModule& src, const PresentedModule& dst);
  static GradedMap identity(const PresentedModule& m);

  const PresentedModule& src() const { return src_; }
  const PresentedModule& dst() const { return dst_; }
  const Matrix& gen_matrix() const { return phi0_; }
  const Matrix& rel_lift() const { return phi1_; }

 private:
  PresentedModule src_, dst_;
  Matrix phi0_, phi1_;
};

// presentation of (<gens> + <background>) / <background> inside the ambient
// free module: generators are the given gens, relations are the coefficient
// vectors landing in the background submodule
PresentedModule subquotient_presentation(const PolyRing& R, const FreeModule& amb,
                                         const std::vector<FreeVector>& gens,
                                         const std::vector<FreeVector>& background);

// kernel of a map of presented modules, with its generators written in the
// source generator cover
struct SubmoduleInCover {
  PresentedModule mod;
  std::vector<FreeVector> cover_gens;
};
SubmoduleInCover kernel_of_graded_map(const GradedMap& f);

// standard monomial basis of M_n against the relation leading terms
std::vector<std::pair<int, Monomial>> standard_basis(const PresentedModule& M, int n);

// dense matrix of the induced map M_n -> N_n in the standard monomial bases
DenseMat induced_matrix(const GradedMap& f, int n);

}  // namespace p3
