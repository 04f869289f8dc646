#include "p3curves/resolution.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "p3curves/degreewise.hpp"

namespace p3 {

bool FreeResolution::is_minimal() const {
  for (const Matrix& m : maps)
    for (const auto& row : m.a)
      for (const Poly& f : row)
        if (f.is_constant()) return false;
  return true;
}

bool FreeResolution::composes_to_zero() const {
  for (std::size_t k = 0; k + 1 < maps.size(); ++k)
    if (!maps[k].mul(maps[k + 1], ring).is_zero()) return false;
  return true;
}

long long FreeResolution::sheaf_rank() const {
  long long r = 0;
  int sign = 1;
  for (const FreeModule& F : modules) {
    r += sign * F.rank();
    sign = -sign;
  }
  return r;
}

std::vector<FreeVector> prune_generators(const PolyRing& R, const FreeModule& amb,
                                         const std::vector<FreeVector>& cands,
                                         const std::vector<FreeVector>& background) {
  std::vector<FreeVector> nz;
  for (const FreeVector& g : cands)
    if (!g.is_zero()) nz.push_back(g);
  if (nz.empty()) return {};

  std::vector<FreeVector> all = nz;
  all.insert(all.end(), background.begin(), background.end());
  GroebnerBasis full_gb = groebner_basis(R, amb, all);
  GroebnerBasis bg_gb;
  if (!background.empty()) bg_gb = groebner_basis(R, amb, background);

  // group candidates by degree, preserving input order
  std::map<int, std::vector<std::size_t>> by_degree;
  for (std::size_t i = 0; i < nz.size(); ++i)
    by_degree[*nz[i].homogeneous_degree(amb)].push_back(i);

  std::vector<bool> keep(nz.size(), false);
  for (const auto& [d, idxs] : by_degree) {
    FreePiece piece(amb, d);
    EchelonBasis ech(R.field);
    // degree-d part of m * (full submodule)
    DenseMat mn = span_rows(R, full_gb.elems, amb, d, /*proper_multiples_only=*/true);
    for (std::size_t i = 0; i < mn.rows(); ++i) {
      std::vector<uint32_t> row(piece.dim());
      for (int j = 0; j < piece.dim(); ++j) row[j] = mn.at(i, j);
      ech.add(std::move(row));
    }
    // degree-d part of the background submodule
    if (!background.empty()) {
      DenseMat bd = span_rows(R, bg_gb.elems, amb, d, false);
      for (std::size_t i = 0; i < bd.rows(); ++i) {
        std::vector<uint32_t> row(piece.dim());
        for (int j = 0; j < piece.dim(); ++j) row[j] = bd.at(i, j);
        ech.add(std::move(row));
      }
    }
    for (std::size_t i : idxs)
      if (ech.add(piece.coords(nz[i]))) keep[i] = true;
  }

  std::vector<FreeVector> out;
  for (std::size_t i = 0; i < nz.size(); ++i)
    if (keep[i]) out.push_back(nz[i]);
  return out;
}

namespace {

struct Chain {
  std::vector<FreeModule> mods;
  std::vector<Matrix> maps;
};

// Split off the trivial subcomplex spanned by a scalar entry of maps[k]:
// basis j of mods[k+1] maps isomorphically onto basis i of mods[k].
void cancel_unit(Chain& ch, const PolyRing& R, std::size_t k, int i, int j) {
  Matrix& A = ch.maps[k];
  uint32_t c = A.a[i][j].lead().c;
  uint32_t cinv = R.field.inv(c);

  // column operations clear row i; mirrored as row operations on maps[k+1]
  for (int j2 = 0; j2 < A.cols(); ++j2) {
    if (j2 == j || A.a[i][j2].is_zero()) continue;
    Poly lam = A.a[i][j2].scale(cinv, R);
    for (int r = 0; r < A.rows(); ++r)
      A.a[r][j2] = A.a[r][j2].sub(lam.mul(A.a[r][j], R), R);
    if (k + 1 < ch.maps.size()) {
      Matrix& B = ch.maps[k + 1];
      for (int col = 0; col < B.cols(); ++col)
        B.a[j][col] = B.a[j][col].add(lam.mul(B.a[j2][col], R), R);
    }
  }
  // row operations clear column j; mirrored as column operations on maps[k-1]
  for (int i2 = 0; i2 < A.rows(); ++i2) {
    if (i2 == i || A.a[i2][j].is_zero()) continue;
    Poly mu = A.a[i2][j].scale(cinv, R);
    for (int col = 0; col < A.cols(); ++col)
      A.a[i2][col] = A.a[i2][col].sub(mu.mul(A.a[i][col], R), R);
    if (k > 0) {
      Matrix& B = ch.maps[k - 1];
      for (int r = 0; r < B.rows(); ++r)
        B.a[r][i] = B.a[r][i].add(mu.mul(B.a[r][i2], R), R);
    }
  }

  // drop basis i of mods[k] and basis j of mods[k+1]
  A.erase_row(i);
  A.erase_col(j);
  if (k + 1 < ch.maps.size()) ch.maps[k + 1].erase_row(j);
  if (k > 0) ch.maps[k - 1].erase_col(i);
  ch.mods[k].twists.erase(ch.mods[k].twists.begin() + i);
  ch.mods[k + 1].twists.erase(ch.mods[k + 1].twists.begin() + j);
}

void cancel_all_units(Chain& ch, const PolyRing& R) {
  for (;;) {
    bool found = false;
    for (std::size_t k = 0; k < ch.maps.size() && !found; ++k) {
      Matrix& A = ch.maps[k];
      for (int i = 0; i < A.rows() && !found; ++i)
        for (int j = 0; j < A.cols() && !found; ++j)
          if (A.a[i][j].is_constant()) {
            cancel_unit(ch, R, k, i, j);
            found = true;
          }
    }
    if (!found) return;
  }
}

void sort_by_twists(Chain& ch) {
  for (std::size_t k = 0; k < ch.mods.size(); ++k) {
    std::vector<int> perm(ch.mods[k].twists.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
      return ch.mods[k].twists[a] < ch.mods[k].twists[b];
    });
    bool trivial = true;
    for (std::size_t t = 0; t < perm.size(); ++t)
      if (perm[t] != static_cast<int>(t)) trivial = false;
    if (trivial) continue;

    std::vector<int> tw(perm.size());
    for (std::size_t t = 0; t < perm.size(); ++t) tw[t] = ch.mods[k].twists[perm[t]];
    ch.mods[k].twists = tw;
    if (k < ch.maps.size()) {  // rows of maps[k] are indexed by mods[k]
      Matrix& A = ch.maps[k];
      std::vector<std::vector<Poly>> rows(A.rows());
      for (int r = 0; r < A.rows(); ++r) rows[r] = A.a[perm[r]];
      A.a = rows;
    }
    if (k > 0) {  // columns of maps[k-1] are indexed by mods[k]
      Matrix& B = ch.maps[k - 1];
      for (auto& row : B.a) {
        std::vector<Poly> nr(row.size());
        for (std::size_t cidx = 0; cidx < row.size(); ++cidx) nr[cidx] = row[perm[cidx]];
        row = nr;
      }
    }
  }
}

}  // namespace

const FreeResolution& minimal_free_resolution(const PresentedModule& M) {
  if (auto cached = M.cached_resolution()) return *cached;
  const PolyRing& R = M.ring();

  Chain ch;
  ch.mods.push_back(M.gens());
  FreeModule amb = M.gens();
  std::vector<FreeVector> gens = prune_generators(R, amb, M.rel_matrix().columns());

  while (!gens.empty()) {
    std::vector<int> tw;
    for (const FreeVector& g : gens) tw.push_back(*g.homogeneous_degree(amb));
    ch.maps.push_back(Matrix::from_columns(amb.rank(), gens));
    ch.mods.push_back(FreeModule(tw));
    if (ch.maps.size() > 6) throw MathError("resolution failed to terminate");

    SubmoduleOps ops(R, amb, gens);
    std::vector<FreeVector> syz = ops.syzygy_basis();
    amb = ops.syzygy_ambient();
    gens = prune_generators(R, amb, syz);
  }

  cancel_all_units(ch, R);
  // trim trailing zero steps
  while (!ch.maps.empty() && ch.mods.back().rank() == 0) {
    ch.maps.pop_back();
    ch.mods.pop_back();
  }
  sort_by_twists(ch);

  auto res = std::make_shared<FreeResolution>(R);
  res->modules = std::move(ch.mods);
  res->maps = std::move(ch.maps);
  if (!res->is_minimal() || !res->composes_to_zero() || res->length() > 4)
    throw MathError("internal: resolution postcondition failed");
  M.cache_resolution(res);
  return *M.cached_resolution();
}

HilbertPolynomial hilbert_polynomial(const PresentedModule& M) {
  const FreeResolution& res = minimal_free_resolution(M);
  HilbertPolynomial P;
  int sign = 1;
  for (const FreeModule& F : res.modules) {
    for (int a : F.twists) {
      // 6 C(n-a+3, 3) = (n-a+1)(n-a+2)(n-a+3), expanded in n
      long long b = -a;
      long long c0 = (b + 1) * (b + 2) * (b + 3);
      long long c1 = 3 * b * b + 12 * b + 11;
      long long c2 = 3 * (b + 2);
      P.c6[0] += sign * c0;
      P.c6[1] += sign * c1;
      P.c6[2] += sign * c2;
      P.c6[3] += sign;
    }
    sign = -sign;
  }
  return P;
}

int regularity(const PresentedModule& M) {
  const FreeResolution& res = minimal_free_resolution(M);
  if (res.modules[0].rank() == 0) return kRegularityOfZero;
  int reg = kRegularityOfZero;
  for (std::size_t k = 0; k < res.modules.size(); ++k)
    for (int a : res.modules[k].twists)
      reg = std::max(reg, a - static_cast<int>(k));
  return reg;
}

int projective_dimension(const PresentedModule& M) {
  return minimal_free_resolution(M).length();
}

DegreeWindow default_window(const PresentedModule& M) {
  const FreeResolution& res = minimal_free_resolution(M);
  if (res.modules[0].rank() == 0) return DegreeWindow{0, 0};
  return DegreeWindow{res.modules[0].min_twist() - 1, regularity(M) + 4};
}

SecondSyzygy second_syzygy(const PresentedModule& M) {
  const FreeResolution& res = minimal_free_resolution(M);
  if (res.modules[0].rank() == 0) throw MathError("second syzygy of the zero module");
  if (!hilbert_polynomial(M).is_zero())
    throw MathError("second syzygy requires a finite-length module");
  // a nonzero finite-length module over four variables has depth 0, so its
  // minimal resolution has full length
  if (res.length() != 4) throw MathError("internal: finite-length module with pd != 4");

  SecondSyzygy out{
      PresentedModule(M.ring(), res.modules[2], res.modules[3], res.maps[2]),
      res.modules[1], res.modules[0], res.maps[1].columns()};
  return out;
}

}  // namespace p3
