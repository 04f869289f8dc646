#include "p3curves/presented.hpp"

#include "p3curves/degreewise.hpp"

namespace p3 {

Matrix Matrix::from_columns(int rows, const std::vector<FreeVector>& cols) {
  Matrix m(rows, static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [c, f] : cols[j].components()) {
      if (c >= rows) throw MathError("column exceeds row count");
      m.a[static_cast<std::size_t>(c)][j] = f;
    }
  return m;
}

Matrix Matrix::identity(int n, const PolyRing& R) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.a[i][i] = Poly::constant(1, R);
  return m;
}

FreeVector Matrix::column(int j) const {
  FreeVector v;
  for (int i = 0; i < rows(); ++i)
    if (!a[i][j].is_zero()) v.set_component(i, a[i][j]);
  return v;
}

std::vector<FreeVector> Matrix::columns() const {
  std::vector<FreeVector> out;
  out.reserve(cols());
  for (int j = 0; j < cols(); ++j) out.push_back(column(j));
  return out;
}

Matrix Matrix::mul(const Matrix& o, const PolyRing& R) const {
  if (cols() != o.rows()) throw MathError("matrix size mismatch");
  Matrix r(rows(), o.cols());
  for (int i = 0; i < rows(); ++i)
    for (int k = 0; k < cols(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < o.cols(); ++j) {
        if (o.a[k][j].is_zero()) continue;
        r.a[i][j] = r.a[i][j].add(a[i][k].mul(o.a[k][j], R), R);
      }
    }
  return r;
}

FreeVector Matrix::apply(const FreeVector& v, const PolyRing& R) const {
  FreeVector out;
  for (const auto& [j, f] : v.components()) {
    if (j >= cols()) throw MathError("vector component exceeds matrix columns");
    for (int i = 0; i < rows(); ++i) {
      if (a[i][j].is_zero()) continue;
      FreeVector t = FreeVector::unit(i, a[i][j].mul(f, R));
      out = out.add(t, R);
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix r(cols(), rows());
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) r.a[j][i] = a[i][j];
  return r;
}

void Matrix::erase_row(int i) { a.erase(a.begin() + i); }

void Matrix::erase_col(int j) {
  for (auto& row : a) row.erase(row.begin() + j);
  --ncols;
}

Matrix Matrix::neg(const PolyRing& R) const {
  Matrix r = *this;
  for (auto& row : r.a)
    for (Poly& f : row) f = f.neg(R);
  return r;
}

Matrix Matrix::concat_cols(const Matrix& o) const {
  if (rows() != o.rows()) throw MathError("row count mismatch");
  Matrix r = *this;
  for (int i = 0; i < rows(); ++i)
    r.a[i].insert(r.a[i].end(), o.a[i].begin(), o.a[i].end());
  r.ncols += o.ncols;
  return r;
}

Matrix Matrix::concat_rows(const Matrix& o) const {
  if (cols() != o.cols()) throw MathError("column count mismatch");
  Matrix r = *this;
  r.a.insert(r.a.end(), o.a.begin(), o.a.end());
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& row : a)
    for (const Poly& f : row)
      if (!f.is_zero()) return false;
  return true;
}

PresentedModule::PresentedModule(const PolyRing& R, FreeModule gens, FreeModule rels,
                                 Matrix rel)
    : ring_(R),
      gens_(std::move(gens)),
      rels_(std::move(rels)),
      rel_(std::move(rel)),
      memo_(std::make_shared<Memo>()) {
  if (rel_.rows() != gens_.rank() || rel_.cols() != rels_.rank())
    throw MathError("presentation matrix shape does not match twist lists");
  for (int i = 0; i < rel_.rows(); ++i)
    for (int j = 0; j < rel_.cols(); ++j) {
      const Poly& f = rel_.a[i][j];
      if (f.is_zero()) continue;
      if (!f.is_homogeneous() || f.degree() != rels_.twists[j] - gens_.twists[i])
        throw MathError("presentation entry is not homogeneous of the required degree");
    }
}

PresentedModule PresentedModule::zero(const PolyRing& R) {
  return PresentedModule(R, FreeModule(), FreeModule(), Matrix(0, 0));
}

PresentedModule PresentedModule::free_module(const PolyRing& R, FreeModule F0) {
  int r = F0.rank();
  return PresentedModule(R, std::move(F0), FreeModule(), Matrix(r, 0));
}

PresentedModule PresentedModule::quotient_by_ideal(const PolyRing& R,
                                                   const std::vector<Poly>& gens) {
  std::vector<int> rel_tw;
  Matrix m(1, 0);
  for (const Poly& f : gens) {
    if (f.is_zero()) continue;
    if (!f.is_homogeneous()) throw MathError("ideal generators must be homogeneous");
    rel_tw.push_back(f.degree());
    m.a[0].push_back(f);
  }
  return PresentedModule(R, FreeModule({0}), FreeModule(rel_tw), m);
}

PresentedModule PresentedModule::submodule(const PolyRing& R, const FreeModule& amb,
                                           const std::vector<FreeVector>& gens) {
  std::vector<FreeVector> nz;
  for (const FreeVector& g : gens)
    if (!g.is_zero()) nz.push_back(g);
  SubmoduleOps ops(R, amb, nz);
  const std::vector<FreeVector>& syz = ops.syzygy_basis();
  FreeModule F0 = ops.syzygy_ambient();
  std::vector<int> rel_tw;
  for (const FreeVector& s : syz) rel_tw.push_back(*s.homogeneous_degree(F0));
  return PresentedModule(R, F0, FreeModule(rel_tw),
                         Matrix::from_columns(F0.rank(), syz));
}

PresentedModule PresentedModule::ideal_module(const PolyRing& R,
                                              const std::vector<Poly>& gens) {
  std::vector<FreeVector> v;
  for (const Poly& f : gens)
    if (!f.is_zero()) v.push_back(to_vector(f));
  return submodule(R, FreeModule({0}), v);
}

PresentedModule PresentedModule::shifted(int s) const {
  return PresentedModule(ring_, gens_.shifted(s), rels_.shifted(s), rel_);
}

PresentedModule PresentedModule::direct_sum(const PresentedModule& a,
                                            const PresentedModule& b) {
  if (!(a.ring_ == b.ring_)) throw MathError("direct sum requires matching rings");
  FreeModule g = a.gens_.concat(b.gens_);
  FreeModule r = a.rels_.concat(b.rels_);
  Matrix m(g.rank(), r.rank());
  for (int i = 0; i < a.rel_.rows(); ++i)
    for (int j = 0; j < a.rel_.cols(); ++j) m.a[i][j] = a.rel_.a[i][j];
  for (int i = 0; i < b.rel_.rows(); ++i)
    for (int j = 0; j < b.rel_.cols(); ++j)
      m.a[a.gens_.rank() + i][a.rels_.rank() + j] = b.rel_.a[i][j];
  return PresentedModule(a.ring_, std::move(g), std::move(r), std::move(m));
}

const GroebnerBasis& PresentedModule::relations_gb() const {
  std::lock_guard<std::mutex> lk(memo_->mu);
  if (!memo_->image_gb)
    memo_->image_gb = std::make_shared<GroebnerBasis>(
        groebner_basis(ring_, gens_, rel_.columns()));
  return *memo_->image_gb;
}

const SubmoduleOps& PresentedModule::relations_ops() const {
  std::lock_guard<std::mutex> lk(memo_->mu);
  if (!memo_->image_ops)
    memo_->image_ops = std::make_shared<SubmoduleOps>(ring_, gens_, rel_.columns());
  return *memo_->image_ops;
}

long long PresentedModule::hilbert_dim(int n) const {
  return static_cast<long long>(standard_basis(*this, n).size());
}

std::vector<long long> PresentedModule::hilbert_function(const DegreeWindow& w) const {
  std::vector<long long> out;
  for (int n = w.lo; n <= w.hi; ++n) out.push_back(hilbert_dim(n));
  return out;
}

std::shared_ptr<const FreeResolution> PresentedModule::cached_resolution() const {
  std::lock_guard<std::mutex> lk(memo_->mu);
  return memo_->res;
}

void PresentedModule::cache_resolution(std::shared_ptr<const FreeResolution> r) const {
  std::lock_guard<std::mutex> lk(memo_->mu);
  if (!memo_->res) memo_->res = std::move(r);
}

KernelData module_kernel(const PolyRing& R, const FreeModule& src, const FreeModule& dst,
                         const Matrix& phi) {
  if (phi.rows() != dst.rank() || phi.cols() != src.rank())
    throw MathError("kernel: matrix shape does not match modules");
  // homogeneity check with the declared twists
  for (int i = 0; i < phi.rows(); ++i)
    for (int j = 0; j < phi.cols(); ++j) {
      const Poly& f = phi.a[i][j];
      if (f.is_zero()) continue;
      if (!f.is_homogeneous() || f.degree() != src.twists[j] - dst.twists[i])
        throw MathError("kernel: matrix entry of wrong degree");
    }
  SubmoduleOps ops(R, dst, phi.columns(), &src.twists);
  // syzygies of the columns are exactly the kernel elements, written in the
  // source basis; the bookkeeping twists agree with src by homogeneity
  std::vector<FreeVector> ker_gens = ops.syzygy_basis();
  PresentedModule mod = PresentedModule::submodule(R, src, ker_gens);
  return KernelData{std::move(mod), std::move(ker_gens)};
}

GradedMap::GradedMap(PresentedModule src, PresentedModule dst, Matrix phi0)
    : src_(std::move(src)), dst_(std::move(dst)), phi0_(std::move(phi0)) {
  const PolyRing& R = src_.ring();
  if (!(R == dst_.ring())) throw MathError("map between modules over different rings");
  if (phi0_.rows() != dst_.gens().rank() || phi0_.cols() != src_.gens().rank())
    throw MathError("map matrix shape mismatch");
  for (int i = 0; i < phi0_.rows(); ++i)
    for (int j = 0; j < phi0_.cols(); ++j) {
      const Poly& f = phi0_.a[i][j];
      if (f.is_zero()) continue;
      if (!f.is_homogeneous() ||
          f.degree() != src_.gens().twists[j] - dst_.gens().twists[i])
        throw MathError("map entry is not homogeneous of degree zero");
    }
  // well-definedness: each relation of the source maps into the relation
  // submodule of the target; the lifts assemble phi1
  Matrix img = phi0_.mul(src_.rel_matrix(), R);
  phi1_ = Matrix(dst_.rels().rank(), src_.rels().rank());
  const SubmoduleOps& ops = dst_.relations_ops();
  for (int j = 0; j < img.cols(); ++j) {
    auto lift = ops.lift(img.column(j));
    if (!lift)
      throw MathError("map is not well defined: a relation does not map into relations");
    for (int i = 0; i < phi1_.rows(); ++i) phi1_.a[i][j] = (*lift)[i];
  }
}

GradedMap GradedMap::zero_map(const PresentedModule& src, const PresentedModule& dst) {
  return GradedMap(src, dst, Matrix(dst.gens().rank(), src.gens().rank()));
}

GradedMap GradedMap::identity(const PresentedModule& m) {
  return GradedMap(m, m, Matrix::identity(m.gens().rank(), m.ring()));
}

PresentedModule subquotient_presentation(const PolyRing& R, const FreeModule& amb,
                                         const std::vector<FreeVector>& gens,
                                         const std::vector<FreeVector>& background) {
  std::vector<int> gen_tw;
  for (const FreeVector& g : gens) {
    auto d = g.homogeneous_degree(amb);
    if (!d) throw MathError("subquotient generators must be nonzero homogeneous");
    gen_tw.push_back(*d);
  }
  FreeModule F0(gen_tw);
  std::vector<FreeVector> all = gens;
  all.insert(all.end(), background.begin(), background.end());
  SubmoduleOps ops(R, amb, all);
  std::vector<FreeVector> rels;
  for (const FreeVector& s : ops.syzygy_basis()) {
    FreeVector lam;
    for (const auto& [c, f] : s.components())
      if (c < static_cast<int>(gens.size())) lam.set_component(c, f);
    if (!lam.is_zero()) rels.push_back(lam);
  }
  std::vector<int> rel_tw;
  for (const FreeVector& r : rels) rel_tw.push_back(*r.homogeneous_degree(F0));
  return PresentedModule(R, F0, FreeModule(rel_tw),
                         Matrix::from_columns(F0.rank(), rels));
}

SubmoduleInCover kernel_of_graded_map(const GradedMap& f) {
  const PolyRing& R = f.src().ring();
  const FreeModule& FA0 = f.src().gens();
  // preimage of the target relation submodule: first-block projections of the
  // syzygies of [phi0 | dst relations]
  std::vector<FreeVector> cols = f.gen_matrix().columns();
  std::vector<int> tw = FA0.twists;
  std::vector<FreeVector> dn = f.dst().rel_matrix().columns();
  for (const FreeVector& c : dn) cols.push_back(c);
  for (int t : f.dst().rels().twists) tw.push_back(t);
  SubmoduleOps ops(R, f.dst().gens(), cols, &tw);
  std::vector<FreeVector> pre;
  for (const FreeVector& s : ops.syzygy_basis()) {
    FreeVector a;
    for (const auto& [c, g] : s.components())
      if (c < FA0.rank()) a.set_component(c, g);
    if (!a.is_zero()) pre.push_back(a);
  }
  PresentedModule mod =
      subquotient_presentation(R, FA0, pre, f.src().rel_matrix().columns());
  return SubmoduleInCover{std::move(mod), std::move(pre)};
}

std::vector<std::pair<int, Monomial>> standard_basis(const PresentedModule& M, int n) {
  const GroebnerBasis& gb = M.relations_gb();
  ModOrder ord{M.ring().order, 0};
  std::vector<std::pair<int, Monomial>> out;
  for (int j = 0; j < M.gens().rank(); ++j) {
    int d = n - M.gens().twists[j];
    if (d < 0) continue;
    for (const Monomial& m : monomials_of_degree(d)) {
      bool in_lead = false;
      for (const FreeVector& g : gb.elems) {
        ModTerm lt = lead_term(g, ord);
        if (lt.comp == j && lt.m.divides(m)) {
          in_lead = true;
          break;
        }
      }
      if (!in_lead) out.push_back({j, m});
    }
  }
  return out;
}

DenseMat induced_matrix(const GradedMap& f, int n) {
  const PolyRing& R = f.src().ring();
  std::vector<std::pair<int, Monomial>> sb = standard_basis(f.src(), n);
  std::vector<std::pair<int, Monomial>> db = standard_basis(f.dst(), n);
  const GroebnerBasis& dgb = f.dst().relations_gb();
  DenseMat m(db.size(), sb.size());
  for (std::size_t j = 0; j < sb.size(); ++j) {
    FreeVector img = f.gen_matrix().apply(
        FreeVector::unit(sb[j].first, Poly::term(sb[j].second, 1, R)), R);
    FreeVector nf = normal_form(R, img, dgb);
    for (const auto& [c, g] : nf.components())
      for (const Term& t : g.terms()) {
        int i = -1;
        for (std::size_t k = 0; k < db.size(); ++k)
          if (db[k].first == c && db[k].second == t.m) {
            i = static_cast<int>(k);
            break;
          }
        if (i < 0) throw MathError("internal: image term outside the standard basis");
        m.at(static_cast<std::size_t>(i), j) = t.c;
      }
  }
  return m;
}

}  // namespace p3
