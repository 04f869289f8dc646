#include "p3curves/finitelength.hpp"

#include <algorithm>
#include <random>

#include "p3curves/degreewise.hpp"
#include "p3curves/resolution.hpp"

namespace p3 {

FiniteLengthModule::FiniteLengthModule(uint32_t p, int lo, std::vector<int> dims,
                                       std::array<std::vector<DenseMat>, kNumVars> ops)
    : p_(p), lo_(lo), dims_(std::move(dims)), ops_(std::move(ops)) {
  trim();
  validate();
}

void FiniteLengthModule::trim() {
  while (!dims_.empty() && dims_.back() == 0) {
    dims_.pop_back();
    for (int v = 0; v < kNumVars; ++v)
      if (ops_[v].size() >= dims_.size() + 1) ops_[v].pop_back();
  }
  while (!dims_.empty() && dims_.front() == 0) {
    dims_.erase(dims_.begin());
    ++lo_;
    for (int v = 0; v < kNumVars; ++v)
      if (!ops_[v].empty()) ops_[v].erase(ops_[v].begin());
  }
  if (dims_.empty()) {
    lo_ = 0;
    for (int v = 0; v < kNumVars; ++v) ops_[v].clear();
  }
  for (int v = 0; v < kNumVars; ++v)
    ops_[v].resize(dims_.empty() ? 0 : dims_.size() - 1);
}

void FiniteLengthModule::validate() const {
  Fp F(p_);
  int len = static_cast<int>(dims_.size());
  for (int v = 0; v < kNumVars; ++v)
    for (int i = 0; i + 1 < len; ++i)
      if (static_cast<int>(ops_[v][i].rows()) != dims_[i + 1] ||
          static_cast<int>(ops_[v][i].cols()) != dims_[i])
        throw MathError("operator block size mismatch");
  // operators pairwise commute
  for (int v = 0; v < kNumVars; ++v)
    for (int w = v + 1; w < kNumVars; ++w)
      for (int i = 0; i + 2 < len; ++i)
        if (!(ops_[w][i + 1].mul(ops_[v][i], F) == ops_[v][i + 1].mul(ops_[w][i], F)))
          throw MathError("multiplication operators do not commute");
}

long long FiniteLengthModule::total_dim() const {
  long long t = 0;
  for (int d : dims_) t += d;
  return t;
}

DenseMat FiniteLengthModule::op_at(int v, int n) const {
  int i = n - lo_;
  int len = static_cast<int>(dims_.size());
  if (i >= 0 && i + 1 < len) return ops_[v][i];
  return DenseMat(static_cast<std::size_t>(dim_at(n + 1)), static_cast<std::size_t>(dim_at(n)));
}

FiniteLengthModule FiniteLengthModule::shifted(int s) const {
  FiniteLengthModule r = *this;
  if (!r.dims_.empty()) r.lo_ -= s;
  return r;
}

FiniteLengthModule FiniteLengthModule::dual() const {
  if (is_zero()) return *this;
  int len = static_cast<int>(dims_.size());
  std::vector<int> dims(len);
  for (int i = 0; i < len; ++i) dims[i] = dims_[len - 1 - i];
  std::array<std::vector<DenseMat>, kNumVars> ops;
  for (int v = 0; v < kNumVars; ++v) {
    ops[v].resize(len - 1);
    for (int i = 0; i + 1 < len; ++i) ops[v][i] = ops_[v][len - 2 - i].transpose();
  }
  return FiniteLengthModule(p_, -max_degree(), std::move(dims), std::move(ops));
}

FiniteLengthModule FiniteLengthModule::direct_sum(const FiniteLengthModule& a,
                                                  const FiniteLengthModule& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.p_ != b.p_) throw MathError("direct sum over different primes");
  int lo = std::min(a.lo_, b.lo_);
  int hi = std::max(a.max_degree(), b.max_degree());
  std::vector<int> dims(hi - lo + 1);
  for (int n = lo; n <= hi; ++n) dims[n - lo] = a.dim_at(n) + b.dim_at(n);
  std::array<std::vector<DenseMat>, kNumVars> ops;
  for (int v = 0; v < kNumVars; ++v) {
    for (int n = lo; n < hi; ++n) {
      DenseMat am = a.op_at(v, n), bm = b.op_at(v, n);
      DenseMat m(dims[n - lo + 1], dims[n - lo]);
      for (std::size_t i = 0; i < am.rows(); ++i)
        for (std::size_t j = 0; j < am.cols(); ++j) m.at(i, j) = am.at(i, j);
      for (std::size_t i = 0; i < bm.rows(); ++i)
        for (std::size_t j = 0; j < bm.cols(); ++j)
          m.at(am.rows() + i, am.cols() + j) = bm.at(i, j);
      ops[v].push_back(std::move(m));
    }
  }
  return FiniteLengthModule(a.p_, lo, std::move(dims), std::move(ops));
}

std::string FiniteLengthModule::hilbert_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int n = min_degree(); n <= max_degree(); ++n) {
    if (!s.empty()) s += ", ";
    s += std::to_string(n) + ":" + std::to_string(dim_at(n));
  }
  return "{" + s + "}";
}

FiniteLengthModule finite_length_realization(const PresentedModule& M) {
  if (!hilbert_polynomial(M).is_zero())
    throw MathError("realization requires a finite-length module");
  const PolyRing& R = M.ring();
  if (minimal_free_resolution(M).modules[0].rank() == 0) return FiniteLengthModule();

  int lo = M.gens().min_twist();
  int hi = regularity(M);
  const GroebnerBasis& gb = M.relations_gb();

  // standard monomial bases per degree
  std::vector<std::vector<std::pair<int, Monomial>>> basis(hi - lo + 1);
  for (int n = lo; n <= hi; ++n) basis[n - lo] = standard_basis(M, n);
  std::vector<int> dims;
  for (const auto& b : basis) dims.push_back(static_cast<int>(b.size()));

  auto index_in = [&](int n, int comp, const Monomial& m) {
    const auto& b = basis[n - lo];
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i].first == comp && b[i].second == m) return static_cast<int>(i);
    return -1;
  };

  std::array<std::vector<DenseMat>, kNumVars> ops;
  for (int v = 0; v < kNumVars; ++v) {
    for (int n = lo; n < hi; ++n) {
      DenseMat m(dims[n - lo + 1], dims[n - lo]);
      for (std::size_t j = 0; j < basis[n - lo].size(); ++j) {
        const auto& [comp, mono] = basis[n - lo][j];
        FreeVector img = FreeVector::unit(comp, Poly::term(mono * Monomial::var(v), 1, R));
        FreeVector nf = normal_form(R, img, gb);
        for (const auto& [c2, f] : nf.components())
          for (const Term& t : f.terms()) {
            int i = index_in(n + 1, c2, t.m);
            if (i < 0) throw MathError("internal: normal form left the standard basis");
            m.at(static_cast<std::size_t>(i), j) = t.c;
          }
      }
      ops[v].push_back(std::move(m));
    }
  }
  return FiniteLengthModule(R.field.modulus(), lo, std::move(dims), std::move(ops));
}

FiniteLengthModule graded_dual(const FiniteLengthModule& M) { return M.dual(); }

namespace {

// positions of the unknown blocks phi_i inside the flattened Hom vector
struct HomLayout {
  std::vector<int> offset;
  int total = 0;
};

HomLayout hom_layout(const std::vector<int>& da, const std::vector<int>& db) {
  HomLayout L;
  for (std::size_t i = 0; i < da.size(); ++i) {
    L.offset.push_back(L.total);
    L.total += da[i] * db[i];
  }
  return L;
}

}  // namespace

IsoVerdict modules_isomorphic(const FiniteLengthModule& M, const FiniteLengthModule& N,
                              bool allow_shift, uint64_t seed, int trials) {
  IsoVerdict v{IsoVerdict::Kind::not_iso, 0, "", {}};
  if (M.is_zero() && N.is_zero()) {
    v.kind = IsoVerdict::Kind::iso;
    v.detail = "both modules are zero";
    return v;
  }
  if (M.is_zero() != N.is_zero()) {
    v.detail = "exactly one module is zero";
    return v;
  }
  int s = allow_shift ? M.min_degree() - N.min_degree() : 0;
  v.shift = s;
  FiniteLengthModule A = M.shifted(s);
  if (A.min_degree() != N.min_degree() || A.dims() != N.dims()) {
    v.detail = allow_shift ? "Hilbert functions differ at the support-aligning shift"
                           : "Hilbert functions differ";
    return v;
  }
  Fp F(M.modulus());
  int lo = A.min_degree(), hi = A.max_degree();
  for (int var = 0; var < kNumVars; ++var)
    for (int n = lo; n < hi; ++n)
      if (A.op_at(var, n).rank(F) != N.op_at(var, n).rank(F)) {
        v.detail = std::string("operator rank mismatch for ") + kVarNames[var] +
                   " out of degree " + std::to_string(n);
        return v;
      }

  // solve for the degree-0 operator-commuting maps A -> N
  const std::vector<int>& d = A.dims();
  HomLayout L = hom_layout(d, d);
  std::vector<std::vector<uint32_t>> eqs;
  for (int var = 0; var < kNumVars; ++var)
    for (int i = 0; i + 1 < static_cast<int>(d.size()); ++i) {
      DenseMat a = A.op_at(var, lo + i), b = N.op_at(var, lo + i);
      // phi_{i+1} a - b phi_i = 0, entry (r, c)
      for (int r = 0; r < d[i + 1]; ++r)
        for (int c = 0; c < d[i]; ++c) {
          std::vector<uint32_t> eq(L.total, 0);
          for (int k = 0; k < d[i + 1]; ++k)  // phi_{i+1}(r,k) a(k,c)
            eq[L.offset[i + 1] + r * d[i + 1] + k] =
                F.add(eq[L.offset[i + 1] + r * d[i + 1] + k], a.at(k, c));
          for (int k = 0; k < d[i]; ++k)  // -b(r,k) phi_i(k,c)
            eq[L.offset[i] + k * d[i] + c] =
                F.sub(eq[L.offset[i] + k * d[i] + c], b.at(r, k));
          eqs.push_back(std::move(eq));
        }
    }
  DenseMat sys(eqs.size(), L.total);
  for (std::size_t i = 0; i < eqs.size(); ++i)
    for (int j = 0; j < L.total; ++j) sys.at(i, j) = eqs[i][j];
  std::vector<std::vector<uint32_t>> hom = sys.kernel_basis(F);
  if (hom.empty()) {
    v.detail = "Hom space between the modules is zero";
    return v;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<uint32_t> coeff(0, F.modulus() - 1);
  auto unpack = [&](const std::vector<uint32_t>& x) {
    std::vector<DenseMat> blocks;
    for (std::size_t i = 0; i < d.size(); ++i) {
      DenseMat m(d[i], d[i]);
      for (int r = 0; r < d[i]; ++r)
        for (int c = 0; c < d[i]; ++c) m.at(r, c) = x[L.offset[i] + r * d[i] + c];
      blocks.push_back(std::move(m));
    }
    return blocks;
  };
  for (int t = 0; t < trials; ++t) {
    std::vector<uint32_t> x(L.total, 0);
    for (const auto& h : hom) {
      uint32_t c = coeff(rng);
      if (!c) continue;
      for (int j = 0; j < L.total; ++j) x[j] = F.add(x[j], F.mul(c, h[j]));
    }
    std::vector<DenseMat> blocks = unpack(x);
    bool ok = true;
    for (const DenseMat& b : blocks)
      if (!b.invertible(F)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    // verify the certificate independently: commutation in every degree
    for (int var = 0; var < kNumVars && ok; ++var)
      for (int i = 0; i + 1 < static_cast<int>(d.size()) && ok; ++i)
        if (!(blocks[i + 1].mul(A.op_at(var, lo + i), F) ==
              N.op_at(var, lo + i).mul(blocks[i], F)))
          ok = false;
    if (!ok) throw MathError("internal: sampled Hom element fails commutation");
    v.kind = IsoVerdict::Kind::iso;
    v.detail = "explicit invertible operator-commuting map found";
    v.cert = std::move(blocks);
    return v;
  }
  v.kind = IsoVerdict::Kind::inconclusive;
  v.detail = "no invertible element found in " + std::to_string(trials) +
             " random Hom samples";
  return v;
}

}  // namespace p3
