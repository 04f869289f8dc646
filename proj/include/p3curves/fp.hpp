// Prime-field scalar arithmetic and dense linear algebra over F_p.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace p3 {

struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Arithmetic context for F_p, p an odd prime < 2^31.
class Fp {
 public:
  explicit Fp(uint32_t p = 32003) : p_(p) {
    if (!is_prime_u32(p) || p == 2)
      throw MathError("coefficient modulus must be an odd prime");
  }

  uint32_t modulus() const { return p_; }

  uint32_t reduce(long long a) const {
    long long r = a % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<uint32_t>(r);
  }
  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
  }
  uint32_t inv(uint32_t a) const {
    if (a == 0) throw MathError("division by zero in F_p");
    // extended Euclid
    int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
      int64_t q = r / new_r;
      int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<uint32_t>(t);
  }
  uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

  // symmetric representative in (-p/2, p/2], convenient for printing
  long long lift_signed(uint32_t a) const {
    return a > p_ / 2 ? static_cast<long long>(a) - p_ : static_cast<long long>(a);
  }

  bool operator==(const Fp& o) const { return p_ == o.p_; }

 private:
  uint32_t p_;
};

// Row-major dense matrix over F_p. Small sizes only; used for the degreewise
// linear algebra behind Hilbert functions, Ext realizations and Hom spaces.
class DenseMat {
 public:
  DenseMat() : rows_(0), cols_(0) {}
  DenseMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  uint32_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  uint32_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  static DenseMat identity(std::size_t n) {
    DenseMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  DenseMat mul(const DenseMat& o, const Fp& F) const {
    if (cols_ != o.rows_) throw MathError("dense matrix size mismatch");
    DenseMat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        uint64_t aik = at(i, k);
        if (!aik) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          uint64_t v = r.at(i, j) + aik * o.at(k, j) % F.modulus();
          r.at(i, j) = static_cast<uint32_t>(v % F.modulus());
        }
      }
    return r;
  }

  DenseMat transpose() const {
    DenseMat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  bool operator==(const DenseMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  bool is_zero_mat() const {
    for (uint32_t v : a_)
      if (v) return false;
    return true;
  }

  // Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref(const Fp& F) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t sel = r;
      while (sel < rows_ && at(sel, c) == 0) ++sel;
      if (sel == rows_) continue;
      if (sel != r)
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(r, j));
      uint32_t inv = F.inv(at(r, c));
      for (std::size_t j = c; j < cols_; ++j) at(r, j) = F.mul(at(r, j), inv);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || at(i, c) == 0) continue;
        uint32_t f = at(i, c);
        for (std::size_t j = c; j < cols_; ++j)
          at(i, j) = F.sub(at(i, j), F.mul(f, at(r, j)));
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank(const Fp& F) const {
    DenseMat copy = *this;
    return copy.rref(F).size();
  }

  // Basis of the right kernel, one column vector per basis element.
  std::vector<std::vector<uint32_t>> kernel_basis(const Fp& F) const {
    DenseMat copy = *this;
    std::vector<std::size_t> pivots = copy.rref(F);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<uint32_t>> basis;
    for (std::size_t free_c = 0; free_c < cols_; ++free_c) {
      if (is_pivot[free_c]) continue;
      std::vector<uint32_t> v(cols_, 0);
      v[free_c] = 1;
      for (std::size_t k = 0; k < pivots.size(); ++k)
        v[pivots[k]] = F.neg(copy.at(k, free_c));
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // Solve A x = b; empty optional when inconsistent.
  bool solve(const std::vector<uint32_t>& b, std::vector<uint32_t>& x, const Fp& F) const {
    DenseMat aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_) = b[i];
    }
    std::vector<std::size_t> pivots = aug.rref(F);
    if (!pivots.empty() && pivots.back() == cols_) return false;
    x.assign(cols_, 0);
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(k, cols_);
    return true;
  }

  bool invertible(const Fp& F) const { return rows_ == cols_ && rank(F) == rows_; }

 private:
  std::size_t rows_, cols_;
  std::vector<uint32_t> a_;
};

// Incremental row-echelon accumulator used for degreewise span/independence
// questions.
class EchelonBasis {
 public:
  explicit EchelonBasis(const Fp& F) : F_(F) {}

  std::size_t dim() const { return rows_.size(); }

  // reduce v against the basis in place; returns the residue
  std::vector<uint32_t> reduce(std::vector<uint32_t> v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      uint32_t c = v[pivots_[k]];
      if (!c) continue;
      for (std::size_t j = pivots_[k]; j < v.size(); ++j)
        v[j] = F_.sub(v[j], F_.mul(c, rows_[k][j]));
    }
    return v;
  }

  // returns true (and absorbs v) when v is independent of the current span
  bool add(std::vector<uint32_t> v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < v.size() && v[p] == 0) ++p;
    if (p == v.size()) return false;
    uint32_t inv = F_.inv(v[p]);
    for (std::size_t j = p; j < v.size(); ++j) v[j] = F_.mul(v[j], inv);
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  bool contains(std::vector<uint32_t> v) const {
    v = reduce(std::move(v));
    for (uint32_t c : v)
      if (c) return false;
    return true;
  }

 private:
  Fp F_;
  std::vector<std::vector<uint32_t>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace p3
