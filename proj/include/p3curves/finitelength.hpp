// Finite-length graded modules as exact graded vector spaces with four
// commuting multiplication operators, plus shift/dual/sum and the randomized
// isomorphism test.
#pragma once

#include <cstdint>
#include <string>

#include "p3curves/presented.hpp"

namespace p3 {

class FiniteLengthModule {
 public:
  FiniteLengthModule() = default;  // zero module

  // dims over [lo, lo + dims.size() - 1]; ops[v][i] is multiplication by
  // variable v from the piece in degree lo+i to the piece in degree lo+i+1
  FiniteLengthModule(uint32_t p, int lo, std::vector<int> dims,
                     std::array<std::vector<DenseMat>, kNumVars> ops);

  uint32_t modulus() const { return p_; }
  bool is_zero() const { return dims_.empty(); }
  int min_degree() const { return lo_; }
  int max_degree() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
  const std::vector<int>& dims() const { return dims_; }
  int dim_at(int n) const {
    int i = n - lo_;
    return (i < 0 || i >= static_cast<int>(dims_.size())) ? 0 : dims_[i];
  }
  long long total_dim() const;

  // multiplication by variable v out of degree n, including the zero maps off
  // the support
  DenseMat op_at(int v, int n) const;

  FiniteLengthModule shifted(int s) const;  // M(s), piece at n becomes M_{n+s}
  FiniteLengthModule dual() const;          // (M^v)_n = (M_{-n})^*, ops transposed
  static FiniteLengthModule direct_sum(const FiniteLengthModule& a,
                                       const FiniteLengthModule& b);

  std::string hilbert_string() const;

 private:
  void trim();
  void validate() const;

  uint32_t p_ = 32003;
  int lo_ = 0;
  std::vector<int> dims_;
  // ops_[v][i]: piece i -> piece i+1; length max(len-1, 0)
  std::array<std::vector<DenseMat>, kNumVars> ops_;
};

// exact graded pieces and operators of a finite-length presented module
FiniteLengthModule finite_length_realization(const PresentedModule& M);

FiniteLengthModule graded_dual(const FiniteLengthModule& M);

struct IsoVerdict {
  enum class Kind { iso, not_iso, inconclusive } kind;
  int shift = 0;                  // meaningful for iso: M(shift) ~ N
  std::string detail;             // obstruction or certificate summary
  std::vector<DenseMat> cert;     // per-degree blocks of the verified iso
  bool is_iso() const { return kind == Kind::iso; }
};

// Searches for an explicit degree-0 operator-commuting isomorphism M(s) -> N.
// Deterministic obstructions (Hilbert functions at the aligning shift,
// per-variable operator ranks, trivial Hom space) certify not-iso; otherwise
// random elements of the Hom space are tested for invertibility.
IsoVerdict modules_isomorphic(const FiniteLengthModule& M, const FiniteLengthModule& N,
                              bool allow_shift, uint64_t seed = 1, int trials = 64);

}  // namespace p3
