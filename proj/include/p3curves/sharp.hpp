// Finitely supported functions Z -> N, the primitive transforms f#, f##,
// the dominance and minimality predicates, and Chern-class bookkeeping in the
// degree-3 truncation of H*(P^3).
#pragma once

#include <map>
#include <optional>
#include <string>

#include "p3curves/resolution.hpp"

namespace p3 {

class SupportFunction {
 public:
  SupportFunction() = default;
  explicit SupportFunction(std::map<int, long long> vals);

  static SupportFunction single(int n, long long v);

  bool is_zero() const { return vals_.empty(); }
  const std::map<int, long long>& values() const { return vals_; }
  long long at(int n) const;
  int min_support() const;  // throws when zero
  int max_support() const;

  long long total() const;     // sum of f
  long long weighted() const;  // sum of n f(n)

  // f#(n) = sum_{m <= n} f(m): 0 below the support, total above it
  long long sharp(int n) const;
  // f##(m) = sum_{n <= m} f#(n) = sum_{k <= m} f(k) (m - k + 1)
  long long sharpsharp(int m) const;

  SupportFunction add(const SupportFunction& o) const;
  SupportFunction shifted(int s) const;  // value at n becomes old value at n+s

  bool operator==(const SupportFunction& o) const { return vals_ == o.vals_; }
  std::string str() const;  // {2:2, 3:3}

 private:
  std::map<int, long long> vals_;
};

// l#(n) <= q#(n) for all n. Only the sharp inequality of the dominance
// criterion is evaluated; the obligatory-direct-summand side condition has no
// definition in scope, which the field name keeps explicit.
struct DominanceCheck {
  bool sharp_inequality_only;
  std::optional<int> first_violation;
};
DominanceCheck sharp_dominates(const SupportFunction& l, const SupportFunction& q);

struct TwistSum {
  long long rank;      // sum l(n)
  long long weighted;  // sum n l(n)
};
TwistSum twist_sum(const SupportFunction& l);

struct ChernData {
  long long rank = 0;
  long long c1 = 0, c2 = 0, c3 = 0;
  bool operator==(const ChernData& o) const {
    return rank == o.rank && c1 == o.c1 && c2 == o.c2 && c3 == o.c3;
  }
};

// total Chern class of the sheafified module: alternating truncated product of
// prod_j (1 - a_{kj} t) over the resolution steps
ChernData chern_classes(const FreeResolution& res);

// lower bound c1(F) + sum n q'(n) for first Chern classes of rank-2 reflexive
// quotients of F by a dissocie subsheaf; attained at l = q'
long long minimal_c1_bound(long long c1F, const SupportFunction& q_prime);

// pointwise q'(n) <= q(n); the failing degree is reported when false
struct QuestionOneResult {
  bool holds;
  std::optional<int> failing_n;
};
QuestionOneResult question_one_criterion(const SupportFunction& q,
                                         const SupportFunction& q_prime);

}  // namespace p3
