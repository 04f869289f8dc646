// The ring R = F_p[X,Y,Z,T] and sparse homogeneous-aware polynomials.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "p3curves/monomial.hpp"

namespace p3 {

// R = F_p[X,Y,Z,T] with a fixed global monomial order. Every operation in the
// workbench is deterministic for a fixed ring.
struct PolyRing {
  Fp field;
  MonomialOrder order = MonomialOrder::grevlex;

  explicit PolyRing(uint32_t p = 32003, MonomialOrder ord = MonomialOrder::grevlex)
      : field(p), order(ord) {}

  bool operator==(const PolyRing& o) const {
    return field.modulus() == o.field.modulus() && order == o.order;
  }
};

struct Term {
  Monomial m;
  uint32_t c = 0;  // in [1, p): zero coefficients are never stored
};

// Terms kept strictly descending in the ring order.
class Poly {
 public:
  Poly() = default;

  static Poly zero() { return Poly(); }
  static Poly constant(uint32_t c, const PolyRing& R) {
    Poly f;
    if (c % R.field.modulus()) f.terms_.push_back({Monomial::one(), c % R.field.modulus()});
    return f;
  }
  static Poly term(const Monomial& m, uint32_t c, const PolyRing& R) {
    Poly f;
    uint32_t cc = c % R.field.modulus();
    if (cc) f.terms_.push_back({m, cc});
    return f;
  }
  static Poly variable(int i) {
    Poly f;
    f.terms_.push_back({Monomial::var(i), 1});
    return f;
  }

  // from unsorted/duplicated term list
  static Poly collect(std::vector<Term> ts, const PolyRing& R);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& lead() const {
    if (terms_.empty()) throw MathError("leading term of zero polynomial");
    return terms_.front();
  }

  // total degree of the leading term; -1 for zero
  int degree() const { return terms_.empty() ? -1 : terms_.front().m.degree(); }

  bool is_homogeneous() const {
    for (const Term& t : terms_)
      if (t.m.degree() != degree()) return false;
    return true;
  }

  // nonzero degree-0 polynomial, i.e. a unit
  bool is_constant() const { return terms_.size() == 1 && terms_[0].m.degree() == 0; }

  Poly add(const Poly& o, const PolyRing& R) const;
  Poly sub(const Poly& o, const PolyRing& R) const;
  Poly scale(uint32_t c, const PolyRing& R) const;
  Poly mul_term(const Monomial& m, uint32_t c, const PolyRing& R) const;
  Poly mul(const Poly& o, const PolyRing& R) const;
  Poly neg(const PolyRing& R) const;
  Poly monic(const PolyRing& R) const {
    return terms_.empty() ? *this : scale(R.field.inv(terms_[0].c), R);
  }

  bool operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // total order on polynomials, used for canonical sorting of bases
  static int cmp(const Poly& a, const Poly& b, const PolyRing& R);

  std::string str(const PolyRing& R) const;

 private:
  std::vector<Term> terms_;
};

std::vector<Poly> variables();  // {X, Y, Z, T}

}  // namespace p3
