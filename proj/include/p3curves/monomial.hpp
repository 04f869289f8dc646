// Monomials in the four fixed variables X, Y, Z, T and their orders.
#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "p3curves/fp.hpp"

namespace p3 {

inline constexpr int kNumVars = 4;
inline constexpr const char* kVarNames[kNumVars] = {"X", "Y", "Z", "T"};

// Both supported orders refine total degree, as the graded machinery requires.
enum class MonomialOrder { grevlex, deglex };

inline const char* order_name(MonomialOrder o) {
  return o == MonomialOrder::grevlex ? "grevlex" : "deglex";
}

struct Monomial {
  std::array<uint8_t, kNumVars> e{0, 0, 0, 0};

  int degree() const { return e[0] + e[1] + e[2] + e[3]; }

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }

  bool divides(const Monomial& o) const {
    for (int i = 0; i < kNumVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  static Monomial one() { return Monomial{}; }
  static Monomial var(int i, int pow = 1) {
    Monomial m;
    m.e[i] = static_cast<uint8_t>(pow);
    return m;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) {
      int s = e[i] + o.e[i];
      if (s > 255) throw MathError("monomial exponent overflow");
      r.e[i] = static_cast<uint8_t>(s);
    }
    return r;
  }

  // quotient of this by o; caller guarantees divisibility
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = static_cast<uint8_t>(e[i] - o.e[i]);
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    return r;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kNumVars; ++i)
      if (a.e[i] && b.e[i]) return false;
    return true;
  }

  std::string str() const {
    if (degree() == 0) return "1";
    std::string s;
    for (int i = 0; i < kNumVars; ++i) {
      if (!e[i]) continue;
      if (!s.empty()) s += "*";
      s += kVarNames[i];
      if (e[i] > 1) s += "^" + std::to_string(static_cast<int>(e[i]));
    }
    return s;
  }
};

// Returns <0, 0, >0 as a is smaller than, equal to, or greater than b.
inline int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder ord) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  if (ord == MonomialOrder::grevlex) {
    // among equal degrees: last variable with differing exponent, smaller wins
    for (int i = kNumVars - 1; i >= 0; --i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    return 0;
  }
  for (int i = 0; i < kNumVars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
  return 0;
}

}  // namespace p3
