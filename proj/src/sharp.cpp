#include "p3curves/sharp.hpp"

#include <algorithm>
#include <set>

namespace p3 {

SupportFunction::SupportFunction(std::map<int, long long> vals) : vals_(std::move(vals)) {
  for (auto it = vals_.begin(); it != vals_.end();) {
    if (it->second < 0) throw MathError("support function values must be nonnegative");
    if (it->second == 0)
      it = vals_.erase(it);
    else
      ++it;
  }
}

SupportFunction SupportFunction::single(int n, long long v) {
  return SupportFunction(std::map<int, long long>{{n, v}});
}

long long SupportFunction::at(int n) const {
  auto it = vals_.find(n);
  return it == vals_.end() ? 0 : it->second;
}

int SupportFunction::min_support() const {
  if (vals_.empty()) throw MathError("support of the zero function");
  return vals_.begin()->first;
}

int SupportFunction::max_support() const {
  if (vals_.empty()) throw MathError("support of the zero function");
  return vals_.rbegin()->first;
}

long long SupportFunction::total() const {
  long long t = 0;
  for (const auto& [n, v] : vals_) t += v;
  return t;
}

long long SupportFunction::weighted() const {
  long long t = 0;
  for (const auto& [n, v] : vals_) t += static_cast<long long>(n) * v;
  return t;
}

long long SupportFunction::sharp(int n) const {
  long long t = 0;
  for (const auto& [m, v] : vals_) {
    if (m > n) break;
    t += v;
  }
  return t;
}

long long SupportFunction::sharpsharp(int m) const {
  long long t = 0;
  for (const auto& [k, v] : vals_) {
    if (k > m) break;
    t += v * (static_cast<long long>(m) - k + 1);
  }
  return t;
}

SupportFunction SupportFunction::add(const SupportFunction& o) const {
  std::map<int, long long> m = vals_;
  for (const auto& [n, v] : o.vals_) m[n] += v;
  return SupportFunction(std::move(m));
}

SupportFunction SupportFunction::shifted(int s) const {
  std::map<int, long long> m;
  for (const auto& [n, v] : vals_) m[n - s] = v;
  return SupportFunction(std::move(m));
}

std::string SupportFunction::str() const {
  std::string s = "{";
  for (const auto& [n, v] : vals_) {
    if (s.size() > 1) s += ", ";
    s += std::to_string(n) + ":" + std::to_string(v);
  }
  return s + "}";
}

DominanceCheck sharp_dominates(const SupportFunction& l, const SupportFunction& q) {
  // l# and q# are step functions; checking at every support point of either
  // (and just below the joint support) covers all of Z, and the tails compare
  // the totals
  std::set<int> pts;
  for (const auto& [n, v] : l.values()) pts.insert(n);
  for (const auto& [n, v] : q.values()) pts.insert(n);
  if (pts.empty()) return {true, std::nullopt};
  for (int n : pts)
    if (l.sharp(n) > q.sharp(n)) return {false, n};
  if (l.total() > q.total()) return {false, *pts.rbegin() + 1};
  return {true, std::nullopt};
}

TwistSum twist_sum(const SupportFunction& l) { return {l.total(), l.weighted()}; }

namespace {

// degree <= 3 truncation of Z[t]
using Trunc = std::array<long long, 4>;

Trunc trunc_mul(const Trunc& a, const Trunc& b) {
  Trunc r{0, 0, 0, 0};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; i + j < 4; ++j) r[i + j] += a[i] * b[j];
  return r;
}

Trunc trunc_inv(const Trunc& a) {
  if (a[0] != 1) throw MathError("truncated inverse requires unit constant term");
  Trunc r{1, 0, 0, 0};
  r[1] = -a[1];
  r[2] = a[1] * a[1] - a[2];
  r[3] = -a[1] * a[1] * a[1] + 2 * a[1] * a[2] - a[3];
  return r;
}

}  // namespace

ChernData chern_classes(const FreeResolution& res) {
  Trunc total{1, 0, 0, 0};
  int sign = 1;
  for (const FreeModule& F : res.modules) {
    Trunc step{1, 0, 0, 0};
    for (int a : F.twists) step = trunc_mul(step, Trunc{1, -a, 0, 0});
    total = trunc_mul(total, sign > 0 ? step : trunc_inv(step));
    sign = -sign;
  }
  ChernData c;
  c.rank = res.sheaf_rank();
  c.c1 = total[1];
  c.c2 = total[2];
  c.c3 = total[3];
  return c;
}

long long minimal_c1_bound(long long c1F, const SupportFunction& q_prime) {
  return c1F + q_prime.weighted();
}

QuestionOneResult question_one_criterion(const SupportFunction& q,
                                         const SupportFunction& q_prime) {
  for (const auto& [n, v] : q_prime.values())
    if (v > q.at(n)) return {false, n};
  return {true, std::nullopt};
}

}  // namespace p3
