#pragma once

// Dense univariate arithmetic on boost::multiprecision rationals. Shares no code with the
// GMP-backed UPoly and is used as an independent check of it.

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "zdgb/upoly.hpp"

namespace zt::dense {

using Q = boost::multiprecision::cpp_rational;
using Z = boost::multiprecision::cpp_int;
using Poly = std::vector<Q>;  // low to high, no trailing zeros

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly from(const zdgb::UPoly& u) {
  Poly p;
  for (const auto& c : u.coeffs()) p.emplace_back(Z(c.get_num().get_str()), Z(c.get_den().get_str()));
  return p;
}

inline bool same(const Poly& p, const zdgb::UPoly& u) { return p == from(u); }

inline Poly add(Poly a, const Poly& b, int sign = 1) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += sign * b[i];
  trim(a);
  return a;
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  Poly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Q(0));
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    Q c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

inline Poly monic(Poly a) {
  if (a.empty()) return a;
  Q l = a.back();
  for (auto& c : a) c /= l;
  return a;
}

inline Poly gcd(Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

}  // namespace zt::dense
