#pragma once

#include <random>

#include "masure/laurent.hpp"
#include "masure/rootgeom.hpp"

namespace testing_support {

using namespace masure;

inline long irand(std::mt19937_64& r, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(r); }

inline Poly rand_poly(std::mt19937_64& r, int max_deg) {
  std::vector<Coeff> c;
  int d = static_cast<int>(irand(r, 0, max_deg));
  for (int i = 0; i <= d; ++i) c.push_back(Coeff(irand(r, -3, 3)));
  return Poly(c);
}

inline RationalFunc rand_ratfunc(std::mt19937_64& r, bool nonzero = false) {
  for (;;) {
    Poly num = rand_poly(r, 2), den = rand_poly(r, 2);
    if (den.is_zero()) continue;
    RationalFunc f(num, den);
    f *= RationalFunc::w_power(irand(r, -2, 2));
    if (nonzero && f.is_zero()) continue;
    return f;
  }
}

// c1 w^k1 + c2 w^k2, keeps u-gcds cheap
inline RationalFunc rand_light(std::mt19937_64& r) {
  RationalFunc c = RationalFunc(irand(r, -3, 3)) * RationalFunc::w_power(irand(r, -2, 2));
  if (irand(r, 0, 2) == 0) c += RationalFunc(irand(r, -2, 2)) * RationalFunc::w_power(irand(r, -2, 2));
  return c;
}

inline LaurentU rand_laurent(std::mt19937_64& r, int terms = 3, bool nonzero = false) {
  for (;;) {
    LaurentU p;
    int n = static_cast<int>(irand(r, 1, terms));
    for (int i = 0; i < n; ++i) p += LaurentU::monomial(rand_light(r), irand(r, -3, 3));
    if (nonzero && p.is_zero()) continue;
    return p;
  }
}

inline RationalU rand_rational_u(std::mt19937_64& r, bool nonzero = false) {
  for (;;) {
    LaurentU den(1);
    if (irand(r, 0, 1)) den += LaurentU::monomial(rand_light(r), irand(r, 1, 2));
    if (den.is_zero()) continue;
    RationalU f(rand_laurent(r), den);
    if (nonzero && f.is_zero()) continue;
    return f;
  }
}

inline Q rand_q(std::mt19937_64& r) {
  Q v(irand(r, -40, 40), irand(r, 1, 12));
  v.canonicalize();
  return v;
}

// mpq evaluation of a polynomial with rational coefficients (Horner), independent of Poly arithmetic
inline Q eval_poly(const Poly& p, const Q& x) {
  Q acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + it->rational();
  return acc;
}

}  // namespace testing_support
