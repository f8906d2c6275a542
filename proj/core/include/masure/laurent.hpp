#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "masure/ratfunc.hpp"

namespace masure {

// Finite sum of c_e u^e with c_e in k(w), e in Z.
class LaurentU {
 public:
  using Terms = std::map<std::int64_t, RationalFunc>;

  LaurentU() = default;
  LaurentU(const RationalFunc& c);  // NOLINT(google-explicit-constructor)
  LaurentU(long c) : LaurentU(RationalFunc(c)) {}  // NOLINT(google-explicit-constructor)
  static LaurentU monomial(const RationalFunc& c, std::int64_t e);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == 0); }
  bool is_monomial() const { return t_.size() == 1; }
  std::int64_t min_exp() const { return t_.begin()->first; }
  std::int64_t max_exp() const { return t_.rbegin()->first; }
  const RationalFunc& lc() const { return t_.rbegin()->second; }
  RationalFunc coeff(std::int64_t e) const;
  const Terms& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }

  LaurentU operator+(const LaurentU& o) const;
  LaurentU operator-(const LaurentU& o) const;
  LaurentU operator*(const LaurentU& o) const;
  LaurentU operator-() const;
  LaurentU& operator+=(const LaurentU& o) { return *this = *this + o; }
  LaurentU& operator-=(const LaurentU& o) { return *this = *this - o; }
  LaurentU scale(const RationalFunc& s) const;
  LaurentU shift(std::int64_t e) const;  // times u^e
  LaurentU subs_scale(const RationalFunc& z) const;  // u -> z*u
  LaurentU subs_inverse() const;  // u -> 1/u

  // division as polynomials in u; both must have min_exp() >= 0
  std::pair<LaurentU, LaurentU> divmod(const LaurentU& d) const;

  bool operator==(const LaurentU& o) const { return t_ == o.t_; }
  bool operator!=(const LaurentU& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void add_term(std::int64_t e, const RationalFunc& c);
  Terms t_;
};

// Truncated Laurent series in u^{-1}:  sum_{e <= top} c_e u^e, exact for e >= -prec.
// Exponents are absolute: prec bounds the u^{-1}-exponent, independent of top.
struct USeries {
  std::int64_t top = 0;
  std::int64_t prec = 0;
  std::vector<RationalFunc> c;  // c[j] is the coefficient of u^(top-j)

  RationalFunc coeff(std::int64_t e) const;
  USeries truncate(std::int64_t n) const;
  USeries operator*(const USeries& o) const;
  USeries operator+(const USeries& o) const;
  // equality of all coefficients known in both
  bool agrees(const USeries& o) const;
  std::string str() const;
};

// Element of k(w)(u): num/den with den a monic polynomial in u, den(0) != 0, gcd 1.
class RationalU {
 public:
  RationalU() : den_(LaurentU(1)) {}
  RationalU(const LaurentU& p) : num_(p), den_(LaurentU(1)) {}  // NOLINT(google-explicit-constructor)
  RationalU(const RationalFunc& c) : RationalU(LaurentU(c)) {}  // NOLINT(google-explicit-constructor)
  RationalU(long c) : RationalU(LaurentU(c)) {}  // NOLINT(google-explicit-constructor)
  RationalU(LaurentU num, LaurentU den);

  const LaurentU& num() const { return num_; }
  const LaurentU& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_constant(); }
  bool is_one() const { return is_laurent() && num_.is_constant() && !num_.is_zero() && num_.coeff(0).is_one(); }

  RationalU operator+(const RationalU& o) const;
  RationalU operator-(const RationalU& o) const;
  RationalU operator*(const RationalU& o) const;
  RationalU operator/(const RationalU& o) const;
  RationalU operator-() const;
  RationalU inverse() const;
  RationalU& operator+=(const RationalU& o) { return *this = *this + o; }
  RationalU& operator*=(const RationalU& o) { return *this = *this * o; }
  RationalU subs_scale(const RationalFunc& z) const;
  RationalU subs_inverse() const;

  // highest u-exponent of the u^{-1} expansion (deg num - deg den)
  std::int64_t top_exp() const { return num_.max_exp() - den_.max_exp(); }

  bool operator==(const RationalU& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalU& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void normalize();
  // num/den already in lowest terms, den(0) != 0
  static RationalU reduced(LaurentU num, LaurentU den);
  LaurentU num_, den_;
};

// u^{-1}-adic expansion, coefficients of u^e for e >= -n
USeries expand_series(const RationalU& f, std::int64_t n);
// u-adic expansion, coefficients of u^e for e <= n (returned with u <-> u^{-1} swapped:
// the coefficient of u^e is at exponent -e of the result)
USeries expand_series_pos(const RationalU& f, std::int64_t n);

LaurentU gcd_u(const LaurentU& a, const LaurentU& b);

}  // namespace masure
