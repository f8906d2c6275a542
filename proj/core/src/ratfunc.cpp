#include "masure/ratfunc.hpp"

namespace masure {

RationalFunc::RationalFunc(long c) : num_(Poly(Coeff(c))), den_(Poly(Coeff(1))) {}

RationalFunc::RationalFunc(const Coeff& c)
    : num_(Poly(c)), den_(Poly(Coeff::from_residue(c.modulus(), 1))) {}

RationalFunc::RationalFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ZeroEntry("rational function with zero denominator");
  normalize();
}

RationalFunc RationalFunc::w_power(std::int64_t e, const Coeff& c) {
  Coeff one = Coeff::from_residue(c.modulus(), 1);
  RationalFunc r;
  if (e >= 0) {
    r.num_ = Poly::monomial(c, e);
    r.den_ = Poly(one);
  } else {
    r.num_ = Poly(c);
    r.den_ = Poly::monomial(one, -e);
  }
  if (c.is_zero()) r.den_ = Poly(one);
  return r;
}

void RationalFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(Coeff::from_residue(den_.lc().modulus(), 1));
    return;
  }
  if (den_.deg() > 0) {
    Poly g = gcd(num_, den_);
    if (g.deg() > 0) {
      if (g.is_monomial()) {
        num_ = num_.unshift(g.deg());
        den_ = den_.unshift(g.deg());
      } else {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
      }
    }
  }
  if (!den_.lc().is_one()) {
    Coeff inv = den_.lc().inverse();
    num_ = num_.scale(inv);
    den_ = den_.scale(inv);
  }
}

bool RationalFunc::is_one() const { return den_.deg() == 0 && num_.deg() == 0 && num_.lc().is_one(); }

RationalFunc RationalFunc::operator+(const RationalFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  RationalFunc r;
  if (den_ == o.den_) {
    r.num_ = num_ + o.num_;
    r.den_ = den_;
    if (den_.deg() == 0) return r;
  } else if (den_.is_monomial() && o.den_.is_monomial()) {
    std::int64_t a = den_.deg(), b = o.den_.deg();
    if (a >= b) {
      r.num_ = num_ + o.num_.shift(a - b);
      r.den_ = den_;
    } else {
      r.num_ = num_.shift(b - a) + o.num_;
      r.den_ = o.den_;
    }
  } else {
    r.num_ = num_ * o.den_ + o.num_ * den_;
    r.den_ = den_ * o.den_;
  }
  r.normalize();
  return r;
}

RationalFunc RationalFunc::operator-() const {
  RationalFunc r = *this;
  r.num_ = -num_;
  return r;
}

RationalFunc RationalFunc::operator-(const RationalFunc& o) const { return *this + (-o); }

RationalFunc RationalFunc::operator*(const RationalFunc& o) const {
  if (is_zero() || o.is_zero()) {
    RationalFunc z;
    z.den_ = Poly(Coeff::from_residue(den_.lc().modulus(), 1));
    z.num_ = Poly();
    if (den_.lc().modulus() != o.den_.lc().modulus()) throw FieldMismatch("mixed fields in product");
    return z;
  }
  RationalFunc r;
  if (den_.deg() == 0 && o.den_.deg() == 0) {
    r.num_ = num_ * o.num_;
    r.den_ = den_;
    return r;
  }
  if (is_monomial() && o.is_monomial()) {
    std::int64_t e = checked_add(monomial_exponent(), o.monomial_exponent());
    return w_power(e, num_.lc() * o.num_.lc());
  }
  r.num_ = num_ * o.num_;
  r.den_ = den_ * o.den_;
  r.normalize();
  return r;
}

RationalFunc RationalFunc::inverse() const {
  if (is_zero()) throw ZeroEntry("inverse of zero in k(w)");
  RationalFunc r;
  r.num_ = den_;
  r.den_ = num_;
  r.normalize();
  return r;
}

RationalFunc RationalFunc::operator/(const RationalFunc& o) const { return *this * o.inverse(); }

RationalFunc RationalFunc::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFunc r(Coeff::from_residue(modulus(), 1));
  RationalFunc b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

std::string RationalFunc::str() const {
  if (den_.deg() == 0) {
    std::string n = num_.str("w");
    return n;
  }
  std::string n = num_.str("w");
  std::string d = den_.str("w");
  bool n_simple = num_.deg() <= 0 || (num_.is_monomial() && n.find('-') == std::string::npos);
  if (!n_simple) n = "(" + n + ")";
  bool d_simple = den_.is_monomial() && d.find('*') == std::string::npos;
  if (!d_simple) d = "(" + d + ")";
  return n + "/" + d;
}

Val val_plus(const RationalFunc& f) {
  if (f.is_zero()) return std::nullopt;
  return f.num().ord() - f.den().ord();
}

Val val_minus(const RationalFunc& f) {
  if (f.is_zero()) return std::nullopt;
  return f.den().deg() - f.num().deg();
}

std::string val_str(const Val& v) { return v ? std::to_string(*v) : std::string("inf"); }

}  // namespace masure
