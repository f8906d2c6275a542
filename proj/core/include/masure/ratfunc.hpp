#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "masure/poly.hpp"

namespace masure {

// valuation value; nullopt encodes +infinity (the zero element)
using Val = std::optional<std::int64_t>;

// An element of k(w), kept as num/den with gcd 1 and den monic.
class RationalFunc {
 public:
  RationalFunc() : den_(Poly(Coeff(1))) {}
  RationalFunc(long c);  // NOLINT(google-explicit-constructor)
  RationalFunc(const Coeff& c);  // NOLINT(google-explicit-constructor)
  RationalFunc(Poly num, Poly den);
  static RationalFunc w_power(std::int64_t e, const Coeff& c = Coeff(1));

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_monomial() const { return num_.is_monomial() && den_.is_monomial(); }
  // for a monomial c*w^e returns e
  std::int64_t monomial_exponent() const { return num_.ord() - den_.ord(); }
  Coeff monomial_coeff() const { return num_.lc(); }
  std::uint64_t modulus() const { return den_.lc().modulus(); }

  RationalFunc operator+(const RationalFunc& o) const;
  RationalFunc operator-(const RationalFunc& o) const;
  RationalFunc operator*(const RationalFunc& o) const;
  RationalFunc operator/(const RationalFunc& o) const;
  RationalFunc operator-() const;
  RationalFunc inverse() const;
  RationalFunc& operator+=(const RationalFunc& o) { return *this = *this + o; }
  RationalFunc& operator-=(const RationalFunc& o) { return *this = *this - o; }
  RationalFunc& operator*=(const RationalFunc& o) { return *this = *this * o; }
  RationalFunc pow(std::int64_t e) const;

  bool operator==(const RationalFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFunc& o) const { return !(*this == o); }

  // leading coefficient of the expansion at w=infinity (the residue of f*w^{val_minus})
  Coeff lead_at_infinity() const { return num_.lc() / den_.lc(); }

  std::string str() const;  // parseable, variable w

 private:
  void normalize();
  Poly num_, den_;
};

Val val_plus(const RationalFunc& f);
Val val_minus(const RationalFunc& f);

std::string val_str(const Val& v);

}  // namespace masure
