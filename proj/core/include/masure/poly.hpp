#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "masure/coeff.hpp"

namespace masure {

// Dense univariate polynomial over k, coefficients stored low degree first.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Coeff> c);
  explicit Poly(const Coeff& c);
  static Poly monomial(const Coeff& c, std::int64_t e);

  bool is_zero() const { return c_.empty(); }
  std::int64_t deg() const { return static_cast<std::int64_t>(c_.size()) - 1; }  // -1 for zero
  std::int64_t ord() const;  // lowest exponent with nonzero coefficient, -1 for zero
  bool is_monomial() const;
  const Coeff& lc() const { return c_.back(); }
  Coeff coeff(std::int64_t e) const;
  const std::vector<Coeff>& coeffs() const { return c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scale(const Coeff& s) const;
  Poly shift(std::int64_t e) const;  // multiply by x^e, e >= 0
  Poly unshift(std::int64_t e) const;  // divide by x^e, requires ord() >= e
  Poly monic() const;

  // Euclidean division: *this = q*d + r
  std::pair<Poly, Poly> divmod(const Poly& d) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::string str(const std::string& var) const;

 private:
  void trim();
  std::vector<Coeff> c_;
};

// monic gcd
Poly gcd(const Poly& a, const Poly& b);

}  // namespace masure
