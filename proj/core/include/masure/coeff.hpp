#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "masure/errors.hpp"

namespace masure {

// exponent arithmetic; overflow is an error rather than wraparound
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow("exponent addition");
  return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow("exponent subtraction");
  return r;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("exponent product");
  return r;
}

// The base field k: Q when modulus()==0, otherwise F_p.
// The field used for new constants is a per-thread setting (see FieldScope).
class Coeff {
 public:
  Coeff();  // zero of the active field
  Coeff(long v);  // NOLINT(google-explicit-constructor)
  static Coeff from_rational(const mpq_class& q);
  static Coeff from_residue(std::uint64_t p, std::uint64_t r);

  std::uint64_t modulus() const { return p_; }
  bool is_zero() const;
  bool is_one() const;

  Coeff operator+(const Coeff& o) const;
  Coeff operator-(const Coeff& o) const;
  Coeff operator*(const Coeff& o) const;
  Coeff operator/(const Coeff& o) const;
  Coeff operator-() const;
  Coeff inverse() const;
  Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
  Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
  Coeff& operator*=(const Coeff& o) { return *this = *this * o; }

  bool operator==(const Coeff& o) const;
  bool operator!=(const Coeff& o) const { return !(*this == o); }

  // total order used only for canonical printing / hashing
  int compare(const Coeff& o) const;

  const mpq_class& rational() const { return q_; }
  std::uint64_t residue() const { return r_; }

  std::string str() const;

 private:
  void check(const Coeff& o) const;
  std::uint64_t p_ = 0;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

std::uint64_t active_modulus();

// RAII switch of the active base field for the current thread.
class FieldScope {
 public:
  explicit FieldScope(std::uint64_t p);
  ~FieldScope();
  FieldScope(const FieldScope&) = delete;
  FieldScope& operator=(const FieldScope&) = delete;

 private:
  std::uint64_t saved_;
};

bool is_prime_u64(std::uint64_t n);

}  // namespace masure
