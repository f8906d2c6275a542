#include "masure/coeff.hpp"

namespace masure {

namespace {

thread_local std::uint64_t g_modulus = 0;

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((u128)a * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce_signed(long v, std::uint64_t p) {
  if (v >= 0) return static_cast<std::uint64_t>(v) % p;
  std::uint64_t m = static_cast<std::uint64_t>(-(v + 1)) + 1;
  m %= p;
  return m == 0 ? 0 : p - m;
}

}  // namespace

std::uint64_t active_modulus() { return g_modulus; }

FieldScope::FieldScope(std::uint64_t p) : saved_(g_modulus) {
  if (p != 0 && !is_prime_u64(p)) throw FieldMismatch("modulus " + std::to_string(p) + " is not prime");
  if (p > (std::uint64_t(1) << 61)) throw FieldMismatch("modulus exceeds 2^61");
  g_modulus = p;
}
FieldScope::~FieldScope() { g_modulus = saved_; }

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % sp == 0) return n == sp;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic witness set for 64-bit integers
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

Coeff::Coeff() : p_(g_modulus) {}

Coeff::Coeff(long v) : p_(g_modulus) {
  if (p_ == 0)
    q_ = v;
  else
    r_ = reduce_signed(v, p_);
}

Coeff Coeff::from_rational(const mpq_class& q) {
  Coeff c;
  if (c.p_ == 0) {
    c.q_ = q;
    c.q_.canonicalize();
    return c;
  }
  mpz_class num = q.get_num(), den = q.get_den();
  mpz_class pz;
  mpz_import(pz.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &c.p_);
  mpz_class n = num % pz;
  if (n < 0) n += pz;
  mpz_class d = den % pz;
  if (d == 0) throw ZeroEntry("denominator " + den.get_str() + " vanishes mod " + std::to_string(c.p_));
  Coeff a = from_residue(c.p_, n.get_ui());
  Coeff b = from_residue(c.p_, d.get_ui());
  return a / b;
}

Coeff Coeff::from_residue(std::uint64_t p, std::uint64_t r) {
  Coeff c;
  c.p_ = p;
  c.q_ = 0;
  c.r_ = p ? r % p : 0;
  if (!p) c.q_ = static_cast<unsigned long>(r);
  return c;
}

void Coeff::check(const Coeff& o) const {
  if (p_ != o.p_)
    throw FieldMismatch("mixing coefficients mod " + std::to_string(p_) + " and mod " + std::to_string(o.p_));
}

bool Coeff::is_zero() const { return p_ == 0 ? sgn(q_) == 0 : r_ == 0; }
bool Coeff::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1 % p_; }

Coeff Coeff::operator+(const Coeff& o) const {
  check(o);
  Coeff c = *this;
  if (p_ == 0) {
    c.q_ += o.q_;
  } else {
    c.r_ = r_ + o.r_;
    if (c.r_ >= p_ || c.r_ < r_) c.r_ -= p_;
  }
  return c;
}

Coeff Coeff::operator-() const {
  Coeff c = *this;
  if (p_ == 0)
    c.q_ = -q_;
  else
    c.r_ = r_ == 0 ? 0 : p_ - r_;
  return c;
}

Coeff Coeff::operator-(const Coeff& o) const { return *this + (-o); }

Coeff Coeff::operator*(const Coeff& o) const {
  check(o);
  Coeff c = *this;
  if (p_ == 0)
    c.q_ *= o.q_;
  else
    c.r_ = mulmod(r_, o.r_, p_);
  return c;
}

Coeff Coeff::inverse() const {
  if (is_zero()) throw ZeroEntry("inverse of zero coefficient");
  Coeff c = *this;
  if (p_ == 0)
    c.q_ = 1 / q_;
  else
    c.r_ = powmod(r_, p_ - 2, p_);
  return c;
}

Coeff Coeff::operator/(const Coeff& o) const { return *this * o.inverse(); }

bool Coeff::operator==(const Coeff& o) const {
  check(o);
  return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

int Coeff::compare(const Coeff& o) const {
  check(o);
  if (p_ == 0) return cmp(q_, o.q_);
  return r_ < o.r_ ? -1 : (r_ > o.r_ ? 1 : 0);
}

std::string Coeff::str() const { return p_ == 0 ? q_.get_str() : std::to_string(r_); }

}  // namespace masure
