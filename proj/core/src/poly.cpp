#include "masure/poly.hpp"

#include <algorithm>

namespace masure {

namespace {
constexpr std::int64_t kMaxDense = std::int64_t(1) << 22;
}

Poly::Poly(std::vector<Coeff> c) : c_(std::move(c)) { trim(); }

Poly::Poly(const Coeff& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Poly Poly::monomial(const Coeff& c, std::int64_t e) {
  if (e < 0) throw Overflow("negative exponent in polynomial monomial");
  if (e > kMaxDense) throw Overflow("polynomial degree " + std::to_string(e) + " too large");
  Poly p;
  if (c.is_zero()) return p;
  p.c_.assign(static_cast<std::size_t>(e) + 1, Coeff::from_residue(c.modulus(), 0));
  p.c_.back() = c;
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::int64_t Poly::ord() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<std::int64_t>(i);
  return -1;
}

bool Poly::is_monomial() const {
  if (c_.empty()) return false;
  for (std::size_t i = 0; i + 1 < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

Coeff Poly::coeff(std::int64_t e) const {
  if (e < 0 || e >= static_cast<std::int64_t>(c_.size())) return Coeff();
  return c_[static_cast<std::size_t>(e)];
}

Poly Poly::operator+(const Poly& o) const {
  if (c_.empty()) return o;
  if (o.c_.empty()) return *this;
  Poly r;
  const auto& big = c_.size() >= o.c_.size() ? c_ : o.c_;
  const auto& small = c_.size() >= o.c_.size() ? o.c_ : c_;
  r.c_ = big;
  for (std::size_t i = 0; i < small.size(); ++i) r.c_[i] += small[i];
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (c_.empty() || o.c_.empty()) return Poly();
  if (deg() + o.deg() > kMaxDense) throw Overflow("polynomial degree too large");
  Poly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Coeff::from_residue(c_[0].modulus(), 0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  r.trim();
  return r;
}

Poly Poly::scale(const Coeff& s) const {
  if (s.is_zero()) return Poly();
  Poly r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

Poly Poly::shift(std::int64_t e) const {
  if (c_.empty() || e == 0) return *this;
  if (e < 0) return unshift(-e);
  if (deg() + e > kMaxDense) throw Overflow("polynomial degree too large");
  Poly r;
  r.c_.assign(static_cast<std::size_t>(e), Coeff::from_residue(c_[0].modulus(), 0));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::unshift(std::int64_t e) const {
  if (c_.empty() || e == 0) return *this;
  if (ord() < e) throw Overflow("unshift below order");
  Poly r;
  r.c_.assign(c_.begin() + e, c_.end());
  return r;
}

Poly Poly::monic() const {
  if (c_.empty() || c_.back().is_one()) return *this;
  return scale(c_.back().inverse());
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw ZeroEntry("polynomial division by zero");
  if (deg() < d.deg()) return {Poly(), *this};
  std::vector<Coeff> rem = c_;
  std::vector<Coeff> quo(static_cast<std::size_t>(deg() - d.deg() + 1), Coeff::from_residue(d.lc().modulus(), 0));
  Coeff inv = d.lc().inverse();
  const std::size_t dn = d.c_.size();
  for (std::int64_t i = deg(); i >= d.deg(); --i) {
    Coeff c = rem[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    Coeff f = c * inv;
    std::size_t base = static_cast<std::size_t>(i - d.deg());
    quo[base] = f;
    for (std::size_t j = 0; j < dn; ++j) {
      if (d.c_[j].is_zero()) continue;
      rem[base + j] -= f * d.c_[j];
    }
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

bool Poly::operator==(const Poly& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

std::string Poly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::int64_t i = deg(); i >= 0; --i) {
    const Coeff& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    bool neg = c.modulus() == 0 && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (!out.empty())
      out += neg ? "-" : "+";
    else if (neg)
      out += "-";
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (mono.empty())
      out += cs;
    else if (cs == "1")
      out += mono;
    else
      out += cs + "*" + mono;
  }
  return out;
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_monomial() || b.is_monomial()) {
    std::int64_t e = std::min(a.ord(), b.ord());
    return Poly::monomial(Coeff::from_residue(a.lc().modulus(), 1), e);
  }
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x.divmod(y).second;
    x = std::move(y);
    y = r.is_zero() ? r : r.monic();
  }
  return x.monic();
}

}  // namespace masure
