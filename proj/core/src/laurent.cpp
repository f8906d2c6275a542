#include "masure/laurent.hpp"

#include <optional>

namespace masure {

namespace {
constexpr std::int64_t kMaxSeries = std::int64_t(1) << 20;

Coeff constant(std::uint64_t p, long v) {
  if (p == 0) return Coeff::from_rational(v);
  long r = v % static_cast<long>(p);
  return Coeff::from_residue(p, static_cast<std::uint64_t>(r < 0 ? r + static_cast<long>(p) : r));
}

// image of a base-field constant in F_P (P prime); nullopt if a denominator vanishes
std::optional<Coeff> reduce(const Coeff& c, std::uint64_t P) {
  if (c.modulus() != 0) return c;
  mpz_class d = c.rational().get_den() % P, n = c.rational().get_num() % P;
  if (d == 0) return std::nullopt;
  if (n < 0) n += P;
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), mpz_class(P).get_mpz_t());
  mpz_class r = n * inv % P;
  return Coeff::from_residue(P, r.get_ui());
}

std::optional<Coeff> eval_mod(const Poly& f, const Coeff& x, std::uint64_t P) {
  Coeff acc = constant(x.modulus(), 0);
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    auto c = reduce(*it, P);
    if (!c) return std::nullopt;
    acc = acc * x + *c;
  }
  return acc;
}

// Specialize w at a point (and over Q, reduce modulo a large prime) where no coefficient
// denominator and neither leading coefficient vanishes. A constant gcd of the images
// means gcd(a, b) = 1.
bool coprime_by_specialization(const LaurentU& a, const LaurentU& b) {
  const std::uint64_t p = a.lc().modulus();
  const std::uint64_t P = p == 0 ? 2147483647ULL : p;
  for (long x0 : {3L, -2L, 5L, 7L, -11L, 13L, 2L, 1L}) {
    Coeff x = constant(P, x0);
    auto image = [&](const LaurentU& f, Poly& out) {
      std::vector<Coeff> c(static_cast<std::size_t>(f.max_exp() + 1), constant(P, 0));
      for (const auto& [e, r] : f.terms()) {
        auto d = eval_mod(r.den(), x, P), n = eval_mod(r.num(), x, P);
        if (!d || !n || d->is_zero()) return false;
        c[static_cast<std::size_t>(e)] = *n / *d;
      }
      out = Poly(c);
      return out.deg() == f.max_exp();
    };
    Poly pa, pb;
    if (!image(a, pa) || !image(b, pb)) continue;
    return gcd(pa, pb).deg() == 0;
  }
  return false;
}

// polynomials in u over k[w], index = exponent of u
using WPolys = std::vector<Poly>;

void trim(WPolys& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

WPolys primitive(WPolys f) {
  trim(f);
  Poly c;
  for (const auto& x : f)
    if (!x.is_zero()) c = gcd(c, x);
  if (!c.is_zero() && (c.deg() > 0 || !c.lc().is_one()))
    for (auto& x : f) x = x.divmod(c).first;
  return f;
}

WPolys cleared(const LaurentU& f) {
  Poly l = Poly(Coeff::from_residue(f.lc().modulus(), 1));
  if (f.lc().modulus() == 0) l = Poly(Coeff::from_rational(1));
  for (const auto& [e, r] : f.terms()) l = (l * r.den()).divmod(gcd(l, r.den())).first;
  WPolys out(static_cast<std::size_t>(f.max_exp() + 1), Poly());
  for (const auto& [e, r] : f.terms()) out[static_cast<std::size_t>(e)] = r.num() * l.divmod(r.den()).first;
  return primitive(out);
}

// primitive pseudo-remainder sequence
LaurentU gcd_prs(const LaurentU& a, const LaurentU& b) {
  WPolys x = cleared(a), y = cleared(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    WPolys r = x;
    while (r.size() >= y.size()) {
      const std::size_t sh = r.size() - y.size();
      Poly g = gcd(r.back(), y.back());
      Poly mr = y.back().divmod(g).first, my = r.back().divmod(g).first;
      for (auto& c : r) c = c * mr;
      for (std::size_t i = 0; i < y.size(); ++i) r[i + sh] = r[i + sh] - y[i] * my;
      trim(r);
    }
    r = primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  LaurentU out;
  for (std::size_t e = 0; e < x.size(); ++e)
    if (!x[e].is_zero()) out += LaurentU::monomial(RationalFunc(x[e], Poly(x.back().lc())), static_cast<std::int64_t>(e));
  return out.scale(out.lc().inverse());
}
}

LaurentU::LaurentU(const RationalFunc& c) {
  if (!c.is_zero()) t_.emplace(0, c);
}

LaurentU LaurentU::monomial(const RationalFunc& c, std::int64_t e) {
  LaurentU r;
  if (!c.is_zero()) r.t_.emplace(e, c);
  return r;
}

RationalFunc LaurentU::coeff(std::int64_t e) const {
  auto it = t_.find(e);
  return it == t_.end() ? RationalFunc() : it->second;
}

void LaurentU::add_term(std::int64_t e, const RationalFunc& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

LaurentU LaurentU::operator+(const LaurentU& o) const {
  LaurentU r = *this;
  for (const auto& [e, c] : o.t_) r.add_term(e, c);
  return r;
}

LaurentU LaurentU::operator-() const {
  LaurentU r = *this;
  for (auto& kv : r.t_) kv.second = -kv.second;
  return r;
}

LaurentU LaurentU::operator-(const LaurentU& o) const { return *this + (-o); }

LaurentU LaurentU::operator*(const LaurentU& o) const {
  LaurentU r;
  for (const auto& [e1, c1] : t_)
    for (const auto& [e2, c2] : o.t_) r.add_term(checked_add(e1, e2), c1 * c2);
  return r;
}

LaurentU LaurentU::scale(const RationalFunc& s) const {
  if (s.is_zero()) return LaurentU();
  LaurentU r;
  for (const auto& [e, c] : t_) r.t_.emplace_hint(r.t_.end(), e, c * s);
  return r;
}

LaurentU LaurentU::shift(std::int64_t k) const {
  if (k == 0) return *this;
  LaurentU r;
  for (const auto& [e, c] : t_) r.t_.emplace_hint(r.t_.end(), checked_add(e, k), c);
  return r;
}

LaurentU LaurentU::subs_scale(const RationalFunc& z) const {
  LaurentU r;
  for (const auto& [e, c] : t_) r.t_.emplace_hint(r.t_.end(), e, c * z.pow(e));
  return r;
}

LaurentU LaurentU::subs_inverse() const {
  LaurentU r;
  for (const auto& [e, c] : t_) r.t_.emplace(checked_sub(0, e), c);
  return r;
}

std::pair<LaurentU, LaurentU> LaurentU::divmod(const LaurentU& d) const {
  if (d.is_zero()) throw ZeroEntry("division by zero in k(w)[u]");
  LaurentU q, r = *this;
  const std::int64_t dd = d.max_exp();
  const RationalFunc inv = d.lc().inverse();
  while (!r.is_zero() && r.max_exp() >= dd) {
    std::int64_t e = r.max_exp() - dd;
    RationalFunc f = r.lc() * inv;
    q.add_term(e, f);
    r -= d.shift(e).scale(f);
  }
  return {q, r};
}

std::string LaurentU::str() const {
  if (t_.empty()) return "0";
  std::string out;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string cs = c.str();
    bool wrap = cs.find_first_of("+-", 1) != std::string::npos;
    bool neg = !wrap && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (wrap) cs = "(" + cs + ")";
    if (!out.empty())
      out += neg ? "-" : "+";
    else if (neg)
      out += "-";
    std::string mono = e == 0 ? "" : (e == 1 ? std::string("u") : "u^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e)));
    if (mono.empty())
      out += cs;
    else if (cs == "1")
      out += mono;
    else
      out += cs + "*" + mono;
  }
  return out;
}

LaurentU gcd_u(const LaurentU& a, const LaurentU& b) {
  auto monic = [](const LaurentU& p) { return p.scale(p.lc().inverse()); };
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.min_exp() >= 0 && b.min_exp() >= 0 && coprime_by_specialization(a, b)) return LaurentU(a.lc() / a.lc());
  if (a.min_exp() >= 0 && b.min_exp() >= 0) return gcd_prs(a, b);
  LaurentU x = a, y = b;
  while (!y.is_zero()) {
    LaurentU r = x.divmod(y).second;
    x = std::move(y);
    y = r.is_zero() ? r : monic(r);
  }
  return monic(x);
}

RationalU::RationalU(LaurentU num, LaurentU den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ZeroEntry("rational function in u with zero denominator");
  normalize();
}

void RationalU::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentU(1);
    return;
  }
  std::int64_t s = den_.min_exp();
  if (s != 0) {
    num_ = num_.shift(-s);
    den_ = den_.shift(-s);
  }
  if (den_.max_exp() > 0) {
    LaurentU np = num_.shift(-num_.min_exp());
    LaurentU g = gcd_u(np, den_);
    if (g.max_exp() > 0) {
      std::int64_t m = num_.min_exp();
      num_ = np.divmod(g).first.shift(m);
      den_ = den_.divmod(g).first;
    }
  }
  if (!den_.lc().is_one()) {
    RationalFunc inv = den_.lc().inverse();
    num_ = num_.scale(inv);
    den_ = den_.scale(inv);
  }
}

namespace {

LaurentU lowered(const LaurentU& f) { return f.is_zero() ? f : f.shift(-f.min_exp()); }

// a / g for g | a, with g(0) != 0
LaurentU divexact(const LaurentU& a, const LaurentU& g) {
  if (g.is_constant()) return a.scale(g.lc().inverse());
  const std::int64_t m = a.min_exp();
  return a.shift(-m).divmod(g).first.shift(m);
}

// gcd of an arbitrary numerator with a denominator factor
LaurentU common(const LaurentU& num, const LaurentU& den) {
  if (num.is_zero() || den.is_constant()) return LaurentU(den.is_zero() ? RationalFunc(1) : den.lc() / den.lc());
  return gcd_u(lowered(num), den);
}

}  // namespace

RationalU RationalU::reduced(LaurentU num, LaurentU den) {
  RationalU r;
  if (num.is_zero()) return r;
  if (!den.lc().is_one()) {
    RationalFunc inv = den.lc().inverse();
    num = num.scale(inv);
    den = den.scale(inv);
  }
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

RationalU RationalU::operator+(const RationalU& o) const {
  if (is_laurent() && o.is_laurent()) return RationalU(num_ + o.num_);
  LaurentU g = gcd_u(den_, o.den_);
  LaurentU b1 = divexact(den_, g), d1 = divexact(o.den_, g);
  LaurentU t = num_ * d1 + o.num_ * b1;
  if (t.is_zero()) return RationalU();
  LaurentU g2 = common(t, g);
  return reduced(divexact(t, g2), b1 * divexact(o.den_, g2));
}

RationalU RationalU::operator-() const {
  RationalU r = *this;
  r.num_ = -num_;
  return r;
}

RationalU RationalU::operator-(const RationalU& o) const { return *this + (-o); }

RationalU RationalU::operator*(const RationalU& o) const {
  if (is_laurent() && o.is_laurent()) return RationalU(num_ * o.num_);
  if (is_zero() || o.is_zero()) return RationalU();
  LaurentU g1 = common(num_, o.den_), g2 = common(o.num_, den_);
  return reduced(divexact(num_, g1) * divexact(o.num_, g2), divexact(den_, g2) * divexact(o.den_, g1));
}

RationalU RationalU::inverse() const {
  if (is_zero()) throw ZeroEntry("inverse of zero in k(w)(u)");
  const std::int64_t m = num_.min_exp();
  return reduced(den_.shift(-m), num_.shift(-m));
}

RationalU RationalU::operator/(const RationalU& o) const {
  if (o.is_zero()) throw ZeroEntry("division by zero in k(w)(u)");
  return *this * o.inverse();
}

RationalU RationalU::subs_scale(const RationalFunc& z) const {
  if (is_laurent()) return RationalU(num_.subs_scale(z));
  return RationalU(num_.subs_scale(z), den_.subs_scale(z));
}

RationalU RationalU::subs_inverse() const { return RationalU(num_.subs_inverse(), den_.subs_inverse()); }

std::string RationalU::str() const {
  if (is_laurent()) return num_.str();
  std::string n = num_.str();
  if (num_.size() > 1 || n.find_first_of("+-/", 1) != std::string::npos) n = "(" + n + ")";
  return n + "/(" + den_.str() + ")";
}

RationalFunc USeries::coeff(std::int64_t e) const {
  if (e > top) return RationalFunc();
  if (e < -prec) throw NotExpandable("coefficient of u^" + std::to_string(e) + " beyond precision " + std::to_string(prec));
  std::int64_t j = top - e;
  if (j >= static_cast<std::int64_t>(c.size())) return RationalFunc();
  return c[static_cast<std::size_t>(j)];
}

USeries USeries::truncate(std::int64_t n) const {
  USeries r = *this;
  r.prec = std::min(prec, n);
  std::int64_t len = std::max<std::int64_t>(0, r.top + r.prec + 1);
  if (static_cast<std::int64_t>(r.c.size()) > len) r.c.resize(static_cast<std::size_t>(len));
  return r;
}

USeries USeries::operator*(const USeries& o) const {
  USeries r;
  r.top = checked_add(top, o.top);
  r.prec = std::min(checked_sub(prec, o.top), checked_sub(o.prec, top));
  std::int64_t len = std::max<std::int64_t>(0, r.top + r.prec + 1);
  if (len > kMaxSeries) throw TooLarge("series product too long");
  r.c.assign(static_cast<std::size_t>(len), RationalFunc());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c.size() && i + j < r.c.size(); ++j) {
      if (o.c[j].is_zero()) continue;
      r.c[i + j] += c[i] * o.c[j];
    }
  }
  return r;
}

USeries USeries::operator+(const USeries& o) const {
  USeries r;
  r.top = std::max(top, o.top);
  r.prec = std::min(prec, o.prec);
  std::int64_t len = std::max<std::int64_t>(0, r.top + r.prec + 1);
  r.c.assign(static_cast<std::size_t>(len), RationalFunc());
  for (std::int64_t j = 0; j < len; ++j) {
    std::int64_t e = r.top - j;
    r.c[static_cast<std::size_t>(j)] = coeff(e) + o.coeff(e);
  }
  return r;
}

bool USeries::agrees(const USeries& o) const {
  std::int64_t lo = -std::min(prec, o.prec);
  std::int64_t hi = std::max(top, o.top);
  for (std::int64_t e = hi; e >= lo; --e)
    if (coeff(e) != o.coeff(e)) return false;
  return true;
}

std::string USeries::str() const {
  LaurentU l;
  for (std::size_t j = 0; j < c.size(); ++j) l += LaurentU::monomial(c[j], top - static_cast<std::int64_t>(j));
  return l.str() + " + O(u^" + std::to_string(-prec - 1) + ")";
}

USeries expand_series(const RationalU& f, std::int64_t n) {
  if (n < 0) throw NotExpandable("negative precision " + std::to_string(n));
  USeries s;
  s.prec = n;
  if (f.is_zero()) {
    s.top = -n - 1;
    return s;
  }
  const LaurentU& N = f.num();
  const LaurentU& D = f.den();
  const std::int64_t d = D.max_exp();
  s.top = f.top_exp();
  std::int64_t len = std::max<std::int64_t>(0, s.top + n + 1);
  if (len > kMaxSeries) throw NotExpandable("expansion needs " + std::to_string(len) + " coefficients; shift " + std::to_string(s.top));
  s.c.assign(static_cast<std::size_t>(len), RationalFunc());
  // N = D * f, solved top-down; D is monic of degree d
  for (std::int64_t j = 0; j < len; ++j) {
    std::int64_t e = s.top - j;
    RationalFunc v = N.coeff(e + d);
    for (const auto& [i, di] : D.terms()) {
      if (i == d) continue;
      std::int64_t k = e + d - i;  // exponent of f needed
      std::int64_t jj = s.top - k;
      if (jj >= 0 && jj < j) v -= di * s.c[static_cast<std::size_t>(jj)];
    }
    s.c[static_cast<std::size_t>(j)] = v;
  }
  return s;
}

USeries expand_series_pos(const RationalU& f, std::int64_t n) { return expand_series(f.subs_inverse(), n); }

}  // namespace masure
