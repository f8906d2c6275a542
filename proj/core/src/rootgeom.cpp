#include "masure/rootgeom.hpp"

#include <cstdlib>

namespace masure {

namespace {

Q floor_q(const Q& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Q(f);
}

bool is_integer(const Q& q) { return q.get_den() == 1; }

int sgn_q(const Q& q) { return sgn(q); }

}  // namespace

int xi_of(Sheet s) {
  switch (s) {
    case Sheet::plus:
      return 1;
    case Sheet::minus:
      return -1;
    default:
      return 0;
  }
}

std::string sheet_name(Sheet s) {
  switch (s) {
    case Sheet::plus:
      return "plus";
    case Sheet::minus:
      return "minus";
    default:
      return "vect";
  }
}

Sheet parse_sheet(const std::string& s) {
  if (s == "plus" || s == "+") return Sheet::plus;
  if (s == "minus" || s == "-") return Sheet::minus;
  if (s == "vect" || s == "v") return Sheet::vect;
  throw ParseError("unknown sheet \"" + s + "\"");
}

std::string q_str(const Q& q) { return q.get_str(); }

std::string point_str(const Point& p) { return "(" + q_str(p.x) + "," + q_str(p.y) + ")"; }

std::string AffineRoot::str() const {
  std::string out = eps > 0 ? "a" : "-a";
  auto term = [&](std::int64_t c, const char* sym) {
    if (c == 0) return;
    out += c > 0 ? "+" : "-";
    if (std::llabs(c) != 1) out += std::to_string(std::llabs(c));
    out += sym;
  };
  term(k, "d");
  term(m, "x");
  return out;
}

Q eval_vec(int eps, std::int64_t k, const Vec2& v) { return eps * v.x + Q(static_cast<long>(k)) * v.y; }

Q eval_root(const AffineRoot& r, const Point& p) {
  return r.eps * p.x + Q(static_cast<long>(r.k)) * p.y + Q(static_cast<long>(r.m) * xi_of(p.sheet));
}

Point reflect(const AffineRoot& r, const Point& p) {
  Point q = p;
  q.x = p.x - 2 * r.eps * eval_root(r, p);
  return q;
}

Vec2 reflect_vec(int eps, std::int64_t k, const Vec2& v) {
  return {v.x - 2 * eps * eval_vec(eps, k, v), v.y};
}

bool is_positive_vectorial(int eps, std::int64_t k) { return eps > 0 ? k >= 0 : k >= 1; }

bool in_phi_a_plus(const AffineRoot& r) {
  bool pos = is_positive_vectorial(r.eps, r.k);
  return pos ? r.m >= 0 : r.m > 0;
}

RootClass classify(const AffineRoot& r) {
  bool pos = is_positive_vectorial(r.eps, r.k);
  bool ap = in_phi_a_plus(r);
  if (pos) return ap ? RootClass::pos_aplus : RootClass::pos_aminus;
  return ap ? RootClass::neg_aplus : RootClass::neg_aminus;
}

WeylElt::WeylElt(int s, std::int64_t j) : s_(s), j_(j) {
  if (s != 1 && s != -1) throw NotInN("linear part sign must be +-1");
}

WeylElt WeylElt::from_chamber(std::int64_t n) {
  if (n % 2 == 0) return WeylElt(1, n / 2);
  return WeylElt(-1, (n + 1) / 2);
}

std::int64_t WeylElt::chamber() const { return s_ == 1 ? 2 * j_ : 2 * j_ - 1; }

std::int64_t WeylElt::length() const { return std::llabs(chamber()); }

std::string WeylElt::word() const {
  std::int64_t n = chamber();
  if (n == 0) return "e";
  std::string out;
  bool zero = n > 0;
  for (std::int64_t i = 0; i < std::llabs(n); ++i) {
    out += zero ? "r0" : "r1";
    zero = !zero;
  }
  return out;
}

WeylElt WeylElt::from_word(const std::string& word) {
  WeylElt w;
  if (word.empty() || word == "e" || word == "id") return w;
  std::size_t i = 0;
  while (i < word.size()) {
    if (i + 1 < word.size() && (word[i] == 'r' || word[i] == 's') && (word[i + 1] == '0' || word[i + 1] == '1')) {
      w = w * (word[i + 1] == '0' ? r0() : r1());
      i += 2;
    } else {
      throw ParseError("bad Weyl word \"" + word + "\"");
    }
  }
  return w;
}

WeylElt WeylElt::operator*(const WeylElt& o) const {
  return WeylElt(s_ * o.s_, checked_add(s_ * o.j_, j_));
}

WeylElt WeylElt::inverse() const { return WeylElt(s_, -s_ * j_); }

Vec2 WeylElt::apply(const Vec2& v) const {
  return {s_ * v.x + Q(static_cast<long>(2 * j_)) * v.y, v.y};
}

bool bruhat_leq(const WeylElt& u, const WeylElt& w) { return u == w || u.length() < w.length(); }

AffineMap AffineMap::reflection(const AffineRoot& r, Sheet sheet) {
  AffineMap m;
  m.lin = WeylElt(-1, -r.eps * r.k);
  m.b = Q(-2L * r.eps * r.m * xi_of(sheet));
  return m;
}

AffineMap AffineMap::translation(const Q& tx) {
  AffineMap m;
  m.b = tx;
  return m;
}

AffineMap AffineMap::operator*(const AffineMap& o) const {
  AffineMap m;
  m.lin = lin * o.lin;
  m.b = lin.s() * o.b + b;
  return m;
}

Point AffineMap::apply(const Point& p) const {
  Point q = p;
  q.x = lin.s() * p.x + Q(static_cast<long>(2 * lin.j())) * p.y + b;
  return q;
}

std::string AffineMap::str() const {
  std::string out = lin.s() > 0 ? "x" : "-x";
  if (lin.j() != 0) out += (lin.j() > 0 ? "+" : "") + std::to_string(2 * lin.j()) + "y";
  if (b != 0) out += (b > 0 ? "+" : "") + q_str(b);
  return out;
}

void wall_root(std::int64_t sigma, int& eps, std::int64_t& k) {
  if (sigma <= 0) {
    eps = 1;
    k = -sigma;
  } else {
    eps = -1;
    k = sigma;
  }
}

std::int64_t wall_slope(int eps, std::int64_t k) { return eps > 0 ? -k : k; }

bool is_thick(const Point& p, std::int64_t sigma) {
  Q v = p.x - Q(static_cast<long>(sigma)) * p.y;
  if (p.sheet == Sheet::vect) return v == 0;
  return is_integer(v);
}

AffineRoot phi_a_minus_root(const Point& p, std::int64_t sigma) {
  if (!is_thick(p, sigma)) throw NotDefined("no wall of slope " + std::to_string(sigma) + " through " + point_str(p));
  int eps;
  std::int64_t k;
  wall_root(sigma, eps, k);
  AffineRoot r{eps, k, 0};
  Q v = eval_root(r, p);  // with m = 0
  r.m = -v.get_num().get_si() * xi_of(p.sheet);
  if (p.sheet == Sheet::vect) r.m = 0;
  return in_phi_a_plus(r) ? -r : r;
}

std::vector<ThickRoot> thick_roots_at(const Point& p, std::int64_t k_bound) {
  std::vector<ThickRoot> out;
  const int xi = xi_of(p.sheet);
  for (std::int64_t k = -k_bound; k <= k_bound; ++k) {
    for (int eps : {1, -1}) {
      Q v = eps * p.x + Q(static_cast<long>(k)) * p.y;
      AffineRoot r{eps, k, 0};
      if (xi == 0) {
        if (v != 0) continue;
      } else {
        if (!is_integer(v)) continue;
        r.m = -v.get_num().get_si() * xi;
      }
      out.push_back({r, !in_phi_a_plus(r)});
    }
  }
  return out;
}

Vec2 LocalChamber::sample() const {
  Q s = Q(static_cast<long>(index())) + Q(1, 2);
  return {sign * s, Q(sign)};
}

std::string LocalChamber::str() const {
  return std::string(sign > 0 ? "+" : "-") + dir.word() + "@" + point_str(base);
}

LocalChamber opposite(const LocalChamber& c) { return {c.base, -c.sign, c.dir}; }

int chamber_side(int sign, std::int64_t index, std::int64_t sigma) {
  int s = (2 * index + 1 - 2 * sigma) > 0 ? 1 : -1;
  return sign * s * (sigma <= 0 ? 1 : -1);
}

int vec_side(const Vec2& v, std::int64_t sigma) {
  int eps;
  std::int64_t k;
  wall_root(sigma, eps, k);
  return sgn_q(eval_vec(eps, k, v));
}

LocalChamber c_infinity_chamber(const Point& p, int requested_sign) {
  if (p.sheet != Sheet::plus) throw NotDefined("C_infinity projection is computed on the plus sheet");
  LocalChamber c;
  c.base = p;
  if (p.y == 0) {
    if (p.x != 0) throw NotDefined("point " + point_str(p) + " lies outside the Tits cone");
    if (requested_sign > 0) throw NotDefined("origin with positive sign: excluded case");
    c.sign = -1;
    return c;
  }
  int eta = sgn_q(p.y);
  if (requested_sign != 0 && requested_sign != eta) throw NotDefined("requested sign conflicts with the position of " + point_str(p));
  c.sign = eta;
  Q s = p.x / p.y;
  std::int64_t n;
  if (!is_integer(s)) {
    n = floor_q(s).get_num().get_si();
  } else {
    std::int64_t sigma = s.get_num().get_si();
    if (sigma <= 0)
      n = eta < 0 ? sigma : sigma - 1;
    else
      n = eta < 0 ? sigma - 1 : sigma;
  }
  c.dir = WeylElt::from_chamber(n);
  return c;
}

LocalChamber project_chamber(const Point& p, const Vec2& germ, const LocalChamber& reference) {
  if (germ.x == 0 && germ.y == 0) throw AmbiguousGerm("zero germ direction");
  if (germ.y == 0) throw NotDefined("horizontal germ is outside the Tits cone");
  LocalChamber c;
  c.base = p;
  c.sign = sgn_q(germ.y);
  Q s = germ.x / germ.y;
  if (!is_integer(s)) {
    c.dir = WeylElt::from_chamber(floor_q(s).get_num().get_si());
    return c;
  }
  std::int64_t sigma = s.get_num().get_si();
  int ref_side = chamber_side(reference.sign, reference.index(), sigma);
  std::int64_t n = chamber_side(c.sign, sigma, sigma) == ref_side ? sigma : sigma - 1;
  c.dir = WeylElt::from_chamber(n);
  return c;
}

WeylElt weyl_distance(const LocalChamber& a, const LocalChamber& b) {
  if (a.sign != b.sign) throw SignMismatch("Weyl distance needs chambers of the same sign");
  return a.dir.inverse() * b.dir;
}

WeylElt weyl_codistance(const LocalChamber& a, const LocalChamber& b) {
  if (a.sign == b.sign) throw SignMismatch("codistance needs chambers of opposite signs");
  return weyl_distance(a, opposite(b));
}

std::vector<std::int64_t> separating_walls(const LocalChamber& a, const LocalChamber& b) {
  if (a.sign != b.sign) throw SignMismatch("separating walls need chambers of the same sign");
  std::vector<std::int64_t> out;
  std::int64_t na = a.index(), nb = b.index();
  if (na < nb)
    for (std::int64_t s = na + 1; s <= nb; ++s) out.push_back(s);
  else
    for (std::int64_t s = na; s > nb; --s) out.push_back(s);
  return out;
}

}  // namespace masure
