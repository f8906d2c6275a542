#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "masure/coeff.hpp"

namespace masure {

using Q = mpq_class;

enum class Sheet { plus, minus, vect };

int xi_of(Sheet s);
std::string sheet_name(Sheet s);
Sheet parse_sheet(const std::string& s);

struct Vec2 {
  Q x, y;
  bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Vec2& o) const { return !(*this == o); }
};

struct Point {
  Q x, y;
  Sheet sheet = Sheet::plus;
  bool operator==(const Point& o) const { return x == o.x && y == o.y && sheet == o.sheet; }
  bool operator!=(const Point& o) const { return !(*this == o); }
};

std::string q_str(const Q& q);
std::string point_str(const Point& p);

// eps*aleph + k*delta + m*xi
struct AffineRoot {
  int eps = 1;
  std::int64_t k = 0;
  std::int64_t m = 0;

  AffineRoot operator-() const { return {-eps, -k, -m}; }
  bool operator==(const AffineRoot& o) const { return eps == o.eps && k == o.k && m == o.m; }
  std::string str() const;
};

// value of the vectorial part eps*aleph + k*delta on a tangent vector
Q eval_vec(int eps, std::int64_t k, const Vec2& v);
Q eval_root(const AffineRoot& r, const Point& p);
Point reflect(const AffineRoot& r, const Point& p);
// reflection of the vectorial root on tangent vectors
Vec2 reflect_vec(int eps, std::int64_t k, const Vec2& v);

bool is_positive_vectorial(int eps, std::int64_t k);
bool in_phi_a_plus(const AffineRoot& r);

enum class RootClass { pos_aplus, pos_aminus, neg_aplus, neg_aminus };
RootClass classify(const AffineRoot& r);

// Element of the infinite dihedral group W^v = <r0, r1>, stored as the linear map
// (x, y) -> (s*x + 2*j*y, y).
class WeylElt {
 public:
  WeylElt() = default;
  WeylElt(int s, std::int64_t j);
  static WeylElt r0() { return WeylElt(-1, 1); }
  static WeylElt r1() { return WeylElt(-1, 0); }
  static WeylElt from_word(const std::string& word);
  // the element w with w.C_f equal to the chamber of slopes (n, n+1)
  static WeylElt from_chamber(std::int64_t n);

  int s() const { return s_; }
  std::int64_t j() const { return j_; }
  std::int64_t chamber() const;
  std::int64_t length() const;
  std::string word() const;  // "e" for identity, else alternating r0/r1 string

  WeylElt operator*(const WeylElt& o) const;
  WeylElt inverse() const;
  Vec2 apply(const Vec2& v) const;
  bool operator==(const WeylElt& o) const { return s_ == o.s_ && j_ == o.j_; }
  bool operator!=(const WeylElt& o) const { return !(*this == o); }

 private:
  int s_ = 1;
  std::int64_t j_ = 0;
};

bool bruhat_leq(const WeylElt& u, const WeylElt& w);

// Affine map of A_plus fixing the delta coordinate: (x, y) -> (s*x + 2*j*y + b, y)
struct AffineMap {
  WeylElt lin;
  Q b = 0;

  static AffineMap reflection(const AffineRoot& r, Sheet sheet = Sheet::plus);
  static AffineMap translation(const Q& tx);
  AffineMap operator*(const AffineMap& o) const;  // (this o other)(p) = this(other(p))
  Point apply(const Point& p) const;
  Vec2 apply_vec(const Vec2& v) const { return lin.apply(v); }
  bool operator==(const AffineMap& o) const { return lin == o.lin && b == o.b; }
  bool operator!=(const AffineMap& o) const { return !(*this == o); }
  std::string str() const;
};

// walls through a point: hyperplanes of slope sigma (x/y = sigma) for integer sigma
// positive vectorial root whose kernel is the hyperplane of slope sigma
void wall_root(std::int64_t sigma, int& eps, std::int64_t& k);
// slope of the hyperplane ker(eps*aleph + k*delta)
std::int64_t wall_slope(int eps, std::int64_t k);
bool is_thick(const Point& p, std::int64_t sigma);
// the Phi_{a-} representative of the wall of slope sigma through p (p must lie on a thick wall)
AffineRoot phi_a_minus_root(const Point& p, std::int64_t sigma);

struct ThickRoot {
  AffineRoot root;
  bool phi_a_minus = false;
};
std::vector<ThickRoot> thick_roots_at(const Point& p, std::int64_t k_bound = 64);

// germ at a point of the vectorial chamber dir.(sign*C_f)
struct LocalChamber {
  Point base;
  int sign = 1;
  WeylElt dir;

  std::int64_t index() const { return dir.chamber(); }
  Vec2 sample() const;  // a vector in the open chamber
  bool operator==(const LocalChamber& o) const { return base == o.base && sign == o.sign && dir == o.dir; }
  bool operator!=(const LocalChamber& o) const { return !(*this == o); }
  std::string str() const;
};

LocalChamber opposite(const LocalChamber& c);

// +1 / -1: side of the wall of slope sigma on which a chamber lies (w.r.t. its positive root)
int chamber_side(int sign, std::int64_t index, std::int64_t sigma);
int vec_side(const Vec2& v, std::int64_t sigma);

// requested_sign = 0 means sgn(y); at the origin the sign must be -1 or 0
LocalChamber c_infinity_chamber(const Point& p, int requested_sign = 0);

LocalChamber project_chamber(const Point& p, const Vec2& germ, const LocalChamber& reference);

WeylElt weyl_distance(const LocalChamber& a, const LocalChamber& b);
WeylElt weyl_codistance(const LocalChamber& a, const LocalChamber& b);

// hyperplane slopes separating two chambers of the same sign at the same point, in crossing order
std::vector<std::int64_t> separating_walls(const LocalChamber& a, const LocalChamber& b);

}  // namespace masure
