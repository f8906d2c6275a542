#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "masure/rootgeom.hpp"

namespace masure {

// letter 0 = r0, 1 = r1
using GalleryType = std::vector<int>;

std::string type_str(const GalleryType& t);
GalleryType parse_type(const std::string& s);

// letter of the wall of slope sigma
int wall_letter(std::int64_t sigma);
// the wall of type `letter` bounding chamber n
std::int64_t wall_of(std::int64_t n, int letter);

struct GalleryStep {
  std::int64_t wall = 0;
  bool thick = true;
  bool fold = false;
};

// Gallery of chambers of one sign at a point, described by chamber indices.
struct Gallery {
  int sign = -1;
  std::vector<std::int64_t> chambers;  // size = steps.size() + 1
  std::vector<GalleryStep> steps;

  GalleryType type() const;
  std::int64_t start() const { return chambers.front(); }
  std::int64_t end() const { return chambers.back(); }
  std::size_t folds() const;
  std::string str() const;
};

// chamber indices visited by a minimal gallery (reduced word) from a to b
GalleryType minimal_gallery_type(const LocalChamber& a, const LocalChamber& b);

// build a gallery of a given type from a start chamber and fold choices
Gallery make_gallery(int sign, std::int64_t start, const GalleryType& type, const std::vector<bool>& folds,
                     const std::vector<bool>& thick);

// thickness flags read off at a point
std::vector<bool> thickness_at(const Point& p, int sign, std::int64_t start, const GalleryType& type);

// centrifugally folded w.r.t. the chamber `center` (index center_index of sign center_sign)
bool is_centrifugal(const Gallery& g, int center_sign, std::int64_t center_index);

struct CountPoly {
  std::int64_t n = 0;       // exponent of q
  std::int64_t nprime = 0;  // exponent of (q-1)

  CountPoly operator*(const CountPoly& o) const { return {n + o.n, nprime + o.nprime}; }
  bool operator==(const CountPoly& o) const { return n == o.n && nprime == o.nprime; }
  mpz_class eval(unsigned long q) const;
  std::string str() const;
};

CountPoly count_liftings_poly(const Gallery& g, int center_sign, std::int64_t center_index);

// explicit enumeration in a local model where each thick panel carries q+1 chambers
mpz_class brute_force_liftings(const Gallery& g, int center_sign, std::int64_t center_index, unsigned long q);

// thick walls separating c_inf from c_plus that do not contain the germ
std::int64_t m_doubleprime(const Point& p, const LocalChamber& c_inf, const LocalChamber& c_plus, const Vec2& germ);
// walls between c_inf and c_plus not containing germ
std::int64_t m_prime(const LocalChamber& c_inf, const LocalChamber& c_plus, const Vec2& germ);

// a centrifugally folded gallery of type `type` from `start` to `target` w.r.t. `center`
std::optional<Gallery> find_centrifugal_gallery(const Point& p, const LocalChamber& start, const GalleryType& type,
                                                const LocalChamber& target, const LocalChamber& center);

struct Superdecoration;
CountPoly theorem_count(const Superdecoration& sd);

}  // namespace masure
