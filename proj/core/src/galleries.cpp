#include "masure/galleries.hpp"

#include <set>
#include <utility>

#include "masure/heckepath.hpp"

namespace masure {

std::string type_str(const GalleryType& t) {
  if (t.empty()) return "e";
  std::string out;
  for (int l : t) out += l == 0 ? "r0" : "r1";
  return out;
}

GalleryType parse_type(const std::string& s) {
  GalleryType t;
  if (s.empty() || s == "e") return t;
  for (std::size_t i = 0; i < s.size(); i += 2) {
    if (i + 1 >= s.size() || s[i] != 'r' || (s[i + 1] != '0' && s[i + 1] != '1'))
      throw ParseError("bad gallery type \"" + s + "\"");
    t.push_back(s[i + 1] - '0');
  }
  return t;
}

int wall_letter(std::int64_t sigma) { return sigma % 2 == 0 ? 1 : 0; }

std::int64_t wall_of(std::int64_t n, int letter) { return wall_letter(n) == letter ? n : n + 1; }

GalleryType Gallery::type() const {
  GalleryType t;
  for (const auto& s : steps) t.push_back(wall_letter(s.wall));
  return t;
}

std::size_t Gallery::folds() const {
  std::size_t n = 0;
  for (const auto& s : steps) n += s.fold;
  return n;
}

std::string Gallery::str() const {
  std::string out = std::to_string(chambers.front());
  for (std::size_t i = 0; i < steps.size(); ++i) {
    out += steps[i].fold ? " |" : " >";
    out += std::to_string(steps[i].wall);
    out += steps[i].thick ? "" : "'";
    out += " " + std::to_string(chambers[i + 1]);
  }
  return (sign > 0 ? "+[" : "-[") + out + "]";
}

GalleryType minimal_gallery_type(const LocalChamber& a, const LocalChamber& b) {
  GalleryType t;
  for (std::int64_t s : separating_walls(a, b)) t.push_back(wall_letter(s));
  return t;
}

Gallery make_gallery(int sign, std::int64_t start, const GalleryType& type, const std::vector<bool>& folds,
                     const std::vector<bool>& thick) {
  if (folds.size() != type.size() || thick.size() != type.size())
    throw ParseError("gallery type, fold and thickness lists differ in length");
  Gallery g;
  g.sign = sign;
  g.chambers.push_back(start);
  std::int64_t n = start;
  for (std::size_t i = 0; i < type.size(); ++i) {
    GalleryStep st;
    st.wall = wall_of(n, type[i]);
    st.thick = thick[i];
    st.fold = folds[i];
    if (!st.fold) n = st.wall == n ? n - 1 : n + 1;
    g.steps.push_back(st);
    g.chambers.push_back(n);
  }
  return g;
}

std::vector<bool> thickness_at(const Point& p, int, std::int64_t start, const GalleryType& type) {
  std::vector<bool> out;
  std::int64_t n = start;
  for (int l : type) {
    std::int64_t s = wall_of(n, l);
    out.push_back(is_thick(p, s));
    n = s == n ? n - 1 : n + 1;
  }
  return out;
}

bool is_centrifugal(const Gallery& g, int center_sign, std::int64_t center_index) {
  for (std::size_t i = 0; i < g.steps.size(); ++i) {
    const auto& st = g.steps[i];
    if (!st.fold) continue;
    if (!st.thick) return false;
    if (chamber_side(g.sign, g.chambers[i], st.wall) == chamber_side(center_sign, center_index, st.wall)) return false;
  }
  return true;
}

mpz_class CountPoly::eval(unsigned long q) const {
  mpz_class a, b;
  mpz_ui_pow_ui(a.get_mpz_t(), q, static_cast<unsigned long>(n));
  mpz_ui_pow_ui(b.get_mpz_t(), q - 1, static_cast<unsigned long>(nprime));
  return a * b;
}

std::string CountPoly::str() const { return "q^" + std::to_string(n) + "*(q-1)^" + std::to_string(nprime); }

CountPoly count_liftings_poly(const Gallery& g, int center_sign, std::int64_t center_index) {
  if (!is_centrifugal(g, center_sign, center_index)) throw NotCentrifugal("gallery " + g.str() + " is not centrifugally folded");
  CountPoly c;
  for (std::size_t i = 0; i < g.steps.size(); ++i) {
    const auto& st = g.steps[i];
    if (!st.thick) continue;
    if (st.fold)
      ++c.nprime;
    else if (chamber_side(g.sign, g.chambers[i], st.wall) == chamber_side(center_sign, center_index, st.wall))
      ++c.n;
  }
  return c;
}

namespace {

struct Enumerator {
  const Gallery& g;
  int center_sign;
  std::int64_t center_index;
  unsigned long q;
  mpz_class leaves = 0;

  void walk(std::size_t i) {
    if (i == g.steps.size()) {
      ++leaves;
      return;
    }
    std::int64_t n = g.chambers[i];
    std::int64_t sigma = g.steps[i].wall;
    std::int64_t other = sigma == n ? n - 1 : n + 1;
    if (!g.steps[i].thick) {
      // two chambers in the panel; the only move goes to the other one
      if (other == g.chambers[i + 1]) walk(i + 1);
      return;
    }
    int cside = chamber_side(center_sign, center_index, sigma);
    std::int64_t near = chamber_side(g.sign, n, sigma) == cside ? n : other;
    std::int64_t far = near == n ? other : n;
    // label 0 is the projection of the center on the panel, labels 1..q the others
    unsigned long cur = n == near ? 0 : 1;
    for (unsigned long lab = 0; lab <= q; ++lab) {
      if (lab == cur) continue;
      std::int64_t image = lab == 0 ? near : far;
      if (image == g.chambers[i + 1]) walk(i + 1);
    }
  }
};

}  // namespace

mpz_class brute_force_liftings(const Gallery& g, int center_sign, std::int64_t center_index, unsigned long q) {
  if (q < 2 || q > 7) throw TooLarge("brute force supports 2 <= q <= 7");
  if (g.steps.size() > 12) throw TooLarge("brute force supports galleries of length <= 12");
  Enumerator e{g, center_sign, center_index, q};
  e.walk(0);
  return e.leaves;
}

std::int64_t m_prime(const LocalChamber& c_inf, const LocalChamber& c_plus, const Vec2& germ) {
  std::int64_t n = 0;
  for (std::int64_t s : separating_walls(c_inf, c_plus))
    if (vec_side(germ, s) != 0) ++n;
  return n;
}

std::int64_t m_doubleprime(const Point& p, const LocalChamber& c_inf, const LocalChamber& c_plus, const Vec2& germ) {
  std::int64_t m = 0;
  for (std::int64_t s : separating_walls(c_inf, c_plus))
    if (is_thick(p, s) && vec_side(germ, s) != 0) ++m;
  return m;
}

std::optional<Gallery> find_centrifugal_gallery(const Point& p, const LocalChamber& start, const GalleryType& type,
                                                const LocalChamber& target, const LocalChamber& center) {
  if (start.sign != target.sign) throw SignMismatch("gallery ends must have the same sign");
  const int sign = start.sign;
  std::set<std::pair<std::size_t, std::int64_t>> dead;
  std::vector<bool> folds;
  std::vector<bool> thick;

  auto dfs = [&](auto&& self, std::size_t i, std::int64_t n) -> bool {
    if (i == type.size()) return n == target.index();
    if (dead.count({i, n})) return false;
    std::int64_t s = wall_of(n, type[i]);
    bool th = is_thick(p, s);
    thick.push_back(th);
    folds.push_back(false);
    if (self(self, i + 1, s == n ? n - 1 : n + 1)) return true;
    if (th && chamber_side(sign, n, s) != chamber_side(center.sign, center.index(), s)) {
      folds.back() = true;
      if (self(self, i + 1, n)) return true;
    }
    thick.pop_back();
    folds.pop_back();
    dead.insert({i, n});
    return false;
  };

  if (!dfs(dfs, 0, start.index())) return std::nullopt;
  return make_gallery(sign, start.index(), type, folds, thick);
}

CountPoly theorem_count(const Superdecoration& sd) {
  if (sd.path.eps > 0 && sd.path.origin.x == 0 && sd.path.origin.y == 0)
    throw ProblematicCase("epsilon = +1 with a path starting at the origin");
  CountPoly c{sd.m_doubleprime0, 0};
  for (const auto& sp : sd.points) c = c * count_liftings_poly(sp.gallery, sp.dec.c_minus.sign, sp.dec.c_minus.index());
  return c;
}

}  // namespace masure
