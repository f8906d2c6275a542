#include "doctest.h"
#include "masure/heckepath.hpp"
#include "support.hpp"

using namespace masure;

namespace {

const Vec2 kPhi{0, -1};

// the retraction of g_2 written out by hand. R_m is x -> -x - 2(m+1)y - 2m, with linear
// part (-1, -(m+1)); the pieces are id, R_2, R_2 R_5, R_5.
PiecewisePath example_path() {
  PiecewisePath p;
  p.shape = kPhi;
  p.origin = Point{0, 0};
  p.pieces = {{0, Q(2, 3), WeylElt(), "id"},
              {Q(2, 3), Q(5, 6), WeylElt(-1, -3), "R2"},
              {Q(5, 6), Q(8, 9), WeylElt(-1, -3) * WeylElt(-1, -6), "R2R5"},
              {Q(8, 9), 1, WeylElt(-1, -6), "R5"}};
  return p;
}

const PointDecoration& at(const Decoration& d, const Q& t) {
  for (const auto& p : d.points)
    if (p.t == t) return p;
  FAIL("no decorated point at t=" << q_str(t));
  return d.points.front();
}

}  // namespace

TEST_CASE("path construction") {
  PiecewisePath p = example_path();
  CHECK(p.pieces.size() == 4);
  CHECK(p.breakpoints() == std::vector<Q>{Q(2, 3), Q(5, 6), Q(8, 9)});
  CHECK(p.at(Q(2, 3)) == Point{0, Q(-2, 3)});
  CHECK(p.at(Q(5, 6)) == Point{1, Q(-5, 6)});
  CHECK(p.at(Q(8, 9)) == Point{Q(2, 3), Q(-8, 9)});
  CHECK(p.end() == Point{2, -1});
  CHECK(p.derivative(1) == Vec2{6, -1});
  CHECK(p.derivative(2) == Vec2{-6, -1});
  CHECK(p.derivative(3) == Vec2{12, -1});
  // from derivatives alone the shortest Weyl element is chosen
  PiecewisePath q = path_from_derivatives(kPhi, -1, Point{0, 0}, {0, Q(2, 3), 1}, {{0, -1}, {6, -1}});
  CHECK(q.pieces[1].w.length() == 6);
  CHECK(q.at(Q(5, 6)) == Point{1, Q(-5, 6)});
  CHECK(weyl_for_derivative(kPhi, {6, -1})->length() == 6);
  CHECK(!weyl_for_derivative(kPhi, {1, -1}).has_value());
  // a derivative that is not a Weyl image of the shape
  CHECK_THROWS_AS(path_from_derivatives(kPhi, -1, Point{0, 0}, {0, 1}, {{1, -1}}), NotLambdaPath);
  CHECK_THROWS_AS(path_from_derivatives(kPhi, -1, Point{0, 0}, {0, Q(1, 2), Q(1, 3), 1}, {{0, -1}, {0, -1}, {0, -1}}), NotLambdaPath);
}

TEST_CASE("Hecke conditions") {
  HeckeReport ok = verify_hecke(example_path());
  CHECK(ok.ok);
  CHECK(ok.points.size() == 3);
  for (const auto& hp : ok.points) CHECK(hp.chain.has_value());

  PiecewisePath straight = path_from_derivatives(kPhi, -1, Point{0, 0}, {0, 1}, {{0, -1}});
  CHECK(verify_hecke(straight).ok);

  // at (0,-1/2) the walls of odd slope are thin, and (0,-1) -> (6,-1) needs an odd total shift
  PiecewisePath off = path_from_derivatives(kPhi, -1, Point{0, 0}, {0, Q(1, 2), 1}, {{0, -1}, {6, -1}});
  CHECK_FALSE(verify_hecke(off).ok);
}

TEST_CASE("decorations of the worked example") {
  Decoration d = decorate(example_path());
  // fold at p3 = (0,-2/3)
  const auto& p3 = at(d, Q(2, 3));
  CHECK(p3.fold);
  CHECK(p3.w_plus == WeylElt(-1, -3));
  CHECK(p3.w_plus.length() == 7);
  CHECK(p3.w_minus == WeylElt());
  const auto& p6 = at(d, Q(5, 6));
  CHECK(p6.w_plus == WeylElt(1, 4));
  CHECK(p6.w_plus.length() == 8);
  CHECK(p6.w_minus == WeylElt(-1, -2));
  CHECK(p6.w_minus.length() == 5);
  const auto& p9 = at(d, Q(8, 9));
  CHECK(p9.w_plus == WeylElt(1, 6));
  CHECK(p9.w_plus.length() == 12);
  CHECK(p9.w_minus.length() == 7);
  CHECK(bruhat_failures(d).empty());
  for (const auto& pd : d.points) {
    CHECK(pd.c_paren == project_chamber(pd.p, pd.germ_minus, pd.c_minus));
    CHECK(pd.c_inf == c_infinity_chamber(pd.p));
  }
}

TEST_CASE("superdecoration and the global count") {
  Superdecoration sd = superdecorate(decorate(example_path()));
  CHECK(validate_superdecoration(sd).empty());
  CountPoly c = theorem_count(sd);
  // independent product of per-point brute-force counts
  for (unsigned long q = 2; q <= 3; ++q) {
    mpz_class total = CountPoly{sd.m_doubleprime0, 0}.eval(q);
    for (const auto& sp : sd.points) total *= brute_force_liftings(sp.gallery, sp.dec.c_minus.sign, sp.dec.c_minus.index(), q);
    CHECK(total == c.eval(q));
  }
  // the three fold points each contribute one (q-1)
  CHECK(c.nprime == 3);
  Superdecoration broken = sd;
  broken.points[0].gallery.steps.clear();
  CHECK_FALSE(validate_superdecoration(broken).empty());
}

TEST_CASE("bounds and problematic starts") {
  PiecewisePath steep = path_from_derivatives(kPhi, -1, Point{0, 0}, {0, Q(1, 2), 1}, {{0, -1}, {40, -1}});
  CHECK(certified_kbound(steep) >= 40);
  CHECK_THROWS_AS(crossing_events(steep, 3), BoundExceeded);
  PiecewisePath up = path_from_derivatives({0, 1}, 1, Point{0, 0}, {0, 1}, {{0, 1}});
  CHECK_THROWS_AS(decorate(up), ProblematicCase);
}
