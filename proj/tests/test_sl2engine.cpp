#include "doctest.h"
#include "masure/parse.hpp"
#include "masure/sl2engine.hpp"
#include "support.hpp"

using namespace masure;
using namespace testing_support;

namespace {

RationalFunc W(std::int64_t e) { return RationalFunc::w_power(e); }
RationalU U(const RationalFunc& c, std::int64_t e) { return RationalU(LaurentU::monomial(c, e)); }
RationalU P(const char* s) { return parse_rational_u(s); }

GroupElement rand_element(std::mt19937_64& r) {
  GroupElement g;
  for (int i = 0; i < 2; ++i) {
    RationalU a = i == 0 ? rand_rational_u(r) : RationalU(rand_laurent(r, 2));
    g = g * (irand(r, 0, 1) ? x_upper(a) : x_lower(a));
  }
  GroupElement s;
  s.sd = W(irand(r, -2, 2));
  return g * s;
}

}  // namespace

TEST_CASE("semidirect multiplication") {
  GroupElement z;
  z.sd = W(1);
  // (I, w)(x(u), 1) = (x(w u), w)
  GroupElement a = z * x_upper(U(1, 1));
  CHECK(a.m[0][1] == U(W(1), 1));
  CHECK(a.sd == W(1));
  std::mt19937_64 r(41);
  for (int it = 0; it < 100; ++it) {
    GroupElement g = rand_element(r), h = rand_element(r), k = rand_element(r);
    CHECK(g * g.inverse() == GroupElement());
    CHECK((g * h) * k == g * (h * k));
    CHECK((g * h).det().is_one());
  }
}

TEST_CASE("parsing group elements and words") {
  GroupElement g = parse_group_element("[[1, w^-1*u^-1], [w*u^-1, 1+u^-2]]");
  CHECK(g == g_counterexample());
  CHECK(parse_group_element(g.str()) == g);
  CHECK(parse_group_element("[[w,0],[0,1/w]];sd=w^2").sd == W(2));
  CHECK_THROWS_AS(parse_group_element("[[2,0],[0,1]]"), ParseError);
  CHECK_THROWS_AS(parse_group_element("[[1,0],[0,1]"), ParseError);
  auto w = parse_word("x(1,3,w^2)*x(1,6,w^5)");
  CHECK(word_str(w) == word_str(word_gN(2)));
  CHECK(parse_word("e").empty());
  CHECK_THROWS_AS(parse_word("x(2,1,w)"), ParseError);
  CHECK_THROWS_AS(parse_word("x(1,1,u)"), ParseError);
  CHECK(word_element(w) == x_upper(P("w^2*u^3+w^5*u^6")));
}

TEST_CASE("rewriting identities against hand-expanded products") {
  std::mt19937_64 r(43);
  int done = 0;
  for (int it = 0; it < 200; ++it) {
    RationalU a = rand_rational_u(r, true);
    auto f = identity_rewrite_1(a);
    CHECK(f[0] * f[1] * f[2] == GroupElement::from_entries(1, a, 0, 1));
    RationalU b = rand_rational_u(r);
    RationalU p = RationalU(1) + a * b;
    if (p.is_zero()) {
      CHECK_THROWS_AS(identity_rewrite_2(a, b), SingularPivot);
      continue;
    }
    auto h = identity_rewrite_2(a, b);
    // x(a) x_-(b) = [[1+ab, a], [b, 1]]
    CHECK(h[0] * h[1] * h[2] == GroupElement::from_entries(p, a, b, 1));
    ++done;
  }
  CHECK(done > 150);
  CHECK_THROWS_AS(identity_rewrite_1(RationalU(0)), ZeroEntry);
  CHECK_THROWS_AS(identity_rewrite_2(U(1, 1), -U(1, -1)), SingularPivot);
}

TEST_CASE("root generators and fixed half-apartments") {
  RootGenerator g{1, 3, W(2)};
  CHECK(fixed_halfspace(g, Sheet::plus) == AffineRoot{1, 3, 2});
  CHECK(fixed_halfspace(g, Sheet::minus) == AffineRoot{1, 3, 2});
  CHECK(fixed_halfspace(RootGenerator{-1, 2, W(-1) + W(3)}, Sheet::plus) == AffineRoot{-1, 2, -1});
  CHECK(fixed_halfspace(RootGenerator{-1, 2, W(-1) + W(3)}, Sheet::minus) == AffineRoot{-1, 2, 3});
  CHECK(halfspace_str({1, 3, 2}, Sheet::plus) == "x+3y+2 >= 0");
  CHECK_THROWS_AS(fixed_halfspace(RootGenerator{1, 0, 0}, Sheet::plus), ZeroEntry);
  // C_infinity: positive roots need val_- > 0, negative roots val_- >= 0
  CHECK(fixes_c_infinity({1, 0, W(-1)}));
  CHECK_FALSE(fixes_c_infinity({1, 0, 1}));
  CHECK(fixes_c_infinity({1, -1, 1}));
  CHECK_FALSE(fixes_c_infinity({1, -1, W(1)}));
}

TEST_CASE("memberships") {
  auto verdict = [](const GroupElement& g, SetTag t) { return membership(g, t).verdict; };
  CHECK(verdict(x_upper(U(W(1), 3)), SetTag::K) == Verdict::yes);
  CHECK(verdict(x_upper(U(W(-1), 0)), SetTag::K) == Verdict::no);
  CHECK(verdict(diag_elt(U(W(1), 0)), SetTag::K) == Verdict::no);
  CHECK(verdict(diag_elt(U(1, 2)), SetTag::K) == Verdict::yes);
  CHECK(verdict(g_counterexample(), SetTag::SL2_Oplus_Laurent) == Verdict::no);
  CHECK(verdict(g_counterexample(), SetTag::G_loop_pol) == Verdict::yes);
  CHECK(verdict(x_upper(P("1/(1+u)")), SetTag::G_loop_pol) == Verdict::no);
  CHECK(verdict(x_lower(P("w*u^-1/(1+u^-2)")), SetTag::Kbar_loop) == Verdict::yes);
  CHECK(verdict(x_lower(P("u^-1/(w+w*u^-2)")), SetTag::Kbar_loop) == Verdict::no);
  CHECK(verdict(x_upper(U(W(-1), -1)), SetTag::U_ma_minus_Cinf) == Verdict::yes);
  CHECK(verdict(x_upper(U(W(1), -1)), SetTag::U_ma_minus_Cinf) == Verdict::no);
  CHECK(verdict(x_upper(U(W(-1), 0)), SetTag::U_ma_minus_Cinf) == Verdict::no);
  CHECK(verdict(x_lower(U(W(-1), 0)), SetTag::U_ma_minus_Cinf) == Verdict::yes);
  CHECK(verdict(x_upper(U(1, 1)), SetTag::Ibar_inf_loop) == Verdict::no);
  CHECK(verdict(x_upper(U(W(-1), 1)), SetTag::Ibar_inf_loop) == Verdict::yes);
  CHECK(verdict(g1_infinity(), SetTag::G_twin) == Verdict::yes);
  GroupElement z;
  z.sd = W(1) + 1;
  CHECK(verdict(z, SetTag::G_twin) == Verdict::no);
  CHECK(verdict(z, SetTag::G_loop_pol) == Verdict::no);
  // the witness names the offending entry
  auto c = membership(g_counterexample(), SetTag::SL2_Oplus_Laurent);
  REQUIRE(!c.witness.empty());
  CHECK(c.witness.front().find("(1,2)") != std::string::npos);
  CHECK(parse_tag(tag_name(SetTag::Ibar_inf_loop)) == SetTag::Ibar_inf_loop);
  CHECK_THROWS_AS(parse_tag("B"), ParseError);
}

TEST_CASE("delta levels and the action of N") {
  GroupElement z;
  z.sd = W(3);
  CHECK(delta_level(z, Sheet::plus) == 3);
  CHECK(delta_level(z, Sheet::minus) == -3);
  CHECK(delta_level(z, Sheet::vect) == 0);
  NAction a = n_action(n_elt(U(W(2), 3)), Sheet::plus);
  // fixes the wall x + 3y + 2 = 0 and is an involution
  Point on{Q(-2) - 3 * Q(1, 5), Q(1, 5)};
  CHECK(a.map.apply(on) == on);
  CHECK(a.map * a.map == AffineMap());
  Point off{1, 1};
  CHECK(eval_root({1, 3, 2}, a.map.apply(off)) == -eval_root({1, 3, 2}, off));
  CHECK_THROWS_AS(n_action(x_upper(U(1, 1)), Sheet::plus), NotInN);
  CHECK_THROWS_AS(n_action(n_elt(P("1+u")), Sheet::plus), NotInN);
  NAction d = n_action(diag_elt(U(W(1), 0)), Sheet::plus);
  CHECK(d.map.apply(Point{0, 0}) == Point{-2, 0});
}

TEST_CASE("retraction of g_2") {
  RetractResult r = retract_segment(word_gN(2), 0, 1);
  REQUIRE(r.pieces.size() == 4);
  std::vector<std::string> labels;
  for (const auto& p : r.pieces) labels.push_back(p.label);
  CHECK(labels == std::vector<std::string>{"id", "R2", "R2R5", "R5"});
  CHECK(r.fold_points == std::vector<Point>{{0, Q(-2, 3)}, {1, Q(-5, 6)}, {Q(2, 3), Q(-8, 9)}});
  // R_m is the reflection fixing x + (m+1) y + m = 0
  CHECK(r.pieces[1].map == AffineMap::reflection({1, 3, 2}));
  CHECK(r.pieces[3].map == AffineMap::reflection({1, 6, 5}));
  for (const auto& c : r.certificates) CHECK(c.verdict == Verdict::yes);
  CHECK(r.superdecoration.has_value());
  RetractResult part = retract_segment(word_gN(2), Q(1, 2), Q(5, 6));
  CHECK(part.fold_times == std::vector<Q>{Q(2, 3)});
  CHECK_THROWS_AS(retract_segment(parse_word("x(-1,1,w)"), 0, 1), StrategyInapplicable);
  CHECK_THROWS_AS(retract_segment(word_gN(2), 1, 0), ParseError);
  RetractResult e = retract_segment({}, 0, 1);
  CHECK(e.pieces.size() == 1);
  CHECK(e.fold_points.empty());
}

TEST_CASE("counter-example report") {
  for (std::uint64_t p : {0, 5}) {
    FieldScope f(p);
    CounterexampleReport rep = counterexample_report();
    CHECK(rep.checks.size() == 4);
    CHECK(rep.all_pass());
    CHECK_FALSE(rep.any_unknown());
  }
  CHECK(resolve_element("g1inf") == g1_infinity());
  CHECK(resolve_element("gN:2") == word_element(word_gN(2)));
  CHECK_THROWS_AS(resolve_word("g-counterexample"), StrategyInapplicable);
  CHECK_THROWS_AS(resolve_word("gN:x"), ParseError);
}
