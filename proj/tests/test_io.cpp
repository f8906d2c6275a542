#include "doctest.h"
#include "masure_json.hpp"

using namespace masure;

TEST_CASE("path and superdecoration JSON round trip") {
  RetractResult r = retract_segment(word_gN(2), 0, 1);
  REQUIRE(r.superdecoration.has_value());
  auto pj = io::path_json(r.path);
  PiecewisePath back = io::path_from(pj);
  CHECK(back.breakpoints() == r.path.breakpoints());
  CHECK(io::path_json(back).dump() == pj.dump());

  auto sj = io::superdecoration_json(*r.superdecoration);
  Superdecoration sd = io::superdecoration_from(sj);
  CHECK(validate_superdecoration(sd).empty());
  CHECK(theorem_count(sd) == theorem_count(*r.superdecoration));
  CHECK(io::superdecoration_json(sd).dump() == sj.dump());

  // a retract report can stand in for either file
  auto rj = io::retract_json(r, word_str(word_gN(2)));
  CHECK(io::path_from(io::unwrap(rj, "path")).pieces.size() == 4);
  CHECK(rj["count"]["text"] == "q^5*(q-1)^3");
}

TEST_CASE("malformed inputs") {
  using io::json;
  CHECK_THROWS_AS(io::q_from(json(1.5)), ParseError);
  CHECK_THROWS_AS(io::vec_from(json::array({"1"})), ParseError);
  json bad = io::path_json(retract_segment({}, 0, 1).path);
  bad["schema"] = "other/2";
  CHECK_THROWS_AS(io::path_from(bad), ParseError);
  json g = io::gallery_json(make_gallery(-1, 0, {1, 0}, {false, false}, {true, true}));
  g["chambers"] = json::array({0, 5, 6});
  CHECK_THROWS_AS(io::gallery_from(g), ParseError);
}

TEST_CASE("svg output") {
  RetractResult r = retract_segment(word_gN(2), 0, 1);
  std::string svg = io::retract_svg(r);
  CHECK(svg.rfind("<svg", 0) == 0);
  // three fold dots, walls of R2 and R5
  std::size_t dots = 0;
  for (std::size_t p = svg.find("<circle"); p != std::string::npos; p = svg.find("<circle", p + 1)) ++dots;
  CHECK(dots == 3);
  CHECK(svg.find("M_-2") != std::string::npos);
  CHECK(svg.find("M_-5") != std::string::npos);
}
