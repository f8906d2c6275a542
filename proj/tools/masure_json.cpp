#include "masure_json.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "masure/parse.hpp"

namespace masure::io {

json q_json(const Q& q) { return q_str(q); }

Q q_from(const json& j) {
  if (j.is_number_integer()) return Q(j.get<long>());
  if (j.is_string()) return parse_rational_number(j.get<std::string>());
  throw ParseError("expected a rational number, got " + j.dump());
}

json vec_json(const Vec2& v) { return json::array({q_json(v.x), q_json(v.y)}); }

Vec2 vec_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("expected [x,y], got " + j.dump());
  return {q_from(j[0]), q_from(j[1])};
}

json point_json(const Point& p) { return {{"x", q_json(p.x)}, {"y", q_json(p.y)}, {"sheet", sheet_name(p.sheet)}}; }

Point point_from(const json& j) {
  if (j.is_array()) {
    Vec2 v = vec_from(j);
    return {v.x, v.y, Sheet::plus};
  }
  if (!j.is_object()) throw ParseError("expected a point, got " + j.dump());
  Point p{q_from(j.at("x")), q_from(j.at("y")), Sheet::plus};
  if (j.contains("sheet")) p.sheet = parse_sheet(j.at("sheet").get<std::string>());
  return p;
}

json chamber_json(const LocalChamber& c) {
  return {{"base", point_json(c.base)}, {"sign", c.sign}, {"dir", c.dir.word()}, {"index", c.index()}};
}

LocalChamber chamber_from(const json& j) {
  LocalChamber c;
  c.base = point_from(j.at("base"));
  c.sign = j.at("sign").get<int>();
  if (c.sign != 1 && c.sign != -1) throw ParseError("chamber sign must be 1 or -1");
  c.dir = WeylElt::from_word(j.at("dir").get<std::string>());
  return c;
}

json path_json(const PiecewisePath& p) {
  json pieces = json::array();
  for (const auto& pc : p.pieces) {
    json o = {{"t0", q_json(pc.t0)}, {"t1", q_json(pc.t1)}, {"weyl", pc.w.word()}};
    if (!pc.label.empty()) o["label"] = pc.label;
    pieces.push_back(o);
  }
  json out = {{"schema", kSchema}, {"shape", vec_json(p.shape)}, {"eps", p.eps}, {"pieces", pieces},
              {"origin", vec_json({p.origin.x, p.origin.y})}};
  if (p.origin.sheet != Sheet::plus) out["sheet"] = sheet_name(p.origin.sheet);
  return out;
}

PiecewisePath path_from(const json& j) {
  if (!j.is_object()) throw ParseError("a path must be a JSON object");
  if (j.contains("schema") && j.at("schema") != kSchema) throw ParseError("unsupported schema " + j.at("schema").dump());
  Vec2 shape = vec_from(j.at("shape"));
  int eps = j.at("eps").get<int>();
  Point origin = point_from(j.at("origin"));
  if (j.contains("sheet")) origin.sheet = parse_sheet(j.at("sheet").get<std::string>());
  std::vector<PathPiece> pieces;
  for (const auto& pc : j.at("pieces")) {
    PathPiece p{q_from(pc.at("t0")), q_from(pc.at("t1")), WeylElt::from_word(pc.at("weyl").get<std::string>()), ""};
    if (pc.contains("label")) p.label = pc.at("label").get<std::string>();
    pieces.push_back(p);
  }
  return build_path(shape, eps, origin, std::move(pieces));
}

json gallery_json(const Gallery& g) {
  json steps = json::array();
  for (const auto& s : g.steps) steps.push_back({{"wall", s.wall}, {"thick", s.thick}, {"stammer", s.fold}});
  return {{"sign", g.sign}, {"start", g.start()}, {"type", type_str(g.type())}, {"steps", steps}, {"chambers", g.chambers}};
}

Gallery gallery_from(const json& j) {
  GalleryType type = parse_type(j.at("type").get<std::string>());
  std::vector<bool> folds, thick;
  for (const auto& s : j.at("steps")) {
    folds.push_back(s.at("stammer").get<bool>());
    thick.push_back(s.at("thick").get<bool>());
  }
  Gallery g = make_gallery(j.at("sign").get<int>(), j.at("start").get<std::int64_t>(), type, folds, thick);
  if (j.contains("chambers") && j.at("chambers").get<std::vector<std::int64_t>>() != g.chambers)
    throw ParseError("gallery chambers do not follow from its type and stammer flags");
  return g;
}

json superdecoration_json(const Superdecoration& sd) {
  json pts = json::array();
  for (const auto& sp : sd.points) {
    const auto& d = sp.dec;
    pts.push_back({{"t", q_json(d.t)},
                   {"p", point_json(d.p)},
                   {"fold", d.fold},
                   {"c_inf", chamber_json(d.c_inf)},
                   {"c_plus", chamber_json(d.c_plus)},
                   {"c_minus", chamber_json(d.c_minus)},
                   {"c_paren", chamber_json(d.c_paren)},
                   {"w_plus", d.w_plus.word()},
                   {"w_minus", d.w_minus.word()},
                   {"type", type_str(sp.type)},
                   {"m", sp.m},
                   {"m_prime", sp.m_prime},
                   {"m_doubleprime", sp.m_doubleprime},
                   {"gallery", gallery_json(sp.gallery)}});
  }
  return {{"schema", kSchema},
          {"path", path_json(sd.path)},
          {"c_inf0", chamber_json(sd.c_inf0)},
          {"c_plus0", chamber_json(sd.c_plus0)},
          {"m_doubleprime0", sd.m_doubleprime0},
          {"points", pts}};
}

Superdecoration superdecoration_from(const json& j) {
  if (!j.is_object()) throw ParseError("a superdecoration must be a JSON object");
  if (j.contains("schema") && j.at("schema") != kSchema) throw ParseError("unsupported schema " + j.at("schema").dump());
  Superdecoration sd;
  sd.path = path_from(j.at("path"));
  sd.c_inf0 = chamber_from(j.at("c_inf0"));
  sd.c_plus0 = chamber_from(j.at("c_plus0"));
  sd.m_doubleprime0 = j.at("m_doubleprime0").get<std::int64_t>();
  for (const auto& pj : j.at("points")) {
    SuperPoint sp;
    auto& d = sp.dec;
    d.t = q_from(pj.at("t"));
    if (d.t <= 0 || d.t >= 1) throw ParseError("decorated points need 0 < t < 1");
    d.p = sd.path.at(d.t);
    d.germ_plus = sd.path.derivative(sd.path.piece_at(d.t, true));
    d.germ_minus = sd.path.derivative(sd.path.piece_at(d.t, false));
    d.fold = d.germ_plus != d.germ_minus;
    d.c_inf = chamber_from(pj.at("c_inf"));
    d.c_plus = chamber_from(pj.at("c_plus"));
    d.c_minus = chamber_from(pj.at("c_minus"));
    d.c_paren = chamber_from(pj.at("c_paren"));
    for (const LocalChamber* c : {&d.c_inf, &d.c_plus, &d.c_minus, &d.c_paren})
      if (c->base != d.p) throw ParseError("chamber based at " + point_str(c->base) + " instead of " + point_str(d.p));
    d.w_plus = weyl_distance(d.c_inf, d.c_plus);
    d.w_minus = weyl_distance(d.c_inf, d.c_paren);
    sp.type = parse_type(pj.at("type").get<std::string>());
    sp.m = static_cast<std::int64_t>(sp.type.size());
    sp.m_prime = m_prime(d.c_inf, d.c_plus, d.germ_plus);
    sp.m_doubleprime = m_doubleprime(d.p, d.c_inf, d.c_plus, d.germ_plus);
    sp.gallery = gallery_from(pj.at("gallery"));
    sd.points.push_back(std::move(sp));
  }
  return sd;
}

json count_json(const CountPoly& c) { return {{"n", c.n}, {"nprime", c.nprime}, {"text", c.str()}}; }

json certificate_json(const MembershipCertificate& c) {
  return {{"tag", tag_name(c.tag)}, {"verdict", verdict_name(c.verdict)}, {"depth", c.depth}, {"witness", c.witness}};
}

json hecke_json(const HeckeReport& r) {
  json pts = json::array();
  for (const auto& hp : r.points) {
    json o = {{"t", q_json(hp.t)}, {"p", point_json(hp.p)}, {"xi_plus", vec_json(hp.xi_plus)}, {"xi_minus", vec_json(hp.xi_minus)}};
    if (hp.chain) {
      json roots = json::array();
      for (const auto& b : hp.chain->roots) roots.push_back({{"eps", b.eps}, {"k", b.k}, {"m", b.m}});
      json xs = json::array();
      for (const auto& x : hp.chain->xi) xs.push_back(vec_json(x));
      o["chain"] = {{"xi", xs}, {"roots", roots}, {"text", hp.chain->str()}};
    } else {
      o["chain"] = nullptr;
    }
    pts.push_back(o);
  }
  return {{"ok", r.ok}, {"reason", r.reason}, {"points", pts}};
}

json retract_json(const RetractResult& r, const std::string& word) {
  json pieces = json::array();
  for (const auto& pc : r.pieces)
    pieces.push_back({{"t0", q_json(pc.t0)}, {"t1", q_json(pc.t1)}, {"label", pc.label}, {"map", pc.map.str()}, {"weyl", pc.map.lin.word()}});
  json folds = json::array();
  for (std::size_t i = 0; i < r.fold_times.size(); ++i) folds.push_back({{"t", q_json(r.fold_times[i])}, {"point", point_json(r.fold_points[i])}});
  json certs = json::array();
  for (const auto& c : r.certificates) certs.push_back(certificate_json(c));
  json out = {{"schema", kSchema},
              {"command", "retract"},
              {"word", word},
              {"range", {q_json(r.lo), q_json(r.hi)}},
              {"pieces", pieces},
              {"folds", folds},
              {"path", path_json(r.path)},
              {"certificates", certs},
              {"notes", r.notes}};
  if (r.superdecoration) {
    out["superdecoration"] = superdecoration_json(*r.superdecoration);
    try {
      out["count"] = count_json(theorem_count(*r.superdecoration));
    } catch (const ProblematicCase& e) {
      out["count"] = e.what();
    }
  } else {
    out["superdecoration"] = nullptr;
    out["superdecoration_error"] = r.superdecoration_error;
    if (r.bound_needed) out["bound_needed"] = *r.bound_needed;
  }
  return out;
}

const json& unwrap(const json& j, const char* key) { return j.is_object() && j.contains(key) && j.at(key).is_object() ? j.at(key) : j; }

json read_json_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot read " + file);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(file + ": " + e.what());
  }
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", std::abs(v) < 5e-5 ? 0.0 : v);
  return buf;
}

}  // namespace

std::string retract_svg(const RetractResult& r) {
  std::vector<Point> pts{r.path.origin};
  for (const auto& p : r.fold_points) pts.push_back(p);
  pts.push_back(r.path.end());
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  for (const auto& p : pts) {
    x0 = std::min(x0, p.x.get_d());
    x1 = std::max(x1, p.x.get_d());
    y0 = std::min(y0, p.y.get_d());
    y1 = std::max(y1, p.y.get_d());
  }
  const double pad = 0.25 * std::max({x1 - x0, y1 - y0, 1.0});
  x0 -= pad, x1 += pad, y0 -= pad, y1 += pad;
  const double scale = 400.0 / std::max(x1 - x0, y1 - y0);
  auto X = [&](double x) { return num((x - x0) * scale); };
  auto Y = [&](double y) { return num((y1 - y) * scale); };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num((x1 - x0) * scale) << "\" height=\"" << num((y1 - y0) * scale)
    << "\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // fixed walls x + k y + (k-1) = 0 of the reflections R_{k-1} met by the retraction
  std::set<std::int64_t> ks;
  std::regex rx("R([0-9]+)");
  for (const auto& pc : r.pieces)
    for (auto it = std::sregex_iterator(pc.label.begin(), pc.label.end(), rx); it != std::sregex_iterator(); ++it)
      ks.insert(std::stoll((*it)[1]) + 1);
  for (std::int64_t k : ks) {
    double k_ = static_cast<double>(k);
    s << "<line x1=\"" << X(-k_ * y0 - (k_ - 1)) << "\" y1=\"" << Y(y0) << "\" x2=\"" << X(-k_ * y1 - (k_ - 1)) << "\" y2=\"" << Y(y1)
      << "\" stroke=\"#888\" stroke-width=\"0.5\"><title>M_" << 1 - k << "</title></line>\n";
  }
  s << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) s << (i ? " " : "") << X(pts[i].x.get_d()) << "," << Y(pts[i].y.get_d());
  s << "\"/>\n";
  for (const auto& p : r.fold_points)
    s << "<circle cx=\"" << X(p.x.get_d()) << "\" cy=\"" << Y(p.y.get_d()) << "\" r=\"3\" fill=\"crimson\"><title>" << point_str(p)
      << "</title></circle>\n";
  s << "</svg>\n";
  return s.str();
}

}  // namespace masure::io
