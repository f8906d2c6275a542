#include "masure/heckepath.hpp"

#include <algorithm>
#include <cstdlib>

namespace masure {

namespace {

Q qi(std::int64_t v) { return Q(static_cast<long>(v)); }

std::int64_t floor_i(const Q& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!f.fits_slong_p()) throw Overflow("value " + q.get_str() + " out of range");
  return f.get_si();
}

std::int64_t ceil_i(const Q& q) {
  mpz_class f;
  mpz_cdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!f.fits_slong_p()) throw Overflow("value " + q.get_str() + " out of range");
  return f.get_si();
}

Vec2 as_vec(const Point& p) { return {p.x, p.y}; }

bool in_closure(const LocalChamber& c, const Vec2& v) {
  if (v.y == 0 || (v.y > 0) != (c.sign > 0)) return false;
  Q s = v.x / v.y;
  return s >= qi(c.index()) && s <= qi(c.index() + 1);
}

LocalChamber moved(const Point& p, const LocalChamber& src, const WeylElt& w) { return {p, src.sign, w * src.dir}; }

}  // namespace

std::size_t PiecewisePath::piece_at(const Q& t, bool from_right) const {
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (from_right && t >= pieces[i].t0 && t < pieces[i].t1) return i;
    if (!from_right && t > pieces[i].t0 && t <= pieces[i].t1) return i;
  }
  return from_right ? pieces.size() - 1 : 0;
}

Point PiecewisePath::at(const Q& t) const {
  Point p = origin;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& pc = pieces[i];
    if (t <= pc.t0) break;
    Q dt = (t < pc.t1 ? t : pc.t1) - pc.t0;
    Vec2 d = derivative(i);
    p.x += dt * d.x;
    p.y += dt * d.y;
  }
  return p;
}

std::vector<Q> PiecewisePath::breakpoints() const {
  std::vector<Q> out;
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i)
    if (derivative(i) != derivative(i + 1)) out.push_back(pieces[i].t1);
  return out;
}

PiecewisePath build_path(const Vec2& shape, int eps, const Point& origin, std::vector<PathPiece> pieces) {
  if (eps != 1 && eps != -1) throw NotLambdaPath("epsilon must be +1 or -1");
  Vec2 e{eps * shape.x, eps * shape.y};
  if (!(e.y > 0 && e.x >= 0 && e.x <= e.y))
    throw NotLambdaPath("shape " + point_str({shape.x, shape.y}) + " is not in eps.(closed C_f) with positive level");
  if (origin.sheet != Sheet::plus) throw NotLambdaPath("paths live on the plus sheet");
  bool at_zero = origin.x == 0 && origin.y == 0;
  if (!at_zero && !(eps * origin.y > 0)) throw NotLambdaPath("origin " + point_str(origin) + " is not in eps.T");
  if (pieces.empty()) throw NotLambdaPath("no pieces");
  Q t = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].t0 != t) throw NotLambdaPath("piece " + std::to_string(i) + " does not start at " + q_str(t));
    if (!(pieces[i].t1 > pieces[i].t0)) throw NotLambdaPath("piece " + std::to_string(i) + " is empty");
    t = pieces[i].t1;
  }
  if (t != 1) throw NotLambdaPath("pieces end at " + q_str(t) + " instead of 1");
  PiecewisePath path{shape, eps, origin, {}};
  for (auto& pc : pieces) {
    if (!path.pieces.empty() && path.pieces.back().w == pc.w)
      path.pieces.back().t1 = pc.t1;
    else
      path.pieces.push_back(std::move(pc));
  }
  return path;
}

std::optional<WeylElt> weyl_for_derivative(const Vec2& shape, const Vec2& v) {
  if (v.y != shape.y || shape.y == 0) return std::nullopt;
  std::optional<WeylElt> best;
  for (int s : {1, -1}) {
    Q j = (v.x - s * shape.x) / (2 * shape.y);
    if (j.get_den() != 1 || !j.get_num().fits_slong_p()) continue;
    WeylElt w(s, j.get_num().get_si());
    if (!best || w.length() < best->length()) best = w;
  }
  return best;
}

PiecewisePath path_from_derivatives(const Vec2& shape, int eps, const Point& origin, const std::vector<Q>& breaks,
                                    const std::vector<Vec2>& derivs) {
  if (breaks.size() != derivs.size() + 1) throw NotLambdaPath("need one derivative per interval");
  std::vector<PathPiece> pieces;
  for (std::size_t i = 0; i < derivs.size(); ++i) {
    auto w = weyl_for_derivative(shape, derivs[i]);
    if (!w) throw NotLambdaPath("derivative " + std::to_string(i) + " is not in W.shape");
    pieces.push_back({breaks[i], breaks[i + 1], *w, ""});
  }
  return build_path(shape, eps, origin, std::move(pieces));
}

std::int64_t certified_kbound(const PiecewisePath& path) {
  Q m = 0;
  auto upd = [&](const Q& x, const Q& y) {
    if (y == 0) return;
    Q s = abs(x / y);
    if (s > m) m = s;
  };
  for (std::size_t i = 0; i < path.pieces.size(); ++i) {
    Vec2 d = path.derivative(i);
    upd(d.x, d.y);
    Point a = path.at(path.pieces[i].t0), b = path.at(path.pieces[i].t1);
    upd(a.x, a.y);
    upd(b.x, b.y);
  }
  return ceil_i(m) + 1;
}

std::vector<CrossingEvent> crossing_events(const PiecewisePath& path, std::int64_t k_bound) {
  const std::int64_t K = certified_kbound(path);
  if (K > k_bound)
    throw BoundExceeded("walls up to slope " + std::to_string(K) + " are needed, bound is " + std::to_string(k_bound), K);
  std::vector<CrossingEvent> out;
  for (std::size_t i = 0; i < path.pieces.size(); ++i) {
    const auto& pc = path.pieces[i];
    Vec2 D = path.derivative(i);
    Vec2 P = as_vec(path.at(pc.t0));
    for (std::int64_t sigma = -K; sigma <= K; ++sigma) {
      int eps;
      std::int64_t k;
      wall_root(sigma, eps, k);
      Q bD = eval_vec(eps, k, D);
      if (bD == 0) continue;
      Q b0 = eval_vec(eps, k, P);
      Q b1 = b0 + (pc.t1 - pc.t0) * bD;
      std::vector<std::int64_t> levels;
      if (bD > 0)
        for (std::int64_t n = ceil_i(b0); qi(n) < b1; ++n) levels.push_back(n);
      else
        for (std::int64_t n = floor_i(b0); qi(n) > b1; --n) levels.push_back(n);
      for (std::int64_t n : levels) {
        Q t = pc.t0 + (qi(n) - b0) / bD;
        Point p = path.at(t);
        LocalChamber ci;
        try {
          ci = c_infinity_chamber(p, p.y == 0 ? path.eps : 0);
        } catch (const NotDefined&) {
          continue;
        }
        if (chamber_side(ci.sign, ci.index(), sigma) != -vec_side(D, sigma)) continue;
        out.push_back({t, p, sigma, AffineRoot{eps, k, -n}, i});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const CrossingEvent& a, const CrossingEvent& b) {
    return a.t != b.t ? a.t < b.t : a.sigma < b.sigma;
  });
  return out;
}

std::string Chain::str() const {
  std::string out = point_str({xi.front().x, xi.front().y});
  for (std::size_t i = 0; i < roots.size(); ++i) out += " -[" + roots[i].str() + "]-> " + point_str({xi[i + 1].x, xi[i + 1].y});
  return out;
}

namespace {

struct ChainCand {
  std::int64_t sigma;
  int eps;
  std::int64_t k;
};

std::vector<ChainCand> chain_candidates(const LocalChamber& ci, const Vec2& a, const Vec2& b) {
  std::int64_t lo = ci.index(), hi = ci.index();
  for (const Vec2* v : {&a, &b}) {
    if (v->y == 0) continue;
    std::int64_t f = floor_i(v->x / v->y);
    lo = std::min(lo, f);
    hi = std::max(hi, f);
  }
  std::vector<ChainCand> out;
  for (std::int64_t s = lo - 1; s <= hi + 2; ++s) {
    int eps;
    std::int64_t k;
    wall_root(s, eps, k);
    int side = chamber_side(ci.sign, ci.index(), s);
    out.push_back({s, side * eps, side * k});
  }
  std::stable_sort(out.begin(), out.end(), [](const ChainCand& x, const ChainCand& y) {
    if (std::llabs(x.k) != std::llabs(y.k)) return std::llabs(x.k) < std::llabs(y.k);
    return x.eps > y.eps;
  });
  return out;
}

std::int64_t chain_window(const Point& p, const Vec2& a, const Vec2& b) {
  LocalChamber ci = c_infinity_chamber(p);
  std::int64_t m = std::int64_t(std::llabs(ci.index())) + 2;
  for (const Vec2* v : {&a, &b})
    if (v->y != 0) m = std::max<std::int64_t>(m, std::llabs(floor_i(v->x / v->y)) + 3);
  return m;
}

}  // namespace

std::optional<Chain> chain_search(const Point& p, const Vec2& xi_plus, const Vec2& xi_minus) {
  LocalChamber ci = c_infinity_chamber(p);
  Chain ch;
  ch.xi.push_back(xi_plus);
  if (xi_plus == xi_minus) return ch;
  auto cands = chain_candidates(ci, xi_plus, xi_minus);
  std::size_t limit = 1;
  for (const auto& c : cands)
    if (eval_vec(c.eps, c.k, xi_plus) < 0) ++limit;
  std::vector<Vec2> seen{xi_plus};

  auto dfs = [&](auto&& self, const Vec2& xi) -> bool {
    if (xi == xi_minus) return true;
    if (ch.roots.size() >= limit) return false;
    for (const auto& c : cands) {
      if (!(eval_vec(c.eps, c.k, xi) < 0) || !is_thick(p, c.sigma)) continue;
      Vec2 nx = reflect_vec(c.eps, c.k, xi);
      if (std::find(seen.begin(), seen.end(), nx) != seen.end()) continue;
      seen.push_back(nx);
      Q v = c.eps * p.x + qi(c.k) * p.y;
      ch.roots.push_back({c.eps, c.k, -v.get_num().get_si()});
      ch.xi.push_back(nx);
      if (self(self, nx)) return true;
      ch.roots.pop_back();
      ch.xi.pop_back();
    }
    return false;
  };
  if (dfs(dfs, xi_plus)) return ch;
  return std::nullopt;
}

HeckeReport verify_hecke(const PiecewisePath& path, std::int64_t k_bound) {
  HeckeReport rep;
  for (const Q& t : path.breakpoints()) {
    HeckePoint hp;
    hp.t = t;
    hp.p = path.at(t);
    hp.xi_plus = path.derivative(path.piece_at(t, true));
    hp.xi_minus = path.derivative(path.piece_at(t, false));
    std::int64_t need = chain_window(hp.p, hp.xi_plus, hp.xi_minus);
    if (need > k_bound)
      throw BoundExceeded("chain search at t=" + q_str(t) + " needs slopes up to " + std::to_string(need), need);
    hp.chain = chain_search(hp.p, hp.xi_plus, hp.xi_minus);
    if (!hp.chain && rep.ok) {
      rep.ok = false;
      rep.reason = "no chain of thick roots at t=" + q_str(t) + ", point " + point_str(hp.p);
    }
    rep.points.push_back(std::move(hp));
  }
  return rep;
}

std::vector<Q> subdivision(const PiecewisePath& path, std::int64_t k_bound) {
  std::vector<Q> out = path.breakpoints();
  for (const auto& e : crossing_events(path, k_bound))
    if (e.t > 0 && e.t < 1) out.push_back(e.t);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Decoration decorate(const PiecewisePath& path, std::int64_t k_bound) {
  Decoration d;
  d.path = path;
  const Point src{path.shape.x, path.shape.y, Sheet::plus};
  LocalChamber ci_src = c_infinity_chamber(src);
  LocalChamber plus_src = project_chamber(src, path.shape, ci_src);
  LocalChamber minus_src = project_chamber(src, {-path.shape.x, -path.shape.y}, ci_src);
  LocalChamber paren_src = project_chamber(src, path.shape, minus_src);

  const Point& o = path.origin;
  try {
    d.c_inf0 = c_infinity_chamber(o, path.eps);
  } catch (const NotDefined&) {
    throw ProblematicCase("no negative chamber at infinity at the start point " + point_str(o) + " for epsilon = +1");
  }
  d.c_plus0 = project_chamber(o, path.derivative(0), d.c_inf0);

  for (const Q& t : subdivision(path, k_bound)) {
    PointDecoration pd;
    pd.t = t;
    pd.p = path.at(t);
    std::size_t ip = path.piece_at(t, false), in = path.piece_at(t, true);
    pd.germ_plus = path.derivative(in);
    pd.germ_minus = path.derivative(ip);
    pd.fold = pd.germ_plus != pd.germ_minus;
    pd.c_inf = c_infinity_chamber(pd.p);
    pd.c_plus = moved(pd.p, plus_src, path.pieces[in].w);
    pd.c_minus = moved(pd.p, minus_src, path.pieces[ip].w);
    pd.c_paren = moved(pd.p, paren_src, path.pieces[ip].w);
    pd.w_plus = weyl_distance(pd.c_inf, pd.c_plus);
    pd.w_minus = weyl_distance(pd.c_inf, pd.c_paren);
    d.points.push_back(std::move(pd));
  }
  return d;
}

std::vector<std::string> bruhat_failures(const Decoration& d) {
  std::vector<std::string> out;
  WeylElt prev = weyl_distance(d.c_inf0, d.c_plus0);
  for (const auto& pd : d.points) {
    if (!bruhat_leq(pd.w_minus, pd.w_plus))
      out.push_back("t=" + q_str(pd.t) + ": w- = " + pd.w_minus.word() + " is not below w+ = " + pd.w_plus.word());
    if (!bruhat_leq(pd.w_minus, prev))
      out.push_back("t=" + q_str(pd.t) + ": w- = " + pd.w_minus.word() + " is not below the previous w+ = " + prev.word());
    prev = pd.w_plus;
  }
  return out;
}

Superdecoration superdecorate(const Decoration& d) {
  Superdecoration sd;
  sd.path = d.path;
  sd.c_inf0 = d.c_inf0;
  sd.c_plus0 = d.c_plus0;
  sd.m_doubleprime0 = m_doubleprime(d.path.origin, d.c_inf0, d.c_plus0, d.path.derivative(0));
  for (const auto& pd : d.points) {
    SuperPoint sp;
    sp.dec = pd;
    sp.type = minimal_gallery_type(pd.c_inf, pd.c_plus);
    sp.m = static_cast<std::int64_t>(sp.type.size());
    sp.m_prime = m_prime(pd.c_inf, pd.c_plus, pd.germ_plus);
    sp.m_doubleprime = m_doubleprime(pd.p, pd.c_inf, pd.c_plus, pd.germ_plus);
    auto g = find_centrifugal_gallery(pd.p, pd.c_inf, sp.type, pd.c_paren, pd.c_minus);
    if (!g)
      throw DecorationMismatch("no centrifugally folded gallery of type " + type_str(sp.type) + " ends at " + pd.c_paren.str() +
                               " (t=" + q_str(pd.t) + ")");
    sp.gallery = *g;
    sd.points.push_back(std::move(sp));
  }
  return sd;
}

std::vector<std::string> validate_superdecoration(const Superdecoration& sd) {
  std::vector<std::string> bad;
  const int eps = sd.path.eps;
  if (sd.c_plus0 != project_chamber(sd.path.origin, sd.path.derivative(0), sd.c_inf0))
    bad.push_back("C+ at the start is not the projection of C_infinity");
  for (const auto& sp : sd.points) {
    const auto& pd = sp.dec;
    std::string at = "t=" + q_str(pd.t) + ": ";
    if (pd.c_plus.sign != eps || !in_closure(pd.c_plus, pd.germ_plus)) bad.push_back(at + "C+ does not contain pi'_+");
    if (pd.c_minus.sign != -eps || !in_closure(pd.c_minus, {-pd.germ_minus.x, -pd.germ_minus.y}))
      bad.push_back(at + "C- does not contain pi_-");
    if (pd.c_paren != project_chamber(pd.p, pd.germ_minus, pd.c_minus))
      bad.push_back(at + "C(+) is not the projection of C- on the continued germ");
    if (sp.type != minimal_gallery_type(pd.c_inf, pd.c_plus)) bad.push_back(at + "type is not the reduced type from C_infinity to C+");
    for (std::size_t i = 1; i < sp.type.size(); ++i)
      if (sp.type[i] == sp.type[i - 1]) bad.push_back(at + "type is not reduced");
    const Gallery& g = sp.gallery;
    if (g.type() != sp.type) bad.push_back(at + "gallery has the wrong type");
    if (g.start() != pd.c_inf.index() || g.end() != pd.c_paren.index()) bad.push_back(at + "gallery does not join C_infinity to C(+)");
    std::vector<bool> folds;
    for (const auto& st : g.steps) folds.push_back(st.fold);
    if (folds.size() != sp.type.size()) continue;
    if (make_gallery(g.sign, g.start(), sp.type, folds, thickness_at(pd.p, g.sign, g.start(), sp.type)).chambers != g.chambers)
      bad.push_back(at + "gallery chambers or thickness are inconsistent");
    if (!is_centrifugal(g, pd.c_minus.sign, pd.c_minus.index())) bad.push_back(at + "gallery is not centrifugally folded w.r.t. C-");
  }
  return bad;
}

}  // namespace masure
