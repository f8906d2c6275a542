#include "masure/sl2engine.hpp"

#include <algorithm>
#include <functional>

#include "masure/parse.hpp"

namespace masure {

namespace {

RationalU mono(const RationalFunc& c, std::int64_t e) { return RationalU(LaurentU::monomial(c, e)); }
RationalFunc wp(std::int64_t e) { return RationalFunc::w_power(e); }

std::int64_t vplus(const RationalFunc& c) { return *val_plus(c); }
std::int64_t vminus(const RationalFunc& c) { return *val_minus(c); }

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// split at separator characters that are not nested in (), []
std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t st = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth < 0) throw ParseError("unbalanced brackets in \"" + std::string(s) + "\"");
    if (c == sep && depth == 0) {
      out.push_back(trim(s.substr(st, i - st)));
      st = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced brackets in \"" + std::string(s) + "\"");
  out.push_back(trim(s.substr(st)));
  return out;
}

std::string strip_brackets(const std::string& s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw ParseError("expected [...] in \"" + s + "\"");
  return s.substr(1, s.size() - 2);
}

}  // namespace

GroupElement GroupElement::from_entries(const RationalU& a, const RationalU& b, const RationalU& c, const RationalU& d,
                                        const RationalFunc& sd) {
  if (sd.is_zero()) throw ZeroEntry("semidirect scalar is zero");
  GroupElement g;
  g.m = {{{a, b}, {c, d}}};
  g.sd = sd;
  if (!g.det().is_one()) throw ParseError("determinant " + g.det().str() + " is not 1");
  return g;
}

RationalU GroupElement::det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

GroupElement GroupElement::inverse() const {
  RationalFunc zi = sd.inverse();
  GroupElement g;
  g.m = {{{m[1][1].subs_scale(zi), -m[0][1].subs_scale(zi)}, {-m[1][0].subs_scale(zi), m[0][0].subs_scale(zi)}}};
  g.sd = zi;
  return g;
}

std::string GroupElement::str() const {
  return "[[" + m[0][0].str() + "," + m[0][1].str() + "],[" + m[1][0].str() + "," + m[1][1].str() + "]];sd=" + sd.str();
}

GroupElement mul(const GroupElement& a, const GroupElement& b) {
  std::array<std::array<RationalU, 2>, 2> bs;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) bs[i][j] = a.sd.is_one() ? b.m[i][j] : b.m[i][j].subs_scale(a.sd);
  GroupElement g;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g.m[i][j] = a.m[i][0] * bs[0][j] + a.m[i][1] * bs[1][j];
  g.sd = a.sd * b.sd;
  return g;
}

GroupElement parse_group_element(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  RationalFunc sd(1);
  auto pos = s.find(";sd=");
  if (pos != std::string::npos) {
    sd = parse_ratfunc(s.substr(pos + 4));
    s = s.substr(0, pos);
  }
  auto rows = split_top(strip_brackets(s), ',');
  if (rows.size() != 2) throw ParseError("a matrix needs two rows");
  std::array<std::array<RationalU, 2>, 2> e;
  for (int i = 0; i < 2; ++i) {
    auto cols = split_top(strip_brackets(rows[i]), ',');
    if (cols.size() != 2) throw ParseError("a row needs two entries");
    for (int j = 0; j < 2; ++j) e[i][j] = parse_rational_u(cols[j]);
  }
  return GroupElement::from_entries(e[0][0], e[0][1], e[1][0], e[1][1], sd);
}

GroupElement x_upper(const RationalU& a) {
  GroupElement g;
  g.m[0][1] = a;
  return g;
}

GroupElement x_lower(const RationalU& b) {
  GroupElement g;
  g.m[1][0] = b;
  return g;
}

GroupElement n_elt(const RationalU& a) {
  if (a.is_zero()) throw ZeroEntry("n(a) needs a != 0");
  GroupElement g;
  g.m = {{{RationalU(0), a}, {-a.inverse(), RationalU(0)}}};
  return g;
}

GroupElement diag_elt(const RationalU& d) {
  if (d.is_zero()) throw ZeroEntry("diag(d) needs d != 0");
  GroupElement g;
  g.m = {{{d, RationalU(0)}, {RationalU(0), d.inverse()}}};
  return g;
}

GroupElement RootGenerator::element() const {
  RationalU e = mono(y, k);
  return eps > 0 ? x_upper(e) : x_lower(e);
}

std::string RootGenerator::str() const { return "x(" + std::to_string(eps) + "," + std::to_string(k) + "," + y.str() + ")"; }

std::vector<RootGenerator> parse_word(std::string_view text) {
  std::string t = trim(text);
  std::vector<RootGenerator> out;
  if (t.empty() || t == "e") return out;
  for (const auto& item : split_top(t, '*')) {
    if (item.size() < 4 || item.substr(0, 2) != "x(" || item.back() != ')') throw ParseError("bad generator \"" + item + "\"");
    auto args = split_top(std::string_view(item).substr(2, item.size() - 3), ',');
    if (args.size() != 3) throw ParseError("generator needs x(eps,k,y): \"" + item + "\"");
    RootGenerator g;
    try {
      g.eps = std::stoi(args[0]);
      g.k = std::stoll(args[1]);
    } catch (const std::exception&) {
      throw ParseError("bad generator indices in \"" + item + "\"");
    }
    if (g.eps != 1 && g.eps != -1) throw ParseError("eps must be 1 or -1 in \"" + item + "\"");
    g.y = parse_ratfunc(args[2]);
    out.push_back(g);
  }
  return out;
}

std::string word_str(const std::vector<RootGenerator>& w) {
  if (w.empty()) return "e";
  std::string out;
  for (const auto& g : w) out += (out.empty() ? "" : "*") + g.str();
  return out;
}

GroupElement word_element(const std::vector<RootGenerator>& w) {
  GroupElement g;
  for (const auto& x : w) g = g * x.element();
  return g;
}

AffineRoot fixed_halfspace(const RootGenerator& g, Sheet sheet) {
  if (g.y.is_zero()) throw ZeroEntry("generator with zero coefficient");
  AffineRoot r{g.eps, g.k, 0};
  if (sheet == Sheet::plus) r.m = vplus(g.y);
  if (sheet == Sheet::minus) r.m = -vminus(g.y);
  return r;
}

std::string halfspace_str(const AffineRoot& r, Sheet sheet) {
  std::string out = r.eps > 0 ? "x" : "-x";
  if (r.k != 0) out += (r.k > 0 ? "+" : "-") + (std::llabs(r.k) == 1 ? std::string() : std::to_string(std::llabs(r.k))) + "y";
  std::int64_t c = r.m * xi_of(sheet);
  if (c != 0) out += (c > 0 ? "+" : "") + std::to_string(c);
  return out + " >= 0";
}

bool fixes_c_infinity(const RootGenerator& g) {
  if (g.y.is_zero()) return true;
  std::int64_t w = vminus(g.y);
  return is_positive_vectorial(g.eps, g.k) ? w > 0 : w >= 0;
}

std::array<GroupElement, 3> identity_rewrite_1(const RationalU& a) {
  if (a.is_zero()) throw ZeroEntry("first rewriting needs a != 0");
  RationalU ai = a.inverse();
  return {x_lower(ai), n_elt(a), x_lower(ai)};
}

std::array<GroupElement, 3> identity_rewrite_2(const RationalU& a, const RationalU& b) {
  RationalU p = RationalU(1) + a * b;
  if (p.is_zero()) throw SingularPivot("1 + ab = 0");
  return {x_lower(b / p), diag_elt(p), x_upper(a / p)};
}

std::string tag_name(SetTag t) {
  switch (t) {
    case SetTag::K:
      return "K";
    case SetTag::Kbar_loop:
      return "Kbar_loop";
    case SetTag::Ibar_inf_loop:
      return "Ibar_inf_loop";
    case SetTag::U_ma_minus_Cinf:
      return "U_ma_minus_Cinf";
    case SetTag::G_twin:
      return "G_twin";
    case SetTag::G_loop_pol:
      return "G_loop_pol";
    default:
      return "SL2_Oplus_Laurent";
  }
}

SetTag parse_tag(const std::string& s) {
  for (SetTag t : {SetTag::K, SetTag::Kbar_loop, SetTag::Ibar_inf_loop, SetTag::U_ma_minus_Cinf, SetTag::G_twin,
                   SetTag::G_loop_pol, SetTag::SL2_Oplus_Laurent})
    if (tag_name(t) == s) return t;
  throw ParseError("unknown set tag \"" + s + "\"");
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    default:
      return "unknown";
  }
}

std::string MembershipCertificate::str() const {
  std::string out = tag_name(tag) + ": " + verdict_name(verdict) + " (depth " + std::to_string(depth) + ")";
  for (const auto& w : witness) out += "\n  " + w;
  return out;
}

namespace {

using Pred = std::function<bool(const RationalFunc&)>;

bool in_oplus(const RationalFunc& c) { return c.is_zero() || vplus(c) >= 0; }
bool in_ominus(const RationalFunc& c) { return c.is_zero() || vminus(c) >= 0; }
bool in_o(const RationalFunc& c) { return c.is_zero() || c.den().is_monomial(); }
bool is_const(const RationalFunc& c) { return c.num().deg() <= 0 && c.den().deg() == 0; }
// k[w^-1], and w^-1 k[w^-1] when strict
bool in_k_winv(const RationalFunc& c, bool strict) {
  if (c.is_zero()) return true;
  if (!c.den().is_monomial()) return false;
  return strict ? c.num().deg() < c.den().deg() : c.num().deg() <= c.den().deg();
}
bool o_unit(const RationalFunc& c) { return !c.is_zero() && c.is_monomial(); }

std::string entry_name(int i, int j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; }

// f in ring((u^-1)), with all exponents <= cap when given
Verdict series_check(const RationalU& f, std::optional<std::int64_t> cap, const Pred& pred, std::int64_t depth,
                     const std::string& name, std::vector<std::string>& wit) {
  if (f.is_zero()) return Verdict::yes;
  bool ok = !cap || f.top_exp() <= *cap;
  for (const auto& [e, c] : f.den().terms()) ok = ok && pred(c);
  for (const auto& [e, c] : f.num().terms()) ok = ok && pred(c);
  if (ok) {
    wit.push_back(name + " = " + f.str() + ": monic denominator and numerator with coefficients in the ring");
    return Verdict::yes;
  }
  USeries s;
  try {
    s = expand_series(f, depth);
  } catch (const Error&) {
    return Verdict::unknown;
  }
  for (std::size_t j = 0; j < s.c.size(); ++j) {
    const RationalFunc& c = s.c[j];
    if (c.is_zero()) continue;
    std::int64_t e = s.top - static_cast<std::int64_t>(j);
    if (cap && e > *cap) {
      wit.push_back(name + ": expansion has the term (" + c.str() + ")*u^" + std::to_string(e) + " above u^" + std::to_string(*cap));
      return Verdict::no;
    }
    if (!pred(c)) {
      wit.push_back(name + ": coefficient of u^" + std::to_string(e) + " is " + c.str() + " (val+ " + val_str(val_plus(c)) +
                    ", val- " + val_str(val_minus(c)) + ")");
      return Verdict::no;
    }
  }
  return Verdict::unknown;
}

Verdict ibar_check(const RationalU& f, bool strict, std::int64_t depth, const std::string& name, std::vector<std::string>& wit) {
  if (f.is_zero()) return Verdict::yes;
  bool const_den = true;
  for (const auto& [e, c] : f.den().terms()) const_den = const_den && is_const(c);
  if (const_den) {
    const std::int64_t dq = f.den().max_exp();
    LaurentU zero_part;
    for (const auto& [e, c] : f.num().terms()) {
      if (!in_k_winv(c, false)) {
        wit.push_back(name + ": numerator coefficient " + c.str() + " is not in k[w^-1] while the denominator lies in k[u]");
        return Verdict::no;
      }
      Coeff z = c.num().coeff(c.den().deg());
      if (!z.is_zero()) zero_part += LaurentU::monomial(RationalFunc(z), e);
    }
    RationalU r(zero_part, f.den());
    std::int64_t cap = strict ? -1 : 0;
    (void)dq;
    if (r.is_zero() || r.top_exp() <= cap) {
      wit.push_back(name + " = " + f.str() + ": w^0 part " + r.str() + " lies in " + (strict ? "u^-1 k[[u^-1]]" : "k[[u^-1]]"));
      return Verdict::yes;
    }
    wit.push_back(name + ": w^0 part " + r.str() + " has a term of degree " + std::to_string(r.top_exp()));
    return Verdict::no;
  }
  USeries s;
  try {
    s = expand_series(f, depth);
  } catch (const Error&) {
    return Verdict::unknown;
  }
  for (std::size_t j = 0; j < s.c.size(); ++j) {
    std::int64_t e = s.top - static_cast<std::int64_t>(j);
    bool st = strict ? e >= 0 : e > 0;
    if (!in_k_winv(s.c[j], st)) {
      wit.push_back(name + ": coefficient of u^" + std::to_string(e) + " is " + s.c[j].str());
      return Verdict::no;
    }
  }
  return Verdict::unknown;
}

Verdict laurent_check(const RationalU& f, const Pred& pred, const std::string& ring, const std::string& name,
                      std::vector<std::string>& wit) {
  if (!f.is_laurent()) {
    wit.push_back(name + " = " + f.str() + " is not a Laurent polynomial in u");
    return Verdict::no;
  }
  for (const auto& [e, c] : f.num().terms())
    if (!pred(c)) {
      wit.push_back(name + ": coefficient of u^" + std::to_string(e) + " is " + c.str() + ", not in " + ring + " (val+ " +
                    val_str(val_plus(c)) + ")");
      return Verdict::no;
    }
  return Verdict::yes;
}

Verdict combine(const std::vector<Verdict>& v) {
  bool unk = false;
  for (Verdict x : v) {
    if (x == Verdict::no) return Verdict::no;
    if (x == Verdict::unknown) unk = true;
  }
  return unk ? Verdict::unknown : Verdict::yes;
}

// reduce the first column with elementary row operations over O[u,u^-1]
Verdict twin_reduce(const GroupElement& g, std::vector<std::string>& wit) {
  LaurentU a = g.m[0][0].num(), c = g.m[1][0].num();
  for (int it = 0; it < 100000 && !a.is_zero() && !c.is_zero(); ++it) {
    std::int64_t sa = a.max_exp() - a.min_exp(), sc = c.max_exp() - c.min_exp();
    if (sa == 0 && sc == 0) {
      auto split = [](const RationalFunc& f, Poly& P, std::int64_t& alpha) {
        P = f.num().unshift(f.num().ord());
        alpha = f.num().ord() - f.den().deg();
      };
      Poly F, G;
      std::int64_t al, be;
      split(a.lc(), F, al);
      split(c.lc(), G, be);
      bool red_a = F.deg() >= G.deg();
      LaurentU& X = red_a ? a : c;
      LaurentU& Y = red_a ? c : a;
      Poly q = red_a ? F.divmod(G).first : G.divmod(F).first;
      RationalFunc mult = RationalFunc(q, Poly(Coeff(1))) * wp(red_a ? al - be : be - al);
      std::int64_t sh = X.max_exp() - Y.max_exp();
      X -= Y.scale(mult).shift(sh);
      wit.push_back(std::string(red_a ? "row1 -= (" : "row2 -= (") + LaurentU::monomial(mult, sh).str() + ")*" +
                    (red_a ? "row2" : "row1"));
      continue;
    }
    bool red_a = sa >= sc;
    LaurentU& X = red_a ? a : c;
    LaurentU& Y = red_a ? c : a;
    RationalFunc r = X.lc() / Y.lc();
    std::int64_t sh = X.max_exp() - Y.max_exp();
    if (!in_o(r)) {
      r = X.coeff(X.min_exp()) / Y.coeff(Y.min_exp());
      sh = X.min_exp() - Y.min_exp();
      if (!in_o(r)) {
        wit.push_back("no elementary step with coefficient in k[w,w^-1] reduces the first column");
        return Verdict::unknown;
      }
    }
    X -= Y.scale(r).shift(sh);
    wit.push_back(std::string(red_a ? "row1 -= (" : "row2 -= (") + LaurentU::monomial(r, sh).str() + ")*" + (red_a ? "row2" : "row1"));
  }
  const LaurentU& u = a.is_zero() ? c : a;
  if (u.is_monomial() && o_unit(u.lc())) {
    wit.push_back("first column reduced to the unit " + u.str() + "; the rest is a product of a diagonal and a unipotent factor");
    return Verdict::yes;
  }
  return Verdict::unknown;
}

}  // namespace

MembershipCertificate membership(const GroupElement& g, SetTag tag, std::int64_t depth) {
  MembershipCertificate cert;
  cert.tag = tag;
  cert.depth = depth;
  auto& wit = cert.witness;
  std::vector<Verdict> vs;
  auto need_sd_one = [&]() {
    if (g.sd.is_one()) return true;
    wit.push_back("semidirect scalar " + g.sd.str() + " is not 1");
    cert.verdict = Verdict::no;
    return false;
  };
  switch (tag) {
    case SetTag::K:
    case SetTag::SL2_Oplus_Laurent: {
      if (tag == SetTag::K) {
        if (vplus(g.sd) != 0) {
          wit.push_back("semidirect scalar " + g.sd.str() + " has val+ " + std::to_string(vplus(g.sd)));
          cert.verdict = Verdict::no;
          return cert;
        }
      } else if (!need_sd_one()) {
        return cert;
      }
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) vs.push_back(laurent_check(g.m[i][j], in_oplus, "O+", entry_name(i, j), wit));
      break;
    }
    case SetTag::G_loop_pol:
    case SetTag::G_twin: {
      if (tag == SetTag::G_twin) {
        if (!o_unit(g.sd)) {
          wit.push_back("semidirect scalar " + g.sd.str() + " is not a unit of k[w,w^-1]");
          cert.verdict = Verdict::no;
          return cert;
        }
      } else if (!need_sd_one()) {
        return cert;
      }
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) vs.push_back(laurent_check(g.m[i][j], in_o, "k[w,w^-1]", entry_name(i, j), wit));
      if (tag == SetTag::G_twin && combine(vs) == Verdict::yes) vs.push_back(twin_reduce(g, wit));
      break;
    }
    case SetTag::Kbar_loop: {
      if (!need_sd_one()) return cert;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) vs.push_back(series_check(g.m[i][j], std::nullopt, in_oplus, depth, entry_name(i, j), wit));
      break;
    }
    case SetTag::U_ma_minus_Cinf: {
      if (!need_sd_one()) return cert;
      vs.push_back(series_check(g.m[0][0] - RationalU(1), -1, in_ominus, depth, "(1,1)-1", wit));
      vs.push_back(series_check(g.m[0][1], -1, in_ominus, depth, "(1,2)", wit));
      vs.push_back(series_check(g.m[1][0], 0, in_ominus, depth, "(2,1)", wit));
      vs.push_back(series_check(g.m[1][1] - RationalU(1), -1, in_ominus, depth, "(2,2)-1", wit));
      break;
    }
    case SetTag::Ibar_inf_loop: {
      if (!need_sd_one()) return cert;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) vs.push_back(ibar_check(g.m[i][j], i == 0 && j == 1, depth, entry_name(i, j), wit));
      break;
    }
  }
  cert.verdict = combine(vs);
  if (cert.verdict != Verdict::no) {
    // keep only the witnesses relevant to the verdict
  }
  return cert;
}

std::int64_t delta_level(const GroupElement& g, Sheet sheet) {
  if (sheet == Sheet::plus) return vplus(g.sd);
  if (sheet == Sheet::minus) return vminus(g.sd);
  return 0;
}

std::string NAction::str() const {
  std::string out = map.str();
  if (delta != 0) out += "; delta " + std::string(delta > 0 ? "+" : "") + std::to_string(delta);
  return out;
}

NAction n_action(const GroupElement& n, Sheet sheet) {
  NAction act;
  act.delta = delta_level(n, sheet);
  auto u_mono = [&](const RationalU& e, const char* what) {
    if (!e.is_laurent() || !e.num().is_monomial()) throw NotInN(std::string(what) + " entry " + e.str() + " is not a monomial in u");
  };
  auto level = [&](const RationalFunc& c) -> std::int64_t {
    if (sheet == Sheet::plus) return vplus(c);
    if (sheet == Sheet::minus) return -vminus(c);
    return 0;
  };
  const auto& m = n.m;
  if (m[0][1].is_zero() && m[1][0].is_zero()) {
    u_mono(m[0][0], "diagonal");
    const LaurentU& d = m[0][0].num();
    std::int64_t e = d.min_exp();
    // diag(c u^e) = n(c u^e) n(1)^-1
    act.map = AffineMap::reflection({1, e, level(d.lc())}, sheet) * AffineMap::reflection({1, 0, 0}, sheet);
    return act;
  }
  if (m[0][0].is_zero() && m[1][1].is_zero()) {
    u_mono(m[0][1], "antidiagonal");
    const LaurentU& a = m[0][1].num();
    act.map = AffineMap::reflection({1, a.min_exp(), level(a.lc())}, sheet);
    return act;
  }
  throw NotInN("element is neither diagonal nor antidiagonal");
}

namespace {

struct Term {
  std::int64_t k;
  RationalFunc c;
};

std::vector<Term> terms_of(const LaurentU& T) {
  std::vector<Term> out;
  for (const auto& [e, c] : T.terms()) out.push_back({e, c});
  return out;
}

std::string reflection_label(std::int64_t k, std::int64_t m) {
  if (m == k - 1) return "R" + std::to_string(m);
  return "r[" + AffineRoot{1, k, m}.str() + "]";
}

struct Retractor {
  const RetractOptions& opts;
  RetractResult& res;

  void run(const LaurentU& T, const AffineMap& W, const std::string& label, const Q& lo, const Q& hi, int level) {
    if (level > 256) throw StrategyInapplicable("retraction recursion too deep");
    auto terms = terms_of(T);
    // z(t) = W(0,-t) = (b - 2j t, -t); term c u^k fixes z iff z.x + k z.y + val+(c) >= 0
    const Q b = W.b;
    const std::int64_t j = W.lin.j();
    auto value = [&](const Term& tm, const Q& t) -> Q {
      return b - Q(static_cast<long>(2 * j + tm.k)) * t + Q(static_cast<long>(vplus(tm.c)));
    };
    std::vector<Q> cuts{lo, hi};
    for (const auto& tm : terms) {
      std::int64_t slope = 2 * j + tm.k;
      if (slope == 0) continue;
      Q t = (b + Q(static_cast<long>(vplus(tm.c)))) / Q(static_cast<long>(slope));
      if (t > lo && t < hi) cuts.push_back(t);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      Q s0 = cuts[i], s1 = cuts[i + 1], mid = (s0 + s1) / 2;
      std::vector<Term> bad;
      for (const auto& tm : terms)
        if (value(tm, mid) < 0) bad.push_back(tm);
      if (bad.empty()) {
        emit(s0, s1, W, label);
        continue;
      }
      step(bad, W, label, s0, s1, level);
    }
  }

  void emit(const Q& s0, const Q& s1, const AffineMap& W, const std::string& label) {
    if (!res.pieces.empty() && res.pieces.back().map == W && res.pieces.back().t1 == s0) {
      res.pieces.back().t1 = s1;
      return;
    }
    res.pieces.push_back({s0, s1, W, label.empty() ? "id" : label});
  }

  void step(const std::vector<Term>& bad, const AffineMap& W, const std::string& label, const Q& s0, const Q& s1, int level) {
    const Term& a = *std::max_element(bad.begin(), bad.end(), [](const Term& x, const Term& y) { return x.k < y.k; });
    LaurentU A, Tbad;
    for (const auto& tm : bad) {
      Tbad += LaurentU::monomial(tm.c, tm.k);
      if (tm.k != a.k) A += LaurentU::monomial(tm.c, tm.k);
    }
    const std::string where = " on [" + q_str(s0) + "," + q_str(s1) + "]";
    if (a.k < 0 || vminus(a.c) > 0) throw StrategyInapplicable("leading bad term (" + a.c.str() + ")*u^" + std::to_string(a.k) + where);
    RationalU ra = mono(a.c, a.k);
    RationalU D = RationalU(Tbad) / ra;
    // x(A) x(a) = L . x(A/D) . n(a) . x_-(1/a) with L = x_-(1/(aD)) diag(D)
    GroupElement L = x_lower(ra.inverse() / D) * diag_elt(D);
    RationalU Tp = RationalU(A) / D;
    if (L * x_upper(Tp) * n_elt(ra) * x_lower(ra.inverse()) != x_upper(RationalU(Tbad)))
      throw StrategyInapplicable("rewriting check failed" + where);
    MembershipCertificate cl = membership(L, SetTag::U_ma_minus_Cinf, opts.depth);
    cl.witness.insert(cl.witness.begin(), "left factor" + where + ": " + L.str());
    if (cl.verdict != Verdict::yes) throw StrategyInapplicable("left factor not certified in U_ma_minus_Cinf" + where);
    res.certificates.push_back(cl);

    // split x(T') = x(gen + rem) x(rest): rest acts further, gen and rem fix C_infinity
    RationalU rem = Tp;
    LaurentU rest;
    std::vector<std::string> gens;
    bool done = false;
    for (std::int64_t it = 0; it <= opts.depth; ++it) {
      std::vector<std::string> scratch;
      if (series_check(rem, -1, in_ominus, opts.depth, "rem", scratch) == Verdict::yes) {
        done = true;
        break;
      }
      std::int64_t e = rem.top_exp();
      RationalFunc c = rem.num().lc();
      RootGenerator gen{1, e, c};
      if (fixes_c_infinity(gen))
        gens.push_back(gen.str());
      else
        rest += LaurentU::monomial(c, e);
      rem = rem - mono(c, e);
    }
    if (!done) throw StrategyInapplicable("remainder not certified within depth " + std::to_string(opts.depth) + where);
    MembershipCertificate cr = membership(x_upper(rem), SetTag::U_ma_minus_Cinf, opts.depth);
    cr.witness.insert(cr.witness.begin(), "upper remainder" + where + ": " + rem.str());
    res.certificates.push_back(cr);
    for (const auto& gs : gens) res.notes.push_back(gs + " fixes C_infinity" + where);

    std::int64_t m = vplus(a.c);
    AffineMap R = AffineMap::reflection({1, a.k, m}, Sheet::plus);
    run(rest, R * W, reflection_label(a.k, m) + label, s0, s1, level + 1);
  }
};

}  // namespace

RetractResult retract_segment(const std::vector<RootGenerator>& word, const Q& lo, const Q& hi, const RetractOptions& opts) {
  if (!(lo >= 0 && hi <= 1 && lo < hi)) throw ParseError("range must satisfy 0 <= lo < hi <= 1");
  LaurentU T;
  for (const auto& g : word) {
    if (g.eps != 1) throw StrategyInapplicable("only products of upper generators are supported, got " + g.str());
    if (g.y.is_zero()) continue;
    T += LaurentU::monomial(g.y, g.k);
  }
  RetractResult res;
  res.lo = lo;
  res.hi = hi;
  Retractor r{opts, res};
  r.run(T, AffineMap(), "", lo, hi, 0);

  for (std::size_t i = 0; i + 1 < res.pieces.size(); ++i) {
    Point z{0, -res.pieces[i].t1, Sheet::plus};
    if (res.pieces[i].map.apply(z) != res.pieces[i + 1].map.apply(z))
      throw StrategyInapplicable("pieces disagree at t=" + q_str(res.pieces[i].t1));
  }

  const Q len = hi - lo;
  std::vector<PathPiece> pp;
  for (const auto& pc : res.pieces) pp.push_back({(pc.t0 - lo) / len, (pc.t1 - lo) / len, pc.map.lin, pc.label});
  Point origin = res.pieces.front().map.apply(Point{0, -lo, Sheet::plus});
  res.path = build_path({0, -len}, -1, origin, std::move(pp));
  for (const Q& t : res.path.breakpoints()) {
    res.fold_times.push_back(lo + t * len);
    res.fold_points.push_back(res.path.at(t));
  }

  if (opts.superdecorate) {
    try {
      Superdecoration sd = superdecorate(decorate(res.path, opts.k_bound));
      auto bad = validate_superdecoration(sd);
      if (bad.empty())
        res.superdecoration = std::move(sd);
      else
        res.superdecoration_error = bad.front();
    } catch (const BoundExceeded& e) {
      res.bound_needed = e.needed();
      res.superdecoration_error = e.what();
    } catch (const Error& e) {
      res.superdecoration_error = e.what();
    }
  }
  return res;
}

std::vector<RootGenerator> word_gN(int N) {
  std::vector<RootGenerator> w;
  for (int k = 1; k <= N; ++k) w.push_back({1, 3 * k, wp(3 * k - 1)});
  return w;
}

std::vector<RootGenerator> word_gprimeN(int N) {
  if (N > 20) throw TooLarge("gprimeN is limited to N <= 20");
  std::vector<RootGenerator> w;
  for (int k = 0; k <= N; ++k) {
    std::int64_t e = 3 * (std::int64_t(1) << k);
    w.push_back({1, e, wp(e - 1)});
  }
  return w;
}

GroupElement g_counterexample() { return x_lower(mono(wp(1), -1)) * x_upper(mono(wp(-1), -1)); }

GroupElement g1_infinity() { return x_lower(RationalU(-wp(1))) * x_upper(mono(wp(2), 3)); }

namespace {
int parse_index(const std::string& s, const std::string& name) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size() || v < 0) throw ParseError("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad index in \"" + name + "\"");
  }
}
}  // namespace

std::vector<RootGenerator> resolve_word(const std::string& name) {
  if (name.rfind("gN:", 0) == 0) return word_gN(parse_index(name.substr(3), name));
  if (name.rfind("gprimeN:", 0) == 0) return word_gprimeN(parse_index(name.substr(8), name));
  if (name == "g-counterexample" || name == "g1inf") throw StrategyInapplicable(name + " is not a product of upper generators");
  return parse_word(name);
}

GroupElement resolve_element(const std::string& name) {
  if (name == "g-counterexample") return g_counterexample();
  if (name == "g1inf") return g1_infinity();
  if (!name.empty() && name.front() == '[') return parse_group_element(name);
  return word_element(resolve_word(name));
}

bool CounterexampleReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.pass; });
}

bool CounterexampleReport::any_unknown() const {
  return std::any_of(certificates.begin(), certificates.end(), [](const MembershipCertificate& c) { return c.verdict == Verdict::unknown; });
}

CounterexampleReport counterexample_report(std::int64_t depth, int N) {
  CounterexampleReport rep;
  const RationalU u1 = mono(RationalFunc(1), -1);
  const RationalU s = RationalU(1) + mono(RationalFunc(1), -2);  // 1 + u^-2
  const GroupElement g = g_counterexample();

  {
    GroupElement ibar = GroupElement::from_entries(s.inverse(), mono(wp(-1), -1), RationalU(0), s);
    GroupElement kbar = x_lower(mono(wp(1), -1) / s);
    GroupElement three = x_upper(mono(wp(-1), -1) / s) * diag_elt(s.inverse()) * kbar;
    auto ci = membership(ibar, SetTag::Ibar_inf_loop, depth);
    auto ck = membership(kbar, SetTag::Kbar_loop, depth);
    rep.certificates.push_back(ci);
    rep.certificates.push_back(ck);
    bool eq = g == ibar * kbar && g == three;
    rep.checks.push_back({"a: g = ibar*kbar", eq && ci.verdict == Verdict::yes && ck.verdict == Verdict::yes,
                          std::string(eq ? "exact equality" : "product differs") + "; ibar in Ibar_inf_loop: " + verdict_name(ci.verdict) +
                              "; kbar in Kbar_loop: " + verdict_name(ck.verdict)});
  }
  {
    auto c = membership(g, SetTag::SL2_Oplus_Laurent, depth);
    rep.certificates.push_back(c);
    rep.checks.push_back({"b: g not in SL2(O+[u,u^-1])", c.verdict == Verdict::no, c.witness.empty() ? "" : c.witness.front()});
  }
  {
    std::int64_t d = delta_level(g, Sheet::plus);
    rep.checks.push_back({"c: delta level of g on plus", d == 0, std::to_string(d)});
  }
  {
    std::vector<std::string> fails;
    const GroupElement g1 = g1_infinity();
    const RationalU wu3 = mono(wp(3), 3);  // (wu)^3
    if (g1 != GroupElement::from_entries(1, mono(wp(2), 3), RationalU(-wp(1)), RationalU(1) - wu3)) fails.push_back("g1inf matrix");
    GroupElement chain = x_lower(mono(wp(-2), -3)) * x_upper(RationalU(-wp(-1))) * n_elt(mono(wp(2), 3)) * n_elt(mono(wp(5), 6)) *
                         x_lower(mono(wp(-5), -6)) * x_lower(mono(wp(-2), -3));
    if (chain != g1) fails.push_back("Birkhoff chain of g1inf");
    RationalU sum(0);
    for (int k = 0; k <= N; ++k) sum += mono(wp(3 * k), 3 * k);
    RationalU top = mono(wp(3 * N + 2), 3 * N + 3);
    GroupElement g1N = GroupElement::from_entries(sum, top, RationalU(-wp(1)), RationalU(1) - wu3);
    if (word_element(word_gN(N)) * g1N != g1) fails.push_back("gN * g1N = g1inf");
    RationalU c = RationalU(1) - wu3;
    RationalU a = top / c;
    RationalU b = RationalU(-wp(1)) / c + RationalU(wp(1));
    if (x_upper(a) * diag_elt(c.inverse()) * x_lower(b) * x_lower(RationalU(-wp(1))) != g1N) fails.push_back("factorization of g1N");
    // valuation inequalities on the u-adic expansions
    std::int64_t checked = 0;
    USeries ea = expand_series_pos(a, depth);
    for (std::int64_t e = 0; e <= depth; ++e) {
      RationalFunc co = ea.coeff(-e);
      if (co.is_zero()) continue;
      ++checked;
      // f(aleph + e delta) on phi([0, t_{3N+3}]) is ceil(e (3N+2)/(3N+3))
      std::int64_t f = (e * (3 * N + 2) + 3 * N + 2) / (3 * N + 3);
      if (vplus(co) < f) fails.push_back("a: term u^" + std::to_string(e));
    }
    USeries eb = expand_series_pos(b, depth);
    for (std::int64_t e = 0; e <= depth; ++e) {
      RationalFunc co = eb.coeff(-e);
      if (co.is_zero()) continue;
      ++checked;
      if (vplus(co) < e) fails.push_back("b: term u^" + std::to_string(e));
    }
    if (vplus(-wp(1)) < 0) fails.push_back("x_-(-w)");
    RationalFunc lambda = -(c - RationalU(1)).num().coeff(3);
    if (vplus(lambda) < 3) fails.push_back("torus factor");
    auto ct = membership(g1, SetTag::G_twin, depth);
    auto cp = membership(g1N, SetTag::G_loop_pol, depth);
    rep.certificates.push_back(ct);
    rep.certificates.push_back(cp);
    if (ct.verdict != Verdict::yes) fails.push_back("g1inf in G_twin");
    if (cp.verdict != Verdict::yes) fails.push_back("g1N in G_loop_pol");
    std::string detail = fails.empty() ? "exact products, " + std::to_string(checked) + " expansion terms checked up to u^" + std::to_string(depth)
                                       : "failed: " + fails.front();
    rep.checks.push_back({"d: closing chain for N=" + std::to_string(N), fails.empty(), detail});
  }
  return rep;
}

}  // namespace masure
