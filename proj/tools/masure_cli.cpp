// masure-lab: verification, retraction and counting front end.
//
// exit codes: 0 ok, 1 check failed, 2 bad input or configuration, 3 BoundExceeded,
// 4 StrategyInapplicable, 5 ProblematicCase, 6 undecided membership certificate
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "masure/parse.hpp"
#include "masure_json.hpp"

using namespace masure;
using io::json;

namespace {

struct RunConfig {
  std::string field = "rational";
  std::uint64_t modulus = 0;
  std::int64_t depth = 32;
  std::int64_t kbound = 64;
  std::string emit = "text";
  bool oracle = false;
  std::uint64_t seed = 1;
};

void validate(RunConfig& cfg) {
  if (cfg.field == "rational") {
    cfg.modulus = 0;
  } else if (cfg.field.rfind("fp:", 0) == 0) {
    try {
      std::size_t used = 0;
      cfg.modulus = std::stoull(cfg.field.substr(3), &used);
      if (used != cfg.field.size() - 3) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError("--field expects rational or fp:<p>, got " + cfg.field);
    }
    if (!is_prime_u64(cfg.modulus)) throw ParseError("--field fp:" + std::to_string(cfg.modulus) + " is not a prime field");
  } else {
    throw ParseError("--field expects rational or fp:<p>, got " + cfg.field);
  }
  if (cfg.depth < 1 || cfg.depth > 4096) throw ParseError("--depth must lie in [1, 4096]");
  if (cfg.kbound < 1 || cfg.kbound > 1000000) throw ParseError("--kbound must lie in [1, 1000000]");
}

void write_file(const std::string& file, const std::string& text) {
  std::ofstream out(file);
  if (!out) throw ParseError("cannot write " + file);
  out << text;
}

std::string field_str(const RunConfig& c) { return c.modulus ? "F_" + std::to_string(c.modulus) : "Q"; }

int cmd_verify_hecke(const RunConfig& cfg, const std::string& file) {
  json j = io::read_json_file(file);
  PiecewisePath path = io::path_from(io::unwrap(j, "path"));
  HeckeReport rep = verify_hecke(path, cfg.kbound);
  std::vector<std::string> bruhat;
  std::string dec_error;
  try {
    bruhat = bruhat_failures(decorate(path, cfg.kbound));
  } catch (const BoundExceeded&) {
    throw;
  } catch (const Error& e) {
    dec_error = e.what();
  }
  if (cfg.emit == "json") {
    json out = {{"schema", io::kSchema}, {"command", "verify-hecke"}, {"path", io::path_json(path)}};
    out["hecke"] = io::hecke_json(rep);
    out["bruhat_failures"] = bruhat;
    if (!dec_error.empty()) out["decoration_error"] = dec_error;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "verify-hecke: " << (rep.ok ? "PASS" : "FAIL") << "\n";
    if (!rep.ok) std::cout << "reason: " << rep.reason << "\n";
    for (const auto& hp : rep.points) {
      std::cout << "  t=" << q_str(hp.t) << " p=" << point_str(hp.p) << " xi+=(" << q_str(hp.xi_plus.x) << "," << q_str(hp.xi_plus.y)
                << ") xi-=(" << q_str(hp.xi_minus.x) << "," << q_str(hp.xi_minus.y) << ")";
      std::cout << " chain: " << (hp.chain ? hp.chain->str() : std::string("none")) << "\n";
    }
    if (!dec_error.empty())
      std::cout << "decorations: " << dec_error << "\n";
    else
      std::cout << "bruhat inequalities: " << (bruhat.empty() ? "hold" : std::to_string(bruhat.size()) + " failures") << "\n";
    for (const auto& b : bruhat) std::cout << "  " << b << "\n";
  }
  return rep.ok ? 0 : 1;
}

std::pair<Q, Q> parse_range(const std::string& s) {
  auto c = s.find(':');
  if (c == std::string::npos) throw ParseError("--range expects lo:hi, got " + s);
  return {parse_rational_number(s.substr(0, c)), parse_rational_number(s.substr(c + 1))};
}

int cmd_retract(const RunConfig& cfg, const std::string& word_spec, const std::string& range, const std::string& path_out,
                const std::string& sd_out, const std::string& svg_out, bool no_super) {
  auto [lo, hi] = parse_range(range);
  auto word = resolve_word(word_spec);
  RetractOptions opts;
  opts.depth = cfg.depth;
  opts.k_bound = cfg.kbound;
  opts.superdecorate = !no_super;
  RetractResult r = retract_segment(word, lo, hi, opts);
  const std::string wtxt = word_str(word);
  json j = io::retract_json(r, wtxt);

  if (!path_out.empty()) write_file(path_out, io::path_json(r.path).dump(2) + "\n");
  if (!svg_out.empty()) write_file(svg_out, io::retract_svg(r));
  if (!sd_out.empty()) {
    if (!r.superdecoration) {
      std::cerr << "masure: no superdecoration: " << r.superdecoration_error << "\n";
      return r.bound_needed ? 3 : 1;
    }
    write_file(sd_out, io::superdecoration_json(*r.superdecoration).dump(2) + "\n");
  }

  if (cfg.emit == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (cfg.emit == "svg") {
    std::cout << io::retract_svg(r);
  } else if (cfg.emit == "csv") {
    std::cout << "t0,t1,label,weyl,map\n";
    for (const auto& pc : r.pieces) std::cout << q_str(pc.t0) << "," << q_str(pc.t1) << "," << pc.label << "," << pc.map.lin.word() << "," << pc.map.str() << "\n";
  } else {
    std::cout << "word: " << wtxt << "\nrange: [" << q_str(lo) << "," << q_str(hi) << "]\nfield: " << field_str(cfg) << "\npieces:\n";
    for (const auto& pc : r.pieces)
      std::cout << "  [" << q_str(pc.t0) << "," << q_str(pc.t1) << "] " << pc.label << "  " << pc.map.str() << "\n";
    std::cout << "folds: " << r.fold_points.size() << "\n";
    for (std::size_t i = 0; i < r.fold_points.size(); ++i)
      std::cout << "  t=" << q_str(r.fold_times[i]) << " " << point_str(r.fold_points[i]) << "\n";
    std::size_t yes = 0;
    for (const auto& c : r.certificates) yes += c.verdict == Verdict::yes;
    std::cout << "certificates: " << yes << "/" << r.certificates.size() << " yes\n";
    if (r.superdecoration) {
      std::cout << "superdecoration: valid, " << r.superdecoration->points.size() << " points\n";
      const json& c = j["count"];
      std::cout << "count: " << (c.is_object() ? c["text"].get<std::string>() : c.get<std::string>()) << "\n";
    } else if (opts.superdecorate) {
      std::cout << "superdecoration: " << r.superdecoration_error << "\n";
      if (r.bound_needed) std::cout << "  (rerun with --kbound " << *r.bound_needed << ")\n";
    }
  }
  return 0;
}

std::vector<unsigned long> parse_qs(const std::string& s) {
  std::vector<unsigned long> qs;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      unsigned long q = std::stoul(item, &used);
      if (used != item.size() || q < 2) throw std::invalid_argument("");
      qs.push_back(q);
    } catch (const std::exception&) {
      throw ParseError("--q expects a comma separated list of integers >= 2, got " + s);
    }
  }
  if (qs.empty()) throw ParseError("--q needs at least one value");
  return qs;
}

int cmd_count(const RunConfig& cfg, const std::string& file, const std::string& qlist, bool symbolic) {
  json j = io::read_json_file(file);
  Superdecoration sd;
  try {
    sd = io::superdecoration_from(io::unwrap(j, "superdecoration"));
  } catch (const json::exception& e) {
    throw ParseError(file + ": " + e.what());
  }
  auto qs = parse_qs(qlist);
  if (sd.path.eps > 0 && sd.path.origin.x == 0 && sd.path.origin.y == 0)
    throw ProblematicCase("epsilon = +1 with a path starting at the origin");
  auto bad = validate_superdecoration(sd);
  std::int64_t m0 = m_doubleprime(sd.path.origin, sd.c_inf0, sd.c_plus0, sd.path.derivative(0));
  if (m0 != sd.m_doubleprime0) bad.push_back("m''_0 is " + std::to_string(m0) + ", file says " + std::to_string(sd.m_doubleprime0));
  if (!bad.empty()) {
    std::cout << "count: FAIL invalid superdecoration\n";
    for (const auto& b : bad) std::cout << "  " << b << "\n";
    return 1;
  }
  CountPoly c = theorem_count(sd);

  json out = {{"schema", io::kSchema}, {"command", "count"}, {"count", io::count_json(c)}};
  json evals = json::object();
  bool oracle_ok = true;
  json oracle = json::object();
  if (!symbolic)
    for (unsigned long q : qs) evals[std::to_string(q)] = c.eval(q).get_str();
  if (cfg.oracle) {
    for (unsigned long q : qs) {
      mpz_class total = CountPoly{sd.m_doubleprime0, 0}.eval(q);
      std::string note;
      try {
        for (const auto& sp : sd.points) total *= brute_force_liftings(sp.gallery, sp.dec.c_minus.sign, sp.dec.c_minus.index(), q);
        note = total == c.eval(q) ? "match" : "MISMATCH";
        oracle_ok = oracle_ok && total == c.eval(q);
      } catch (const TooLarge& e) {
        note = std::string("skipped: ") + e.what();
      }
      oracle[std::to_string(q)] = {{"brute_force", note.rfind("skipped", 0) == 0 ? json(nullptr) : json(total.get_str())}, {"result", note}};
    }
  }
  if (cfg.emit == "json") {
    if (!symbolic) out["evaluations"] = evals;
    if (cfg.oracle) out["oracle"] = oracle;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "count: " << c.str() << "\n";
    if (!symbolic)
      for (unsigned long q : qs) std::cout << "  q=" << q << ": " << c.eval(q).get_str() << "\n";
    if (cfg.oracle)
      for (unsigned long q : qs) {
        const auto& o = oracle[std::to_string(q)];
        std::cout << "  oracle q=" << q << ": " << o["result"].get<std::string>();
        if (!o["brute_force"].is_null()) std::cout << " (" << o["brute_force"].get<std::string>() << ")";
        std::cout << "\n";
      }
  }
  return oracle_ok ? 0 : 1;
}

int cmd_counterexample(const RunConfig& cfg, int N) {
  if (N < 1 || N > 64) throw ParseError("--N must lie in [1, 64]");
  CounterexampleReport rep = counterexample_report(cfg.depth, N);
  int code = rep.all_pass() ? 0 : rep.any_unknown() ? 6 : 1;
  if (cfg.emit == "json") {
    json checks = json::array();
    for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    json certs = json::array();
    for (const auto& c : rep.certificates) certs.push_back(io::certificate_json(c));
    std::cout << json{{"schema", io::kSchema}, {"command", "counterexample"}, {"field", field_str(cfg)}, {"depth", cfg.depth},
                      {"checks", checks}, {"certificates", certs}, {"exit", code}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "field: " << field_str(cfg) << ", depth " << cfg.depth << "\n";
    for (const auto& c : rep.checks) std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    for (const auto& c : rep.certificates)
      if (c.verdict == Verdict::unknown) std::cout << "unknown certificate: " << c.str() << "\n";
  }
  return code;
}

int cmd_membership(const RunConfig& cfg, const std::string& elt, const std::string& tag) {
  GroupElement g = resolve_element(elt);
  MembershipCertificate c = membership(g, parse_tag(tag), cfg.depth);
  if (cfg.emit == "json")
    std::cout << json{{"schema", io::kSchema}, {"command", "membership"}, {"element", g.str()}, {"certificate", io::certificate_json(c)}}.dump(2)
              << "\n";
  else
    std::cout << g.str() << "\n" << c.str() << "\n";
  return c.verdict == Verdict::unknown ? 6 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"masure-lab: twin masure computations for affine SL2"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--field", cfg.field, "base field: rational or fp:<p>");
  app.add_option("--depth", cfg.depth, "series truncation depth");
  app.add_option("--kbound", cfg.kbound, "root enumeration window");
  app.add_option("--emit", cfg.emit, "output format")->check(CLI::IsMember({"text", "json", "csv", "svg"}));
  app.add_flag("--oracle", cfg.oracle, "cross-check with brute force where available");
  app.add_option("--seed", cfg.seed, "seed for randomized suites");

  std::string file, word, range = "0:1", path_out, sd_out, svg_out, qlist = "2,3,4,5", elt, tag = "K";
  bool symbolic = false, no_super = false;
  int N = 3;

  auto* vh = app.add_subcommand("verify-hecke", "check a path JSON file against the C_infinity-Hecke conditions");
  vh->add_option("path_file", file, "path JSON (or retract JSON output)")->required();

  auto* rt = app.add_subcommand("retract", "retract phi([lo,hi]) translated by a product of root generators");
  rt->add_option("word", word, "gN:<N>, gprimeN:<N>, e or x(eps,k,y)*...")->required();
  rt->add_option("--range", range, "parameter range lo:hi");
  rt->add_option("--path-out", path_out, "write the path JSON here");
  rt->add_option("--superdecoration-out", sd_out, "write the superdecoration JSON here");
  rt->add_option("--svg-out", svg_out, "write an SVG plot here");
  rt->add_flag("--no-superdecoration", no_super, "skip decorations");

  auto* ct = app.add_subcommand("count", "count liftings of a superdecorated path");
  ct->add_option("superdecoration_file", file, "superdecoration JSON (or retract JSON output)")->required();
  ct->add_option("--q", qlist, "values of q");
  ct->add_flag("--symbolic", symbolic, "only print the polynomial");

  auto* cx = app.add_subcommand("counterexample", "check the ingredients of the counter-example");
  cx->add_option("--N", N, "index of the closing chain g1_N");

  auto* mb = app.add_subcommand("membership", "membership certificate of a group element");
  mb->add_option("element", elt, "named element, word or [[a,b],[c,d]];sd=z")->required();
  mb->add_option("--tag", tag, "K, Kbar_loop, Ibar_inf_loop, U_ma_minus_Cinf, G_twin, G_loop_pol, SL2_Oplus_Laurent");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "masure: " << e.what() << "\n";
    return 2;
  }

  try {
    validate(cfg);
    FieldScope scope(cfg.modulus);
    if (*vh) return cmd_verify_hecke(cfg, file);
    if (*rt) return cmd_retract(cfg, word, range, path_out, sd_out, svg_out, no_super);
    if (*ct) return cmd_count(cfg, file, qlist, symbolic);
    if (*cx) return cmd_counterexample(cfg, N);
    if (*mb) return cmd_membership(cfg, elt, tag);
  } catch (const ParseError& e) {
    std::cerr << "masure: " << e.what() << "\n";
    return 2;
  } catch (const NotLambdaPath& e) {
    std::cerr << "masure: " << e.what() << "\n";
    return 2;
  } catch (const BoundExceeded& e) {
    std::cerr << "masure: " << e.what() << " (needs --kbound " << e.needed() << ")\n";
    return 3;
  } catch (const StrategyInapplicable& e) {
    std::cerr << "masure: " << e.what() << "\n";
    return 4;
  } catch (const ProblematicCase& e) {
    std::cerr << "masure: " << e.what() << "\n";
    return 5;
  } catch (const json::exception& e) {
    std::cerr << "masure: ParseError: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "masure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
