#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "masure/heckepath.hpp"
#include "masure/laurent.hpp"
#include "masure/rootgeom.hpp"

namespace masure {

// (M, sd) in SL2(k(w)[u,u^-1]) x| k(w)^*, entries allowed in k(w)(u) for completions
struct GroupElement {
  std::array<std::array<RationalU, 2>, 2> m{{{RationalU(1), RationalU(0)}, {RationalU(0), RationalU(1)}}};
  RationalFunc sd = RationalFunc(1);

  static GroupElement identity() { return {}; }
  // throws ZeroEntry unless the determinant is 1
  static GroupElement from_entries(const RationalU& a, const RationalU& b, const RationalU& c, const RationalU& d,
                                   const RationalFunc& sd = RationalFunc(1));
  RationalU det() const;
  GroupElement inverse() const;
  bool operator==(const GroupElement& o) const { return m == o.m && sd == o.sd; }
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  std::string str() const;  // [[e11,e12],[e21,e22]];sd=expr
};

GroupElement mul(const GroupElement& a, const GroupElement& b);
inline GroupElement operator*(const GroupElement& a, const GroupElement& b) { return mul(a, b); }

GroupElement parse_group_element(std::string_view text);

GroupElement x_upper(const RationalU& a);  // [[1,a],[0,1]]
GroupElement x_lower(const RationalU& b);  // [[1,0],[b,1]]
GroupElement n_elt(const RationalU& a);    // [[0,a],[-1/a,0]]
GroupElement diag_elt(const RationalU& d);

// x_{eps*aleph + k*delta}(y)
struct RootGenerator {
  int eps = 1;
  std::int64_t k = 0;
  RationalFunc y;

  GroupElement element() const;
  std::string str() const;  // x(eps,k,y)
};

// words written x(1,3,w^2)*x(1,6,w^5); "e" is the empty word
std::vector<RootGenerator> parse_word(std::string_view text);
std::string word_str(const std::vector<RootGenerator>& w);
GroupElement word_element(const std::vector<RootGenerator>& w);

// affine root whose non-negative side is fixed by the generator on the given sheet
AffineRoot fixed_halfspace(const RootGenerator& g, Sheet sheet);
std::string halfspace_str(const AffineRoot& r, Sheet sheet);
// the generator fixes the chamber at infinity C_infinity of the minus sheet
bool fixes_c_infinity(const RootGenerator& g);

std::array<GroupElement, 3> identity_rewrite_1(const RationalU& a);
std::array<GroupElement, 3> identity_rewrite_2(const RationalU& a, const RationalU& b);

enum class SetTag { K, Kbar_loop, Ibar_inf_loop, U_ma_minus_Cinf, G_twin, G_loop_pol, SL2_Oplus_Laurent };
enum class Verdict { yes, no, unknown };

std::string tag_name(SetTag t);
SetTag parse_tag(const std::string& s);
std::string verdict_name(Verdict v);

struct MembershipCertificate {
  SetTag tag = SetTag::K;
  Verdict verdict = Verdict::unknown;
  std::vector<std::string> witness;
  std::int64_t depth = 0;
  std::string str() const;
};

MembershipCertificate membership(const GroupElement& g, SetTag tag, std::int64_t depth = 32);

std::int64_t delta_level(const GroupElement& g, Sheet sheet);

struct NAction {
  AffineMap map;
  std::int64_t delta = 0;  // shift of the delta coordinate
  std::string str() const;
};

NAction n_action(const GroupElement& n, Sheet sheet);

struct RetractOptions {
  std::int64_t depth = 32;
  std::int64_t k_bound = 64;
  bool superdecorate = true;
};

struct RetractPiece {
  Q t0, t1;  // in the parameter of phi(t) = (0, -t)
  AffineMap map;
  std::string label;
};

struct RetractResult {
  Q lo, hi;
  std::vector<RetractPiece> pieces;
  PiecewisePath path;  // reparametrized on [0, 1]
  std::vector<Q> fold_times;
  std::vector<Point> fold_points;
  std::vector<MembershipCertificate> certificates;
  std::vector<std::string> notes;  // generators fixing C_infinity that were peeled off
  std::optional<Superdecoration> superdecoration;
  std::string superdecoration_error;
  std::optional<std::int64_t> bound_needed;
};

RetractResult retract_segment(const std::vector<RootGenerator>& word, const Q& lo, const Q& hi,
                              const RetractOptions& opts = {});

std::vector<RootGenerator> word_gN(int N);
std::vector<RootGenerator> word_gprimeN(int N);
GroupElement g_counterexample();
GroupElement g1_infinity();

// "gN:3", "gprimeN:2", "e" or an explicit word
std::vector<RootGenerator> resolve_word(const std::string& name);
// the above plus "g-counterexample", "g1inf" and literal matrices
GroupElement resolve_element(const std::string& name);

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CounterexampleReport {
  std::vector<CheckLine> checks;
  std::vector<MembershipCertificate> certificates;
  bool all_pass() const;
  bool any_unknown() const;
};

CounterexampleReport counterexample_report(std::int64_t depth = 32, int N = 3);

}  // namespace masure
