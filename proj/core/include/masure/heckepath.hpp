#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "masure/galleries.hpp"
#include "masure/rootgeom.hpp"

namespace masure {

struct PathPiece {
  Q t0, t1;
  WeylElt w;          // derivative on the piece is w.shape
  std::string label;  // optional name of the affine map producing the piece
};

// Piecewise linear path pi(t) = origin + sum of w_i.shape over [0, t], t in [0, 1].
struct PiecewisePath {
  Vec2 shape;
  int eps = -1;
  Point origin;
  std::vector<PathPiece> pieces;

  Vec2 derivative(std::size_t i) const { return pieces[i].w.apply(shape); }
  std::size_t piece_at(const Q& t, bool from_right) const;
  Point at(const Q& t) const;
  Point end() const { return at(Q(1)); }
  // interior parameters where the derivative changes
  std::vector<Q> breakpoints() const;
};

// validates and merges consecutive pieces with the same direction
PiecewisePath build_path(const Vec2& shape, int eps, const Point& origin, std::vector<PathPiece> pieces);

// from explicit breakpoints 0 = b_0 < ... < b_n = 1 and derivative vectors
PiecewisePath path_from_derivatives(const Vec2& shape, int eps, const Point& origin, const std::vector<Q>& breaks,
                                    const std::vector<Vec2>& derivs);

// the Weyl element w with w.shape = v, if any
std::optional<WeylElt> weyl_for_derivative(const Vec2& shape, const Vec2& v);

struct CrossingEvent {
  Q t;
  Point p;
  std::int64_t sigma = 0;
  AffineRoot root;  // root vanishing at p with vectorial part positive
  std::size_t piece = 0;
};

// slope window that provably contains every relevant wall
std::int64_t certified_kbound(const PiecewisePath& path);

// times t in [0, 1) where pi crosses a wall M with pi_+(t) not in M, leaving the side of C_infinity
std::vector<CrossingEvent> crossing_events(const PiecewisePath& path, std::int64_t k_bound = 64);

struct Chain {
  std::vector<Vec2> xi;           // xi_0 = pi'_+, ..., xi_s = pi'_-
  std::vector<AffineRoot> roots;  // beta_1 .. beta_s
  std::string str() const;
};

std::optional<Chain> chain_search(const Point& p, const Vec2& xi_plus, const Vec2& xi_minus);

struct HeckePoint {
  Q t;
  Point p;
  Vec2 xi_plus, xi_minus;
  std::optional<Chain> chain;
};

struct HeckeReport {
  bool ok = true;
  std::string reason;
  std::vector<HeckePoint> points;
};

HeckeReport verify_hecke(const PiecewisePath& path, std::int64_t k_bound = 64);

struct PointDecoration {
  Q t;
  Point p;
  Vec2 germ_plus, germ_minus;  // pi'_+(t), pi'_-(t)
  bool fold = false;
  LocalChamber c_inf, c_plus, c_minus, c_paren;
  WeylElt w_plus, w_minus;
};

struct Decoration {
  PiecewisePath path;
  LocalChamber c_inf0, c_plus0;
  std::vector<PointDecoration> points;
};

// union of the interior breakpoints and of the crossing events in (0, 1)
std::vector<Q> subdivision(const PiecewisePath& path, std::int64_t k_bound = 64);

// decorations of the image of a segment of direction `shape` under maps whose linear parts are the piece directions
Decoration decorate(const PiecewisePath& path, std::int64_t k_bound = 64);

// failures of w- <= w+ at each point and w+_{i-1} >= w-_i along the subdivision
std::vector<std::string> bruhat_failures(const Decoration& d);

struct SuperPoint {
  PointDecoration dec;
  GalleryType type;
  std::int64_t m = 0, m_prime = 0, m_doubleprime = 0;
  Gallery gallery;
};

struct Superdecoration {
  PiecewisePath path;
  LocalChamber c_inf0, c_plus0;
  std::int64_t m_doubleprime0 = 0;
  std::vector<SuperPoint> points;
};

Superdecoration superdecorate(const Decoration& d);

// list of violated conditions (empty when valid)
std::vector<std::string> validate_superdecoration(const Superdecoration& sd);

}  // namespace masure
