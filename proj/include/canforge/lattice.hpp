#pragma once

// Exact 2D lattice-polygon geometry: hulls, point enumeration, interior
// hulls, dilation, Ehrhart counting and unimodular classification.
// Everything here is integer arithmetic; no floating point.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace canforge {

using Int = long long;

struct LatticePoint {
  Int x = 0;
  Int y = 0;

  friend constexpr bool operator==(const LatticePoint&, const LatticePoint&) = default;
  // lexicographic on (x, y); used as the canonical point order everywhere
  friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

  constexpr LatticePoint operator+(LatticePoint o) const { return {x + o.x, y + o.y}; }
  constexpr LatticePoint operator-(LatticePoint o) const { return {x - o.x, y - o.y}; }
  constexpr LatticePoint operator-() const { return {-x, -y}; }
  constexpr LatticePoint operator*(Int k) const { return {x * k, y * k}; }
};

inline constexpr Int cross(LatticePoint a, LatticePoint b) { return a.x * b.y - a.y * b.x; }

inline std::string to_string(LatticePoint p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

// floor/ceil division with sign handled exactly (b > 0 assumed)
inline constexpr Int floor_div(Int a, Int b) {
  Int q = a / b;
  return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}
inline constexpr Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

inline LatticePoint primitive(LatticePoint v) {
  Int g = std::gcd(v.x, v.y);
  if (g == 0) throw std::invalid_argument("primitive: zero vector");
  return {v.x / g, v.y / g};
}

// Affine map p -> A p + t with A integral and det A = +-1.
class UnimodularMap {
 public:
  UnimodularMap() = default;  // identity
  UnimodularMap(Int a, Int b, Int c, Int d, LatticePoint t = {0, 0})
      : a_(a), b_(b), c_(c), d_(d), t_(t) {
    if (det() != 1 && det() != -1) throw std::invalid_argument("UnimodularMap: |det| != 1");
  }
  static UnimodularMap translation(LatticePoint t) { return UnimodularMap(1, 0, 0, 1, t); }

  Int det() const { return a_ * d_ - b_ * c_; }
  LatticePoint operator()(LatticePoint p) const {
    return {a_ * p.x + b_ * p.y + t_.x, c_ * p.x + d_ * p.y + t_.y};
  }
  // linear part only (for directions)
  LatticePoint linear(LatticePoint v) const { return {a_ * v.x + b_ * v.y, c_ * v.x + d_ * v.y}; }

  UnimodularMap inverse() const {
    Int s = det();  // +-1
    Int ia = s * d_, ib = -s * b_, ic = -s * c_, id = s * a_;
    LatticePoint it{-(ia * t_.x + ib * t_.y), -(ic * t_.x + id * t_.y)};
    return UnimodularMap(ia, ib, ic, id, it);
  }
  // (*this) after `inner`: p -> this(inner(p))
  UnimodularMap compose(const UnimodularMap& m) const {
    return UnimodularMap(a_ * m.a_ + b_ * m.c_, a_ * m.b_ + b_ * m.d_,
                         c_ * m.a_ + d_ * m.c_, c_ * m.b_ + d_ * m.d_,
                         (*this)(m.t_));
  }
  Int a() const { return a_; }
  Int b() const { return b_; }
  Int c() const { return c_; }
  Int d() const { return d_; }
  LatticePoint t() const { return t_; }
  friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;

 private:
  Int a_ = 1, b_ = 0, c_ = 0, d_ = 1;
  LatticePoint t_{0, 0};
};

// Convex lattice polygon in canonical form. May be degenerate; the
// dimension tag is -1 (empty), 0 (point), 1 (segment) or 2. For dimension 2
// the vertex list is counterclockwise starting at the lexicographically
// smallest vertex, so polygon equality is plain list equality.
class LatticePolygon {
 public:
  LatticePolygon() = default;  // empty

  static LatticePolygon hull(std::vector<LatticePoint> pts);

  int dimension() const { return dim_; }
  bool is_two_dimensional() const { return dim_ == 2; }
  const std::vector<LatticePoint>& vertices() const { return verts_; }
  const std::vector<LatticePoint>& lattice_points() const { return points_; }
  Int lattice_point_count() const { return static_cast<Int>(points_.size()); }
  Int boundary_count() const { return boundary_; }     // 0 unless dimension 2
  Int doubled_area() const { return doubled_area_; }   // 0 unless dimension 2

  // closed membership
  bool contains(LatticePoint p) const;
  // open membership (dimension 2 only; false otherwise)
  bool strictly_contains(LatticePoint p) const;

  // directed boundary edges, counterclockwise
  std::vector<std::pair<LatticePoint, LatticePoint>> edges() const;

  LatticePolygon interior_hull() const;
  LatticePolygon dilate(Int k) const;
  Int ehrhart_count(Int k) const;

  LatticePolygon transformed(const UnimodularMap& m) const;

  friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;

 private:
  void finalize();  // canonicalize, enumerate, check Pick

  int dim_ = -1;
  std::vector<LatticePoint> verts_;
  std::vector<LatticePoint> points_;
  Int boundary_ = 0;
  Int doubled_area_ = 0;
};

inline LatticePolygon convex_hull(const std::vector<LatticePoint>& pts) {
  if (pts.empty()) throw std::invalid_argument("convex_hull: empty point list");
  return LatticePolygon::hull(pts);
}

// conv{(0,0),(1,0),(0,1)}
inline LatticePolygon sigma() { return convex_hull({{0, 0}, {1, 0}, {0, 1}}); }
// conv{(-1,-1),(1,0),(0,1)}
inline LatticePolygon upsilon() { return convex_hull({{-1, -1}, {1, 0}, {0, 1}}); }
// conv{(-1,1),(0,-1),(r,0)}: the normal form of a 3-boundary-point polygon
// whose interior lattice points are (0,0),...,(r-1,0)
inline LatticePolygon normalized_hyperelliptic_triangle(Int r) {
  if (r < 1) throw std::invalid_argument("normalized triangle needs r >= 1");
  return convex_hull({{-1, 1}, {0, -1}, {r, 0}});
}

enum class PolygonTag { ManyBoundary, SimplexSigma, NonHypThree, HypThree };

inline const char* to_string(PolygonTag t) {
  switch (t) {
    case PolygonTag::ManyBoundary: return "many_boundary";
    case PolygonTag::SimplexSigma: return "simplex_sigma";
    case PolygonTag::NonHypThree: return "nonhyp_three";
    case PolygonTag::HypThree: return "hyp_three";
  }
  return "?";
}

struct PolygonClass {
  PolygonTag tag = PolygonTag::ManyBoundary;
  Int r = 0;                                // HypThree only: r = N - 3
  std::optional<UnimodularMap> to_normal;   // HypThree only: P -> normalized triangle
};

std::optional<UnimodularMap> unimodular_equivalent(const LatticePolygon& p,
                                                   const LatticePolygon& q);
PolygonClass classify(const LatticePolygon& p);

// ---------------------------------------------------------------------------
// implementation

inline LatticePolygon LatticePolygon::hull(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  LatticePolygon out;
  if (pts.empty()) return out;
  if (pts.size() == 1) {
    out.dim_ = 0;
    out.verts_ = pts;
    out.points_ = pts;
    return out;
  }

  // Andrew's monotone chain; strict turns only, so collinear points drop out.
  auto build = [](const std::vector<LatticePoint>& s) {
    std::vector<LatticePoint> h;
    for (const auto& p : s) {
      while (h.size() >= 2 && cross(h.back() - h[h.size() - 2], p - h[h.size() - 2]) <= 0)
        h.pop_back();
      h.push_back(p);
    }
    return h;
  };
  std::vector<LatticePoint> lower = build(pts);
  std::vector<LatticePoint> rev(pts.rbegin(), pts.rend());
  std::vector<LatticePoint> upper = build(rev);

  if (lower.size() == 2 && upper.size() == 2) {
    // all input points collinear
    out.dim_ = 1;
    out.verts_ = {pts.front(), pts.back()};  // extreme endpoints, lex order
    LatticePoint d = primitive(pts.back() - pts.front());
    Int len = (d.x != 0) ? (pts.back().x - pts.front().x) / d.x
                         : (pts.back().y - pts.front().y) / d.y;
    for (Int k = 0; k <= len; ++k) out.points_.push_back(pts.front() + d * k);
    return out;
  }

  out.dim_ = 2;
  out.verts_ = std::move(lower);
  out.verts_.pop_back();
  upper.pop_back();
  out.verts_.insert(out.verts_.end(), upper.begin(), upper.end());
  out.finalize();
  return out;
}

inline void LatticePolygon::finalize() {
  // rotate so the lexicographically smallest vertex comes first
  auto it = std::min_element(verts_.begin(), verts_.end());
  std::rotate(verts_.begin(), it, verts_.end());

  const size_t n = verts_.size();
  doubled_area_ = 0;
  boundary_ = 0;
  for (size_t i = 0; i < n; ++i) {
    const LatticePoint a = verts_[i], b = verts_[(i + 1) % n];
    doubled_area_ += cross(a, b);
    boundary_ += std::gcd(std::abs(b.x - a.x), std::abs(b.y - a.y));
  }
  if (doubled_area_ <= 0) throw std::logic_error("polygon orientation/area invariant broken");

  // Row sweep between exact rational edge intersections. For each lattice
  // row the boundary crossings bound the x-interval; integer floor/ceil only.
  Int ymin = verts_[0].y, ymax = verts_[0].y;
  for (const auto& v : verts_) {
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  points_.clear();
  for (Int y = ymin; y <= ymax; ++y) {
    // fractions num/den with den > 0
    bool have = false;
    Int lo_num = 0, lo_den = 1, hi_num = 0, hi_den = 1;
    auto feed = [&](Int num, Int den) {
      if (den < 0) { num = -num; den = -den; }
      if (!have) {
        lo_num = hi_num = num;
        lo_den = hi_den = den;
        have = true;
        return;
      }
      if (num * lo_den < lo_num * den) { lo_num = num; lo_den = den; }
      if (num * hi_den > hi_num * den) { hi_num = num; hi_den = den; }
    };
    for (size_t i = 0; i < n; ++i) {
      const LatticePoint a = verts_[i], b = verts_[(i + 1) % n];
      if (a.y == b.y) {
        if (a.y == y) { feed(a.x, 1); feed(b.x, 1); }
        continue;
      }
      if (y < std::min(a.y, b.y) || y > std::max(a.y, b.y)) continue;
      // x = a.x + (y - a.y) (b.x - a.x) / (b.y - a.y)
      feed(a.x * (b.y - a.y) + (y - a.y) * (b.x - a.x), b.y - a.y);
    }
    if (!have) continue;
    for (Int x = ceil_div(lo_num, lo_den); x <= floor_div(hi_num, hi_den); ++x)
      points_.push_back({x, y});
  }
  std::sort(points_.begin(), points_.end());

  // Pick's theorem: N = Vol + B/2 + 1, i.e. 2N = 2Vol + B + 2
  if (2 * lattice_point_count() != doubled_area_ + boundary_ + 2)
    throw std::logic_error("Pick consistency violated (enumeration bug)");
}

inline bool LatticePolygon::contains(LatticePoint p) const {
  switch (dim_) {
    case -1: return false;
    case 0: return p == verts_[0];
    case 1: {
      const LatticePoint a = verts_[0], b = verts_[1];
      if (cross(b - a, p - a) != 0) return false;
      return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
             std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
    }
    default: {
      const size_t n = verts_.size();
      for (size_t i = 0; i < n; ++i)
        if (cross(verts_[(i + 1) % n] - verts_[i], p - verts_[i]) < 0) return false;
      return true;
    }
  }
}

inline bool LatticePolygon::strictly_contains(LatticePoint p) const {
  if (dim_ != 2) return false;
  const size_t n = verts_.size();
  for (size_t i = 0; i < n; ++i)
    if (cross(verts_[(i + 1) % n] - verts_[i], p - verts_[i]) <= 0) return false;
  return true;
}

inline std::vector<std::pair<LatticePoint, LatticePoint>> LatticePolygon::edges() const {
  std::vector<std::pair<LatticePoint, LatticePoint>> e;
  const size_t n = verts_.size();
  if (dim_ < 1) return e;
  if (dim_ == 1) {
    e.emplace_back(verts_[0], verts_[1]);
    return e;
  }
  for (size_t i = 0; i < n; ++i) e.emplace_back(verts_[i], verts_[(i + 1) % n]);
  return e;
}

inline LatticePolygon LatticePolygon::interior_hull() const {
  if (dim_ != 2) throw std::invalid_argument("interior_hull: polygon not two-dimensional");
  std::vector<LatticePoint> inner;
  for (const auto& p : points_)
    if (strictly_contains(p)) inner.push_back(p);
  if (inner.empty()) return LatticePolygon{};
  return hull(std::move(inner));
}

inline LatticePolygon LatticePolygon::dilate(Int k) const {
  if (k < 1) throw std::invalid_argument("dilate: k must be >= 1");
  std::vector<LatticePoint> v;
  v.reserve(verts_.size());
  for (const auto& p : verts_) v.push_back(p * k);
  if (v.empty()) return LatticePolygon{};
  return hull(std::move(v));
}

inline Int LatticePolygon::ehrhart_count(Int k) const {
  if (dim_ != 2) throw std::invalid_argument("ehrhart_count: polygon not two-dimensional");
  if (k < 1) throw std::invalid_argument("ehrhart_count: k must be >= 1");
  return (doubled_area_ * k * k + boundary_ * k) / 2 + 1;
}

inline LatticePolygon LatticePolygon::transformed(const UnimodularMap& m) const {
  if (dim_ == -1) return LatticePolygon{};
  std::vector<LatticePoint> v;
  v.reserve(verts_.size());
  for (const auto& p : verts_) v.push_back(m(p));
  return hull(std::move(v));
}

inline std::optional<UnimodularMap> unimodular_equivalent(const LatticePolygon& p,
                                                          const LatticePolygon& q) {
  if (!p.is_two_dimensional() || !q.is_two_dimensional())
    throw std::invalid_argument("unimodular_equivalent: inputs must be two-dimensional");
  // cheap invariants first
  if (p.lattice_point_count() != q.lattice_point_count()) return std::nullopt;
  if (p.boundary_count() != q.boundary_count()) return std::nullopt;
  if (p.doubled_area() != q.doubled_area()) return std::nullopt;
  if (p.vertices().size() != q.vertices().size()) return std::nullopt;

  // An affine unimodular map is pinned down by the image of one vertex and of
  // its two adjacent primitive edge directions; enumerate all candidates.
  const auto& pv = p.vertices();
  const auto& qv = q.vertices();
  const size_t n = pv.size();
  auto dirs_at = [&](const std::vector<LatticePoint>& v, size_t i) {
    const size_t m = v.size();
    LatticePoint out = primitive(v[(i + 1) % m] - v[i]);
    LatticePoint in = primitive(v[(i + m - 1) % m] - v[i]);
    return std::pair{out, in};
  };
  for (size_t i = 0; i < n; ++i) {
    auto [u1, t1] = dirs_at(pv, i);
    const Int d1 = cross(u1, t1);
    for (size_t j = 0; j < n; ++j) {
      auto [u2, t2] = dirs_at(qv, j);
      for (int flip = 0; flip < 2; ++flip) {
        const LatticePoint iu = flip ? t2 : u2;
        const LatticePoint it = flip ? u2 : t2;
        // solve A u1 = iu, A t1 = it over the integers
        const Int na = iu.x * t1.y - it.x * u1.y;
        const Int nb = it.x * u1.x - iu.x * t1.x;
        const Int nc = iu.y * t1.y - it.y * u1.y;
        const Int nd = it.y * u1.x - iu.y * t1.x;
        if (na % d1 || nb % d1 || nc % d1 || nd % d1) continue;
        const Int a = na / d1, b = nb / d1, c = nc / d1, d = nd / d1;
        if (std::abs(a * d - b * c) != 1) continue;
        UnimodularMap cand(a, b, c, d,
                           {qv[j].x - (a * pv[i].x + b * pv[i].y),
                            qv[j].y - (c * pv[i].x + d * pv[i].y)});
        if (p.transformed(cand) == q) return cand;
      }
    }
  }
  return std::nullopt;
}

inline PolygonClass classify(const LatticePolygon& p) {
  if (!p.is_two_dimensional()) throw std::invalid_argument("classify: polygon not two-dimensional");
  PolygonClass cls;
  if (p.boundary_count() != 3) {
    cls.tag = PolygonTag::ManyBoundary;
    return cls;
  }
  const LatticePolygon inner = p.interior_hull();
  if (inner.dimension() == 1) {
    cls.tag = PolygonTag::HypThree;
    cls.r = p.lattice_point_count() - 3;
    cls.to_normal = unimodular_equivalent(p, normalized_hyperelliptic_triangle(cls.r));
    if (!cls.to_normal)
      throw std::logic_error("hyperelliptic polygon failed to normalize (classification bug)");
    return cls;
  }
  if (unimodular_equivalent(p, sigma())) {
    cls.tag = PolygonTag::SimplexSigma;
    return cls;
  }
  cls.tag = PolygonTag::NonHypThree;
  return cls;
}

}  // namespace canforge
