#include "roughcomb/settle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace roughcomb {

namespace {

// Height of the chord through (xi, hi), (xj, hj) at x; the same expression
// is used by the settling code and the brute-force oracles so tie decisions
// agree bitwise.
double chord_height(double xi, double hi, double xj, double hj, double x) {
  return hi + (hj - hi) * (x - xi) / (xj - xi);
}

struct Plane {  // z = c0 + cx * x + cy * y
  double c0, cx, cy;
  double at(double x, double y) const { return c0 + cx * x + cy * y; }
};

double det3(double a11, double a12, double a13, double a21, double a22, double a23, double a31,
            double a32, double a33) {
  return a11 * (a22 * a33 - a23 * a32) - a12 * (a21 * a33 - a23 * a31) +
         a13 * (a21 * a32 - a22 * a31);
}

Plane plane_through(double x1, double y1, double z1, double x2, double y2, double z2, double x3,
                    double y3, double z3) {
  double d = det3(x1, y1, 1, x2, y2, 1, x3, y3, 1);
  double cx = det3(z1, y1, 1, z2, y2, 1, z3, y3, 1) / d;
  double cy = det3(x1, z1, 1, x2, z2, 1, x3, z3, 1) / d;
  double c0 = det3(x1, y1, z1, x2, y2, z2, x3, y3, z3) / d;
  return {c0, cx, cy};
}

}  // namespace

OriginLocation origin_in_triangle(double x1, double y1, double x2, double y2, double x3,
                                  double y3) {
  // edge crosses cross((v_next - v) x (0 - v)); all of one sign means the
  // origin is strictly inside for either vertex orientation
  double c1 = (x2 - x1) * (-y1) - (y2 - y1) * (-x1);
  double c2 = (x3 - x2) * (-y2) - (y3 - y2) * (-x2);
  double c3 = (x1 - x3) * (-y3) - (y1 - y3) * (-x3);
  double mn = std::min({c1, c2, c3});
  double mx = std::max({c1, c2, c3});
  if (mn > kGeomTol || mx < -kGeomTol) return OriginLocation::Strict;
  if (mn < -kGeomTol && mx > kGeomTol) return OriginLocation::Outside;
  return OriginLocation::OnEdge;
}

SupportPair support_pair(const LineComb& comb) {
  const auto& x = comb.positions;
  const auto& h = comb.heights;
  int n = comb.n();

  // upper convex hull, monotone chain over x-sorted input
  std::vector<int> hull;
  hull.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    while (hull.size() >= 2) {
      int a = hull[hull.size() - 2];
      int b = hull.back();
      double cross = (x[b] - x[a]) * (h[i] - h[a]) - (h[b] - h[a]) * (x[i] - x[a]);
      if (cross >= 0.0) {
        hull.pop_back();  // left turn or collinear: b is not on the upper hull
      } else {
        break;
      }
    }
    hull.push_back(i);
  }

  // hull edge whose x-span contains 0
  std::size_t r = 0;
  while (r < hull.size() && !(x[hull[r]] > 0.0)) ++r;
  int L = hull[r - 1];
  int R = hull[r];
  if (std::abs(x[L]) <= kGeomTol || std::abs(x[R]) <= kGeomTol)
    throw degenerate_error("support_pair: support point exactly at x = 0");
  for (int k = 0; k < n; ++k) {
    if (k == L || k == R) continue;
    if (std::abs(chord_height(x[L], h[L], x[R], h[R], x[k]) - h[k]) <= kGeomTol)
      throw degenerate_error("support_pair: third tip exactly on the support chord");
  }
  return {L, R, x[L], x[R]};
}

SupportPair brute_force_support_pair(const LineComb& comb, int cap) {
  const auto& x = comb.positions;
  const auto& h = comb.heights;
  int n = comb.n();
  if (n > cap) throw std::invalid_argument("brute_force_support_pair: comb larger than cap");

  int found_l = -1, found_r = -1;
  int n_found = 0;
  for (int i = 0; i < n; ++i) {
    if (!(x[i] < 0.0)) continue;
    for (int j = 0; j < n; ++j) {
      if (!(x[j] > 0.0)) continue;
      bool dominates = true;
      for (int k = 0; k < n && dominates; ++k) {
        if (k == i || k == j) continue;
        dominates = chord_height(x[i], h[i], x[j], h[j], x[k]) >= h[k] - kGeomTol;
      }
      if (dominates) {
        ++n_found;
        found_l = i;
        found_r = j;
      }
    }
  }
  if (n_found != 1)
    throw degenerate_error("brute_force_support_pair: no unique dominating pair");
  if (std::abs(x[found_l]) <= kGeomTol || std::abs(x[found_r]) <= kGeomTol)
    throw degenerate_error("brute_force_support_pair: support point exactly at x = 0");
  for (int k = 0; k < n; ++k) {
    if (k == found_l || k == found_r) continue;
    if (std::abs(chord_height(x[found_l], h[found_l], x[found_r], h[found_r], x[k]) - h[k]) <=
        kGeomTol)
      throw degenerate_error("brute_force_support_pair: third tip exactly on the support chord");
  }
  return {found_l, found_r, x[found_l], x[found_r]};
}

namespace {

// Shared admissibility pieces for the triple settle and its oracle.

struct CircleGeom {
  std::vector<double> bx, by;  // tip base points on the unit circle
  const std::vector<double>* h;

  explicit CircleGeom(const CircularComb& comb) : h(&comb.heights) {
    int n = comb.n();
    bx.resize(static_cast<std::size_t>(n));
    by.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      bx[i] = std::cos(comb.angles[i]);
      by[i] = std::sin(comb.angles[i]);
    }
  }

  int n() const { return static_cast<int>(bx.size()); }

  Plane plane(int i, int j, int k) const {
    return plane_through(bx[i], by[i], (*h)[i], bx[j], by[j], (*h)[j], bx[k], by[k], (*h)[k]);
  }

  // true if the plane stays at or above every tip; flags any non-member tip
  // lying within tolerance of the plane (a coplanar tie)
  bool dominates(const Plane& p, int i, int j, int k, bool* coplanar_tie) const {
    *coplanar_tie = false;
    for (int m = 0; m < n(); ++m) {
      if (m == i || m == j || m == k) continue;
      double gap = p.at(bx[m], by[m]) - (*h)[m];
      if (gap < -kGeomTol) return false;
      if (gap <= kGeomTol) *coplanar_tie = true;
    }
    return true;
  }

  OriginLocation origin_location(int i, int j, int k) const {
    return origin_in_triangle(bx[i], by[i], bx[j], by[j], bx[k], by[k]);
  }
};

SupportTriple make_triple(const CircularComb& comb, int i, int j, int k) {
  std::array<int, 3> idx{i, j, k};
  std::sort(idx.begin(), idx.end());  // angles are sorted, so this is cyclic order
  return {idx, {comb.angles[idx[0]], comb.angles[idx[1]], comb.angles[idx[2]]}};
}

}  // namespace

SupportTriple support_triple(const CircularComb& comb) {
  const CircleGeom g(comb);
  const auto& h = comb.heights;
  int n = g.n();

  // first contact: the highest tip
  int m = static_cast<int>(std::max_element(h.begin(), h.end()) - h.begin());

  // tilt the horizontal plane through tip m, descending over the center,
  // until a second tip is hit: plane_s(q) = h_m + s (<b_m, q> - 1)
  int second = -1;
  double s_best = 0.0;
  for (int j = 0; j < n; ++j) {
    if (j == m) continue;
    double denom = 1.0 - (g.bx[m] * g.bx[j] + g.by[m] * g.by[j]);
    double s = (h[m] - h[j]) / denom;
    if (second < 0 || s < s_best) {
      second = j;
      s_best = s;
    }
  }
  Plane plane{h[m] - s_best, s_best * g.bx[m], s_best * g.by[m]};

  int ei = m, ej = second, third = -1;
  const int cap = 4 * n;
  for (int pivot = 0; pivot < cap; ++pivot) {
    // rotate about the chord (ei, ej), descending over the center
    double tx = g.bx[ej] - g.bx[ei];
    double ty = g.by[ej] - g.by[ei];
    double nx = -ty, ny = tx;  // normal to the chord direction
    double d = nx * g.bx[ei] + ny * g.by[ei];
    if (std::abs(d) <= kGeomTol)
      throw degenerate_error("support_triple: center exactly on a support chord");
    if (d < 0.0) {
      nx = -nx;
      ny = -ny;
      d = -d;
    }
    third = -1;
    double t_best = 0.0;
    for (int k = 0; k < n; ++k) {
      if (k == ei || k == ej) continue;
      double gk = nx * (g.bx[k] - g.bx[ei]) + ny * (g.by[k] - g.by[ei]);
      if (gk >= 0.0) continue;  // on the rising side of the rotation
      double t = (h[k] - plane.at(g.bx[k], g.by[k])) / gk;
      if (t < 0.0) t = 0.0;
      if (third < 0 || t < t_best) {
        third = k;
        t_best = t;
      }
    }
    if (third < 0)
      throw degenerate_error("support_triple: no tooth beyond the chord (no equilibrium)");

    plane = g.plane(ei, ej, third);

    // orient the triple counterclockwise before the containment test
    int vi[3] = {ei, ej, third};
    double area2 = (g.bx[vi[1]] - g.bx[vi[0]]) * (g.by[vi[2]] - g.by[vi[0]]) -
                   (g.by[vi[1]] - g.by[vi[0]]) * (g.bx[vi[2]] - g.bx[vi[0]]);
    if (area2 < 0.0) std::swap(vi[1], vi[2]);
    OriginLocation loc = g.origin_location(vi[0], vi[1], vi[2]);
    if (loc == OriginLocation::OnEdge)
      throw degenerate_error("support_triple: center exactly on a triangle edge");
    if (loc == OriginLocation::Strict) {
      bool coplanar = false;
      if (!g.dominates(plane, ei, ej, third, &coplanar))
        throw degenerate_error("support_triple: support plane lost dominance");
      if (coplanar)
        throw degenerate_error("support_triple: fourth tip coplanar with the support plane");
      return make_triple(comb, ei, ej, third);
    }

    // center strictly outside: pivot about the most violated edge, dropping
    // the opposite vertex
    double worst = 0.0;
    int drop = -1;
    for (int e = 0; e < 3; ++e) {
      int a = vi[e], b = vi[(e + 1) % 3];
      double cr = (g.bx[b] - g.bx[a]) * (-g.by[a]) - (g.by[b] - g.by[a]) * (-g.bx[a]);
      if (cr < worst) {
        worst = cr;
        drop = vi[(e + 2) % 3];
      }
    }
    if (drop == ei) {
      ei = third;
    } else if (drop == ej) {
      ej = third;
    }
    // else drop == third: keep pivoting about (ei, ej); the rotation
    // direction flips because the plane now descends past the far side
  }
  throw degenerate_error("support_triple: pivot cap exceeded");
}

SupportTriple brute_force_support_triple(const CircularComb& comb, int cap) {
  const CircleGeom g(comb);
  int n = g.n();
  if (n > cap) throw std::invalid_argument("brute_force_support_triple: comb larger than cap");

  int fi = -1, fj = -1, fk = -1;
  int n_found = 0;
  bool tie = false;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        if (g.origin_location(i, j, k) != OriginLocation::Strict) continue;
        bool coplanar = false;
        if (!g.dominates(g.plane(i, j, k), i, j, k, &coplanar)) continue;
        ++n_found;
        tie = tie || coplanar;
        fi = i;
        fj = j;
        fk = k;
      }
    }
  }
  if (n_found != 1)
    throw degenerate_error("brute_force_support_triple: no unique dominating triple");
  if (tie)
    throw degenerate_error("brute_force_support_triple: fourth tip coplanar with the plane");
  return make_triple(comb, fi, fj, fk);
}

}  // namespace roughcomb
