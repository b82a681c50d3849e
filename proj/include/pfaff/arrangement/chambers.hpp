#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <vector>

#include "pfaff/arrangement/family.hpp"

namespace pfaff {

using Point2 = std::array<Rational, 2>;

/// Bounded chamber of a line arrangement: vertices counterclockwise, and the
/// line carrying the edge from vertices[i] to vertices[i+1].
struct Chamber2D {
  std::vector<Point2> vertices;
  std::vector<std::size_t> edge_lines;

  /// Sorted distinct lines bounding the chamber, used to match chambers
  /// across nearby fibers.
  [[nodiscard]] std::vector<std::size_t> line_set() const {
    std::vector<std::size_t> s = edge_lines;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }

  [[nodiscard]] Rational twice_area() const {
    Rational a(0);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      const auto& p = vertices[i];
      const auto& q = vertices[(i + 1) % vertices.size()];
      a += p[0] * q[1] - p[1] * q[0];
    }
    return a;
  }
};

namespace detail {

/// Half-plane index for exact angular sorting: 0 for angles in [0, pi), 1 otherwise.
inline int half_of(const Point2& d) {
  return (d[1].sign() > 0 || (d[1].is_zero() && d[0].sign() > 0)) ? 0 : 1;
}

inline bool angle_less(const Point2& a, const Point2& b) {
  const int ha = half_of(a), hb = half_of(b);
  if (ha != hb) return ha < hb;
  return (a[0] * b[1] - a[1] * b[0]).sign() > 0;
}

}  // namespace detail

/// Bounded faces of a planar line arrangement, computed exactly.
inline std::vector<Chamber2D> bounded_chambers(const Fiber& f) {
  if (f.dim() != 2) throw Error(ErrorCode::UnsupportedDimension, "chamber enumeration needs a 2-dimensional fiber");
  const std::size_t l = f.size();

  std::vector<Point2> points;
  std::map<Point2, std::size_t> point_index;
  std::vector<std::set<std::size_t>> on_line(l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i + 1; j < l; ++j) {
      const auto& a = f.hyperplanes[i];
      const auto& b = f.hyperplanes[j];
      const Rational det = a.t[0] * b.t[1] - a.t[1] * b.t[0];
      if (det.is_zero()) continue;
      // a.t . p = -a.c, b.t . p = -b.c
      const Point2 p{(-a.constant * b.t[1] + b.constant * a.t[1]) / det,
                     (-a.t[0] * b.constant + b.t[0] * a.constant) / det};
      auto [it, inserted] = point_index.try_emplace(p, points.size());
      if (inserted) points.push_back(p);
      on_line[i].insert(it->second);
      on_line[j].insert(it->second);
    }

  struct HalfEdge {
    std::size_t from, to, line;
  };
  std::vector<HalfEdge> edges;
  for (std::size_t i = 0; i < l; ++i) {
    const Point2 dir{-f.hyperplanes[i].t[1], f.hyperplanes[i].t[0]};
    std::vector<std::size_t> pts(on_line[i].begin(), on_line[i].end());
    std::sort(pts.begin(), pts.end(), [&](std::size_t u, std::size_t v) {
      return points[u][0] * dir[0] + points[u][1] * dir[1] < points[v][0] * dir[0] + points[v][1] * dir[1];
    });
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
      edges.push_back({pts[k], pts[k + 1], i});
      edges.push_back({pts[k + 1], pts[k], i});
    }
  }

  // Outgoing half-edges at each vertex sorted counterclockwise.
  std::vector<std::vector<std::size_t>> out(points.size());
  for (std::size_t e = 0; e < edges.size(); ++e) out[edges[e].from].push_back(e);
  auto direction = [&](std::size_t e) {
    const auto& p = points[edges[e].from];
    const auto& q = points[edges[e].to];
    return Point2{q[0] - p[0], q[1] - p[1]};
  };
  std::vector<std::size_t> position(edges.size());
  for (auto& list : out) {
    std::sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) { return detail::angle_less(direction(a), direction(b)); });
    for (std::size_t k = 0; k < list.size(); ++k) position[list[k]] = k;
  }
  auto twin = [](std::size_t e) { return e ^ 1U; };
  // With the face on the left, continue along the outgoing edge just
  // clockwise of the reverse edge.
  auto next = [&](std::size_t e) {
    const std::size_t v = edges[e].to;
    const auto& list = out[v];
    const std::size_t k = position[twin(e)];
    return list[(k + list.size() - 1) % list.size()];
  };

  std::vector<Chamber2D> chambers;
  std::vector<bool> used(edges.size(), false);
  for (std::size_t start = 0; start < edges.size(); ++start) {
    if (used[start]) continue;
    Chamber2D c;
    std::size_t e = start;
    do {
      used[e] = true;
      c.vertices.push_back(points[edges[e].from]);
      c.edge_lines.push_back(edges[e].line);
      e = next(e);
    } while (e != start);
    if (c.twice_area().sign() > 0) chambers.push_back(std::move(c));
  }
  return chambers;
}

}  // namespace pfaff
