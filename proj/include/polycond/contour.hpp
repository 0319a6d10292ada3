#ifndef POLYCOND_CONTOUR_HPP
#define POLYCOND_CONTOUR_HPP

// Marching squares over a rectangular grid of doubles. Points strictly below
// the level are "inside". Output polylines are in fractional grid coordinates
// (column, row); callers map them to physical coordinates.

#include "polycond/errors.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace polycond {

struct Point2 {
  double x = 0;
  double y = 0;
};

struct Polyline {
  std::vector<Point2> points;
  bool closed = false;
};

namespace detail {

// Cell edges: 0 bottom, 1 right, 2 top, 3 left.
// Corners: bit 0 (i,j), bit 1 (i+1,j), bit 2 (i+1,j+1), bit 3 (i,j+1).
struct EdgeEnd {
  Point2 at;
  std::array<std::size_t, 2> segments{};
  int count = 0;
};

struct Segment {
  std::size_t edge0;
  std::size_t edge1;
};

class ContourBuilder {
public:
  ContourBuilder(std::span<const double> values, std::size_t nx, std::size_t ny, double level)
      : values_(values), nx_(nx), ny_(ny), level_(level)
  {
  }

  template <class CenterFn>
  std::vector<Polyline> run(CenterFn&& center)
  {
    for (std::size_t j = 0; j + 1 < ny_; ++j) {
      for (std::size_t i = 0; i + 1 < nx_; ++i)
        cell(i, j, center);
    }
    return join();
  }

private:
  double value(std::size_t i, std::size_t j) const
  {
    double v = values_[j * nx_ + i];
    // -inf marks exact zeros; keep the interpolation finite.
    if (std::isinf(v) && v < 0)
      return level_ - 1000.0;
    return v;
  }

  bool below(std::size_t i, std::size_t j) const { return value(i, j) < level_; }

  std::size_t edge_id(std::size_t i, std::size_t j, int edge) const
  {
    switch (edge) {
    case 0:
      return 2 * (j * nx_ + i);
    case 1:
      return 2 * (j * nx_ + i + 1) + 1;
    case 2:
      return 2 * ((j + 1) * nx_ + i);
    default:
      return 2 * (j * nx_ + i) + 1;
    }
  }

  Point2 crossing(std::size_t i0, std::size_t j0, std::size_t i1, std::size_t j1) const
  {
    double a = value(i0, j0);
    double b = value(i1, j1);
    double t = (b == a) ? 0.5 : (level_ - a) / (b - a);
    t = std::fmin(1.0, std::fmax(0.0, t));
    return Point2{static_cast<double>(i0) + t * (static_cast<double>(i1) - static_cast<double>(i0)),
                  static_cast<double>(j0) + t * (static_cast<double>(j1) - static_cast<double>(j0))};
  }

  Point2 edge_point(std::size_t i, std::size_t j, int edge) const
  {
    switch (edge) {
    case 0:
      return crossing(i, j, i + 1, j);
    case 1:
      return crossing(i + 1, j, i + 1, j + 1);
    case 2:
      return crossing(i, j + 1, i + 1, j + 1);
    default:
      return crossing(i, j, i, j + 1);
    }
  }

  void add(std::size_t i, std::size_t j, int e0, int e1)
  {
    std::size_t id0 = edge_id(i, j, e0);
    std::size_t id1 = edge_id(i, j, e1);
    std::size_t s = segments_.size();
    segments_.push_back(Segment{id0, id1});
    attach(id0, s, edge_point(i, j, e0));
    attach(id1, s, edge_point(i, j, e1));
  }

  void attach(std::size_t id, std::size_t segment, Point2 at)
  {
    auto [it, inserted] = ends_.try_emplace(id);
    if (inserted)
      it->second.at = at;
    if (it->second.count >= 2)
      throw Error("marching squares: edge shared by more than two segments");
    it->second.segments[static_cast<std::size_t>(it->second.count++)] = segment;
  }

  template <class CenterFn>
  void cell(std::size_t i, std::size_t j, CenterFn& center)
  {
    unsigned code = (below(i, j) ? 1u : 0u) | (below(i + 1, j) ? 2u : 0u) |
                    (below(i + 1, j + 1) ? 4u : 0u) | (below(i, j + 1) ? 8u : 0u);
    switch (code) {
    case 0:
    case 15:
      return;
    case 1:
    case 14:
      add(i, j, 3, 0);
      return;
    case 2:
    case 13:
      add(i, j, 0, 1);
      return;
    case 3:
    case 12:
      add(i, j, 3, 1);
      return;
    case 4:
    case 11:
      add(i, j, 1, 2);
      return;
    case 6:
    case 9:
      add(i, j, 0, 2);
      return;
    case 7:
    case 8:
      add(i, j, 3, 2);
      return;
    case 5:
    case 10: {
      bool center_below = center(i, j) < level_;
      // Keep the diagonal whose corners share the center's side connected.
      bool bl_tr_joined = (code == 5) == center_below;
      if (bl_tr_joined) {
        add(i, j, 0, 1);
        add(i, j, 3, 2);
      } else {
        add(i, j, 3, 0);
        add(i, j, 1, 2);
      }
      return;
    }
    default:
      return;
    }
  }

  std::vector<Polyline> join()
  {
    std::vector<Polyline> out;
    std::vector<bool> used(segments_.size(), false);

    auto other_edge = [&](std::size_t s, std::size_t edge) {
      return segments_[s].edge0 == edge ? segments_[s].edge1 : segments_[s].edge0;
    };
    auto walk = [&](std::size_t start_segment, std::size_t start_edge) {
      Polyline line;
      line.points.push_back(ends_.at(start_edge).at);
      std::size_t s = start_segment;
      std::size_t edge = start_edge;
      while (true) {
        used[s] = true;
        edge = other_edge(s, edge);
        if (edge == start_edge) {
          line.closed = true;
          break;
        }
        const EdgeEnd& end = ends_.at(edge);
        line.points.push_back(end.at);
        std::size_t next = s;
        for (int k = 0; k < end.count; ++k) {
          if (end.segments[static_cast<std::size_t>(k)] != s)
            next = end.segments[static_cast<std::size_t>(k)];
        }
        if (next == s || used[next])
          break;
        s = next;
      }
      return line;
    };

    // Open chains start at grid-boundary edges, which belong to one segment.
    for (std::size_t s = 0; s < segments_.size(); ++s) {
      if (used[s])
        continue;
      for (std::size_t edge : {segments_[s].edge0, segments_[s].edge1}) {
        if (ends_.at(edge).count == 1) {
          out.push_back(walk(s, edge));
          break;
        }
      }
    }
    for (std::size_t s = 0; s < segments_.size(); ++s) {
      if (!used[s])
        out.push_back(walk(s, segments_[s].edge0));
    }
    return out;
  }

  std::span<const double> values_;
  std::size_t nx_;
  std::size_t ny_;
  double level_;
  std::vector<Segment> segments_;
  std::unordered_map<std::size_t, EdgeEnd> ends_;
};

} // namespace detail

/// Iso-lines of `values` (row-major, nx columns by ny rows) at `level`, with
/// linear interpolation along cell edges. Saddle cells are resolved by
/// `center(i, j)`, the value at the center of cell (i, j).
template <class CenterFn>
std::vector<Polyline> marching_squares(std::span<const double> values, std::size_t nx,
                                       std::size_t ny, double level, CenterFn&& center)
{
  if (nx < 2 || ny < 2)
    throw ArgumentError("marching_squares: grid must be at least 2x2");
  if (values.size() != nx * ny)
    throw ArgumentError("marching_squares: value count does not match grid size");
  detail::ContourBuilder builder(values, nx, ny, level);
  return builder.run(center);
}

/// Saddles resolved by the mean of the four corners.
inline std::vector<Polyline> marching_squares(std::span<const double> values, std::size_t nx,
                                              std::size_t ny, double level)
{
  auto mean = [&](std::size_t i, std::size_t j) {
    auto v = [&](std::size_t a, std::size_t b) { return values[b * nx + a]; };
    return 0.25 * (v(i, j) + v(i + 1, j) + v(i + 1, j + 1) + v(i, j + 1));
  };
  return marching_squares(values, nx, ny, level, mean);
}

} // namespace polycond

#endif // POLYCOND_CONTOUR_HPP
