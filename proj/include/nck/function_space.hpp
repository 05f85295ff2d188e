#pragma once

// Continuous piecewise-linear R^N-valued paths on a compact interval and
// their exact sup-norm metric.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iterator>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nck/error.hpp"
#include "nck/geometry.hpp"
#include "nck/vector.hpp"

namespace nck {

/// Strictly increasing knots a = t_0 < ... < t_m = b. Copies share the
/// knot storage.
class Grid {
 public:
  explicit Grid(std::vector<double> knots)
      : knots_(std::make_shared<const std::vector<double>>(std::move(knots))) {
    const auto& k = *knots_;
    if (k.size() < 2) throw DomainError("grid needs at least 2 knots");
    for (double t : k)
      if (!std::isfinite(t)) throw DomainError("grid: non-finite knot");
    for (std::size_t i = 1; i < k.size(); ++i)
      if (!(k[i - 1] < k[i]))
        throw DomainError("grid knots must be strictly increasing (knot " +
                          std::to_string(i) + ")");
  }

  /// `segments` equal segments on [a, b]; the last knot is exactly b.
  static Grid uniform(double a, double b, std::size_t segments) {
    if (!(a < b)) throw DomainError("grid: need a < b");
    if (segments == 0) throw DomainError("grid: need at least one segment");
    std::vector<double> k(segments + 1);
    const double len = b - a;
    for (std::size_t i = 0; i <= segments; ++i)
      k[i] = a + len * static_cast<double>(i) / static_cast<double>(segments);
    k.back() = b;
    return Grid(std::move(k));
  }

  double a() const noexcept { return knots_->front(); }
  double b() const noexcept { return knots_->back(); }
  std::size_t size() const noexcept { return knots_->size(); }
  const std::vector<double>& knots() const noexcept { return *knots_; }
  double operator[](std::size_t i) const { return (*knots_)[i]; }

  /// Largest gap between adjacent knots.
  double mesh() const noexcept {
    double h = 0.0;
    for (std::size_t i = 1; i < knots_->size(); ++i)
      h = std::max(h, (*knots_)[i] - (*knots_)[i - 1]);
    return h;
  }

  /// Index i of the segment [t_i, t_{i+1}] holding x (x in [a, b]).
  std::size_t segment_of(double x) const {
    const auto& k = *knots_;
    auto it = std::upper_bound(k.begin(), k.end(), x);
    std::size_t i = static_cast<std::size_t>(std::distance(k.begin(), it));
    if (i == 0) return 0;
    return std::min(i - 1, k.size() - 2);
  }

  bool contains(double x) const noexcept { return a() <= x && x <= b(); }

  friend bool operator==(const Grid& u, const Grid& v) {
    return u.knots_ == v.knots_ || *u.knots_ == *v.knots_;
  }

 private:
  std::shared_ptr<const std::vector<double>> knots_;
};

/// Sorted union of two knot sequences (exact duplicates merged).
inline Grid merge_grids(const Grid& g, const Grid& h) {
  if (g == h) return g;
  std::vector<double> out;
  out.reserve(g.size() + h.size());
  std::set_union(g.knots().begin(), g.knots().end(), h.knots().begin(),
                 h.knots().end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return Grid(std::move(out));
}

/// The piecewise-linear interpolant of (knot, value) pairs.
class SampledPath {
 public:
  SampledPath(Grid grid, std::vector<Vector> values)
      : grid_(std::move(grid)), values_(std::move(values)) {
    if (values_.size() != grid_.size())
      throw DomainError("path: " + std::to_string(values_.size()) +
                        " values for " + std::to_string(grid_.size()) +
                        " knots");
    dim_ = values_.front().size();
    if (dim_ == 0) throw DomainError("path: dimension must be positive");
    for (const auto& v : values_) {
      require_dim(v, dim_, "path value");
      if (!all_finite(v)) throw DomainError("path: non-finite value");
    }
  }

  const Grid& grid() const noexcept { return grid_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Vector>& values() const noexcept { return values_; }
  const Vector& value(std::size_t i) const { return values_[i]; }
  double a() const noexcept { return grid_.a(); }
  double b() const noexcept { return grid_.b(); }

 private:
  Grid grid_;
  std::size_t dim_ = 0;
  std::vector<Vector> values_;
};

/// Value of the PL path at x; knot values are returned exactly.
inline Vector eval_pl(const SampledPath& f, double x) {
  const Grid& g = f.grid();
  if (!g.contains(x))
    throw DomainError("eval_pl: x = " + std::to_string(x) + " outside [" +
                      std::to_string(g.a()) + ", " + std::to_string(g.b()) +
                      "]");
  const std::size_t i = g.segment_of(x);
  const double x0 = g[i];
  const double x1 = g[i + 1];
  if (x == x0) return f.value(i);
  if (x == x1) return f.value(i + 1);
  return lerp(f.value(i), f.value(i + 1), (x - x0) / (x1 - x0));
}

/// Values of f at every knot of `grid` (which must span the same [a, b]).
inline SampledPath resample(const SampledPath& f, const Grid& grid) {
  if (grid == f.grid()) return f;
  if (grid.a() != f.a() || grid.b() != f.b())
    throw DomainError("resample: interval mismatch");
  std::vector<Vector> vals;
  vals.reserve(grid.size());
  for (double x : grid.knots()) vals.push_back(eval_pl(f, x));
  return SampledPath(grid, std::move(vals));
}

/// sup_x |f(x) - g(x)|, exact: f - g is affine on every segment of the
/// common refinement, so the maximum sits on a union knot.
inline double sup_distance(const SampledPath& f, const SampledPath& g) {
  if (f.dim() != g.dim())
    throw DomainError("sup_distance: dimension mismatch (" +
                      std::to_string(f.dim()) + " vs " +
                      std::to_string(g.dim()) + ")");
  if (f.a() != g.a() || f.b() != g.b())
    throw DomainError("sup_distance: paths live on different intervals");
  double d2 = 0.0;
  if (f.grid() == g.grid()) {
    for (std::size_t i = 0; i < f.values().size(); ++i)
      d2 = std::max(d2, squared_distance(f.value(i), g.value(i)));
    return std::sqrt(d2);
  }
  for (std::size_t i = 0; i < f.grid().size(); ++i)
    d2 = std::max(d2, squared_distance(f.value(i), eval_pl(g, f.grid()[i])));
  for (std::size_t i = 0; i < g.grid().size(); ++i)
    d2 = std::max(d2, squared_distance(eval_pl(f, g.grid()[i]), g.value(i)));
  return std::sqrt(d2);
}

/// The set f([lo, hi]) represented by f(lo), f(hi) and the values at knots
/// strictly between them, deduplicated. Every point of the continuous image
/// is a convex combination of two consecutive listed points, so diameter and
/// enclosing balls of this set are those of the continuous image.
inline PointSet image_over_interval(const SampledPath& f, double lo,
                                    double hi) {
  if (lo > hi)
    throw DomainError("image_over_interval: lo = " + std::to_string(lo) +
                      " > hi = " + std::to_string(hi));
  std::vector<Vector> pts;
  pts.push_back(eval_pl(f, lo));
  const auto& k = f.grid().knots();
  auto first = std::upper_bound(k.begin(), k.end(), lo);
  for (auto it = first; it != k.end() && *it < hi; ++it)
    pts.push_back(f.value(static_cast<std::size_t>(it - k.begin())));
  if (hi > lo) pts.push_back(eval_pl(f, hi));
  return PointSet(f.dim(), std::move(pts)).deduplicated();
}

/// Nonempty finite set of PL paths on one shared grid.
class Family {
 public:
  Family(Grid grid, std::vector<std::vector<Vector>> member_values,
         std::vector<std::string> labels = {})
      : grid_(std::move(grid)) {
    std::vector<SampledPath> paths;
    paths.reserve(member_values.size());
    for (auto& v : member_values) paths.emplace_back(grid_, std::move(v));
    init(std::move(paths), std::move(labels));
  }

  explicit Family(std::vector<SampledPath> members,
                  std::vector<std::string> labels = {})
      : grid_(members.empty() ? throw DomainError("family must be nonempty")
                              : members.front().grid()) {
    init(std::move(members), std::move(labels));
  }

  /// Members on possibly different grids, resampled onto the union grid.
  static Family on_common_grid(const std::vector<SampledPath>& paths,
                               std::vector<std::string> labels = {}) {
    if (paths.empty()) throw DomainError("family must be nonempty");
    Grid grid = paths.front().grid();
    for (const auto& p : paths) {
      if (p.a() != grid.a() || p.b() != grid.b())
        throw DomainError("family members live on different intervals");
      grid = merge_grids(grid, p.grid());
    }
    std::vector<SampledPath> out;
    out.reserve(paths.size());
    for (const auto& p : paths) out.push_back(resample(p, grid));
    return Family(std::move(out), std::move(labels));
  }

  const Grid& grid() const noexcept { return grid_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return members_.size(); }
  const SampledPath& member(std::size_t i) const { return members_[i]; }
  const std::vector<SampledPath>& members() const noexcept { return members_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  Family subset(std::span<const std::size_t> indices) const {
    std::vector<SampledPath> m;
    std::vector<std::string> l;
    for (std::size_t i : indices) {
      m.push_back(members_.at(i));
      l.push_back(labels_.at(i));
    }
    return Family(std::move(m), std::move(l));
  }

  /// Copy with `path` appended (must share this family's grid).
  Family with(SampledPath path, std::string label = {}) const {
    auto m = members_;
    auto l = labels_;
    m.push_back(std::move(path));
    l.push_back(label.empty() ? std::to_string(m.size() - 1) : std::move(label));
    return Family(std::move(m), std::move(l));
  }

 private:
  void init(std::vector<SampledPath> members, std::vector<std::string> labels) {
    if (members.empty()) throw DomainError("family must be nonempty");
    dim_ = members.front().dim();
    for (const auto& m : members) {
      if (!(m.grid() == grid_))
        throw DomainError("family members must share one grid");
      if (m.dim() != dim_) throw DomainError("family members must share dim");
    }
    if (labels.empty())
      for (std::size_t i = 0; i < members.size(); ++i)
        labels.push_back(std::to_string(i));
    if (labels.size() != members.size())
      throw DomainError("family: label count does not match member count");
    members_ = std::move(members);
    labels_ = std::move(labels);
  }

  Grid grid_;
  std::size_t dim_ = 0;
  std::vector<SampledPath> members_;
  std::vector<std::string> labels_;
};

/// M = max |f(x)| over the family; exact (the norm is convex on segments).
inline double uniform_bound(const Family& fam) {
  double m2 = 0.0;
  for (const auto& f : fam)
    for (const auto& v : f.values()) m2 = std::max(m2, squared_norm(v));
  return std::sqrt(m2);
}

inline double uniform_bound(const SampledPath& f) {
  double m2 = 0.0;
  for (const auto& v : f.values()) m2 = std::max(m2, squared_norm(v));
  return std::sqrt(m2);
}

}  // namespace nck
