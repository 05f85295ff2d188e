#pragma once

// Diameter, Chebyshev (minimum enclosing) ball and Jung-inequality checks
// for finite point sets in R^N.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <list>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "nck/error.hpp"
#include "nck/vector.hpp"

namespace nck {

/// Nonempty finite set of points of R^dim. Duplicates are allowed on
/// construction; see deduplicated().
class PointSet {
 public:
  /// Dimension taken from the first point.
  explicit PointSet(std::vector<Vector> points) : points_(std::move(points)) {
    dim_ = points_.empty() ? 0 : points_.front().size();
    validate();
  }

  PointSet(std::size_t dim, std::vector<Vector> points)
      : dim_(dim), points_(std::move(points)) {
    validate();
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return points_.size(); }
  const Vector& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Vector>& points() const noexcept { return points_; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  /// Exact-equality deduplication, keeping first occurrences in order.
  PointSet deduplicated() const {
    std::set<Vector> seen;
    std::vector<Vector> out;
    out.reserve(points_.size());
    for (const auto& p : points_)
      if (seen.insert(p).second) out.push_back(p);
    return PointSet(dim_, std::move(out));
  }

  /// Returns a copy with `p` appended.
  PointSet with(Vector p) const {
    auto pts = points_;
    pts.push_back(std::move(p));
    return PointSet(dim_, std::move(pts));
  }

 private:
  void validate() const {
    if (points_.empty()) throw DomainError("empty point set");
    if (dim_ == 0) throw DomainError("point set dimension must be positive");
    for (const auto& p : points_) {
      require_dim(p, dim_, "point set");
      if (!all_finite(p))
        throw DomainError("point set: non-finite coordinate");
    }
  }

  std::size_t dim_ = 0;
  std::vector<Vector> points_;
};

/// Closed ball B*(center, radius).
struct Ball {
  Vector center;
  double radius = 0.0;

  bool contains(std::span<const double> p, double rel_tol = 0.0,
                double abs_tol = 0.0) const {
    return distance(center, p) <= radius * (1.0 + rel_tol) + abs_tol;
  }
};

/// Largest distance from `center` to any point of `ps`.
inline double covering_radius(const PointSet& ps,
                              std::span<const double> center) {
  double r2 = 0.0;
  for (const auto& p : ps) r2 = std::max(r2, squared_distance(center, p));
  return std::sqrt(r2);
}

/// Exact pairwise scan, O(m^2).
inline double diameter(const PointSet& ps) {
  double d2 = 0.0;
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j)
      d2 = std::max(d2, squared_distance(ps[i], ps[j]));
  return std::sqrt(d2);
}

namespace detail {

/// Largest condition number accepted for a support system.
inline constexpr double kMaxSupportCondition = 1e10;

/// Smallest ball having all of `support` on its boundary: the circumcenter
/// inside the affine hull of the support. Returns nullopt when the support
/// is affinely degenerate (condition estimate above kMaxSupportCondition).
inline std::optional<Ball> circumball(const std::vector<Vector>& pts,
                                      std::span<const std::size_t> support) {
  const std::size_t k = support.size();
  if (k == 0) return std::nullopt;
  const Vector& origin = pts[support[0]];
  if (k == 1) return Ball{origin, 0.0};
  const std::size_t dim = origin.size();
  if (k - 1 > dim) return std::nullopt;

  Eigen::MatrixXd edges(dim, k - 1);
  for (std::size_t j = 1; j < k; ++j) {
    const Vector& p = pts[support[j]];
    for (std::size_t i = 0; i < dim; ++i) edges(i, j - 1) = p[i] - origin[i];
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(edges);
  const auto& sv = svd.singularValues();
  const double smax = sv.maxCoeff();
  const double smin = sv.minCoeff();
  if (!(smin > 0.0) || smax / smin > kMaxSupportCondition) return std::nullopt;

  // center = origin + edges * lambda with  edges_i . (center - origin) =
  // |edges_i|^2 / 2  for every edge.
  const Eigen::MatrixXd gram = edges.transpose() * edges;
  const Eigen::VectorXd rhs = 0.5 * gram.diagonal();
  const Eigen::VectorXd lambda = gram.ldlt().solve(rhs);
  const Eigen::VectorXd offset = edges * lambda;

  Ball ball;
  ball.center.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) ball.center[i] = origin[i] + offset(i);
  double r2 = 0.0;
  for (std::size_t s : support)
    r2 = std::max(r2, squared_distance(ball.center, pts[s]));
  ball.radius = std::sqrt(r2);
  return ball;
}

/// Move-to-front variant of Welzl's recursion. Recursion depth is bounded
/// by dim + 1. Points whose addition to the support is degenerate are
/// skipped and reported through `degenerate()`.
class MoveToFrontSolver {
 public:
  MoveToFrontSolver(const std::vector<Vector>& pts, double tol,
                    std::uint64_t seed)
      : pts_(pts), dim_(pts.front().size()), tol_(tol) {
    std::vector<std::size_t> order(pts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::mt19937_64 rng(seed);
    for (std::size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1], order[rng() % i]);
    list_.assign(order.begin(), order.end());
    support_.reserve(dim_ + 1);
  }

  Ball solve() {
    mtf(list_.end());
    return ball_;
  }

  bool degenerate() const noexcept { return degenerate_; }

 private:
  using Iter = std::list<std::size_t>::iterator;

  bool outside(std::size_t i) const {
    if (!has_ball_) return true;
    const double limit = ball_.radius * (1.0 + tol_);
    return squared_distance(ball_.center, pts_[i]) > limit * limit;
  }

  void mtf(Iter end) {
    if (support_.size() == dim_ + 1) return;
    for (Iter it = list_.begin(); it != end;) {
      Iter next = std::next(it);
      if (outside(*it)) {
        support_.push_back(*it);
        if (auto ball = circumball(pts_, support_)) {
          ball_ = std::move(*ball);
          has_ball_ = true;
          mtf(it);
          support_.pop_back();
          list_.splice(list_.begin(), list_, it);
        } else {
          support_.pop_back();
          degenerate_ = true;
        }
      }
      it = next;
    }
  }

  const std::vector<Vector>& pts_;
  std::size_t dim_;
  double tol_;
  std::list<std::size_t> list_;
  std::vector<std::size_t> support_;
  Ball ball_;
  bool has_ball_ = false;
  bool degenerate_ = false;
};

}  // namespace detail

/// Badoiu-Clarkson core-set iteration: c <- c + (p_far - c) / (k + 1).
/// Approximate; the returned radius always covers every point. Stops when
/// the best radius improves by less than `tol` (relative) between two
/// power-of-two checkpoints, or after `max_iterations`.
inline Ball core_set_ball(const PointSet& ps, double tol = kDefaultTol,
                          std::size_t max_iterations = std::size_t{1} << 18) {
  Vector c = ps[0];
  Ball best{c, covering_radius(ps, c)};
  double checkpoint_radius = best.radius;
  for (std::size_t k = 1; k <= max_iterations; ++k) {
    std::size_t far = 0;
    double far_d2 = -1.0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const double d2 = squared_distance(c, ps[i]);
      if (d2 > far_d2) {
        far_d2 = d2;
        far = i;
      }
    }
    const double r = std::sqrt(far_d2);
    if (r < best.radius) best = Ball{c, r};
    if (best.radius == 0.0) break;
    const double step = 1.0 / static_cast<double>(k + 1);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += (ps[far][i] - c[i]) * step;
    if ((k & (k - 1)) == 0 && k >= 16) {
      if (checkpoint_radius - best.radius <= tol * best.radius) break;
      checkpoint_radius = best.radius;
    }
  }
  best.radius = covering_radius(ps, best.center);
  return best;
}

/// Chebyshev ball (minimum enclosing ball) of a finite point set.
///
/// Every point lies within the returned radius of the returned center; the
/// radius exceeds the true minimum by at most a factor (1 + tol). In R^1 the
/// answer is the exact midpoint of min and max. For dim <= 10 a seeded
/// move-to-front Welzl recursion is used; ill-conditioned supports (and
/// dim > 10) fall back to the core-set iteration.
inline Ball chebyshev_ball(const PointSet& ps, double tol = kDefaultTol,
                           std::uint64_t seed = 0) {
  if (!(tol > 0.0)) throw DomainError("chebyshev_ball: tol must be positive");
  if (ps.dim() == 1) {
    const auto [lo, hi] = std::minmax_element(
        ps.begin(), ps.end(),
        [](const Vector& u, const Vector& v) { return u[0] < v[0]; });
    const double mid = 0.5 * ((*lo)[0] + (*hi)[0]);
    return Ball{{mid}, 0.5 * ((*hi)[0] - (*lo)[0])};
  }

  const PointSet unique = ps.deduplicated();
  if (unique.size() == 1) return Ball{unique[0], 0.0};
  if (unique.dim() > 10) return core_set_ball(unique, tol);

  detail::MoveToFrontSolver solver(unique.points(), tol, seed);
  Ball ball = solver.solve();
  const double solved = ball.radius;
  ball.radius = covering_radius(unique, ball.center);
  if (solver.degenerate() && ball.radius > solved * (1.0 + tol)) {
    Ball fallback = core_set_ball(unique, tol);
    if (fallback.radius < ball.radius) return fallback;
  }
  return ball;
}

/// Brute-force minimum enclosing ball: every support subset of size
/// <= dim + 1, in lexicographic order, keeping the first smallest ball that
/// encloses all points. Exponential; meant as an independent check.
inline Ball chebyshev_oracle(const PointSet& ps) {
  constexpr std::size_t kMaxPoints = 20;
  if (ps.size() > kMaxPoints)
    throw DomainError("chebyshev_oracle: too many points (" +
                      std::to_string(ps.size()) + " > " +
                      std::to_string(kMaxPoints) + ")");
  const auto& pts = ps.points();
  const std::size_t m = pts.size();
  const std::size_t max_support = std::min(m, ps.dim() + 1);

  std::optional<Ball> best;
  std::vector<std::size_t> subset;
  for (std::size_t k = 1; k <= max_support; ++k) {
    subset.resize(k);
    for (std::size_t i = 0; i < k; ++i) subset[i] = i;
    while (true) {
      if (auto ball = detail::circumball(pts, subset)) {
        const double slack = 1e-12 * (1.0 + ball->radius);
        const bool encloses = std::all_of(
            pts.begin(), pts.end(),
            [&](const Vector& p) { return ball->contains(p, 0.0, slack); });
        if (encloses && (!best || ball->radius < best->radius))
          best = std::move(*ball);
      }
      // next k-combination of {0..m-1}
      std::size_t i = k;
      while (i > 0 && subset[i - 1] == m - k + i - 1) --i;
      if (i == 0) break;
      ++subset[i - 1];
      for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  if (!best)
    throw InternalError("chebyshev_oracle: no enclosing support subset found");
  return *best;
}

/// Diameter, Chebyshev radius and the two Jung bounds for one point set.
struct JungReport {
  std::size_t dim = 0;
  double diameter = 0.0;
  double radius = 0.0;
  double lower = 0.0;   // diameter / 2
  double upper = 0.0;   // sqrt(N / (2N + 2)) * diameter
  bool pass = false;    // lower - tol <= radius <= upper + tol
  double margin = 0.0;  // min(radius - lower, upper - radius)
};

inline JungReport jung_report(const PointSet& ps, double tol = kDefaultTol,
                              std::uint64_t seed = 0) {
  JungReport rep;
  rep.dim = ps.dim();
  rep.diameter = diameter(ps);
  rep.radius = chebyshev_ball(ps, tol, seed).radius;
  rep.lower = 0.5 * rep.diameter;
  rep.upper = jung_factor(ps.dim()) * rep.diameter;
  rep.pass = rep.lower - tol <= rep.radius && rep.radius <= rep.upper + tol;
  rep.margin = std::min(rep.radius - rep.lower, rep.upper - rep.radius);
  return rep;
}

/// Vertices of a regular dim-simplex with the given side length, centred at
/// the origin. Built incrementally: each new vertex sits above the centroid
/// of the previous ones along a fresh axis.
inline PointSet regular_simplex(std::size_t dim, double side = 1.0) {
  if (dim == 0) throw DomainError("regular_simplex: dimension must be positive");
  if (!(side > 0.0)) throw DomainError("regular_simplex: side must be positive");
  std::vector<Vector> v(dim + 1, Vector(dim, 0.0));
  Vector centroid(dim, 0.0);
  for (std::size_t k = 1; k <= dim; ++k) {
    // centroid of v[0..k-1] is at distance R_{k-1} from each of them
    const double kk = static_cast<double>(k);
    const double circum2 = side * side * (kk - 1.0) / (2.0 * kk);
    v[k] = centroid;
    v[k][k - 1] = std::sqrt(side * side - circum2);
    for (std::size_t i = 0; i < dim; ++i)
      centroid[i] = (centroid[i] * kk + v[k][i]) / (kk + 1.0);
  }
  for (auto& p : v)
    for (std::size_t i = 0; i < dim; ++i) p[i] -= centroid[i];
  return PointSet(dim, std::move(v));
}

}  // namespace nck
