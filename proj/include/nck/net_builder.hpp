#pragma once

// Explicit finite nets for a family of PL paths: overlapping partition,
// per-interval Chebyshev centres, the plateau interpolant through them and
// its snapping onto an epsilon-dense lattice.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nck/error.hpp"
#include "nck/function_space.hpp"
#include "nck/geometry.hpp"
#include "nck/moduli.hpp"
#include "nck/vector.hpp"

namespace nck {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_closed = false;
  bool hi_closed = false;

  double diameter() const noexcept { return hi - lo; }
};

/// Points a = x_0 < x_1 < ... < x_{2n+1} = b with the overlapping intervals
///   I_0 = [x_0, x_2),  I_k = (x_{2k-1}, x_{2k+2}),  I_n = (x_{2n-1}, x_{2n+1}].
class Partition {
 public:
  explicit Partition(Grid points) : grid_(std::move(points)) {
    if (grid_.size() < 4 || grid_.size() % 2 != 0)
      throw DomainError("partition needs an even number (>= 4) of points, got " +
                        std::to_string(grid_.size()));
  }

  std::size_t n() const noexcept { return grid_.size() / 2 - 1; }
  std::size_t interval_count() const noexcept { return n() + 1; }
  const Grid& grid() const noexcept { return grid_; }
  const std::vector<double>& points() const noexcept { return grid_.knots(); }
  double point(std::size_t i) const { return grid_[i]; }

  Interval interval(std::size_t k) const {
    const std::size_t nn = n();
    if (k > nn) throw DomainError("partition: interval index out of range");
    if (k == 0) return {point(0), point(2), true, false};
    if (k == nn) return {point(2 * nn - 1), point(2 * nn + 1), false, true};
    return {point(2 * k - 1), point(2 * k + 2), false, false};
  }

  double max_interval_diameter() const {
    double d = 0.0;
    for (std::size_t k = 0; k <= n(); ++k) d = std::max(d, interval(k).diameter());
    return d;
  }

 private:
  Grid grid_;
};

/// Uniform partition of [a, b] into 2n + 1 segments of length h, with n
/// the smallest count giving 3h < delta (so every interval is shorter than
/// delta). At least n = 1.
inline Partition build_partition(double a, double b, double delta) {
  if (!(a < b)) throw DomainError("build_partition: need a < b");
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw DomainError("build_partition: delta must be positive, got " +
                      std::to_string(delta));
  constexpr double kMaxSegments = 1e8;
  const double ratio = 3.0 * (b - a) / delta;
  if (ratio > kMaxSegments)
    throw DomainError("build_partition: delta = " + std::to_string(delta) +
                      " needs more than 1e8 segments");
  std::size_t segments = 3;
  if (ratio >= 3.0) {
    segments = static_cast<std::size_t>(std::floor(ratio)) + 1;
    if (segments % 2 == 0) ++segments;
  }
  while (true) {
    Partition p(Grid::uniform(a, b, segments));
    if (p.max_interval_diameter() < delta) return p;
    segments += 2;
  }
}

/// Chebyshev centres and radii of f(I_k) for every interval of a partition.
struct ChebyshevProfile {
  std::vector<Vector> centers;
  std::vector<double> radii;
  std::vector<double> diameters;  // diam f(I_k)
};

/// Centres are taken over the interval closures; for continuous f the
/// supremum over an open interval equals that over its closure.
inline ChebyshevProfile chebyshev_profile(const SampledPath& f,
                                          const Partition& part,
                                          double tol = kDefaultTol,
                                          std::uint64_t seed = 0) {
  if (f.a() != part.point(0) || f.b() != part.points().back())
    throw DomainError("chebyshev_profile: path and partition intervals differ");
  ChebyshevProfile prof;
  const std::size_t count = part.interval_count();
  prof.centers.reserve(count);
  prof.radii.reserve(count);
  prof.diameters.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const Interval iv = part.interval(k);
    const PointSet image = image_over_interval(f, iv.lo, iv.hi);
    Ball ball = chebyshev_ball(image, tol, seed);
    prof.diameters.push_back(diameter(image));
    prof.radii.push_back(ball.radius);
    prof.centers.push_back(std::move(ball.center));
  }
  return prof;
}

/// The path equal to c_k on [x_{2k}, x_{2k+1}] and affine on the bridges
/// [x_{2k-1}, x_{2k}].
inline SampledPath plateau_interpolant(const ChebyshevProfile& profile,
                                       const Partition& part) {
  if (profile.centers.size() != part.interval_count())
    throw DomainError("plateau_interpolant: " +
                      std::to_string(profile.centers.size()) +
                      " centers for " + std::to_string(part.interval_count()) +
                      " intervals");
  std::vector<Vector> values;
  values.reserve(2 * profile.centers.size());
  for (const auto& c : profile.centers) {
    values.push_back(c);
    values.push_back(c);
  }
  return SampledPath(part.grid(), std::move(values));
}

/// Cubic lattice (spacing * Z)^N used to snap knot values. With spacing
/// 2 eps / sqrt(N) the half-diagonal of a cell is eps, so every z with
/// |z| <= bound has a lattice point within eps. Never enumerated.
struct Lattice {
  double spacing = 0.0;
  double bound = 0.0;
  double epsilon = 0.0;
  std::size_t dim = 0;

  static Lattice for_epsilon(double epsilon, double bound, std::size_t dim) {
    if (!(epsilon > 0.0)) throw DomainError("lattice: epsilon must be positive");
    if (!(bound >= 0.0)) throw DomainError("lattice: bound must be nonnegative");
    if (dim == 0) throw DomainError("lattice: dimension must be positive");
    return Lattice{2.0 * epsilon / std::sqrt(static_cast<double>(dim)), bound,
                   epsilon, dim};
  }

  /// Coordinatewise nearest multiple of spacing, ties toward -infinity.
  Vector nearest(std::span<const double> z) const {
    require_dim(z, dim, "lattice point");
    const double r = norm(z);
    if (r > bound + 1e-12 * std::max(1.0, bound))
      throw QuantizationRangeError(r, bound);
    Vector y(z.size());
    for (std::size_t i = 0; i < z.size(); ++i)
      y[i] = std::ceil(z[i] / spacing - 0.5) * spacing;
    return y;
  }
};

/// Snaps every knot value of `ftilde` to the lattice.
inline SampledPath quantize_path(const SampledPath& ftilde, const Lattice& lat) {
  std::vector<Vector> vals;
  vals.reserve(ftilde.values().size());
  for (const auto& v : ftilde.values()) vals.push_back(lat.nearest(v));
  return SampledPath(ftilde.grid(), std::move(vals));
}

/// Per-member record of how the net element covers it.
struct MemberCertificate {
  std::string member_id;
  std::size_t net_index = 0;
  double plateau_err = 0.0;  // ||ftilde - f||
  double quant_err = 0.0;    // ||L - ftilde||
  double total = 0.0;        // ||L - f||
  double bound = 0.0;        // jung_factor * alpha + epsilon
  bool pass = false;
};

struct NetBuild {
  Partition partition;
  Lattice lattice;
  Family net;
  std::vector<MemberCertificate> certificates;
  double delta = 0.0;
  double alpha = 0.0;
  double epsilon = 0.0;
  double omega = 0.0;  // measured omega_F(delta)

  bool all_pass() const {
    return std::all_of(certificates.begin(), certificates.end(),
                       [](const MemberCertificate& c) { return c.pass; });
  }

  double max_total() const {
    double m = 0.0;
    for (const auto& c : certificates) m = std::max(m, c.total);
    return m;
  }
};

/// Builds a finite net covering `fam` within jung_factor(N) * alpha +
/// epsilon. Requires omega_F(delta) <= alpha <= 2M. Only the lattice tuples
/// realized by members are emitted; duplicates are merged in member order.
inline NetBuild build_net(const Family& fam, double delta, double alpha,
                          double epsilon, double tol = kDefaultTol,
                          std::uint64_t seed = 0) {
  if (!(delta > 0.0)) throw DomainError("build_net: delta must be positive");
  if (!(epsilon > 0.0)) throw DomainError("build_net: epsilon must be positive");
  if (!(alpha >= 0.0) || !std::isfinite(alpha))
    throw DomainError("build_net: alpha must be nonnegative");
  const double big_m = uniform_bound(fam);
  if (alpha > 2.0 * big_m * (1.0 + 1e-12) + 1e-300)
    throw DomainError("build_net: alpha = " + std::to_string(alpha) +
                      " exceeds 2M = " + std::to_string(2.0 * big_m));
  const double omega = modulus(fam, delta);
  if (omega > alpha) throw AlphaTooSmall(omega, alpha);

  Partition part = build_partition(fam.grid().a(), fam.grid().b(), delta);
  const Lattice lat = Lattice::for_epsilon(epsilon, 3.0 * big_m, fam.dim());
  const double factor = jung_factor(fam.dim());
  const double bound = factor * alpha + epsilon;

  std::vector<SampledPath> elements;
  std::map<std::vector<Vector>, std::size_t> index_of;
  std::vector<MemberCertificate> certs;
  certs.reserve(fam.size());
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const SampledPath& f = fam.member(i);
    const ChebyshevProfile prof = chebyshev_profile(f, part, tol, seed);
    const SampledPath ftilde = plateau_interpolant(prof, part);
    SampledPath element = quantize_path(ftilde, lat);

    MemberCertificate c;
    c.member_id = fam.label(i);
    c.plateau_err = sup_distance(ftilde, f);
    c.quant_err = sup_distance(element, ftilde);
    c.total = sup_distance(element, f);
    c.bound = bound;
    c.pass = c.plateau_err <= factor * alpha + tol &&
             c.quant_err <= epsilon + tol && c.total <= bound + tol;

    auto [it, inserted] = index_of.try_emplace(element.values(), elements.size());
    if (inserted) elements.push_back(std::move(element));
    c.net_index = it->second;
    certs.push_back(std::move(c));
  }

  std::vector<std::string> labels;
  for (std::size_t j = 0; j < elements.size(); ++j)
    labels.push_back("L" + std::to_string(j));
  return NetBuild{std::move(part), lat,   Family(std::move(elements), std::move(labels)),
                  std::move(certs), delta, alpha, epsilon, omega};
}

}  // namespace nck
