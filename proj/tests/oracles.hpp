#pragma once

// Test-only reference computations. These deliberately avoid the library's
// evaluation paths: they interpolate knot data themselves and scan densely.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "nck/function_space.hpp"
#include "nck/geometry.hpp"

namespace nck::testing {

inline PointSet points(std::vector<Vector> v) { return PointSet(std::move(v)); }

/// Linear interpolation of raw knot data by a linear scan.
inline std::vector<double> interp(const std::vector<double>& knots,
                                  const std::vector<std::vector<double>>& vals,
                                  double x) {
  std::size_t i = 0;
  while (i + 2 < knots.size() && knots[i + 1] < x) ++i;
  const double t = (x - knots[i]) / (knots[i + 1] - knots[i]);
  std::vector<double> out(vals[i].size());
  for (std::size_t c = 0; c < out.size(); ++c)
    out[c] = vals[i][c] + t * (vals[i + 1][c] - vals[i][c]);
  return out;
}

inline double euclid(const std::vector<double>& u, const std::vector<double>& v) {
  double s = 0.0;
  for (std::size_t c = 0; c < u.size(); ++c) s += (u[c] - v[c]) * (u[c] - v[c]);
  return std::sqrt(s);
}

/// max over `samples` + 1 equispaced points of |f(x) - g(x)|.
inline double dense_sup_distance(const SampledPath& f, const SampledPath& g,
                                 std::size_t samples = 10000) {
  const double a = f.a(), b = f.b();
  double best = 0.0;
  for (std::size_t s = 0; s <= samples; ++s) {
    const double x = a + (b - a) * static_cast<double>(s) / static_cast<double>(samples);
    best = std::max(best, euclid(interp(f.grid().knots(), f.values(), x),
                                 interp(g.grid().knots(), g.values(), x)));
  }
  return best;
}

/// Exhaustive pair scan for omega(delta) on one path. For every pair of
/// segments it samples `per_axis` x `per_axis` pairs on the cell, and for
/// `per_axis` sampled abscissae on either axis the two ends of the admissible
/// range on the other axis.
inline double brute_force_modulus(const SampledPath& f, double delta,
                                  std::size_t per_axis = 100) {
  const auto& t = f.grid().knots();
  const auto& v = f.values();
  const std::size_t segs = t.size() - 1;
  double best = 0.0;
  const auto consider = [&](double x, double y) {
    if (std::abs(x - y) > delta) return;
    best = std::max(best, euclid(interp(t, v, x), interp(t, v, y)));
  };
  const auto sample = [&](std::size_t seg, std::size_t s) {
    return t[seg] + (t[seg + 1] - t[seg]) * static_cast<double>(s) /
                        static_cast<double>(per_axis - 1);
  };
  for (std::size_t i = 0; i < segs; ++i) {
    for (std::size_t j = 0; j < segs; ++j) {
      if (t[j] - t[i + 1] > delta || t[i] - t[j + 1] > delta) continue;
      for (std::size_t s = 0; s < per_axis; ++s) {
        const double x = sample(i, s);
        for (std::size_t r = 0; r < per_axis; ++r) consider(x, sample(j, r));
        // admissible y range on segment j for this x
        const double ylo = std::max(t[j], x - delta);
        const double yhi = std::min(t[j + 1], x + delta);
        if (ylo <= yhi) {
          consider(x, ylo);
          consider(x, yhi);
        }
        const double y = sample(j, s);
        const double xlo = std::max(t[i], y - delta);
        const double xhi = std::min(t[i + 1], y + delta);
        if (xlo <= xhi) {
          consider(xlo, y);
          consider(xhi, y);
        }
      }
    }
  }
  return best;
}

inline double brute_force_modulus(const Family& fam, double delta,
                                  std::size_t per_axis = 100) {
  double best = 0.0;
  for (const auto& f : fam) best = std::max(best, brute_force_modulus(f, delta, per_axis));
  return best;
}

/// Random strictly increasing knots on [a, b] (first = a, last = b).
inline std::vector<double> random_knots(std::mt19937_64& rng, double a, double b,
                                        std::size_t count) {
  std::uniform_real_distribution<double> u(a, b);
  std::vector<double> k{a, b};
  while (k.size() < count) {
    const double x = u(rng);
    if (std::find(k.begin(), k.end(), x) == k.end()) k.push_back(x);
  }
  std::sort(k.begin(), k.end());
  return k;
}

inline Vector random_vector(std::mt19937_64& rng, std::size_t dim, double lo = -1.0,
                            double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  Vector v(dim);
  for (auto& x : v) x = u(rng);
  return v;
}

inline SampledPath random_path(std::mt19937_64& rng, const Grid& grid, std::size_t dim) {
  std::vector<Vector> vals;
  for (std::size_t i = 0; i < grid.size(); ++i) vals.push_back(random_vector(rng, dim));
  return SampledPath(grid, std::move(vals));
}

inline PointSet random_point_set(std::mt19937_64& rng, std::size_t count, std::size_t dim) {
  std::vector<Vector> pts;
  for (std::size_t i = 0; i < count; ++i) pts.push_back(random_vector(rng, dim));
  return PointSet(dim, std::move(pts));
}

/// Random vector with Euclidean norm at most `radius`.
inline Vector random_in_ball(std::mt19937_64& rng, std::size_t dim, double radius) {
  std::normal_distribution<double> n;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Vector v(dim);
  for (auto& x : v) x = n(rng);
  const double len = norm(v);
  const double scale = radius * std::pow(u(rng), 1.0 / static_cast<double>(dim)) /
                       (len > 0.0 ? len : 1.0);
  for (auto& x : v) x *= scale;
  return v;
}

}  // namespace nck::testing
