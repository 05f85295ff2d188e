#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "nck/error.hpp"

namespace nck {

/// A point of R^N. Plain storage; dimension checks live in the
/// containers that own vectors (PointSet, SampledPath).
using Vector = std::vector<double>;

/// Default relative/absolute tolerance shared by all public operations.
inline constexpr double kDefaultTol = 1e-9;

inline double squared_norm(std::span<const double> v) noexcept {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

inline double norm(std::span<const double> v) noexcept {
  return std::sqrt(squared_norm(v));
}

inline double squared_distance(std::span<const double> u,
                               std::span<const double> v) noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double d = u[i] - v[i];
    s += d * d;
  }
  return s;
}

inline double distance(std::span<const double> u,
                       std::span<const double> v) noexcept {
  return std::sqrt(squared_distance(u, v));
}

inline bool all_finite(std::span<const double> v) noexcept {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

/// u + t (v - u); exact where u and v agree.
inline Vector lerp(std::span<const double> u, std::span<const double> v, double t) {
  Vector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] + t * (v[i] - u[i]);
  return out;
}

/// (w0 * u + w1 * v) computed coordinatewise.
inline Vector combine(double w0, std::span<const double> u, double w1,
                      std::span<const double> v) {
  Vector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = w0 * u[i] + w1 * v[i];
  return out;
}

inline void require_dim(std::span<const double> v, std::size_t dim,
                        const char* what) {
  if (v.size() != dim)
    throw DomainError(std::string(what) + ": dimension mismatch (got " +
                      std::to_string(v.size()) + ", expected " +
                      std::to_string(dim) + ")");
}

/// Jung's constant sqrt(N / (2N + 2)); equals 1/2 for N = 1.
inline double jung_factor(std::size_t dim) noexcept {
  const double n = static_cast<double>(dim);
  return std::sqrt(n / (2.0 * n + 2.0));
}

}  // namespace nck
