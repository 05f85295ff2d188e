#pragma once

// Canonical test families on [0, 1].
//
//   ramp         f_k = clamp((x - 1/2) / h_k, 0, 1),  h_k = 2^-k
//   sine_sweep   f_k = sin(t_k x),  t_k = 2 pi 2^(k-1)
//   simplex_osc  PL path cycling through the vertices of a regular
//                N-simplex of side d, one full cycle per period p_k = 2^-k
//
// for k = 1..K. Breakpoints of every member are grid knots, and the grid
// mesh must be strictly below the smallest feature.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "nck/error.hpp"
#include "nck/function_space.hpp"
#include "nck/geometry.hpp"

namespace nck {

enum class FamilyKind { ramp, sine_sweep, simplex_osc };

inline FamilyKind parse_family_kind(const std::string& s) {
  if (s == "ramp") return FamilyKind::ramp;
  if (s == "sine_sweep") return FamilyKind::sine_sweep;
  if (s == "simplex_osc") return FamilyKind::simplex_osc;
  throw DomainError("unknown family kind '" + s + "'");
}

namespace detail {

/// Uniform knots of spacing <= mesh on [a, b] merged with `extra`; extras
/// closer than 1e-12 (b - a) to an existing knot are dropped.
inline Grid union_grid(double a, double b, double mesh,
                       std::vector<double> extra) {
  const double len = b - a;
  const auto segments =
      static_cast<std::size_t>(std::ceil(len / mesh * (1.0 - 1e-12)));
  std::vector<double> knots = Grid::uniform(a, b, std::max<std::size_t>(segments, 1)).knots();
  extra.erase(std::remove_if(extra.begin(), extra.end(),
                             [&](double x) { return !(a < x && x < b); }),
              extra.end());
  knots.insert(knots.end(), extra.begin(), extra.end());
  std::sort(knots.begin(), knots.end());
  std::vector<double> out;
  out.reserve(knots.size());
  const double gap = 1e-12 * len;
  for (double x : knots)
    if (out.empty() || x - out.back() > gap) out.push_back(x);
  out.back() = b;
  return Grid(std::move(out));
}

inline void require_resolved(double mesh, double feature) {
  if (!(mesh > 0.0)) throw DomainError("mesh must be positive");
  if (!(mesh < feature))
    throw DomainError("grid cannot resolve family: mesh = " +
                      std::to_string(mesh) + " >= smallest feature = " +
                      std::to_string(feature));
}

}  // namespace detail

inline Family ramp_family(std::size_t k_max, double mesh) {
  if (k_max == 0) throw DomainError("ramp family needs k-max >= 1");
  detail::require_resolved(mesh, std::ldexp(1.0, -static_cast<int>(k_max)));
  std::vector<double> breaks{0.5};
  for (std::size_t k = 1; k <= k_max; ++k)
    breaks.push_back(0.5 + std::ldexp(1.0, -static_cast<int>(k)));
  const Grid grid = detail::union_grid(0.0, 1.0, mesh, breaks);

  std::vector<std::vector<Vector>> values;
  std::vector<std::string> labels;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const double h = std::ldexp(1.0, -static_cast<int>(k));
    std::vector<Vector> v;
    v.reserve(grid.size());
    for (double x : grid.knots()) v.push_back({std::clamp((x - 0.5) / h, 0.0, 1.0)});
    values.push_back(std::move(v));
    labels.push_back("ramp_" + std::to_string(k));
  }
  return Family(grid, std::move(values), std::move(labels));
}

inline Family sine_sweep_family(std::size_t k_max, double mesh) {
  if (k_max == 0) throw DomainError("sine_sweep family needs k-max >= 1");
  // half period of the fastest member
  detail::require_resolved(mesh, std::ldexp(1.0, -static_cast<int>(k_max)));
  const Grid grid = detail::union_grid(0.0, 1.0, mesh, {});

  std::vector<std::vector<Vector>> values;
  std::vector<std::string> labels;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const double t = 2.0 * std::numbers::pi * std::ldexp(1.0, static_cast<int>(k) - 1);
    std::vector<Vector> v;
    v.reserve(grid.size());
    for (double x : grid.knots()) v.push_back({std::sin(t * x)});
    values.push_back(std::move(v));
    labels.push_back("sine_" + std::to_string(k));
  }
  return Family(grid, std::move(values), std::move(labels));
}

inline Family simplex_osc_family(std::size_t k_max, double mesh,
                                 std::size_t dim, double side = 1.0) {
  if (k_max == 0) throw DomainError("simplex_osc family needs k-max >= 1");
  const PointSet vertices = regular_simplex(dim, side);
  const std::size_t nv = dim + 1;
  const double shortest = std::ldexp(1.0, -static_cast<int>(k_max));
  detail::require_resolved(mesh, shortest);

  // vertex instants of the fastest member contain those of the slower ones
  const double step = shortest / static_cast<double>(nv);
  std::vector<double> instants;
  const auto steps = static_cast<std::size_t>(std::llround(1.0 / step));
  for (std::size_t j = 1; j < steps; ++j)
    instants.push_back(static_cast<double>(j) * step);
  const Grid grid = detail::union_grid(0.0, 1.0, mesh, instants);

  std::vector<std::vector<Vector>> values;
  std::vector<std::string> labels;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const double vstep = std::ldexp(1.0, -static_cast<int>(k)) / static_cast<double>(nv);
    std::vector<Vector> v;
    v.reserve(grid.size());
    for (double x : grid.knots()) {
      const double s = x / vstep;
      const double near = std::round(s);
      if (std::abs(s - near) <= 1e-9) {
        const auto j = static_cast<std::size_t>(near);
        v.push_back(vertices[j % nv]);
        continue;
      }
      const double j = std::floor(s);
      const double frac = s - j;
      const auto ji = static_cast<std::size_t>(j);
      v.push_back(combine(1.0 - frac, vertices[ji % nv], frac,
                          vertices[(ji + 1) % nv]));
    }
    values.push_back(std::move(v));
    labels.push_back("osc_" + std::to_string(k));
  }
  return Family(grid, std::move(values), std::move(labels));
}

inline Family generate_family(FamilyKind kind, std::size_t k_max, double mesh,
                              std::size_t dim = 1) {
  switch (kind) {
    case FamilyKind::ramp:
      return ramp_family(k_max, mesh);
    case FamilyKind::sine_sweep:
      return sine_sweep_family(k_max, mesh);
    case FamilyKind::simplex_osc:
      return simplex_osc_family(k_max, mesh, dim);
  }
  throw DomainError("unknown family kind");
}

}  // namespace nck
