#pragma once

// Modulus of continuity of a family of PL paths, the non-uniform
// equicontinuity estimate built on it, and covering radii of finite nets.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "nck/error.hpp"
#include "nck/function_space.hpp"
#include "nck/geometry.hpp"
#include "nck/vector.hpp"

namespace nck {

/// omega(delta) sampled at increasing scales.
struct ModulusProfile {
  std::vector<double> deltas;
  std::vector<double> omegas;

  std::size_t size() const noexcept { return deltas.size(); }

  /// omega at a scale present in the profile (matched to 1e-12 relative).
  double at(double delta) const {
    for (std::size_t i = 0; i < deltas.size(); ++i)
      if (std::abs(deltas[i] - delta) <= 1e-12 * std::max(1.0, delta))
        return omegas[i];
    throw DomainError("profile has no entry at delta = " +
                      std::to_string(delta));
  }

  bool nondecreasing(double tol = 1e-12) const {
    for (std::size_t i = 1; i < omegas.size(); ++i)
      if (omegas[i] + tol < omegas[i - 1]) return false;
    return true;
  }
};

namespace detail {

/// Range min/max over a scalar sequence in O(1) per query.
class SparseMinMax {
 public:
  explicit SparseMinMax(std::vector<double> v) {
    const std::size_t n = v.size();
    min_.push_back(v);
    max_.push_back(std::move(v));
    for (std::size_t w = 1; 2 * w <= n; w *= 2) {
      const auto& pmin = min_.back();
      const auto& pmax = max_.back();
      std::vector<double> nmin(n - 2 * w + 1), nmax(n - 2 * w + 1);
      for (std::size_t i = 0; i + 2 * w <= n; ++i) {
        nmin[i] = std::min(pmin[i], pmin[i + w]);
        nmax[i] = std::max(pmax[i], pmax[i + w]);
      }
      min_.push_back(std::move(nmin));
      max_.push_back(std::move(nmax));
    }
  }

  /// {min, max} over [lo, hi] inclusive.
  std::pair<double, double> query(std::size_t lo, std::size_t hi) const {
    std::size_t level = 0;
    while ((std::size_t{2} << level) <= hi - lo + 1) ++level;
    const std::size_t w = std::size_t{1} << level;
    return {std::min(min_[level][lo], min_[level][hi + 1 - w]),
            std::max(max_[level][lo], max_[level][hi + 1 - w])};
  }

 private:
  std::vector<std::vector<double>> min_;
  std::vector<std::vector<double>> max_;
};

/// Squared contributions of the constraint-line corners (t_i, t_i +- delta).
inline double corner_omega2(const SampledPath& f, double delta) {
  const Grid& g = f.grid();
  double best = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double t = g[i];
    if (t + delta <= g.b())
      best = std::max(best, squared_distance(f.value(i), eval_pl(f, t + delta)));
    if (t - delta >= g.a())
      best = std::max(best, squared_distance(f.value(i), eval_pl(f, t - delta)));
  }
  return best;
}

/// Per-member modulus at each of the ascending `deltas`.
///
/// On each product of two segments f(x) - f(y) is affine in (x, y), so
/// |f(x) - f(y)| attains its maximum over the cell intersected with
/// |x - y| <= delta at a vertex of that polygon: a knot pair, or a knot
/// paired with the point delta away from it.
inline std::vector<double> member_modulus(const SampledPath& f,
                                          std::span<const double> deltas) {
  const Grid& g = f.grid();
  const auto& t = g.knots();
  const std::size_t m = t.size();
  std::vector<double> out;
  out.reserve(deltas.size());

  if (f.dim() == 1) {
    std::vector<double> v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = f.value(i)[0];
    const SparseMinMax table(v);
    for (double delta : deltas) {
      double best2 = corner_omega2(f, delta);
      std::size_t hi = 0;
      for (std::size_t i = 0; i < m; ++i) {
        hi = std::max(hi, i);
        while (hi + 1 < m && t[hi + 1] - t[i] <= delta) ++hi;
        const auto [lo_v, hi_v] = table.query(i, hi);
        const double d = std::max(hi_v - v[i], v[i] - lo_v);
        best2 = std::max(best2, d * d);
      }
      out.push_back(std::sqrt(best2));
    }
    return out;
  }

  // General dimension: windowed pair scan. Once omega reaches the diameter
  // of the value set it cannot grow any further.
  double diam2 = -1.0;
  double prev2 = 0.0;
  for (double delta : deltas) {
    if (diam2 >= 0.0 && prev2 >= diam2) {
      out.push_back(std::sqrt(prev2));
      continue;
    }
    std::size_t window = 0;
    for (std::size_t i = 0, hi = 0; i < m; ++i) {
      hi = std::max(hi, i);
      while (hi + 1 < m && t[hi + 1] - t[i] <= delta) ++hi;
      window = std::max(window, hi - i);
    }
    if (diam2 < 0.0 && 2 * window > m) {
      diam2 = 0.0;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
          diam2 = std::max(diam2, squared_distance(f.value(i), f.value(j)));
      if (prev2 >= diam2) {
        out.push_back(std::sqrt(prev2));
        continue;
      }
    }
    double best2 = std::max(prev2, corner_omega2(f, delta));
    for (std::size_t i = 0, hi = 0; i < m; ++i) {
      hi = std::max(hi, i);
      while (hi + 1 < m && t[hi + 1] - t[i] <= delta) ++hi;
      for (std::size_t j = i + 1; j <= hi; ++j)
        best2 = std::max(best2, squared_distance(f.value(i), f.value(j)));
    }
    prev2 = best2;
    out.push_back(std::sqrt(best2));
  }
  return out;
}

inline void check_deltas(std::span<const double> deltas) {
  if (deltas.empty()) throw DomainError("modulus_profile: empty deltas");
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (!(deltas[i] > 0.0) || !std::isfinite(deltas[i]))
      throw DomainError("modulus_profile: delta must be positive, got " +
                        std::to_string(deltas[i]));
    if (i > 0 && !(deltas[i - 1] < deltas[i]))
      throw DomainError("modulus_profile: deltas must be strictly increasing");
  }
}

}  // namespace detail

/// omega_F(delta) = max over members f and |x - y| <= delta of
/// |f(x) - f(y)|, exact for PL families.
inline ModulusProfile modulus_profile(const Family& fam,
                                      std::span<const double> deltas) {
  detail::check_deltas(deltas);
  ModulusProfile prof;
  prof.deltas.assign(deltas.begin(), deltas.end());
  prof.omegas.assign(deltas.size(), 0.0);
  for (const auto& f : fam) {
    const auto w = detail::member_modulus(f, deltas);
    for (std::size_t i = 0; i < w.size(); ++i)
      prof.omegas[i] = std::max(prof.omegas[i], w[i]);
  }
  return prof;
}

inline double modulus(const Family& fam, double delta) {
  const double d[] = {delta};
  return modulus_profile(fam, d).omegas.front();
}

/// Dyadic scales mesh * 2^k, k = 0, 1, ..., up to b - a.
inline std::vector<double> dyadic_deltas(const Grid& grid) {
  const double mesh = grid.mesh();
  const double span = grid.b() - grid.a();
  std::vector<double> d;
  for (double delta = mesh; delta <= span * (1.0 + 1e-12); delta *= 2.0)
    d.push_back(delta);
  return d;
}

/// Non-uniform equicontinuity estimate: omega at the grid mesh, together
/// with the dyadic profile it was read from. For a finite PL family the
/// true infimum over delta is 0; the profile is what describes the sampled
/// family, and callers read the plateau at the scale they care about.
struct EquicontinuityEstimate {
  double value = 0.0;
  ModulusProfile profile;
};

inline EquicontinuityEstimate mu_uec_estimate(const Family& fam) {
  const auto deltas = dyadic_deltas(fam.grid());
  EquicontinuityEstimate est;
  est.profile = modulus_profile(fam, deltas);
  est.value = est.profile.omegas.front();
  return est;
}

/// Nearest net element (index into the net) for one path.
struct Cover {
  std::size_t index = 0;
  double distance = 0.0;
};

inline Cover nearest_element(const SampledPath& f,
                             std::span<const SampledPath> net) {
  if (net.empty()) throw DomainError("net_radius: empty net");
  Cover best{0, std::numeric_limits<double>::infinity()};
  for (std::size_t j = 0; j < net.size(); ++j) {
    const double d = sup_distance(f, net[j]);
    if (d < best.distance) best = Cover{j, d};
  }
  return best;
}

/// max over f in fam of min over g in net of ||f - g||_inf. Any value
/// returned is an upper bound on the Hausdorff measure of noncompactness
/// of the family.
inline double net_radius(const Family& fam, std::span<const SampledPath> net) {
  double r = 0.0;
  for (const auto& f : fam) r = std::max(r, nearest_element(f, net).distance);
  return r;
}

inline double net_radius(const Family& fam, const Family& net) {
  if (fam.dim() != net.dim())
    throw DomainError("net_radius: dimension mismatch");
  return net_radius(fam, std::span<const SampledPath>(net.members()));
}

/// Numbers behind  omega_F(delta) <= 2 * r + omega_net(delta)  where r is the
/// covering radius of the net: a family within r of an equicontinuous net
/// cannot oscillate by more than 2r beyond the net's own oscillation.
struct TransferReport {
  double delta = 0.0;
  double omega_family = 0.0;
  double omega_net = 0.0;
  double net_radius = 0.0;
  double slack = 0.0;  // 2 r + omega_net - omega_family
  bool pass = false;
};

inline TransferReport equicontinuity_transfer(const Family& fam,
                                              const Family& net, double delta,
                                              double tol = kDefaultTol) {
  if (!(delta > 0.0)) throw DomainError("equicontinuity_transfer: delta <= 0");
  TransferReport rep;
  rep.delta = delta;
  rep.omega_family = modulus(fam, delta);
  rep.omega_net = modulus(net, delta);
  rep.net_radius = net_radius(fam, net);
  rep.slack = 2.0 * rep.net_radius + rep.omega_net - rep.omega_family;
  rep.pass = rep.slack >= -tol;
  return rep;
}

}  // namespace nck
