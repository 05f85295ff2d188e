#pragma once

#include <cstdint>
#include <optional>

#include "nck/function_space.hpp"
#include "nck/moduli.hpp"
#include "nck/net_builder.hpp"
#include "nck/vector.hpp"

namespace nck {

/// Two-sided bracket  omega_hat / 2 <= mu_H <= jung_factor(N) * omega_hat
/// together with the covering radius a concrete net actually achieved.
struct Bracket {
  double omega_hat = 0.0;  // omega_F(delta), the equicontinuity estimate
  double lower = 0.0;
  double upper = 0.0;
  double achieved = 0.0;   // net_radius(F, constructed net)
  double epsilon = 0.0;
  double delta = 0.0;
  bool pass = false;       // achieved <= upper + epsilon + tol
};

struct BracketRun {
  Bracket bracket;
  NetBuild build;
};

/// Reads omega at the caller's delta, builds the net with alpha = that value
/// (or the caller's alpha when given) and evaluates its covering radius.
inline BracketRun run_bracket(const Family& fam, double delta, double epsilon,
                              std::uint64_t seed = 0, double tol = kDefaultTol,
                              std::optional<double> alpha = std::nullopt) {
  const double omega = modulus(fam, delta);
  NetBuild build =
      build_net(fam, delta, alpha.value_or(omega), epsilon, tol, seed);

  Bracket br;
  br.omega_hat = omega;
  br.lower = 0.5 * omega;
  br.upper = jung_factor(fam.dim()) * omega;
  br.achieved = net_radius(fam, build.net);
  br.epsilon = epsilon;
  br.delta = delta;
  br.pass = br.achieved <= br.upper + epsilon + tol;
  return BracketRun{br, std::move(build)};
}

inline Bracket theorem_bracket(const Family& fam, double delta, double epsilon,
                               std::uint64_t seed = 0,
                               double tol = kDefaultTol,
                               std::optional<double> alpha = std::nullopt) {
  return run_bracket(fam, delta, epsilon, seed, tol, alpha).bracket;
}

}  // namespace nck
