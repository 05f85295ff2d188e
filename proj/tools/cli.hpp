#pragma once

// Batch front end. Exit codes: 0 success, 1 usage or domain error,
// 2 a verification failed (Jung report, certificate, bracket, profile).

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nck/bracket.hpp"
#include "nck/error.hpp"
#include "nck/generators.hpp"
#include "nck/geometry.hpp"
#include "nck/io.hpp"
#include "nck/moduli.hpp"
#include "nck/net_builder.hpp"

namespace nck::cli {

inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kVerificationFailed = 2;

enum class Format { json, csv };

struct RunConfig {
  std::string command;
  std::string input;
  std::string output;
  std::size_t dim = 1;
  std::optional<double> delta;
  std::optional<double> alpha;
  std::optional<double> epsilon;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::optional<Format> format;
  std::string kind;
  std::optional<double> mesh;
  std::size_t k_max = 0;
  double tol = kDefaultTol;
};

/// Plain decimal or `base^exponent` (e.g. 2^-12).
inline double parse_real(const std::string& s) {
  const auto caret = s.find('^');
  if (caret == std::string::npos) return io::parse_number(s);
  const double base = io::parse_number(s.substr(0, caret));
  const double exponent = io::parse_number(s.substr(caret + 1));
  return std::pow(base, exponent);
}

inline double require(const std::optional<double>& v, const char* flag) {
  if (!v) throw DomainError(std::string("missing required flag ") + flag);
  if (!(*v > 0.0))
    throw DomainError(std::string(flag) + " must be positive, got " +
                      io::format_number(*v));
  return *v;
}

/// Uniform double in [-1, 1) from the top 53 bits of a 64-bit draw, so the
/// sampled sets do not depend on the standard library's distributions.
inline double uniform_pm1(std::mt19937_64& rng) {
  return -1.0 + 2.0 * std::ldexp(static_cast<double>(rng() >> 11), -53);
}

/// T point sets in R^N with 2..N+4 points, coordinates uniform in [-1, 1].
inline std::vector<PointSet> random_point_sets(std::size_t trials,
                                               std::size_t dim,
                                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<PointSet> out;
  out.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t count = 2 + static_cast<std::size_t>(rng() % (dim + 3));
    std::vector<Vector> pts(count, Vector(dim));
    for (auto& p : pts)
      for (auto& x : p) x = uniform_pm1(rng);
    out.emplace_back(dim, std::move(pts));
  }
  return out;
}

class Runner {
 public:
  Runner(const RunConfig& cfg, std::ostream& out, std::ostream& err)
      : cfg_(cfg), out_(out), err_(err) {}

  int run() {
    const std::string& c = cfg_.command;
    if (c == "meb") return meb();
    if (c == "diam") return diam();
    if (c == "jung") return jung();
    if (c == "profile") return profile();
    if (c == "net") return net();
    if (c == "bracket") return bracket();
    if (c == "gen") return gen();
    throw DomainError("unknown command '" + c + "'");
  }

 private:
  Format format_or(Format def) const { return cfg_.format.value_or(def); }

  void emit(const std::string& text) {
    if (cfg_.output.empty()) {
      out_ << text;
    } else {
      io::write_file(cfg_.output, text);
    }
  }

  const std::string& input() const {
    if (cfg_.input.empty()) throw DomainError("missing required flag --input");
    return cfg_.input;
  }

  int meb() {
    const PointSet ps = io::load_point_set(input());
    const Ball b = chebyshev_ball(ps, cfg_.tol, cfg_.seed);
    if (format_or(Format::json) == Format::csv) {
      std::ostringstream s;
      for (double x : b.center) s << io::format_number(x) << ',';
      s << io::format_number(b.radius) << '\n';
      emit(s.str());
    } else {
      emit(io::dump(io::ball_json(b)));
    }
    return kOk;
  }

  int diam() {
    const PointSet ps = io::load_point_set(input());
    const double d = diameter(ps);
    if (format_or(Format::csv) == Format::json)
      emit(io::dump(io::json{{"diameter", d}}));
    else
      emit(io::format_number(d) + "\n");
    return kOk;
  }

  int jung() {
    if (!cfg_.input.empty()) {
      const JungReport r = jung_report(io::load_point_set(cfg_.input), cfg_.tol, cfg_.seed);
      emit(io::dump(io::jung_json(r)));
      return r.pass ? kOk : kVerificationFailed;
    }
    if (cfg_.trials == 0) throw DomainError("jung: need --input or --trials > 0");
    if (cfg_.dim == 0) throw DomainError("jung: --dim must be positive");
    std::size_t passed = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    for (const auto& ps : random_point_sets(cfg_.trials, cfg_.dim, cfg_.seed)) {
      const JungReport r = jung_report(ps, cfg_.tol, cfg_.seed);
      if (r.pass) {
        ++passed;
      } else {
        err_ << "jung failure: diameter " << io::format_number(r.diameter)
             << " radius " << io::format_number(r.radius) << '\n';
      }
      min_margin = std::min(min_margin, r.margin);
    }
    if (format_or(Format::csv) == Format::json) {
      emit(io::dump(io::json{{"trials", cfg_.trials}, {"dim", cfg_.dim},
                             {"seed", cfg_.seed}, {"pass", passed},
                             {"min_margin", min_margin}}));
    } else {
      emit(std::to_string(passed) + "/" + std::to_string(cfg_.trials) + " pass\n");
    }
    return passed == cfg_.trials ? kOk : kVerificationFailed;
  }

  int profile() {
    const Family fam = io::load_family(input());
    const auto est = mu_uec_estimate(fam);
    if (format_or(Format::csv) == Format::json) {
      auto j = io::profile_json(est.profile);
      j["estimate"] = est.value;
      emit(io::dump(j));
    } else {
      std::ostringstream s;
      io::write_profile_csv(s, est.profile);
      emit(s.str());
    }
    return est.profile.nondecreasing() ? kOk : kVerificationFailed;
  }

  int net() {
    const Family fam = io::load_family(input());
    const double delta = require(cfg_.delta, "--delta");
    const double epsilon = require(cfg_.epsilon, "--epsilon");
    const double alpha = cfg_.alpha ? *cfg_.alpha : modulus(fam, delta);
    const NetBuild nb = build_net(fam, delta, alpha, epsilon, cfg_.tol, cfg_.seed);
    emit(io::dump(io::net_json(nb)));
    return nb.all_pass() ? kOk : kVerificationFailed;
  }

  int bracket() {
    const Family fam = io::load_family(input());
    const double delta = require(cfg_.delta, "--delta");
    const double epsilon = require(cfg_.epsilon, "--epsilon");
    const Bracket b = theorem_bracket(fam, delta, epsilon, cfg_.seed, cfg_.tol, cfg_.alpha);
    emit(io::dump(io::bracket_json(b)));
    return b.pass ? kOk : kVerificationFailed;
  }

  int gen() {
    if (cfg_.kind.empty()) throw DomainError("gen: missing required flag --kind");
    if (cfg_.k_max == 0) throw DomainError("gen: --k-max must be >= 1");
    const double mesh = require(cfg_.mesh, "--mesh");
    const Family fam =
        generate_family(parse_family_kind(cfg_.kind), cfg_.k_max, mesh, cfg_.dim);
    if (format_or(Format::json) == Format::csv) {
      std::ostringstream s;
      io::write_family_csv(s, fam);
      emit(s.str());
    } else {
      emit(io::dump(io::family_json(fam)));
    }
    return kOk;
  }

  const RunConfig& cfg_;
  std::ostream& out_;
  std::ostream& err_;
};

inline int run(const RunConfig& cfg, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  try {
    return Runner(cfg, out, err).run();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

/// Parses argv into a RunConfig and runs it.
inline int main(int argc, const char* const* argv, std::ostream& out = std::cout,
                std::ostream& err = std::cerr) {
  CLI::App app{"Chebyshev balls, moduli of continuity and certified nets"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string delta, alpha, epsilon, mesh, format, tol;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.input, "input file (.json or CSV)");
    sub->add_option("--output", cfg.output, "output file (default stdout)");
    sub->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--tol", tol, "tolerance (default $NCK_TOL or 1e-9)");
  };
  const auto add_net_params = [&](CLI::App* sub) {
    sub->add_option("--delta", delta, "scale delta (e.g. 0.001 or 2^-12)");
    sub->add_option("--alpha", alpha, "alpha >= omega(delta)");
    sub->add_option("--epsilon", epsilon, "lattice quantization radius");
  };

  for (const char* name : {"meb", "diam", "jung", "profile", "net", "bracket", "gen"}) {
    CLI::App* sub = app.add_subcommand(name);
    add_common(sub);
    const std::string n = name;
    if (n == "jung") {
      sub->add_option("--trials", cfg.trials, "number of random point sets");
      sub->add_option("--dim", cfg.dim, "ambient dimension N");
    }
    if (n == "net" || n == "bracket") add_net_params(sub);
    if (n == "gen") {
      sub->add_option("--kind", cfg.kind, "ramp, sine_sweep or simplex_osc")
          ->check(CLI::IsMember({"ramp", "sine_sweep", "simplex_osc"}));
      sub->add_option("--mesh", mesh, "grid mesh (e.g. 2^-14)");
      sub->add_option("--k-max", cfg.k_max, "number of members K");
      sub->add_option("--dim", cfg.dim, "ambient dimension N (simplex_osc)");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (!delta.empty()) cfg.delta = parse_real(delta);
    if (!alpha.empty()) cfg.alpha = parse_real(alpha);
    if (!epsilon.empty()) cfg.epsilon = parse_real(epsilon);
    if (!mesh.empty()) cfg.mesh = parse_real(mesh);
    if (!format.empty()) cfg.format = format == "csv" ? Format::csv : Format::json;
    if (!tol.empty()) {
      cfg.tol = parse_real(tol);
    } else if (const char* env = std::getenv("NCK_TOL")) {
      cfg.tol = parse_real(env);
    }
    if (!(cfg.tol > 0.0)) throw DomainError("tolerance must be positive");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return run(cfg, out, err);
}

}  // namespace nck::cli
