#pragma once

// CSV and JSON readers/writers for point sets, families, profiles, nets and
// reports. Numbers are written in shortest round-trip form.

#include <charconv>
#include <cstddef>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <nlohmann/json.hpp>

#include "nck/bracket.hpp"
#include "nck/error.hpp"
#include "nck/function_space.hpp"
#include "nck/geometry.hpp"
#include "nck/moduli.hpp"
#include "nck/net_builder.hpp"

namespace nck::io {

using json = nlohmann::json;

inline std::string format_number(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

inline double parse_number(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  double x = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw DomainError("not a number: '" + std::string(s) + "'");
  return x;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

inline bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot open '" + path + "' for writing");
  out << text;
}

inline bool has_json_extension(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

inline json vector_json(const Vector& v) {
  json a = json::array();
  for (double x : v) a.push_back(x);
  return a;
}

inline Vector json_vector(const json& j) {
  if (!j.is_array()) throw DomainError("expected a JSON array of numbers");
  Vector v;
  v.reserve(j.size());
  for (const auto& x : j) {
    if (!x.is_number()) throw DomainError("expected a number in JSON array");
    v.push_back(x.get<double>());
  }
  return v;
}

// ---- point sets -------------------------------------------------------------

/// One row per point, N columns, no header.
inline PointSet read_point_set_csv(std::istream& in) {
  std::vector<Vector> pts;
  std::string line;
  while (std::getline(in, line)) {
    if (blank(line)) continue;
    Vector p;
    for (const auto& cell : split_csv_line(line)) p.push_back(parse_number(cell));
    pts.push_back(std::move(p));
  }
  return PointSet(std::move(pts));
}

inline void write_point_set_csv(std::ostream& out, const PointSet& ps) {
  for (const auto& p : ps) {
    for (std::size_t i = 0; i < p.size(); ++i)
      out << (i ? "," : "") << format_number(p[i]);
    out << '\n';
  }
}

inline json point_set_json(const PointSet& ps) {
  json pts = json::array();
  for (const auto& p : ps) pts.push_back(vector_json(p));
  return json{{"dim", ps.dim()}, {"points", pts}};
}

inline PointSet point_set_from_json(const json& j) {
  if (!j.contains("dim") || !j.contains("points"))
    throw DomainError("point set JSON needs 'dim' and 'points'");
  const auto dim = j.at("dim").get<std::size_t>();
  std::vector<Vector> pts;
  for (const auto& p : j.at("points")) pts.push_back(json_vector(p));
  return PointSet(dim, std::move(pts));
}

inline PointSet load_point_set(const std::string& path) {
  if (has_json_extension(path)) return point_set_from_json(json::parse(read_file(path)));
  std::istringstream in(read_file(path));
  return read_point_set_csv(in);
}

inline json ball_json(const Ball& b) {
  return json{{"dim", b.center.size()}, {"center", vector_json(b.center)},
              {"radius", b.radius}};
}

inline json jung_json(const JungReport& r) {
  return json{{"dim", r.dim},     {"diameter", r.diameter}, {"radius", r.radius},
              {"lower", r.lower}, {"upper", r.upper},       {"margin", r.margin},
              {"pass", r.pass}};
}

// ---- families ---------------------------------------------------------------

inline json family_json(const Family& fam) {
  json members = json::array();
  for (std::size_t i = 0; i < fam.size(); ++i) {
    json vals = json::array();
    for (const auto& v : fam.member(i).values()) vals.push_back(vector_json(v));
    members.push_back(json{{"id", fam.label(i)}, {"values", vals}});
  }
  return json{{"a", fam.grid().a()},
              {"b", fam.grid().b()},
              {"dim", fam.dim()},
              {"knots", fam.grid().knots()},
              {"members", members}};
}

inline Family family_from_json(const json& j) {
  for (const char* key : {"a", "b", "dim", "knots", "members"})
    if (!j.contains(key))
      throw DomainError(std::string("family JSON is missing '") + key + "'");
  Grid grid(j.at("knots").get<std::vector<double>>());
  if (grid.a() != j.at("a").get<double>() || grid.b() != j.at("b").get<double>())
    throw DomainError("family JSON: a/b do not match the first/last knot");
  const auto dim = j.at("dim").get<std::size_t>();
  std::vector<std::vector<Vector>> values;
  std::vector<std::string> labels;
  for (const auto& m : j.at("members")) {
    std::vector<Vector> vals;
    for (const auto& v : m.at("values")) {
      vals.push_back(json_vector(v));
      require_dim(vals.back(), dim, "family JSON value");
    }
    values.push_back(std::move(vals));
    labels.push_back(m.contains("id") ? m.at("id").get<std::string>()
                                      : std::to_string(labels.size()));
  }
  return Family(grid, std::move(values), std::move(labels));
}

/// Long form: header `member_id,x,v1..vN`, one row per (member, knot).
inline void write_family_csv(std::ostream& out, const Family& fam) {
  out << "member_id,x";
  for (std::size_t c = 1; c <= fam.dim(); ++c) out << ",v" << c;
  out << '\n';
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const auto& f = fam.member(i);
    for (std::size_t k = 0; k < fam.grid().size(); ++k) {
      out << fam.label(i) << ',' << format_number(fam.grid()[k]);
      for (double x : f.value(k)) out << ',' << format_number(x);
      out << '\n';
    }
  }
}

inline Family read_family_csv(std::istream& in) {
  std::string line;
  std::vector<std::string> order;
  std::map<std::string, std::pair<std::vector<double>, std::vector<Vector>>> rows;
  bool first = true;
  std::size_t dim = 0;
  while (std::getline(in, line)) {
    if (blank(line)) continue;
    auto cells = split_csv_line(line);
    if (first) {
      first = false;
      if (!cells.empty() && cells[0] == "member_id") {
        if (cells.size() < 3) throw DomainError("family CSV: header has no value columns");
        dim = cells.size() - 2;
        continue;
      }
    }
    if (cells.size() < 3) throw DomainError("family CSV: short row '" + line + "'");
    if (dim == 0) dim = cells.size() - 2;
    if (cells.size() != dim + 2)
      throw DomainError("family CSV: expected " + std::to_string(dim + 2) +
                        " columns, got " + std::to_string(cells.size()));
    auto [it, inserted] = rows.try_emplace(cells[0]);
    if (inserted) order.push_back(cells[0]);
    it->second.first.push_back(parse_number(cells[1]));
    Vector v;
    for (std::size_t c = 2; c < cells.size(); ++c) v.push_back(parse_number(cells[c]));
    it->second.second.push_back(std::move(v));
  }
  if (order.empty()) throw DomainError("family CSV: no rows");
  const auto& knots = rows.at(order.front()).first;
  Grid grid(knots);
  std::vector<std::vector<Vector>> values;
  for (const auto& id : order) {
    auto& r = rows.at(id);
    if (r.first != knots)
      throw DomainError("family CSV: member '" + id + "' uses different knots");
    values.push_back(std::move(r.second));
  }
  return Family(grid, std::move(values), order);
}

inline Family load_family(const std::string& path) {
  if (has_json_extension(path)) return family_from_json(json::parse(read_file(path)));
  std::istringstream in(read_file(path));
  return read_family_csv(in);
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---- moduli, nets, brackets -------------------------------------------------

/// Header `delta,omega`, one row per scale.
inline void write_profile_csv(std::ostream& out, const ModulusProfile& p) {
  out << "delta,omega\n";
  for (std::size_t i = 0; i < p.size(); ++i)
    out << format_number(p.deltas[i]) << ',' << format_number(p.omegas[i]) << '\n';
}

inline ModulusProfile read_profile_csv(std::istream& in) {
  ModulusProfile p;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (blank(line)) continue;
    if (header) {
      header = false;
      if (line.rfind("delta", 0) == 0) continue;
    }
    const auto cells = split_csv_line(line);
    if (cells.size() != 2) throw DomainError("profile CSV: expected 2 columns");
    p.deltas.push_back(parse_number(cells[0]));
    p.omegas.push_back(parse_number(cells[1]));
  }
  return p;
}

inline json profile_json(const ModulusProfile& p) {
  return json{{"deltas", p.deltas}, {"omegas", p.omegas}};
}

inline json bracket_json(const Bracket& b) {
  return json{{"omega_hat", b.omega_hat}, {"lower", b.lower},
              {"upper", b.upper},         {"achieved", b.achieved},
              {"epsilon", b.epsilon},     {"pass", b.pass}};
}

inline json partition_json(const Partition& p) {
  return json{{"points", p.points()}};
}

inline json certificate_json(const MemberCertificate& c) {
  return json{{"member_id", c.member_id}, {"plateau_err", c.plateau_err},
              {"quant_err", c.quant_err}, {"total", c.total},
              {"bound", c.bound}};
}

/// Net as a family document plus per-member certificates and the partition.
/// Readable back with family_from_json.
inline json net_json(const NetBuild& nb) {
  json j = family_json(nb.net);
  json certs = json::array();
  for (const auto& c : nb.certificates) certs.push_back(certificate_json(c));
  j["certificates"] = certs;
  j["partition"] = partition_json(nb.partition);
  return j;
}

inline json transfer_json(const TransferReport& r) {
  return json{{"delta", r.delta},         {"omega_family", r.omega_family},
              {"omega_net", r.omega_net}, {"net_radius", r.net_radius},
              {"slack", r.slack},         {"pass", r.pass}};
}

}  // namespace nck::io
