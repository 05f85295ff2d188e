#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "nck/generators.hpp"
#include "nck/io.hpp"
#include "oracles.hpp"

using namespace nck;
namespace fs = std::filesystem;
namespace nt = nck::testing;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "nck_test_io";
  fs::create_directories(dir);
  return dir / name;
}

void expect_identical(const Family& x, const Family& y) {
  ASSERT_EQ(x.size(), y.size());
  EXPECT_EQ(x.grid().knots(), y.grid().knots());
  EXPECT_EQ(x.labels(), y.labels());
  for (std::size_t i = 0; i < x.size(); ++i)
    EXPECT_EQ(x.member(i).values(), y.member(i).values());
}

}  // namespace

TEST(Numbers, ShortestRoundTrip) {
  EXPECT_EQ(io::format_number(0.1), "0.1");
  EXPECT_EQ(io::format_number(1.0), "1");
  std::mt19937_64 rng(81);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng) / 3.0;
    ASSERT_EQ(io::parse_number(io::format_number(x)), x);
  }
  EXPECT_THROW(io::parse_number("1.5x"), DomainError);
  EXPECT_THROW(io::parse_number(""), DomainError);
}

TEST(FamilyJson, FileRoundTripIsBitIdentical) {
  for (const Family& fam : {ramp_family(8, std::ldexp(1.0, -10)),
                            sine_sweep_family(5, 0.01),
                            simplex_osc_family(4, std::ldexp(1.0, -7), 3, 1.0)}) {
    const fs::path p = scratch("family.json");
    io::write_file(p, io::dump(io::family_json(fam)));
    const Family back = io::load_family(p);
    expect_identical(fam, back);
    EXPECT_EQ(io::dump(io::family_json(back)), io::read_file(p));
  }
}

TEST(FamilyJson, RejectsInconsistentDocuments) {
  io::json j = io::family_json(ramp_family(2, 0.1));
  j["a"] = -1.0;
  EXPECT_THROW(io::family_from_json(j), DomainError);
  j = io::family_json(ramp_family(2, 0.1));
  j.erase("knots");
  EXPECT_THROW(io::family_from_json(j), DomainError);
  j = io::family_json(ramp_family(2, 0.1));
  j["dim"] = 2;
  EXPECT_THROW(io::family_from_json(j), DomainError);
}

TEST(FamilyCsv, RoundTrip) {
  const Family fam = simplex_osc_family(3, 1.0 / 32, 2, 1.0);
  std::stringstream s;
  io::write_family_csv(s, fam);
  EXPECT_EQ(s.str().substr(0, s.str().find('\n')), "member_id,x,v1,v2");
  expect_identical(fam, io::read_family_csv(s));
}

TEST(FamilyCsv, RejectsRaggedInput) {
  std::istringstream ragged("member_id,x,v1\na,0,1\na,1,2,3\n");
  EXPECT_THROW(io::read_family_csv(ragged), DomainError);
  std::istringstream knots("member_id,x,v1\na,0,1\na,1,2\nb,0,1\nb,0.5,2\n");
  EXPECT_THROW(io::read_family_csv(knots), DomainError);
}

TEST(PointSetIo, CsvAndJsonRoundTrips) {
  std::mt19937_64 rng(82);
  const PointSet ps = nt::random_point_set(rng, 17, 4);
  std::stringstream s;
  io::write_point_set_csv(s, ps);
  EXPECT_EQ(io::read_point_set_csv(s).points(), ps.points());
  const fs::path p = scratch("points.json");
  io::write_file(p, io::dump(io::point_set_json(ps)));
  EXPECT_EQ(io::load_point_set(p).points(), ps.points());
}

TEST(ProfileCsv, RoundTrip) {
  ModulusProfile prof{{0.125, 0.25, 0.5}, {0.1, 1.0 / 3.0, 0.7}};
  std::stringstream s;
  io::write_profile_csv(s, prof);
  EXPECT_EQ(s.str().substr(0, 12), "delta,omega\n");
  const ModulusProfile back = io::read_profile_csv(s);
  EXPECT_EQ(back.deltas, prof.deltas);
  EXPECT_EQ(back.omegas, prof.omegas);
}

TEST(ReportJson, Keys) {
  const Bracket b{0.5, 0.25, 0.25, 0.2, 0.01, 0.1, true};
  const io::json j = io::bracket_json(b);
  for (const char* k : {"omega_hat", "lower", "upper", "achieved", "epsilon", "pass"})
    EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_EQ(j.size(), 6u);

  const NetBuild nb = build_net(ramp_family(3, 1.0 / 16), 0.25, 1.0, 0.05);
  const io::json n = io::net_json(nb);
  EXPECT_EQ(n["certificates"].size(), 3u);
  for (const char* k : {"member_id", "plateau_err", "quant_err", "total", "bound"})
    EXPECT_TRUE(n["certificates"][0].contains(k)) << k;
  EXPECT_EQ(n["partition"]["points"].size(), nb.partition.points().size());
  expect_identical(io::family_from_json(n), nb.net);
}
