#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "roughcomb/errors.hpp"
#include "roughcomb/io.hpp"

using namespace roughcomb;

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

double reparse(const std::string& s) { return std::strtod(s.c_str(), nullptr); }

}  // namespace

TEST_CASE("shortest float form round-trips bitwise") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.0) == "0");
  for (double v : {0.1, 1.0 / 3.0, 2.0 / 3.0, 1e-300, 1e300, 0.25231481481481477,
                   -0.9999999999999999, 3.141592653589793}) {
    CHECK(reparse(format_double(v)) == v);
  }
}

TEST_CASE("flag spellings round-trip") {
  CHECK(kind_to_string(CombKind::Interval) == "interval");
  CHECK(kind_from_string("circle") == CombKind::Circle);
  CHECK_THROWS_AS(kind_from_string("sphere"), std::invalid_argument);

  for (auto mode : {LinePlacementMode::MidpointGrid, LinePlacementMode::PaperGrid,
                    LinePlacementMode::UniformRandom}) {
    CHECK(placement_from_string(placement_to_string(mode)) == mode);
  }
  CHECK_THROWS_AS(placement_from_string("grid"), std::invalid_argument);

  CHECK(dist_to_string(HeightDistribution::uniform01()) == "uniform");
  CHECK(dist_to_string(HeightDistribution::beta_ab(2.0, 2.0)) == "beta:2,2");
  CHECK(dist_to_string(HeightDistribution::triangular(0.3)) == "triangular:0.3");

  auto beta = dist_from_string("beta:0.5,1.5");
  CHECK(beta.kind == HeightDistribution::Kind::Beta);
  CHECK(beta.alpha == 0.5);
  CHECK(beta.beta == 1.5);
  auto tri = dist_from_string("triangular:0.25");
  CHECK(tri.kind == HeightDistribution::Kind::Triangular);
  CHECK(tri.mode == 0.25);

  CHECK_THROWS_AS(dist_from_string("gauss"), std::invalid_argument);
  CHECK_THROWS_AS(dist_from_string("beta:2"), std::invalid_argument);
  CHECK_THROWS_AS(dist_from_string("beta:x,2"), std::invalid_argument);
  CHECK_THROWS_AS(dist_from_string("triangular:"), std::invalid_argument);
}

TEST_CASE("interval density table at the coarsest grid") {
  std::ostringstream os;
  write_density_interval_csv(os, 2);
  auto lines = split_lines(os.str());
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "a1,a2,p");
  // the two corners whose density is exact in floating point
  CHECK(lines[2] == "-1,1,1");
  CHECK(lines[3] == "0,0,0");
  // the mixed corners carry the value 5/3
  CHECK(reparse(split_fields(lines[1])[2]) == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
  CHECK(reparse(split_fields(lines[4])[2]) == doctest::Approx(5.0 / 3.0).epsilon(1e-15));

  std::ostringstream again;
  write_density_interval_csv(again, 2);
  CHECK(again.str() == os.str());
  CHECK_THROWS_AS(write_density_interval_csv(os, 1), std::invalid_argument);
}

TEST_CASE("circle density table keeps only admissible gap pairs") {
  std::ostringstream os;
  write_density_circle_csv(os, 5);
  auto lines = split_lines(os.str());
  REQUIRE(lines.size() == 4);  // header + the three interior grid pairs
  CHECK(lines[0] == "theta1,theta2,p_T");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto fields = split_fields(lines[i]);
    REQUIRE(fields.size() == 3);
    double t1 = reparse(fields[0]), t2 = reparse(fields[1]);
    CHECK(t1 > 0.0);
    CHECK(t1 < kPi);
    CHECK(t2 > 0.0);
    CHECK(t2 < kPi);
    CHECK(kTwoPi - t1 - t2 < kPi);
    // shortest form reprints identically after a parse round-trip
    CHECK(format_double(reparse(fields[2])) == fields[2]);
    CHECK(reparse(fields[2]) > 0.0);
  }
}

TEST_CASE("survival curve tables") {
  std::ostringstream os;
  write_pstar_csv(os, CombKind::Interval, 4);
  auto lines = split_lines(os.str());
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "mu,p_star");
  CHECK(lines[1] == "0,1");
  CHECK(lines[3] == "0.5,0.25231481481481477");
  CHECK(lines[5] == "1,0");

  std::ostringstream oc;
  write_pstar_csv(oc, CombKind::Circle, 4);
  auto clines = split_lines(oc.str());
  REQUIRE(clines.size() == 6);
  // the hoop curve dies at mass ratio 1/2
  CHECK(clines[3] == "0.5,0");
  CHECK(clines[4] == "0.75,0");
  CHECK(clines[5] == "1,0");

  CHECK_THROWS_AS(write_pstar_csv(os, CombKind::Interval, 0), std::invalid_argument);
}

TEST_CASE("histogram table recomputes bit-for-bit from its own fields") {
  ExperimentConfig cfg;
  cfg.kind = CombKind::Interval;
  cfg.n_teeth = 50;
  cfg.trials = 2000;
  cfg.bins_x = 4;
  cfg.bins_y = 4;
  cfg.master_seed = 13;
  auto result = run_interval_experiment(cfg);

  std::ostringstream os;
  write_histogram_csv(os, result);
  auto lines = split_lines(os.str());
  REQUIRE(lines.size() == 1 + 16);
  CHECK(lines[0] == "bin_lo_1,bin_hi_1,bin_lo_2,bin_hi_2,count,empirical_density,analytic_density");

  std::int64_t count_sum = 0;
  double total = static_cast<double>(result.histogram.total);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto f = split_fields(lines[i]);
    REQUIRE(f.size() == 7);
    double xl = reparse(f[0]), xh = reparse(f[1]), yl = reparse(f[2]), yh = reparse(f[3]);
    std::int64_t count = std::strtoll(f[4].c_str(), nullptr, 10);
    count_sum += count;
    double area = (xh - xl) * (yh - yl);
    double empirical = static_cast<double>(count) / total * 1.0 / area;
    CHECK(reparse(f[5]) == empirical);
    CHECK(reparse(f[6]) == density_p(0.5 * (xl + xh), 0.5 * (yl + yh)));
  }
  CHECK(count_sum == result.histogram.total);
}

TEST_CASE("manifest survives a JSON round-trip with a 64-bit seed") {
  RunManifest m;
  m.tool_version = kToolVersion;
  m.config.kind = CombKind::Circle;
  m.config.n_teeth = 321;
  m.config.trials = 12345678901LL;
  m.config.dist = HeightDistribution::beta_ab(2.0, 2.0);
  m.config.bins_x = 7;
  m.config.bins_y = 9;
  m.config.master_seed = 9223372036854775813ULL;  // above the int64 range
  m.config.placement = LinePlacementMode::PaperGrid;

  FitReport fit{0.0123, 45.6, 17, 18};
  std::string text = manifest_to_json(m, &fit, 42);
  CHECK(text.find("\"degenerate_count\": 42") != std::string::npos);
  CHECK(text.find("\"tv_distance\"") != std::string::npos);
  CHECK(text.find("9223372036854775813") != std::string::npos);

  RunManifest back = manifest_from_json(text);
  CHECK(back.tool_version == m.tool_version);
  CHECK(back.config.kind == m.config.kind);
  CHECK(back.config.n_teeth == m.config.n_teeth);
  CHECK(back.config.trials == m.config.trials);
  CHECK(dist_to_string(back.config.dist) == "beta:2,2");
  CHECK(back.config.bins_x == 7);
  CHECK(back.config.bins_y == 9);
  CHECK(back.config.master_seed == m.config.master_seed);
  CHECK(back.config.placement == LinePlacementMode::PaperGrid);
  CHECK(back.mc_quad_tol == m.mc_quad_tol);
  CHECK(back.geom_tol == m.geom_tol);

  // the fit block is advisory; a manifest without it parses too
  CHECK_NOTHROW(manifest_from_json(manifest_to_json(m)));
  CHECK_THROWS(manifest_from_json("not json at all"));
}

TEST_CASE("comb debug dumps") {
  RngStream rng(77);
  LineComb lc = sample_line_comb(4, HeightDistribution::uniform01(), rng);
  std::ostringstream os;
  write_comb_csv(os, lc);
  auto lines = split_lines(os.str());
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "index,position,height");
  for (int i = 0; i < 4; ++i) {
    auto f = split_fields(lines[static_cast<std::size_t>(i) + 1]);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::to_string(i));
    CHECK(reparse(f[1]) == lc.positions[static_cast<std::size_t>(i)]);
    CHECK(reparse(f[2]) == lc.heights[static_cast<std::size_t>(i)]);
  }

  RngStream crng(78);
  CircularComb cc = sample_circular_comb(5, HeightDistribution::uniform01(), crng);
  std::ostringstream oc;
  write_comb_csv(oc, cc);
  auto clines = split_lines(oc.str());
  REQUIRE(clines.size() == 6);
  CHECK(clines[0] == "index,angle,height");
  CHECK(reparse(split_fields(clines[1])[1]) == 0.0);
}
