#include "roughcomb/io.hpp"

#include <array>
#include <charconv>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace roughcomb {

std::string format_double(double v) {
  std::array<char, 64> buf;
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf.data(), end);
}

std::string kind_to_string(CombKind kind) {
  return kind == CombKind::Interval ? "interval" : "circle";
}

CombKind kind_from_string(const std::string& s) {
  if (s == "interval") return CombKind::Interval;
  if (s == "circle") return CombKind::Circle;
  throw std::invalid_argument("unknown comb kind: " + s);
}

std::string placement_to_string(LinePlacementMode mode) {
  switch (mode) {
    case LinePlacementMode::MidpointGrid:
      return "midpoint";
    case LinePlacementMode::PaperGrid:
      return "paper";
    case LinePlacementMode::UniformRandom:
      return "random";
  }
  return "midpoint";  // unreachable
}

LinePlacementMode placement_from_string(const std::string& s) {
  if (s == "midpoint") return LinePlacementMode::MidpointGrid;
  if (s == "paper") return LinePlacementMode::PaperGrid;
  if (s == "random") return LinePlacementMode::UniformRandom;
  throw std::invalid_argument("unknown placement mode: " + s);
}

std::string dist_to_string(const HeightDistribution& dist) {
  switch (dist.kind) {
    case HeightDistribution::Kind::Uniform01:
      return "uniform";
    case HeightDistribution::Kind::Beta:
      return "beta:" + format_double(dist.alpha) + "," + format_double(dist.beta);
    case HeightDistribution::Kind::Triangular:
      return "triangular:" + format_double(dist.mode);
  }
  return "uniform";  // unreachable
}

namespace {

double parse_double(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty number");
  const char* begin = s.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end != begin + s.size()) throw std::invalid_argument("malformed number: " + s);
  return v;
}

}  // namespace

HeightDistribution dist_from_string(const std::string& s) {
  if (s == "uniform") return HeightDistribution::uniform01();
  if (s.rfind("beta:", 0) == 0) {
    std::string args = s.substr(5);
    std::size_t comma = args.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("beta distribution needs two parameters: " + s);
    return HeightDistribution::beta_ab(parse_double(args.substr(0, comma)),
                                       parse_double(args.substr(comma + 1)));
  }
  if (s.rfind("triangular:", 0) == 0)
    return HeightDistribution::triangular(parse_double(s.substr(11)));
  throw std::invalid_argument("unknown height distribution: " + s);
}

void write_density_interval_csv(std::ostream& os, int grid) {
  if (grid < 2) throw std::invalid_argument("density grid must be at least 2");
  os << "a1,a2,p\n";
  for (int i = 0; i < grid; ++i) {
    double a1 = -1.0 + static_cast<double>(i) / (grid - 1);
    for (int j = 0; j < grid; ++j) {
      double a2 = static_cast<double>(j) / (grid - 1);
      os << format_double(a1) << ',' << format_double(a2) << ','
         << format_double(density_p(a1, a2)) << '\n';
    }
  }
}

void write_density_circle_csv(std::ostream& os, int grid) {
  if (grid < 2) throw std::invalid_argument("density grid must be at least 2");
  os << "theta1,theta2,p_T\n";
  for (int i = 0; i < grid; ++i) {
    double t1 = kPi * i / (grid - 1);
    for (int j = 0; j < grid; ++j) {
      double t2 = kPi * j / (grid - 1);
      double t3 = kTwoPi - t1 - t2;
      if (!(t1 > 0.0) || !(t1 < kPi) || !(t2 > 0.0) || !(t2 < kPi) || !(t3 > 0.0) || !(t3 < kPi))
        continue;
      os << format_double(t1) << ',' << format_double(t2) << ','
         << format_double(density_pT(ThetaTriple(t1, t2, t3))) << '\n';
    }
  }
}

void write_pstar_csv(std::ostream& os, CombKind kind, int steps) {
  if (steps < 1) throw std::invalid_argument("p* curve needs at least 1 step");
  os << "mu,p_star\n";
  for (int i = 0; i <= steps; ++i) {
    double mu = static_cast<double>(i) / steps;
    double p = kind == CombKind::Interval ? p_star_beam(mu) : p_star_hoop(mu);
    os << format_double(mu) << ',' << format_double(p) << '\n';
  }
}

void write_histogram_csv(std::ostream& os, const ExperimentResult& result) {
  const Histogram2D& hist = result.histogram;
  bool circle = hist.domain_tag == HistogramDomain::ThetaTriangle;
  double norm = circle ? 3.0 : 1.0;
  double total = static_cast<double>(hist.total);
  os << "bin_lo_1,bin_hi_1,bin_lo_2,bin_hi_2,count,empirical_density,analytic_density\n";
  for (int ix = 0; ix < hist.nx(); ++ix) {
    double xl = hist.x_edges[ix], xh = hist.x_edges[ix + 1];
    for (int iy = 0; iy < hist.ny(); ++iy) {
      double yl = hist.y_edges[iy], yh = hist.y_edges[iy + 1];
      std::int64_t count = hist.counts[static_cast<std::size_t>(ix) * hist.ny() + iy];
      double area = (xh - xl) * (yh - yl);
      double empirical = total > 0.0 ? count / total * norm / area : 0.0;
      double cx = 0.5 * (xl + xh), cy = 0.5 * (yl + yh);
      double analytic;
      if (circle) {
        double t3 = kTwoPi - cx - cy;
        analytic = (cx > 0.0 && cx < kPi && cy > 0.0 && cy < kPi && t3 > 0.0 && t3 < kPi)
                       ? density_pT(ThetaTriple(cx, cy, t3))
                       : 0.0;
      } else {
        analytic = density_p(cx, cy);
      }
      os << format_double(xl) << ',' << format_double(xh) << ',' << format_double(yl) << ','
         << format_double(yh) << ',' << count << ',' << format_double(empirical) << ','
         << format_double(analytic) << '\n';
    }
  }
}

std::string manifest_to_json(const RunManifest& m, const FitReport* fit,
                             std::int64_t degenerate_count) {
  nlohmann::json j;
  j["tool_version"] = m.tool_version;
  nlohmann::json c;
  c["kind"] = kind_to_string(m.config.kind);
  c["n_teeth"] = m.config.n_teeth;
  c["trials"] = m.config.trials;
  c["dist"] = dist_to_string(m.config.dist);
  c["bins_x"] = m.config.bins_x;
  c["bins_y"] = m.config.bins_y;
  c["master_seed"] = m.config.master_seed;
  c["placement"] = placement_to_string(m.config.placement);
  j["config"] = c;
  j["mc_quad_tol"] = m.mc_quad_tol;
  j["geom_tol"] = m.geom_tol;
  if (fit != nullptr) {
    j["fit"] = {{"tv_distance", fit->tv_distance},
                {"chi_square", fit->chi_square},
                {"dof", fit->dof},
                {"n_effective_bins", fit->n_effective_bins}};
  }
  if (degenerate_count >= 0) j["degenerate_count"] = degenerate_count;
  return j.dump(2) + "\n";
}

RunManifest manifest_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  RunManifest m;
  m.tool_version = j.at("tool_version").get<std::string>();
  const nlohmann::json& c = j.at("config");
  m.config.kind = kind_from_string(c.at("kind").get<std::string>());
  m.config.n_teeth = c.at("n_teeth").get<int>();
  m.config.trials = c.at("trials").get<std::int64_t>();
  m.config.dist = dist_from_string(c.at("dist").get<std::string>());
  m.config.bins_x = c.at("bins_x").get<int>();
  m.config.bins_y = c.at("bins_y").get<int>();
  m.config.master_seed = c.at("master_seed").get<std::uint64_t>();
  m.config.placement = placement_from_string(c.at("placement").get<std::string>());
  m.mc_quad_tol = j.at("mc_quad_tol").get<double>();
  m.geom_tol = j.at("geom_tol").get<double>();
  return m;
}

void write_comb_csv(std::ostream& os, const LineComb& comb) {
  os << "index,position,height\n";
  for (int i = 0; i < comb.n(); ++i)
    os << i << ',' << format_double(comb.positions[i]) << ','
       << format_double(comb.heights[i]) << '\n';
}

void write_comb_csv(std::ostream& os, const CircularComb& comb) {
  os << "index,angle,height\n";
  for (int i = 0; i < comb.n(); ++i)
    os << i << ',' << format_double(comb.angles[i]) << ',' << format_double(comb.heights[i])
       << '\n';
}

}  // namespace roughcomb
