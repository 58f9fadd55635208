// Command-line front end: density grids, Monte-Carlo experiments, survival
// and below-line/plane probability estimates, robustness comparisons, and
// the verification suite.  Exit codes: 0 success, 1 runtime or verification
// failure, 2 usage error.

#include <array>
#include <cstdint>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "roughcomb/circle_law.hpp"
#include "roughcomb/errors.hpp"
#include "roughcomb/experiment.hpp"
#include "roughcomb/interval_law.hpp"
#include "roughcomb/io.hpp"
#include "roughcomb/verify.hpp"

namespace {

using namespace roughcomb;

void with_output(const std::string& out, const std::function<void(std::ostream&)>& write) {
  if (out.empty()) {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream os(out, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open output file: " + out);
  write(os);
  os.flush();
  if (!os) throw std::runtime_error("write failed: " + out);
}

// hist.csv -> hist.json, hist -> hist.json
std::string json_sibling(const std::string& csv_path) {
  std::string base = csv_path;
  if (base.size() >= 4 && base.compare(base.size() - 4, 4, ".csv") == 0)
    base.resize(base.size() - 4);
  return base + ".json";
}

int run_mc(const ExperimentConfig& cfg, const std::string& out) {
  ExperimentResult result = cfg.kind == CombKind::Interval ? run_interval_experiment(cfg)
                                                           : run_circle_experiment(cfg);
  std::string json = manifest_to_json(result.manifest, &result.fit, result.degenerate_count);
  if (out.empty()) {
    write_histogram_csv(std::cout, result);
    std::cout << json;
    std::cout.flush();
  } else {
    with_output(out, [&](std::ostream& os) { write_histogram_csv(os, result); });
    with_output(json_sibling(out), [&](std::ostream& os) { os << json; });
    std::cout << "tv_distance " << format_double(result.fit.tv_distance) << ", chi_square "
              << format_double(result.fit.chi_square) << " on " << result.fit.dof
              << " dof, degenerate " << result.degenerate_count << ", elapsed "
              << format_double(result.elapsed_seconds) << " s\n";
  }
  return 0;
}

int run_pstar(CombKind kind, const std::vector<double>& mus, int steps,
              const std::string& out) {
  with_output(out, [&](std::ostream& os) {
    if (mus.empty()) {
      write_pstar_csv(os, kind, steps);
      return;
    }
    os << "mu,p_star\n";
    for (double mu : mus) {
      double p = kind == CombKind::Interval ? p_star_beam(mu) : p_star_hoop(mu);
      os << format_double(mu) << "," << format_double(p) << "\n";
    }
  });
  return 0;
}

int run_comb_below(CombKind kind, int teeth, std::int64_t trials, std::uint64_t seed,
                   const std::string& out) {
  ExperimentConfig cfg;
  cfg.kind = kind;
  cfg.n_teeth = teeth;
  cfg.trials = trials;
  cfg.master_seed = seed;

  struct Row {
    std::string label;
    double closed;
    McEstimate mc;
  };
  std::vector<Row> rows;

  if (kind == CombKind::Interval) {
    const std::array<LinePlacement, 5> placements{
        LinePlacement(2.0, 2.0, {-1.0, 1.0}), LinePlacement(1.0, 0.5, {-0.6, 0.7}),
        LinePlacement(3.0, 0.0, {-0.5, 0.5}), LinePlacement(0.0, 2.0, {-0.8, 0.4}),
        LinePlacement(1.5, 1.5, {-0.3, 0.9})};
    for (const LinePlacement& p : placements) {
      std::string label = "line A=(" + format_double(p.A1) + ";" + format_double(p.A2) +
                          ") a=(" + format_double(p.a.a1) + ";" + format_double(p.a.a2) + ")";
      rows.push_back({label, prob_comb_below_line(p), estimate_comb_below(cfg, p)});
    }
  } else {
    PhiTriple equilateral(0.0, 2.0 * kPi / 3.0, 4.0 * kPi / 3.0);
    const std::array<PlanePlacement, 5> placements{
        plane_coeffs(equilateral, {1.0, 1.0, 1.0}),
        plane_coeffs(equilateral, {2.0, 1.0, 1.0}),
        plane_coeffs(equilateral, {3.0, 0.2, 0.2}),
        plane_coeffs(PhiTriple(0.4, 2.1, 4.4), {2.0, 1.0, 0.0}),
        plane_coeffs(PhiTriple(0.7, 2.9, 4.6), {0.8, 0.1, 2.2})};
    for (const PlanePlacement& p : placements) {
      std::string label = "plane A=(" + format_double(p.A[0]) + ";" + format_double(p.A[1]) +
                          ";" + format_double(p.A[2]) + ")";
      rows.push_back({label, prob_comb_below_plane(p), estimate_comb_below(cfg, p)});
    }
  }

  with_output(out, [&](std::ostream& os) {
    os << "label,closed_form,mc_estimate,std_error,z\n";
    for (const Row& r : rows) {
      double se = r.mc.std_error > 0.0 ? r.mc.std_error : 1e-300;
      os << r.label << "," << format_double(r.closed) << "," << format_double(r.mc.value)
         << "," << format_double(r.mc.std_error) << ","
         << format_double((r.mc.value - r.closed) / se) << "\n";
    }
  });
  return 0;
}

int run_robustness(int teeth, std::int64_t trials, std::uint64_t seed, int bins,
                   const std::string& out) {
  ExperimentConfig base;
  base.kind = CombKind::Interval;
  base.n_teeth = teeth;
  base.trials = trials;
  base.bins_x = base.bins_y = bins;
  base.master_seed = seed;

  ExperimentConfig beta = base;
  beta.dist = HeightDistribution::beta_ab(2.0, 2.0);
  ExperimentConfig random_grid = base;
  random_grid.placement = LinePlacementMode::UniformRandom;

  // labels land in a CSV column, so parameter lists use ';' instead of ','
  std::vector<std::string> labels{"uniform/midpoint", "beta(2;2)/midpoint", "uniform/random"};
  auto rows = robustness_experiment({base, beta, random_grid}, labels);

  with_output(out, [&](std::ostream& os) {
    os << "label,tv_vs_analytic,chi_square,dof,degenerate_count";
    for (const std::string& l : labels) os << ",tv_vs_" << l;
    os << "\n";
    for (const RobustnessRow& r : rows) {
      os << r.label << "," << format_double(r.fit_vs_analytic.tv_distance) << ","
         << format_double(r.fit_vs_analytic.chi_square) << "," << r.fit_vs_analytic.dof << ","
         << r.degenerate_count;
      for (double tv : r.tv_vs_others) os << "," << format_double(tv);
      os << "\n";
    }
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"support-point laws of rigid bodies settling on random combs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  int grid = 200;
  std::vector<double> mus;
  int steps = 100;
  std::string out;
  std::string profile = "full";
  std::string kind_spec;

  struct McFlags {
    int teeth;
    std::int64_t trials;
    std::uint64_t seed = 0;
    int bins;
    std::string dist = "uniform";
    std::string placement = "midpoint";
  };
  McFlags mi_flags{1000, 1000000, 0, 20, "uniform", "midpoint"};
  McFlags mcc_flags{400, 200000, 0, 12, "uniform", "midpoint"};
  McFlags cb_flags{2000, 100000, 0, 0, "uniform", "midpoint"};
  McFlags rb_flags{1000, 1000000, 0, 20, "uniform", "midpoint"};

  auto* density_interval =
      app.add_subcommand("density-interval", "interval support-pair density on a grid (CSV)");
  density_interval->add_option("--grid", grid, "points per axis")->capture_default_str();
  density_interval->add_option("--out", out, "output path (default stdout)");

  auto* density_circle =
      app.add_subcommand("density-circle", "hoop gap-triple density on a grid (CSV)");
  density_circle->add_option("--grid", grid, "points per axis")->capture_default_str();
  density_circle->add_option("--out", out, "output path (default stdout)");

  auto* mc_interval = app.add_subcommand(
      "mc-interval", "Monte-Carlo support-pair histogram vs the closed-form law (CSV + JSON)");
  auto* mc_circle = app.add_subcommand(
      "mc-circle", "Monte-Carlo gap-triple histogram vs the closed-form law (CSV + JSON)");
  for (CLI::App* sub : {mc_interval, mc_circle}) {
    McFlags& f = sub == mc_interval ? mi_flags : mcc_flags;
    sub->add_option("--teeth", f.teeth, "teeth per comb")->capture_default_str();
    sub->add_option("--trials", f.trials, "Monte-Carlo trials")->capture_default_str();
    sub->add_option("--seed", f.seed, "master seed")->capture_default_str();
    sub->add_option("--bins", f.bins, "histogram bins per axis")->capture_default_str();
    sub->add_option("--dist", f.dist, "height law: uniform | beta:a,b | triangular:m")
        ->capture_default_str();
    if (sub == mc_interval)
      sub->add_option("--placement", f.placement, "tooth layout: midpoint | paper | random")
          ->capture_default_str();
    sub->add_option("--out", out, "CSV path; manifest JSON lands next to it (default stdout)");
  }

  auto* pstar =
      app.add_subcommand("pstar", "walk-survival probability, as a curve or at given mu values");
  pstar->add_option("kind", kind_spec, "interval | circle")
      ->required()
      ->check(CLI::IsMember({"interval", "circle"}));
  auto* mu_opt = pstar->add_option("--mu", mus, "evaluate at these mass ratios");
  pstar->add_option("--steps", steps, "curve resolution (mu = i/steps)")
      ->capture_default_str()
      ->excludes(mu_opt);
  pstar->add_option("--out", out, "output path (default stdout)");

  auto* comb_below = app.add_subcommand(
      "comb-below", "below-line/plane probabilities: closed form vs Monte-Carlo");
  comb_below->add_option("kind", kind_spec, "interval | circle")
      ->required()
      ->check(CLI::IsMember({"interval", "circle"}));
  comb_below->add_option("--teeth", cb_flags.teeth, "teeth per comb")->capture_default_str();
  comb_below->add_option("--trials", cb_flags.trials, "combs per placement")
      ->capture_default_str();
  comb_below->add_option("--seed", cb_flags.seed, "master seed")->capture_default_str();
  comb_below->add_option("--out", out, "output path (default stdout)");

  auto* robustness = app.add_subcommand(
      "robustness", "interval law under alternative height laws and tooth layouts");
  robustness->add_option("--teeth", rb_flags.teeth, "teeth per comb")->capture_default_str();
  robustness->add_option("--trials", rb_flags.trials, "trials per variant")
      ->capture_default_str();
  robustness->add_option("--seed", rb_flags.seed, "master seed")->capture_default_str();
  robustness->add_option("--bins", rb_flags.bins, "histogram bins per axis")
      ->capture_default_str();
  robustness->add_option("--out", out, "output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "run the verification suite; exit 0 iff it passes");
  verify->add_option("--profile,profile", profile, "fast | full")
      ->capture_default_str()
      ->check(CLI::IsMember({"fast", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (density_interval->parsed()) {
      with_output(out, [&](std::ostream& os) { write_density_interval_csv(os, grid); });
      return 0;
    }
    if (density_circle->parsed()) {
      with_output(out, [&](std::ostream& os) { write_density_circle_csv(os, grid); });
      return 0;
    }
    if (mc_interval->parsed() || mc_circle->parsed()) {
      const McFlags& f = mc_interval->parsed() ? mi_flags : mcc_flags;
      ExperimentConfig cfg;
      cfg.kind = mc_interval->parsed() ? CombKind::Interval : CombKind::Circle;
      cfg.n_teeth = f.teeth;
      cfg.trials = f.trials;
      cfg.dist = dist_from_string(f.dist);
      cfg.bins_x = cfg.bins_y = f.bins;
      cfg.master_seed = f.seed;
      cfg.placement = placement_from_string(f.placement);
      return run_mc(cfg, out);
    }
    if (pstar->parsed()) return run_pstar(kind_from_string(kind_spec), mus, steps, out);
    if (comb_below->parsed())
      return run_comb_below(kind_from_string(kind_spec), cb_flags.teeth, cb_flags.trials,
                            cb_flags.seed, out);
    if (robustness->parsed())
      return run_robustness(rb_flags.teeth, rb_flags.trials, rb_flags.seed, rb_flags.bins, out);
    if (verify->parsed()) {
      auto results = run_verification(profile == "fast" ? VerifyProfile::Fast
                                                        : VerifyProfile::Full);
      return print_verification_report(std::cout, results);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
