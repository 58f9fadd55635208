#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "roughcomb/circle_law.hpp"
#include "roughcomb/comb.hpp"
#include "roughcomb/histogram.hpp"
#include "roughcomb/interval_law.hpp"
#include "roughcomb/rng.hpp"

namespace roughcomb {

enum class CombKind { Interval, Circle };

struct ExperimentConfig {
  CombKind kind = CombKind::Interval;
  int n_teeth = 1000;
  std::int64_t trials = 100000;
  HeightDistribution dist = HeightDistribution::uniform01();
  int bins_x = 20;
  int bins_y = 20;
  std::uint64_t master_seed = 0;
  LinePlacementMode placement = LinePlacementMode::MidpointGrid;

  void validate() const;  // throws std::invalid_argument
};

struct RunManifest {
  std::string tool_version;
  ExperimentConfig config;
  double mc_quad_tol = 1e-6;   // tolerance used for expected bin masses
  double geom_tol = 1e-12;     // tie tolerance of the settling predicates
};

struct ExperimentResult {
  Histogram2D histogram;
  std::int64_t degenerate_count = 0;
  FitReport fit;
  double elapsed_seconds = 0.0;
  RunManifest manifest;
  // Number of histogram increments per settled trial: 1 for the interval
  // law; 3 for the circle law, where each trial deposits its three cyclic
  // gap images (each carrying weight 1/3 of the trial).  In trial units,
  // histogram.total == deposits_per_trial * (trials - degenerate_count).
  int deposits_per_trial = 1;
};

// Samples combs, settles the body, and bins support coordinates; the fit
// compares the empirical law against density_p (interval, norm 1) or
// density_pT (circle, norm 3).  Trials run in parallel; trial t draws from
// trial_stream(master_seed, t) and merging is integer addition, so the
// histogram is bitwise identical for any thread count.  Degenerate settles
// are counted and deposit nothing (the sampled law is the comb law
// conditioned on non-degeneracy).
ExperimentResult run_interval_experiment(const ExperimentConfig& cfg);
ExperimentResult run_circle_experiment(const ExperimentConfig& cfg);

// Single-threaded reference engines with identical outputs; kept for tests
// and benchmarking of the parallel path.
ExperimentResult run_interval_experiment_serial(const ExperimentConfig& cfg);
ExperimentResult run_circle_experiment_serial(const ExperimentConfig& cfg);

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::int64_t trials_used = 0;  // non-degenerate trials
};

// Fraction of settled trials whose support configuration survives a walker
// at mass ratio mu: interval -a1 > mu and a2 > mu; circle all gaps below
// 2*arccos(mu).  Wald standard error.
McEstimate estimate_p_star(const ExperimentConfig& cfg, double mu);

// Fraction of freshly sampled combs lying entirely below a fixed line or
// plane placement (uniform heights).
McEstimate estimate_comb_below(const ExperimentConfig& cfg, const LinePlacement& placement);
McEstimate estimate_comb_below(const ExperimentConfig& cfg, const PlanePlacement& placement);

struct RobustnessRow {
  std::string label;
  FitReport fit_vs_analytic;
  std::int64_t degenerate_count = 0;
  std::vector<double> tv_vs_others;  // pairwise empirical TV distances
};

// Runs the experiment per variant (variants differ in height distribution
// and/or placement) and reports each variant's fit against the analytic
// density plus pairwise empirical distances.
std::vector<RobustnessRow> robustness_experiment(const std::vector<ExperimentConfig>& variants,
                                                 const std::vector<std::string>& labels);

}  // namespace roughcomb
