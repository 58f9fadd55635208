#include "roughcomb/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <utility>

#include "roughcomb/errors.hpp"
#include "roughcomb/settle.hpp"

namespace roughcomb {

void ExperimentConfig::validate() const {
  int min_teeth = kind == CombKind::Interval ? 2 : 3;
  if (n_teeth < min_teeth)
    throw std::invalid_argument("ExperimentConfig: too few teeth for this comb kind");
  if (trials < 1) throw std::invalid_argument("ExperimentConfig: trials must be >= 1");
  if (bins_x < 2 || bins_y < 2)
    throw std::invalid_argument("ExperimentConfig: need at least 2 bins per axis");
}

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Runs body(t) for t in [0, trials), in parallel when built with OpenMP.
// The first exception thrown by any trial is rethrown after the loop.
template <class Body>
void for_each_trial(std::int64_t trials, Body&& body) {
#ifdef _OPENMP
  std::atomic<bool> failed{false};
  std::exception_ptr eptr = nullptr;
#pragma omp parallel for schedule(static)
  for (std::int64_t t = 0; t < trials; ++t) {
    if (failed.load(std::memory_order_relaxed)) continue;
    try {
      body(t);
    } catch (...) {
#pragma omp critical(roughcomb_trial_fail)
      {
        if (!failed.exchange(true)) eptr = std::current_exception();
      }
    }
  }
  if (eptr) std::rethrow_exception(eptr);
#else
  for (std::int64_t t = 0; t < trials; ++t) body(t);
#endif
}

double circle_density_or_zero(double t1, double t2) {
  double t3 = kTwoPi - t1 - t2;
  if (!(t1 > 0.0) || !(t1 < kPi) || !(t2 > 0.0) || !(t2 < kPi) || !(t3 > 0.0) || !(t3 < kPi))
    return 0.0;
  return density_pT(ThetaTriple(t1, t2, t3));
}

// One interval trial: sample, settle, deposit. False means degenerate.
bool interval_trial(const ExperimentConfig& cfg, std::int64_t t, Histogram2D& hist) {
  RngStream rng = trial_stream(cfg.master_seed, static_cast<std::uint64_t>(t));
  LineComb comb = sample_line_comb(cfg.n_teeth, cfg.dist, rng, cfg.placement);
  try {
    SupportPair sp = support_pair(comb);
    hist.deposit(sp.a1, sp.a2);
    return true;
  } catch (const degenerate_error&) {
    return false;
  }
}

bool circle_trial(const ExperimentConfig& cfg, std::int64_t t, Histogram2D& hist) {
  RngStream rng = trial_stream(cfg.master_seed, static_cast<std::uint64_t>(t));
  CircularComb comb = sample_circular_comb(cfg.n_teeth, cfg.dist, rng);
  try {
    SupportTriple st = support_triple(comb);
    ThetaTriple th = theta_from_phi(PhiTriple(st.phi));
    hist.deposit(th[0], th[1]);
    hist.deposit(th[1], th[2]);
    hist.deposit(th[2], th[0]);
    return true;
  } catch (const degenerate_error&) {
    return false;
  }
}

template <class TrialFn>
ExperimentResult drive(const ExperimentConfig& cfg, const Histogram2D& proto,
                       int deposits_per_trial,
                       const std::function<double(double, double)>& density, double density_norm,
                       TrialFn&& trial, bool parallel) {
  cfg.validate();
  Stopwatch watch;
  Histogram2D hist = proto;
  std::int64_t degenerate = 0;

#ifdef _OPENMP
  if (parallel) {
    std::atomic<bool> failed{false};
    std::exception_ptr eptr = nullptr;
#pragma omp parallel
    {
      Histogram2D local = proto;
      std::int64_t local_degenerate = 0;
#pragma omp for schedule(static) nowait
      for (std::int64_t t = 0; t < cfg.trials; ++t) {
        if (failed.load(std::memory_order_relaxed)) continue;
        try {
          if (!trial(cfg, t, local)) ++local_degenerate;
        } catch (...) {
#pragma omp critical(roughcomb_drive_fail)
          {
            if (!failed.exchange(true)) eptr = std::current_exception();
          }
        }
      }
#pragma omp critical(roughcomb_drive_merge)
      {
        hist.merge(local);
        degenerate += local_degenerate;
      }
    }
    if (eptr) std::rethrow_exception(eptr);
  } else
#else
  (void)parallel;
#endif
  {
    for (std::int64_t t = 0; t < cfg.trials; ++t)
      if (!trial(cfg, t, hist)) ++degenerate;
  }

  ExperimentResult result;
  result.manifest = RunManifest{kToolVersion, cfg, 1e-6, kGeomTol};
  result.degenerate_count = degenerate;
  result.deposits_per_trial = deposits_per_trial;
  if (hist.total > 0) {
    QuadratureSpec fit_spec{result.manifest.mc_quad_tol, result.manifest.mc_quad_tol, 40};
    try {
      result.fit = compare_histogram(hist, density, density_norm, fit_spec);
    } catch (const std::runtime_error&) {
      result.fit = FitReport{};  // too few deposits to pool; fit left empty
    }
  }
  result.histogram = std::move(hist);
  result.elapsed_seconds = watch.seconds();
  return result;
}

ExperimentResult run_interval(const ExperimentConfig& cfg, bool parallel) {
  if (cfg.kind != CombKind::Interval)
    throw std::invalid_argument("run_interval_experiment: cfg.kind must be Interval");
  Histogram2D proto(cfg.bins_x, cfg.bins_y, -1.0, 0.0, 0.0, 1.0, HistogramDomain::IntervalRect);
  return drive(cfg, proto, 1, [](double a1, double a2) { return density_p(a1, a2); }, 1.0,
               interval_trial, parallel);
}

ExperimentResult run_circle(const ExperimentConfig& cfg, bool parallel) {
  if (cfg.kind != CombKind::Circle)
    throw std::invalid_argument("run_circle_experiment: cfg.kind must be Circle");
  Histogram2D proto(cfg.bins_x, cfg.bins_y, 0.0, kPi, 0.0, kPi, HistogramDomain::ThetaTriangle);
  return drive(cfg, proto, 3, circle_density_or_zero, 3.0, circle_trial, parallel);
}

McEstimate wald(std::int64_t hits, std::int64_t used) {
  if (used <= 0) throw std::runtime_error("estimate: every trial was degenerate");
  McEstimate est;
  est.value = static_cast<double>(hits) / static_cast<double>(used);
  est.std_error = std::sqrt(est.value * (1.0 - est.value) / static_cast<double>(used));
  est.trials_used = used;
  return est;
}

}  // namespace

ExperimentResult run_interval_experiment(const ExperimentConfig& cfg) {
  return run_interval(cfg, true);
}

ExperimentResult run_circle_experiment(const ExperimentConfig& cfg) { return run_circle(cfg, true); }

ExperimentResult run_interval_experiment_serial(const ExperimentConfig& cfg) {
  return run_interval(cfg, false);
}

ExperimentResult run_circle_experiment_serial(const ExperimentConfig& cfg) {
  return run_circle(cfg, false);
}

McEstimate estimate_p_star(const ExperimentConfig& cfg, double mu) {
  cfg.validate();
  if (!(mu >= 0.0) || !(mu <= 1.0))
    throw std::invalid_argument("estimate_p_star: mu must lie in [0, 1]");
  std::atomic<std::int64_t> survive{0};
  std::atomic<std::int64_t> settled{0};
  if (cfg.kind == CombKind::Interval) {
    for_each_trial(cfg.trials, [&](std::int64_t t) {
      RngStream rng = trial_stream(cfg.master_seed, static_cast<std::uint64_t>(t));
      LineComb comb = sample_line_comb(cfg.n_teeth, cfg.dist, rng, cfg.placement);
      try {
        SupportPair sp = support_pair(comb);
        settled.fetch_add(1, std::memory_order_relaxed);
        if (-sp.a1 > mu && sp.a2 > mu) survive.fetch_add(1, std::memory_order_relaxed);
      } catch (const degenerate_error&) {
      }
    });
  } else {
    double gap_cap = 2.0 * std::acos(mu);
    for_each_trial(cfg.trials, [&](std::int64_t t) {
      RngStream rng = trial_stream(cfg.master_seed, static_cast<std::uint64_t>(t));
      CircularComb comb = sample_circular_comb(cfg.n_teeth, cfg.dist, rng);
      try {
        SupportTriple st = support_triple(comb);
        ThetaTriple th = theta_from_phi(PhiTriple(st.phi));
        settled.fetch_add(1, std::memory_order_relaxed);
        if (th[0] < gap_cap && th[1] < gap_cap && th[2] < gap_cap)
          survive.fetch_add(1, std::memory_order_relaxed);
      } catch (const degenerate_error&) {
      }
    });
  }
  return wald(survive.load(), settled.load());
}

McEstimate estimate_comb_below(const ExperimentConfig& cfg, const LinePlacement& placement) {
  cfg.validate();
  if (cfg.kind != CombKind::Interval)
    throw std::invalid_argument("estimate_comb_below: line placement needs an interval config");
  if (cfg.dist.kind != HeightDistribution::Kind::Uniform01)
    throw std::invalid_argument("estimate_comb_below: defined for uniform heights");
  double n = static_cast<double>(cfg.n_teeth);
  double slope = (placement.A1 - placement.A2) / (n * (placement.a.a2 - placement.a.a1));
  double level = 1.0 - placement.A1 / n;
  std::atomic<std::int64_t> below{0};
  for_each_trial(cfg.trials, [&](std::int64_t t) {
    RngStream rng = trial_stream(cfg.master_seed, static_cast<std::uint64_t>(t));
    LineComb comb = sample_line_comb(cfg.n_teeth, cfg.dist, rng, cfg.placement);
    bool all = true;
    for (int i = 0; i < cfg.n_teeth; ++i) {
      if (comb.heights[i] > level + slope * (comb.positions[i] - placement.a.a1)) {
        all = false;
        break;
      }
    }
    if (all) below.fetch_add(1, std::memory_order_relaxed);
  });
  return wald(below.load(), cfg.trials);
}

McEstimate estimate_comb_below(const ExperimentConfig& cfg, const PlanePlacement& placement) {
  cfg.validate();
  if (cfg.kind != CombKind::Circle)
    throw std::invalid_argument("estimate_comb_below: plane placement needs a circle config");
  if (cfg.dist.kind != HeightDistribution::Kind::Uniform01)
    throw std::invalid_argument("estimate_comb_below: defined for uniform heights");
  double n = static_cast<double>(cfg.n_teeth);
  // tooth angles are the same deterministic grid in every trial, so the
  // plane heights over the teeth can be precomputed once
  RngStream probe_rng(0);
  CircularComb probe = sample_circular_comb(cfg.n_teeth, cfg.dist, probe_rng);
  std::vector<double> threshold(probe.angles.size());
  for (std::size_t j = 0; j < probe.angles.size(); ++j) {
    double sigma = placement.sigma0 + placement.sigma_x * std::cos(probe.angles[j]) +
                   placement.sigma_y * std::sin(probe.angles[j]);
    threshold[j] = 1.0 - sigma / n;
  }
  std::atomic<std::int64_t> below{0};
  for_each_trial(cfg.trials, [&](std::int64_t t) {
    RngStream rng = trial_stream(cfg.master_seed, static_cast<std::uint64_t>(t));
    CircularComb comb = sample_circular_comb(cfg.n_teeth, cfg.dist, rng);
    bool all = true;
    for (int i = 0; i < cfg.n_teeth; ++i) {
      if (comb.heights[i] > threshold[i]) {
        all = false;
        break;
      }
    }
    if (all) below.fetch_add(1, std::memory_order_relaxed);
  });
  return wald(below.load(), cfg.trials);
}

namespace {

double empirical_tv(const Histogram2D& a, const Histogram2D& b) {
  if (a.counts.size() != b.counts.size())
    throw std::invalid_argument("empirical_tv: histogram shapes differ");
  if (a.total <= 0 || b.total <= 0) throw std::invalid_argument("empirical_tv: empty histogram");
  double tv = 0.0;
  for (std::size_t i = 0; i < a.counts.size(); ++i)
    tv += std::abs(static_cast<double>(a.counts[i]) / static_cast<double>(a.total) -
                   static_cast<double>(b.counts[i]) / static_cast<double>(b.total));
  return 0.5 * tv;
}

}  // namespace

std::vector<RobustnessRow> robustness_experiment(const std::vector<ExperimentConfig>& variants,
                                                 const std::vector<std::string>& labels) {
  if (variants.empty()) throw std::invalid_argument("robustness_experiment: no variants");
  if (labels.size() != variants.size())
    throw std::invalid_argument("robustness_experiment: one label per variant required");
  const ExperimentConfig& base = variants.front();
  for (const ExperimentConfig& v : variants) {
    if (v.kind != base.kind || v.n_teeth != base.n_teeth || v.trials != base.trials ||
        v.bins_x != base.bins_x || v.bins_y != base.bins_y || v.master_seed != base.master_seed)
      throw std::invalid_argument(
          "robustness_experiment: variants may differ only in distribution and placement");
  }

  std::vector<ExperimentResult> results;
  results.reserve(variants.size());
  for (const ExperimentConfig& v : variants)
    results.push_back(v.kind == CombKind::Interval ? run_interval_experiment(v)
                                                   : run_circle_experiment(v));

  std::vector<RobustnessRow> rows(variants.size());
  for (std::size_t i = 0; i < variants.size(); ++i) {
    rows[i].label = labels[i];
    rows[i].fit_vs_analytic = results[i].fit;
    rows[i].degenerate_count = results[i].degenerate_count;
    rows[i].tv_vs_others.resize(variants.size(), 0.0);
    for (std::size_t j = 0; j < variants.size(); ++j) {
      if (j == i) continue;
      rows[i].tv_vs_others[j] = empirical_tv(results[i].histogram, results[j].histogram);
    }
  }
  return rows;
}

}  // namespace roughcomb
