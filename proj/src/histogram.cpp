#include "roughcomb/histogram.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace roughcomb {

Histogram2D::Histogram2D(int nx, int ny, double x_lo, double x_hi, double y_lo, double y_hi,
                         HistogramDomain tag)
    : domain_tag(tag) {
  if (nx < 1 || ny < 1) throw std::invalid_argument("Histogram2D: bin counts must be positive");
  if (!(x_lo < x_hi) || !(y_lo < y_hi))
    throw std::invalid_argument("Histogram2D: empty axis range");
  x_edges.resize(static_cast<std::size_t>(nx) + 1);
  y_edges.resize(static_cast<std::size_t>(ny) + 1);
  for (int i = 0; i <= nx; ++i) x_edges[i] = x_lo + (x_hi - x_lo) * i / nx;
  for (int j = 0; j <= ny; ++j) y_edges[j] = y_lo + (y_hi - y_lo) * j / ny;
  x_edges[nx] = x_hi;
  y_edges[ny] = y_hi;
  counts.assign(static_cast<std::size_t>(nx) * ny, 0);
}

void Histogram2D::deposit(double x, double y) {
  int nxb = nx(), nyb = ny();
  double x_lo = x_edges.front(), x_hi = x_edges.back();
  double y_lo = y_edges.front(), y_hi = y_edges.back();
  if (x < x_lo || x > x_hi || y < y_lo || y > y_hi) return;
  int ix = static_cast<int>((x - x_lo) / (x_hi - x_lo) * nxb);
  int iy = static_cast<int>((y - y_lo) / (y_hi - y_lo) * nyb);
  if (ix >= nxb) ix = nxb - 1;
  if (iy >= nyb) iy = nyb - 1;
  ++counts[static_cast<std::size_t>(ix) * nyb + iy];
  ++total;
}

void Histogram2D::merge(const Histogram2D& other) {
  if (other.counts.size() != counts.size() || other.x_edges != x_edges ||
      other.y_edges != y_edges || other.domain_tag != domain_tag)
    throw std::invalid_argument("Histogram2D::merge: shape mismatch");
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
  total += other.total;
}

namespace {

constexpr double kHistPi = 3.141592653589793238462643383279502884;

// Mass of density/norm over one bin clipped to theta1 + theta2 > pi.
double triangle_bin_mass(const std::function<double(double, double)>& density, double norm,
                         double xl, double xh, double yl, double yh, QuadratureSpec spec) {
  if (xh + yh <= kHistPi) return 0.0;
  auto f = [&](double x, double y) { return density(x, y) / norm; };
  auto ylo = [&](double x) { return std::max(yl, kHistPi - x); };
  auto yhi = [&](double) { return yh; };
  double lo_x = std::max(xl, kHistPi - yh);
  double split = kHistPi - yl;  // beyond this x the whole y-range is inside
  double mass = 0.0;
  if (split > lo_x && split < xh) {
    mass += integrate_2d(f, lo_x, split, ylo, yhi, spec);
    mass += integrate_2d(f, split, xh, ylo, yhi, spec);
  } else {
    mass += integrate_2d(f, lo_x, xh, ylo, yhi, spec);
  }
  return mass;
}

}  // namespace

std::vector<double> expected_bin_masses(const Histogram2D& hist,
                                        const std::function<double(double, double)>& density,
                                        double density_norm, QuadratureSpec spec) {
  int nxb = hist.nx(), nyb = hist.ny();
  std::vector<double> mass(static_cast<std::size_t>(nxb) * nyb, 0.0);
  for (int ix = 0; ix < nxb; ++ix) {
    double xl = hist.x_edges[ix], xh = hist.x_edges[ix + 1];
    for (int iy = 0; iy < nyb; ++iy) {
      double yl = hist.y_edges[iy], yh = hist.y_edges[iy + 1];
      double m;
      if (hist.domain_tag == HistogramDomain::ThetaTriangle) {
        m = triangle_bin_mass(density, density_norm, xl, xh, yl, yh, spec);
      } else {
        m = integrate_2d_rect([&](double x, double y) { return density(x, y) / density_norm; },
                              xl, xh, yl, yh, spec);
      }
      mass[static_cast<std::size_t>(ix) * nyb + iy] = m;
    }
  }
  return mass;
}

FitReport compare_histogram(const Histogram2D& hist,
                            const std::function<double(double, double)>& density,
                            double density_norm, QuadratureSpec spec) {
  if (hist.total <= 0) throw std::invalid_argument("compare_histogram: empty histogram");
  std::vector<double> mass = expected_bin_masses(hist, density, density_norm, spec);

  FitReport report;
  double total = static_cast<double>(hist.total);
  double pooled_expected = 0.0;
  double pooled_observed = 0.0;
  int kept = 0;
  double chi = 0.0;
  for (std::size_t i = 0; i < mass.size(); ++i) {
    double expected = mass[i] * total;
    double observed = static_cast<double>(hist.counts[i]);
    report.tv_distance += std::abs(observed / total - mass[i]);
    if (expected >= 5.0) {
      double d = observed - expected;
      chi += d * d / expected;
      ++kept;
    } else {
      pooled_expected += expected;
      pooled_observed += observed;
    }
  }
  report.tv_distance *= 0.5;
  if (kept == 0)
    throw std::runtime_error("compare_histogram: every bin below the pooling threshold");
  if (pooled_expected > 0.0 || pooled_observed > 0.0) {
    if (pooled_expected <= 0.0) {
      chi = std::numeric_limits<double>::infinity();
    } else {
      double d = pooled_observed - pooled_expected;
      chi += d * d / pooled_expected;
    }
    ++kept;
  }
  report.chi_square = chi;
  report.n_effective_bins = kept;
  report.dof = kept - 1;
  return report;
}

}  // namespace roughcomb
