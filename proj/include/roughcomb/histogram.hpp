#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "roughcomb/quadrature.hpp"

namespace roughcomb {

enum class HistogramDomain { IntervalRect, ThetaTriangle };

// Uniform-bin 2D counting histogram.  For the interval law the domain is
// [-1,0]x[0,1]; for the hoop law it is the (theta1, theta2) square [0,pi]^2
// of which only the triangle theta1 + theta2 > pi is reachable.
struct Histogram2D {
  std::vector<double> x_edges;
  std::vector<double> y_edges;
  std::vector<std::int64_t> counts;  // row-major: counts[ix * ny + iy]
  std::int64_t total = 0;            // equals the sum of counts
  HistogramDomain domain_tag = HistogramDomain::IntervalRect;

  Histogram2D() = default;
  Histogram2D(int nx, int ny, double x_lo, double x_hi, double y_lo, double y_hi,
              HistogramDomain tag);

  int nx() const { return static_cast<int>(x_edges.size()) - 1; }
  int ny() const { return static_cast<int>(y_edges.size()) - 1; }

  void deposit(double x, double y);
  void merge(const Histogram2D& other);  // element-wise integer add
};

struct FitReport {
  double tv_distance = 0.0;
  double chi_square = 0.0;
  int dof = 0;
  int n_effective_bins = 0;
};

// Expected bin masses by quadrature of density/density_norm over each bin
// (clipped to the triangle for the ThetaTriangle domain), then total
// variation and a pooled chi-square: bins with expected count below 5 are
// pooled into one cell.  Throws std::runtime_error if every bin falls below
// the pooling threshold.
FitReport compare_histogram(const Histogram2D& hist,
                            const std::function<double(double, double)>& density,
                            double density_norm, QuadratureSpec spec = {1e-6, 1e-6, 40});

// The expected per-bin masses used by compare_histogram (sums to ~1).
std::vector<double> expected_bin_masses(const Histogram2D& hist,
                                        const std::function<double(double, double)>& density,
                                        double density_norm,
                                        QuadratureSpec spec = {1e-6, 1e-6, 40});

}  // namespace roughcomb
