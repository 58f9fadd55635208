#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace roughcomb {

// splitmix64 step; the standard finalizer makes nearby seeds independent.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Small deterministic RNG stream.  Each Monte-Carlo trial gets its own
// stream derived from (master_seed, trial_index), so results do not depend
// on execution order or thread count.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() { return splitmix64_next(state_); }

  // uniform in [0, 1)
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // uniform in (0, 1]
  double next_double_pos() { return 1.0 - next_double(); }

  // standard normal (Box-Muller, no state carried between calls)
  double next_normal() {
    double u1 = next_double_pos();
    double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

 private:
  std::uint64_t state_;
};

inline RngStream trial_stream(std::uint64_t master_seed, std::uint64_t trial_index) {
  std::uint64_t s = master_seed;
  std::uint64_t a = splitmix64_next(s);
  s ^= trial_index + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2);
  return RngStream(splitmix64_next(s));
}

// Gamma(shape, 1) by Marsaglia-Tsang squeeze; handles shape < 1 via boost.
inline double sample_gamma(RngStream& rng, double shape) {
  if (shape < 1.0) {
    double g = sample_gamma(rng, shape + 1.0);
    return g * std::pow(rng.next_double_pos(), 1.0 / shape);
  }
  double d = shape - 1.0 / 3.0;
  double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = rng.next_normal();
    double v = 1.0 + c * x;
    if (v <= 0.0) continue;
    v = v * v * v;
    double u = rng.next_double_pos();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

// Tooth-height law on [0, 1].
struct HeightDistribution {
  enum class Kind { Uniform01, Beta, Triangular };

  Kind kind = Kind::Uniform01;
  double alpha = 1.0;  // Beta parameters
  double beta = 1.0;
  double mode = 0.5;  // Triangular mode

  static HeightDistribution uniform01() { return {}; }

  static HeightDistribution beta_ab(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw std::invalid_argument("beta parameters must be positive");
    HeightDistribution d;
    d.kind = Kind::Beta;
    d.alpha = a;
    d.beta = b;
    return d;
  }

  static HeightDistribution triangular(double m) {
    if (!(m >= 0.0 && m <= 1.0)) throw std::invalid_argument("triangular mode must be in [0,1]");
    HeightDistribution d;
    d.kind = Kind::Triangular;
    d.mode = m;
    return d;
  }

  double sample(RngStream& rng) const {
    switch (kind) {
      case Kind::Uniform01:
        return rng.next_double();
      case Kind::Beta: {
        double x = sample_gamma(rng, alpha);
        double y = sample_gamma(rng, beta);
        return x / (x + y);
      }
      case Kind::Triangular: {
        double u = rng.next_double();
        if (u < mode) return std::sqrt(u * mode);
        return 1.0 - std::sqrt((1.0 - u) * (1.0 - mode));
      }
    }
    return 0.0;  // unreachable
  }
};

}  // namespace roughcomb
