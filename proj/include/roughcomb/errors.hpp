#pragma once

#include <stdexcept>
#include <string>

namespace roughcomb {

// Thrown when a comb has no unique, strictly admissible support configuration:
// exact ties (collinear or coplanar tips), a support point exactly at x = 0,
// or the hoop center exactly on a support chord.  Monte-Carlo drivers catch
// this and count the trial as degenerate.
class degenerate_error : public std::runtime_error {
 public:
  explicit degenerate_error(const std::string& what) : std::runtime_error(what) {}
};

// Geometric predicates treat values within this absolute tolerance as ties.
inline constexpr double kGeomTol = 1e-12;

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace roughcomb
