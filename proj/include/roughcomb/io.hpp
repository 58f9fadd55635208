#pragma once

#include <iosfwd>
#include <string>

#include "roughcomb/experiment.hpp"

namespace roughcomb {

// Shortest round-trip decimal form of a double ('.' separator, no locale).
std::string format_double(double v);

// Flag-style spellings shared by the CLI and the JSON manifest.
std::string kind_to_string(CombKind kind);
CombKind kind_from_string(const std::string& s);
std::string placement_to_string(LinePlacementMode mode);
LinePlacementMode placement_from_string(const std::string& s);
std::string dist_to_string(const HeightDistribution& dist);
HeightDistribution dist_from_string(const std::string& s);  // uniform | beta:a,b | triangular:m

// CSV writers.  All files use '\n' newlines, UTF-8, a header row, and
// shortest round-trip float formatting, so identical inputs produce
// byte-identical files.
void write_density_interval_csv(std::ostream& os, int grid);
void write_density_circle_csv(std::ostream& os, int grid);
void write_pstar_csv(std::ostream& os, CombKind kind, int steps);
void write_histogram_csv(std::ostream& os, const ExperimentResult& result);

// RunManifest <-> JSON (lossless round-trip, including the 64-bit seed).
std::string manifest_to_json(const RunManifest& m, const FitReport* fit = nullptr,
                             std::int64_t degenerate_count = -1);
RunManifest manifest_from_json(const std::string& text);

// Debug dump of a comb (index, position-or-angle, height).
void write_comb_csv(std::ostream& os, const LineComb& comb);
void write_comb_csv(std::ostream& os, const CircularComb& comb);

}  // namespace roughcomb
