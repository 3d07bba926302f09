#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gpd/groupoid.hpp"

namespace gpd {

enum class Builtin {
  Quadric4,     // four mutually skew lines on a quadric surface
  D4,           // the 16 lines of the D4 (Reye) configuration
  D4Sub6,       // the 6-line subconfiguration that already yields S3
  Penrose,      // ten skew lines carrying the 40+40 Penrose and quasi points
  PenroseHalf,  // the five-line spread carrying the 20 Penrose points
  Klein,        // ten skew lines carrying the 60 Klein points
  P4_25,        // 25-line orbit configuration in P^4
};

std::optional<Builtin> builtin_from_name(std::string_view name);
std::string builtin_name(Builtin b);
std::vector<std::string> builtin_names();

Configuration builtin(Builtin b);

// The distinguished P^1 parameter sets of the Penrose spread over
// Q[t]/(t^2+t+1): X/Y mark the Penrose points (lines 0-7 and 8-9), the tilde
// sets add the quasi-Penrose parameters.
struct PenroseParameterSets {
  std::vector<ProjPoint> x;
  std::vector<ProjPoint> y;
  std::vector<ProjPoint> x_tilde;
  std::vector<ProjPoint> y_tilde;
};
PenroseParameterSets penrose_parameter_sets();

// The six octahedral parameters over Q[i]/(i^2+1) marking the Klein points.
std::vector<ProjPoint> klein_parameter_set();

// Ambient marked points of a configuration: a*basis0 + b*basis1 for every
// line and marked parameter (a,b), deduplicated in first-seen order.
std::vector<ProjPoint> generate_marked_points(const Configuration& c);

// The 40 Penrose points and the 40 quasi-Penrose points of P^3.
std::vector<ProjPoint> penrose_points();
std::vector<ProjPoint> quasi_penrose_points();

struct MultiPoint {
  ProjPoint point;
  std::vector<int> lines;  // sorted incident line indices
};

// Pairwise intersection points lying on at least `multiplicity` lines,
// ordered by canonical coordinates.
std::vector<MultiPoint> multi_points(const Configuration& c, int multiplicity);

// Checks that the fixed projective change of coordinates carries the Penrose
// points onto the quasi-Penrose points as sets.
bool double_penrose_check();

}  // namespace gpd
