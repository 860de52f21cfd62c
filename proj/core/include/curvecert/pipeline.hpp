#pragma once

// End-to-end certified derivations: every statement about rational points on
// the Fermat-quotient curves is replayed as a sequence of machine-checked
// steps, with externally established facts quarantined in an explicit
// assumption registry.

#include "curvecert/curves.hpp"
#include "curvecert/report.hpp"

#include <string>
#include <vector>

namespace curvecert::pipeline {

using curves::CurveModel;
using curves::HyperellipticModel;
using poly::Rat;

// Ids: C6, C7, C8, H7, H8, E27, E432, E64a4.
CurveModel builtin_curve(const std::string& id);
std::vector<std::string> builtin_curve_ids();

// Facts taken as input: five rank-zero statements plus two external lemmas.
std::vector<report::AssumedFact> assumption_registry();

struct FoundPoint {
  bool at_infinity = false;
  Rat x, y;

  bool operator<(const FoundPoint& o) const {
    if (at_infinity != o.at_infinity) return at_infinity;
    if (x != o.x) return x < o.x;
    return y < o.y;
  }
  bool operator==(const FoundPoint& o) const {
    return at_infinity == o.at_infinity && (at_infinity || (x == o.x && y == o.y));
  }
};

// Exhaustive search for points with height(x) = max(|num|, |den|) <= bound,
// plus the rational places at infinity; sorted, infinity first.
std::vector<FoundPoint> point_search(const HyperellipticModel& c, long bound);

// Caller-declared hypothesis for the conditional theorems: a primitive
// number field K of the given degree with E(K) = E(Q) for the relevant
// elliptic quotient.
struct FieldHypothesis {
  int degree = 4;
  bool primitive = true;
  bool elliptic_points_equal = true;
};

// Ids: fermat-map (takes n), C6-points, C7-points, C8-points, map-equal.
report::Report run_lemma(const std::string& id, int n = 0);
report::Report run_lemma(const std::string& id, int n, const std::vector<report::AssumedFact>& registry);

// Ids: F7-quartic, F8-quartic, F6, F8.
report::Report run_theorem(const std::string& id, const FieldHypothesis& hyp = {});
report::Report run_theorem(const std::string& id, const FieldHypothesis& hyp,
                           const std::vector<report::AssumedFact>& registry);

std::vector<std::string> lemma_ids();
std::vector<std::string> theorem_ids();

// Every lemma and theorem in order, merged into one report.
report::Report verify_all();

}  // namespace curvecert::pipeline
