#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "tamepres/character_geometry.hpp"

namespace tamepres {

// Exhaustive certificate for the covering constant p0 of a lattice-set
// family: every x with p0 < |x|^2 <= scan bound moves strictly inward
// under some set of the family, and beyond the tail bound R* the margin
// estimate |x+y|^2 <= |x|^2 - 2c|x| + M^2 <= |x|^2 - 1 applies.
struct RadiusCert {
  int dim = 0;
  std::vector<LatticeSet> family;  // closed under negation
  mpq_class margin;                // c > 0 on the unit sphere
  long long max_norm2 = 0;         // M^2
  mpq_class tail_bound;            // R* = (M^2 + 1) / (2c)
  long long scan_bound2 = 0;       // ceil(R*)^2
  std::vector<std::vector<long long>> bad_points;
  long long p0 = 0;
};

// Certified positive lower bound c: for every unit u some L of the family
// has <u, y> >= c for all y in L. Works on the boundary of the unit cube
// by recursive box subdivision with exact per-box interval minima, then
// rescales to the unit sphere. The family must be closed under negation
// and its cones must cover the sphere.
mpq_class positivity_margin(const std::vector<LatticeSet>& family, int dim,
                            int max_depth = 40);

// Minimal p0 (the smallest value justified by the scan). Closes the
// family under negation before running.
RadiusCert compute_p0(const std::vector<LatticeSet>& family, int dim);

std::string render_radius_cert(const RadiusCert& cert);

}  // namespace tamepres
