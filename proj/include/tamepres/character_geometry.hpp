#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "tamepres/nilpotent_group.hpp"

namespace tamepres {

// A point of the layer sphere S(Q_i, Q_{i+1}): a nonzero rational vector
// in dimension n_i. The induced character sends q in Q_i to
// <coeffs, theta(q, layer)> and vanishes on Q_{i+1} by construction.
struct LayerCharacter {
  int layer;
  std::vector<mpq_class> coeffs;
};

mpq_class evaluate_character(const GroupSpec& spec, const LayerCharacter& chi,
                             const GroupElement& g);

// Finite set of lattice points, kept sorted and deduplicated.
struct LatticeSet {
  int dim = 0;
  std::vector<std::vector<long long>> points;
  std::string provenance;
};

LatticeSet make_lattice_set(int dim, std::vector<std::vector<long long>> pts,
                            std::string provenance = {});
LatticeSet negate_lattice_set(const LatticeSet& L);
std::string render_lattice_set(const LatticeSet& L);

// True iff every inner product <u, y>, y in L, is strictly positive.
bool cone_contains(const LatticeSet& L, const std::vector<mpq_class>& u);

// The open cone attached to a lattice set; membership is strict.
struct ConeCert {
  LatticeSet support;
  bool contains(const std::vector<mpq_class>& u) const {
    return cone_contains(support, u);
  }
};

struct CoverResult {
  bool covered = false;
  std::vector<mpq_class> witness;  // uncovered direction when !covered
  std::string to_string() const;
};

// Decides whether the cones of the family, together with their antipodes,
// cover the whole sphere S^{n-1}. The family is closed under negation,
// every choice of one point per set yields a homogeneous system
// <u, y_L> <= 0, and each system is tested for a nonzero rational
// solution by exact feasibility (one coordinate pinned to +-1). Any
// solution is an uncovered direction; if all systems are infeasible the
// sphere is covered.
CoverResult antipodal_cover(const std::vector<LatticeSet>& family, int dim);

std::string render_rational_vector(const std::vector<mpq_class>& u);

}  // namespace tamepres
