#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tamepres/character_geometry.hpp"
#include "tamepres/group_ring.hpp"

namespace tamepres {

// a * element = 0, with the element supported in the layer subgroup.
struct Annihilator {
  int gen;
  int layer;
  RingElement element;
  friend bool operator==(const Annihilator&, const Annihilator&) = default;
};

// Defining relation a * element = 0 over the whole group ring.
struct GlobalRelator {
  int gen;
  RingElement element;
  friend bool operator==(const GlobalRelator&, const GlobalRelator&) = default;
};

struct ModuleSpec {
  std::vector<std::string> generators;
  std::vector<Annihilator> annihilators;
  std::vector<GlobalRelator> global_relators;
  friend bool operator==(const ModuleSpec&, const ModuleSpec&) = default;
};

void validate_module(const GroupSpec& spec, const ModuleSpec& mod);

// Certified identity a = a * lambda, obtained by pivoting an annihilator
// at a support element with coefficient +-1.
struct SelfExpression {
  int gen;
  int layer;
  RingElement lambda;
  GroupElement pivot;
  int pivot_sign;
  std::size_t source;  // index into ModuleSpec::annihilators
};

// One self-expression per unit-coefficient pivot of mu, in support order.
// Annihilators without a unit coefficient produce an empty list.
std::vector<SelfExpression> derive_self_expressions(
    const GroupSpec& spec, int gen, int layer, const RingElement& mu,
    std::size_t source = 0);

// Sufficient criterion for [chi] in Sigma^0: every module generator has a
// certificate lambda with v_chi(lambda) > 0.
bool sigma0_member(const GroupSpec& spec, const ModuleSpec& mod,
                   const LayerCharacter& chi,
                   const std::vector<SelfExpression>& certs);

// One self-expression per module generator plus the union of the theta
// images of their supports.
struct DiagonalCertificate {
  std::vector<std::size_t> expr_index;  // per module generator
  LatticeSet cone_set;
};

struct LayerResult {
  int layer = 0;
  std::vector<SelfExpression> expressions;
  std::vector<DiagonalCertificate> certificates;
  std::vector<int> gens_without_certs;
  CoverResult cover;
  bool certified = false;
};

struct TamenessReport {
  std::vector<LayerResult> layers;
  bool tame = false;
};

// Runs the layer-by-layer cover check: derive self-expressions from the
// layer's annihilators, form the diagonal certificate family (all
// combinations of one expression per generator, smaller supports first,
// capped), and decide the antipodal cover on the layer sphere. The
// verdict is "certified tame" or "not certified", never "not tame".
TamenessReport check_tame(const GroupSpec& spec, const ModuleSpec& mod,
                          std::size_t cert_cap = 64);

std::string render_tameness_report(const GroupSpec& spec,
                                   const ModuleSpec& mod,
                                   const TamenessReport& report);

}  // namespace tamepres
