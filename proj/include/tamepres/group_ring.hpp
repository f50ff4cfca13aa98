#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tamepres/character_geometry.hpp"
#include "tamepres/nilpotent_group.hpp"

namespace tamepres {

// Element of the integral group ring: a finite map from group elements to
// nonzero integer coefficients. The zero element has an empty term map.
class RingElement {
 public:
  using TermMap = std::map<GroupElement, mpz_class, GroupElementWordLess>;

  RingElement() = default;

  static RingElement monomial(GroupElement q, mpz_class coeff);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  std::vector<GroupElement> support() const;
  mpz_class coefficient(const GroupElement& q) const;

  void add_term(const GroupElement& q, const mpz_class& coeff);

  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.terms_ == b.terms_;
  }

 private:
  TermMap terms_;
};

RingElement ring_one(const GroupSpec& spec);
RingElement add(const RingElement& a, const RingElement& b);
RingElement negate(const RingElement& a);
RingElement sub(const RingElement& a, const RingElement& b);
RingElement mul(const GroupSpec& spec, const RingElement& a,
                const RingElement& b);
RingElement scale_right(const GroupSpec& spec, const RingElement& a,
                        const GroupElement& q);
RingElement scale(const RingElement& a, const mpz_class& c);

// Naive valuation extending the character: the minimum of chi over the
// support; nullopt encodes +infinity (the zero element). Every support
// element must lie in the character's layer subgroup.
std::optional<mpq_class> v_chi(const GroupSpec& spec, const RingElement& lam,
                               const LayerCharacter& chi);

std::string render_ring(const GroupSpec& spec, const RingElement& a);

}  // namespace tamepres
