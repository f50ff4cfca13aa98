#include "tamepres/group_ring.hpp"

#include <sstream>

namespace tamepres {

RingElement RingElement::monomial(GroupElement q, mpz_class coeff) {
  RingElement r;
  if (coeff != 0) r.terms_.emplace(std::move(q), std::move(coeff));
  return r;
}

std::vector<GroupElement> RingElement::support() const {
  std::vector<GroupElement> s;
  s.reserve(terms_.size());
  for (const auto& [q, c] : terms_) s.push_back(q);
  return s;
}

mpz_class RingElement::coefficient(const GroupElement& q) const {
  auto it = terms_.find(q);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void RingElement::add_term(const GroupElement& q, const mpz_class& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(q, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

RingElement ring_one(const GroupSpec& spec) {
  return RingElement::monomial(spec.identity(), 1);
}

RingElement add(const RingElement& a, const RingElement& b) {
  RingElement r = a;
  for (const auto& [q, c] : b.terms()) r.add_term(q, c);
  return r;
}

RingElement negate(const RingElement& a) {
  RingElement r;
  for (const auto& [q, c] : a.terms()) r.add_term(q, -c);
  return r;
}

RingElement sub(const RingElement& a, const RingElement& b) {
  return add(a, negate(b));
}

RingElement mul(const GroupSpec& spec, const RingElement& a,
                const RingElement& b) {
  RingElement r;
  for (const auto& [qa, ca] : a.terms())
    for (const auto& [qb, cb] : b.terms())
      r.add_term(spec.multiply(qa, qb), ca * cb);
  return r;
}

RingElement scale_right(const GroupSpec& spec, const RingElement& a,
                        const GroupElement& q) {
  RingElement r;
  for (const auto& [qa, ca] : a.terms()) r.add_term(spec.multiply(qa, q), ca);
  return r;
}

RingElement scale(const RingElement& a, const mpz_class& c) {
  RingElement r;
  if (c == 0) return r;
  for (const auto& [q, ca] : a.terms()) r.add_term(q, ca * c);
  return r;
}

std::optional<mpq_class> v_chi(const GroupSpec& spec, const RingElement& lam,
                               const LayerCharacter& chi) {
  if (lam.is_zero()) return std::nullopt;  // +infinity
  std::optional<mpq_class> min;
  for (const auto& [q, c] : lam.terms()) {
    mpq_class v = evaluate_character(spec, chi, q);
    if (!min || v < *min) min = v;
  }
  return min;
}

std::string render_ring(const GroupSpec& spec, const RingElement& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [q, c] : a.terms()) {
    const bool neg = c < 0;
    const mpz_class mag = neg ? mpz_class(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    const Word w = spec.ordered_word(q);
    if (w.empty()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << " ";
      bool first_letter = true;
      for (const Letter& l : w.letters) {
        if (!first_letter) os << " ";
        first_letter = false;
        os << spec.generator_name(l.sym.index);
        if (l.exp != 1) os << "^" << l.exp;
      }
    }
    first = false;
  }
  return os.str();
}

}  // namespace tamepres
