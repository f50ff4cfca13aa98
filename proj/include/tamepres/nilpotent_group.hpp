#pragma once

#include <string>
#include <vector>

#include "tamepres/errors.hpp"
#include "tamepres/word.hpp"

namespace tamepres {

// Normal form of a group element: its exponent vector over the ordered
// generating set, layer 1 generators first. Two elements are equal iff
// their exponent vectors are.
struct GroupElement {
  std::vector<long long> exps;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// Orders exponent vectors like the ordered words they denote: the word
// with a letter at an earlier generator comes first, ties broken by
// ascending exponent. The empty word precedes everything.
bool word_vector_less(const std::vector<long long>& a,
                      const std::vector<long long>& b);

struct GroupElementWordLess {
  bool operator()(const GroupElement& a, const GroupElement& b) const {
    return word_vector_less(a.exps, b.exps);
  }
};

// Polycyclic presentation of a finitely generated nilpotent group with a
// chosen central series whose factors are free abelian of ranks n_1..n_k.
// Commutation is given by tails:  t_h t_g = t_g t_h * tail(g,h)  for
// g < h in the global generator order, each tail supported strictly
// deeper than max(layer(g), layer(h)). Values are immutable after
// construction and every operation is a pure function.
class GroupSpec {
 public:
  GroupSpec(std::vector<int> ranks, std::vector<std::string> names,
            std::vector<std::vector<long long>> tails,
            long long collection_fuel = 1'000'000);

  int layer_count() const { return static_cast<int>(ranks_.size()); }
  int rank(int layer) const { return ranks_.at(layer - 1); }
  int generator_count() const { return gen_count_; }
  int layer_offset(int layer) const { return offsets_.at(layer - 1); }
  int layer_of_generator(int gen) const { return gen_layer_.at(gen); }
  const std::string& generator_name(int gen) const { return names_.at(gen); }
  const std::vector<std::string>& generator_names() const { return names_; }
  long long collection_fuel() const { return fuel_; }

  // Tail of the pair g < h; empty vector means the generators commute.
  const std::vector<long long>& tail(int g, int h) const;

  GroupElement identity() const;
  GroupElement from_exponents(std::vector<long long> exps) const;

  // Collection from the left: the accumulated prefix is kept in normal
  // form while the letters of w are pushed through one at a time.
  GroupElement normalize(const Word& w) const;

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  GroupElement power(const GroupElement& a, long long e) const;
  GroupElement commutator(const GroupElement& a, const GroupElement& b) const;

  // Smallest i with g in Q_i; the identity reports k+1.
  int layer_of(const GroupElement& g) const;

  // Exponent block of the layer's generators; requires g in Q_layer.
  std::vector<long long> theta(const GroupElement& g, int layer) const;

  Word ordered_word(const GroupElement& g) const;

  // Polycyclic relators t_h^-1 t_g^-1 t_h t_g * tail(g,h)^-1, one per
  // unordered generator pair, in pair order.
  std::vector<Word> relators() const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.ranks_ == b.ranks_ && a.names_ == b.names_ && a.tails_ == b.tails_;
  }

 private:
  std::vector<int> ranks_;
  std::vector<std::string> names_;
  std::vector<int> offsets_;
  std::vector<int> gen_layer_;
  int gen_count_ = 0;
  // Dense pair table, index g * N + h for g < h; empty = trivial tail.
  std::vector<std::vector<long long>> tails_;
  long long fuel_;

  void validate() const;
  friend class Collector;
};

}  // namespace tamepres
