#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace tamepres {

// Alphabet of relator words: module generators and group generators.
struct Symbol {
  enum class Kind : std::uint8_t { Module = 0, Group = 1 };
  Kind kind;
  int index;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

inline Symbol module_sym(int i) { return {Symbol::Kind::Module, i}; }
inline Symbol group_sym(int i) { return {Symbol::Kind::Group, i}; }

struct Letter {
  Symbol sym;
  long long exp;
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Word over the mixed alphabet. Relator builders keep words freely
// reduced: exponents nonzero, adjacent symbols distinct.
struct Word {
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
  friend bool operator==(const Word&, const Word&) = default;
};

Word free_reduce(const Word& w);
Word inverse_word(const Word& w);
Word concat(const Word& a, const Word& b);

bool is_group_word(const Word& w);
bool is_freely_reduced(const Word& w);

}  // namespace tamepres
