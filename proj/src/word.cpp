#include "tamepres/word.hpp"

namespace tamepres {

Word free_reduce(const Word& w) {
  Word out;
  for (const Letter& l : w.letters) {
    if (l.exp == 0) continue;
    if (!out.letters.empty() && out.letters.back().sym == l.sym) {
      out.letters.back().exp += l.exp;
      if (out.letters.back().exp == 0) out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back({it->sym, -it->exp});
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return free_reduce(out);
}

bool is_group_word(const Word& w) {
  for (const Letter& l : w.letters)
    if (l.sym.kind != Symbol::Kind::Group) return false;
  return true;
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (w.letters[i].exp == 0) return false;
    if (i > 0 && w.letters[i - 1].sym == w.letters[i].sym) return false;
  }
  return true;
}

}  // namespace tamepres
