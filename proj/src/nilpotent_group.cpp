#include "tamepres/nilpotent_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tamepres {

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("group exponent overflow");
  return r;
}

const std::vector<long long> kEmptyTail;

}  // namespace

bool word_vector_less(const std::vector<long long>& a,
                      const std::vector<long long>& b) {
  // Lexicographic on the letter sequences (generator, exponent), a proper
  // prefix coming first.
  std::size_t i = 0, j = 0;
  while (i < a.size() && a[i] == 0) ++i;
  while (j < b.size() && b[j] == 0) ++j;
  for (;;) {
    const bool ae = i >= a.size();
    const bool be = j >= b.size();
    if (ae || be) return !ae ? false : !be;
    if (i != j) return i < j;
    if (a[i] != b[j]) return a[i] < b[j];
    ++i;
    ++j;
    while (i < a.size() && a[i] == 0) ++i;
    while (j < b.size() && b[j] == 0) ++j;
  }
}

GroupSpec::GroupSpec(std::vector<int> ranks, std::vector<std::string> names,
                     std::vector<std::vector<long long>> tails, long long fuel)
    : ranks_(std::move(ranks)),
      names_(std::move(names)),
      tails_(std::move(tails)),
      fuel_(fuel) {
  gen_count_ = std::accumulate(ranks_.begin(), ranks_.end(), 0);
  offsets_.resize(ranks_.size());
  int off = 0;
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    offsets_[i] = off;
    off += ranks_[i];
  }
  gen_layer_.resize(gen_count_);
  for (int i = 1; i <= layer_count(); ++i)
    for (int j = 0; j < rank(i); ++j) gen_layer_[layer_offset(i) + j] = i;
  validate();
}

void GroupSpec::validate() const {
  if (ranks_.empty()) throw Error("group needs at least one layer");
  for (int r : ranks_)
    if (r <= 0) throw Error("layer ranks must be positive");
  const int n = gen_count_;
  if (static_cast<int>(names_.size()) != n)
    throw Error("generator name count does not match total rank");
  std::set<std::string> seen;
  for (const std::string& s : names_) {
    if (s.empty()) throw Error("empty generator name");
    if (!seen.insert(s).second) throw Error("duplicate generator name: " + s);
  }
  if (tails_.size() != static_cast<std::size_t>(n) * n)
    throw Error("commutation table has wrong size");
  if (fuel_ <= 0) throw Error("collection fuel must be positive");
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      const auto& t = tails_[static_cast<std::size_t>(g) * n + h];
      if (t.empty()) continue;
      if (g >= h)
        throw Error("commutation table entry on or below the diagonal");
      if (static_cast<int>(t.size()) != n)
        throw Error("tail exponent vector has wrong length");
      const int depth = std::max(gen_layer_[g], gen_layer_[h]);
      for (int j = 0; j < n; ++j)
        if (t[j] != 0 && gen_layer_[j] <= depth)
          throw Error("tail of [" + names_[h] + ", " + names_[g] +
                      "] is not supported strictly deeper");
    }
  }
}

const std::vector<long long>& GroupSpec::tail(int g, int h) const {
  const auto& t = tails_[static_cast<std::size_t>(g) * gen_count_ + h];
  return t.empty() ? kEmptyTail : t;
}

GroupElement GroupSpec::identity() const {
  return GroupElement{std::vector<long long>(gen_count_, 0)};
}

GroupElement GroupSpec::from_exponents(std::vector<long long> exps) const {
  if (static_cast<int>(exps.size()) != gen_count_)
    throw Error("exponent vector has wrong length");
  return GroupElement{std::move(exps)};
}

// Collection engine. Elements supported on generator indices >= m form a
// subgroup (tails point strictly deeper), which gives the recursion
//   (t^a a')(t^b b') = t^(a+b) (t^-b a' t^b) b'
// on the leading generator t = t_m. Conjugation by t_m is pushed onto the
// deeper generators through the table tails; the depth of the touched
// support increases strictly, so the recursion terminates on any table
// that passes validation. The fuel counter bounds the total step count.
class Collector {
 public:
  Collector(const GroupSpec& spec, long long fuel) : spec_(spec), fuel_(fuel) {}

  using Vec = std::vector<long long>;

  Vec mul_from(int m, const Vec& a, const Vec& b) {
    const int n = spec_.gen_count_;
    Vec result(n, 0);
    Vec left = a;
    Vec right = b;
    // Peel leading generators iteratively; recursion happens inside the
    // conjugation step.
    for (int g = m; g < n; ++g) {
      tick();
      result[g] = checked_add(left[g], right[g]);
      const long long shift = right[g];
      left[g] = 0;
      right[g] = 0;
      if (shift != 0) left = conj_pow(g, left, shift);
      if (is_zero_from(left, g + 1)) {
        for (int j = g + 1; j < n; ++j) result[j] = right[j];
        return result;
      }
      if (is_zero_from(right, g + 1)) {
        for (int j = g + 1; j < n; ++j) result[j] = left[j];
        return result;
      }
    }
    return result;
  }

  // t_g^-e x t_g^e for x supported strictly beyond g.
  Vec conj_pow(int g, Vec x, long long e) {
    const int s = e > 0 ? 1 : -1;
    for (long long step = 0; step != e; step += s) {
      if (acts_trivially(g, x)) return x;
      x = conj_step(g, x, s);
    }
    return x;
  }

  Vec inv_from(int m, const Vec& x) {
    const int n = spec_.gen_count_;
    tick();
    Vec result(n, 0);
    int g = m;
    while (g < n && x[g] == 0) ++g;
    if (g >= n) return result;
    result[g] = -x[g];
    Vec deeper = x;
    deeper[g] = 0;
    Vec tail = conj_pow(g, inv_from(g + 1, deeper), -x[g]);
    for (int j = g + 1; j < n; ++j) result[j] = tail[j];
    return result;
  }

  Vec pow_from(int m, Vec base, long long e) {
    const int n = spec_.gen_count_;
    if (e < 0) {
      base = inv_from(m, base);
      e = -e;
    }
    Vec result(n, 0);
    while (e > 0) {
      tick();
      if (e & 1) result = mul_from(m, result, base);
      e >>= 1;
      if (e > 0) base = mul_from(m, base, base);
    }
    return result;
  }

 private:
  void tick() {
    if (--fuel_ < 0)
      throw NonTerminatingCollection("collection fuel exhausted");
  }

  bool is_zero_from(const Vec& v, int m) const {
    for (int j = m; j < spec_.gen_count_; ++j)
      if (v[j] != 0) return false;
    return true;
  }

  // Conjugation by t_g fixes x when every supported generator commutes
  // with t_g; the common case for abelian blocks, where it saves a loop
  // of length |e|.
  bool acts_trivially(int g, const Vec& x) const {
    for (int j = g + 1; j < spec_.gen_count_; ++j)
      if (x[j] != 0 && !spec_.tail(g, j).empty()) return false;
    return true;
  }

  // One conjugation t_g^-s (.) t_g^s, s = +-1.
  Vec conj_step(int g, const Vec& x, int s) {
    const int n = spec_.gen_count_;
    Vec acc(n, 0);
    for (int j = g + 1; j < n; ++j) {
      if (x[j] == 0) continue;
      tick();
      acc = mul_from(g + 1, acc, pow_from(g + 1, conj_gen(g, j, s), x[j]));
    }
    return acc;
  }

  // t_g^-s t_j t_g^s as a normal form, j > g.
  Vec conj_gen(int g, int j, int s) {
    const int n = spec_.gen_count_;
    const Vec& tau = spec_.tail(g, j);
    Vec unit(n, 0);
    unit[j] = 1;
    if (tau.empty()) return unit;
    if (s > 0) {
      // t_g^-1 t_j t_g = t_j * tau; tau is strictly deeper, so the sum of
      // exponent vectors is already the normal form.
      for (int i = 0; i < n; ++i) unit[i] += tau[i];
      return unit;
    }
    // t_g t_j t_g^-1 = t_j * (t_g tau t_g^-1)^-1.
    Vec conj_tau = conj_pow(g, tau, -1);
    return mul_from(g + 1, unit, inv_from(g + 1, conj_tau));
  }

  const GroupSpec& spec_;
  long long fuel_;
};

GroupElement GroupSpec::normalize(const Word& w) const {
  if (!is_group_word(w)) throw Error("normalize expects a group word");
  Collector c(*this, fuel_);
  std::vector<long long> acc(gen_count_, 0);
  for (const Letter& l : w.letters) {
    if (l.exp == 0) continue;
    if (l.sym.index < 0 || l.sym.index >= gen_count_)
      throw Error("word uses an unknown generator index");
    std::vector<long long> unit(gen_count_, 0);
    unit[l.sym.index] = l.exp;
    acc = c.mul_from(0, acc, unit);
  }
  return GroupElement{std::move(acc)};
}

GroupElement GroupSpec::multiply(const GroupElement& a,
                                 const GroupElement& b) const {
  Collector c(*this, fuel_);
  return GroupElement{c.mul_from(0, a.exps, b.exps)};
}

GroupElement GroupSpec::inverse(const GroupElement& a) const {
  Collector c(*this, fuel_);
  return GroupElement{c.inv_from(0, a.exps)};
}

GroupElement GroupSpec::power(const GroupElement& a, long long e) const {
  Collector c(*this, fuel_);
  return GroupElement{c.pow_from(0, a.exps, e)};
}

GroupElement GroupSpec::commutator(const GroupElement& a,
                                   const GroupElement& b) const {
  return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

int GroupSpec::layer_of(const GroupElement& g) const {
  for (int j = 0; j < gen_count_; ++j)
    if (g.exps[j] != 0) return gen_layer_[j];
  return layer_count() + 1;
}

std::vector<long long> GroupSpec::theta(const GroupElement& g,
                                        int layer) const {
  if (layer < 1 || layer > layer_count()) throw Error("layer out of range");
  if (layer_of(g) < layer)
    throw NotInLayer("element is not in layer " + std::to_string(layer));
  const int off = layer_offset(layer);
  return std::vector<long long>(g.exps.begin() + off,
                                g.exps.begin() + off + rank(layer));
}

Word GroupSpec::ordered_word(const GroupElement& g) const {
  Word w;
  for (int j = 0; j < gen_count_; ++j)
    if (g.exps[j] != 0) w.letters.push_back({group_sym(j), g.exps[j]});
  return w;
}

std::vector<Word> GroupSpec::relators() const {
  std::vector<Word> out;
  for (int g = 0; g < gen_count_; ++g) {
    for (int h = g + 1; h < gen_count_; ++h) {
      Word w;
      w.letters = {{group_sym(h), -1},
                   {group_sym(g), -1},
                   {group_sym(h), 1},
                   {group_sym(g), 1}};
      const auto& tau = tail(g, h);
      if (!tau.empty()) {
        Word tw = inverse_word(ordered_word(GroupElement{tau}));
        w.letters.insert(w.letters.end(), tw.letters.begin(),
                         tw.letters.end());
      }
      out.push_back(free_reduce(w));
    }
  }
  return out;
}

}  // namespace tamepres
