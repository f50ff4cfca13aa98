#include "tamepres/verifier.hpp"

#include <algorithm>
#include <sstream>

#include "tamepres/group_ring.hpp"

namespace tamepres {

namespace {

bool is_prime(long long m) {
  if (m < 2) return false;
  for (long long d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

std::uint32_t mod_reduce(const mpz_class& c, long long m) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(m));
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t mod_reduce_ll(long long c, long long m) {
  long long r = c % m;
  if (r < 0) r += m;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mod_inverse(std::uint32_t a, long long m) {
  // m is prime; Fermat.
  std::uint64_t result = 1, base = a % m, e = m - 2;
  while (e) {
    if (e & 1) result = result * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

FiniteModel::FiniteModel(GroupSpec spec, ModuleSpec mod, long long coeff_mod,
                         long long quot)
    : spec_(std::move(spec)), mod_(std::move(mod)), m_(coeff_mod), n_(quot) {
  if (m_ < 2) throw Error("coefficient modulus must be at least 2");
  if (!is_prime(m_))
    throw Error("coefficient modulus must be prime for exact row reduction");
  if (n_ < 2) throw Error("quotient parameter must be at least 2");
  validate_module(spec_, mod_);
  order_ = 1;
  for (int g = 0; g < spec_.generator_count(); ++g) {
    order_ *= n_;
    if (order_ > 2'000'000) throw Error("finite model is too large");
  }
  free_dim_ = mod_.generators.size() * static_cast<std::size_t>(order_);
  check_quotient_valid();
  build_row_space();
}

std::vector<long long> FiniteModel::reduce(const GroupElement& g) const {
  std::vector<long long> r(g.exps.size());
  for (std::size_t j = 0; j < g.exps.size(); ++j)
    r[j] = ((g.exps[j] % n_) + n_) % n_;
  return r;
}

std::size_t FiniteModel::element_index(
    const std::vector<long long>& reduced) const {
  std::size_t idx = 0;
  for (std::size_t j = reduced.size(); j-- > 0;)
    idx = idx * static_cast<std::size_t>(n_) +
          static_cast<std::size_t>(reduced[j]);
  return idx;
}

GroupElement FiniteModel::lift(const std::vector<long long>& reduced) const {
  return GroupElement{reduced};
}

std::vector<long long> FiniteModel::mul_generator(
    const std::vector<long long>& state, int gen, long long e) const {
  std::vector<long long> unit(spec_.generator_count(), 0);
  unit[gen] = e;
  return reduce(spec_.multiply(lift(state), GroupElement{std::move(unit)}));
}

const std::vector<std::size_t>& FiniteModel::permutation(int gen,
                                                         long long e) const {
  const long long er = ((e % n_) + n_) % n_;
  auto key = std::make_pair(gen, er);
  // Map nodes are stable, so the reference stays valid after unlocking.
  std::lock_guard<std::mutex> lock(perm_mutex_);
  auto it = perm_cache_.find(key);
  if (it != perm_cache_.end()) return it->second;
  std::vector<std::size_t> perm(static_cast<std::size_t>(order_));
  std::vector<long long> digits(spec_.generator_count(), 0);
  for (std::size_t idx = 0; idx < perm.size(); ++idx) {
    std::size_t rem = idx;
    for (int j = 0; j < spec_.generator_count(); ++j) {
      digits[j] = static_cast<long long>(rem % n_);
      rem /= n_;
    }
    perm[idx] = element_index(mul_generator(digits, gen, er));
  }
  return perm_cache_.emplace(key, std::move(perm)).first->second;
}

std::vector<std::uint32_t> FiniteModel::act(
    const std::vector<std::uint32_t>& v, int gen, long long e) const {
  const auto& perm = permutation(gen, e);
  std::vector<std::uint32_t> out(v.size(), 0);
  const std::size_t ord = algebra_dim();
  for (std::size_t a = 0; a < mod_.generators.size(); ++a)
    for (std::size_t i = 0; i < ord; ++i)
      out[a * ord + perm[i]] = v[a * ord + i];
  return out;
}

std::vector<std::uint32_t> FiniteModel::reduce_module(
    std::vector<std::uint32_t> v) const {
  const std::uint64_t m = static_cast<std::uint64_t>(m_);
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const std::size_t lead = basis_lead_[r];
    const std::uint64_t factor = v[lead];
    if (factor == 0) continue;
    for (std::size_t j = lead; j < v.size(); ++j) {
      if (basis_[r][j] == 0) continue;
      std::uint64_t sub = factor * basis_[r][j] % m;
      v[j] = static_cast<std::uint32_t>((v[j] + m - sub) % m);
    }
  }
  return v;
}

void FiniteModel::build_row_space() {
  // Row space of a * mu * g over all relators and group elements, rows in
  // echelon form (leading entry 1, increasing lead columns).
  auto add_row = [&](std::vector<std::uint32_t> row) {
    row = reduce_module(std::move(row));
    std::size_t lead = 0;
    while (lead < row.size() && row[lead] == 0) ++lead;
    if (lead == row.size()) return;
    const std::uint64_t inv = mod_inverse(row[lead], m_);
    for (auto& x : row)
      x = static_cast<std::uint32_t>(inv * x % static_cast<std::uint64_t>(m_));
    // Insert keeping leads increasing.
    std::size_t at = 0;
    while (at < basis_lead_.size() && basis_lead_[at] < lead) ++at;
    basis_.insert(basis_.begin() + at, std::move(row));
    basis_lead_.insert(basis_lead_.begin() + at, lead);
    ++rank_;
  };

  auto add_relator_rows = [&](int gen, const RingElement& mu) {
    const std::size_t ord = algebra_dim();
    std::vector<long long> digits(spec_.generator_count(), 0);
    for (std::size_t idx = 0; idx < ord; ++idx) {
      std::size_t rem = idx;
      for (int j = 0; j < spec_.generator_count(); ++j) {
        digits[j] = static_cast<long long>(rem % n_);
        rem /= n_;
      }
      std::vector<std::uint32_t> row(free_dim_, 0);
      bool nonzero = false;
      for (const auto& [q, c] : mu.terms()) {
        const std::uint32_t cm = mod_reduce(c, m_);
        if (cm == 0) continue;
        const auto prod = reduce(spec_.multiply(q, lift(digits)));
        const std::size_t col = coord(gen, element_index(prod));
        row[col] = static_cast<std::uint32_t>(
            (row[col] + cm) % static_cast<std::uint32_t>(m_));
        nonzero = true;
      }
      if (nonzero) add_row(std::move(row));
    }
  };

  for (const auto& ann : mod_.annihilators)
    add_relator_rows(ann.gen, ann.element);
  for (const auto& rel : mod_.global_relators)
    add_relator_rows(rel.gen, rel.element);
}

void FiniteModel::check_quotient_valid() const {
  // Exponent reduction must be representative-independent: shifting any
  // argument exponent by the quotient parameter cannot change the reduced
  // product. Spot-checked on a deterministic sample.
  const int n = spec_.generator_count();
  std::vector<std::vector<long long>> sample;
  sample.emplace_back(n, 0);
  for (int g = 0; g < n; ++g) {
    std::vector<long long> e(n, 0);
    e[g] = 1;
    sample.push_back(e);
    for (int h = g + 1; h < n; ++h) {
      std::vector<long long> f(n, 0);
      f[g] = 1;
      f[h] = 2;
      sample.push_back(f);
    }
  }
  for (const auto& x : sample) {
    for (const auto& y : sample) {
      const auto base =
          reduce(spec_.multiply(GroupElement{x}, GroupElement{y}));
      for (int r = 0; r < n; ++r) {
        std::vector<long long> xs = x;
        xs[r] += n_;
        if (reduce(spec_.multiply(GroupElement{xs}, GroupElement{y})) != base)
          throw NonLinearTails(
              "exponent reduction is not a congruence for this group");
        std::vector<long long> ys = y;
        ys[r] += n_;
        if (reduce(spec_.multiply(GroupElement{x}, GroupElement{ys})) != base)
          throw NonLinearTails(
              "exponent reduction is not a congruence for this group");
      }
    }
  }
  // All defining relators of the group must die in the quotient.
  for (const Word& rel : spec_.relators()) {
    std::vector<long long> state(n, 0);
    for (const Letter& l : rel.letters)
      state = mul_generator(state, l.sym.index, l.exp);
    if (std::any_of(state.begin(), state.end(),
                    [](long long v) { return v != 0; }))
      throw NonLinearTails("group relator does not vanish in the quotient");
  }
}

FiniteModel build_finite_model(const GroupSpec& spec, const ModuleSpec& mod,
                               long long coeff_mod, long long quot) {
  return FiniteModel(spec, mod, coeff_mod, quot);
}

bool ring_identity_check(const GroupSpec& spec, const SelfExpression& se,
                         const RingElement& mu) {
  const RingElement lhs =
      scale_right(spec, sub(ring_one(spec), se.lambda), se.pivot);
  const RingElement rhs = scale(mu, se.pivot_sign);
  return lhs == rhs;
}

VerifyReport verify_presentation(const Presentation& p, const FiniteModel& fm) {
  std::vector<std::string> expected = fm.module_spec().generators;
  for (int g = 0; g < fm.group().generator_count(); ++g)
    expected.push_back(fm.group().generator_name(g));
  if (p.generator_names != expected)
    throw Error("presentation generators do not match the model's specs");

  VerifyReport report;
  const std::size_t identity_idx = fm.element_index(
      std::vector<long long>(fm.group().generator_count(), 0));

  std::map<RelOrigin, std::size_t> family_pos;
  for (RelOrigin o :
       {RelOrigin::RA, RelOrigin::K0, RelOrigin::C, RelOrigin::RQ}) {
    family_pos[o] = report.families.size();
    report.families.push_back({o, 0, 0});
  }

  std::map<RelOrigin, std::size_t> index_in_family;
  for (const auto& rel : p.relators) {
    auto& fam = report.families[family_pos[rel.origin]];
    const std::size_t idx = index_in_family[rel.origin]++;
    ++fam.count;

    std::vector<long long> state(fm.group().generator_count(), 0);
    std::vector<std::uint32_t> v(fm.free_dim(), 0);
    for (const Letter& l : rel.word.letters) {
      if (l.sym.kind == Symbol::Kind::Group) {
        state = fm.mul_generator(state, l.sym.index, l.exp);
        v = fm.act(v, l.sym.index, l.exp);
      } else {
        const std::size_t c = fm.coord(l.sym.index, identity_idx);
        v[c] = static_cast<std::uint32_t>(
            (v[c] + mod_reduce_ll(l.exp, fm.coeff_mod())) %
            static_cast<std::uint32_t>(fm.coeff_mod()));
      }
    }
    const bool group_ok = std::all_of(state.begin(), state.end(),
                                      [](long long x) { return x == 0; });
    const auto residue = fm.reduce_module(std::move(v));
    const bool module_ok = std::all_of(residue.begin(), residue.end(),
                                       [](std::uint32_t x) { return x == 0; });
    if (group_ok && module_ok) {
      ++fam.passed;
    } else {
      report.failures.push_back(
          {rel.origin, idx, group_ok ? std::vector<long long>{} : state,
           module_ok ? std::vector<std::uint32_t>{} : residue});
    }
  }
  report.ok = report.failures.empty();
  return report;
}

void require_verified(const VerifyReport& report) {
  if (report.ok) return;
  const auto& f = report.failures.front();
  throw RelatorFails("relator " + std::string(origin_name(f.origin)) + "[" +
                         std::to_string(f.index + 1) + "] does not hold in the "
                         "finite model",
                     origin_name(f.origin), f.index);
}

std::string render_verify_report(const VerifyReport& report,
                                 const FiniteModel& fm) {
  std::ostringstream os;
  os << "model: mod=" << fm.coeff_mod() << " quot=" << fm.quot()
     << " group-order=" << fm.group_order()
     << " algebra-dim=" << fm.algebra_dim()
     << " module-dim=" << fm.module_dim() << "\n";
  for (const auto& fam : report.families)
    os << origin_name(fam.origin) << ": " << fam.passed << "/" << fam.count
       << " pass\n";
  for (const auto& f : report.failures) {
    os << "FAIL " << origin_name(f.origin) << "[" << (f.index + 1) << "]:";
    if (!f.group_residue.empty()) {
      os << " group residue=(";
      for (std::size_t j = 0; j < f.group_residue.size(); ++j) {
        if (j) os << ",";
        os << f.group_residue[j];
      }
      os << ")";
    }
    if (!f.module_residue.empty()) {
      os << " module residue=[";
      std::size_t shown = 0;
      for (std::size_t c = 0; c < f.module_residue.size() && shown < 8; ++c) {
        if (f.module_residue[c] == 0) continue;
        if (shown) os << " ";
        os << c << ":" << f.module_residue[c];
        ++shown;
      }
      std::size_t total = 0;
      for (auto x : f.module_residue) total += x != 0;
      if (total > shown) os << " ...";
      os << "]";
    }
    os << "\n";
  }
  os << "verdict: "
     << (report.ok ? "all relators pass"
                   : std::to_string(report.failures.size()) +
                         " relator(s) fail")
     << "\n";
  return os.str();
}

}  // namespace tamepres
