#include "tamepres/tameness.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace tamepres {

namespace {

std::string render_group_element(const GroupSpec& spec, const GroupElement& g) {
  const Word w = spec.ordered_word(g);
  if (w.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const Letter& l : w.letters) {
    if (!first) os << " ";
    first = false;
    os << spec.generator_name(l.sym.index);
    if (l.exp != 1) os << "^" << l.exp;
  }
  return os.str();
}

}  // namespace

void validate_module(const GroupSpec& spec, const ModuleSpec& mod) {
  if (mod.generators.empty()) throw Error("module needs at least one generator");
  std::set<std::string> seen;
  for (const auto& name : mod.generators) {
    if (name.empty()) throw Error("empty module generator name");
    if (!seen.insert(name).second)
      throw Error("duplicate module generator name: " + name);
  }
  const int agens = static_cast<int>(mod.generators.size());
  for (const auto& ann : mod.annihilators) {
    if (ann.gen < 0 || ann.gen >= agens)
      throw Error("annihilator references an unknown module generator");
    if (ann.layer < 1 || ann.layer > spec.layer_count())
      throw Error("annihilator layer out of range");
    for (const auto& q : ann.element.support())
      if (spec.layer_of(q) < ann.layer)
        throw NotInLayer("annihilator support leaves layer " +
                         std::to_string(ann.layer));
  }
  for (const auto& rel : mod.global_relators)
    if (rel.gen < 0 || rel.gen >= agens)
      throw Error("relator references an unknown module generator");
}

std::vector<SelfExpression> derive_self_expressions(const GroupSpec& spec,
                                                    int gen, int layer,
                                                    const RingElement& mu,
                                                    std::size_t source) {
  if (mu.is_zero()) throw ZeroAnnihilator("annihilator is zero");
  std::vector<SelfExpression> out;
  for (const auto& [q0, coeff] : mu.terms()) {
    if (coeff != 1 && coeff != -1) continue;
    const int sign = coeff == 1 ? 1 : -1;
    // a mu = 0 pivoted at q0:  a = a * (-sign (mu - sign q0) q0^-1).
    RingElement rest = sub(mu, RingElement::monomial(q0, coeff));
    RingElement lambda =
        scale(scale_right(spec, rest, spec.inverse(q0)), -sign);
    out.push_back(SelfExpression{gen, layer, std::move(lambda), q0, sign,
                                 source});
  }
  return out;
}

bool sigma0_member(const GroupSpec& spec, const ModuleSpec& mod,
                   const LayerCharacter& chi,
                   const std::vector<SelfExpression>& certs) {
  bool all_positive = true;
  for (int g = 0; g < static_cast<int>(mod.generators.size()); ++g) {
    bool has_cert = false;
    bool positive = false;
    for (const auto& se : certs) {
      if (se.gen != g || se.layer != chi.layer) continue;
      has_cert = true;
      const auto v = v_chi(spec, se.lambda, chi);
      if (v && *v > 0) {
        positive = true;
        break;
      }
    }
    if (!has_cert)
      throw MissingGenerator("no certificate for module generator " +
                             mod.generators[g]);
    if (!positive) all_positive = false;
  }
  return all_positive;
}

namespace {

std::size_t support_size_of_choice(
    const std::vector<std::vector<SelfExpression>>& per_gen,
    const std::vector<std::size_t>& choice) {
  std::size_t total = 0;
  for (std::size_t g = 0; g < choice.size(); ++g)
    total += per_gen[g][choice[g]].lambda.term_count();
  return total;
}

}  // namespace

TamenessReport check_tame(const GroupSpec& spec, const ModuleSpec& mod,
                          std::size_t cert_cap) {
  validate_module(spec, mod);
  const int agens = static_cast<int>(mod.generators.size());
  TamenessReport report;
  report.tame = true;

  for (int layer = 1; layer <= spec.layer_count(); ++layer) {
    LayerResult lr;
    lr.layer = layer;
    const int dim = spec.rank(layer);

    std::vector<std::vector<SelfExpression>> per_gen(agens);
    for (std::size_t ai = 0; ai < mod.annihilators.size(); ++ai) {
      const auto& ann = mod.annihilators[ai];
      if (ann.layer != layer) continue;
      auto exprs =
          derive_self_expressions(spec, ann.gen, layer, ann.element, ai);
      for (auto& e : exprs) per_gen[ann.gen].push_back(std::move(e));
    }
    std::vector<std::size_t> base(agens, 0);
    for (int g = 0; g < agens; ++g) {
      std::stable_sort(per_gen[g].begin(), per_gen[g].end(),
                       [](const SelfExpression& a, const SelfExpression& b) {
                         return a.lambda.term_count() < b.lambda.term_count();
                       });
      base[g] = lr.expressions.size();
      for (const auto& e : per_gen[g]) lr.expressions.push_back(e);
      if (per_gen[g].empty()) lr.gens_without_certs.push_back(g);
    }

    if (!lr.gens_without_certs.empty()) {
      std::vector<mpq_class> w(dim, 0);
      w[0] = 1;
      lr.cover = CoverResult{false, std::move(w)};
      lr.certified = false;
      report.tame = false;
      report.layers.push_back(std::move(lr));
      continue;
    }

    // All combinations of one expression per generator, smaller total
    // supports first, truncated at the cap.
    std::size_t combos = 1;
    for (int g = 0; g < agens; ++g) {
      combos *= per_gen[g].size();
      if (combos > 100000)
        throw Error("too many certificate combinations in layer " +
                    std::to_string(layer));
    }
    std::vector<std::vector<std::size_t>> choices;
    choices.reserve(combos);
    std::vector<std::size_t> choice(agens, 0);
    for (;;) {
      choices.push_back(choice);
      int g = 0;
      while (g < agens) {
        if (++choice[g] < per_gen[g].size()) break;
        choice[g] = 0;
        ++g;
      }
      if (g == agens) break;
    }
    std::stable_sort(choices.begin(), choices.end(),
                     [&](const auto& a, const auto& b) {
                       const auto sa = support_size_of_choice(per_gen, a);
                       const auto sb = support_size_of_choice(per_gen, b);
                       if (sa != sb) return sa < sb;
                       return a < b;
                     });
    if (choices.size() > cert_cap) choices.resize(cert_cap);

    std::vector<LatticeSet> family;
    for (std::size_t j = 0; j < choices.size(); ++j) {
      DiagonalCertificate cert;
      std::vector<std::vector<long long>> pts;
      for (int g = 0; g < agens; ++g) {
        const std::size_t local = choices[j][g];
        cert.expr_index.push_back(base[g] + local);
        for (const auto& q : per_gen[g][local].lambda.support())
          pts.push_back(spec.theta(q, layer));
      }
      cert.cone_set =
          make_lattice_set(dim, std::move(pts), "j=" + std::to_string(j + 1));
      family.push_back(cert.cone_set);
      lr.certificates.push_back(std::move(cert));
    }

    lr.cover = antipodal_cover(family, dim);
    lr.certified = lr.cover.covered;
    if (!lr.certified) report.tame = false;
    report.layers.push_back(std::move(lr));
  }
  return report;
}

std::string render_tameness_report(const GroupSpec& spec,
                                   const ModuleSpec& mod,
                                   const TamenessReport& report) {
  std::ostringstream os;
  os << "group: k=" << spec.layer_count() << " ranks=[";
  for (int i = 1; i <= spec.layer_count(); ++i)
    os << (i > 1 ? " " : "") << spec.rank(i);
  os << "] gens=[";
  for (int g = 0; g < spec.generator_count(); ++g)
    os << (g > 0 ? " " : "") << spec.generator_name(g);
  os << "]\n";
  os << "module: gens=[";
  for (std::size_t g = 0; g < mod.generators.size(); ++g)
    os << (g > 0 ? " " : "") << mod.generators[g];
  os << "] annihilators=" << mod.annihilators.size()
     << " global-relators=" << mod.global_relators.size() << "\n";

  for (const auto& lr : report.layers) {
    os << "layer " << lr.layer << ": rank=" << spec.rank(lr.layer) << "\n";
    std::size_t ann_count = 0;
    for (const auto& ann : mod.annihilators)
      if (ann.layer == lr.layer) ++ann_count;
    os << "  annihilators: " << ann_count << "\n";
    os << "  self-expressions: " << lr.expressions.size() << "\n";
    for (std::size_t e = 0; e < lr.expressions.size(); ++e) {
      const auto& se = lr.expressions[e];
      os << "    [" << (e + 1) << "] gen=" << mod.generators[se.gen]
         << " pivot=" << render_group_element(spec, se.pivot)
         << " sign=" << (se.pivot_sign > 0 ? "+" : "-")
         << " lambda=" << render_ring(spec, se.lambda) << "\n";
    }
    if (!lr.gens_without_certs.empty()) {
      os << "  generators without certificates:";
      for (int g : lr.gens_without_certs) os << " " << mod.generators[g];
      os << "\n";
    }
    os << "  diagonal certificates: " << lr.certificates.size() << "\n";
    for (std::size_t j = 0; j < lr.certificates.size(); ++j) {
      const auto& cert = lr.certificates[j];
      os << "    j=" << (j + 1) << ": certs[";
      for (std::size_t g = 0; g < cert.expr_index.size(); ++g) {
        if (g) os << " ";
        os << mod.generators[g] << "<-" << (cert.expr_index[g] + 1);
      }
      os << "] L=" << render_lattice_set(cert.cone_set) << "\n";
    }
    os << "  cover: " << lr.cover.to_string() << "\n";
  }
  os << "verdict: " << (report.tame ? "certified tame" : "not certified")
     << "\n";
  return os.str();
}

}  // namespace tamepres
