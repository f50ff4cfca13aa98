#include "tamepres/presenter.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace tamepres {

const char* origin_name(RelOrigin o) {
  switch (o) {
    case RelOrigin::RA: return "RA";
    case RelOrigin::K0: return "K0";
    case RelOrigin::C: return "C";
    case RelOrigin::RQ: return "RQ";
  }
  return "?";
}

namespace {

void enumerate_ball_lex(long long p0, int dim, std::vector<long long>& cur,
                        int coord, long long used,
                        std::vector<std::vector<long long>>& out) {
  if (coord == dim) {
    out.push_back(cur);
    return;
  }
  long long r = 0;
  while ((r + 1) * (r + 1) <= p0 - used) ++r;
  for (long long v = -r; v <= r; ++v) {
    cur[coord] = v;
    enumerate_ball_lex(p0, dim, cur, coord + 1, used + v * v, out);
  }
  cur[coord] = 0;
}

std::vector<Word> dedupe_nonempty(const std::vector<Word>& in) {
  std::vector<Word> out;
  for (const Word& w : in) {
    if (w.empty()) continue;
    if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
  }
  return out;
}

}  // namespace

std::vector<std::vector<long long>> ball_points(long long p0, int dim) {
  if (p0 < 0) throw Error("ball radius must be nonnegative");
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur(dim, 0);
  enumerate_ball_lex(p0, dim, cur, 0, 0, out);
  return out;
}

std::vector<Word> build_Vi(const GroupSpec& spec, long long p0, int layer) {
  const int dim = spec.rank(layer);
  const int off = spec.layer_offset(layer);
  std::vector<Word> out;
  for (const auto& m : ball_points(p0, dim)) {
    Word w;
    for (int j = 0; j < dim; ++j)
      if (m[j] != 0) w.letters.push_back({group_sym(off + j), m[j]});
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<Word> build_W(const std::vector<std::vector<Word>>& vs) {
  if (vs.empty()) throw Error("need at least one layer");
  std::vector<Word> out{Word{}};
  for (const auto& vi : vs) {
    std::vector<Word> next;
    next.reserve(out.size() * vi.size());
    for (const Word& head : out)
      for (const Word& v : vi) next.push_back(concat(head, v));
    out = std::move(next);
  }
  return out;
}

std::vector<Word> relators_K0(int module_gen_count,
                              const std::vector<Word>& w) {
  std::vector<Word> out;
  for (int a = 0; a < module_gen_count; ++a) {
    for (int b = 0; b < module_gen_count; ++b) {
      for (const Word& conj : w) {
        const Word winv = inverse_word(conj);
        Word rel;
        rel.letters.push_back({module_sym(a), -1});
        rel.letters.insert(rel.letters.end(), winv.letters.begin(),
                           winv.letters.end());
        rel.letters.push_back({module_sym(b), -1});
        rel.letters.insert(rel.letters.end(), conj.letters.begin(),
                           conj.letters.end());
        rel.letters.push_back({module_sym(a), 1});
        rel.letters.insert(rel.letters.end(), winv.letters.begin(),
                           winv.letters.end());
        rel.letters.push_back({module_sym(b), 1});
        rel.letters.insert(rel.letters.end(), conj.letters.begin(),
                           conj.letters.end());
        Word reduced = free_reduce(rel);
        if (!reduced.empty()) out.push_back(std::move(reduced));
      }
    }
  }
  return out;
}

namespace {

// a^-1 prod_q (u_q^-1 a^{c_q} u_q) for "a = a*lambda", or the bare product
// for "a*mu = 0"; conjugating words in word order (the term map order).
Word module_relation_word(const GroupSpec& spec, int gen,
                          const RingElement& elem, bool self_expression) {
  Word rel;
  if (self_expression) rel.letters.push_back({module_sym(gen), -1});
  for (const auto& [q, c] : elem.terms()) {
    const Word u = spec.ordered_word(q);
    const Word uinv = inverse_word(u);
    rel.letters.insert(rel.letters.end(), uinv.letters.begin(),
                       uinv.letters.end());
    if (!c.fits_slong_p())
      throw Error("relator exponent does not fit in a machine word");
    rel.letters.push_back({module_sym(gen), c.get_si()});
    rel.letters.insert(rel.letters.end(), u.letters.begin(), u.letters.end());
  }
  return free_reduce(rel);
}

}  // namespace

std::vector<Word> relators_C(const GroupSpec& spec, const ModuleSpec&,
                             const TamenessReport& report) {
  std::vector<Word> out;
  for (const auto& lr : report.layers) {
    for (const auto& cert : lr.certificates) {
      for (std::size_t g = 0; g < cert.expr_index.size(); ++g) {
        const SelfExpression& se = lr.expressions[cert.expr_index[g]];
        Word rel = module_relation_word(spec, static_cast<int>(g), se.lambda,
                                        /*self_expression=*/true);
        if (!rel.empty()) out.push_back(std::move(rel));
      }
    }
  }
  return out;
}

std::vector<Word> relators_RA(const GroupSpec& spec, const ModuleSpec& mod) {
  std::vector<Word> out;
  for (const auto& rel : mod.global_relators) {
    Word w = module_relation_word(spec, rel.gen, rel.element,
                                  /*self_expression=*/false);
    if (!w.empty()) out.push_back(std::move(w));
  }
  return out;
}

Presentation assemble(const GroupSpec& spec, const ModuleSpec& mod,
                      const TamenessReport& report,
                      const std::vector<RadiusCert>& radii) {
  if (!report.tame)
    throw NotTame("module is not certified tame; no presentation assembled");
  if (static_cast<int>(radii.size()) != spec.layer_count())
    throw Error("need one radius certificate per layer");
  validate_module(spec, mod);
  for (const auto& mname : mod.generators)
    for (int g = 0; g < spec.generator_count(); ++g)
      if (mname == spec.generator_name(g))
        throw Error("module generator name collides with group generator: " +
                    mname);

  Presentation p;
  p.module_gen_count = static_cast<int>(mod.generators.size());
  p.generator_names = mod.generators;
  for (int g = 0; g < spec.generator_count(); ++g)
    p.generator_names.push_back(spec.generator_name(g));

  std::vector<std::vector<Word>> vs;
  p.w_size = 1;
  for (int i = 1; i <= spec.layer_count(); ++i) {
    p.p0.push_back(radii[i - 1].p0);
    vs.push_back(build_Vi(spec, radii[i - 1].p0, i));
    p.v_sizes.push_back(vs.back().size());
    p.w_size *= vs.back().size();
  }
  const std::vector<Word> w = build_W(vs);

  const std::size_t agens = mod.generators.size();
  std::vector<Word> ra = dedupe_nonempty(relators_RA(spec, mod));
  std::vector<Word> k0 = dedupe_nonempty(relators_K0(p.module_gen_count, w));
  std::vector<Word> c = dedupe_nonempty(relators_C(spec, mod, report));
  std::vector<Word> rq = dedupe_nonempty(spec.relators());

  p.pre_ra = mod.global_relators.size();
  p.post_ra = ra.size();
  p.pre_k0 = agens * agens * p.w_size;
  p.post_k0 = k0.size();
  p.pre_c = 0;
  for (const auto& lr : report.layers) {
    p.ell.push_back(lr.certificates.size());
    p.pre_c += lr.certificates.size() * agens;
  }
  p.post_c = c.size();
  const std::size_t n = spec.generator_count();
  p.pre_rq = n * (n - 1) / 2;
  p.post_rq = rq.size();

  for (const auto& lr : report.layers)
    for (std::size_t j = 0; j < lr.certificates.size(); ++j)
      for (std::size_t g = 0; g < lr.certificates[j].expr_index.size(); ++g) {
        const auto& se = lr.expressions[lr.certificates[j].expr_index[g]];
        p.certificate_identities.push_back(
            "layer " + std::to_string(lr.layer) + " j=" + std::to_string(j + 1) +
            " " + mod.generators[g] + ": " + render_ring(spec, se.lambda));
      }

  for (auto& rel : ra) p.relators.push_back({RelOrigin::RA, std::move(rel)});
  for (auto& rel : k0) p.relators.push_back({RelOrigin::K0, std::move(rel)});
  for (auto& rel : c) p.relators.push_back({RelOrigin::C, std::move(rel)});
  for (auto& rel : rq) p.relators.push_back({RelOrigin::RQ, std::move(rel)});
  return p;
}

std::string render_word(const Word& w,
                        const std::vector<std::string>& module_names,
                        const std::vector<std::string>& group_names) {
  std::ostringstream os;
  bool first = true;
  for (const Letter& l : w.letters) {
    if (!first) os << " ";
    first = false;
    const auto& names =
        l.sym.kind == Symbol::Kind::Module ? module_names : group_names;
    os << names.at(l.sym.index) << "^" << l.exp;
  }
  return os.str();
}

std::string render_presentation(const Presentation& p) {
  std::vector<std::string> module_names(
      p.generator_names.begin(),
      p.generator_names.begin() + p.module_gen_count);
  std::vector<std::string> group_names(
      p.generator_names.begin() + p.module_gen_count, p.generator_names.end());
  std::ostringstream os;
  for (const auto& name : p.generator_names) os << "gen " << name << "\n";
  for (const auto& rel : p.relators)
    os << "rel " << origin_name(rel.origin) << " "
       << render_word(rel.word, module_names, group_names) << "\n";
  return os.str();
}

Presentation parse_presentation(const std::string& text, const GroupSpec& spec,
                                const ModuleSpec& mod,
                                const std::string& filename) {
  std::map<std::string, Symbol> symbols;
  for (int a = 0; a < static_cast<int>(mod.generators.size()); ++a)
    symbols[mod.generators[a]] = module_sym(a);
  for (int g = 0; g < spec.generator_count(); ++g) {
    if (symbols.count(spec.generator_name(g)))
      throw ParseError(filename, 0,
                       "module and group generator names collide: " +
                           spec.generator_name(g));
    symbols[spec.generator_name(g)] = group_sym(g);
  }

  Presentation p;
  p.module_gen_count = static_cast<int>(mod.generators.size());

  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  std::size_t gen_seen = 0;
  std::vector<std::string> expected = mod.generators;
  for (int g = 0; g < spec.generator_count(); ++g)
    expected.push_back(spec.generator_name(g));

  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (kind == "gen") {
      std::string name;
      if (!(ls >> name)) throw ParseError(filename, lineno, "missing name");
      if (gen_seen >= expected.size() || expected[gen_seen] != name)
        throw ParseError(filename, lineno,
                         "generator list does not match the spec file: " + name);
      p.generator_names.push_back(name);
      ++gen_seen;
      std::string extra;
      if (ls >> extra) throw ParseError(filename, lineno, "trailing tokens");
    } else if (kind == "rel") {
      if (gen_seen != expected.size())
        throw ParseError(filename, lineno, "relator before generator list");
      std::string origin;
      if (!(ls >> origin)) throw ParseError(filename, lineno, "missing origin");
      RelOrigin o;
      if (origin == "RA") o = RelOrigin::RA;
      else if (origin == "K0") o = RelOrigin::K0;
      else if (origin == "C") o = RelOrigin::C;
      else if (origin == "RQ") o = RelOrigin::RQ;
      else throw ParseError(filename, lineno, "unknown origin: " + origin);
      Word w;
      std::string tok;
      while (ls >> tok) {
        const auto caret = tok.find('^');
        if (caret == std::string::npos || caret == 0 ||
            caret + 1 >= tok.size())
          throw ParseError(filename, lineno, "malformed token: " + tok);
        const std::string name = tok.substr(0, caret);
        auto it = symbols.find(name);
        if (it == symbols.end())
          throw ParseError(filename, lineno, "unknown generator: " + name);
        long long exp;
        try {
          exp = std::stoll(tok.substr(caret + 1));
        } catch (const std::exception&) {
          throw ParseError(filename, lineno, "malformed exponent: " + tok);
        }
        w.letters.push_back({it->second, exp});
      }
      p.relators.push_back({o, std::move(w)});
    } else {
      throw ParseError(filename, lineno, "unknown line kind: " + kind);
    }
  }
  if (gen_seen != expected.size())
    throw ParseError(filename, lineno, "generator list is incomplete");
  return p;
}

}  // namespace tamepres
