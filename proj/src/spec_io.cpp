#include "tamepres/spec_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace tamepres {

namespace {

bool is_ident(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

struct SectionLine {
  int lineno;
  std::vector<std::string> tokens;
};

long long parse_ll(const std::string& file, int line, const std::string& s) {
  if (!is_integer(s)) throw ParseError(file, line, "expected integer: " + s);
  try {
    return std::stoll(s);
  } catch (const std::exception&) {
    throw ParseError(file, line, "integer out of range: " + s);
  }
}

// name or name^exp
Letter parse_word_token(const std::string& file, int line,
                        const std::map<std::string, int>& gens,
                        const std::string& tok) {
  const auto caret = tok.find('^');
  const std::string name = caret == std::string::npos ? tok : tok.substr(0, caret);
  auto it = gens.find(name);
  if (it == gens.end())
    throw ParseError(file, line, "unknown generator: " + name);
  long long exp = 1;
  if (caret != std::string::npos)
    exp = parse_ll(file, line, tok.substr(caret + 1));
  return Letter{group_sym(it->second), exp};
}

RingElement parse_ring_tokens(const GroupSpec& spec,
                              const std::map<std::string, int>& gens,
                              const std::vector<std::string>& raw_tokens,
                              const std::string& file, int line) {
  // Detach leading signs so "-x + y" and "- x + y" parse the same way.
  std::vector<std::string> tokens;
  for (const std::string& tok : raw_tokens) {
    if (tok.size() > 1 && (tok[0] == '+' || tok[0] == '-')) {
      tokens.emplace_back(1, tok[0]);
      tokens.push_back(tok.substr(1));
    } else {
      tokens.push_back(tok);
    }
  }
  if (tokens.empty()) throw ParseError(file, line, "empty ring expression");
  RingElement result;
  std::size_t i = 0;
  bool first = true;
  while (i < tokens.size()) {
    int sign = 1;
    if (tokens[i] == "+" || tokens[i] == "-") {
      if (first && tokens[i] == "+")
        throw ParseError(file, line, "unexpected leading +");
      sign = tokens[i] == "-" ? -1 : 1;
      ++i;
      if (i == tokens.size())
        throw ParseError(file, line, "dangling sign in ring expression");
    } else if (!first) {
      throw ParseError(file, line, "expected + or - between terms");
    }
    first = false;

    mpz_class coeff = 1;
    bool saw_coeff = false;
    Word mono;
    while (i < tokens.size() && tokens[i] != "+" && tokens[i] != "-") {
      const std::string& tok = tokens[i];
      if (is_integer(tok)) {
        if (saw_coeff || !mono.letters.empty())
          throw ParseError(file, line, "unexpected integer: " + tok);
        coeff = mpz_class(tok);
        saw_coeff = true;
      } else {
        mono.letters.push_back(parse_word_token(file, line, gens, tok));
      }
      ++i;
    }
    if (!saw_coeff && mono.letters.empty())
      throw ParseError(file, line, "empty term in ring expression");
    result = add(result, RingElement::monomial(spec.normalize(mono),
                                               sign * coeff));
  }
  return result;
}

// Pads the punctuation of comm lines so [x1, y1] = word splits cleanly.
std::vector<std::string> comm_tokens(const std::string& line) {
  std::string padded;
  for (char c : line) {
    if (c == '[' || c == ']' || c == ',' || c == '=') {
      padded += ' ';
      padded += c;
      padded += ' ';
    } else {
      padded += c;
    }
  }
  return split_tokens(padded);
}

struct CommEntry {
  int lineno;
  std::string u, v;
  std::vector<Letter> word;  // empty for the trivial commutator "1"
};

}  // namespace

RingElement parse_ring_expression(const GroupSpec& spec,
                                  const std::string& text,
                                  const std::string& filename, int line) {
  std::map<std::string, int> gens;
  for (int g = 0; g < spec.generator_count(); ++g)
    gens[spec.generator_name(g)] = g;
  return parse_ring_tokens(spec, gens, split_tokens(text), filename, line);
}

ParsedSpec parse_spec_file(const std::string& text,
                           const std::string& filename) {
  std::map<std::string, std::vector<SectionLine>> sections;
  {
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    std::string current;
    while (std::getline(is, raw)) {
      ++lineno;
      const std::string line = strip_comment(raw);
      auto tokens = split_tokens(line);
      if (tokens.empty()) continue;
      if (current.empty()) {
        if (tokens.size() == 2 && tokens[1] == "{" &&
            (tokens[0] == "group" || tokens[0] == "module" ||
             tokens[0] == "options")) {
          current = tokens[0];
          if (sections.count(current))
            throw ParseError(filename, lineno,
                             "duplicate section: " + current);
          sections[current] = {};
          continue;
        }
        throw ParseError(filename, lineno,
                         "expected a section header, got: " + tokens[0]);
      }
      if (tokens.size() == 1 && tokens[0] == "}") {
        current.clear();
        continue;
      }
      sections[current].push_back({lineno, std::move(tokens)});
    }
    if (!current.empty())
      throw ParseError(filename, lineno, "unterminated section " + current);
  }
  if (!sections.count("group"))
    throw ParseError(filename, 0, "missing group section");
  if (!sections.count("module"))
    throw ParseError(filename, 0, "missing module section");

  // Options first; the group spec carries the collection fuel.
  Options options;
  if (sections.count("options")) {
    for (const auto& sl : sections["options"]) {
      if (sl.tokens.size() != 2)
        throw ParseError(filename, sl.lineno, "expected: <key> <value>");
      const long long v = parse_ll(filename, sl.lineno, sl.tokens[1]);
      if (v <= 0)
        throw ParseError(filename, sl.lineno, "option value must be positive");
      if (sl.tokens[0] == "cert_cap")
        options.cert_cap = static_cast<std::size_t>(v);
      else if (sl.tokens[0] == "model_mod")
        options.model_mod = v;
      else if (sl.tokens[0] == "model_quot")
        options.model_quot = v;
      else if (sl.tokens[0] == "collection_fuel")
        options.collection_fuel = v;
      else
        throw ParseError(filename, sl.lineno,
                         "unknown option: " + sl.tokens[0]);
    }
  }

  // Group section.
  int layers = 0;
  std::vector<int> ranks;
  std::vector<std::string> names;
  std::vector<CommEntry> comms;
  int group_line = 0;
  for (const auto& sl : sections["group"]) {
    const auto& t = sl.tokens;
    group_line = sl.lineno;
    if (t[0] == "layers") {
      if (t.size() != 2)
        throw ParseError(filename, sl.lineno, "expected: layers <k>");
      layers = static_cast<int>(parse_ll(filename, sl.lineno, t[1]));
      if (layers < 1)
        throw ParseError(filename, sl.lineno, "layer count must be positive");
    } else if (t[0] == "ranks") {
      for (std::size_t i = 1; i < t.size(); ++i) {
        const long long r = parse_ll(filename, sl.lineno, t[i]);
        if (r < 1)
          throw ParseError(filename, sl.lineno, "ranks must be positive");
        ranks.push_back(static_cast<int>(r));
      }
    } else if (t[0] == "gens") {
      for (std::size_t i = 1; i < t.size(); ++i) {
        if (!is_ident(t[i]))
          throw ParseError(filename, sl.lineno,
                           "invalid generator name: " + t[i]);
        names.push_back(t[i]);
      }
    } else if (t[0] == "comm") {
      // comm [u, v] = word
      std::ostringstream joined;
      for (std::size_t i = 0; i < t.size(); ++i) joined << t[i] << " ";
      auto ct = comm_tokens(joined.str());
      if (ct.size() < 7 || ct[1] != "[" || ct[3] != "," || ct[5] != "]" ||
          ct[6] != "=")
        throw ParseError(filename, sl.lineno,
                         "expected: comm [u, v] = <word>");
      CommEntry e;
      e.lineno = sl.lineno;
      e.u = ct[2];
      e.v = ct[4];
      if (ct.size() == 8 && ct[7] == "1") {
        // trivial commutator
      } else {
        std::map<std::string, int> gen_index;
        for (std::size_t g = 0; g < names.size(); ++g)
          gen_index[names[g]] = static_cast<int>(g);
        for (std::size_t i = 7; i < ct.size(); ++i)
          e.word.push_back(
              parse_word_token(filename, sl.lineno, gen_index, ct[i]));
      }
      comms.push_back(std::move(e));
    } else {
      throw ParseError(filename, sl.lineno,
                       "unknown group directive: " + t[0]);
    }
  }
  if (layers == 0)
    throw ParseError(filename, group_line, "missing layers directive");
  if (static_cast<int>(ranks.size()) != layers)
    throw ParseError(filename, group_line,
                     "ranks count does not match layer count");
  const int gen_count = std::accumulate(ranks.begin(), ranks.end(), 0);
  if (static_cast<int>(names.size()) != gen_count)
    throw ParseError(filename, group_line,
                     "generator count does not match the ranks");
  std::map<std::string, int> gen_index;
  for (int g = 0; g < gen_count; ++g) {
    if (gen_index.count(names[g]))
      throw ParseError(filename, group_line,
                       "duplicate generator name: " + names[g]);
    gen_index[names[g]] = g;
  }
  std::vector<int> gen_layer(gen_count);
  {
    int g = 0;
    for (int i = 0; i < layers; ++i)
      for (int j = 0; j < ranks[i]; ++j) gen_layer[g++] = i + 1;
  }

  // Resolve commutator entries deepest pairs first, so the collection used
  // to normalize or invert a tail word only touches final table entries.
  std::vector<std::vector<long long>> tails(
      static_cast<std::size_t>(gen_count) * gen_count);
  std::stable_sort(comms.begin(), comms.end(),
                   [&](const CommEntry& a, const CommEntry& b) {
                     const int da = std::max(gen_layer[gen_index.at(a.u)],
                                             gen_layer[gen_index.at(a.v)]);
                     const int db = std::max(gen_layer[gen_index.at(b.u)],
                                             gen_layer[gen_index.at(b.v)]);
                     return da > db;
                   });
  std::set<std::pair<int, int>> seen_pairs;
  for (const auto& e : comms) {
    auto iu = gen_index.find(e.u);
    auto iv = gen_index.find(e.v);
    if (iu == gen_index.end())
      throw ParseError(filename, e.lineno, "unknown generator: " + e.u);
    if (iv == gen_index.end())
      throw ParseError(filename, e.lineno, "unknown generator: " + e.v);
    const int u = iu->second, v = iv->second;
    if (u == v)
      throw ParseError(filename, e.lineno, "commutator of a generator with itself");
    const int g = std::min(u, v), h = std::max(u, v);
    if (!seen_pairs.insert({g, h}).second)
      throw ParseError(filename, e.lineno,
                       "duplicate commutator for this generator pair");
    const int depth = std::max(gen_layer[u], gen_layer[v]);
    for (const Letter& l : e.word)
      if (gen_layer[l.sym.index] <= depth)
        throw ParseError(filename, e.lineno,
                         "commutator word must use strictly deeper generators");
    if (e.word.empty()) continue;  // trivial tail
    GroupSpec partial(ranks, names, tails, options.collection_fuel);
    Word w{e.word};
    GroupElement elem = partial.normalize(w);
    // Table entry tau(g,h) = [t_h, t_g]; an entry given as [t_g, t_h] is
    // the inverse.
    if (u < v) elem = partial.inverse(elem);
    bool zero = std::all_of(elem.exps.begin(), elem.exps.end(),
                            [](long long x) { return x == 0; });
    if (!zero) tails[static_cast<std::size_t>(g) * gen_count + h] = elem.exps;
  }

  ParsedSpec result{
      GroupSpec(ranks, names, std::move(tails), options.collection_fuel),
      ModuleSpec{},
      options};

  // Module section.
  for (const auto& sl : sections["module"]) {
    const auto& t = sl.tokens;
    if (t[0] == "gens") {
      for (std::size_t i = 1; i < t.size(); ++i) {
        if (!is_ident(t[i]))
          throw ParseError(filename, sl.lineno,
                           "invalid module generator name: " + t[i]);
        if (gen_index.count(t[i]))
          throw ParseError(filename, sl.lineno,
                           "module generator collides with group generator: " +
                               t[i]);
        result.module.generators.push_back(t[i]);
      }
    } else if (t[0] == "ann" || t[0] == "rel") {
      int layer = -1, gen = -1;
      std::size_t i = 1;
      for (; i < t.size(); ++i) {
        const auto eq = t[i].find('=');
        if (eq == std::string::npos) break;
        const std::string key = t[i].substr(0, eq);
        const std::string val = t[i].substr(eq + 1);
        if (key == "layer") {
          layer = static_cast<int>(parse_ll(filename, sl.lineno, val));
        } else if (key == "gen") {
          auto it = std::find(result.module.generators.begin(),
                              result.module.generators.end(), val);
          if (it == result.module.generators.end())
            throw ParseError(filename, sl.lineno,
                             "unknown module generator: " + val);
          gen = static_cast<int>(it - result.module.generators.begin());
        } else {
          throw ParseError(filename, sl.lineno, "unknown key: " + key);
        }
      }
      if (gen < 0)
        throw ParseError(filename, sl.lineno, "missing gen= argument");
      std::vector<std::string> expr(t.begin() + i, t.end());
      RingElement elem = parse_ring_tokens(result.group, gen_index, expr,
                                           filename, sl.lineno);
      if (t[0] == "ann") {
        if (layer < 1 || layer > layers)
          throw ParseError(filename, sl.lineno,
                           "ann needs layer=<1.." + std::to_string(layers) +
                               ">");
        if (elem.is_zero())
          throw ParseError(filename, sl.lineno, "annihilator is zero");
        for (const auto& q : elem.support())
          if (result.group.layer_of(q) < layer)
            throw ParseError(filename, sl.lineno,
                             "annihilator support leaves layer " +
                                 std::to_string(layer));
        result.module.annihilators.push_back({gen, layer, std::move(elem)});
      } else {
        if (layer != -1)
          throw ParseError(filename, sl.lineno, "rel does not take layer=");
        result.module.global_relators.push_back({gen, std::move(elem)});
      }
    } else {
      throw ParseError(filename, sl.lineno,
                       "unknown module directive: " + t[0]);
    }
  }
  if (result.module.generators.empty())
    throw ParseError(filename, 0, "module section declares no generators");
  validate_module(result.group, result.module);
  return result;
}

ParsedSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open spec file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec_file(buf.str(), path);
}

}  // namespace tamepres
