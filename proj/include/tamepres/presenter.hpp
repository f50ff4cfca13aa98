#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tamepres/radius.hpp"
#include "tamepres/tameness.hpp"
#include "tamepres/word.hpp"

namespace tamepres {

enum class RelOrigin { RA, K0, C, RQ };

const char* origin_name(RelOrigin o);

struct TaggedRelator {
  RelOrigin origin;
  Word word;
};

struct Presentation {
  std::vector<std::string> generator_names;  // module generators first
  int module_gen_count = 0;

  // Freely reduced, deduplicated, nonempty relators in family order
  // RA, K0, C, RQ.
  std::vector<TaggedRelator> relators;

  // Assembly metadata.
  std::vector<long long> p0;          // per layer
  std::vector<std::size_t> v_sizes;   // |V_i|
  std::size_t w_size = 0;
  std::vector<std::size_t> ell;       // certificates per layer
  std::size_t pre_ra = 0, post_ra = 0;
  std::size_t pre_k0 = 0, post_k0 = 0;
  std::size_t pre_c = 0, post_c = 0;
  std::size_t pre_rq = 0, post_rq = 0;
  std::vector<std::string> certificate_identities;
};

// Lattice points with squared norm <= p0, ascending lexicographic order.
std::vector<std::vector<long long>> ball_points(long long p0, int dim);

// Ordered words over the layer's generators with exponent vector in the
// ball of squared radius p0.
std::vector<Word> build_Vi(const GroupSpec& spec, long long p0, int layer);

// All concatenations v_1 v_2 ... v_k, first factor most significant.
std::vector<Word> build_W(const std::vector<std::vector<Word>>& vs);

// Commutators [a, b^w] over all generator pairs and all w in W, freely
// reduced; empty words are dropped by the caller's bookkeeping.
std::vector<Word> relators_K0(int module_gen_count, const std::vector<Word>& w);

// Relators a^-1 * prod_u (u^-1 a^{coeff} u) mimicking a = a * lambda for
// the report's selected certificates; conjugating words in word order.
std::vector<Word> relators_C(const GroupSpec& spec, const ModuleSpec& mod,
                             const TamenessReport& report);

// Module relations a * mu = 0 written as prod_q (w_q^-1 a^{c_q} w_q).
std::vector<Word> relators_RA(const GroupSpec& spec, const ModuleSpec& mod);

Presentation assemble(const GroupSpec& spec, const ModuleSpec& mod,
                      const TamenessReport& report,
                      const std::vector<RadiusCert>& radii);

// Bit-exact text form: "gen <name>" lines then "rel <origin> <word>"
// lines, words as space-separated sym^exp tokens, LF endings.
std::string render_presentation(const Presentation& p);

Presentation parse_presentation(const std::string& text,
                                const GroupSpec& spec, const ModuleSpec& mod,
                                const std::string& filename = "<presentation>");

std::string render_word(const Word& w,
                        const std::vector<std::string>& module_names,
                        const std::vector<std::string>& group_names);

}  // namespace tamepres
