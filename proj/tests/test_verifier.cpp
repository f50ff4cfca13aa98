#include <doctest.h>

#include "tamepres/presenter.hpp"
#include "tamepres/radius.hpp"
#include "tamepres/spec_io.hpp"
#include "tamepres/verifier.hpp"
#include "test_helpers.hpp"

using namespace tamepres;
using namespace tamepres::testing;

namespace {

const char* kBaumslagSpec = R"(
group {
  layers 1
  ranks 2
  gens x1 y1
}
module {
  gens a
  ann layer=1 gen=a 1 + x1 - y1
  rel gen=a 1 + x1 - y1
}
)";

const char* kHeisenbergSpec = R"(
group {
  layers 2
  ranks 2 1
  gens x1 y1 z
  comm [x1, y1] = z
}
module {
  gens a
  ann layer=1 gen=a 1 + x1 - y1
  ann layer=2 gen=a z - 2
  rel gen=a 1 + x1 - y1
  rel gen=a z - 2
}
)";

struct Built {
  ParsedSpec ps;
  Presentation pres;
};

Built build(const char* spec_text) {
  ParsedSpec ps = parse_spec_file(spec_text);
  TamenessReport report = check_tame(ps.group, ps.module);
  REQUIRE(report.tame);
  std::vector<RadiusCert> radii;
  for (const auto& lr : report.layers) {
    std::vector<LatticeSet> family;
    for (const auto& cert : lr.certificates) family.push_back(cert.cone_set);
    radii.push_back(compute_p0(family, ps.group.rank(lr.layer)));
  }
  Presentation pres = assemble(ps.group, ps.module, report, radii);
  return {std::move(ps), std::move(pres)};
}

}  // namespace

TEST_CASE("ring identity check accepts derived and rejects corrupted") {
  GroupSpec z2 = make_z2();
  RingElement mu = parse_ring_expression(z2, "1 + x - y");
  auto exprs = derive_self_expressions(z2, 0, 1, mu);
  REQUIRE(exprs.size() == 3);
  for (const auto& se : exprs) CHECK(ring_identity_check(z2, se, mu));

  SelfExpression corrupted = exprs[0];
  corrupted.lambda = parse_ring_expression(z2, "x + y");
  CHECK(!ring_identity_check(z2, corrupted, mu));

  GroupSpec h = make_heisenberg();
  RingElement muz = parse_ring_expression(h, "z - 2");
  auto hexprs = derive_self_expressions(h, 0, 2, muz);
  REQUIRE(hexprs.size() == 1);
  CHECK(ring_identity_check(h, hexprs[0], muz));
}

TEST_CASE("finite model dimensions") {
  ParsedSpec ps = parse_spec_file(kBaumslagSpec);
  FiniteModel fm = build_finite_model(ps.group, ps.module, 5, 3);
  CHECK(fm.group_order() == 9);
  CHECK(fm.algebra_dim() == 9);
  CHECK(fm.free_dim() == 9);

  ParsedSpec hs = parse_spec_file(kHeisenbergSpec);
  FiniteModel hm = build_finite_model(hs.group, hs.module, 5, 3);
  CHECK(hm.group_order() == 27);

  CHECK_THROWS_AS(build_finite_model(ps.group, ps.module, 1, 3), Error);
  CHECK_THROWS_AS(build_finite_model(ps.group, ps.module, 4, 3), Error);
  CHECK_THROWS_AS(build_finite_model(ps.group, ps.module, 5, 1), Error);
}

TEST_CASE("module dimension matches the character count over Z/5, N=4") {
  // In (Z/5)[C4 x C4] the element 1 + x - y vanishes at exactly three
  // characters, so the quotient has dimension 3.
  ParsedSpec ps = parse_spec_file(kBaumslagSpec);
  FiniteModel fm = build_finite_model(ps.group, ps.module, 5, 4);
  CHECK(fm.algebra_dim() == 16);
  CHECK(fm.module_dim() == 3);
}

TEST_CASE("example presentations verify in small models") {
  for (const char* spec : {kBaumslagSpec, kHeisenbergSpec}) {
    Built b = build(spec);
    for (auto [m, n] : {std::pair<long long, long long>{5, 4},
                        std::pair<long long, long long>{7, 3}}) {
      FiniteModel fm = build_finite_model(b.ps.group, b.ps.module, m, n);
      VerifyReport report = verify_presentation(b.pres, fm);
      CHECK(report.ok);
      for (const auto& fam : report.families) CHECK(fam.passed == fam.count);
      require_verified(report);  // must not throw
    }
  }
}

TEST_CASE("group-letter mutations are caught") {
  Built b = build(kBaumslagSpec);
  FiniteModel fm = build_finite_model(b.ps.group, b.ps.module, 5, 3);
  for (std::size_t i = 0; i < b.pres.relators.size(); ++i) {
    Presentation mutated = b.pres;
    auto& w = mutated.relators[i].word;
    bool changed = false;
    for (auto& l : w.letters) {
      if (l.sym.kind == Symbol::Kind::Group) {
        ++l.exp;
        changed = true;
        break;
      }
    }
    REQUIRE(changed);
    VerifyReport report = verify_presentation(mutated, fm);
    CHECK(!report.ok);
    CHECK_THROWS_AS(require_verified(report), RelatorFails);
  }
}

TEST_CASE("module-letter mutations are caught when the module survives") {
  // (5,4) keeps the Baumslag module alive (dimension 3), so coefficient
  // errors in RA and C relators are visible.
  Built b = build(kBaumslagSpec);
  FiniteModel fm = build_finite_model(b.ps.group, b.ps.module, 5, 4);
  REQUIRE(fm.module_dim() > 0);
  for (std::size_t i = 0; i < b.pres.relators.size(); ++i) {
    if (b.pres.relators[i].origin != RelOrigin::RA &&
        b.pres.relators[i].origin != RelOrigin::C)
      continue;
    Presentation mutated = b.pres;
    auto& w = mutated.relators[i].word;
    for (auto& l : w.letters) {
      if (l.sym.kind == Symbol::Kind::Module) {
        ++l.exp;
        break;
      }
    }
    VerifyReport report = verify_presentation(mutated, fm);
    CHECK(!report.ok);
  }
}

TEST_CASE("K0 relators hold in every model") {
  for (const char* spec : {kBaumslagSpec, kHeisenbergSpec}) {
    Built b = build(spec);
    for (auto [m, n] : {std::pair<long long, long long>{5, 3},
                        std::pair<long long, long long>{5, 4},
                        std::pair<long long, long long>{7, 3},
                        std::pair<long long, long long>{7, 4}}) {
      FiniteModel fm = build_finite_model(b.ps.group, b.ps.module, m, n);
      VerifyReport report = verify_presentation(b.pres, fm);
      for (const auto& fam : report.families)
        if (fam.origin == RelOrigin::K0) CHECK(fam.passed == fam.count);
    }
  }
}

TEST_CASE("verification report renders pass counts per family") {
  Built b = build(kBaumslagSpec);
  FiniteModel fm = build_finite_model(b.ps.group, b.ps.module, 5, 4);
  VerifyReport report = verify_presentation(b.pres, fm);
  const std::string text = render_verify_report(report, fm);
  CHECK(text.find("RA: 1/1 pass") != std::string::npos);
  CHECK(text.find("K0: 4/4 pass") != std::string::npos);
  CHECK(text.find("C: 3/3 pass") != std::string::npos);
  CHECK(text.find("RQ: 1/1 pass") != std::string::npos);
  CHECK(text.find("verdict: all relators pass") != std::string::npos);
}
