#include <doctest.h>

#include <random>

#include "tamepres/radius.hpp"
#include "tamepres/rational.hpp"
#include "test_helpers.hpp"

using namespace tamepres;

namespace {

std::vector<LatticeSet> with_negations(std::vector<LatticeSet> family) {
  const std::size_t n = family.size();
  for (std::size_t i = 0; i < n; ++i)
    family.push_back(negate_lattice_set(family[i]));
  return family;
}

std::vector<LatticeSet> baumslag_family() {
  return {make_lattice_set(2, {{1, 0}, {0, 1}}),
          make_lattice_set(2, {{-1, 0}, {-1, 1}}),
          make_lattice_set(2, {{0, -1}, {1, -1}})};
}

long long norm2(const std::vector<long long>& x) {
  long long s = 0;
  for (long long v : x) s += v * v;
  return s;
}

// Independent replay: re-derives the good/bad verdict for every point in
// the scan region and compares with the certificate.
void replay(const RadiusCert& cert) {
  std::vector<std::vector<long long>> bad;
  const long long r = [&] {
    long long v = 0;
    while ((v + 1) * (v + 1) <= cert.scan_bound2) ++v;
    return v;
  }();
  std::vector<long long> x(cert.dim, -r);
  for (;;) {
    if (norm2(x) != 0 && norm2(x) <= cert.scan_bound2) {
      bool good = false;
      for (const auto& L : cert.family) {
        bool all = true;
        for (const auto& y : L.points) {
          std::vector<long long> z(x.size());
          for (std::size_t j = 0; j < x.size(); ++j) z[j] = x[j] + y[j];
          if (norm2(z) > norm2(x) - 1) {
            all = false;
            break;
          }
        }
        if (all) {
          good = true;
          break;
        }
      }
      if (!good) bad.push_back(x);
    }
    int j = 0;
    while (j < cert.dim && ++x[j] > r) x[j++] = -r;
    if (j == cert.dim) break;
  }
  std::sort(bad.begin(), bad.end());
  CHECK(bad == cert.bad_points);
  long long p0 = 0;
  for (const auto& b : bad) p0 = std::max(p0, norm2(b));
  CHECK(p0 == cert.p0);
}

}  // namespace

TEST_CASE("margin of the two-point line family is exactly 1") {
  auto family = with_negations({make_lattice_set(1, {{1}})});
  CHECK(positivity_margin(family, 1) == 1);
}

TEST_CASE("margin of the axis singletons in the plane") {
  auto family = with_negations(
      {make_lattice_set(2, {{1, 0}}), make_lattice_set(2, {{0, 1}})});
  mpq_class c = positivity_margin(family, 2);
  CHECK(c >= mpq_class(7, 10));
  CHECK(2 * c * c <= 1);  // c <= 1/sqrt(2)
}

TEST_CASE("quadrant pair does not strictly cover the circle") {
  // {(1,0),(0,1)} and its antipode both vanish on the axes, so the cover
  // precondition fails and the margin must refuse.
  auto family = with_negations({make_lattice_set(2, {{1, 0}, {0, 1}})});
  CHECK_THROWS_AS(positivity_margin(family, 2), NotCovered);
}

TEST_CASE("margin rejects families not closed under negation") {
  CHECK_THROWS_AS(positivity_margin({make_lattice_set(1, {{1}})}, 1), Error);
}

TEST_CASE("depth cap reports NeedSmallerBoxes") {
  auto family = with_negations(baumslag_family());
  CHECK_THROWS_AS(positivity_margin(family, 2, /*max_depth=*/0),
                  NeedSmallerBoxes);
}

TEST_CASE("p0 of the unit line family is 0") {
  RadiusCert cert = compute_p0({make_lattice_set(1, {{1}})}, 1);
  CHECK(cert.p0 == 0);
  CHECK(cert.bad_points.empty());
  CHECK(cert.margin == 1);
  replay(cert);
}

TEST_CASE("p0 of the doubled line family is 1") {
  RadiusCert cert = compute_p0({make_lattice_set(1, {{2}})}, 1);
  CHECK(cert.p0 == 1);  // x = +-1 overshoots
  CHECK(cert.bad_points ==
        std::vector<std::vector<long long>>{{-1}, {1}});
  replay(cert);
}

TEST_CASE("baumslag family: golden p0") {
  RadiusCert cert = compute_p0(baumslag_family(), 2);
  // Pinned by the exhaustive scan: only the four unit vectors fail to
  // move strictly inward.
  CHECK(cert.p0 == 1);
  CHECK(cert.bad_points == std::vector<std::vector<long long>>{
                               {-1, 0}, {0, -1}, {0, 1}, {1, 0}});
  CHECK(cert.max_norm2 == 2);
  replay(cert);
}

TEST_CASE("enlarging the family never increases p0") {
  RadiusCert small = compute_p0({make_lattice_set(1, {{2}})}, 1);
  RadiusCert large = compute_p0(
      {make_lattice_set(1, {{2}}), make_lattice_set(1, {{1}})}, 1);
  CHECK(large.p0 <= small.p0);
  CHECK(large.p0 == 0);
}

TEST_CASE("tail soundness beyond the scan bound") {
  RadiusCert cert = compute_p0(baumslag_family(), 2);
  std::mt19937 rng(2024);
  const long long lo2 = cert.scan_bound2;
  long long hi = 0;
  while (hi * hi <= lo2) ++hi;
  hi += 3;
  std::uniform_int_distribution<long long> d(-hi, hi);
  int tested = 0;
  while (tested < 100) {
    std::vector<long long> x{d(rng), d(rng)};
    const long long n2 = norm2(x);
    if (n2 <= lo2 || n2 > hi * hi) continue;
    ++tested;
    bool good = false;
    for (const auto& L : cert.family) {
      bool all = true;
      for (const auto& y : L.points) {
        std::vector<long long> z{x[0] + y[0], x[1] + y[1]};
        if (norm2(z) > n2 - 1) {
          all = false;
          break;
        }
      }
      if (all) {
        good = true;
        break;
      }
    }
    CHECK(good);
  }
}

TEST_CASE("radius certificate rendering is stable") {
  RadiusCert cert = compute_p0({make_lattice_set(1, {{2}})}, 1);
  const std::string text = render_radius_cert(cert);
  CHECK(text.find("p0: 1") != std::string::npos);
  CHECK(text.find("bad: (-1) (1)") != std::string::npos);
}
