#include "tamepres/character_geometry.hpp"

#include "tamepres/rational.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace tamepres {

namespace {

struct Row {
  std::vector<mpq_class> a;
  mpq_class b;  // a . x <= b
};

// Exact Fourier-Motzkin feasibility with witness extraction. Eliminates
// the last variable, recurses, then back-substitutes a value inside the
// surviving bounds.
std::optional<std::vector<mpq_class>> fm_solve(std::vector<Row> rows,
                                               int nvars) {
  if (nvars == 0) {
    for (const Row& r : rows)
      if (r.b < 0) return std::nullopt;
    return std::vector<mpq_class>{};
  }
  const int v = nvars - 1;
  std::vector<Row> uppers, lowers, rest;
  for (Row& r : rows) {
    const mpq_class c = r.a[v];
    r.a.resize(v);
    if (c > 0) {
      for (auto& x : r.a) x /= c;
      r.b /= c;
      uppers.push_back(std::move(r));  // x_v <= b - a.x
    } else if (c < 0) {
      for (auto& x : r.a) x /= c;
      r.b /= c;
      lowers.push_back(std::move(r));  // x_v >= b - a.x
    } else {
      rest.push_back(std::move(r));
    }
  }
  std::vector<Row> next = rest;
  for (const Row& lo : lowers) {
    for (const Row& up : uppers) {
      // lower bound lo.b - lo.a x <= upper bound up.b - up.a x
      Row r;
      r.a.resize(v);
      for (int j = 0; j < v; ++j) r.a[j] = up.a[j] - lo.a[j];
      r.b = up.b - lo.b;
      next.push_back(std::move(r));
    }
  }
  auto sub = fm_solve(std::move(next), v);
  if (!sub) return std::nullopt;
  auto eval = [&](const Row& r) {
    mpq_class s = r.b;
    for (int j = 0; j < v; ++j) s -= r.a[j] * (*sub)[j];
    return s;
  };
  bool has_lo = false, has_hi = false;
  mpq_class lo, hi;
  for (const Row& r : lowers) {
    mpq_class s = eval(r);
    if (!has_lo || s > lo) lo = s;
    has_lo = true;
  }
  for (const Row& r : uppers) {
    mpq_class s = eval(r);
    if (!has_hi || s < hi) hi = s;
    has_hi = true;
  }
  mpq_class x = 0;
  if (has_lo && x < lo) x = lo;
  if (has_hi && x > hi) x = hi;
  sub->push_back(x);
  return sub;
}

std::vector<std::vector<long long>> canon_points(
    std::vector<std::vector<long long>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

bool contains_origin(const LatticeSet& L) {
  for (const auto& p : L.points)
    if (std::all_of(p.begin(), p.end(), [](long long x) { return x == 0; }))
      return true;
  return false;
}

}  // namespace

mpq_class evaluate_character(const GroupSpec& spec, const LayerCharacter& chi,
                             const GroupElement& g) {
  const auto block = spec.theta(g, chi.layer);
  if (block.size() != chi.coeffs.size())
    throw DimensionMismatch("character dimension does not match layer rank");
  if (std::all_of(chi.coeffs.begin(), chi.coeffs.end(),
                  [](const mpq_class& x) { return x == 0; }))
    throw ZeroDirection("the zero map does not represent a sphere point");
  mpq_class s = 0;
  for (std::size_t j = 0; j < block.size(); ++j)
    s += chi.coeffs[j] * rat_of(block[j]);
  return s;
}

LatticeSet make_lattice_set(int dim, std::vector<std::vector<long long>> pts,
                            std::string provenance) {
  if (pts.empty()) throw Error("lattice set must be nonempty");
  for (const auto& p : pts)
    if (static_cast<int>(p.size()) != dim)
      throw DimensionMismatch("lattice point has wrong dimension");
  return LatticeSet{dim, canon_points(std::move(pts)), std::move(provenance)};
}

LatticeSet negate_lattice_set(const LatticeSet& L) {
  std::vector<std::vector<long long>> pts;
  pts.reserve(L.points.size());
  for (const auto& p : L.points) {
    std::vector<long long> q(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) q[j] = -p[j];
    pts.push_back(std::move(q));
  }
  return make_lattice_set(L.dim, std::move(pts),
                          L.provenance.empty() ? "" : "-" + L.provenance);
}

std::string render_lattice_set(const LatticeSet& L) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < L.points.size(); ++i) {
    if (i) os << " ";
    os << "(";
    for (std::size_t j = 0; j < L.points[i].size(); ++j) {
      if (j) os << ",";
      os << L.points[i][j];
    }
    os << ")";
  }
  os << "}";
  return os.str();
}

bool cone_contains(const LatticeSet& L, const std::vector<mpq_class>& u) {
  if (static_cast<int>(u.size()) != L.dim)
    throw DimensionMismatch("direction dimension does not match lattice set");
  if (std::all_of(u.begin(), u.end(),
                  [](const mpq_class& x) { return x == 0; }))
    throw ZeroDirection("zero vector is not a direction");
  for (const auto& y : L.points) {
    mpq_class dot = 0;
    for (std::size_t j = 0; j < y.size(); ++j) dot += u[j] * rat_of(y[j]);
    if (dot <= 0) return false;
  }
  return true;
}

std::string render_rational_vector(const std::vector<mpq_class>& u) {
  std::ostringstream os;
  os << "(";
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (j) os << ", ";
    os << u[j].get_str();
  }
  os << ")";
  return os.str();
}

std::string CoverResult::to_string() const {
  if (covered) return "covered";
  return "witness: " + render_rational_vector(witness);
}

CoverResult antipodal_cover(const std::vector<LatticeSet>& family, int dim) {
  if (family.empty()) throw Error("cover family must be nonempty");
  for (const auto& L : family)
    if (L.dim != dim)
      throw DimensionMismatch("family member has wrong dimension");

  // Close under negation; sets containing the origin have empty cones and
  // impose no constraint on an uncovered direction.
  std::vector<std::vector<std::vector<long long>>> closed;
  for (const auto& L : family) {
    if (contains_origin(L)) continue;
    closed.push_back(L.points);
    closed.push_back(negate_lattice_set(L).points);
  }
  std::sort(closed.begin(), closed.end());
  closed.erase(std::unique(closed.begin(), closed.end()), closed.end());

  if (closed.empty()) {
    // No cone covers anything; the first coordinate direction will do.
    std::vector<mpq_class> w(dim, 0);
    w[0] = 1;
    return CoverResult{false, std::move(w)};
  }

  // A direction u is uncovered iff for every set there is a point y with
  // <u, y> <= 0. Enumerate all choices of such a point, and test each
  // homogeneous system for a nonzero rational solution by pinning one
  // coordinate to +-1.
  std::vector<std::size_t> choice(closed.size(), 0);
  for (;;) {
    std::vector<Row> base;
    base.reserve(closed.size());
    for (std::size_t i = 0; i < closed.size(); ++i) {
      Row r;
      r.a.resize(dim);
      for (int j = 0; j < dim; ++j) r.a[j] = rat_of(closed[i][choice[i]][j]);
      r.b = 0;
      base.push_back(std::move(r));
    }
    for (int pin = 0; pin < dim; ++pin) {
      for (int sign = 1; sign >= -1; sign -= 2) {
        // Substitute u_pin = sign and solve for the remaining coordinates.
        std::vector<Row> rows;
        rows.reserve(base.size());
        for (const Row& r : base) {
          Row q;
          q.a.reserve(dim - 1);
          for (int j = 0; j < dim; ++j)
            if (j != pin) q.a.push_back(r.a[j]);
          q.b = r.b - r.a[pin] * sign;
          rows.push_back(std::move(q));
        }
        auto sol = fm_solve(std::move(rows), dim - 1);
        if (sol) {
          std::vector<mpq_class> u(dim);
          int at = 0;
          for (int j = 0; j < dim; ++j)
            u[j] = (j == pin) ? mpq_class(sign) : (*sol)[at++];
          return CoverResult{false, std::move(u)};
        }
      }
    }
    // Next choice function.
    std::size_t i = 0;
    while (i < closed.size()) {
      if (++choice[i] < closed[i].size()) break;
      choice[i] = 0;
      ++i;
    }
    if (i == closed.size()) break;
  }
  return CoverResult{true, {}};
}

}  // namespace tamepres
