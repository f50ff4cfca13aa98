#include "tamepres/radius.hpp"

#include "tamepres/rational.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

namespace tamepres {

namespace {

mpq_class floor_to_grid(const mpq_class& q, unsigned long grid = 1000000) {
  mpz_class scaled_num = q.get_num() * grid;
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), scaled_num.get_mpz_t(), q.get_den().get_mpz_t());
  mpq_class r(f, grid);
  r.canonicalize();
  return r;
}

mpq_class ceil_to_grid(const mpq_class& q, unsigned long grid = 1000000) {
  mpz_class scaled_num = q.get_num() * grid;
  mpz_class f;
  mpz_cdiv_q(f.get_mpz_t(), scaled_num.get_mpz_t(), q.get_den().get_mpz_t());
  mpq_class r(f, grid);
  r.canonicalize();
  return r;
}

// Rational upper bound on sqrt(n), n >= 1.
mpq_class sqrt_upper(int n) {
  if (n == 1) return 1;
  mpq_class x = n;  // >= sqrt(n)
  for (int i = 0; i < 6; ++i) x = (x + mpq_class(n) / x) / 2;
  return ceil_to_grid(x);
}

struct Interval {
  mpq_class lo, hi;
};

// Exact minimum of <u, y> over the box.
mpq_class box_min_dot(const std::vector<Interval>& box,
                      const std::vector<long long>& y) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < box.size(); ++i) {
    const mpq_class a = box[i].lo * rat_of(y[i]);
    const mpq_class b = box[i].hi * rat_of(y[i]);
    s += a < b ? a : b;
  }
  return s;
}

mpq_class certify_box(const std::vector<LatticeSet>& family,
                      std::vector<Interval>& box, int fixed, int depth,
                      int max_depth) {
  std::optional<mpq_class> best;
  for (const auto& L : family) {
    std::optional<mpq_class> set_min;
    for (const auto& y : L.points) {
      mpq_class m = box_min_dot(box, y);
      if (!set_min || m < *set_min) set_min = m;
    }
    if (set_min && (!best || *set_min > *best)) best = *set_min;
  }
  if (best && *best > 0) return *best;
  if (depth >= max_depth)
    throw NeedSmallerBoxes("box subdivision depth cap reached");

  // Split the widest free dimension.
  int split = -1;
  mpq_class width = 0;
  for (std::size_t i = 0; i < box.size(); ++i) {
    if (static_cast<int>(i) == fixed) continue;
    mpq_class w = box[i].hi - box[i].lo;
    if (w > width) {
      width = w;
      split = static_cast<int>(i);
    }
  }
  if (split < 0)
    throw NeedSmallerBoxes("degenerate box cannot be subdivided");
  const mpq_class mid = (box[split].lo + box[split].hi) / 2;
  const Interval saved = box[split];
  box[split] = {saved.lo, mid};
  mpq_class a = certify_box(family, box, fixed, depth + 1, max_depth);
  box[split] = {mid, saved.hi};
  mpq_class b = certify_box(family, box, fixed, depth + 1, max_depth);
  box[split] = saved;
  return a < b ? a : b;
}

long long norm2(const std::vector<long long>& x) {
  long long s = 0;
  for (long long v : x) s += v * v;
  return s;
}

void enumerate_ball(int dim, long long bound2,
                    std::vector<long long>& current, int coord,
                    long long used,
                    const std::function<void(const std::vector<long long>&)>&
                        visit) {
  if (coord == dim) {
    visit(current);
    return;
  }
  long long r = 0;
  while ((r + 1) * (r + 1) <= bound2 - used) ++r;
  for (long long v = -r; v <= r; ++v) {
    current[coord] = v;
    enumerate_ball(dim, bound2, current, coord + 1, used + v * v, visit);
  }
  current[coord] = 0;
}

}  // namespace

mpq_class positivity_margin(const std::vector<LatticeSet>& family, int dim,
                            int max_depth) {
  if (family.empty()) throw Error("margin family must be nonempty");
  for (const auto& L : family)
    if (L.dim != dim)
      throw DimensionMismatch("family member has wrong dimension");

  // The family is used as given, so it must already contain the antipode
  // of each member.
  std::set<std::vector<std::vector<long long>>> pointsets;
  for (const auto& L : family) pointsets.insert(L.points);
  for (const auto& L : family)
    if (!pointsets.count(negate_lattice_set(L).points))
      throw Error("margin family is not closed under negation");

  CoverResult cover = antipodal_cover(family, dim);
  if (!cover.covered)
    throw NotCovered("cone family does not cover the sphere",
                     std::move(cover.witness));

  std::optional<mpq_class> cube_min;
  for (int fixed = 0; fixed < dim; ++fixed) {
    for (int sign = 1; sign >= -1; sign -= 2) {
      std::vector<Interval> box(dim, Interval{-1, 1});
      box[fixed] = {mpq_class(sign), mpq_class(sign)};
      mpq_class d = certify_box(family, box, fixed, 0, max_depth);
      if (!cube_min || d < *cube_min) cube_min = d;
    }
  }
  // Rescale from the cube boundary to the unit sphere.
  mpq_class c = *cube_min / sqrt_upper(dim);
  mpq_class floored = floor_to_grid(c);
  return floored > 0 ? floored : c;
}

RadiusCert compute_p0(const std::vector<LatticeSet>& family, int dim) {
  if (family.empty()) throw Error("cover family must be nonempty");
  // Close under negation, dropping duplicates.
  std::vector<LatticeSet> closed;
  std::set<std::vector<std::vector<long long>>> seen;
  for (const auto& L : family) {
    if (L.dim != dim)
      throw DimensionMismatch("family member has wrong dimension");
    if (seen.insert(L.points).second) closed.push_back(L);
    LatticeSet neg = negate_lattice_set(L);
    if (seen.insert(neg.points).second) closed.push_back(std::move(neg));
  }

  RadiusCert cert;
  cert.dim = dim;
  cert.family = closed;
  cert.margin = positivity_margin(closed, dim);

  long long m2 = 0;
  for (const auto& L : closed)
    for (const auto& y : L.points) m2 = std::max(m2, norm2(y));
  cert.max_norm2 = m2;
  cert.tail_bound = rat_of(m2 + 1) / (2 * cert.margin);

  mpz_class rceil_z;
  mpz_cdiv_q(rceil_z.get_mpz_t(), cert.tail_bound.get_num().get_mpz_t(),
             cert.tail_bound.get_den().get_mpz_t());
  if (!rceil_z.fits_slong_p()) throw Error("tail bound is unreasonably large");
  const long long rceil = rceil_z.get_si();
  cert.scan_bound2 = rceil * rceil;

  const mpq_class rstar2 = cert.tail_bound * cert.tail_bound;
  std::vector<long long> current(dim, 0);
  enumerate_ball(dim, cert.scan_bound2, current, 0, 0,
                 [&](const std::vector<long long>& x) {
                   const long long n2 = norm2(x);
                   if (n2 == 0) return;
                   bool good = false;
                   for (const auto& L : closed) {
                     bool all_inward = true;
                     for (const auto& y : L.points) {
                       std::vector<long long> z(x.size());
                       for (std::size_t j = 0; j < x.size(); ++j)
                         z[j] = x[j] + y[j];
                       if (norm2(z) > n2 - 1) {
                         all_inward = false;
                         break;
                       }
                     }
                     if (all_inward) {
                       good = true;
                       break;
                     }
                   }
                   if (!good) {
                     if (rat_of(n2) > rstar2)
                       throw Error(
                           "internal: covering move failed beyond the tail "
                           "bound");
                     cert.bad_points.push_back(x);
                   }
                 });
  std::sort(cert.bad_points.begin(), cert.bad_points.end());
  cert.p0 = 0;
  for (const auto& x : cert.bad_points) cert.p0 = std::max(cert.p0, norm2(x));
  return cert;
}

std::string render_radius_cert(const RadiusCert& cert) {
  std::ostringstream os;
  os << "  family: " << cert.family.size() << " sets\n";
  for (const auto& L : cert.family)
    os << "    " << render_lattice_set(L) << "\n";
  os << "  margin: " << cert.margin.get_str() << "\n";
  os << "  M2: " << cert.max_norm2 << "\n";
  os << "  Rstar: " << cert.tail_bound.get_str() << "\n";
  os << "  scan: |x|^2 <= " << cert.scan_bound2 << "\n";
  os << "  bad:";
  if (cert.bad_points.empty()) os << " none";
  for (const auto& x : cert.bad_points) {
    os << " (";
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (j) os << ",";
      os << x[j];
    }
    os << ")";
  }
  os << "\n";
  os << "  p0: " << cert.p0 << "\n";
  return os.str();
}

}  // namespace tamepres
