#pragma once

// Brute-force ground truth at desk scale. Everything here enumerates basis
// subsets (no simplex), so results are independent of the LP solver and can
// sit on the other side of a cross-check. Guard rails are hard errors: this
// module must never silently become a production path.

#include <polyred/classify.hpp>
#include <polyred/linalg.hpp>
#include <polyred/polyhedron.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace polyred {

struct GuardRailError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int oracle_max_dim = 6;
inline constexpr int oracle_max_rows = 24;

namespace detail {

inline void oracle_guard(int dim, int rows, int max_dim = oracle_max_dim,
                         int max_rows = oracle_max_rows) {
  if (dim > max_dim || rows > max_rows)
    throw GuardRailError("oracle guard rail exceeded: brute-force enumeration accepts at most " +
                         std::to_string(max_dim) + " dimensions and " + std::to_string(max_rows) +
                         " rows");
}

// Calls f on every k-subset of {0..m-1} in lexicographic order.
template <typename F>
void for_each_subset(int m, int k, F&& f) {
  if (k < 0 || k > m) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) idx[static_cast<std::size_t>(j)] = j;
  while (true) {
    f(static_cast<std::vector<int> const&>(idx));
    int j = k - 1;
    while (j >= 0 && idx[static_cast<std::size_t>(j)] == m - k + j) --j;
    if (j < 0) return;
    ++idx[static_cast<std::size_t>(j)];
    for (int t = j + 1; t < k; ++t)
      idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
  }
}

// Sort candidate (coordinates, basis) pairs and keep the first basis seen
// (enumeration order) for each distinct coordinate vector.
inline void dedup_candidates(std::vector<std::pair<std::vector<Rational>, std::vector<int>>>& cand,
                             std::vector<std::vector<Rational>>& points,
                             std::vector<std::vector<int>>& bases) {
  std::stable_sort(cand.begin(), cand.end(), [](auto const& l, auto const& r) {
    return std::lexicographical_compare(l.first.begin(), l.first.end(), r.first.begin(),
                                        r.first.end());
  });
  for (auto& c : cand) {
    if (!points.empty() && c.first == points.back()) continue;  // back() is intact, c may repeat it
    points.push_back(std::move(c.first));
    bases.push_back(std::move(c.second));
  }
}

}  // namespace detail

struct VertexList {
  std::vector<std::vector<Rational>> vertices;
  std::vector<std::vector<Rational>> rays;     // scale-normalized, deduplicated
  std::vector<std::vector<int>> source_bases;  // tight row subsets, aligned with vertices
  std::vector<std::vector<int>> ray_bases;     // aligned with rays
};

namespace detail {

inline VertexList enumerate_core(Polyhedron const& P, int max_dim, int max_rows) {
  internal_check(P.kind == RepKind::H, "enumerate_vertices: H-representation required");
  oracle_guard(P.dim, P.row_count(), max_dim, max_rows);
  int const d = P.dim;
  int const m = P.row_count();
  VertexList out;

  // Vertices: unique solutions of d tight rows, feasible for the whole system.
  std::vector<std::pair<std::vector<Rational>, std::vector<int>>> cand;
  for_each_subset(m, d, [&](std::vector<int> const& S) {
    std::vector<Row> sys;
    sys.reserve(S.size());
    for (int i : S) sys.push_back(P.rows[static_cast<std::size_t>(i)]);
    auto x = solve_unique(sys, d);
    if (!x || !contains(P, *x)) return;
    cand.emplace_back(std::move(*x), S);
  });
  dedup_candidates(cand, out.vertices, out.source_bases);

  // Rays: one-dimensional null directions of d-1 tight rows, feasible for the
  // recession system in at least one orientation.
  cand.clear();
  for_each_subset(m, d - 1, [&](std::vector<int> const& S) {
    std::vector<Row> sys;
    sys.reserve(S.size());
    for (int i : S) sys.push_back(P.rows[static_cast<std::size_t>(i)]);
    auto basis = nullspace(sys, d);
    if (basis.size() != 1) return;
    Row dir{Rational(0), std::move(basis.front())};
    dir = gcd_normalize(std::move(dir));
    for (int sign = 0; sign < 2; ++sign) {
      if (sign == 1) dir = scaled(std::move(dir), Rational(-1));
      if (admits_ray(P, dir.a)) cand.emplace_back(dir.a, S);
    }
  });
  dedup_candidates(cand, out.rays, out.ray_bases);
  return out;
}

}  // namespace detail

// Every vertex of P (solutions of d independent tight rows that satisfy all
// rows) plus every feasible one-dimensional tight direction of its recession
// cone. Non-pointed inputs legitimately return an empty vertex list.
inline VertexList enumerate_vertices(Polyhedron const& P) {
  return detail::enumerate_core(P, oracle_max_dim, oracle_max_rows);
}

// Classification of inequality row i by exhaustive enumeration instead of
// LPs. The system without row i is first factored by its lineality space
// (directions along which every row is constant); if row i itself varies
// along such a direction it takes every value and is non-redundant.
// Otherwise the quotient is pointed, its vertices and rays are enumerated,
// and the verdict is read from min/max of row i over vertices and the sign
// of its rate along each ray.
inline RowClass naive_classify(Polyhedron const& P, int i) {
  internal_check(P.kind == RepKind::H, "naive_classify: H-representation required");
  detail::oracle_guard(P.dim, P.row_count());
  internal_check(i >= 0 && i < P.row_count(), "naive_classify: row index out of range");
  internal_check(!P.is_linearity(i), "naive_classify: target must be an inequality row");
  int const d = P.dim;
  Row const& obj = P.rows[static_cast<std::size_t>(i)];

  std::vector<Row> rows;
  std::vector<int> lin;
  rows.reserve(P.rows.size() - 1);
  for (int j = 0; j < P.row_count(); ++j) {
    if (j == i) continue;
    if (P.is_linearity(j)) lin.push_back(static_cast<int>(rows.size()));
    rows.push_back(P.rows[static_cast<std::size_t>(j)]);
  }

  auto lines = nullspace(rows, d);
  for (auto const& v : lines) {
    if (obj.rate_along(v) == 0) continue;
    // Row i runs to -inf and +inf along a full line of the sub-system.
    RowClass rc;
    rc.verdict = Verdict::NonRedundant;
    rc.min_unbounded = true;
    rc.max_ran = true;
    rc.max_unbounded = true;
    return rc;
  }

  QuotientMap qm = quotient_by(lines, d);
  Row qobj = qm.pull_row(obj);

  if (qm.reduced == 0) {
    // Every row is a constant; the sub-system is all of space or empty.
    for (std::size_t k = 0; k < rows.size(); ++k) {
      bool iseq = std::binary_search(lin.begin(), lin.end(), static_cast<int>(k));
      internal_check(iseq ? rows[k].b == 0 : rows[k].b >= 0,
                     "naive_classify: sub-system is infeasible");
    }
    RowClass rc;
    rc.z_min = qobj.b;
    rc.z_max = qobj.b;
    rc.max_ran = true;
    rc.verdict = qobj.b == 0  ? Verdict::Linearity
                 : qobj.b > 0 ? Verdict::StronglyRedundant
                              : Verdict::NonRedundant;
    rc.witness = qm.inject({});
    return rc;
  }

  std::vector<Row> qrows;
  qrows.reserve(rows.size());
  for (auto const& r : rows) qrows.push_back(qm.pull_row(r));
  VertexList vl = enumerate_vertices(make_h(qm.reduced, std::move(qrows), lin));
  internal_check(!vl.vertices.empty(), "naive_classify: sub-system is infeasible");

  RowClass rc;
  rc.max_ran = true;
  std::size_t argmin = 0, argmax = 0;
  Rational zmin = qobj.value_at(vl.vertices[0]);
  Rational zmax = zmin;
  for (std::size_t k = 1; k < vl.vertices.size(); ++k) {
    Rational v = qobj.value_at(vl.vertices[k]);
    if (v < zmin) zmin = v, argmin = k;
    if (v > zmax) zmax = v, argmax = k;
  }
  std::vector<Rational> const* down_ray = nullptr;
  for (auto const& r : vl.rays) {
    Rational rate = qobj.rate_along(r);
    if (rate < 0 && !down_ray) down_ray = &r;
    if (rate < 0) rc.min_unbounded = true;
    if (rate > 0) rc.max_unbounded = true;
  }
  if (!rc.min_unbounded) rc.z_min = zmin;
  if (!rc.max_unbounded) rc.z_max = zmax;

  if (!rc.max_unbounded && zmax == 0) {
    rc.verdict = Verdict::Linearity;
    rc.witness = qm.inject(vl.vertices[argmax]);
  } else if (!rc.min_unbounded && zmin > 0) {
    rc.verdict = Verdict::StronglyRedundant;
    rc.witness = qm.inject(vl.vertices[argmin]);
  } else if (!rc.min_unbounded && zmin == 0) {
    rc.verdict = Verdict::WeaklyRedundant;
    rc.witness = qm.inject(vl.vertices[argmin]);
  } else {
    rc.verdict = Verdict::NonRedundant;
    if (!rc.min_unbounded) {
      rc.witness = qm.inject(vl.vertices[argmin]);
    } else {
      // Walk from any vertex along the descending ray until row i goes
      // negative; every other row is nondecreasing along it.
      std::vector<Rational> base = qm.inject(vl.vertices[0]);
      std::vector<Rational> dir = qm.inject(*down_ray);
      Rational bval = obj.value_at(base);
      Rational rate = obj.rate_along(dir);
      Rational t = bval <= 0 ? Rational(1) : bval / -rate + 1;
      for (int k = 0; k < d; ++k) base[static_cast<std::size_t>(k)] += t * dir[static_cast<std::size_t>(k)];
      rc.witness = std::move(base);
    }
  }
  return rc;
}

// H-representation of a V-representation, by ray-enumerating the dual cone.
//
// The homogenization C = cone{(1, vᵢ)} + cone{(0, rⱼ)} + span{(0, lₖ)} has
// dual C* = { (b, a) : b + a·x >= 0 valid on P }, presented as an
// H-cone whose rows are C's generators. The lineality space of C* is exactly
// the affine-hull equations of P; quotienting it out leaves a pointed cone
// whose extreme rays are P's facet inequalities plus at most one functional
// that is constant on the affine hull (dropped). Output rows are normalized
// and sorted, equations first.
inline Polyhedron facet_enumerate(Polyhedron const& V) {
  internal_check(V.kind == RepKind::V, "facet_enumerate: V-representation required");
  int const d = V.dim;
  bool has_vertex = false;
  for (int i = 0; i < V.row_count(); ++i)
    if (!V.is_linearity(i) && V.rows[static_cast<std::size_t>(i)].b == 1) has_vertex = true;
  if (!has_vertex)
    throw std::invalid_argument("facet_enumerate: V-representation without a vertex is empty");

  // Dual-cone rows over (b, a)-space; lineality rows contribute both signs.
  std::vector<Row> gens;
  for (int i = 0; i < V.row_count(); ++i) {
    Row const& r = V.rows[static_cast<std::size_t>(i)];
    Row g;
    g.b = 0;
    g.a.reserve(static_cast<std::size_t>(d) + 1);
    g.a.push_back(r.b);
    for (auto const& c : r.a) g.a.push_back(c);
    if (V.is_linearity(i)) gens.push_back(scaled(g, Rational(-1)));
    gens.push_back(std::move(g));
  }
  detail::oracle_guard(d + 1, static_cast<int>(gens.size()), oracle_max_dim + 1);

  // Affine-hull equations = lineality of the dual cone.
  auto hull = nullspace(gens, d + 1);
  std::vector<Row> eqs;
  for (auto const& w : hull) {
    Row e;
    e.b = w.front();
    e.a.assign(w.begin() + 1, w.end());
    eqs.push_back(normalize_equation(std::move(e)));
  }
  std::sort(eqs.begin(), eqs.end(), lex_less);

  QuotientMap qm = quotient_by(hull, d + 1);
  std::vector<Row> qgens;
  qgens.reserve(gens.size());
  for (auto const& g : gens) qgens.push_back(qm.pull_row(g));
  VertexList polar =
      detail::enumerate_core(make_h(qm.reduced, std::move(qgens), {}), oracle_max_dim + 1,
                             static_cast<int>(gens.size()));

  // Functionals whose coefficient part vanishes modulo the equations are
  // constant on the affine hull: not facets.
  std::vector<Row> eqcoef;
  for (auto const& e : eqs) eqcoef.push_back(Row{Rational(0), e.a});
  GaussianReduction eqred = gaussian_reduce(eqcoef);

  std::vector<Row> facets;
  for (auto const& ybar : polar.rays) {
    std::vector<Rational> y = qm.inject(ybar);
    Row f;
    f.b = y.front();
    f.a.assign(y.begin() + 1, y.end());
    if (substitute_equations(eqred, Row{Rational(0), f.a}).coefficients_zero()) continue;
    facets.push_back(gcd_normalize(std::move(f)));
  }
  std::sort(facets.begin(), facets.end(), lex_less);

  std::vector<Row> rows = eqs;
  rows.insert(rows.end(), facets.begin(), facets.end());
  std::vector<int> linearity(eqs.size());
  for (std::size_t k = 0; k < eqs.size(); ++k) linearity[k] = static_cast<int>(k);
  return make_h(d, std::move(rows), std::move(linearity));
}

}  // namespace polyred
