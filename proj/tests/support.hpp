#pragma once

// Shared test scaffolding: a deterministic RNG, instance generators with
// known structure (guaranteed-feasible systems, injected redundancy,
// V-inputs on the unit sphere), and report comparison helpers.

#include <polyred/polyred.hpp>

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace testsup {

using namespace polyred;

// SplitMix64: identical sequences on every platform, no <random> involved.
struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed) {}

  std::uint64_t next() {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform over [lo, hi], inclusive.
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational coeff(int mag = 9) { return Rational(uniform(-mag, mag)); }
};

struct RowLess {
  bool operator()(Row const& l, Row const& r) const { return lex_less(l, r); }
};

inline Row random_row_nonzero(Rng& rng, int dim, int mag = 9) {
  for (;;) {
    std::vector<Rational> a(static_cast<std::size_t>(dim));
    bool any = false;
    for (auto& c : a) {
      c = rng.coeff(mag);
      if (c != 0) any = true;
    }
    if (any) return Row(Rational(0), std::move(a));
  }
}

// Random H-system built around an anchor point so feasibility never depends
// on luck: each row's constant is chosen to leave the requested slack at the
// anchor. Slack 0 rows are tight there (linearity bait), slack > 0 rows keep
// the anchor in the strict interior of their halfspace.
struct InstanceSpec {
  int dim = 3;
  int rows = 8;
  int equations = 0;  // declared linearities, tight at the anchor
  int tight = 0;      // inequalities tight at the anchor
  int coeff_mag = 9;
  int max_slack = 6;
};

inline Polyhedron random_h(Rng& rng, InstanceSpec const& spec) {
  std::vector<Rational> anchor(static_cast<std::size_t>(spec.dim));
  for (auto& c : anchor) c = Rational(rng.uniform(-3, 3));

  std::vector<Row> rows;
  std::vector<int> linearity;
  rows.reserve(static_cast<std::size_t>(spec.rows));
  for (int i = 0; i < spec.rows; ++i) {
    Row r = random_row_nonzero(rng, spec.dim, spec.coeff_mag);
    int slack = 0;
    if (i < spec.equations)
      linearity.push_back(i);
    else if (i >= spec.equations + spec.tight)
      slack = rng.uniform(0, spec.max_slack);
    r.b = Rational(slack) - r.rate_along(anchor);
    rows.push_back(std::move(r));
  }
  return make_h(spec.dim, std::move(rows), std::move(linearity));
}

// Same anchor trick plus a bounding box, so every instance is a polytope.
inline Polyhedron random_bounded_h(Rng& rng, int dim, int extra_rows, int box = 8) {
  InstanceSpec spec;
  spec.dim = dim;
  spec.rows = extra_rows;
  spec.tight = extra_rows > 1 ? rng.uniform(0, 1) : 0;
  Polyhedron P = random_h(rng, spec);
  std::vector<Row> rows = P.rows;
  for (int j = 0; j < dim; ++j) {
    std::vector<Rational> lo(static_cast<std::size_t>(dim)), hi(static_cast<std::size_t>(dim));
    lo[static_cast<std::size_t>(j)] = 1;
    hi[static_cast<std::size_t>(j)] = -1;
    rows.emplace_back(Rational(box), std::move(lo));
    rows.emplace_back(Rational(box), std::move(hi));
  }
  return make_h(dim, std::move(rows), P.linearity);
}

// Full-dimensional system with an interior point of slack >= 1 on every row,
// deduplicated by normal form, then padded with rows that are redundant by
// construction (positive combinations of earlier rows, optionally loosened).
// redundant_frac sweeps 0..95 (percent).
inline Polyhedron random_full_dim(Rng& rng, int dim, int total_rows, int redundant_pct) {
  std::vector<Rational> anchor(static_cast<std::size_t>(dim));
  for (auto& c : anchor) c = Rational(rng.uniform(-2, 2));

  int redundant = total_rows * redundant_pct / 100;
  int essential = total_rows - redundant;
  if (essential < 2) {
    essential = 2;
    redundant = total_rows - essential;
  }

  std::vector<Row> rows;
  std::set<Row, RowLess> seen;  // normal forms
  auto push_unique = [&](Row r) {
    Row key = gcd_normalize(r);
    if (!seen.insert(std::move(key)).second) return false;
    rows.push_back(std::move(r));
    return true;
  };

  while (static_cast<int>(rows.size()) < essential) {
    Row r = random_row_nonzero(rng, dim);
    r.b = Rational(rng.uniform(1, 5)) - r.rate_along(anchor);
    push_unique(std::move(r));
  }
  int guard = 0;
  while (static_cast<int>(rows.size()) < total_rows && guard < 50 * total_rows) {
    ++guard;
    std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(rows.size()) - 1));
    std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(rows.size()) - 1));
    Row r = scaled(rows[i], Rational(rng.uniform(1, 3)));
    if (j != i) r = axpy(std::move(r), Rational(rng.uniform(1, 3)), rows[j]);
    r.b += rng.uniform(0, 2);
    if (r.coefficients_zero()) continue;
    push_unique(std::move(r));
  }
  return make_h(dim, std::move(rows));
}

inline std::pair<Rational, Rational> stereographic_pair(Rng& rng, int max_num, int max_den) {
  Rational u(rng.uniform(-max_num, max_num), rng.uniform(1, max_den));
  Rational v(rng.uniform(-max_num, max_num), rng.uniform(1, max_den));
  return {u, v};
}

// V-input: `count` distinct rational points on the unit sphere in R^3 via
// stereographic parameters, plus (optionally) the origin injected mid-list as
// the single redundant generator. Every sphere point is an extreme point of
// the hull, so the expected minimum representation keeps exactly the sphere
// points.
inline Polyhedron sphere_v_input(int count, bool inject_interior, std::uint64_t seed = 2026) {
  Rng rng(seed);
  std::set<std::vector<Rational>> seen;
  std::vector<Row> rows;
  rows.reserve(static_cast<std::size_t>(count) + 1);
  while (static_cast<int>(seen.size()) < count) {
    auto [u, v] = stereographic_pair(rng, 24, 5);
    Rational d = u * u + v * v + 1;
    std::vector<Rational> p{2 * u / d, 2 * v / d, (u * u + v * v - 1) / d};
    if (!seen.insert(p).second) continue;
    rows.emplace_back(Rational(1), std::move(p));
  }
  if (inject_interior) {
    std::vector<Rational> origin(3, Rational(0));
    rows.insert(rows.begin() + count / 2, Row(Rational(1), std::move(origin)));
  }
  return make_v(3, std::move(rows));
}

// Cross-polytope facets in R^4 (16 rows, all essential) padded with redundant
// combinations up to total_rows, mirroring a heavily redundant dual-cube run.
inline Polyhedron ducube_miniature(int total_rows, std::uint64_t seed = 7) {
  int const d = 4;
  std::vector<Row> rows;
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<Rational> a(4);
    for (int j = 0; j < 4; ++j) a[static_cast<std::size_t>(j)] = (mask >> j) & 1 ? 1 : -1;
    rows.emplace_back(Rational(1), std::move(a));
  }
  Rng rng(seed);
  std::set<Row, RowLess> seen;
  for (Row const& r : rows) seen.insert(gcd_normalize(r));
  int guard = 0;
  while (static_cast<int>(rows.size()) < total_rows && guard < 100 * total_rows) {
    ++guard;
    std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(rows.size()) - 1));
    std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(rows.size()) - 1));
    Row r = scaled(rows[i], Rational(rng.uniform(1, 3)));
    if (j != i) r = axpy(std::move(r), Rational(rng.uniform(1, 3)), rows[j]);
    r.b += rng.uniform(0, 2);
    if (r.coefficients_zero()) continue;
    Row key = gcd_normalize(r);
    if (!seen.insert(std::move(key)).second) continue;
    rows.push_back(std::move(r));
  }
  return make_h(d, std::move(rows));
}

// Unit cube [0,1]^d as 2d inequality rows: x_j >= 0 first, then 1 - x_j >= 0.
inline Polyhedron unit_cube(int d) {
  std::vector<Row> rows;
  rows.reserve(static_cast<std::size_t>(2 * d));
  for (int j = 0; j < d; ++j) {
    std::vector<Rational> a(static_cast<std::size_t>(d));
    a[static_cast<std::size_t>(j)] = 1;
    rows.emplace_back(Rational(0), std::move(a));
  }
  for (int j = 0; j < d; ++j) {
    std::vector<Rational> a(static_cast<std::size_t>(d));
    a[static_cast<std::size_t>(j)] = -1;
    rows.emplace_back(Rational(1), std::move(a));
  }
  return make_h(d, std::move(rows));
}

inline bool rowclass_equal(RowClass const& l, RowClass const& r) {
  return l.verdict == r.verdict && l.min_unbounded == r.min_unbounded &&
         (l.min_unbounded || l.z_min == r.z_min) && l.max_ran == r.max_ran &&
         l.max_unbounded == r.max_unbounded &&
         (!l.max_ran || l.max_unbounded || l.z_max == r.z_max) && l.witness == r.witness;
}

// Bit-exact report equality (parallel determinism is stated at this level).
inline bool report_equal(MinRepReport const& l, MinRepReport const& r) {
  if (l.feasible != r.feasible || l.farkas != r.farkas) return false;
  if (l.final_linearity != r.final_linearity) return false;
  if (l.final_nonredundant != r.final_nonredundant) return false;
  if (l.duplicate_of != r.duplicate_of) return false;
  if (l.dependent_equations != r.dependent_equations) return false;
  if (l.substitutions != r.substitutions) return false;
  if (l.is_full != r.is_full || l.used_clarkson != r.used_clarkson) return false;
  if (l.interior != r.interior) return false;
  if (l.classes.size() != r.classes.size()) return false;
  for (auto const& [i, rc] : l.classes) {
    auto it = r.classes.find(i);
    if (it == r.classes.end() || !rowclass_equal(rc, it->second)) return false;
  }
  return true;
}

// Feasibility of { x : P holds, x_keep = y } — the membership LP behind
// projection testing. Columns listed in keep are fixed to y; the rest stay
// free variables of a zero-objective LP.
inline bool fiber_feasible(Polyhedron const& P, std::vector<int> const& keep,
                           std::vector<Rational> const& y) {
  std::vector<int> elim;
  std::vector<bool> kept(static_cast<std::size_t>(P.dim), false);
  for (int c : keep) kept[static_cast<std::size_t>(c)] = true;
  for (int c = 0; c < P.dim; ++c)
    if (!kept[static_cast<std::size_t>(c)]) elim.push_back(c);

  LPProblem p;
  p.dim = static_cast<int>(elim.size());
  internal_check(p.dim >= 1, "fiber_feasible: nothing eliminated");
  p.objective = Row(Rational(0), std::vector<Rational>(static_cast<std::size_t>(p.dim)));
  for (std::size_t i = 0; i < P.rows.size(); ++i) {
    Row const& r = P.rows[i];
    Rational b = r.b;
    for (std::size_t k = 0; k < keep.size(); ++k)
      b += r.a[static_cast<std::size_t>(keep[k])] * y[k];
    std::vector<Rational> a;
    a.reserve(elim.size());
    for (int c : elim) a.push_back(r.a[static_cast<std::size_t>(c)]);
    Row sub(std::move(b), std::move(a));
    if (P.is_linearity(static_cast<int>(i))) {
      p.constraints.push_back(scaled(sub, Rational(-1)));
      p.constraints.push_back(std::move(sub));
    } else {
      p.constraints.push_back(std::move(sub));
    }
  }
  return solve(p).status != LPStatus::Infeasible;
}

// Deterministic sample point in the kept coordinates: small halves grid.
inline std::vector<Rational> sample_point(Rng& rng, std::size_t k, int box = 8) {
  std::vector<Rational> y(k);
  for (auto& c : y) c = Rational(rng.uniform(-2 * box, 2 * box), 2);
  return y;
}

inline std::vector<int> identity_columns(int d) {
  std::vector<int> v(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) v[static_cast<std::size_t>(j)] = j;
  return v;
}

// Applies a permutation to the rows of P: row i of the result is row perm[i]
// of P. Linearity markers follow their rows.
inline Polyhedron permuted(Polyhedron const& P, std::vector<int> const& perm) {
  std::vector<Row> rows;
  rows.reserve(P.rows.size());
  std::vector<int> lin;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    rows.push_back(P.rows[static_cast<std::size_t>(perm[i])]);
    if (P.is_linearity(perm[i])) lin.push_back(static_cast<int>(i));
  }
  Polyhedron Q = P.kind == RepKind::H ? make_h(P.dim, std::move(rows), std::move(lin))
                                      : make_v(P.dim, std::move(rows), std::move(lin));
  return Q;
}

inline std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    int j = rng.uniform(0, i);
    std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
  }
  return p;
}

}  // namespace testsup
