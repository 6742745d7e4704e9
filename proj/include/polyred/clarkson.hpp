#ifndef POLYRED_CLARKSON_HPP
#define POLYRED_CLARKSON_HPP

// Output-sensitive redundancy removal. Instead of one LP over the whole
// system per row, each candidate is tested against the set E of rows already
// certified nonredundant. A candidate whose minimum over the E-region is
// nonnegative is redundant outright (the E-region contains the region of the
// full system minus the candidate). Otherwise the LP hands back a point or
// direction that violates the candidate, and a ray shot from a strict
// interior point toward it certifies the first row it crosses as
// nonredundant. LP sizes therefore never exceed the final nonredundant count.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "polyred/check.hpp"
#include "polyred/classify.hpp"
#include "polyred/polyhedron.hpp"
#include "polyred/rational.hpp"
#include "polyred/report.hpp"
#include "polyred/row.hpp"
#include "polyred/simplex.hpp"

namespace polyred {

// First-hit certificate: `row` is tight at `point` while every other row of
// the system is satisfied there.
struct HitCertificate {
  int row = -1;
  std::vector<Rational> point;
};

namespace detail {

// One candidate crossing along the shot, parameterized so that the crossing
// parameter is v(eps)/w after perturbing the interior point x* to
// x*(eps) = x* + sum_k eps^k e_k:
//   vpoly = [value at x*, a_1, ..., a_d]   (the value at x*(eps))
//   w     = -(value at target point) or -(rate along target direction), > 0
// For the point parameterization the crossing is v/(v+w) and for the
// direction one it is v/w; both compare as v_i(eps)*w_j < v_j(eps)*w_i.
struct Crossing {
  int row = -1;
  Rational w;
  std::vector<Rational> vpoly;
};

// Sign of w_j*v_i(eps) - w_i*v_j(eps) for infinitesimal eps > 0; zero only
// when the two rows are positively proportional.
inline int crossing_order(Crossing const& ci, Crossing const& cj) {
  for (std::size_t k = 0; k < ci.vpoly.size(); ++k) {
    Rational t = cj.w * ci.vpoly[k] - ci.w * cj.vpoly[k];
    if (t != 0) return t > 0 ? 1 : -1;
  }
  return 0;
}

// First row of `active` made tight along the shot from `interior` toward
// `target` (a point, or a direction when is_direction). Ties at the
// unperturbed first hit are broken by a symbolic lexicographic perturbation
// of the interior point, which is where the dedup precondition matters: two
// positively proportional rows cross at identical perturbed parameters.
inline int ray_shoot_rows(std::vector<Row> const& rows, std::vector<int> const& active,
                          std::vector<Rational> const& interior,
                          std::vector<Rational> const& target, bool is_direction,
                          std::vector<Rational>* hit_point = nullptr) {
  std::optional<Crossing> best;
  for (int i : active) {
    Row const& r = rows[static_cast<std::size_t>(i)];
    Rational v = r.value_at(interior);
    internal_check(v > 0, "ray_shoot: interior point is not strict");
    Rational w = is_direction ? -r.rate_along(target) : -r.value_at(target);
    if (w <= 0) continue;  // slack at the target / non-descending: never first
    Crossing c;
    c.row = i;
    c.w = std::move(w);
    c.vpoly.reserve(r.a.size() + 1);
    c.vpoly.push_back(std::move(v));
    for (auto const& ak : r.a) c.vpoly.push_back(ak);
    if (!best) {
      best = std::move(c);
      continue;
    }
    int s = crossing_order(c, *best);
    internal_check(s != 0, "ray_shoot: two crossing rows are positively proportional");
    if (s < 0) best = std::move(c);
  }
  internal_check(best.has_value(), "ray_shoot: target violates no active row");

  if (hit_point) {
    // Unperturbed crossing of the winner; tied rows are tight there too,
    // which still satisfies them.
    Rational v = best->vpoly.front();
    Rational t = is_direction ? Rational(v / best->w) : Rational(v / (v + best->w));
    std::vector<Rational> p = interior;
    for (std::size_t k = 0; k < p.size(); ++k) {
      Rational step = is_direction ? target[k] : target[k] - interior[k];
      p[k] += t * step;
    }
    *hit_point = std::move(p);
  }
  return best->row;
}

struct ClarksonCore {
  std::vector<int> essential;  // ascending
  std::map<int, RowClass> classes;
  std::vector<HitCertificate> certificates;  // insertion order
};

// `candidates` ascending; `interior` strict for each candidate row.
inline ClarksonCore clarkson_rows(std::vector<Row> const& rows, std::vector<int> const& candidates,
                                  std::vector<Rational> const& interior, int dim, LPStats* stats) {
  ClarksonCore res;
  std::vector<int>& E = res.essential;
  std::vector<int> redundant;

  for (int i : candidates) {
    while (!std::binary_search(E.begin(), E.end(), i)) {
      LPProblem lp;
      lp.sense = Sense::Min;
      lp.dim = dim;
      lp.objective = rows[static_cast<std::size_t>(i)];
      lp.constraints.reserve(E.size());
      for (int e : E) lp.constraints.push_back(rows[static_cast<std::size_t>(e)]);
      LPOutcome o = solve(lp, stats);
      internal_check(o.status != LPStatus::Infeasible, "clarkson: essential region is empty");
      if (o.status == LPStatus::Optimal && o.value >= 0) {
        redundant.push_back(i);
        break;
      }
      std::vector<Rational> where;
      int hit = o.status == LPStatus::Optimal
                    ? ray_shoot_rows(rows, candidates, interior, o.point, false, &where)
                    : ray_shoot_rows(rows, candidates, interior, o.direction, true, &where);
      auto pos = std::lower_bound(E.begin(), E.end(), hit);
      internal_check(pos == E.end() || *pos != hit, "clarkson: first hit is already essential");
      E.insert(pos, hit);
      res.certificates.push_back({hit, std::move(where)});
    }
  }

  // Exact split of the dropped rows. E now carves the same region as the full
  // candidate system, which for a redundant row equals the system without it,
  // so this minimum is the true z_min.
  for (int i : redundant) {
    LPProblem lp;
    lp.sense = Sense::Min;
    lp.dim = dim;
    lp.objective = rows[static_cast<std::size_t>(i)];
    lp.constraints.reserve(E.size());
    for (int e : E) lp.constraints.push_back(rows[static_cast<std::size_t>(e)]);
    LPOutcome o = solve(lp, stats);
    internal_check(o.status == LPStatus::Optimal && o.value >= 0,
                   "clarkson: dropped row re-solve disagrees");
    RowClass rc;
    rc.z_min = o.value;
    rc.verdict = o.value > 0 ? Verdict::StronglyRedundant : Verdict::WeaklyRedundant;
    rc.witness = std::move(o.point);
    res.classes.emplace(i, std::move(rc));
  }
  return res;
}

}  // namespace detail

// First row of P made tight along the segment from `interior` to `target`
// (or along the ray `interior + t*target` when is_direction). Requires a
// deduplicated plain inequality system and a strict interior point.
inline int ray_shoot(Polyhedron const& P, std::vector<Rational> const& interior,
                     std::vector<Rational> const& target, bool is_direction = false,
                     std::vector<Rational>* hit_point = nullptr) {
  internal_check(P.kind == RepKind::H && P.linearity.empty(),
                 "ray_shoot: plain inequality system required");
  std::vector<int> active(static_cast<std::size_t>(P.row_count()));
  std::iota(active.begin(), active.end(), 0);
  return detail::ray_shoot_rows(P.rows, active, interior, target, is_direction, hit_point);
}

// Redundancy removal for a full-dimensional, deduplicated plain inequality
// system. The interior point is computed when not supplied. LP work is
// bounded by the final nonredundant count, which is what makes this
// worthwhile on highly redundant inputs.
inline MinRepReport clarkson_nonredundant(Polyhedron const& P, LPStats* stats = nullptr,
                                          std::optional<std::vector<Rational>> interior = std::nullopt,
                                          std::vector<HitCertificate>* certificates = nullptr) {
  internal_check(P.kind == RepKind::H && P.linearity.empty(),
                 "clarkson: plain inequality system required");
  if (!interior.has_value()) {
    FullDimResult fd = full_dimension_test(P, nullptr);
    internal_check(fd.is_full, "clarkson: system is not full-dimensional");
    interior = std::move(fd.interior);
  }
  std::vector<int> cand(static_cast<std::size_t>(P.row_count()));
  std::iota(cand.begin(), cand.end(), 0);
  detail::ClarksonCore core = detail::clarkson_rows(P.rows, cand, *interior, P.dim, stats);

  MinRepReport rep;
  rep.feasible = true;
  rep.is_full = true;
  rep.used_clarkson = true;
  rep.interior = std::move(*interior);
  rep.final_nonredundant = std::move(core.essential);
  rep.classes = std::move(core.classes);
  if (certificates) *certificates = std::move(core.certificates);
  return rep;
}

}  // namespace polyred

#endif  // POLYRED_CLARKSON_HPP
