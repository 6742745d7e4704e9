#ifndef POLYRED_MINREP_HPP
#define POLYRED_MINREP_HPP

// Minimum representation pipeline. Order of operations:
//
//   0. emptiness pre-check (one feasibility LP, equations substituted out)
//   a. interior-point test: is the system full-dimensional relative to its
//      declared equations?
//   b. if not, classify every inequality with the maximization leg enabled to
//      dig out hidden linearities (skipped when full — there are none)
//   c. reduce declared plus discovered equations to an independent basis
//   d. substitute the basis into the surviving inequalities (pivot columns
//      zeroed; values on the solution set are unchanged)
//   e. scale-normalize and deduplicate; duplicates cannot be told apart by
//      per-row LPs, which is why this must happen before the final pass
//   f. classify the survivors against the deduplicated system; rows already
//      known nonredundant from (b) are stable and skip the retest
//
// Verdicts always refer to the final system, where the equation basis is
// pinned; all indices in the report are input row indices.

#include <algorithm>
#include <iterator>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "polyred/check.hpp"
#include "polyred/clarkson.hpp"
#include "polyred/classify.hpp"
#include "polyred/linalg.hpp"
#include "polyred/parallel.hpp"
#include "polyred/polyhedron.hpp"
#include "polyred/rational.hpp"
#include "polyred/report.hpp"
#include "polyred/row.hpp"
#include "polyred/simplex.hpp"

namespace polyred {

struct MinRepOptions {
  int workers = 1;
  // Hunt hidden linearities when the system is not full-dimensional. Off for
  // plain redundancy removal, where implicit equations stay inequalities.
  bool check_linearity_phase = true;
  // Classify survivors with the output-sensitive method instead of one LP
  // over the whole system per row. Falls back silently when the reduced
  // system has no strict interior (only possible with the hunt disabled).
  bool use_clarkson = false;
  // Assert that the reduced system is full-dimensional. Valid whenever the
  // input is free of hidden linearities or the hunt is enabled.
  bool paranoid = false;
  LPStats* stats = nullptr;           // preparation and classic classification
  LPStats* clarkson_stats = nullptr;  // output-sensitive phase only
};

// Lifts a V-representation (rows delta | v with delta 1 for vertices, 0 for
// rays; lineality rows declared linear) to the homogeneous inequality system
// over (x0, x): a generator row is redundant in the V-description exactly
// when the lifted row is redundant here. Indices map one to one.
inline Polyhedron v_to_internal(Polyhedron const& P) {
  internal_check(P.kind == RepKind::V, "v_to_internal: V-representation required");
  P.validate();
  std::vector<Row> rows;
  rows.reserve(P.rows.size());
  for (auto const& r : P.rows) {
    Row h;
    h.b = 0;
    h.a.reserve(r.a.size() + 1);
    h.a.push_back(r.b);
    for (auto const& c : r.a) h.a.push_back(c);
    rows.push_back(std::move(h));
  }
  return make_h(P.dim + 1, std::move(rows), P.linearity);
}

namespace detail {

// Multipliers proving the declared equations inconsistent, from the
// elimination certificate: rows[r] - sum c_j rows[j] is a nonzero constant.
inline void equation_farkas(std::vector<Row> const& eqrows, std::vector<int> const& eq_pos,
                            GaussianReduction const& g, std::vector<Rational>& farkas) {
  int r = g.inconsistent_row;
  auto const& combo = g.combinations.at(r);
  Rational c = eqrows[static_cast<std::size_t>(r)].b;
  for (auto const& [j, cj] : combo) c -= cj * eqrows[static_cast<std::size_t>(j)].b;
  Rational s = c < 0 ? Rational(1) : Rational(-1);
  farkas[static_cast<std::size_t>(eq_pos[static_cast<std::size_t>(r)])] = s;
  for (auto const& [j, cj] : combo)
    farkas[static_cast<std::size_t>(eq_pos[static_cast<std::size_t>(j)])] -= s * cj;
}

// Lifts LP infeasibility multipliers over substituted inequalities back to
// the input rows. With pc_k the pivot columns of the equation basis,
//   sub_j = row_j - sum_k row_j.a[pc_k] * reduced_k
// and each reduced_k expands over the original equation rows, so the
// equation multipliers absorb what the substitution removed.
inline void lift_farkas(Polyhedron const& P, std::vector<int> const& ineq_pos,
                        std::vector<int> const& eq_pos, GaussianReduction const& g,
                        std::vector<Rational> const& lambda, std::vector<Rational>& farkas) {
  for (std::size_t t = 0; t < ineq_pos.size(); ++t)
    farkas[static_cast<std::size_t>(ineq_pos[t])] = lambda[t];
  for (std::size_t k = 0; k < g.reduced.size(); ++k) {
    Rational s = 0;
    for (std::size_t t = 0; t < ineq_pos.size(); ++t) {
      if (lambda[t] == 0) continue;
      s += lambda[t] * P.rows[static_cast<std::size_t>(ineq_pos[t])].a[static_cast<std::size_t>(g.pivot_cols[k])];
    }
    if (s == 0) continue;
    for (auto const& [p, e] : g.rref_expr[k])
      farkas[static_cast<std::size_t>(eq_pos[static_cast<std::size_t>(p)])] -= s * e;
  }
}

}  // namespace detail

inline MinRepReport minimum_representation(Polyhedron const& P, MinRepOptions const& opts = {}) {
  if (P.kind == RepKind::V) return minimum_representation(v_to_internal(P), opts);

  int const m = P.row_count();
  int const d = P.dim;
  MinRepReport rep;

  std::vector<int> const& eq_pos = P.linearity;
  std::vector<int> const ineq_pos = P.inequality_indices();

  // Declared equations: consistency and the substitution basis used by the
  // preparation LPs.
  std::vector<Row> eqrows;
  eqrows.reserve(eq_pos.size());
  for (int i : eq_pos) eqrows.push_back(P.rows[static_cast<std::size_t>(i)]);
  GaussianReduction G0 = gaussian_reduce(eqrows);
  if (G0.inconsistent) {
    rep.feasible = false;
    rep.farkas.assign(static_cast<std::size_t>(m), Rational(0));
    detail::equation_farkas(eqrows, eq_pos, G0, rep.farkas);
    return rep;
  }

  std::vector<Row> work(P.rows.begin(), P.rows.end());
  for (int j : ineq_pos)
    work[static_cast<std::size_t>(j)] = substitute_equations(G0, P.rows[static_cast<std::size_t>(j)]);

  // Step 0: emptiness.
  {
    LPProblem lp;
    lp.sense = Sense::Min;
    lp.dim = d;
    lp.objective.b = 0;
    lp.objective.a.assign(static_cast<std::size_t>(d), Rational(0));
    lp.constraints.reserve(ineq_pos.size());
    for (int j : ineq_pos) lp.constraints.push_back(work[static_cast<std::size_t>(j)]);
    LPOutcome o = solve(lp, opts.stats);
    if (o.status == LPStatus::Infeasible) {
      rep.feasible = false;
      rep.farkas.assign(static_cast<std::size_t>(m), Rational(0));
      detail::lift_farkas(P, ineq_pos, eq_pos, G0, o.farkas, rep.farkas);
      return rep;
    }
  }

  // Step a: interior-point test on the input.
  FullDimResult fd = full_dimension_test(P, opts.stats);
  rep.is_full = fd.is_full;

  // Step b: hidden linearity hunt (full-dimensional systems have none).
  std::vector<int> Wset, Nset, foundL;
  if (!fd.is_full && opts.check_linearity_phase) {
    TaskBatch batch;
    batch.items = ineq_pos;
    batch.width = opts.workers;
    auto out = map_rows(batch, [&](int i) { return classify_row(work, ineq_pos, i, true, opts.stats); });
    for (auto& [i, rc] : out) {
      // Witnesses live in substituted coordinates; pin the declared equations
      // back on so they certify against the input rows (row values are
      // unchanged: substituted rows have zero pivot coefficients).
      if (!G0.reduced.empty() && rc.witness) rc.witness = back_substitute(G0, std::move(*rc.witness));
      switch (rc.verdict) {
        case Verdict::Linearity: foundL.push_back(i); break;
        case Verdict::StronglyRedundant: break;
        case Verdict::WeaklyRedundant: Wset.push_back(i); break;
        case Verdict::NonRedundant: Nset.push_back(i); break;
      }
      rep.classes.emplace(i, std::move(rc));
    }
  } else {
    Wset = ineq_pos;
  }

  // Step c: independent equation basis, declared and discovered together,
  // scanned in input order over the input row forms.
  std::vector<int> eq_all;
  eq_all.reserve(eq_pos.size() + foundL.size());
  std::merge(eq_pos.begin(), eq_pos.end(), foundL.begin(), foundL.end(), std::back_inserter(eq_all));
  std::vector<Row> eqrows_all;
  eqrows_all.reserve(eq_all.size());
  for (int i : eq_all) eqrows_all.push_back(P.rows[static_cast<std::size_t>(i)]);
  GaussianReduction Gfin = gaussian_reduce(eqrows_all);
  internal_check(!Gfin.inconsistent, "minimum_representation: equations of a feasible system are inconsistent");
  for (std::size_t k = 0; k < Gfin.independent.size(); ++k) {
    int orig = eq_all[static_cast<std::size_t>(Gfin.independent[k])];
    rep.final_linearity.push_back(orig);
    rep.substitutions.emplace_back(orig, Gfin.pivot_cols[k]);
  }
  for (int p : Gfin.dependent) rep.dependent_equations.push_back(eq_all[static_cast<std::size_t>(p)]);

  // Step d: substitute the basis into the surviving inequalities. Rows that
  // collapse to a constant are settled by its sign: on the solution set of
  // the basis, which contains the feasible region, their value is that
  // constant everywhere. Substituted forms keep the input row's scale so
  // later z values read against input rows; the normalized copies exist only
  // to make scale-duplicates identical.
  std::vector<int> live;
  live.reserve(Wset.size() + Nset.size());
  std::merge(Wset.begin(), Wset.end(), Nset.begin(), Nset.end(), std::back_inserter(live));
  std::vector<Row> subF(P.rows.begin(), P.rows.end());
  std::vector<Row> normF(P.rows.begin(), P.rows.end());
  std::vector<int> live2;
  live2.reserve(live.size());
  for (int j : live) {
    Row s = substitute_equations(Gfin, P.rows[static_cast<std::size_t>(j)]);
    if (s.coefficients_zero()) {
      internal_check(s.b >= 0, "minimum_representation: always-violated row in a feasible system");
      RowClass rc;
      rc.z_min = s.b;
      rc.verdict = s.b > 0 ? Verdict::StronglyRedundant : Verdict::WeaklyRedundant;
      rep.classes.insert_or_assign(j, std::move(rc));
      continue;
    }
    normF[static_cast<std::size_t>(j)] = gcd_normalize(s);
    subF[static_cast<std::size_t>(j)] = std::move(s);
    live2.push_back(j);
  }

  // Step e: deduplicate the normalized forms; the smallest index survives.
  DedupResult dd = dedup_rows(normF, live2);
  for (auto const& [dropped, kept] : dd.duplicate_of) {
    rep.duplicate_of.emplace(dropped, kept);
    rep.classes.erase(dropped);
  }
  std::vector<int> const& J = dd.kept;

  // Interior point for the reduced system: the step (a) point transfers when
  // the input is full (no discovered equations, so values are unchanged by
  // the substitution); otherwise recompute on the reduced rows when needed.
  std::optional<std::vector<Rational>> interiorJ;
  if (fd.is_full) {
    interiorJ = fd.interior;
  } else if (opts.paranoid || opts.use_clarkson) {
    std::vector<Row> jrows;
    jrows.reserve(J.size());
    for (int j : J) jrows.push_back(subF[static_cast<std::size_t>(j)]);
    FullDimResult fd2 = full_dimension_test(make_h(d, std::move(jrows), {}), opts.stats);
    if (opts.paranoid)
      internal_check(fd2.is_full, "minimum_representation: reduced system is not full-dimensional");
    if (fd2.is_full) interiorJ = std::move(fd2.interior);
  }

  // Step f: classify the survivors against the deduplicated system.
  std::vector<int> candidates, stableN;
  for (int j : J) {
    if (std::binary_search(Nset.begin(), Nset.end(), j))
      stableN.push_back(j);
    else
      candidates.push_back(j);
  }
  rep.final_nonredundant = stableN;

  if (opts.use_clarkson && interiorJ.has_value()) {
    detail::ClarksonCore core = detail::clarkson_rows(subF, J, *interiorJ, d, opts.clarkson_stats);
    rep.used_clarkson = true;
    for (int j : stableN)
      internal_check(std::binary_search(core.essential.begin(), core.essential.end(), j),
                     "minimum_representation: output-sensitive pass dropped a nonredundant row");
    for (int j : core.essential) rep.classes.erase(j);
    rep.final_nonredundant = std::move(core.essential);
    for (auto& [j, rc] : core.classes) {
      if (!Gfin.reduced.empty() && rc.witness) rc.witness = back_substitute(Gfin, std::move(*rc.witness));
      rep.classes.insert_or_assign(j, std::move(rc));
    }
  } else {
    TaskBatch batch;
    batch.items = candidates;
    batch.width = opts.workers;
    auto out = map_rows(batch, [&](int j) { return classify_row(subF, J, j, false, opts.stats); });
    for (auto& [j, rc] : out) {
      if (!Gfin.reduced.empty() && rc.witness) rc.witness = back_substitute(Gfin, std::move(*rc.witness));
      if (rc.verdict == Verdict::NonRedundant) rep.final_nonredundant.push_back(j);
      rep.classes.insert_or_assign(j, std::move(rc));
    }
    std::sort(rep.final_nonredundant.begin(), rep.final_nonredundant.end());
  }

  if (fd.is_full)
    rep.interior = std::move(fd.interior);
  else if (interiorJ.has_value())
    rep.interior = back_substitute(Gfin, *interiorJ);
  return rep;
}

inline MinRepReport minimum_representation(Polyhedron const& P, int workers) {
  MinRepOptions opts;
  opts.workers = workers;
  return minimum_representation(P, opts);
}

// Canonical form for comparing representations produced by different routes:
// equations to a scale-normalized reduced echelon basis, inequalities reduced
// against it, scale-normalized, sorted, deduplicated. Two minimum
// representations of the same set agree here row for row.
inline Polyhedron canonical_form(Polyhedron const& P) {
  internal_check(P.kind == RepKind::H, "canonical_form: H-representation required");
  std::vector<Row> eqr;
  eqr.reserve(P.linearity.size());
  for (int i : P.linearity) eqr.push_back(P.rows[static_cast<std::size_t>(i)]);
  GaussianReduction g = gaussian_reduce(eqr);
  internal_check(!g.inconsistent, "canonical_form: inconsistent equations");

  std::vector<Row> rows;
  for (Row const& r : g.reduced) rows.push_back(normalize_equation(r));
  std::sort(rows.begin(), rows.end(), lex_less);
  std::vector<int> lin(rows.size());
  for (std::size_t k = 0; k < lin.size(); ++k) lin[k] = static_cast<int>(k);

  std::vector<Row> ineqs;
  for (int i : P.inequality_indices()) {
    Row s = substitute_equations(g, P.rows[static_cast<std::size_t>(i)]);
    if (s.coefficients_zero()) {
      internal_check(s.b >= 0, "canonical_form: always-violated row");
      continue;
    }
    ineqs.push_back(gcd_normalize(std::move(s)));
  }
  std::sort(ineqs.begin(), ineqs.end(), lex_less);
  ineqs.erase(std::unique(ineqs.begin(), ineqs.end()), ineqs.end());
  rows.insert(rows.end(), std::make_move_iterator(ineqs.begin()), std::make_move_iterator(ineqs.end()));
  return make_h(P.dim, std::move(rows), std::move(lin));
}

inline bool canonical_equal(Polyhedron const& A, Polyhedron const& B) {
  if (A.dim != B.dim) return false;
  Polyhedron ca = canonical_form(A);
  Polyhedron cb = canonical_form(B);
  return ca.rows == cb.rows && ca.linearity == cb.linearity;
}

}  // namespace polyred

#endif  // POLYRED_MINREP_HPP
