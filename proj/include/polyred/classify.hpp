#pragma once

// Per-row classification of an inequality system b_i + A_i·x >= 0.
//
// For row i let z_min / z_max be the optimum of b_i + A_i·x over the
// polyhedron cut out by all OTHER rows. Then the row is
//
//   Linearity          iff z_max = 0   (tight on the whole feasible set)
//   StronglyRedundant  iff z_min > 0   (strictly slack everywhere)
//   WeaklyRedundant    iff z_min = 0 and z_max > 0
//   NonRedundant       iff z_min < 0 or unbounded below, and z_max != 0
//
// The max LP runs only when check_linearity is set and z_min <= 0; z_min > 0
// already forces z_max > 0 so the skip is sound. Unboundedness of the min LP
// does NOT suppress the max LP: in {x1 >= 0, -x1 >= 0, x2 >= 0} the first row
// has z_min unbounded below yet z_max = 0, and it is a linearity.
//
// Precondition everywhere: the system WITHOUT the candidate row is feasible
// (guaranteed whenever the full system is), and equations have already been
// substituted away.

#include <polyred/check.hpp>
#include <polyred/polyhedron.hpp>
#include <polyred/simplex.hpp>

#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace polyred {

enum class Verdict { Linearity, StronglyRedundant, WeaklyRedundant, NonRedundant };

inline char const* to_string(Verdict v) {
  switch (v) {
    case Verdict::Linearity: return "linearity";
    case Verdict::StronglyRedundant: return "strongly-redundant";
    case Verdict::WeaklyRedundant: return "weakly-redundant";
    case Verdict::NonRedundant: return "nonredundant";
  }
  return "?";
}

struct RowClass {
  Verdict verdict = Verdict::NonRedundant;
  bool min_unbounded = false;
  Rational z_min;       // meaningful unless min_unbounded
  bool max_ran = false;
  bool max_unbounded = false;
  Rational z_max;       // meaningful iff max_ran && !max_unbounded

  // Linearity: point where the row sits at zero. Strongly/WeaklyRedundant:
  // point attaining z_min. NonRedundant: point violating the row while
  // satisfying every other row.
  std::optional<std::vector<Rational>> witness;
};

// Classify rows[target] against { rows[j] : j in active, j != target }.
// `active` may or may not contain `target`; it is skipped either way.
inline RowClass classify_row(std::vector<Row> const& rows, std::vector<int> const& active,
                             int target, bool check_linearity, LPStats* stats = nullptr) {
  int const dim = rows[static_cast<std::size_t>(target)].dim();

  LPProblem lp;
  lp.sense = Sense::Min;
  lp.dim = dim;
  lp.objective = rows[static_cast<std::size_t>(target)];
  lp.constraints.reserve(active.size());
  for (int j : active)
    if (j != target) lp.constraints.push_back(rows[static_cast<std::size_t>(j)]);

  LPOutcome lo = solve(lp, stats);
  internal_check(lo.status != LPStatus::Infeasible,
                 "classify_row: system without the candidate row is infeasible");

  RowClass rc;
  if (lo.status == LPStatus::Optimal && lo.value > 0) {
    rc.verdict = Verdict::StronglyRedundant;
    rc.z_min = lo.value;
    rc.witness = std::move(lo.point);
    return rc;
  }

  rc.min_unbounded = lo.status == LPStatus::Unbounded;
  if (!rc.min_unbounded) rc.z_min = lo.value;

  if (check_linearity) {
    lp.sense = Sense::Max;
    LPOutcome hi = solve(lp, stats);
    internal_check(hi.status != LPStatus::Infeasible, "classify_row: max LP infeasible");
    rc.max_ran = true;
    rc.max_unbounded = hi.status == LPStatus::Unbounded;
    if (!rc.max_unbounded) {
      internal_check(hi.value >= 0, "classify_row: z_max < 0 implies the full system is infeasible");
      rc.z_max = hi.value;
      if (hi.value == 0) {
        rc.verdict = Verdict::Linearity;
        rc.witness = std::move(hi.point);
        return rc;
      }
    }
  }

  if (!rc.min_unbounded && rc.z_min == 0) {
    rc.verdict = Verdict::WeaklyRedundant;
    rc.witness = std::move(lo.point);
    return rc;
  }

  rc.verdict = Verdict::NonRedundant;
  if (!rc.min_unbounded) {
    rc.witness = std::move(lo.point);
  } else {
    // Walk from the feasible base point along the improving ray until the
    // row value base + t*rate turns negative; the rest of the system stays
    // satisfied because the ray does not decrease any other row.
    Rational base = rows[static_cast<std::size_t>(target)].value_at(lo.point);
    Rational rate = rows[static_cast<std::size_t>(target)].rate_along(lo.direction);
    internal_check(rate < 0, "classify_row: unbounded min must descend along its ray");
    Rational t = base <= 0 ? Rational(1) : base / -rate + 1;
    std::vector<Rational> pt = std::move(lo.point);
    for (int k = 0; k < dim; ++k) pt[static_cast<std::size_t>(k)] += t * lo.direction[static_cast<std::size_t>(k)];
    rc.witness = std::move(pt);
  }
  return rc;
}

// Classification of row i of an equation-free H-representation.
inline RowClass classify(Polyhedron const& P, int i, bool check_linearity,
                         LPStats* stats = nullptr) {
  internal_check(P.kind == RepKind::H, "classify: H-representation required");
  internal_check(P.linearity.empty(), "classify: substitute declared equations out first");
  internal_check(i >= 0 && i < P.row_count(), "classify: row index out of range");
  std::vector<int> active(P.rows.size());
  std::iota(active.begin(), active.end(), 0);
  return classify_row(P.rows, active, i, check_linearity, stats);
}

struct FullDimResult {
  bool is_full = false;
  Rational optimum;                               // the margin t*, in [0, 1]
  std::optional<std::vector<Rational>> interior;  // iff is_full: point with every inequality strict
};

/// Interior-point test: maximize t subject to every inequality row >= t, every
// declared equation held exactly (as two opposing inequalities), and t <= 1
// so the program is never unbounded. The system is full-dimensional relative
// to its declared equations exactly when the optimum is positive; hidden
// linearities exist exactly when it is zero. Infeasibility can only come
// from inconsistent declared equations (t is free to drop), which violates
// the non-empty precondition and throws.
inline FullDimResult full_dimension_test(Polyhedron const& P, LPStats* stats = nullptr) {
  internal_check(P.kind == RepKind::H, "full_dimension_test: H-representation required");
  int const d = P.dim;

  bool homogeneous = true;
  for (auto const& r : P.rows)
    if (r.b != 0) { homogeneous = false; break; }
  if (homogeneous) {
    // The feasible set is a cone, so by scaling the margin optimum is 0 or 1,
    // decided by feasibility of {equations = 0, inequalities >= 1}. Deciding
    // it this way sidesteps phase-two pivoting at the fully degenerate apex.
    LPProblem probe;
    probe.sense = Sense::Min;
    probe.dim = d;
    probe.objective.b = 0;
    probe.objective.a.assign(static_cast<std::size_t>(d), Rational(0));
    for (int i = 0; i < P.row_count(); ++i) {
      Row r = P.rows[static_cast<std::size_t>(i)];
      if (P.is_linearity(i)) {
        probe.constraints.push_back(r);
        probe.constraints.push_back(scaled(std::move(r), Rational(-1)));
      } else {
        r.b = -1;
        probe.constraints.push_back(std::move(r));
      }
    }
    LPOutcome o = solve(probe, stats);
    internal_check(o.status != LPStatus::Unbounded, "full_dimension_test: probe objective is constant");
    FullDimResult res;
    if (o.status == LPStatus::Optimal) {
      res.is_full = true;
      res.optimum = 1;
      res.interior = std::move(o.point);
    }
    return res;
  }

  LPProblem lp;
  lp.sense = Sense::Max;
  lp.dim = d + 1;  // last coordinate is the margin t
  lp.objective.b = 0;
  lp.objective.a.assign(static_cast<std::size_t>(d) + 1, Rational(0));
  lp.objective.a.back() = 1;

  for (int i = 0; i < P.row_count(); ++i) {
    Row const& r = P.rows[static_cast<std::size_t>(i)];
    Row lifted;
    lifted.b = r.b;
    lifted.a = r.a;
    lifted.a.push_back(Rational(0));
    if (P.is_linearity(i)) {
      lp.constraints.push_back(lifted);
      lp.constraints.push_back(scaled(std::move(lifted), Rational(-1)));
    } else {
      lifted.a.back() = -1;
      lp.constraints.push_back(std::move(lifted));
    }
  }
  Row cap;
  cap.b = 1;
  cap.a.assign(static_cast<std::size_t>(d) + 1, Rational(0));
  cap.a.back() = -1;
  lp.constraints.push_back(std::move(cap));

  LPOutcome o = solve(lp, stats);
  internal_check(o.status != LPStatus::Unbounded, "full_dimension_test: margin is capped at one");
  if (o.status == LPStatus::Infeasible)
    throw InternalError("full_dimension_test: declared equations are inconsistent (empty input)");

  FullDimResult res;
  res.optimum = o.value;
  res.is_full = o.value > 0;
  if (res.is_full) {
    o.point.pop_back();
    res.interior = std::move(o.point);
  }
  return res;
}

}  // namespace polyred
