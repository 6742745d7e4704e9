#ifndef POLYRED_FOURIER_MOTZKIN_HPP
#define POLYRED_FOURIER_MOTZKIN_HPP

// Projection by single-variable elimination rounds, each followed by a
// minimum-representation cleanup. The cleanup skips the linearity hunt by
// default: starting from a minimum representation, elimination rounds cannot
// manufacture hidden linearities, so only the first reduction needs it.
//
// Columns are 0-based here; the file layer speaks 1-based variable ids.

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "polyred/check.hpp"
#include "polyred/linalg.hpp"
#include "polyred/minrep.hpp"
#include "polyred/parallel.hpp"
#include "polyred/polyhedron.hpp"
#include "polyred/rational.hpp"
#include "polyred/report.hpp"
#include "polyred/row.hpp"

namespace polyred {

// Inequality rows split by the sign of their coefficient on one column.
// (Sneg, not S: S is taken by the strongly redundant set.)
struct FMPartition {
  std::vector<int> R;     // positive
  std::vector<int> Sneg;  // negative
  std::vector<int> Z;     // zero
};

inline FMPartition fm_partition(Polyhedron const& P, int col) {
  internal_check(P.kind == RepKind::H, "fm_partition: H-representation required");
  if (col < 0 || col >= P.dim) throw std::invalid_argument("fm_partition: column out of range");
  FMPartition part;
  for (int i : P.inequality_indices()) {
    int s = sign_of(P.rows[static_cast<std::size_t>(i)].a[static_cast<std::size_t>(col)]);
    (s > 0 ? part.R : s < 0 ? part.Sneg : part.Z).push_back(i);
  }
  return part;
}

// Which columns to keep and which to eliminate (in this order); the two
// lists partition {0..d-1}.
struct ProjectionSpec {
  std::vector<int> keep;
  std::vector<int> eliminate;
};

inline void validate_projection_spec(ProjectionSpec const& spec, int dim) {
  std::vector<int> all;
  all.reserve(spec.keep.size() + spec.eliminate.size());
  all.insert(all.end(), spec.keep.begin(), spec.keep.end());
  all.insert(all.end(), spec.eliminate.begin(), spec.eliminate.end());
  std::sort(all.begin(), all.end());
  bool ok = static_cast<int>(all.size()) == dim;
  for (int k = 0; ok && k < dim; ++k) ok = all[static_cast<std::size_t>(k)] == k;
  if (!ok) throw std::invalid_argument("projection spec: keep and eliminate must partition the columns");
  if (spec.keep.empty()) throw std::invalid_argument("projection spec: at least one column must be kept");
}

namespace detail {

inline Row drop_column(Row r, int col) {
  r.a.erase(r.a.begin() + col);
  return r;
}

// Touched rows get renormalized; rows that collapse entirely are kept raw so
// the round's row-count identity stays checkable.
inline Row normalize_unless_zero(Row r) {
  if (r.all_zero()) return r;
  return gcd_normalize(r);
}

}  // namespace detail

// One elimination round, column dropped from the output (dim shrinks by 1).
// If an equation mentions the column, the smallest-index one is substituted
// into every other row and removed. Otherwise every (r, s) in R x Sneg emits
//   a_{r,col} * row_s + (-a_{s,col}) * row_r
// (both multipliers positive, so integer rows stay integer), giving exactly
// |Z| + |R||Sneg| inequalities next to the |L| untouched equations. No
// cleanup happens here.
inline Polyhedron eliminate_one(Polyhedron const& P, int col, int workers = 1) {
  internal_check(P.kind == RepKind::H, "eliminate_one: H-representation required");
  if (col < 0 || col >= P.dim) throw std::invalid_argument("eliminate_one: column out of range");

  int eqpivot = -1;
  for (int i : P.linearity) {
    if (P.rows[static_cast<std::size_t>(i)].a[static_cast<std::size_t>(col)] != 0) {
      eqpivot = i;
      break;
    }
  }

  std::vector<Row> out;
  std::vector<int> outlin;

  if (eqpivot >= 0) {
    Row const& piv = P.rows[static_cast<std::size_t>(eqpivot)];
    Rational pc = piv.a[static_cast<std::size_t>(col)];
    for (int i = 0; i < P.row_count(); ++i) {
      if (i == eqpivot) continue;
      Row r = P.rows[static_cast<std::size_t>(i)];
      Rational c = r.a[static_cast<std::size_t>(col)];
      if (c != 0) r = detail::normalize_unless_zero(axpy(std::move(r), Rational(-c / pc), piv));
      if (P.is_linearity(i)) outlin.push_back(static_cast<int>(out.size()));
      out.push_back(detail::drop_column(std::move(r), col));
    }
    return make_h(P.dim - 1, std::move(out), std::move(outlin));
  }

  FMPartition part = fm_partition(P, col);
  for (int i : P.linearity) {
    outlin.push_back(static_cast<int>(out.size()));
    out.push_back(detail::drop_column(P.rows[static_cast<std::size_t>(i)], col));
  }
  for (int i : part.Z) out.push_back(detail::drop_column(P.rows[static_cast<std::size_t>(i)], col));

  std::size_t const pairs = part.R.size() * part.Sneg.size();
  auto combine = [&](int k) {
    int r = part.R[static_cast<std::size_t>(k) / part.Sneg.size()];
    int s = part.Sneg[static_cast<std::size_t>(k) % part.Sneg.size()];
    Row const& rr = P.rows[static_cast<std::size_t>(r)];
    Row const& rs = P.rows[static_cast<std::size_t>(s)];
    Row combined = axpy(scaled(rs, rr.a[static_cast<std::size_t>(col)]),
                        -rs.a[static_cast<std::size_t>(col)], rr);
    return detail::drop_column(detail::normalize_unless_zero(std::move(combined)), col);
  };
  if (workers > 1 && pairs >= 64) {
    TaskBatch batch;
    batch.items.resize(pairs);
    std::iota(batch.items.begin(), batch.items.end(), 0);
    batch.width = workers;
    for (auto& [k, row] : map_rows(batch, combine)) out.push_back(std::move(row));
  } else {
    for (std::size_t k = 0; k < pairs; ++k) out.push_back(combine(static_cast<int>(k)));
  }
  return make_h(P.dim - 1, std::move(out), std::move(outlin));
}

struct FMRound {
  int column = -1;  // original column id
  bool equation_path = false;
  int rows_before = 0;
  int raw_rows = 0;
  int rows_after = 0;
  int R = 0, Sneg = 0, Z = 0;  // inequality partition sizes (combination path)
};

struct FMOptions {
  int workers = 1;
  // Pick, each round, an equation-eliminable column if one exists, otherwise
  // the column minimizing |R||Sneg| - |R| - |Sneg|. Off: exactly the given order.
  bool heuristic_order = false;
  bool use_clarkson = false;   // route each round's cleanup through the output-sensitive pass
  bool paranoid = false;       // assert no hidden linearities after any round
  // Rounds only need the redundancy half of the cleanup: starting minimal,
  // elimination cannot create hidden linearities. The initial reduction
  // always hunts.
  bool skip_linearity_search = true;
  LPStats* stats = nullptr;
  LPStats* clarkson_stats = nullptr;
};

struct FMResult {
  bool feasible = true;
  MinRepReport initial_report;  // of the input reduction (holds farkas if empty)
  Polyhedron poly;              // dim = |keep|, columns in ascending original order
  std::vector<int> kept_columns;
  std::vector<FMRound> rounds;
};

inline FMResult project(Polyhedron const& P, ProjectionSpec const& spec, FMOptions const& opts = {}) {
  internal_check(P.kind == RepKind::H, "project: H-representation required");
  validate_projection_spec(spec, P.dim);

  FMResult res;
  MinRepOptions mo;
  mo.workers = opts.workers;
  mo.use_clarkson = opts.use_clarkson;
  mo.paranoid = opts.paranoid;
  mo.stats = opts.stats;
  mo.clarkson_stats = opts.clarkson_stats;

  res.initial_report = minimum_representation(P, mo);
  if (!res.initial_report.feasible) {
    res.feasible = false;
    return res;
  }
  Polyhedron cur = apply_report(P, res.initial_report);

  std::vector<int> cols(static_cast<std::size_t>(P.dim));
  std::iota(cols.begin(), cols.end(), 0);
  std::vector<int> remaining = spec.eliminate;

  MinRepOptions cleanup = mo;
  cleanup.check_linearity_phase = !opts.skip_linearity_search;

  while (!remaining.empty()) {
    std::size_t pick = 0;
    if (opts.heuristic_order && remaining.size() > 1) {
      long long best = 0;
      bool best_eq = false, have = false;
      for (std::size_t t = 0; t < remaining.size(); ++t) {
        int local = static_cast<int>(std::lower_bound(cols.begin(), cols.end(), remaining[t]) - cols.begin());
        bool eq = false;
        for (int i : cur.linearity)
          if (cur.rows[static_cast<std::size_t>(i)].a[static_cast<std::size_t>(local)] != 0) { eq = true; break; }
        FMPartition part = eq ? FMPartition{} : fm_partition(cur, local);
        long long nr = static_cast<long long>(part.R.size());
        long long ns = static_cast<long long>(part.Sneg.size());
        long long score = nr * ns - nr - ns;
        if (!have || (eq && !best_eq) || (eq == best_eq && score < best)) {
          have = true;
          best = score;
          best_eq = eq;
          pick = t;
        }
      }
    }
    int col = remaining[pick];
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
    int local = static_cast<int>(std::lower_bound(cols.begin(), cols.end(), col) - cols.begin());

    FMRound round;
    round.column = col;
    round.rows_before = cur.row_count();
    int eqpivot = -1;
    for (int i : cur.linearity)
      if (cur.rows[static_cast<std::size_t>(i)].a[static_cast<std::size_t>(local)] != 0) { eqpivot = i; break; }
    round.equation_path = eqpivot >= 0;
    std::size_t expected;
    if (round.equation_path) {
      expected = static_cast<std::size_t>(cur.row_count()) - 1;
    } else {
      FMPartition part = fm_partition(cur, local);
      round.R = static_cast<int>(part.R.size());
      round.Sneg = static_cast<int>(part.Sneg.size());
      round.Z = static_cast<int>(part.Z.size());
      expected = cur.linearity.size() + part.Z.size() + part.R.size() * part.Sneg.size();
    }

    Polyhedron raw = eliminate_one(cur, local, opts.workers);
    round.raw_rows = raw.row_count();
    internal_check(static_cast<std::size_t>(raw.row_count()) == expected,
                   "project: round row-count identity violated");

    MinRepReport clean = minimum_representation(raw, cleanup);
    internal_check(clean.feasible, "project: elimination round of a nonempty system came out empty");
    cur = apply_report(raw, clean);
    round.rows_after = cur.row_count();
    res.rounds.push_back(round);
    cols.erase(cols.begin() + local);
  }

  res.kept_columns = std::move(cols);
  res.poly = std::move(cur);
  return res;
}

// Convenience form matching the narrow contract: the projection itself.
inline Polyhedron project(Polyhedron const& P, ProjectionSpec const& spec, int workers,
                          bool skip_linearity_search = true) {
  FMOptions opts;
  opts.workers = workers;
  opts.skip_linearity_search = skip_linearity_search;
  FMResult res = project(P, spec, opts);
  if (!res.feasible) throw std::invalid_argument("project: input system is infeasible");
  return std::move(res.poly);
}

}  // namespace polyred

#endif  // POLYRED_FOURIER_MOTZKIN_HPP
