#pragma once

// Exact rational elimination utilities.
//
// gaussian_reduce is the workhorse behind equation handling: it processes
// rows greedily in input order, keeps an RREF of the independent ones, and
// records for every dropped row the exact combination of kept rows it equals
// — that record doubles as the inconsistency certificate when elimination
// derives 0 = c with c != 0.

#include <polyred/row.hpp>

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace polyred {

struct GaussianReduction {
  std::vector<int> independent;  // input positions kept, in processing order
  std::vector<int> dependent;    // input positions that reduced to 0 = 0
  std::vector<int> pivot_cols;   // aligned with independent
  std::vector<Row> reduced;      // RREF forms aligned with independent (pivot coefficient 1)
  bool inconsistent = false;
  int inconsistent_row = -1;
  // For each dependent (or inconsistent) input position r: coefficients c_j
  // over independent positions. Dependent: rows[r] == sum c_j rows[j].
  // Inconsistent: rows[r] - sum c_j rows[j] == the constant-only row 0 = c.
  std::map<int, std::vector<std::pair<int, Rational>>> combinations;
  // Aligned with `reduced`: reduced[k] == sum_j rref_expr[k][j] * rows[j].
  std::vector<std::map<int, Rational>> rref_expr;

  int rank() const { return static_cast<int>(independent.size()); }
};

// Pivot choice: the nonzero coefficient with the smallest column index.
// Constants (b) never pivot; a row whose coefficients vanish but whose
// constant does not is an inconsistency (0 = -b). Stops at the first one.
inline GaussianReduction gaussian_reduce(std::vector<Row> const& rows) {
  GaussianReduction g;
  auto& exprs = g.rref_expr;

  for (int idx = 0; idx < static_cast<int>(rows.size()); ++idx) {
    Row cur = rows[idx];
    std::map<int, Rational> expr{{idx, Rational(1)}};
    for (std::size_t k = 0; k < g.reduced.size(); ++k) {
      Rational c = cur.a[g.pivot_cols[k]];
      if (c == 0) continue;
      cur = axpy(std::move(cur), -c, g.reduced[k]);
      for (auto const& [j, w] : exprs[k]) {
        auto& slot = expr[j];
        slot -= c * w;
        if (slot == 0) expr.erase(j);
      }
    }

    if (cur.coefficients_zero()) {
      // Express rows[idx] over earlier independents (drop its own unit term).
      std::vector<std::pair<int, Rational>> combo;
      for (auto const& [j, w] : expr)
        if (j != idx) combo.emplace_back(j, -w);
      g.combinations[idx] = std::move(combo);
      if (cur.b == 0) {
        g.dependent.push_back(idx);
        continue;
      }
      g.inconsistent = true;
      g.inconsistent_row = idx;
      return g;
    }

    int pc = 0;
    while (cur.a[pc] == 0) ++pc;
    Rational inv = Rational(1) / cur.a[pc];
    cur = scaled(std::move(cur), inv);
    for (auto& [j, w] : expr) w *= inv;

    for (std::size_t k = 0; k < g.reduced.size(); ++k) {
      Rational c = g.reduced[k].a[pc];
      if (c == 0) continue;
      g.reduced[k] = axpy(std::move(g.reduced[k]), -c, cur);
      for (auto const& [j, w] : expr) {
        auto& slot = exprs[k][j];
        slot -= c * w;
        if (slot == 0) exprs[k].erase(j);
      }
    }

    g.independent.push_back(idx);
    g.pivot_cols.push_back(pc);
    g.reduced.push_back(std::move(cur));
    exprs.push_back(std::move(expr));
  }
  return g;
}

// Zeroes the pivot columns of `row` using the RREF equations.
// The result agrees with `row` on the solution set of the equations.
inline Row substitute_equations(GaussianReduction const& g, Row row) {
  for (std::size_t k = 0; k < g.reduced.size(); ++k) {
    Rational c = row.a[g.pivot_cols[k]];
    if (c != 0) row = axpy(std::move(row), -c, g.reduced[k]);
  }
  return row;
}

// Completes a point: entries at pivot columns are overwritten so that every
// reduced equation holds exactly; free entries are taken as given.
inline std::vector<Rational> back_substitute(GaussianReduction const& g, std::vector<Rational> x) {
  for (std::size_t k = 0; k < g.reduced.size(); ++k) {
    Row const& r = g.reduced[k];
    int pc = g.pivot_cols[k];
    Rational v = r.b;
    for (int j = 0; j < r.dim(); ++j)
      if (j != pc && r.a[j] != 0) v += r.a[j] * x[j];
    x[pc] = -v;
  }
  return x;
}

// Basis of { v : a_r · v = 0 for every row r } (constants ignored).
inline std::vector<std::vector<Rational>> nullspace(std::vector<Row> const& rows, int dim) {
  std::vector<Row> homo;
  homo.reserve(rows.size());
  for (auto const& r : rows) homo.push_back(Row{Rational(0), r.a});
  GaussianReduction g = gaussian_reduce(homo);

  std::vector<bool> is_pivot(dim, false);
  for (int pc : g.pivot_cols) is_pivot[pc] = true;

  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < dim; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(dim, Rational(0));
    v[f] = 1;
    for (std::size_t k = 0; k < g.reduced.size(); ++k) v[g.pivot_cols[k]] = -g.reduced[k].a[f];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Unique solution of the rows read as equations b + a·x = 0, if one exists.
inline std::optional<std::vector<Rational>> solve_unique(std::vector<Row> const& rows, int dim) {
  GaussianReduction g = gaussian_reduce(rows);
  if (g.inconsistent || g.rank() != dim) return std::nullopt;
  return back_substitute(g, std::vector<Rational>(dim, Rational(0)));
}

// Complement-section coordinates for R^dim modulo span(basis). Functionals
// orthogonal to the subspace descend through it; points project along it.
struct QuotientMap {
  int ambient = 0;
  int reduced = 0;
  std::vector<int> free_cols;
  std::vector<int> pivot_cols;
  std::vector<Row> rref;  // RREF of the basis vectors, as coefficient rows

  std::vector<Rational> project(std::vector<Rational> const& x) const {
    std::vector<Rational> shifted = x;
    for (std::size_t k = 0; k < rref.size(); ++k) {
      Rational c = x[pivot_cols[k]];
      if (c == 0) continue;
      for (int j = 0; j < ambient; ++j) shifted[j] -= c * rref[k].a[j];
    }
    std::vector<Rational> z;
    z.reserve(free_cols.size());
    for (int f : free_cols) z.push_back(shifted[f]);
    return z;
  }

  std::vector<Rational> inject(std::vector<Rational> const& z) const {
    std::vector<Rational> x(ambient, Rational(0));
    for (std::size_t j = 0; j < free_cols.size(); ++j) x[free_cols[j]] = z[j];
    return x;
  }

  // Pre: row.a orthogonal to the subspace (constant on fibers).
  Row pull_row(Row const& row) const {
    std::vector<Rational> a;
    a.reserve(free_cols.size());
    for (int f : free_cols) a.push_back(row.a[f]);
    return Row{row.b, std::move(a)};
  }
};

inline QuotientMap quotient_by(std::vector<std::vector<Rational>> const& basis, int dim) {
  std::vector<Row> rows;
  rows.reserve(basis.size());
  for (auto const& v : basis) rows.push_back(Row{Rational(0), v});
  GaussianReduction g = gaussian_reduce(rows);

  QuotientMap q;
  q.ambient = dim;
  q.pivot_cols = g.pivot_cols;
  q.rref = g.reduced;
  std::vector<bool> is_pivot(dim, false);
  for (int pc : g.pivot_cols) is_pivot[pc] = true;
  for (int j = 0; j < dim; ++j)
    if (!is_pivot[j]) q.free_cols.push_back(j);
  q.reduced = static_cast<int>(q.free_cols.size());
  return q;
}

struct DedupResult {
  std::vector<int> kept;              // ascending; smallest index of each class
  std::map<int, int> duplicate_of;    // dropped index -> kept index
};

// Pre: rows at the active indices share a normal form (gcd_normalize for
// inequalities, normalize_equation for equations), so equality of rows is
// equality of constraints.
inline DedupResult dedup_rows(std::vector<Row> const& rows, std::vector<int> const& active) {
  std::vector<int> order = active;
  std::sort(order.begin(), order.end(), [&](int l, int r) {
    auto c = lex_compare(rows[l], rows[r]);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    return l < r;
  });

  DedupResult d;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i + 1;
    while (j < order.size() && rows[order[j]] == rows[order[i]]) ++j;
    d.kept.push_back(order[i]);  // smallest index: order within a class is by index
    for (std::size_t k = i + 1; k < j; ++k) d.duplicate_of[order[k]] = order[i];
    i = j;
  }
  std::sort(d.kept.begin(), d.kept.end());
  return d;
}

}  // namespace polyred
