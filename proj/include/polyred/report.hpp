#ifndef POLYRED_REPORT_HPP
#define POLYRED_REPORT_HPP

// Outcome of a minimum-representation run, expressed in input row indices.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "polyred/check.hpp"
#include "polyred/classify.hpp"
#include "polyred/polyhedron.hpp"
#include "polyred/rational.hpp"

namespace polyred {

// Every input row index lands in exactly one bucket:
//   final_linearity      independent equations (declared or discovered)
//   dependent_equations  equation rows implied by earlier ones
//   final_nonredundant   inequalities kept
//   duplicate_of keys    inequalities dropped as exact duplicates (value = kept row)
//   classes with a strongly/weakly redundant verdict: inequalities dropped by LP
// `classes` additionally carries the LP evidence for rows in the other buckets
// where one was computed (linearity certificates, kept-row reports); duplicate
// rows never keep a classes entry.
struct MinRepReport {
  bool feasible = true;
  // When infeasible: multipliers over input rows with sum lambda_i row_i equal
  // to a negative constant; inequality entries are >= 0, equation entries may
  // carry either sign.
  std::vector<Rational> farkas;

  std::vector<int> final_linearity;
  std::vector<int> final_nonredundant;
  std::map<int, RowClass> classes;
  std::map<int, int> duplicate_of;
  std::vector<int> dependent_equations;
  // (equation row, variable it eliminates), in elimination order.
  std::vector<std::pair<int, int>> substitutions;

  bool is_full = false;  // input full-dimensional relative to its declared equations
  bool used_clarkson = false;
  // Point satisfying every kept inequality strictly and every equation exactly,
  // when one was computed along the way.
  std::optional<std::vector<Rational>> interior;
};

// Rebuilds the reduced polyhedron from the report: original rows, equations
// first. Pure index bookkeeping, so it works for V-inputs as well.
inline Polyhedron apply_report(Polyhedron const& P, MinRepReport const& rep) {
  internal_check(rep.feasible, "apply_report: system is infeasible");
  std::vector<Row> rows;
  rows.reserve(rep.final_linearity.size() + rep.final_nonredundant.size());
  std::vector<int> lin;
  for (int i : rep.final_linearity) {
    lin.push_back(static_cast<int>(rows.size()));
    rows.push_back(P.rows[static_cast<std::size_t>(i)]);
  }
  for (int i : rep.final_nonredundant) rows.push_back(P.rows[static_cast<std::size_t>(i)]);
  return P.kind == RepKind::H ? make_h(P.dim, std::move(rows), std::move(lin))
                              : make_v(P.dim, std::move(rows), std::move(lin));
}

}  // namespace polyred

#endif  // POLYRED_REPORT_HPP
