#ifndef POLYRED_VERIFY_HPP
#define POLYRED_VERIFY_HPP

// Independent re-checks of everything a MinRepReport asserts, by direct
// evaluation against the input rows — no LPs. Witness values survive the
// pipeline's substitutions exactly, so a report that passes here certifies
// its verdicts regardless of how they were computed. Failures throw.
//
// What a witness must show (all rows evaluated at the witness point):
//   linearity            row value 0 at a point of the set
//   strongly redundant   point of the set attaining z_min > 0
//   weakly redundant     point of the set attaining z_min = 0
//   nonredundant         row value < 0 while every other kept row holds

#include <algorithm>
#include <string>
#include <vector>

#include "polyred/check.hpp"
#include "polyred/classify.hpp"
#include "polyred/linalg.hpp"
#include "polyred/minrep.hpp"
#include "polyred/polyhedron.hpp"
#include "polyred/report.hpp"
#include "polyred/row.hpp"

namespace polyred {

namespace detail {

inline void verify_witness(Polyhedron const& P, MinRepReport const& rep, int i, RowClass const& rc) {
  std::vector<Rational> const& w = *rc.witness;
  internal_check(static_cast<int>(w.size()) == P.dim, "verify: witness dimension mismatch");
  for (int e : rep.final_linearity)
    internal_check(P.rows[static_cast<std::size_t>(e)].value_at(w) == 0,
                   "verify: witness off the equation variety");
  for (int k : rep.final_nonredundant) {
    if (k == i) continue;
    internal_check(P.rows[static_cast<std::size_t>(k)].value_at(w) >= 0,
                   "verify: witness violates a kept row");
  }
  Rational v = P.rows[static_cast<std::size_t>(i)].value_at(w);
  switch (rc.verdict) {
    case Verdict::Linearity:
      internal_check(v == 0, "verify: linearity witness has nonzero row value");
      break;
    case Verdict::StronglyRedundant:
      internal_check(!rc.min_unbounded && rc.z_min > 0 && v == rc.z_min,
                     "verify: strong-redundancy witness does not attain a positive minimum");
      break;
    case Verdict::WeaklyRedundant:
      internal_check(!rc.min_unbounded && rc.z_min == 0 && v == 0,
                     "verify: weak-redundancy witness does not attain zero");
      break;
    case Verdict::NonRedundant:
      internal_check(v < 0, "verify: nonredundancy witness does not violate the row");
      internal_check(rc.min_unbounded || v == rc.z_min,
                     "verify: nonredundancy witness misses the reported minimum");
      break;
  }
}

}  // namespace detail

inline void verify_report(Polyhedron const& input, MinRepReport const& rep) {
  if (input.kind == RepKind::V) return verify_report(v_to_internal(input), rep);
  Polyhedron const& P = input;
  int const m = P.row_count();

  if (!rep.feasible) {
    internal_check(static_cast<int>(rep.farkas.size()) == m, "verify: certificate length mismatch");
    Rational b = 0;
    std::vector<Rational> coef(static_cast<std::size_t>(P.dim), Rational(0));
    for (int i = 0; i < m; ++i) {
      Rational const& l = rep.farkas[static_cast<std::size_t>(i)];
      if (l == 0) continue;
      internal_check(P.is_linearity(i) || l > 0, "verify: negative multiplier on an inequality row");
      Row const& r = P.rows[static_cast<std::size_t>(i)];
      b += l * r.b;
      for (int k = 0; k < P.dim; ++k) coef[static_cast<std::size_t>(k)] += l * r.a[static_cast<std::size_t>(k)];
    }
    for (auto const& c : coef) internal_check(c == 0, "verify: certificate combination is not constant");
    internal_check(b < 0, "verify: certificate constant is not negative");
    return;
  }

  // Bucket partition: every row in exactly one, classes entries elsewhere
  // only as matching evidence.
  std::vector<int> bucket(static_cast<std::size_t>(m), 0);  // 1 lin, 2 dep, 3 kept, 4 dup, 5 class
  auto mark = [&](int i, int which) {
    internal_check(i >= 0 && i < m, "verify: row index out of range");
    internal_check(bucket[static_cast<std::size_t>(i)] == 0, "verify: row in two buckets");
    bucket[static_cast<std::size_t>(i)] = which;
  };
  for (int i : rep.final_linearity) mark(i, 1);
  for (int i : rep.dependent_equations) mark(i, 2);
  for (int i : rep.final_nonredundant) mark(i, 3);
  for (auto const& [i, j] : rep.duplicate_of) mark(i, 4), (void)j;
  for (auto const& [i, rc] : rep.classes) {
    int& b = bucket[static_cast<std::size_t>(i)];
    if (b == 0) {
      internal_check(rc.verdict == Verdict::StronglyRedundant || rc.verdict == Verdict::WeaklyRedundant,
                     "verify: unbucketed row with a non-redundant class");
      b = 5;
    } else {
      internal_check(b != 4, "verify: duplicate row keeps a class entry");
      internal_check(b != 3 || rc.verdict == Verdict::NonRedundant,
                     "verify: kept row with a redundant class");
      internal_check((b != 1 && b != 2) || rc.verdict == Verdict::Linearity,
                     "verify: equation row with a non-linearity class");
    }
  }
  for (int i = 0; i < m; ++i) {
    internal_check(bucket[static_cast<std::size_t>(i)] != 0, "verify: row missing from the report");
    if (P.is_linearity(i))
      internal_check(bucket[static_cast<std::size_t>(i)] <= 2, "verify: declared equation left the equation buckets");
  }
  internal_check(std::is_sorted(rep.final_linearity.begin(), rep.final_linearity.end()) &&
                     std::is_sorted(rep.final_nonredundant.begin(), rep.final_nonredundant.end()),
                 "verify: report index lists not ascending");

  // Equation basis: independent; dependents and duplicates reproducible from it.
  std::vector<Row> eqs;
  eqs.reserve(rep.final_linearity.size());
  for (int i : rep.final_linearity) eqs.push_back(P.rows[static_cast<std::size_t>(i)]);
  GaussianReduction g = gaussian_reduce(eqs);
  internal_check(!g.inconsistent && g.dependent.empty(), "verify: equation basis is not independent");
  for (int i : rep.dependent_equations) {
    Row s = substitute_equations(g, P.rows[static_cast<std::size_t>(i)]);
    internal_check(s.b == 0 && s.coefficients_zero(), "verify: dependent row is not implied by the basis");
  }
  for (auto const& [i, j] : rep.duplicate_of) {
    internal_check(j < i, "verify: duplicate does not point to the smallest index");
    internal_check(bucket[static_cast<std::size_t>(j)] == 3 || bucket[static_cast<std::size_t>(j)] == 5,
                   "verify: duplicate points to a row that was not kept by dedup");
    Row si = substitute_equations(g, P.rows[static_cast<std::size_t>(i)]);
    Row sj = substitute_equations(g, P.rows[static_cast<std::size_t>(j)]);
    internal_check(!si.coefficients_zero() && gcd_normalize(si) == gcd_normalize(sj),
                   "verify: duplicate rows differ after normalization");
  }

  for (auto const& [i, rc] : rep.classes) {
    if (rc.verdict == Verdict::StronglyRedundant)
      internal_check(!rc.min_unbounded && rc.z_min > 0, "verify: strong verdict without positive minimum");
    if (rc.verdict == Verdict::WeaklyRedundant)
      internal_check(!rc.min_unbounded && rc.z_min == 0, "verify: weak verdict without zero minimum");
    if (rc.witness) detail::verify_witness(P, rep, i, rc);
  }

  if (rep.interior) {
    std::vector<Rational> const& w = *rep.interior;
    internal_check(static_cast<int>(w.size()) == P.dim, "verify: interior dimension mismatch");
    for (int e : rep.final_linearity)
      internal_check(P.rows[static_cast<std::size_t>(e)].value_at(w) == 0, "verify: interior off the equations");
    for (int k : rep.final_nonredundant)
      internal_check(P.rows[static_cast<std::size_t>(k)].value_at(w) > 0, "verify: interior not strict");
  }
}

}  // namespace polyred

#endif  // POLYRED_VERIFY_HPP
