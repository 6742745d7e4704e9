// Row classification: verdict semantics, witnesses, scaling invariance, and
// the interior-point full-dimension test.

#include "catch_amalgamated.hpp"
#include "support.hpp"

using namespace polyred;
using namespace testsup;

namespace {

// x >= 1 (twice, scaled), x <= 3, and a row implied by them.
Polyhedron ladder() {
  return make_h(1, {Row(Rational(-1), {Rational(1)}),    // x >= 1, nonredundant
                    Row(Rational(-2), {Rational(2)}),    // same halfspace, scaled
                    Row(Rational(3), {Rational(-1)}),    // x <= 3, nonredundant
                    Row(Rational(1), {Rational(1)})});   // x >= -1, strongly redundant
}

}  // namespace

TEST_CASE("verdicts on a one-dimensional ladder", "[classify]") {
  Polyhedron P = ladder();
  RowClass c0 = classify(P, 0, true, nullptr);
  // Row 1 pins the same halfspace, so row 0 alone is weakly redundant.
  CHECK(c0.verdict == Verdict::WeaklyRedundant);
  CHECK(c0.z_min == 0);

  RowClass c3 = classify(P, 3, true, nullptr);
  CHECK(c3.verdict == Verdict::StronglyRedundant);
  CHECK(c3.z_min == 2);  // x >= 1 forces x + 1 >= 2

  // Without its duplicate, x >= 1 is nonredundant.
  Polyhedron Q = make_h(1, {P.rows[0], P.rows[2], P.rows[3]});
  RowClass q0 = classify(Q, 0, true, nullptr);
  CHECK(q0.verdict == Verdict::NonRedundant);
  REQUIRE(q0.witness.has_value());
  CHECK(Q.rows[0].value_at(*q0.witness) < 0);
}

TEST_CASE("hidden linearity is found with lpmax and has precedence", "[classify]") {
  // x >= 0 and -x >= 0 force x = 0; both rows are hidden linearities.
  Polyhedron P = make_h(2, {Row(Rational(0), {Rational(1), Rational(0)}),
                            Row(Rational(0), {Rational(-1), Rational(0)}),
                            Row(Rational(1), {Rational(0), Rational(1)})});
  for (int i : {0, 1}) {
    RowClass c = classify(P, i, true, nullptr);
    CHECK(c.verdict == Verdict::Linearity);
    CHECK(c.max_ran);
    CHECK(c.z_max == 0);
    REQUIRE(c.witness.has_value());
    CHECK(P.rows[static_cast<std::size_t>(i)].value_at(*c.witness) == 0);
  }
  // With the hunt off the pair is invisible: each row of it is needed (the
  // minimum is unbounded once the row is relaxed), so both are kept as-is.
  RowClass w = classify(P, 0, false, nullptr);
  CHECK(w.verdict == Verdict::NonRedundant);
  CHECK(w.min_unbounded);
  CHECK_FALSE(w.max_ran);
}

TEST_CASE("nonredundant witness violates exactly the tested row", "[classify]") {
  Rng rng(717);
  int nonredundant_seen = 0;
  for (int t = 0; t < 60; ++t) {
    InstanceSpec spec;
    spec.dim = rng.uniform(2, 4);
    spec.rows = rng.uniform(spec.dim + 1, 10);
    spec.tight = rng.uniform(0, 2);
    Polyhedron P = random_h(rng, spec);
    for (int i : P.inequality_indices()) {
      RowClass c = classify(P, i, true, nullptr);
      if (!c.witness) continue;
      auto const& w = *c.witness;
      Rational vi = P.rows[static_cast<std::size_t>(i)].value_at(w);
      switch (c.verdict) {
        case Verdict::NonRedundant:
          ++nonredundant_seen;
          CHECK(vi < 0);
          for (int j = 0; j < P.row_count(); ++j)
            if (j != i) CHECK(P.rows[static_cast<std::size_t>(j)].value_at(w) >= 0);
          if (!c.min_unbounded) CHECK(vi == c.z_min);
          break;
        case Verdict::Linearity:
          CHECK(vi == 0);
          break;
        case Verdict::StronglyRedundant:
          CHECK(vi == c.z_min);
          CHECK(c.z_min > 0);
          break;
        case Verdict::WeaklyRedundant:
          CHECK(vi == 0);
          CHECK(c.z_min == 0);
          break;
      }
      if (c.verdict != Verdict::NonRedundant)
        for (int j = 0; j < P.row_count(); ++j)
          if (j != i) CHECK(P.rows[static_cast<std::size_t>(j)].value_at(w) >= 0);
    }
  }
  CHECK(nonredundant_seen > 50);
}

TEST_CASE("verdicts are invariant under positive row scaling", "[classify]") {
  Rng rng(818);
  for (int t = 0; t < 40; ++t) {
    InstanceSpec spec;
    spec.dim = rng.uniform(2, 4);
    spec.rows = rng.uniform(spec.dim + 1, 9);
    spec.tight = rng.uniform(0, 2);
    Polyhedron P = random_h(rng, spec);
    std::vector<Row> scaled_rows;
    scaled_rows.reserve(P.rows.size());
    for (Row const& r : P.rows)
      scaled_rows.push_back(scaled(r, Rational(rng.uniform(1, 9), rng.uniform(1, 4))));
    Polyhedron Q = make_h(P.dim, std::move(scaled_rows));
    for (int i = 0; i < P.row_count(); ++i) {
      RowClass a = classify(P, i, true, nullptr);
      RowClass b = classify(Q, i, true, nullptr);
      CHECK(a.verdict == b.verdict);
    }
  }
}

TEST_CASE("strongly redundant rows are strict at every vertex of the rest", "[classify]") {
  Rng rng(919);
  int strong_seen = 0;
  for (int t = 0; t < 40 && strong_seen < 12; ++t) {
    int dim = rng.uniform(2, 3);
    Polyhedron P = random_bounded_h(rng, dim, rng.uniform(2, 4), 6);
    if (P.row_count() > 12) continue;
    for (int i = 0; i < P.row_count(); ++i) {
      RowClass c = classify(P, i, true, nullptr);
      if (c.verdict != Verdict::StronglyRedundant) continue;
      ++strong_seen;
      std::vector<Row> rest;
      for (int j = 0; j < P.row_count(); ++j)
        if (j != i) rest.push_back(P.rows[static_cast<std::size_t>(j)]);
      VertexList vl = enumerate_vertices(make_h(P.dim, rest));
      REQUIRE_FALSE(vl.vertices.empty());
      for (auto const& v : vl.vertices)
        CHECK(P.rows[static_cast<std::size_t>(i)].value_at(v) > 0);
    }
  }
  CHECK(strong_seen >= 12);
}

TEST_CASE("full-dimension test agrees with per-row classification", "[classify]") {
  Rng rng(1020);
  int thin_seen = 0;
  for (int t = 0; t < 60; ++t) {
    InstanceSpec spec;
    spec.dim = rng.uniform(2, 3);
    spec.rows = rng.uniform(3, 8);
    spec.tight = rng.uniform(0, 3);
    Polyhedron P = random_h(rng, spec);
    FullDimResult fd = full_dimension_test(P);
    bool any_linearity = false;
    for (int i = 0; i < P.row_count(); ++i)
      if (classify(P, i, true, nullptr).verdict == Verdict::Linearity) any_linearity = true;
    CHECK(fd.is_full == !any_linearity);
    if (fd.is_full) {
      REQUIRE(fd.interior.has_value());
      CHECK(fd.optimum > 0);
      for (Row const& r : P.rows) CHECK(r.value_at(*fd.interior) >= fd.optimum);
    } else {
      ++thin_seen;
      CHECK(fd.optimum == 0);
    }
  }
  CHECK(thin_seen > 5);
}

TEST_CASE("declared equations must be substituted before classifying", "[classify]") {
  Polyhedron P = make_h(2,
                        {Row(Rational(0), {Rational(1), Rational(-1)}),
                         Row(Rational(1), {Rational(1), Rational(0)})},
                        {0});
  CHECK_THROWS_AS(classify(P, 1, true, nullptr), InternalError);
}

TEST_CASE("classification off the feasible region's edge cases", "[classify]") {
  // Single row: minimizing over an empty active set is unbounded below in
  // free space, so the row is nonredundant with an unbounded certificate.
  Polyhedron P = make_h(2, {Row(Rational(1), {Rational(1), Rational(1)})});
  RowClass c = classify(P, 0, true, nullptr);
  CHECK(c.verdict == Verdict::NonRedundant);
  CHECK(c.min_unbounded);
  REQUIRE(c.witness.has_value());
  CHECK(P.rows[0].value_at(*c.witness) < 0);
}
