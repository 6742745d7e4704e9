#pragma once

// Projection without elimination rounds, at oracle scale: enumerate the
// input's generators, drop the eliminated coordinates from each, strip the
// now-redundant generators, and convert back to inequalities. Every step is
// independent of the elimination path, so the two routes cross-check each
// other end to end.

#include <polyred/check.hpp>
#include <polyred/fourier_motzkin.hpp>
#include <polyred/linalg.hpp>
#include <polyred/minrep.hpp>
#include <polyred/oracle.hpp>
#include <polyred/polyhedron.hpp>
#include <polyred/report.hpp>

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace polyred {

inline constexpr int vertex_route_max_vertices = 5000;

inline Polyhedron project_via_vertices(Polyhedron const& P, ProjectionSpec const& spec,
                                       int max_vertices = vertex_route_max_vertices) {
  internal_check(P.kind == RepKind::H, "project_via_vertices: H-representation required");
  validate_projection_spec(spec, P.dim);
  int const d = P.dim;
  std::vector<int> keep = spec.keep;
  std::sort(keep.begin(), keep.end());

  // Generators of P. A non-pointed system has no vertices of its own, so the
  // quotient by its lineality space (pointed, same feasibility) is enumerated
  // instead and its generators are injected back.
  auto lines = nullspace(P.rows, d);
  std::vector<std::vector<Rational>> vertices, rays;
  if (lines.empty()) {
    VertexList vl = enumerate_vertices(P);
    vertices = std::move(vl.vertices);
    rays = std::move(vl.rays);
  } else {
    QuotientMap qm = quotient_by(lines, d);
    std::vector<Row> qrows;
    qrows.reserve(P.rows.size());
    for (auto const& r : P.rows) qrows.push_back(qm.pull_row(r));
    VertexList vl = enumerate_vertices(make_h(qm.reduced, std::move(qrows), P.linearity));
    for (auto const& v : vl.vertices) vertices.push_back(qm.inject(v));
    for (auto const& r : vl.rays) rays.push_back(qm.inject(r));
  }
  if (vertices.empty())
    throw std::invalid_argument("project_via_vertices: input system is infeasible");
  if (static_cast<int>(vertices.size()) > max_vertices)
    throw GuardRailError("project_via_vertices: " + std::to_string(vertices.size()) +
                         " vertices exceed the limit of " + std::to_string(max_vertices));

  // Coordinate drop. Direction generators may vanish entirely; point
  // generators never do (the leading 1 survives).
  auto take = [&](std::vector<Rational> const& x) {
    std::vector<Rational> out;
    out.reserve(keep.size());
    for (int c : keep) out.push_back(x[static_cast<std::size_t>(c)]);
    return out;
  };
  std::vector<Row> vrows;
  std::vector<int> vlin;
  for (auto const& v : vertices) vrows.push_back(Row{Rational(1), take(v)});
  for (auto const& r : rays) {
    Row row{Rational(0), take(r)};
    if (!row.all_zero()) vrows.push_back(std::move(row));
  }
  for (auto const& l : lines) {
    Row row{Rational(0), take(l)};
    if (row.all_zero()) continue;
    vlin.push_back(static_cast<int>(vrows.size()));
    vrows.push_back(std::move(row));
  }

  Polyhedron V = make_v(static_cast<int>(keep.size()), std::move(vrows), std::move(vlin));
  MinRepReport rep = minimum_representation(V, MinRepOptions{});
  internal_check(rep.feasible, "generator description of a nonempty set came back empty");
  return facet_enumerate(apply_report(V, rep));
}

}  // namespace polyred
