#pragma once

// The input/output representation shared by every operation.
//
// kind H: rows are b + a·x = 0 (indices in `linearity`) or >= 0 (the rest).
// kind V: rows are generators; b holds the leading marker, 1 for a point and
//         0 for a direction; rows listed in `linearity` are lineality
//         directions (marker must be 0).

#include <polyred/row.hpp>

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace polyred {

enum class RepKind { H, V };

struct Polyhedron {
  RepKind kind = RepKind::H;
  int dim = 0;
  std::vector<Row> rows;
  std::vector<int> linearity;  // 0-based row indices, kept sorted and unique

  int row_count() const { return static_cast<int>(rows.size()); }

  bool is_linearity(int i) const {
    return std::binary_search(linearity.begin(), linearity.end(), i);
  }

  std::vector<int> inequality_indices() const {
    std::vector<int> out;
    out.reserve(rows.size() - linearity.size());
    for (int i = 0; i < row_count(); ++i)
      if (!is_linearity(i)) out.push_back(i);
    return out;
  }

  void validate() const {
    if (dim < 0) throw std::invalid_argument("polyhedron: negative dimension");
    for (auto const& r : rows)
      if (r.dim() != dim) throw std::invalid_argument("polyhedron: row dimension mismatch");
    int prev = -1;
    for (int i : linearity) {
      if (i <= prev) throw std::invalid_argument("polyhedron: linearity indices must be sorted and unique");
      if (i < 0 || i >= row_count()) throw std::invalid_argument("polyhedron: linearity index out of range");
      prev = i;
    }
    if (kind == RepKind::V) {
      for (int i = 0; i < row_count(); ++i) {
        if (rows[i].b != 0 && rows[i].b != 1)
          throw std::invalid_argument("polyhedron: V-row leading entry must be 0 or 1");
        if (is_linearity(i) && rows[i].b != 0)
          throw std::invalid_argument("polyhedron: lineality row must have leading entry 0");
      }
    }
  }
};

inline Polyhedron make_h(int dim, std::vector<Row> rows, std::vector<int> linearity = {}) {
  Polyhedron p{RepKind::H, dim, std::move(rows), std::move(linearity)};
  std::sort(p.linearity.begin(), p.linearity.end());
  p.validate();
  return p;
}

inline Polyhedron make_v(int dim, std::vector<Row> rows, std::vector<int> linearity = {}) {
  Polyhedron p{RepKind::V, dim, std::move(rows), std::move(linearity)};
  std::sort(p.linearity.begin(), p.linearity.end());
  p.validate();
  return p;
}

// Exact membership: equations hold with equality, inequalities are >= 0.
inline bool contains(Polyhedron const& P, std::vector<Rational> const& x) {
  for (int i = 0; i < P.row_count(); ++i) {
    Rational v = P.rows[static_cast<std::size_t>(i)].value_at(x);
    if (P.is_linearity(i) ? v != 0 : v < 0) return false;
  }
  return true;
}

// Exact recession-cone membership of a nonzero direction.
inline bool admits_ray(Polyhedron const& P, std::vector<Rational> const& r) {
  bool nonzero = false;
  for (auto const& c : r)
    if (c != 0) nonzero = true;
  if (!nonzero) return false;
  for (int i = 0; i < P.row_count(); ++i) {
    Rational v = P.rows[static_cast<std::size_t>(i)].rate_along(r);
    if (P.is_linearity(i) ? v != 0 : v < 0) return false;
  }
  return true;
}

}  // namespace polyred
