#pragma once

// A single constraint row and the scaling-normal forms used for
// deduplication.
//
// An H-row stores b + a·x (>= 0 or = 0 depending on membership in the
// linearity set of the enclosing system). A V-row reuses the same layout
// with b holding the leading 0/1 marker and a holding the point/direction.

#include <polyred/rational.hpp>

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace polyred {

struct Row {
  Rational b;
  std::vector<Rational> a;

  Row() = default;
  Row(Rational b_, std::vector<Rational> a_) : b(std::move(b_)), a(std::move(a_)) {}

  int dim() const { return static_cast<int>(a.size()); }

  // b + a·x
  Rational value_at(std::span<Rational const> x) const {
    if (x.size() != a.size()) throw std::invalid_argument("Row::value_at: dimension mismatch");
    Rational v = b;
    for (std::size_t j = 0; j < a.size(); ++j) v += a[j] * x[j];
    return v;
  }

  // a·dir (the rate of change of this row along a direction)
  Rational rate_along(std::span<Rational const> dir) const {
    if (dir.size() != a.size()) throw std::invalid_argument("Row::rate_along: dimension mismatch");
    Rational v = 0;
    for (std::size_t j = 0; j < a.size(); ++j) v += a[j] * dir[j];
    return v;
  }

  bool all_zero() const {
    if (b != 0) return false;
    for (auto const& c : a)
      if (c != 0) return false;
    return true;
  }

  bool coefficients_zero() const {
    for (auto const& c : a)
      if (c != 0) return false;
    return true;
  }

  friend bool operator==(Row const& l, Row const& r) = default;
};

// Lexicographic order on (b, a1, ..., ad); total on rows of equal dimension.
inline std::strong_ordering lex_compare(Row const& l, Row const& r) {
  if (auto c = l.b.compare(r.b); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  std::size_t n = std::min(l.a.size(), r.a.size());
  for (std::size_t j = 0; j < n; ++j)
    if (auto c = l.a[j].compare(r.a[j]); c != 0)
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return l.a.size() <=> r.a.size();
}

inline bool lex_less(Row const& l, Row const& r) { return lex_compare(l, r) == std::strong_ordering::less; }

inline Row scaled(Row r, Rational const& f) {
  r.b *= f;
  for (auto& c : r.a) c *= f;
  return r;
}

// r + f·s
inline Row axpy(Row r, Rational const& f, Row const& s) {
  if (r.a.size() != s.a.size()) throw std::invalid_argument("axpy: dimension mismatch");
  r.b += f * s.b;
  for (std::size_t j = 0; j < r.a.size(); ++j) r.a[j] += f * s.a[j];
  return r;
}

// The unique positive rescaling with integer entries of content gcd 1.
// Pre: row is not all-zero.
inline Row gcd_normalize(Row const& r) {
  if (r.all_zero()) throw std::invalid_argument("gcd_normalize: all-zero row");
  Integer l = denominator_of(r.b);
  for (auto const& c : r.a) l = lcm(l, denominator_of(c));
  Integer g = abs(numerator_of(r.b) * (l / denominator_of(r.b)));
  for (auto const& c : r.a) g = gcd(g, abs(numerator_of(c) * (l / denominator_of(c))));
  Rational f(l, g);  // positive; scaling by it lands every entry on an integer
  return scaled(r, f);
}

// gcd_normalize plus a sign convention (first nonzero of (b, a) positive),
// making rows that differ by any nonzero scalar compare equal. This is the
// right normal form for equations, where both signs describe the same set.
inline Row normalize_equation(Row const& r) {
  Row n = gcd_normalize(r);
  int s = sign_of(n.b);
  for (std::size_t j = 0; s == 0 && j < n.a.size(); ++j) s = sign_of(n.a[j]);
  if (s < 0) n = scaled(std::move(n), Rational(-1));
  return n;
}

}  // namespace polyred
