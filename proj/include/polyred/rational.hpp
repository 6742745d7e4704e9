#pragma once

// Exact rational scalar and its text form.
//
// Backed by GMP through boost::multiprecision. Values are always kept in
// canonical form (lowest terms, positive denominator); the GMP backend
// maintains that invariant for every arithmetic result and for construction
// from integer components. Construction from strings is deliberately not
// used anywhere: it would bypass canonicalization.

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace polyred {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline int sign_of(Rational const& q) { return q.sign(); }

inline Integer numerator_of(Rational const& q) { return numerator(q); }
inline Integer denominator_of(Rational const& q) { return denominator(q); }

// Parses "p", "-p" or "p/q" with integer p and q > 0.
// Throws std::invalid_argument with a human-readable reason otherwise.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&](char const* why) {
    throw std::invalid_argument("bad rational '" + std::string(text) + "': " + why);
  };
  if (text.empty()) fail("empty token");

  auto is_integer = [](std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };

  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (den.find('/') != std::string_view::npos) fail("more than one '/'");
  }
  if (!is_integer(num)) fail("numerator is not an integer");
  if (!is_integer(den)) fail("denominator is not an integer");

  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) fail("zero denominator");
  if (d < 0) fail("denominator must be positive");
  return Rational(n, d);  // canonicalizes
}

// Lowest-terms text: "p/q", or "p" when q == 1. Inverse of parse_rational.
inline std::string to_string(Rational const& q) { return q.str(); }

}  // namespace polyred
