#ifndef POLYRED_IO_HPP
#define POLYRED_IO_HPP

// Reader and writer for the lrs-style .ine/.ext text format:
//
//   optional name/comment lines
//   H-representation | V-representation     (H when absent)
//   [linearity k i1 ... ik]                 (1-based row indices)
//   begin
//   m n rational
//   m data lines of n rationals             (H: b a1..ad; V: delta v1..vd)
//   end
//   trailing option lines                   (job request; unknown ones warn)
//
// Lines starting with '*' are comments anywhere. Output rationals are always
// lowest-terms p/q (plain p when q = 1), so emitted files are byte-stable.

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polyred/check.hpp"
#include "polyred/classify.hpp"
#include "polyred/polyhedron.hpp"
#include "polyred/rational.hpp"
#include "polyred/report.hpp"
#include "polyred/row.hpp"

namespace polyred {

struct ParseError : std::runtime_error {
  int line;  // 1-based; 0 when not tied to a line
  ParseError(int line_, std::string const& what_)
      : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + what_ : what_),
        line(line_) {}
};

struct JobRequest {
  enum class Op { None, MinRep, Redund, Eliminate, Project };
  Op op = Op::None;
  std::vector<int> columns;  // 1-based variable ids, as written in the file
};

struct PolyFile {
  std::string name;
  Polyhedron poly;
  JobRequest job;
  std::vector<std::string> warnings;
};

namespace detail {

inline std::vector<std::string> tokenize(std::string const& line) {
  std::istringstream ss(line);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(std::move(t));
  return toks;
}

inline bool is_comment(std::string const& line) {
  for (char c : line) {
    if (c == ' ' || c == '\t') continue;
    return c == '*';
  }
  return false;
}

inline int parse_count(std::string const& tok, int line, char const* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
    return v;
  } catch (std::exception const&) {
    throw ParseError(line, std::string("expected a nonnegative ") + what + ", got '" + tok + "'");
  }
}

}  // namespace detail

inline PolyFile parse_poly(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) {
    if (!l.empty() && l.back() == '\r') l.pop_back();
    lines.push_back(std::move(l));
  }

  PolyFile file;
  RepKind kind = RepKind::H;
  std::vector<int> lin_decl;
  int lin_line = 0;
  std::size_t pos = 0;
  auto lineno = [&]() { return static_cast<int>(pos); };  // of the line just consumed

  // Header section, up to and including `begin`.
  bool saw_begin = false;
  while (pos < lines.size()) {
    std::string const& l = lines[pos++];
    if (detail::is_comment(l)) continue;
    std::vector<std::string> toks = detail::tokenize(l);
    if (toks.empty()) continue;
    if (toks[0] == "begin") {
      if (toks.size() > 1) file.warnings.push_back("line " + std::to_string(lineno()) + ": extra tokens after begin ignored");
      saw_begin = true;
      break;
    }
    if (toks[0] == "H-representation" || toks[0] == "V-representation") {
      kind = toks[0][0] == 'H' ? RepKind::H : RepKind::V;
      continue;
    }
    if (toks[0] == "linearity") {
      if (toks.size() < 2) throw ParseError(lineno(), "linearity needs a count");
      int k = detail::parse_count(toks[1], lineno(), "linearity count");
      if (static_cast<int>(toks.size()) != k + 2)
        throw ParseError(lineno(), "linearity declares " + std::to_string(k) + " rows but lists " +
                                       std::to_string(toks.size() - 2));
      for (int t = 0; t < k; ++t)
        lin_decl.push_back(detail::parse_count(toks[static_cast<std::size_t>(t) + 2], lineno(), "row index"));
      lin_line = lineno();
      continue;
    }
    if (file.name.empty())
      file.name = l;
    else
      file.warnings.push_back("line " + std::to_string(lineno()) + ": ignored leading line");
  }
  // EOF-shaped errors point one past the last line: where the token belongs.
  if (!saw_begin) throw ParseError(static_cast<int>(lines.size()) + 1, "missing 'begin'");

  // Size line.
  int m = 0, n = 0;
  {
    std::vector<std::string> toks;
    while (pos < lines.size()) {
      std::string const& l = lines[pos++];
      if (detail::is_comment(l)) continue;
      toks = detail::tokenize(l);
      if (!toks.empty()) break;
    }
    if (toks.size() < 2) throw ParseError(lineno(), "expected 'm n rational' after begin");
    m = detail::parse_count(toks[0], lineno(), "row count");
    n = detail::parse_count(toks[1], lineno(), "column count");
    if (n < 2) throw ParseError(lineno(), "need at least one variable column");
    if (toks.size() < 3)
      file.warnings.push_back("line " + std::to_string(lineno()) + ": number type missing, assuming rational");
    else if (toks[2] != "rational" && toks[2] != "integer")
      file.warnings.push_back("line " + std::to_string(lineno()) + ": unknown number type '" + toks[2] + "'");
  }
  int const d = n - 1;

  // Data rows, one line each.
  std::vector<Row> rows;
  std::vector<int> row_lines;
  rows.reserve(static_cast<std::size_t>(m));
  while (static_cast<int>(rows.size()) < m) {
    if (pos >= lines.size())
      throw ParseError(static_cast<int>(lines.size()),
                       "expected " + std::to_string(m) + " data rows, got " + std::to_string(rows.size()));
    std::string const& l = lines[pos++];
    if (detail::is_comment(l)) continue;
    std::vector<std::string> toks = detail::tokenize(l);
    if (toks.empty()) continue;
    if (static_cast<int>(toks.size()) != n)
      throw ParseError(lineno(), "expected " + std::to_string(n) + " entries, got " + std::to_string(toks.size()));
    Row r;
    r.a.reserve(static_cast<std::size_t>(d));
    for (int t = 0; t < n; ++t) {
      Rational v;
      try {
        v = parse_rational(toks[static_cast<std::size_t>(t)]);
      } catch (std::exception const& e) {
        throw ParseError(lineno(), "bad rational '" + toks[static_cast<std::size_t>(t)] + "': " + e.what());
      }
      if (t == 0)
        r.b = std::move(v);
      else
        r.a.push_back(std::move(v));
    }
    if (kind == RepKind::V && r.b != 0 && r.b != 1)
      throw ParseError(lineno(), "V-row leading entry must be 0 or 1");
    rows.push_back(std::move(r));
    row_lines.push_back(lineno());
  }

  // end
  bool saw_end = false;
  while (pos < lines.size()) {
    std::string const& l = lines[pos++];
    if (detail::is_comment(l)) continue;
    std::vector<std::string> toks = detail::tokenize(l);
    if (toks.empty()) continue;
    if (toks[0] != "end") throw ParseError(lineno(), "expected 'end', got '" + toks[0] + "'");
    saw_end = true;
    break;
  }
  if (!saw_end) throw ParseError(static_cast<int>(lines.size()) + 1, "missing 'end'");

  // Trailing options.
  while (pos < lines.size()) {
    std::string const& l = lines[pos++];
    if (detail::is_comment(l)) continue;
    std::vector<std::string> toks = detail::tokenize(l);
    if (toks.empty()) continue;
    if (toks[0] == "minrep" || toks[0] == "redund") {
      if (file.job.op != JobRequest::Op::None)
        file.warnings.push_back("line " + std::to_string(lineno()) + ": job request overrides an earlier one");
      file.job.op = toks[0] == "minrep" ? JobRequest::Op::MinRep : JobRequest::Op::Redund;
      file.job.columns.clear();
      if (toks.size() > 1)
        file.warnings.push_back("line " + std::to_string(lineno()) + ": arguments to " + toks[0] + " ignored");
      continue;
    }
    if (toks[0] == "eliminate" || toks[0] == "project") {
      if (toks.size() < 2) throw ParseError(lineno(), toks[0] + " needs a count");
      int k = detail::parse_count(toks[1], lineno(), "column count");
      if (static_cast<int>(toks.size()) != k + 2)
        throw ParseError(lineno(), toks[0] + " declares " + std::to_string(k) + " columns but lists " +
                                       std::to_string(toks.size() - 2));
      if (file.job.op != JobRequest::Op::None)
        file.warnings.push_back("line " + std::to_string(lineno()) + ": job request overrides an earlier one");
      file.job.op = toks[0] == "eliminate" ? JobRequest::Op::Eliminate : JobRequest::Op::Project;
      file.job.columns.clear();
      for (int t = 0; t < k; ++t) {
        int c = detail::parse_count(toks[static_cast<std::size_t>(t) + 2], lineno(), "column id");
        if (c < 1 || c > d) throw ParseError(lineno(), "column " + std::to_string(c) + " out of range 1.." + std::to_string(d));
        file.job.columns.push_back(c);
      }
      continue;
    }
    file.warnings.push_back("line " + std::to_string(lineno()) + ": ignored option '" + toks[0] + "'");
  }

  // Linearity declaration checks, then construction.
  std::vector<int> lin;
  for (int i : lin_decl) {
    if (i < 1 || i > m)
      throw ParseError(lin_line, "linearity row " + std::to_string(i) + " out of range 1.." + std::to_string(m));
    lin.push_back(i - 1);
  }
  std::sort(lin.begin(), lin.end());
  if (std::adjacent_find(lin.begin(), lin.end()) != lin.end())
    throw ParseError(lin_line, "duplicate linearity row");
  if (kind == RepKind::V) {
    for (int i : lin)
      if (rows[static_cast<std::size_t>(i)].b != 0)
        throw ParseError(row_lines[static_cast<std::size_t>(i)], "lineality row must have leading entry 0");
    file.poly = make_v(d, std::move(rows), std::move(lin));
  } else {
    file.poly = make_h(d, std::move(rows), std::move(lin));
  }
  return file;
}

inline PolyFile parse_poly(std::string const& text) {
  std::istringstream ss(text);
  return parse_poly(ss);
}

// Writes one polyhedron. H rows and V ray rows are scale-normalized to
// integers; V vertex rows keep their exact coordinates (the leading 1 must
// survive). Round-trips byte-identically through parse_poly.
inline void emit_poly(std::ostream& os, Polyhedron const& P, std::string const& name = "") {
  if (!name.empty()) os << name << '\n';
  os << (P.kind == RepKind::H ? "H-representation" : "V-representation") << '\n';
  if (!P.linearity.empty()) {
    os << "linearity " << P.linearity.size();
    for (int i : P.linearity) os << ' ' << i + 1;
    os << '\n';
  }
  os << "begin\n" << P.row_count() << ' ' << P.dim + 1 << " rational\n";
  for (int i = 0; i < P.row_count(); ++i) {
    Row const& raw = P.rows[static_cast<std::size_t>(i)];
    bool keep_exact = P.kind == RepKind::V && raw.b == 1;
    Row r = keep_exact || raw.all_zero() ? raw : gcd_normalize(raw);
    os << to_string(r.b);
    for (auto const& c : r.a) os << ' ' << to_string(c);
    os << '\n';
  }
  os << "end\n";
}

inline std::string verdict_note(Polyhedron const& input, MinRepReport const& rep, int i) {
  if (std::binary_search(rep.final_linearity.begin(), rep.final_linearity.end(), i)) return "linearity";
  if (std::binary_search(rep.dependent_equations.begin(), rep.dependent_equations.end(), i))
    return "dependent equation";
  if (std::binary_search(rep.final_nonredundant.begin(), rep.final_nonredundant.end(), i))
    return "nonredundant";
  auto dup = rep.duplicate_of.find(i);
  if (dup != rep.duplicate_of.end()) return "duplicate of row " + std::to_string(dup->second + 1);
  auto it = rep.classes.find(i);
  if (it != rep.classes.end()) {
    std::string s = to_string(it->second.verdict);
    if (!it->second.min_unbounded) s += " (min " + to_string(it->second.z_min) + ")";
    return s;
  }
  (void)input;
  return "?";
}

// Per-row verdicts as a '*' comment block, safe to append to an emitted file.
inline void emit_report(std::ostream& os, Polyhedron const& input, MinRepReport const& rep) {
  if (!rep.feasible) {
    os << "*infeasible: no point satisfies the system\n*certificate:";
    for (std::size_t i = 0; i < rep.farkas.size(); ++i)
      if (rep.farkas[i] != 0) os << " row" << i + 1 << "*" << to_string(rep.farkas[i]);
    os << "\n";
    return;
  }
  os << "*verdicts for the " << input.row_count() << " input rows\n";
  for (int i = 0; i < input.row_count(); ++i)
    os << "*  row " << i + 1 << ": " << verdict_note(input, rep, i) << '\n';
  std::size_t dropped = static_cast<std::size_t>(input.row_count()) - rep.final_linearity.size() -
                        rep.final_nonredundant.size();
  os << "*kept " << rep.final_linearity.size() << " linearities and " << rep.final_nonredundant.size()
     << " inequalities, dropped " << dropped << " rows\n";
}

}  // namespace polyred

#endif  // POLYRED_IO_HPP
