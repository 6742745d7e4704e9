// Command-line front end: reads one lrs-style file (or stdin), runs the
// requested pipeline, writes the result file to stdout. Verdict comments ride
// after `end` so the output stays parseable; --stats goes to stderr for the
// same reason.
//
// Exit codes: 0 success, 1 usage or internal failure, 2 parse error,
// 3 infeasible input, 4 guard-rail rejection.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <polyred/polyred.hpp>

namespace {

using namespace polyred;
using nlohmann::json;

struct Options {
  std::string verb;
  std::string file;
  int threads = 1;
  bool clarkson = false;
  std::string fm_order = "given";
  std::vector<int> eliminate;  // 1-based
  std::vector<int> project;    // 1-based
  bool verify = false;
  bool stats = false;
};

json stats_of(LPStats const& s) {
  return json{{"solves", s.solves.load()}, {"pivots", s.pivots.load()}, {"max_rows", s.max_rows.load()}};
}

// Columns for fel/goldensquare: explicit flags win, the file's job request is
// the fallback. Returns a validated 0-based spec.
ProjectionSpec resolve_spec(Options const& opt, PolyFile const& pf, int dim) {
  std::vector<int> elim = opt.eliminate;
  std::vector<int> keep = opt.project;
  if (elim.empty() && keep.empty()) {
    if (pf.job.op == JobRequest::Op::Eliminate) elim = pf.job.columns;
    if (pf.job.op == JobRequest::Op::Project) keep = pf.job.columns;
  }
  if (!elim.empty() && !keep.empty())
    throw std::invalid_argument("give either --eliminate or --project, not both");
  if (elim.empty() && keep.empty())
    throw std::invalid_argument("projection needs --eliminate or --project columns (flag or file option)");
  auto to0 = [&](std::vector<int> const& ids) {
    std::vector<int> out;
    for (int c : ids) {
      if (c < 1 || c > dim)
        throw std::invalid_argument("column " + std::to_string(c) + " out of range 1.." + std::to_string(dim));
      out.push_back(c - 1);
    }
    return out;
  };
  ProjectionSpec spec;
  std::vector<char> gone(static_cast<std::size_t>(dim), 0);
  if (!elim.empty()) {
    spec.eliminate = to0(elim);
    for (int c : spec.eliminate) gone[static_cast<std::size_t>(c)] = 1;
    for (int c = 0; c < dim; ++c)
      if (!gone[static_cast<std::size_t>(c)]) spec.keep.push_back(c);
  } else {
    spec.keep = to0(keep);
    for (int c : spec.keep) gone[static_cast<std::size_t>(c)] = 1;
    for (int c = 0; c < dim; ++c)
      if (!gone[static_cast<std::size_t>(c)]) spec.eliminate.push_back(c);
  }
  validate_projection_spec(spec, dim);
  return spec;
}

void require_h(PolyFile const& pf, std::string const& verb) {
  if (pf.poly.kind != RepKind::H)
    throw std::invalid_argument(verb + " needs an H-representation input");
}

// Re-reduce the produced file and insist nothing changes: the output of a
// projection must already be minimal.
void verify_minimal(Polyhedron const& out) {
  MinRepReport again = minimum_representation(out, MinRepOptions{});
  verify_report(out, again);
  internal_check(again.feasible, "verify: produced system is infeasible");
  internal_check(canonical_equal(apply_report(out, again), out),
                 "verify: produced system is not minimal");
}

void emit_kept_columns(std::ostream& os, std::vector<int> const& keep) {
  os << "*kept columns:";
  for (int c : keep) os << ' ' << c + 1;
  os << '\n';
}

int run(Options const& opt) {
  PolyFile pf;
  bool const use_stdin = opt.file.empty() || opt.file == "-";
  std::string const source = use_stdin ? "<stdin>" : opt.file;
  try {
    if (use_stdin) {
      pf = parse_poly(std::cin);
    } else {
      std::ifstream in(opt.file);
      if (!in) {
        std::cerr << "polyred: cannot open " << opt.file << "\n";
        return 2;
      }
      pf = parse_poly(in);
    }
  } catch (ParseError const& e) {
    std::cerr << "polyred: " << source << ": " << e.what() << "\n";
    return 2;
  }
  for (auto const& w : pf.warnings) std::cerr << "polyred: " << source << ": warning: " << w << "\n";

  std::string verb = opt.verb;
  if (verb.empty()) {
    switch (pf.job.op) {
      case JobRequest::Op::Redund: verb = "redund"; break;
      case JobRequest::Op::Eliminate:
      case JobRequest::Op::Project: verb = "fel"; break;
      default: verb = "minrep"; break;
    }
  }

  LPStats lp, clp;
  json extra;
  auto started = std::chrono::steady_clock::now();
  auto finish = [&](int code) {
    if (opt.stats) {
      json j;
      j["verb"] = verb;
      j["threads"] = opt.threads;
      j["lp"] = stats_of(lp);
      if (opt.clarkson) j["clarkson_lp"] = stats_of(clp);
      for (auto const& [k, v] : extra.items()) j[k] = v;
      j["elapsed_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started)
              .count();
      std::cerr << j.dump(2) << "\n";
    }
    return code;
  };

  if (verb == "minrep" || verb == "redund") {
    MinRepOptions o;
    o.workers = opt.threads;
    o.check_linearity_phase = verb == "minrep";
    o.use_clarkson = opt.clarkson;
    o.stats = &lp;
    o.clarkson_stats = &clp;
    MinRepReport rep = minimum_representation(pf.poly, o);
    if (opt.verify) verify_report(pf.poly, rep);
    extra["rows"] = json{{"input", pf.poly.row_count()},
                         {"final_linearity", rep.final_linearity.size()},
                         {"final_nonredundant", rep.final_nonredundant.size()}};
    if (!rep.feasible) {
      std::cerr << "polyred: " << source << ": input system is infeasible\n";
      emit_report(std::cerr, pf.poly, rep);
      return finish(3);
    }
    emit_poly(std::cout, apply_report(pf.poly, rep), pf.name);
    emit_report(std::cout, pf.poly, rep);
    return finish(0);
  }

  if (verb == "fel") {
    require_h(pf, verb);
    ProjectionSpec spec = resolve_spec(opt, pf, pf.poly.dim);
    FMOptions fo;
    fo.workers = opt.threads;
    fo.heuristic_order = opt.fm_order == "heuristic";
    fo.use_clarkson = opt.clarkson;
    fo.stats = &lp;
    fo.clarkson_stats = &clp;
    FMResult fr = project(pf.poly, spec, fo);
    json rounds = json::array();
    for (auto const& r : fr.rounds)
      rounds.push_back(json{{"column", r.column + 1},
                            {"path", r.equation_path ? "equation" : "combine"},
                            {"rows_before", r.rows_before},
                            {"raw_rows", r.raw_rows},
                            {"rows_after", r.rows_after},
                            {"R", r.R},
                            {"Sneg", r.Sneg},
                            {"Z", r.Z}});
    extra["rounds"] = std::move(rounds);
    if (!fr.feasible) {
      std::cerr << "polyred: " << source << ": input system is infeasible\n";
      emit_report(std::cerr, pf.poly, fr.initial_report);
      return finish(3);
    }
    extra["rows"] = json{{"input", pf.poly.row_count()}, {"output", fr.poly.row_count()}};
    if (opt.verify) verify_minimal(fr.poly);
    emit_poly(std::cout, fr.poly, pf.name);
    emit_kept_columns(std::cout, fr.kept_columns);
    return finish(0);
  }

  if (verb == "goldensquare") {
    require_h(pf, verb);
    ProjectionSpec spec = resolve_spec(opt, pf, pf.poly.dim);
    MinRepReport pre = minimum_representation(pf.poly, MinRepOptions{1, true, false, false, &lp, &clp});
    if (!pre.feasible) {
      std::cerr << "polyred: " << source << ": input system is infeasible\n";
      emit_report(std::cerr, pf.poly, pre);
      return finish(3);
    }
    Polyhedron out = project_via_vertices(pf.poly, spec);
    extra["rows"] = json{{"input", pf.poly.row_count()}, {"output", out.row_count()}};
    if (opt.verify) verify_minimal(out);
    std::vector<int> keep = spec.keep;
    std::sort(keep.begin(), keep.end());
    emit_poly(std::cout, out, pf.name);
    emit_kept_columns(std::cout, keep);
    return finish(0);
  }

  // oracle: brute-force conversion for test reproduction. H in, generators
  // out; V in, facets out.
  if (pf.poly.kind == RepKind::H) {
    VertexList vl = enumerate_vertices(pf.poly);
    std::vector<Row> rows;
    for (auto& v : vl.vertices) rows.push_back(Row{Rational(1), std::move(v)});
    for (auto& r : vl.rays) rows.push_back(Row{Rational(0), std::move(r)});
    extra["rows"] = json{{"input", pf.poly.row_count()}, {"output", rows.size()}};
    Polyhedron out = make_v(pf.poly.dim, std::move(rows), {});
    if (opt.verify) {
      for (auto const& v : vl.vertices)
        internal_check(contains(pf.poly, v), "verify: enumerated vertex outside the system");
      for (auto const& r : vl.rays)
        internal_check(admits_ray(pf.poly, r), "verify: enumerated ray leaves the system");
    }
    emit_poly(std::cout, out, pf.name);
    if (out.row_count() == 0) std::cout << "*no vertices or rays found (empty or non-pointed input)\n";
    return finish(0);
  }
  bool has_vertex = false;
  for (int i = 0; i < pf.poly.row_count(); ++i)
    if (!pf.poly.is_linearity(i) && pf.poly.rows[static_cast<std::size_t>(i)].b == 1) has_vertex = true;
  if (!has_vertex) {
    std::cerr << "polyred: " << source << ": V-representation without a vertex describes the empty set\n";
    return finish(3);
  }
  Polyhedron out = facet_enumerate(pf.poly);
  extra["rows"] = json{{"input", pf.poly.row_count()}, {"output", out.row_count()}};
  if (opt.verify) {
    for (int i = 0; i < pf.poly.row_count(); ++i) {
      Row const& g = pf.poly.rows[static_cast<std::size_t>(i)];
      if (g.b == 1)
        internal_check(contains(out, g.a), "verify: input vertex violates an output facet");
      else if (pf.poly.is_linearity(i))
        internal_check(admits_ray(out, g.a) && admits_ray(out, scaled(Row{Rational(0), g.a}, Rational(-1)).a),
                       "verify: input lineality leaves the output system");
      else
        internal_check(admits_ray(out, g.a), "verify: input ray leaves the output system");
    }
  }
  emit_poly(std::cout, out, pf.name);
  return finish(0);
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  static std::set<std::string> const verbs = {"minrep", "redund", "fel", "goldensquare", "oracle"};
  Options opt;
  if (!args.empty() && verbs.count(args[0])) {
    opt.verb = args[0];
    args.erase(args.begin());
  }

  CLI::App app{
      "exact rational redundancy removal, minimum representation, and projection\n"
      "usage: polyred [minrep|redund|fel|goldensquare|oracle] [file] [flags]\n"
      "verb defaults to the file's trailing option line, else minrep"};
  app.add_option("file", opt.file, "input .ine/.ext file (stdin when absent or '-')");
  app.add_option("--threads", opt.threads, "worker threads")->check(CLI::Range(1, 256));
  app.add_flag("--clarkson", opt.clarkson, "output-sensitive classification of the survivors");
  app.add_option("--fm-order", opt.fm_order, "elimination order: given | heuristic")
      ->check(CLI::IsMember({"given", "heuristic"}));
  app.add_option("--eliminate", opt.eliminate,
                 "1-based columns to eliminate, comma-separated (fel, goldensquare)")
      ->expected(-1)
      ->allow_extra_args(false)
      ->delimiter(',');
  app.add_option("--project", opt.project, "1-based columns to keep, comma-separated (fel, goldensquare)")
      ->expected(-1)
      ->allow_extra_args(false)
      ->delimiter(',');
  app.add_flag("--verify", opt.verify, "re-check certificates and witnesses; failures abort");
  app.add_flag("--stats", opt.stats, "JSON stats on stderr");
  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (CLI::CallForHelp const&) {
    std::cout << app.help();
    return 0;
  } catch (CLI::ParseError const& e) {
    std::cerr << "polyred: " << e.what() << "\n";
    return 1;
  }

  try {
    return run(opt);
  } catch (GuardRailError const& e) {
    std::cerr << "polyred: " << e.what() << "\n";
    return 4;
  } catch (std::exception const& e) {
    std::cerr << "polyred: " << e.what() << "\n";
    return 1;
  }
}
