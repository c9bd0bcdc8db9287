#pragma once

// Command-line surface. Subcommands: pg, axioms, desargues, lie-check,
// iso-check, rep-verify, label, export. Exit codes: 0 all checks pass,
// 1 violation/counterexample found, 2 input or usage error, 3 resource
// guard exceeded.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cliffgeom/axioms.hpp"
#include "cliffgeom/desargues.hpp"
#include "cliffgeom/errors.hpp"
#include "cliffgeom/exporters.hpp"
#include "cliffgeom/gf2.hpp"
#include "cliffgeom/incidence_doc.hpp"
#include "cliffgeom/isomorphism.hpp"
#include "cliffgeom/lie_closure.hpp"
#include "cliffgeom/pauli.hpp"
#include "cliffgeom/report.hpp"

namespace cliffgeom {

namespace cli_detail {

struct Options {
  int m = 0;
  std::string file;
  std::string out_path;
  int guard = -1;              // -1: per-command default
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;   // 0: per-command default
  unsigned jobs = 1;
  bool counts = false;
  std::string blade;
  std::string format = "dot";
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write file '" + path + "'");
  out << content;
}

inline IncidenceDocument load_document(const Options& opt) {
  return parse_incidence(read_file(opt.file));
}

inline Geometry load_geometry(const Options& opt) {
  const bool has_m = opt.m > 0, has_file = !opt.file.empty();
  if (has_m == has_file) throw ValidationError("exactly one of --m or --file is required");
  if (has_file) return geometry_from_document(load_document(opt));
  const int pguard = opt.guard < 0 ? kDefaultPointGuard : opt.guard;
  const int lguard = opt.guard < 0 ? kDefaultLineGuard : opt.guard;
  return build_pg(opt.m, /*with_lines=*/true, pguard, lguard);
}

inline int finish(const CheckReport& report, const Options& opt, std::ostream& out) {
  out << report.render_text();
  if (!opt.out_path.empty()) write_file(opt.out_path, report.render_json());
  return report.all_pass() ? 0 : 1;
}

inline std::string point_name(const Geometry& g, std::uint32_t i) {
  return label_text(g.points[i]);
}

inline std::string witness_text(const Geometry& g, const AxiomWitness& w) {
  std::string s = "points";
  for (auto p : w.points) s += " " + point_name(g, p);
  if (!w.lines.empty()) {
    s += " lines";
    for (auto l : w.lines) s += " l" + std::to_string(l);
  }
  return s + " — " + w.note;
}

inline bool labels_available(const Geometry& g) {
  if (!g.m || *g.m % 3 != 0) return false;
  for (const auto& p : g.points)
    if (!is_mask_label(p)) return false;
  return true;
}

inline int do_pg(const Options& opt, std::ostream& out) {
  if (opt.m < 1) throw ValidationError("pg requires --m");
  const int pguard = opt.guard < 0 ? kDefaultPointGuard : opt.guard;
  const int lguard = opt.guard < 0 ? kDefaultLineGuard : opt.guard;
  const PgCounts counts = pg_counts(opt.m, pguard, lguard);
  out << "points=" << counts.points << " lines=" << counts.lines;
  if (counts.lines_per_point) out << " lines-per-point=" << *counts.lines_per_point;
  if (!counts.enumerated) out << " (formula)";
  out << "\n";
  if (!opt.out_path.empty()) {
    const Geometry g = build_pg(opt.m, /*with_lines=*/true, pguard, lguard);
    write_file(opt.out_path, serialize_incidence(document_from_geometry(g)));
  }
  return 0;
}

inline int do_axioms(const Options& opt, std::ostream& out) {
  const Geometry g = load_geometry(opt);
  const IncidenceIndex idx(g);
  AxiomCheckOptions aopt;
  aopt.samples = opt.samples ? opt.samples : 1'000'000;
  aopt.seed = opt.seed;
  aopt.jobs = opt.jobs;
  const AxiomReport ar = check_axioms(g, idx, aopt);

  CheckReport report;
  auto emit = [&](const char* name, const AxiomResult& r) {
    auto& item = report.add(name);
    item.pass = r.pass;
    item.counts = {{"checked", static_cast<std::int64_t>(r.checked)},
                   {"violations", static_cast<std::int64_t>(r.violations)}};
    if (r.skipped_vacuous)
      item.counts.emplace_back("vacuous-skipped", static_cast<std::int64_t>(r.skipped_vacuous));
    if (r.sampled) {
      item.notes.push_back("sampled with seed " + std::to_string(opt.seed));
    }
    for (const auto& w : r.witnesses) item.witnesses.push_back(witness_text(g, w));
  };
  emit("axiom-i", ar.axiom_i);
  emit("axiom-ii", ar.axiom_ii);
  emit("axiom-iii", ar.axiom_iii);
  return finish(report, opt, out);
}

inline int do_desargues(const Options& opt, std::ostream& out) {
  const Geometry g = load_geometry(opt);
  const IncidenceIndex idx(g);
  DesarguesOptions dopt;
  dopt.point_guard = opt.guard < 0 ? kDefaultDesarguesPointGuard : opt.guard;
  dopt.jobs = opt.jobs;
  const DesarguesExhaustiveReport dr = desargues_exhaustive(g, idx, dopt);

  CheckReport report;
  auto& item = report.add("desargues");
  item.pass = dr.pass;
  item.counts = {{"checked", static_cast<std::int64_t>(dr.checked)},
                 {"degenerate-skipped", static_cast<std::int64_t>(dr.degenerate_skipped)},
                 {"failures", static_cast<std::int64_t>(dr.failures)}};
  const bool with_labels = labels_available(g);
  for (const auto& cfg : dr.configurations) {
    std::array<std::uint32_t, 3> axis = cfg.meets;
    std::sort(axis.begin(), axis.end());
    std::string note = "center " + point_name(g, cfg.center) + ": axis";
    for (auto p : axis) note += " " + point_name(g, p);
    if (with_labels) {
      note += " =";
      for (std::size_t k = 0; k < 3; ++k) {
        note += (k ? " | " : " ");
        note += label_blade_as_pauli(BladeIndex{mask_of(g.points[axis[k]]), *g.m}, *g.m / 3).str();
      }
    }
    item.notes.push_back(std::move(note));
  }
  if (dr.checked > dr.configurations.size())
    item.notes.push_back("(" + std::to_string(dr.checked - dr.configurations.size()) +
                         " further passing configurations not listed)");
  for (const auto& ce : dr.counterexamples) {
    std::string w = "center " + point_name(g, ce.center) + " triangles";
    for (auto p : ce.tri) w += " " + point_name(g, p);
    w += " /";
    for (auto p : ce.tri_prime) w += " " + point_name(g, p);
    w += " — " + ce.reason;
    item.witnesses.push_back(std::move(w));
  }
  return finish(report, opt, out);
}

inline int do_lie_check(const Options& opt, std::ostream& out) {
  CheckReport report;
  if (!opt.file.empty()) {
    const IncidenceDocument doc = load_document(opt);
    if (!all_points_are_subsets(doc) || !doc.m)
      throw ValidationError("lie-check needs subset-labeled points with a known m");
    std::vector<BladeIndex> blades;
    for (const auto& p : doc.points) blades.push_back(BladeIndex{mask_of(p), *doc.m});
    const LieClosureReport lr = lie_closure_check(blades, *doc.m);
    auto& item = report.add("lie-closure");
    item.pass = lr.pass;
    item.counts = {{"points", static_cast<std::int64_t>(blades.size())},
                   {"pairs", static_cast<std::int64_t>(lr.pairs_checked)}};
    if (lr.violation)
      item.witnesses.push_back("pair " + to_string(lr.violation->first) + ", " +
                               to_string(lr.violation->second) +
                               " anticommutes with product outside the set");
    return finish(report, opt, out);
  }

  if (opt.m < 1) throw ValidationError("exactly one of --m or --file is required");
  const int eguard = opt.guard < 0 ? kDefaultEnumerationGuard : opt.guard;
  auto& item = report.add("lie-closure-all-subspaces");
  std::int64_t subspaces = 0, pairs = 0;
  for (int k = 1; k <= opt.m && item.pass; ++k) {
    for (const auto& sub : enumerate_subspaces(opt.m, k, eguard)) {
      ++subspaces;
      std::vector<BladeIndex> blades;
      for (const auto& v : sub.nonzero_elements()) blades.push_back(blade_index_of(v));
      const LieClosureReport lr = lie_closure_check(blades, opt.m);
      pairs += static_cast<std::int64_t>(lr.pairs_checked);
      if (!lr.pass) {
        item.pass = false;
        item.witnesses.push_back("subspace of dim " + std::to_string(k) + " with pair " +
                                 to_string(lr.violation->first) + ", " +
                                 to_string(lr.violation->second));
        break;
      }
    }
  }
  item.counts = {{"m", opt.m}, {"subspaces", subspaces}, {"pairs", pairs}};
  return finish(report, opt, out);
}

inline int do_iso_check(const Options& opt, std::ostream& out) {
  if (opt.m < 1) throw ValidationError("iso-check requires --m");
  const int pguard = opt.guard < 0 ? kDefaultPointGuard : opt.guard;
  const int lguard = opt.guard < 0 ? kDefaultLineGuard : opt.guard;
  const IsoReport ir = blade_geometry_isomorphism(opt.m, pguard, lguard);
  CheckReport report;
  auto& item = report.add("blade-geometry-isomorphism");
  item.pass = ir.ok;
  item.counts = {{"blade-points", static_cast<std::int64_t>(ir.blade_points)},
                 {"vector-points", static_cast<std::int64_t>(ir.vector_points)},
                 {"blade-lines", static_cast<std::int64_t>(ir.blade_lines)},
                 {"vector-lines", static_cast<std::int64_t>(ir.vector_lines)}};
  if (!ir.ok) item.witnesses.push_back(ir.detail);
  return finish(report, opt, out);
}

inline int do_rep_verify(const Options& opt, std::ostream& out) {
  if (opt.m < 1) throw ValidationError("rep-verify requires --m");
  const int rep_guard = opt.guard < 0 ? kDefaultRepGuard : opt.guard;
  const int rank_guard = opt.guard < 0 ? kDefaultRankGuard : opt.guard;

  CheckReport report;
  const JWRep rep(opt.m, rep_guard);
  auto& relations = report.add("clifford-relations");
  relations.pass = verify_clifford_relations(rep);
  relations.counts = {{"m", opt.m},
                      {"dim", rep.dim()},
                      {"pairs", static_cast<std::int64_t>(opt.m) * (opt.m + 1) / 2}};

  auto& hom = report.add("representation-hom");
  const HomReport hr = verify_representation_hom(opt.m, rep_guard,
                                                 opt.samples ? opt.samples : 10'000, opt.seed);
  hom.pass = hr.pass;
  hom.counts = {{"pairs", static_cast<std::int64_t>(hr.pairs_checked)}};
  hom.notes.push_back(hr.exhaustive ? "exhaustive over basis pairs"
                                    : "sampled with seed " + std::to_string(opt.seed));

  if (opt.m % 2 == 1 && opt.m <= rank_guard) {
    auto& rank = report.add("span-rank");
    const int r = span_rank(opt.m, rank_guard);
    const std::int64_t expected = std::int64_t{1} << (opt.m - 1);
    rank.pass = (r == expected);
    rank.counts = {{"rank", r}, {"expected", expected}};

    auto& irreps = report.add("two-irreps");
    const IrrepsReport two = two_irreps_distinct(opt.m, rank_guard);
    irreps.pass = two.pass;
    irreps.notes.push_back("top-blade scalars " + two.top_scalar_primary.str() + " and " +
                           two.top_scalar_secondary.str());
  }
  return finish(report, opt, out);
}

inline int do_label(const Options& opt, std::ostream& out) {
  if (!opt.blade.empty()) {
    if (opt.m < 1) throw ValidationError("label --blade requires --m");
    if (opt.m % 3 != 0) throw ValidationError("labeling requires m divisible by 3");
    std::uint64_t mask = 0;
    std::stringstream ss(opt.blade);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      std::size_t pos = 0;
      int gen = 0;
      try {
        gen = std::stoi(tok, &pos);
      } catch (const std::exception&) {
        throw ValidationError("bad generator '" + tok + "' in --blade");
      }
      if (pos != tok.size() || gen < 1 || gen > opt.m)
        throw ValidationError("bad generator '" + tok + "' in --blade");
      mask |= std::uint64_t{1} << (gen - 1);
    }
    if (mask == 0) throw ValidationError("--blade needs at least one generator");
    const PauliLabel label = label_blade_as_pauli(BladeIndex{mask, opt.m}, opt.m / 3);
    out << label.str() << "\n";
    if (!opt.out_path.empty()) write_file(opt.out_path, label.str() + "\n");
    return 0;
  }

  if (opt.file.empty()) throw ValidationError("label requires --blade or --file");
  const IncidenceDocument doc = load_document(opt);
  if (!all_points_are_subsets(doc) || !doc.m)
    throw ValidationError("label needs subset-labeled points with a known m");
  if (*doc.m % 3 != 0) throw ValidationError("labeling requires m divisible by 3");
  std::string body;
  for (std::size_t i = 0; i < doc.points.size(); ++i) {
    const auto mask = mask_of(doc.points[i]);
    body += "p" + std::to_string(i) + " " + label_text(doc.points[i]) + " " +
            label_blade_as_pauli(BladeIndex{mask, *doc.m}, *doc.m / 3).str() + "\n";
  }
  out << body;
  if (!opt.out_path.empty()) write_file(opt.out_path, body);
  return 0;
}

inline int do_export(const Options& opt, std::ostream& out) {
  std::string content;
  if (opt.format == "json") {
    if (!opt.file.empty()) {
      content = serialize_incidence(load_document(opt));
    } else {
      const Geometry g = load_geometry(opt);
      content = serialize_incidence(document_from_geometry(g));
    }
  } else {
    const Geometry g = load_geometry(opt);
    content = opt.format == "dot" ? export_dot(g) : export_tikz(g);
  }
  if (!opt.out_path.empty())
    write_file(opt.out_path, content);
  else
    out << content;
  return 0;
}

}  // namespace cli_detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  using cli_detail::Options;
  CLI::App app{"exact Clifford-group geometry toolkit", "cliffgeom"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sc, bool with_file) {
    sc->add_option("--m", opt.m, "generator count of Cl_m");
    if (with_file) sc->add_option("--file", opt.file, "incidence document (JSON)");
    sc->add_option("--out", opt.out_path, "write machine-readable output to this path");
    sc->add_option("--guard", opt.guard, "override the command's resource guard");
    sc->add_option("--seed", opt.seed, "seed for sampled checks");
    sc->add_option("--samples", opt.samples, "sample budget for sampled checks");
    sc->add_option("--jobs", opt.jobs, "worker threads (results are identical for any value)");
  };

  CLI::App* pg = app.add_subcommand("pg", "build PG(m-1,2) and report point/line counts");
  add_common(pg, false);
  pg->add_flag("--counts", opt.counts, "print point/line counts (default output)");

  CLI::App* axioms = app.add_subcommand("axioms", "check the three projective axioms");
  add_common(axioms, true);

  CLI::App* desargues =
      app.add_subcommand("desargues", "exhaustive Desargues search over perspective triangles");
  add_common(desargues, true);

  CLI::App* lie = app.add_subcommand(
      "lie-check", "commutator closure of a point set (--file) or of every subspace (--m)");
  add_common(lie, true);

  CLI::App* iso = app.add_subcommand(
      "iso-check", "blade geometry vs projective space of Z2^m, both directions");
  add_common(iso, false);

  CLI::App* rep = app.add_subcommand(
      "rep-verify", "Clifford relations, homomorphism, span rank and the two irreducibles");
  add_common(rep, false);

  CLI::App* label = app.add_subcommand("label", "formal Pauli words for blades (m = 3N)");
  add_common(label, true);
  label->add_option("--blade", opt.blade, "comma-separated generator list, e.g. 1,2");

  CLI::App* exp = app.add_subcommand("export", "emit a geometry as dot, json or tikz");
  add_common(exp, true);
  exp->add_option("--format", opt.format, "dot|json|tikz")
      ->check(CLI::IsMember({"dot", "json", "tikz"}));

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (pg->parsed()) return cli_detail::do_pg(opt, out);
    if (axioms->parsed()) return cli_detail::do_axioms(opt, out);
    if (desargues->parsed()) return cli_detail::do_desargues(opt, out);
    if (lie->parsed()) return cli_detail::do_lie_check(opt, out);
    if (iso->parsed()) return cli_detail::do_iso_check(opt, out);
    if (rep->parsed()) return cli_detail::do_rep_verify(opt, out);
    if (label->parsed()) return cli_detail::do_label(opt, out);
    if (exp->parsed()) return cli_detail::do_export(opt, out);
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace cliffgeom
