// Command-line front end: decompose words, render diagrams, list moves, run
// verification suites, emit sweep tables, probe ladder growth, and assemble
// the sign verdict.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "suq/dirac.hpp"
#include "suq/errors.hpp"
#include "suq/growth.hpp"
#include "suq/operators.hpp"
#include "suq/report.hpp"
#include "suq/sweep.hpp"
#include "suq/weyl.hpp"
#include "suq/witness.hpp"

namespace {

using namespace suq;

struct Options {
  std::string omega;
  int ell = 0;  // 0: use the largest generator index
  double q = 0.5;
  int n_max = 4;
  int z_max = 4;
  int margin = 1;
  int count = 10;
  long K = 1;
  double c = -1.0;  // <0: use the l1 bound of the move vectors
  std::string dirac = "abs-sum";
  std::string mode = "parallel";
  bool json = false;
  std::string out;
};

ExecMode exec_mode(const Options& o) {
  return o.mode == "serial" ? ExecMode::Serial : ExecMode::Parallel;
}

Decomposition make_dec(const Options& o) {
  const auto word = parse_word(o.omega, o.ell > 0 ? std::optional<int>(o.ell) : std::nullopt);
  int ell = o.ell;
  if (ell == 0) {
    for (int g : word) ell = std::max(ell, g);
    if (ell == 0) throw ParseError("empty word needs an explicit --ell");
  }
  return decompose(WeylElement::from_word(ell, word));
}

Window make_window(const Options& o) {
  Window w{o.n_max, o.z_max, o.margin, o.q};
  w.validate();
  return w;
}

Json config_json(const Options& o, const std::string& suite) {
  return Json{{"omega", o.omega}, {"ell", o.ell},       {"q", o.q},
              {"n_max", o.n_max}, {"z_max", o.z_max},   {"margin", o.margin},
              {"count", o.count}, {"K", o.K},           {"c", o.c},
              {"dirac", o.dirac}, {"mode", o.mode},     {"suite", suite}};
}

struct Report {
  Json doc;
  std::string text;
  bool discrepancy = false;

  Report(const Options& o, const std::string& suite) {
    doc["config"] = config_json(o, suite);
    doc["suite"] = suite;
    doc["results"] = Json::array();
    doc["discrepancies"] = Json::array();
  }
  void result(Json r) { doc["results"].push_back(std::move(r)); }
  void flag(const std::string& what) {
    doc["discrepancies"].push_back(what);
    text += "DISCREPANCY: " + what + "\n";
    discrepancy = true;
  }
};

int emit(const Options& o, Report& rep) {
  const std::string payload = o.json ? rep.doc.dump(2) + "\n" : rep.text;
  if (!o.out.empty()) {
    std::ofstream f(o.out, std::ios::binary);
    f << payload;
  } else {
    std::cout << payload;
  }
  return rep.discrepancy ? 1 : 0;
}

std::string constants_line(const Decomposition& d) {
  try {
    const AxisConstants ax = axis_constants(d);
    return "t=" + std::to_string(d.t()) + ", i_min=" + std::to_string(ax.i_min) +
           ", j_min=" + std::to_string(ax.j_min) + ", j_max=" + std::to_string(ax.j_max) +
           ", i_0=" + std::to_string(ax.i_0);
  } catch (const NoRepeatedGenerator&) {
    return "t=" + std::to_string(d.t()) + " (no repeated generator; SU_q(2)-type case)";
  }
}

int cmd_decompose(const Options& o) {
  Report rep(o, "decompose");
  const Decomposition d = make_dec(o);
  Json r = decomposition_json(d);
  r["length"] = d.length();
  rep.text += "strings:";
  for (int k = d.t(); k >= 1; --k) {
    rep.text += " {";
    for (int i = d.string_at(k).lo; i <= d.string_at(k).hi; ++i)
      rep.text += (i > d.string_at(k).lo ? "," : "") + std::to_string(i);
    rep.text += "}";
  }
  if (d.t() == 0) rep.text += " (identity)";
  rep.text += "\n" + constants_line(d) + "\n";
  try {
    r["axis"] = axis_json(axis_constants(d), d.t());
  } catch (const NoRepeatedGenerator& e) {
    r["degenerate"] = e.what();
  }
  rep.result(std::move(r));
  return emit(o, rep);
}

std::vector<BlockRef> parse_removals(const std::string& spec) {
  std::vector<BlockRef> out;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    const auto colon = spec.find(':', pos);
    if (colon == std::string::npos) throw ParseError("removals are 'string:gen' pairs");
    auto comma = spec.find(',', colon);
    if (comma == std::string::npos) comma = spec.size();
    out.push_back(BlockRef{std::stoi(spec.substr(pos, colon - pos)),
                           std::stoi(spec.substr(colon + 1, comma - colon - 1))});
    pos = comma + (comma < spec.size() ? 1 : 0);
  }
  return out;
}

int cmd_diagram(const Options& o, const std::string& removals) {
  Report rep(o, "diagram");
  const Decomposition d = make_dec(o);
  const Diagram g = Diagram::build(d, parse_removals(removals));
  rep.text = render_ascii(g);
  Json r;
  r["decomposition"] = decomposition_json(d);
  r["columns"] = g.columns();
  r["nat_columns"] = g.nat_columns();
  Json rem = Json::array();
  for (const BlockRef& b : g.removed()) rem.push_back(Json::array({b.k, b.gen}));
  r["removed"] = std::move(rem);
  r["ascii"] = rep.text;
  rep.result(std::move(r));
  return emit(o, rep);
}

int cmd_moves(const Options& o, int i, int j) {
  Report rep(o, "moves");
  const Decomposition d = make_dec(o);
  const Diagram g = Diagram::build(d);
  const auto moves = enumerate_moves(g, i, j);
  rep.text += "P_{" + std::to_string(i) + "," + std::to_string(j) + "}: " +
              std::to_string(moves.size()) + " move(s)\n";
  for (const Move& p : moves) {
    rep.text += "  segments:";
    for (int k = static_cast<int>(p.seg.size()) - 1; k >= 0; --k)
      rep.text += " (" + std::to_string(p.seg[k].first) + "," + std::to_string(p.seg[k].second) +
                  ")";
    rep.text += "\n";
    rep.result(move_json(g, p));
  }
  return emit(o, rep);
}

double move_l1_bound(const GrowthContext& ctx) {
  double c = 0;
  for (const Move& p : ctx.moves) {
    double l1 = 0;
    for (int v : p.m) l1 += std::abs(v);
    c = std::max(c, l1);
  }
  return c;
}

int cmd_verify(const Options& o, const std::string& suite) {
  Report rep(o, "verify:" + suite);
  const Decomposition d = make_dec(o);
  const Diagram g = Diagram::build(d);
  const Window w = make_window(o);
  const ExecMode mode = exec_mode(o);
  const bool all = suite == "all";

  if (all || suite == "unitarity") {
    const ScanResult r = unitarity_scan(g, w, mode);
    rep.text += "unitarity: max defect " + std::to_string(r.max_defect) + "\n";
    rep.result(Json{{"check", "unitarity"},
                    {"max_defect", r.max_defect},
                    {"at", point_json(g.map(), r.argmax)},
                    {"entry", Json::array({r.i, r.j})}});
    if (r.max_defect > 1e-12) rep.flag("unitarity defect above 1e-12");
  }
  if (all || suite == "mp-uniqueness") {
    const auto moves = all_moves(g);
    const auto r = mp_uniqueness_suite(g, moves, w, mode);
    rep.text += "mp-uniqueness: " + std::to_string(moves.size()) + " moves, " +
                std::to_string(r.violations) + " violations\n";
    rep.result(Json{{"check", "mp-uniqueness"},
                    {"moves", moves.size()},
                    {"violations", r.violations},
                    {"witness_points", r.witness_points}});
    if (!r.ok) rep.flag("image shift disagreed with the move prescription");
  }
  if (all || suite == "movetemp") {
    int pairs = 0, bad = 0;
    for (int i = 1; i <= g.levels(); ++i)
      for (int j = 1; j <= g.levels(); ++j) {
        const auto moves = enumerate_moves(g, i, j);
        for (std::size_t a = 0; a < moves.size(); ++a)
          for (std::size_t b = a + 1; b < moves.size(); ++b) {
            ++pairs;
            const auto wit = movetemp_witness(g, moves[a], moves[b]);
            if (!wit || !wit->dichotomy()) ++bad;
          }
      }
    rep.text += "movetemp: " + std::to_string(pairs) + " pairs, " + std::to_string(bad) +
                " without a 0-vs-±1 witness\n";
    rep.result(Json{{"check", "movetemp"}, {"pairs", pairs}, {"failures", bad}});
    if (bad > 0) rep.flag("movetemp dichotomy failed");
  }
  if (all || suite == "bdd3") {
    const GrowthContext ctx = make_growth_context(d);
    const DiracPtr dd = parse_dirac(g.map(), o.dirac);
    double worst_gap = 0;
    for (const Move& p : ctx.moves) {
      const Bdd3Result r = bdd3_sup(g, p, dd, w, mode);
      worst_gap = std::max(worst_gap, std::abs(r.combinatorial - r.operator_route));
    }
    rep.text += "bdd3: max route disagreement " + std::to_string(worst_gap) + "\n";
    rep.result(Json{{"check", "bdd3"}, {"max_gap", worst_gap}, {"dirac", dd->describe()}});
    if (worst_gap > 1e-12) rep.flag("bdd3 routes disagree beyond 1e-12");
  }
  if (all || suite == "certificate") {
    const GrowthContext ctx = make_growth_context(d);
    const DiracPtr dd = parse_dirac(g.map(), o.dirac);
    const double c = o.c >= 0 ? o.c : move_l1_bound(ctx);
    const CommutatorCertificate cert = commutator_certificate(ctx, dd, w, c, mode);
    rep.text += "certificate: bound " + std::to_string(c) +
                (cert.pass ? " holds for every move\n" : " violated\n");
    Json viol = Json::array();
    for (const auto& v : cert.violations) {
      viol.push_back(Json{{"move", move_json(g, ctx.moves[v.move_id])}, {"sup", v.sup}});
      rep.text += "  violating sup " + std::to_string(v.sup) + "\n";
    }
    rep.result(Json{{"check", "certificate"},
                    {"bound", c},
                    {"pass", cert.pass},
                    {"violations", std::move(viol)}});
    if (!cert.pass) rep.flag("commutator bound violated");
  }
  return emit(o, rep);
}

// Star entries of the two worked tables for the flagship word; any other
// word gets zero stars.
PointVec table_start(const Decomposition& d, const CoordMap& map, const AxisConstants& ax,
                     bool table1, long a, long b) {
  PointVec gamma = map.zero();
  const bool flagship = d.ell == 4 && d.t() == 4 && d.string_at(4) == Interval{2, 4} &&
                        d.string_at(3) == Interval{3, 3} && d.string_at(2) == Interval{2, 2} &&
                        d.string_at(1) == Interval{1, 1};
  if (table1) {
    gamma[map.index_of(ax.j_min, ax.i_min)] = static_cast<int>(a);
    if (flagship) {
      gamma[map.index_of(4, 2)] = 1;
      gamma[map.index_of(4, 3)] = 2;
      gamma[map.index_of(3, 3)] = 1;
      gamma[map.index_of(0, 2)] = -1;
      gamma[map.index_of(0, 3)] = 3;
    }
  } else {
    gamma[map.index_of(ax.j_max, ax.i_min)] = static_cast<int>(a);
    if (flagship) {
      gamma[map.index_of(4, 3)] = 2;
      gamma[map.index_of(3, 3)] = 1;
      gamma[map.index_of(2, 2)] = 1;
      gamma[map.index_of(0, 3)] = 1;
      gamma[map.index_of(0, 4)] = -2;
    }
  }
  gamma[map.index_of(0, ax.i_0)] = static_cast<int>(b);
  return gamma;
}

int cmd_sweep(const Options& o, const std::string& kind, long a, long b) {
  Report rep(o, "sweep:" + kind);
  const Decomposition d = make_dec(o);
  const CoordMap map(d);
  const AxisConstants ax = axis_constants(d);

  if (kind == "table1" || kind == "sweep4") {
    const SweepResult r = sweep4(d, table_start(d, map, ax, true, a, b));
    rep.text = r.table.render();
    rep.result(Json{{"kind", "sweep4"},
                    {"table", table_json(r.table)},
                    {"end", point_json(map, r.path.end())}});
  } else if (kind == "table2" || kind == "c1-escape") {
    const SweepResult r = c1_escape(d, table_start(d, map, ax, false, a, b), o.K);
    rep.text = r.table.render();
    rep.result(Json{{"kind", "c1-escape"},
                    {"K", o.K},
                    {"table", table_json(r.table)},
                    {"end", point_json(map, r.path.end())}});
  } else if (kind == "coordinate-escape") {
    const SweepPath path = coordinate_escape(d, map.zero(), o.K);
    rep.text += "coordinate escape: " + std::to_string(path.unit_length()) + " unit steps, C1 +" +
                std::to_string(o.K + 1) + "\n";
    rep.result(Json{{"kind", "coordinate-escape"},
                    {"K", o.K},
                    {"unit_steps", path.unit_length()},
                    {"end", point_json(map, path.end())}});
  } else {
    throw ParseError("unknown sweep kind '" + kind + "'");
  }
  return emit(o, rep);
}

int cmd_ladder(const Options& o, const std::string& partition) {
  Report rep(o, "ladder:" + partition);
  const Decomposition d = make_dec(o);
  const CoordMap map(d);
  const GrowthContext ctx = make_growth_context(d);
  const Window w = make_window(o);
  const ExecMode mode = exec_mode(o);

  Partition part;
  if (partition == "c0" || partition == "c1") {
    const AxisFunctionals fn = axis_functionals(d, map);
    if (partition == "c0")
      part = Partition{"sign of C0", [fn](const PointVec& p) { return fn.c0(p) > 0; }};
    else
      part = Partition{"sign of C1", [fn](const PointVec& p) { return fn.c1(p) > 0; }};
  } else if (partition == "coset") {
    const FreePlane plane(d);
    const PointVec base = map.zero();
    part = Partition{"free-plane coset of the origin",
                     [plane, base](const PointVec& p) { return plane.same_coset(base, p); }};
  } else if (partition == "origin") {
    const PointVec base = map.zero();
    part = Partition{"origin only", [base](const PointVec& p) { return p == base; }};
  } else {
    throw ParseError("unknown partition '" + partition + "'");
  }

  std::vector<Window> windows;
  for (int s = std::max(2 * o.margin, o.n_max - 2); s <= o.n_max; ++s) {
    Window wi = w;
    wi.n_max = s;
    wi.z_max = s;
    windows.push_back(wi);
  }
  const auto curve = sign_determining_probe(ctx, part, windows, mode);
  rep.text += "partition: " + part.name + "\n";
  rep.text += "window  count\n";
  for (const ProbePoint& p : curve)
    rep.text += "  " + std::to_string(p.window.n_max) + "     " + std::to_string(p.count) + "\n";

  const GrowthGraph graph(ctx, windows.back(), mode);
  const DisjointPathResult r = disjoint_path_count(graph, part);
  rep.result(Json{{"partition", part.name},
                  {"curve", curve_json(curve)},
                  {"ladder", ladder_json(map, r.ladder)}});
  return emit(o, rep);
}

int cmd_verdict(const Options& o) {
  Report rep(o, "verdict");
  const Decomposition d = make_dec(o);
  const CoordMap map(d);
  const VerdictReport v = verdict(d, make_window(o), o.count, exec_mode(o));
  if (v.degenerate) {
    rep.text += "degenerate: " + v.degenerate_reason + "\n";
  } else {
    for (const std::string& f : v.findings) rep.text += "ok: " + f + "\n";
  }
  for (const std::string& f : v.discrepancies) rep.flag(f);
  rep.result(verdict_json(v, &map));
  rep.text += v.ok ? "verdict: all witnesses behave as predicted\n"
                   : "verdict: discrepancy found\n";
  if (!v.ok) rep.discrepancy = true;
  return emit(o, rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"diagram calculus and Dirac-sign verification for representations of "
               "C(SU_q(l+1))"};
  app.require_subcommand(1);

  Options o;
  app.add_option("--omega", o.omega, "reduced word, e.g. \"(s1 s2)(s1)\" or \"1 2 | 1\"");
  app.add_option("--ell", o.ell, "rank (default: largest generator index)");
  app.add_option("--q", o.q, "deformation parameter in (0,1)");
  app.add_option("--n-max", o.n_max, "window bound on N coordinates");
  app.add_option("--z-max", o.z_max, "window bound on |Z| coordinates");
  app.add_option("--margin", o.margin, "interior margin");
  app.add_option("--count", o.count, "sample count for witness sequences");
  app.add_option("--K", o.K, "escape parameter K");
  app.add_option("--c", o.c, "commutator bound (default: max l1 norm of move vectors)");
  app.add_option("--dirac", o.dirac, "eigenvalue candidate: abs-sum | const:<v> | coord:<k>,<i> | exp2:<k>,<i>");
  app.add_option("--mode", o.mode, "serial | parallel")->check(CLI::IsMember({"serial", "parallel"}));
  app.add_flag("--json", o.json, "emit the JSON report");
  app.add_option("--out", o.out, "write the report to FILE");
  app.set_config("--config");

  auto* sc_dec = app.add_subcommand("decompose", "interval-string decomposition and constants");
  sc_dec->fallthrough();
  std::string positional_omega;
  sc_dec->add_option("word", positional_omega, "reduced word (overrides --omega)");

  auto* sc_diag = app.add_subcommand("diagram", "ASCII rendering of the layered diagram");
  sc_diag->fallthrough();
  std::string removals;
  sc_diag->add_option("--remove", removals, "labelled blocks to suppress, e.g. \"4:4,1:1\"");

  auto* sc_moves = app.add_subcommand("moves", "list the moves of P_{i,j}");
  sc_moves->fallthrough();
  int mi = 1, mj = 1;
  sc_moves->add_option("i", mi, "left node")->required();
  sc_moves->add_option("j", mj, "right node")->required();

  auto* sc_verify = app.add_subcommand("verify", "run a verification suite");
  sc_verify->fallthrough();
  std::string suite = "all";
  sc_verify->add_option("suite", suite, "unitarity | mp-uniqueness | movetemp | bdd3 | certificate | all")
      ->check(CLI::IsMember({"unitarity", "mp-uniqueness", "movetemp", "bdd3", "certificate", "all"}));

  auto* sc_sweep = app.add_subcommand("sweep", "emit a sweepout path and table");
  sc_sweep->fallthrough();
  std::string kind = "table1";
  long arg_a = 2, arg_b = -1;
  sc_sweep->add_option("kind", kind, "table1 | table2 | coordinate-escape");
  sc_sweep->add_option("--a", arg_a, "value of the distinguished N coordinate");
  sc_sweep->add_option("--b", arg_b, "value of the (0, i_0) coordinate");

  auto* sc_ladder = app.add_subcommand("ladder", "disjoint-path growth curve for a partition");
  sc_ladder->fallthrough();
  std::string partition = "c0";
  sc_ladder->add_option("partition", partition, "c0 | c1 | coset | origin");

  auto* sc_verdict = app.add_subcommand("verdict", "bundle the sign-triviality evidence");
  sc_verdict->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sc_dec->parsed()) {
      if (!positional_omega.empty()) o.omega = positional_omega;
      return cmd_decompose(o);
    }
    if (sc_diag->parsed()) return cmd_diagram(o, removals);
    if (sc_moves->parsed()) return cmd_moves(o, mi, mj);
    if (sc_verify->parsed()) return cmd_verify(o, suite);
    if (sc_sweep->parsed()) return cmd_sweep(o, kind, arg_a, arg_b);
    if (sc_ladder->parsed()) return cmd_ladder(o, partition);
    if (sc_verdict->parsed()) return cmd_verdict(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
