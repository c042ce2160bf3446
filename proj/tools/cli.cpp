#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

#include "pgr/dichotomy.hpp"
#include "pgr/gadgets.hpp"
#include "pgr/io.hpp"
#include "pgr/render.hpp"
#include "pgr/skeleton.hpp"
#include "pgr/solver.hpp"

namespace pgr::cli {

namespace {

struct Options {
  std::string input;
  int dim = 2;
  std::optional<std::uint64_t> budget;
  bool json = false;
  std::string format;
  bool nae = false;
  std::string target;
  std::string orientation;
  std::string out;
  bool trees = false;
  std::vector<std::string> kinds;
};

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::Yes: return kYes;
    case Verdict::No: return kNo;
    case Verdict::BudgetExceeded: return kInconclusive;
  }
  return kInconclusive;
}

std::string render(const Graph& g, const Embedding& e, const std::string& format) {
  if (format == "ascii") {
    if (e.dim != 2) throw Error("ascii rendering needs a 2D embedding");
    return render_ascii(g, e);
  }
  if (format == "svg") return render_svg(g, e);
  return embedding_to_json(e).dump(2) + "\n";
}

/// Text to --out when given, else to stdout.
void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty())
    out << text;
  else
    write_file(o.out, text);
}

void emit_witness(const Options& o, std::ostream& out, const Graph& g,
                  const std::optional<Embedding>& e) {
  if (!e) return;
  if (!o.out.empty()) {
    write_file(o.out, render(g, *e, o.format.empty() ? "json" : o.format));
  } else if (!o.json && !o.format.empty()) {
    out << render(g, *e, o.format);
  }
}

void check_format(const Options& o) {
  if (o.format == "ascii" && o.dim != 2) throw Error("ascii rendering needs a 2D embedding");
}

int cmd_recognize(const Options& o, std::ostream& out) {
  check_format(o);
  const Graph g = parse_graph_any(read_file(o.input));
  const RecognitionResult r = recognize(g, o.dim, o.budget);
  if (o.json) {
    out << to_json(r).dump(2) << "\n";
  } else {
    out << to_string(r.verdict) << " (" << r.method << ")\n";
  }
  emit_witness(o, out, g, r.witness);
  return verdict_code(r.verdict);
}

int cmd_embed(const Options& o, std::ostream& out) {
  check_format(o);
  const Graph g = parse_graph_any(read_file(o.input));
  SolveConstraints c;
  c.node_budget = o.budget;
  if (!o.orientation.empty()) c.orientation = parse_orientation(g, read_file(o.orientation));
  SolveResult r;
  if (is_connected(g)) {
    r = solve(g, o.dim, c);
  } else {
    // components are placed side by side along the first axis
    r.verdict = Verdict::Yes;
    Embedding e{o.dim, std::vector<Point>(g.vertex_count())};
    int offset = 0;
    for (const Component& comp : connected_components(g)) {
      SolveConstraints cc = c;
      if (c.orientation) {
        cc.orientation = OrientationMap(comp.graph);
        for (EdgeId k = 0; k < comp.graph.edge_count(); ++k) {
          const Edge& ed = comp.graph.edge(k);
          (*cc.orientation)[k] = (*c.orientation)[g.edge_id(comp.original[ed.u], comp.original[ed.v]).value()];
        }
      }
      const SolveResult part = solve(comp.graph, o.dim, cc);
      r.nodes += part.nodes;
      if (part.verdict != Verdict::Yes) {
        r.verdict = part.verdict;
        break;
      }
      const auto [lo, hi] = part.embedding->bounds();
      for (VertexId v = 0; v < comp.graph.vertex_count(); ++v) {
        Point p = part.embedding->points[v] - lo;
        p.x += offset;
        e.points[comp.original[v]] = p;
      }
      offset += hi.x - lo.x + 2;
    }
    if (r.verdict == Verdict::Yes) r.embedding = e;
  }
  if (o.json) {
    nlohmann::json j{{"verdict", to_string(r.verdict)}, {"nodes", r.nodes}};
    if (r.embedding) j["witness"] = embedding_to_json(*r.embedding);
    out << j.dump(2) << "\n";
  } else {
    out << to_string(r.verdict) << " (" << r.nodes << " nodes)\n";
  }
  emit_witness(o, out, g, r.embedding);
  return verdict_code(r.verdict);
}

int cmd_reduce(const Options& o, std::ostream& out, std::ostream& err) {
  if (!o.nae) {
    err << "reduce reads its formula under not-all-equal semantics; pass --nae\n";
    return kUsage;
  }
  const NaeFormula phi = parse_dimacs(read_file(o.input));
  const Reduction r = reduce(phi, reduce_target_from_string(o.target));
  if (!o.orientation.empty() && r.orientation.labels.empty())
    throw Error("target " + o.target + " carries no composed orientation");
  if (!o.orientation.empty()) write_file(o.orientation, serialize_orientation(r.graph, r.orientation));
  emit(o, out, o.json ? graph_to_json(r.graph).dump(2) + "\n" : serialize_graph(r.graph));
  return kYes;
}

int cmd_orient(const Options& o, std::ostream& out) {
  const NaeFormula phi = parse_dimacs(read_file(o.input));
  const ExtendedSkeleton s = build_extended_skeleton(phi);
  std::vector<OrientRule> rules;
  const OrientationMap f = consistent_orientation(s, &rules);
  if (o.json) {
    nlohmann::json edges = nlohmann::json::array();
    for (EdgeId e = 0; e < s.graph.edge_count(); ++e) {
      const Edge& ed = s.graph.edge(e);
      edges.push_back({{"u", ed.u},
                       {"v", ed.v},
                       {"label", f[e] == Orient::Horizontal ? "H" : "V"},
                       {"rule", to_string(rules[e])}});
    }
    emit(o, out, nlohmann::json{{"edges", edges}}.dump(2) + "\n");
  } else {
    emit(o, out, serialize_orientation(s.graph, f));
  }
  return kYes;
}

int cmd_gadget_verify(const Options& o, std::ostream& out) {
  std::vector<GadgetKind> kinds;
  for (const std::string& k : o.kinds) {
    if (k == "all") {
      kinds = {GadgetKind::DoubleLadder, GadgetKind::Square, GadgetKind::ThreePlug,
               GadgetKind::UTree, GadgetKind::Windmill};
      break;
    }
    kinds.push_back(gadget_kind_from_string(k));
  }
  int code = kYes;
  nlohmann::json all = nlohmann::json::object();
  for (GadgetKind k : kinds) {
    const GadgetReport r = verify_gadget(catalog(k), o.budget.value_or(20'000'000));
    if (!r.conclusive)
      code = std::max(code, kInconclusive);
    else if (!r.passed && code == kYes)
      code = kNo;
    if (o.json) {
      all[to_string(k)] = to_json(r);
    } else {
      out << to_string(k) << ": " << (!r.conclusive ? "inconclusive" : r.passed ? "pass" : "fail")
          << "\n";
      for (const std::string& f : r.failures) out << "  " << f << "\n";
    }
  }
  if (o.json) out << all.dump(2) << "\n";
  return code;
}

int cmd_prism(const Options& o, std::ostream& out) {
  const Graph p = prism(parse_graph_any(read_file(o.input)));
  emit(o, out, o.json ? graph_to_json(p).dump(2) + "\n" : serialize_graph(p));
  return kYes;
}

DegreeSet parse_degree_set(std::string text) {
  for (char& ch : text)
    if (ch == '{' || ch == '}' || ch == ',') ch = ' ';
  std::istringstream in(text);
  DegreeSet d;
  int x;
  while (in >> x) d.insert(x);
  if (!in.eof()) throw Error("degree set must list integers, e.g. 1,4");
  return d;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const DegreeSet d = parse_degree_set(o.input);
  if (o.trees && o.dim != 2) throw Error("the trees column exists only in 2D");
  const DichotomyClass c = o.trees ? classify_trees(d) : classify(d, o.dim);
  if (o.json) {
    out << nlohmann::json{{"degrees", d.to_string()},
                          {"dim", o.dim},
                          {"complexity", to_string(c.complexity)},
                          {"tag", c.tag},
                          {"source", c.source}}
               .dump(2)
        << "\n";
  } else {
    out << d.to_string() << " " << c.applies_to << " in " << o.dim << "D: " << c.tag << " ("
        << to_string(c.complexity) << ")\n";
  }
  return kYes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partial grid recognition toolkit", "pgr"};
  app.require_subcommand(1);
  Options o;

  auto add_dim = [&](CLI::App* s) {
    s->add_option("--dim", o.dim, "lattice dimension")->check(CLI::IsMember({2, 3}));
  };
  auto add_budget = [&](CLI::App* s) {
    s->add_option("--budget", o.budget, "search node cap")->check(CLI::PositiveNumber);
  };
  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", o.format, "witness rendering")
        ->check(CLI::IsMember({"ascii", "svg", "json"}));
  };

  auto* rec = app.add_subcommand("recognize", "decide whether a graph is a partial grid");
  rec->add_option("graph", o.input)->required();
  add_dim(rec);
  add_budget(rec);
  add_format(rec);
  rec->add_option("--out", o.out, "witness file");

  auto* emb = app.add_subcommand("embed", "exact search, optionally under an orientation");
  emb->add_option("graph", o.input)->required();
  add_dim(emb);
  add_budget(emb);
  add_format(emb);
  emb->add_option("--orientation", o.orientation, "orientation file");
  emb->add_option("--out", o.out, "witness file");

  auto* red = app.add_subcommand("reduce", "build a hard instance from a DIMACS formula");
  red->add_option("formula", o.input)->required();
  red->add_flag("--nae", o.nae, "not-all-equal semantics");
  red->add_option("--target", o.target, "124-tree, 123-tree, 13-tree, strict-binary, 23-graph, 24-graph")
      ->required();
  red->add_option("--orientation", o.orientation, "also write the composed orientation here");
  red->add_option("--out", o.out, "graph file");

  auto* ori = app.add_subcommand("orient", "skeleton orientation for a DIMACS formula");
  ori->add_option("formula", o.input)->required();
  ori->add_option("--out", o.out, "orientation file");

  auto* gv = app.add_subcommand("gadget-verify", "check catalog gadgets");
  gv->add_option("kinds", o.kinds, "gadget names or all")->required();
  add_budget(gv);

  auto* pr = app.add_subcommand("prism", "prism of a graph");
  pr->add_option("graph", o.input)->required();
  pr->add_option("--out", o.out, "graph file");

  auto* cl = app.add_subcommand("classify", "complexity of a degree set");
  cl->add_option("degrees", o.input, "e.g. 1,4")->required();
  add_dim(cl);
  cl->add_flag("--trees", o.trees, "trees column (2D)");

  app.add_flag("--json", o.json, "machine-readable output");
  for (CLI::App* s : {rec, emb, red, ori, gv, pr, cl}) s->fallthrough();

  std::vector<std::string> argv_store{"pgr"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kYes;
  } catch (const CLI::ParseError& e) {
    err << "pgr: " << e.what() << "\n" << "run 'pgr --help' for usage\n";
    return kUsage;
  }

  try {
    if (*rec) return cmd_recognize(o, out);
    if (*emb) return cmd_embed(o, out);
    if (*red) return cmd_reduce(o, out, err);
    if (*ori) return cmd_orient(o, out);
    if (*gv) return cmd_gadget_verify(o, out);
    if (*pr) return cmd_prism(o, out);
    if (*cl) return cmd_classify(o, out);
  } catch (const Error& e) {
    err << "pgr: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace pgr::cli
