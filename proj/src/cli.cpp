#include "dnpoly/cli.hpp"

#include <CLI11.hpp>
#include <ostream>

#include "dnpoly/ar_bridge.hpp"
#include "dnpoly/census.hpp"
#include "dnpoly/io.hpp"
#include "dnpoly/mutation.hpp"
#include "dnpoly/ptolemy.hpp"
#include "dnpoly/render.hpp"
#include "dnpoly/verify.hpp"

namespace dnpoly {

namespace {

// A well-formed request whose answer is negative (exit 1).
class Negative : public std::runtime_error {
 public:
  explicit Negative(const std::string& what, Json report = nullptr)
      : std::runtime_error(what), report_(std::move(report)) {}
  const Json& report() const { return report_; }

 private:
  Json report_;
};

struct Options {
  std::string input;
  std::string with;
  std::string out;
  std::string dir = "minus";
  std::string element;
  std::string kind = "ptolemy";
  std::string method = "exhaustive";
  std::string suite = "all";
  std::string to_arc;
  std::string from_arc;
  std::vector<std::string> seeds;
  int n = 4;
  int size = 480;
  bool shade = false;
};

class Emitter {
 public:
  Emitter(const std::string& path, std::ostream& out) : path_(path), out_(out) {}
  void text(const std::string& s) {
    if (path_.empty() || path_ == "-")
      out_ << s;
    else
      write_text(path_, s);
  }
  void json(const Json& j) { text(j.dump(2) + "\n"); }

 private:
  std::string path_;
  std::ostream& out_;
};

Diagram require_noncrossing(const Diagram& d) {
  if (!d.is_noncrossing()) throw Negative("D is not non-crossing");
  return d;
}

Direction parse_direction(const std::string& s) {
  if (s == "plus") return Direction::Plus;
  if (s == "minus") return Direction::Minus;
  throw FormatError("direction must be plus or minus");
}

void check_cmd(const Options& o, Emitter& em) {
  const Diagram x = load_diagram(o.input);
  const PtolemyReport report = check_ptolemy(x);
  if (!report.ptolemy) throw Negative("not a Ptolemy diagram", violation_to_json(*report.violation));
  em.json(Json{{"result", "ptolemy"}, {"ptolemy", true}, {"torsion_part", is_torsion_part(x)}});
}

void nc_cmd(const Options& o, Emitter& em) { em.json(to_json(nc(load_diagram(o.input)))); }

void mutate_cmd(const Options& o, Emitter& em) {
  const Diagram x = load_diagram(o.input);
  const Diagram d = require_noncrossing(load_diagram(o.with));
  const Direction dir = parse_direction(o.dir);
  if (x.rank() != d.rank()) throw FormatError("X and D have different ranks");
  const CellDecomposition cells(d);
  for (const auto& e : x)
    if (!cells.in_nc(e)) throw Negative("X is not inside nc(D): " + e.to_string() + " crosses D");
  em.json(to_json(mutate_diagram(cells, x, dir)));
}

void cells_cmd(const Options& o, Emitter& em) {
  const Diagram d = require_noncrossing(load_diagram(o.input));
  em.json(cells_to_json(CellDecomposition(d)));
}

void triangle_cmd(const Options& o, Emitter& em) {
  const Diagram d = require_noncrossing(load_diagram(o.input));
  const ArcElement e = element_from_json(d.rank(), parse_json(o.element));
  const CellDecomposition cells(d);
  if (!cells.in_nc(e)) throw Negative(e.to_string() + " is not in nc(D)");
  if (d.contains(e)) throw Negative(e.to_string() + " lies in D");
  em.json(triangle_to_json(mutation_triangle(cells, e)));
}

CensusMethod parse_method(const std::string& s) {
  if (s == "exhaustive") return CensusMethod::Exhaustive;
  if (s == "closure") return CensusMethod::Closure;
  throw FormatError("method must be exhaustive or closure");
}

void enumerate_cmd(const Options& o, Emitter& em) {
  if (o.kind != "ptolemy" && o.kind != "maximal") throw FormatError("kind must be ptolemy or maximal");
  const DiagramIndex index{Rank(o.n)};
  const CensusKind kind = o.kind == "ptolemy" ? CensusKind::Ptolemy : CensusKind::Maximal;
  std::vector<Mask> masks;
  try {
    masks = run_census(index, kind, parse_method(o.method));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  em.text(census_jsonl(index, masks));
}

void graph_cmd(const Options& o, Emitter& em) {
  const DiagramIndex index{Rank(o.n)};
  std::vector<Mask> seeds;
  const PtolemyTable table(index);
  for (const auto& path : o.seeds) {
    const Diagram s = load_diagram(path);
    if (s.rank() != index.rank()) throw FormatError("seed " + path + " has another rank than --n");
    const Mask m = index.to_mask(s);
    if (!table.is_ptolemy(m)) throw Negative("seed " + path + " is not a Ptolemy diagram");
    seeds.push_back(m);
  }
  if (seeds.empty()) {
    if (o.n > kMaxMaximalRank) throw FormatError("graph without seeds is limited to n <= 6");
    seeds = enumerate_torsion_parts(index, CensusMethod::Closure);
  }
  em.json(graph_to_json(index, build_mutation_graph(index, seeds)));
}

void render_cmd(const Options& o, Emitter& em) {
  RenderSpec spec{load_diagram(o.input), std::nullopt, o.shade, o.size, {}};
  if (!o.with.empty()) {
    spec.highlight = load_diagram(o.with);
    if (spec.highlight->rank() != spec.diagram.rank()) throw FormatError("--with has another rank");
  }
  if (o.shade) require_noncrossing(spec.highlight.value_or(Diagram(spec.diagram.rank())));
  try {
    em.text(render_svg(spec));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

void verify_cmd(const Options& o, Emitter& em, std::ostream& err) {
  if (o.n != 4) throw FormatError("the acceptance suite runs at its pinned ranks; use --n 4");
  std::vector<int> ids;
  try {
    ids = parse_suite(o.suite);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  Json results = Json::array();
  bool all = true;
  for (int id : ids) {
    const CriterionResult r = run_criterion(id);
    err << format_result(r) << '\n';
    all = all && r.passed();
    results.push_back(Json{{"id", r.id},
                           {"name", r.name},
                           {"passed", r.passed()},
                           {"seconds", r.seconds},
                           {"budget_seconds", r.budget_seconds},
                           {"detail", r.detail}});
  }
  em.json(Json{{"passed", all}, {"criteria", results}});
  if (!all) throw Negative("acceptance criteria failed");
}

void arvertex_cmd(const Options& o, Emitter& em) {
  const Rank rank(o.n);
  if (o.to_arc.empty() == o.from_arc.empty()) throw FormatError("give exactly one of --to-arc, --from-arc");
  if (!o.to_arc.empty()) {
    ArVertex v;
    try {
      v = parse_ar_vertex(o.to_arc);
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
    if (!is_valid(rank, v, ArContext::Cluster))
      throw FormatError(v.to_string() + " is not a vertex of the cluster category for n = " + std::to_string(o.n));
    const ArcElement e = b_map(rank, v);
    em.json(Json{{"vertex", v.to_string()}, {"element", to_json(e)}});
    return;
  }
  const ArcElement e = element_from_json(rank, parse_json(o.from_arc));
  const ArVertex v = b_inv(rank, e);
  const auto module = module_vertex(rank, e);
  em.json(Json{{"vertex", v.to_string()}, {"element", to_json(e)}, {"module", module.has_value()}});
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polygon model of the type D_n cluster category", "dnpoly"};
  app.require_subcommand(1);
  Options o;

  auto input = [&](CLI::App* sub) {
    sub->add_option("--input,-i", o.input, "Diagram JSON file, - for stdin")->required();
  };
  auto output = [&](CLI::App* sub) { sub->add_option("--out,-o", o.out, "Output file, default stdout"); };

  auto* check = app.add_subcommand("check", "Decide whether a diagram is Ptolemy");
  input(check);
  output(check);
  auto* ncs = app.add_subcommand("nc", "Elements crossing nothing in the diagram");
  input(ncs);
  output(ncs);
  auto* mutate = app.add_subcommand("mutate", "Mutate X with respect to D");
  input(mutate);
  mutate->add_option("--with,-w", o.with, "D as diagram JSON")->required();
  mutate->add_option("--dir", o.dir, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));
  output(mutate);
  auto* cells = app.add_subcommand("cells", "Cell decomposition of a non-crossing D");
  input(cells);
  output(cells);
  auto* triangle = app.add_subcommand("triangle", "Mutation triangle of an element of nc(D)");
  input(triangle);
  triangle->add_option("--element,-e", o.element, "Element JSON")->required();
  output(triangle);
  auto* enumerate = app.add_subcommand("enumerate", "Census of torsion parts or maximal non-crossing diagrams");
  enumerate->add_option("--n", o.n, "Rank")->check(CLI::Range(4, 8));
  enumerate->add_option("--kind", o.kind, "ptolemy or maximal")->check(CLI::IsMember({"ptolemy", "maximal"}));
  enumerate->add_option("--method", o.method, "exhaustive or closure")
      ->check(CLI::IsMember({"exhaustive", "closure"}));
  output(enumerate);
  auto* graph = app.add_subcommand("graph", "Mutation graph closed from seeds (default: every Ptolemy diagram)");
  graph->add_option("--n", o.n, "Rank")->check(CLI::Range(4, 8));
  graph->add_option("--seed", o.seeds, "Seed diagram JSON, repeatable");
  output(graph);
  auto* render = app.add_subcommand("render", "SVG drawing of a diagram");
  input(render);
  render->add_option("--with,-w", o.with, "D drawn thick");
  render->add_flag("--cells", o.shade, "Shade the cells of D");
  render->add_option("--size", o.size, "Canvas size in pixels")->check(CLI::Range(64, 8192));
  output(render);
  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("--n", o.n, "Rank of the exhaustive sweeps (4)");
  verify->add_option("--suite", o.suite, "all or comma separated criterion numbers");
  output(verify);
  auto* arvertex = app.add_subcommand("arvertex", "Translate between AR coordinates and arc elements");
  arvertex->add_option("--n", o.n, "Rank")->check(CLI::Range(4, 64));
  arvertex->add_option("--to-arc", o.to_arc, "Vertex such as \"[0,4]+\"");
  arvertex->add_option("--from-arc", o.from_arc, "Element JSON");
  output(arvertex);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Emitter em(o.out, out);
  try {
    if (check->parsed()) check_cmd(o, em);
    if (ncs->parsed()) nc_cmd(o, em);
    if (mutate->parsed()) mutate_cmd(o, em);
    if (cells->parsed()) cells_cmd(o, em);
    if (triangle->parsed()) triangle_cmd(o, em);
    if (enumerate->parsed()) enumerate_cmd(o, em);
    if (graph->parsed()) graph_cmd(o, em);
    if (render->parsed()) render_cmd(o, em);
    if (verify->parsed()) verify_cmd(o, em, err);
    if (arvertex->parsed()) arvertex_cmd(o, em);
  } catch (const Negative& e) {
    if (!e.report().is_null()) em.json(e.report());
    err << "dnpoly: " << e.what() << '\n';
    return kExitNegative;
  } catch (const FormatError& e) {
    err << "dnpoly: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "dnpoly: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace dnpoly
