#include "dnpoly/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "dnpoly/mutation.hpp"

namespace dnpoly {

namespace {

constexpr int kMaxJsonRank = 64;

int int_field(const Json& j, const char* key) {
  if (!j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  const Json& v = j.at(key);
  if (!v.is_number_integer()) throw FormatError(std::string("field \"") + key + "\" must be an integer");
  const auto x = v.get<std::int64_t>();
  if (x < -(1 << 20) || x > (1 << 20)) throw FormatError(std::string("field \"") + key + "\" out of range");
  return static_cast<int>(x);
}

Color color_field(const Json& j) {
  if (!j.contains("color") || !j.at("color").is_string())
    throw FormatError("a diameter needs \"color\": \"red\" or \"green\"");
  const auto s = j.at("color").get<std::string>();
  if (s == "red") return Color::Red;
  if (s == "green") return Color::Green;
  throw FormatError("unknown colour \"" + s + "\"");
}

Json vertex_json(CellVertex v) { return v.is_center() ? Json("c") : Json(v.boundary()); }

}  // namespace

Json to_json(const ArcElement& e) {
  if (e.is_pair()) return Json{{"kind", "pair"}, {"a", e.a()}, {"b", e.b()}};
  return Json{{"kind", "diameter"}, {"a", e.a()}, {"color", to_string(e.color())}};
}

Json to_json(const Diagram& d) {
  Json elems = Json::array();
  for (const auto& e : d) elems.push_back(to_json(e));
  return Json{{"n", d.rank().n()}, {"elements", elems}};
}

ArcElement element_from_json(Rank rank, const Json& j) {
  if (!j.is_object()) throw FormatError("element must be a JSON object");
  if (!j.contains("kind") || !j.at("kind").is_string()) throw FormatError("element needs a \"kind\"");
  const auto kind = j.at("kind").get<std::string>();
  const int a = int_field(j, "a");
  if (a < 0 || a >= rank.vertices())
    throw FormatError("vertex " + std::to_string(a) + " out of range for n = " + std::to_string(rank.n()));
  if (kind == "diameter") return ArcElement::diameter(rank, a, color_field(j));
  if (kind != "pair") throw FormatError("unknown element kind \"" + kind + "\"");
  const int b = int_field(j, "b");
  if (b < 0 || b >= rank.vertices())
    throw FormatError("vertex " + std::to_string(b) + " out of range for n = " + std::to_string(rank.n()));
  if (a == b) throw FormatError("pair with equal endpoints");
  if (is_edge(rank, a, b)) throw FormatError("pairs of edges are not elements");
  if (rank.mod(b - a) == rank.n()) throw FormatError("chord (" + std::to_string(a) + "," +
                                                     std::to_string(b) + ") is a diameter; give a colour");
  return ArcElement::pair(rank, a, b);
}

Diagram diagram_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("diagram must be a JSON object");
  const int n = int_field(j, "n");
  if (n < 4 || n > kMaxJsonRank) throw FormatError("n must lie in [4, 64], got " + std::to_string(n));
  const Rank rank(n);
  if (!j.contains("elements") || !j.at("elements").is_array())
    throw FormatError("diagram needs an \"elements\" array");
  Diagram d(rank);
  for (const Json& e : j.at("elements")) {
    const ArcElement elem = element_from_json(rank, e);
    if (!d.insert(elem)) throw FormatError("duplicate element " + elem.to_string());
  }
  return d;
}

Json cells_to_json(const CellDecomposition& cells) {
  Json out = Json::array();
  for (const CellPair& pair : cells.pairs()) {
    Json members = Json::array();
    const int count = pair.invariant() ? 1 : 2;
    for (int m = 0; m < count; ++m) {
      const auto& poly = pair.member(m);
      Json verts = Json::array();
      for (CellVertex v : poly) verts.push_back(vertex_json(v));
      Json sides = Json::array();
      const auto& ss = pair.member_sides(m);
      for (std::size_t i = 0; i < ss.size(); ++i) {
        Json side{{"from", vertex_json(poly[i])}, {"to", vertex_json(poly[(i + 1) % poly.size()])},
                  {"edge", ss[i].edge}};
        Json from_d = Json::array();
        for (const auto& r : ss[i].elements)
          from_d.push_back(Json{{"replaced", r.to_string()},
                                {"element", to_json(cells.replacement().invert(r))}});
        side["elements"] = from_d;
        sides.push_back(side);
      }
      members.push_back(Json{{"vertices", verts}, {"sides", sides}});
    }
    out.push_back(Json{{"invariant", pair.invariant()}, {"central", pair.central()}, {"cells", members}});
  }
  return out;
}

Json triangle_to_json(const MutationTriangle& t) {
  Json summands = Json::array();
  for (const auto& s : t.summands) summands.push_back(s ? to_json(*s) : Json("zero"));
  return Json{{"first", to_json(t.first)}, {"summands", summands}, {"third", to_json(t.third)}};
}

Json violation_to_json(const PtolemyViolation& v) {
  Json missing = Json::array();
  for (const auto& e : v.missing) missing.push_back(to_json(e));
  return Json{{"ptolemy", false},
              {"axiom", to_string(v.axiom)},
              {"first", to_json(v.first)},
              {"second", to_json(v.second)},
              {"missing", missing}};
}

Json census_record(const DiagramIndex& index, std::size_t id, Mask m) {
  Json elems = Json::array();
  for_each_bit(m, [&](int p) { elems.push_back(to_json(index.element(p))); });
  return Json{{"id", id}, {"mask", m}, {"elements", elems},
              {"is_maximal_noncrossing", is_maximal_noncrossing(index, m)}};
}

std::string census_jsonl(const DiagramIndex& index, const std::vector<Mask>& masks) {
  std::string out;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    out += census_record(index, i, masks[i]).dump();
    out += '\n';
  }
  return out;
}

Json graph_to_json(const DiagramIndex& index, const MutationGraph& g) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < g.nodes.size(); ++i) nodes.push_back(census_record(index, i, g.nodes[i]));
  Json edges = Json::array();
  for (const auto& e : g.edges)
    edges.push_back(Json{{"x", e.x}, {"d", e.d}, {"dir", to_string(e.dir)}, {"x2", e.x2}});
  return Json{{"n", index.rank().n()}, {"nodes", nodes}, {"edges", edges}};
}

std::string read_text(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

Diagram load_diagram(const std::string& path) { return diagram_from_json(parse_json(read_text(path))); }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
  if (!out) throw FormatError("write failed for " + path);
}

}  // namespace dnpoly
