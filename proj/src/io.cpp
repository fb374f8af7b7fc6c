#include "wcol/io.hpp"

#include <fstream>
#include <sstream>

namespace wcol {

namespace {

Rational number_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()), 10);
  if (j.is_number_unsigned()) return Rational(std::to_string(j.get<unsigned long long>()), 10);
  throw Error("expected a number string such as \"3/4\", got " + j.dump());
}

Json point_to_json(const Point& p) {
  Json out = Json::array();
  for (const auto& x : p) out.push_back(format_rational(x));
  return out;
}

Point point_from_json(const Json& j) {
  if (!j.is_array()) throw Error("expected an array of numbers, got " + j.dump());
  Point p;
  for (const auto& x : j) p.push_back(number_from_json(x));
  return p;
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw Error(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::vector<std::string> labels_from_json(const Json& j, std::size_t n) {
  if (!j.contains("labels")) return default_labels(n);
  auto labels = j.at("labels").get<std::vector<std::string>>();
  if (labels.size() != n) throw Error("label count does not match");
  return labels;
}

}  // namespace

Json to_json(const Representation& rep) {
  Json objs = Json::array();
  for (const auto& o : rep.objects) {
    if (const Box* b = std::get_if<Box>(&o)) {
      objs.push_back({{"type", "box"}, {"lo", point_to_json(b->lo())}, {"hi", point_to_json(b->hi())}});
    } else {
      const Ball& ball = std::get<Ball>(o);
      objs.push_back({{"type", "ball"}, {"center", point_to_json(ball.center())},
                      {"radius", format_rational(ball.radius())}});
    }
  }
  Json out = {{"dimension", rep.dimension}, {"objects", std::move(objs)}, {"labels", rep.labels}};
  if (rep.declared_thinness) out["thinness"] = *rep.declared_thinness;
  return out;
}

Representation representation_from_json(const Json& j) {
  const Json& objs = field(j, "objects");
  std::vector<GeoObject> objects;
  for (const auto& o : objs) {
    const std::string type = field(o, "type").get<std::string>();
    if (type == "box") {
      objects.emplace_back(Box(point_from_json(field(o, "lo")), point_from_json(field(o, "hi"))));
    } else if (type == "ball") {
      objects.emplace_back(Ball(point_from_json(field(o, "center")), number_from_json(field(o, "radius"))));
    } else {
      throw Error("unknown object type '" + type + "'");
    }
  }
  std::optional<std::uint64_t> thin;
  if (j.contains("thinness") && !j.at("thinness").is_null()) thin = j.at("thinness").get<std::uint64_t>();
  Representation rep(std::move(objects), labels_from_json(j, objs.size()), thin);
  if (j.contains("dimension") && !rep.objects.empty() && j.at("dimension").get<std::size_t>() != rep.dimension)
    throw Error("declared dimension does not match the objects");
  if (rep.objects.empty() && j.contains("dimension")) rep.dimension = j.at("dimension").get<std::size_t>();
  return rep;
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.size()}, {"labels", g.labels()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  const std::size_t n = field(j, "n").get<std::size_t>();
  std::vector<Edge> edges;
  for (const auto& e : field(j, "edges")) {
    if (!e.is_array() || e.size() != 2) throw Error("edge must be a pair, got " + e.dump());
    edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  return Graph(n, edges, labels_from_json(j, n));
}

Json to_json(const ScaffoldResult& s) {
  Json out = to_json(s.graph);
  out["parent"] = s.parent;
  out["level"] = s.level;
  out["word"] = s.word;
  out["host"] = s.host;
  return out;
}

ScaffoldResult scaffold_from_json(const Json& j) {
  ScaffoldResult s;
  s.graph = graph_from_json(j);
  s.parent = field(j, "parent").get<std::vector<std::int64_t>>();
  s.level = field(j, "level").get<std::vector<std::uint32_t>>();
  s.word = field(j, "word").get<std::vector<std::vector<std::uint32_t>>>();
  if (j.contains("host")) s.host = j.at("host").get<std::vector<Vertex>>();
  const std::size_t n = s.graph.size();
  if (s.parent.size() != n || s.level.size() != n || s.word.size() != n)
    throw Error("scaffold metadata does not match the vertex count");
  return s;
}

Json ordering_to_json(const Graph& g, const Ordering& ord) {
  Json out = Json::array();
  for (Vertex v : ord.sequence()) out.push_back(g.label(v));
  return out;
}

Ordering ordering_from_json(const Graph& g, const Json& j) {
  const Json& seq = j.is_object() ? field(j, "order") : j;
  std::vector<Vertex> order;
  for (const auto& x : seq) order.push_back(x.is_string() ? g.find(x.get<std::string>()) : x.get<Vertex>());
  if (order.size() != g.size()) throw Error("ordering lists " + std::to_string(order.size()) + " of " +
                                            std::to_string(g.size()) + " vertices");
  return Ordering(std::move(order));
}

bool is_representation_json(const Json& j) { return j.is_object() && j.contains("objects"); }
bool is_scaffold_json(const Json& j) { return j.is_object() && j.contains("parent") && j.contains("edges"); }

Graph load_graph(const Json& j) {
  if (is_representation_json(j)) return intersection_graph(representation_from_json(j));
  return graph_from_json(j);
}

std::string to_dot(const Graph& g, const std::optional<Ordering>& ord) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.size(); ++v) {
    out << "  " << v << " [label=\"" << g.label(v);
    if (ord) out << " #" << ord->position(v);
    out << "\"];\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error("invalid JSON in '" + path.string() + "': " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << text;
}

void write_json_file(const std::filesystem::path& path, const Json& j) { write_text_file(path, j.dump(2) + "\n"); }

}  // namespace wcol
