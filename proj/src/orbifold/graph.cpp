#include "oeg/orbifold/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace oeg::orb {

const Vertex* LabeledGraph::find_vertex(std::string_view id) const {
  auto it = std::find_if(vertices_.begin(), vertices_.end(), [&](const Vertex& v) { return v.id == id; });
  return it == vertices_.end() ? nullptr : &*it;
}

const Edge* LabeledGraph::find_edge(std::string_view id) const {
  auto it = std::find_if(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.id == id; });
  return it == edges_.end() ? nullptr : &*it;
}

const Arc* LabeledGraph::find_arc(std::string_view id) const {
  auto it = std::find_if(arcs_.begin(), arcs_.end(), [&](const Arc& a) { return a.id == id; });
  return it == arcs_.end() ? nullptr : &*it;
}

std::vector<const Edge*> LabeledGraph::incident(std::string_view vertex) const {
  std::vector<const Edge*> out;
  for (const Edge& e : edges_) {
    if (e.from && *e.from == vertex) {
      out.push_back(&e);
    }
    if (e.to && *e.to == vertex) {
      out.push_back(&e);
    }
  }
  return out;
}

void LabeledGraph::add_vertex(Vertex v) {
  if (find_vertex(v.id)) {
    throw GraphError("duplicate vertex '" + v.id + "'");
  }
  vertices_.push_back(std::move(v));
}

void LabeledGraph::add_edge(Edge e) {
  if (find_edge(e.id)) {
    throw GraphError("duplicate edge '" + e.id + "'");
  }
  if (e.label < 2) {
    throw GraphError("edge '" + e.id + "' has label " + std::to_string(e.label) + " below 2");
  }
  if (e.from.has_value() != e.to.has_value()) {
    throw GraphError("edge '" + e.id + "' has only one endpoint");
  }
  for (const auto* end : {&e.from, &e.to}) {
    if (*end && !find_vertex(**end)) {
      throw GraphError("edge '" + e.id + "' references unknown vertex '" + **end + "'");
    }
  }
  edges_.push_back(std::move(e));
}

void LabeledGraph::add_arc(Arc a) {
  if (find_arc(a.id)) {
    throw GraphError("duplicate arc '" + a.id + "'");
  }
  if (!find_edge(a.edge)) {
    throw GraphError("arc '" + a.id + "' references unknown edge '" + a.edge + "'");
  }
  arcs_.push_back(std::move(a));
}

void LabeledGraph::add_crossing(Crossing c) {
  for (const std::string* arc : {&c.over, &c.under_in, &c.under_out}) {
    if (!find_arc(*arc)) {
      throw GraphError("crossing references unknown arc '" + *arc + "'");
    }
  }
  if (c.sign != 1 && c.sign != -1) {
    throw GraphError("crossing sign must be + or -");
  }
  crossings_.push_back(std::move(c));
}

void LabeledGraph::clear_diagram() {
  arcs_.clear();
  crossings_.clear();
  for (Vertex& v : vertices_) {
    v.ends.clear();
  }
}

void LabeledGraph::validate() const {
  for (const Vertex& v : vertices_) {
    const auto inc = incident(v.id);
    if (inc.size() == 1) {
      continue;
    }
    if (inc.size() != 3) {
      throw GraphError("vertex '" + v.id + "' has degree " + std::to_string(inc.size()));
    }
    if (!vertex_model(inc[0]->label, inc[1]->label, inc[2]->label)) {
      throw GraphError("vertex '" + v.id + "' labels " + std::to_string(inc[0]->label) + "," +
                       std::to_string(inc[1]->label) + "," + std::to_string(inc[2]->label) +
                       " have no spherical local model");
    }
  }
  if (!has_diagram()) {
    return;
  }
  std::map<std::string, int> starts;
  std::map<std::string, int> stops;
  for (const Crossing& c : crossings_) {
    ++stops[c.under_in];
    ++starts[c.under_out];
  }
  for (const Vertex& v : vertices_) {
    if (v.ends.size() != degree(v.id)) {
      throw GraphError("vertex '" + v.id + "' lists " + std::to_string(v.ends.size()) + " arc ends but has degree " +
                       std::to_string(degree(v.id)));
    }
    for (const ArcEnd& end : v.ends) {
      const Arc* a = find_arc(end.arc);
      if (a == nullptr) {
        throw GraphError("vertex '" + v.id + "' references unknown arc '" + end.arc + "'");
      }
      const Edge* e = find_edge(a->edge);
      if (e->from != v.id && e->to != v.id) {
        throw GraphError("arc '" + a->id + "' meets vertex '" + v.id + "' but its edge does not");
      }
      ++(end.incoming ? stops : starts)[end.arc];
    }
  }
  std::set<std::string> carried;
  for (const Arc& a : arcs_) {
    carried.insert(a.edge);
    const int s = starts[a.id];
    const int t = stops[a.id];
    if (s > 1 || t > 1 || s != t) {
      throw GraphError("arc '" + a.id + "' has " + std::to_string(s) + " start(s) and " + std::to_string(t) +
                       " end(s)");
    }
  }
  for (const Edge& e : edges_) {
    if (!carried.count(e.id)) {
      throw GraphError("edge '" + e.id + "' carries no arc");
    }
  }
}

namespace {

fp::ParseError parse_error(const std::string& msg, std::size_t line) { return fp::ParseError(msg, line, 1); }

}  // namespace

LabeledGraph parse_graph(std::string_view text) {
  struct Record {
    std::vector<std::string> tokens;
    std::size_t line;
  };
  std::vector<Record> vertices;
  std::vector<Record> edges;
  std::vector<Record> arcs;
  std::vector<Record> crossings;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    std::istringstream ls(raw);
    Record r{{}, line_no};
    for (std::string tok; ls >> tok;) {
      r.tokens.push_back(tok);
    }
    if (r.tokens.empty()) {
      continue;
    }
    const std::string& kind = r.tokens[0];
    if (kind == "vertex") {
      if (r.tokens.size() < 2) {
        throw parse_error("vertex needs an id", line_no);
      }
      vertices.push_back(std::move(r));
    } else if (kind == "edge") {
      if (r.tokens.size() != 5) {
        throw parse_error("edge needs: <id> <label> <v> <v>", line_no);
      }
      edges.push_back(std::move(r));
    } else if (kind == "arc") {
      if (r.tokens.size() != 3) {
        throw parse_error("arc needs: <id> <edge>", line_no);
      }
      arcs.push_back(std::move(r));
    } else if (kind == "crossing") {
      if (r.tokens.size() != 5) {
        throw parse_error("crossing needs: <over> <under-in> <under-out> <sign>", line_no);
      }
      crossings.push_back(std::move(r));
    } else {
      throw parse_error("unknown record '" + kind + "'", line_no);
    }
  }

  LabeledGraph g;
  auto guarded = [](std::size_t line, auto&& fn) {
    try {
      fn();
    } catch (const GraphError& e) {
      throw parse_error(e.what(), line);
    }
  };
  for (const Record& r : vertices) {
    Vertex v{r.tokens[1], {}};
    for (std::size_t i = 2; i < r.tokens.size(); ++i) {
      const std::string& t = r.tokens[i];
      if (t.size() < 2 || (t.back() != '+' && t.back() != '-')) {
        throw parse_error("arc end '" + t + "' must be <arc>+ or <arc>-", r.line);
      }
      v.ends.push_back(ArcEnd{t.substr(0, t.size() - 1), t.back() == '+'});
    }
    guarded(r.line, [&] { g.add_vertex(std::move(v)); });
  }
  for (const Record& r : edges) {
    Edge e;
    e.id = r.tokens[1];
    try {
      std::size_t used = 0;
      e.label = std::stoll(r.tokens[2], &used);
      if (used != r.tokens[2].size()) {
        throw std::invalid_argument("label");
      }
    } catch (const std::exception&) {
      throw parse_error("edge label '" + r.tokens[2] + "' is not an integer", r.line);
    }
    if (r.tokens[3] != "-") {
      e.from = r.tokens[3];
    }
    if (r.tokens[4] != "-") {
      e.to = r.tokens[4];
    }
    guarded(r.line, [&] { g.add_edge(std::move(e)); });
  }
  for (const Record& r : arcs) {
    guarded(r.line, [&] { g.add_arc(Arc{r.tokens[1], r.tokens[2]}); });
  }
  for (const Record& r : crossings) {
    const std::string& s = r.tokens[4];
    int sign = 0;
    if (s == "+" || s == "+1") {
      sign = 1;
    } else if (s == "-" || s == "-1") {
      sign = -1;
    } else {
      throw parse_error("crossing sign '" + s + "' must be + or -", r.line);
    }
    guarded(r.line, [&] { g.add_crossing(Crossing{r.tokens[1], r.tokens[2], r.tokens[3], sign}); });
  }
  return g;
}

LabeledGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open diagram '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_graph(ss.str());
  } catch (const fp::ParseError& e) {
    throw fp::ParseError(path + ": " + e.what(), e.line(), e.column());
  }
}

std::variant<SingularType, Rejection> edge_boundary_type(const LabeledGraph& graph, std::string_view edge) {
  const Edge* e = graph.find_edge(edge);
  if (e == nullptr) {
    return Rejection{"no edge '" + std::string(edge) + "'"};
  }
  if (e->is_circle()) {
    return Rejection{"edge '" + e->id + "' is a circle component"};
  }
  if (*e->from == *e->to) {
    return Rejection{"edge '" + e->id + "' is a loop"};
  }
  std::vector<long long> legs;
  for (const std::string& v : {*e->from, *e->to}) {
    const auto inc = graph.incident(v);
    if (inc.size() != 3) {
      return Rejection{"endpoint '" + v + "' has degree " + std::to_string(inc.size())};
    }
    bool skipped = false;
    for (const Edge* x : inc) {
      if (!skipped && x == e) {
        skipped = true;
        continue;
      }
      legs.push_back(x->label);
    }
  }
  const SingularType t(legs[0], legs[1], legs[2], legs[3]);
  if (!t.in_lemma_list()) {
    return Rejection{"legs give " + t.to_string() + ", not an admissible type"};
  }
  return t;
}

LabeledGraph kill_edge(const LabeledGraph& graph, std::string_view edge) {
  if (graph.find_edge(edge) == nullptr) {
    return graph;
  }
  LabeledGraph g = graph;
  g.clear_diagram();

  auto edge_it = [&](const std::string& id) {
    return std::find_if(g.edges_.begin(), g.edges_.end(), [&](const Edge& e) { return e.id == id; });
  };
  auto erase_vertex = [&](const std::string& id) {
    g.vertices_.erase(
        std::find_if(g.vertices_.begin(), g.vertices_.end(), [&](const Vertex& v) { return v.id == id; }));
  };
  auto other_end = [](const Edge& e, const std::string& v) { return *e.from == v ? *e.to : *e.from; };

  std::deque<std::string> pending{std::string(edge)};
  while (!pending.empty()) {
    const std::string id = pending.front();
    pending.pop_front();
    auto it = edge_it(id);
    if (it == g.edges_.end()) {
      continue;
    }
    std::vector<std::string> ends;
    if (!it->is_circle()) {
      ends.push_back(*it->from);
      if (*it->to != *it->from) {
        ends.push_back(*it->to);
      }
    }
    g.edges_.erase(it);

    for (const std::string& v : ends) {
      if (g.find_vertex(v) == nullptr) {
        continue;
      }
      const auto inc = g.incident(v);
      if (inc.empty()) {
        erase_vertex(v);
      } else if (inc.size() == 1) {
        pending.push_back(inc[0]->id);
      } else if (inc.size() == 2) {
        if (inc[0] == inc[1]) {
          auto loop = edge_it(inc[0]->id);
          loop->from.reset();
          loop->to.reset();
          erase_vertex(v);
          continue;
        }
        const Edge f = *inc[0];
        const Edge h = *inc[1];
        Edge fused;
        fused.id = f.id + "." + h.id;
        fused.label = std::gcd(f.label, h.label);
        fused.from = other_end(f, v);
        fused.to = other_end(h, v);
        auto pos = edge_it(f.id);
        *pos = fused;
        g.edges_.erase(edge_it(h.id));
        erase_vertex(v);
        if (fused.label == 1) {
          pending.push_back(fused.id);
        }
      }
    }
  }
  return g;
}

std::string meridian_name(std::string_view arc) {
  const bool ident = !arc.empty() && std::isalpha(static_cast<unsigned char>(arc[0])) &&
                     std::all_of(arc.begin(), arc.end(), [](char c) {
                       return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
                     });
  return ident ? std::string(arc) : "m" + std::string(arc);
}

fp::Presentation wirtinger_presentation(const LabeledGraph& graph) {
  if (!graph.has_diagram()) {
    throw GraphError("graph has no diagram data");
  }
  graph.validate();
  fp::Presentation p;
  for (const Arc& a : graph.arcs()) {
    try {
      p.add_generator(meridian_name(a.id));
    } catch (const std::invalid_argument&) {
      throw GraphError("arc '" + a.id + "' collides with another arc's generator name");
    }
  }
  auto gen = [&](const std::string& arc, int e = 1) {
    return fp::Word::generator(p.generator_id(meridian_name(arc)), e);
  };
  for (const Crossing& c : graph.crossings()) {
    const fp::Word conj = gen(c.over, -c.sign) * gen(c.under_in) * gen(c.over, c.sign);
    p.add_relator(conj * gen(c.under_out, -1));
  }
  for (const Vertex& v : graph.vertices()) {
    fp::Word w;
    for (const ArcEnd& end : v.ends) {
      w *= gen(end.arc, end.incoming ? 1 : -1);
    }
    p.add_relator(w);
  }
  for (const Arc& a : graph.arcs()) {
    p.add_relator(gen(a.id, static_cast<int>(graph.find_edge(a.edge)->label)));
  }
  return p;
}

}  // namespace oeg::orb
