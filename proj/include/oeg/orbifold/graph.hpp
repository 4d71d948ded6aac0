#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "oeg/fpgroup/presentation.hpp"
#include "oeg/orbifold/riemann_hurwitz.hpp"

namespace oeg::orb {

/// One end of an arc at a vertex; `incoming` when the arc's orientation
/// points into the vertex.
struct ArcEnd {
  std::string arc;
  bool incoming = true;

  friend bool operator==(const ArcEnd&, const ArcEnd&) = default;
};

struct Vertex {
  std::string id;
  /// Counterclockwise order in the diagram; empty for graph-only data.
  std::vector<ArcEnd> ends;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// An edge of singular index `label`. Without endpoints it is a circle
/// component.
struct Edge {
  std::string id;
  long long label = 2;
  std::optional<std::string> from;
  std::optional<std::string> to;

  bool is_circle() const { return !from.has_value(); }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Arc {
  std::string id;
  std::string edge;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// The under strand runs from `under_in` to `under_out` beneath `over`.
/// sign +1: out = over^-1 in over; sign -1: out = over in over^-1.
struct Crossing {
  std::string over;
  std::string under_in;
  std::string under_out;
  int sign = 1;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Singular graph with optional planar-diagram data.
class LabeledGraph {
 public:
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  bool has_diagram() const { return !arcs_.empty(); }

  const Vertex* find_vertex(std::string_view id) const;
  const Edge* find_edge(std::string_view id) const;
  const Arc* find_arc(std::string_view id) const;

  /// Edges at `vertex`, a loop counted twice, in edge-list order.
  std::vector<const Edge*> incident(std::string_view vertex) const;
  std::size_t degree(std::string_view vertex) const { return incident(vertex).size(); }

  /// Throw GraphError on duplicates, dangling references or labels below 2.
  void add_vertex(Vertex v);
  void add_edge(Edge e);
  void add_arc(Arc a);
  void add_crossing(Crossing c);

  /// Checks label and vertex-model constraints and, when present, the
  /// consistency of the diagram. Throws GraphError naming the culprit.
  void validate() const;

  /// Drops every arc, crossing and vertex arc-end.
  void clear_diagram();

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  friend LabeledGraph kill_edge(const LabeledGraph& graph, std::string_view edge);

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Arc> arcs_;
  std::vector<Crossing> crossings_;
};

/// Line records:
///   vertex <id> [<arc>+|<arc>- ...]    arc ends counterclockwise, + incoming
///   edge <id> <label> <v> <v>          `- -` for a circle component
///   arc <id> <edge>
///   crossing <over> <under-in> <under-out> <+|->
/// `#` starts a comment. Throws fp::ParseError with a line number.
LabeledGraph parse_graph(std::string_view text);
LabeledGraph load_graph(const std::string& path);

struct Rejection {
  std::string reason;
};

/// Four leg labels at the two ends of `edge`, when both ends are trivalent
/// and the quadruple is one of the lemma-list types.
std::variant<SingularType, Rejection> edge_boundary_type(const LabeledGraph& graph, std::string_view edge);

/// Quotient by the meridian of `edge`: the edge goes, and at each end the
/// two remaining legs fuse into one edge labelled by their gcd, named
/// `<leg>.<leg>`. A fused label of 1 kills that edge in turn. A lone
/// remaining leg is killed as well. Diagram data does not survive. A
/// missing edge leaves the graph unchanged.
LabeledGraph kill_edge(const LabeledGraph& graph, std::string_view edge);

/// One generator per arc (named by the arc id, prefixed with `m` unless it
/// is already an identifier), one relator per crossing and per vertex, and
/// x^label for each arc. Throws GraphError without diagram data.
fp::Presentation wirtinger_presentation(const LabeledGraph& graph);

/// Generator of `wirtinger_presentation` for `arc`.
std::string meridian_name(std::string_view arc);

}  // namespace oeg::orb
