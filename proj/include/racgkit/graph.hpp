#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace racgkit {

/// Index of a vertex/generator in declaration order.
using Letter = std::uint32_t;

/// Vertex subset of a DefiningGraph, as a bit mask over vertex indices.
using VertexSet = std::uint32_t;

constexpr std::size_t kMaxVertices = 32;

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg, int line = 0)
      : std::runtime_error(line > 0 ? msg + " (line " + std::to_string(line) + ")"
                                    : msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct ValidationResult {
  bool ok = true;
  std::string reason;

  explicit operator bool() const { return ok; }
  static ValidationResult pass() { return {}; }
  static ValidationResult fail(std::string why) { return {false, std::move(why)}; }
};

/// Finite simple graph with labeled vertices. Vertex declaration order is
/// fixed and induces the total order used for shortlex normal forms
/// everywhere downstream.
class DefiningGraph {
 public:
  Letter add_vertex(const std::string& label);
  void add_edge(Letter u, Letter v);
  void add_edge(const std::string& u, const std::string& v);

  std::size_t vertex_count() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Letter v) const { return labels_.at(v); }
  std::optional<Letter> find(const std::string& label) const;
  Letter require(const std::string& label) const;

  bool adjacent(Letter u, Letter v) const;
  VertexSet adjacency_mask(Letter v) const { return adj_.at(v); }
  const std::vector<std::pair<Letter, Letter>>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  VertexSet all_vertices_mask() const;

 private:
  std::vector<std::string> labels_;
  std::vector<VertexSet> adj_;
  std::vector<std::pair<Letter, Letter>> edges_;  // (min,max) index pairs, insertion order
};

// Line-based text format: `vertex <label>`, `edge <a> <b>`; `#` starts a
// comment, blank lines are ignored. Errors carry the offending line number.
DefiningGraph load_graph(std::istream& in);
DefiningGraph load_graph_text(const std::string& text);
DefiningGraph load_graph_file(const std::string& path);
std::string to_graph_text(const DefiningGraph& g);
std::string to_dot(const DefiningGraph& g, const std::string& name = "G");

std::vector<std::string> set_labels(const DefiningGraph& g, VertexSet s);
VertexSet set_of_labels(const DefiningGraph& g, const std::vector<std::string>& labels);

/// Neighbors of v; never contains v.
VertexSet link(const DefiningGraph& g, Letter v);
/// link(v) together with v itself.
VertexSet star(const DefiningGraph& g, Letter v);

/// Connected components of the induced subgraph on V \ St(a), ordered by
/// least vertex index. Empty iff a is adjacent to every other vertex.
std::vector<VertexSet> components_outside_star(const DefiningGraph& g, Letter a);

int max_clique_size(const DefiningGraph& g);

/// ok iff domain is a non-empty union of connected components of the graph
/// minus St(acting).
ValidationResult validate_partial_conjugation(const DefiningGraph& g, Letter acting,
                                              VertexSet domain);

/// ok iff acting != moved and St(moved) is contained in St(acting). When ok,
/// the two vertices are necessarily adjacent.
ValidationResult validate_transvection(const DefiningGraph& g, Letter acting,
                                       Letter moved);

struct GraphAutoCheck {
  ValidationResult result;
  int order = 0;  // permutation order, set when ok
};

/// ok iff perm is a bijection on vertices carrying edges to edges and
/// non-edges to non-edges.
GraphAutoCheck validate_graph_automorphism(const DefiningGraph& g,
                                           const std::vector<Letter>& perm);

}  // namespace racgkit
