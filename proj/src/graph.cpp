#include "racgkit/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace racgkit {

namespace {

Letter lowest_bit(VertexSet s) {
  return static_cast<Letter>(__builtin_ctz(s));
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int max_clique_from(const std::vector<VertexSet>& adj, VertexSet candidates) {
  int best = 0;
  while (candidates) {
    Letter v = lowest_bit(candidates);
    candidates &= candidates - 1;
    best = std::max(best, 1 + max_clique_from(adj, candidates & adj[v]));
  }
  return best;
}

}  // namespace

Letter DefiningGraph::add_vertex(const std::string& label) {
  if (label.empty()) throw std::invalid_argument("empty vertex label");
  if (find(label)) throw std::invalid_argument("duplicate vertex '" + label + "'");
  if (labels_.size() >= kMaxVertices)
    throw std::invalid_argument("too many vertices (limit " +
                                std::to_string(kMaxVertices) + ")");
  labels_.push_back(label);
  adj_.push_back(0);
  return static_cast<Letter>(labels_.size() - 1);
}

void DefiningGraph::add_edge(Letter u, Letter v) {
  if (u >= vertex_count() || v >= vertex_count())
    throw std::invalid_argument("edge endpoint out of range");
  if (u == v)
    throw std::invalid_argument("self-loop at '" + labels_[u] + "'");
  if (adjacent(u, v))
    throw std::invalid_argument("duplicate edge " + labels_[u] + " " + labels_[v]);
  adj_[u] |= (VertexSet{1} << v);
  adj_[v] |= (VertexSet{1} << u);
  edges_.emplace_back(std::min(u, v), std::max(u, v));
}

void DefiningGraph::add_edge(const std::string& u, const std::string& v) {
  add_edge(require(u), require(v));
}

std::optional<Letter> DefiningGraph::find(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<Letter>(i);
  return std::nullopt;
}

Letter DefiningGraph::require(const std::string& label) const {
  auto v = find(label);
  if (!v) throw std::invalid_argument("unknown vertex '" + label + "'");
  return *v;
}

bool DefiningGraph::adjacent(Letter u, Letter v) const {
  return u != v && ((adj_.at(u) >> v) & 1u) != 0;
}

VertexSet DefiningGraph::all_vertices_mask() const {
  if (labels_.empty()) return 0;
  if (labels_.size() == kMaxVertices) return ~VertexSet{0};
  return (VertexSet{1} << labels_.size()) - 1;
}

DefiningGraph load_graph(std::istream& in) {
  DefiningGraph g;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    try {
      if (toks[0] == "vertex" && toks.size() == 2) {
        g.add_vertex(toks[1]);
      } else if (toks[0] == "edge" && toks.size() == 3) {
        if (!g.find(toks[1]))
          throw std::invalid_argument("unknown endpoint '" + toks[1] + "'");
        if (!g.find(toks[2]))
          throw std::invalid_argument("unknown endpoint '" + toks[2] + "'");
        g.add_edge(toks[1], toks[2]);
      } else {
        throw std::invalid_argument("malformed line: expected 'vertex <label>' or "
                                    "'edge <label> <label>'");
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  return g;
}

DefiningGraph load_graph_text(const std::string& text) {
  std::istringstream in(text);
  return load_graph(in);
}

DefiningGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  return load_graph(in);
}

std::string to_graph_text(const DefiningGraph& g) {
  std::ostringstream out;
  for (const auto& label : g.labels()) out << "vertex " << label << "\n";
  for (const auto& [u, v] : g.edges())
    out << "edge " << g.label(u) << " " << g.label(v) << "\n";
  return out.str();
}

std::string to_dot(const DefiningGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (const auto& label : g.labels()) out << "  \"" << label << "\";\n";
  for (const auto& [u, v] : g.edges())
    out << "  \"" << g.label(u) << "\" -- \"" << g.label(v) << "\";\n";
  out << "}\n";
  return out.str();
}

std::vector<std::string> set_labels(const DefiningGraph& g, VertexSet s) {
  std::vector<std::string> out;
  for (VertexSet rest = s; rest; rest &= rest - 1)
    out.push_back(g.label(lowest_bit(rest)));
  return out;
}

VertexSet set_of_labels(const DefiningGraph& g, const std::vector<std::string>& labels) {
  VertexSet s = 0;
  for (const auto& l : labels) s |= (VertexSet{1} << g.require(l));
  return s;
}

VertexSet link(const DefiningGraph& g, Letter v) {
  if (v >= g.vertex_count()) throw std::invalid_argument("unknown vertex");
  return g.adjacency_mask(v);
}

VertexSet star(const DefiningGraph& g, Letter v) {
  return link(g, v) | (VertexSet{1} << v);
}

std::vector<VertexSet> components_outside_star(const DefiningGraph& g, Letter a) {
  VertexSet rest = g.all_vertices_mask() & ~star(g, a);
  std::vector<VertexSet> comps;
  while (rest) {
    Letter seed = lowest_bit(rest);
    VertexSet comp = 0;
    VertexSet frontier = VertexSet{1} << seed;
    while (frontier) {
      comp |= frontier;
      VertexSet next = 0;
      for (VertexSet f = frontier; f; f &= f - 1)
        next |= g.adjacency_mask(lowest_bit(f));
      frontier = next & rest & ~comp;
    }
    comps.push_back(comp);
    rest &= ~comp;
  }
  return comps;
}

int max_clique_size(const DefiningGraph& g) {
  std::vector<VertexSet> adj(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    adj[v] = g.adjacency_mask(static_cast<Letter>(v));
  return max_clique_from(adj, g.all_vertices_mask());
}

ValidationResult validate_partial_conjugation(const DefiningGraph& g, Letter acting,
                                              VertexSet domain) {
  if (acting >= g.vertex_count()) return ValidationResult::fail("unknown acting vertex");
  if (domain == 0) return ValidationResult::fail("domain is empty");
  if ((domain & ~g.all_vertices_mask()) != 0)
    return ValidationResult::fail("domain contains unknown vertices");
  if ((domain & star(g, acting)) != 0)
    return ValidationResult::fail("domain meets St(" + g.label(acting) + ")");
  VertexSet covered = 0;
  for (VertexSet comp : components_outside_star(g, acting)) {
    if ((domain & comp) == 0) continue;
    if ((domain & comp) != comp)
      return ValidationResult::fail(
          "domain is not a union of components of the graph minus St(" +
          g.label(acting) + ")");
    covered |= comp;
  }
  if (covered != domain)
    return ValidationResult::fail("domain is not a union of components");
  return ValidationResult::pass();
}

ValidationResult validate_transvection(const DefiningGraph& g, Letter acting,
                                       Letter moved) {
  if (acting >= g.vertex_count()) return ValidationResult::fail("unknown acting vertex");
  if (moved >= g.vertex_count()) return ValidationResult::fail("unknown domain vertex");
  if (acting == moved)
    return ValidationResult::fail("acting letter equals domain letter");
  VertexSet missing = star(g, moved) & ~star(g, acting);
  if (missing != 0) {
    return ValidationResult::fail("St(" + g.label(moved) + ") is not contained in St(" +
                                  g.label(acting) + "): " +
                                  g.label(lowest_bit(missing)) + " is missing");
  }
  return ValidationResult::pass();
}

GraphAutoCheck validate_graph_automorphism(const DefiningGraph& g,
                                           const std::vector<Letter>& perm) {
  GraphAutoCheck check;
  const std::size_t n = g.vertex_count();
  if (perm.size() != n) {
    check.result = ValidationResult::fail("permutation size does not match vertex count");
    return check;
  }
  std::vector<bool> hit(n, false);
  for (Letter img : perm) {
    if (img >= n) {
      check.result = ValidationResult::fail("permutation image out of range");
      return check;
    }
    if (hit[img]) {
      check.result =
          ValidationResult::fail("not a bijection: '" + g.label(img) + "' hit twice");
      return check;
    }
    hit[img] = true;
  }
  for (Letter u = 0; u < n; ++u) {
    for (Letter v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v) == g.adjacent(perm[u], perm[v])) continue;
      std::string from = g.label(u) + " " + g.label(v);
      std::string to = g.label(perm[u]) + " " + g.label(perm[v]);
      check.result = ValidationResult::fail(
          g.adjacent(u, v) ? "edge " + from + " maps to non-edge " + to
                           : "non-edge " + from + " maps to edge " + to);
      return check;
    }
  }
  // order = lcm of cycle lengths
  std::vector<bool> seen(n, false);
  long long order = 1;
  for (Letter v = 0; v < n; ++v) {
    if (seen[v]) continue;
    long long len = 0;
    for (Letter w = v; !seen[w]; w = perm[w]) {
      seen[w] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  check.order = static_cast<int>(std::max<long long>(order, 1));
  return check;
}

}  // namespace racgkit
