#include "racgkit/automorphism.hpp"

#include <sstream>

namespace racgkit {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// Parses "key=value", requiring the given key.
std::string expect_kv(const std::string& tok, const std::string& key) {
  auto eq = tok.find('=');
  if (eq == std::string::npos || tok.substr(0, eq) != key)
    throw ParseError("expected '" + key + "=...' in automorphism spec, got '" + tok + "'");
  return tok.substr(eq + 1);
}

}  // namespace

Automorphism make_graph_auto(const DefiningGraph& g, const std::vector<Letter>& perm) {
  auto check = validate_graph_automorphism(g, perm);
  if (!check.result) throw std::invalid_argument(check.result.reason);
  Automorphism phi;
  phi.kind = AutKind::graph_auto;
  phi.graph = g;
  phi.perm = perm;
  return phi;
}

Automorphism make_partial_conjugation(const DefiningGraph& g, Letter acting,
                                      VertexSet domain) {
  auto check = validate_partial_conjugation(g, acting, domain);
  if (!check) throw std::invalid_argument(check.reason);
  Automorphism phi;
  phi.kind = AutKind::partial_conjugation;
  phi.graph = g;
  phi.acting = acting;
  phi.domain = domain;
  return phi;
}

Automorphism make_transvection(const DefiningGraph& g, Letter acting, Letter moved) {
  auto check = validate_transvection(g, acting, moved);
  if (!check) throw std::invalid_argument(check.reason);
  Automorphism phi;
  phi.kind = AutKind::transvection;
  phi.graph = g;
  phi.acting = acting;
  phi.moved = moved;
  return phi;
}

Automorphism parse_automorphism(const DefiningGraph& g, const std::string& line) {
  auto toks = tokenize(line);
  if (toks.empty()) throw ParseError("empty automorphism spec");
  const std::string& kind = toks[0];
  if (kind == "graphauto") {
    std::vector<Letter> perm(g.vertex_count());
    for (std::size_t v = 0; v < perm.size(); ++v) perm[v] = static_cast<Letter>(v);
    std::vector<bool> assigned(g.vertex_count(), false);
    for (std::size_t i = 1; i < toks.size(); ++i) {
      auto arrow = toks[i].find('>');
      if (arrow == std::string::npos)
        throw ParseError("expected 'from>to' in graphauto spec, got '" + toks[i] + "'");
      Letter from = g.require(toks[i].substr(0, arrow));
      Letter to = g.require(toks[i].substr(arrow + 1));
      if (assigned[from])
        throw ParseError("vertex '" + g.label(from) + "' mapped twice");
      assigned[from] = true;
      perm[from] = to;
    }
    return make_graph_auto(g, perm);
  }
  if (kind == "pconj") {
    if (toks.size() != 3) throw ParseError("pconj spec needs acting= and domain=");
    Letter acting = g.require(expect_kv(toks[1], "acting"));
    VertexSet domain = 0;
    for (const auto& lab : split(expect_kv(toks[2], "domain"), ','))
      domain |= VertexSet{1} << g.require(lab);
    return make_partial_conjugation(g, acting, domain);
  }
  if (kind == "transvection") {
    if (toks.size() != 3) throw ParseError("transvection spec needs acting= and domain=");
    Letter acting = g.require(expect_kv(toks[1], "acting"));
    Letter moved = g.require(expect_kv(toks[2], "domain"));
    return make_transvection(g, acting, moved);
  }
  throw ParseError("unknown automorphism kind '" + kind + "'");
}

std::string format_automorphism(const Automorphism& phi) {
  const DefiningGraph& g = phi.graph;
  std::ostringstream out;
  switch (phi.kind) {
    case AutKind::graph_auto: {
      out << "graphauto";
      for (std::size_t v = 0; v < phi.perm.size(); ++v)
        if (phi.perm[v] != v)
          out << " " << g.label(static_cast<Letter>(v)) << ">" << g.label(phi.perm[v]);
      break;
    }
    case AutKind::partial_conjugation: {
      out << "pconj acting=" << g.label(phi.acting) << " domain=";
      auto labs = set_labels(g, phi.domain);
      for (std::size_t i = 0; i < labs.size(); ++i) out << (i ? "," : "") << labs[i];
      break;
    }
    case AutKind::transvection:
      out << "transvection acting=" << g.label(phi.acting)
          << " domain=" << g.label(phi.moved);
      break;
  }
  return out.str();
}

Word apply_to_letter(const Automorphism& phi, Letter s) {
  if (s >= phi.graph.vertex_count()) throw std::invalid_argument("letter out of range");
  switch (phi.kind) {
    case AutKind::graph_auto:
      return {phi.perm[s]};
    case AutKind::partial_conjugation:
      if ((phi.domain >> s) & 1u) return {phi.acting, s, phi.acting};
      return {s};
    case AutKind::transvection:
      if (s == phi.moved) return {phi.moved, phi.acting};
      return {s};
  }
  throw std::logic_error("unreachable");
}

Word apply_raw(const Automorphism& phi, const Word& w) {
  Word image;
  image.reserve(w.size() * 3);
  for (Letter s : w) {
    Word part = apply_to_letter(phi, s);
    image.insert(image.end(), part.begin(), part.end());
  }
  return image;
}

Word apply(const Automorphism& phi, const Alphabet& alpha, const Word& w) {
  return normalize(alpha, apply_raw(phi, w));
}

Word apply(const Automorphism& phi, const Word& w) {
  return apply(phi, Alphabet::of_graph(phi.graph), w);
}

int aut_order(const Automorphism& phi) {
  int claimed = 2;
  if (phi.kind == AutKind::graph_auto)
    claimed = validate_graph_automorphism(phi.graph, phi.perm).order;
  // Verify rather than trust: applying the automorphism `claimed` times must
  // return every generator to itself.
  Alphabet alpha = Alphabet::of_graph(phi.graph);
  for (Letter s = 0; s < phi.graph.vertex_count(); ++s) {
    Word w{s};
    for (int i = 0; i < claimed; ++i) w = apply(phi, alpha, w);
    if (w != Word{s})
      throw std::logic_error("automorphism order check failed for generator " +
                             alpha.labels[s]);
  }
  return claimed;
}

}  // namespace racgkit
