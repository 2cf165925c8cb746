#pragma once

#include <string>
#include <vector>

#include "racgkit/graph.hpp"
#include "racgkit/words.hpp"

namespace racgkit {

enum class AutKind { graph_auto, partial_conjugation, transvection };

/// One generator automorphism of the group defined by `graph`, together with
/// its defining data. Instances are validated at construction time.
struct Automorphism {
  AutKind kind = AutKind::graph_auto;
  DefiningGraph graph;
  std::vector<Letter> perm;  // graph_auto: image of each vertex
  Letter acting = 0;         // partial_conjugation / transvection
  VertexSet domain = 0;      // partial_conjugation: union of components outside St(acting)
  Letter moved = 0;          // transvection: the letter sent to moved*acting
};

Automorphism make_graph_auto(const DefiningGraph& g, const std::vector<Letter>& perm);
Automorphism make_partial_conjugation(const DefiningGraph& g, Letter acting,
                                      VertexSet domain);
Automorphism make_transvection(const DefiningGraph& g, Letter acting, Letter moved);

// One automorphism per line:
//   graphauto a1>a2 a2>a1      (unlisted vertices are fixed)
//   pconj acting=a5 domain=a6,a7
//   transvection acting=a domain=d
Automorphism parse_automorphism(const DefiningGraph& g, const std::string& line);
std::string format_automorphism(const Automorphism& phi);

/// Image of a single generator, before normalization.
Word apply_to_letter(const Automorphism& phi, Letter s);

/// Letterwise image of w, not normalized.
Word apply_raw(const Automorphism& phi, const Word& w);

/// Letterwise image of w, normalized. A group homomorphism.
Word apply(const Automorphism& phi, const Word& w);
Word apply(const Automorphism& phi, const Alphabet& alpha, const Word& w);

/// Order of the automorphism. The theoretical value (permutation order for
/// graph automorphisms, 2 otherwise) is verified by iterated application to
/// every generator before being returned.
int aut_order(const Automorphism& phi);

}  // namespace racgkit
