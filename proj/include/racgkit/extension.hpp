#pragma once

#include <optional>
#include <string>
#include <vector>

#include "racgkit/automorphism.hpp"
#include "racgkit/graph.hpp"
#include "racgkit/presentation.hpp"
#include "racgkit/words.hpp"

namespace racgkit {

/// Element w * z^k of the split extension of W by the cyclic group generated
/// by z, where z acts on W as the context's automorphism.
struct ExtElement {
  Word w;
  int k = 0;

  bool operator==(const ExtElement&) const = default;
};

struct ExtContext {
  Automorphism phi;
  Alphabet alphabet;    // generators of W
  int m = 1;            // order of phi = order of z
  std::string z_label;  // fresh label for the new generator
};

ExtContext make_ext_context(const Automorphism& phi);

std::string format_element(const ExtContext& ctx, const ExtElement& e);

/// (w1, k1) * (w2, k2) = (w1 * phi^k1(w2), k1 + k2 mod m).
ExtElement ext_multiply(const ExtContext& ctx, const ExtElement& e1,
                        const ExtElement& e2);
ExtElement ext_inverse(const ExtContext& ctx, const ExtElement& e);
bool ext_is_identity(const ExtElement& e);
OrderResult ext_element_order(const ExtContext& ctx, const ExtElement& e, int bound);

/// Squares and edge commutators of a defining graph.
GroupPresentation racg_presentation(const DefiningGraph& g);

/// Presentation of the extension on S together with z: squares, edge
/// commutators, z^m and the conjugation rows z s z^(m-1) phi(s)^-1. The
/// conjugation rows are omitted when m = 1 (phi is then the identity and
/// each row reduces to the z relator already present).
GroupPresentation build_p1(const ExtContext& ctx);

// -- Partial conjugation case -------------------------------------------

/// Defining graph of the extension for a partial conjugation with the given
/// acting letter and domain: a new vertex x joined to everything outside the
/// domain, the acting vertex relabeled and joined to the domain.
DefiningGraph lambda_graph(const DefiningGraph& g, Letter acting, VertexSet domain);

struct LambdaCertificate {
  struct Item {
    std::string name;
    bool pass = false;
    std::string detail;
  };
  std::vector<Item> items;
  bool all_pass = true;

  void add(std::string name, bool pass, std::string detail = "");
};

/// Certifies mechanically that the extension by the partial conjugation is
/// the Coxeter group of the lambda graph: maps the lambda generators into the
/// extension (x -> z, relabeled acting vertex -> acting*z, others fixed) and
/// the extension generators back, then checks every relator in both
/// directions and both generator round trips.
LambdaCertificate verify_lambda_isomorphism(const DefiningGraph& g, Letter acting,
                                            VertexSet domain);

/// Same, but against a caller-supplied candidate lambda graph. Used by tests
/// to confirm that corrupted graphs are rejected.
LambdaCertificate verify_lambda_isomorphism_against(const DefiningGraph& g,
                                                    Letter acting, VertexSet domain,
                                                    const DefiningGraph& lambda);

// -- Transvection case ----------------------------------------------------

/// The index-2 subgroup of words with an even count of the acting letter,
/// presented as a Coxeter system on sprime = (S minus the acting letter)
/// together with a hatted copy of every generator outside St(acting).
/// theta is conjugation by the acting letter, restricted to the subgroup;
/// it permutes sprime and is the identity iff the acting letter is central.
struct KernelSystem {
  DefiningGraph graph;
  Letter acting = 0;
  Alphabet sprime;
  std::vector<Letter> theta;                     // permutation of sprime
  bool central = false;
  std::vector<std::optional<Letter>> unhat_of;   // graph letter -> sprime index
  std::vector<std::optional<Letter>> hat_of;     // graph letter -> hatted sprime index
  std::vector<Letter> origin;                    // sprime index -> graph letter
  std::vector<bool> hatted;                      // sprime index -> carries a hat
};

KernelSystem kernel_system(const DefiningGraph& g, Letter acting);

/// Expands a sprime word to a word over S (hatted letters become a s a).
Word expand_to_s(const KernelSystem& ks, const Word& sprime_word);

/// Rewrites a word over S with an even count of the acting letter into a
/// word over sprime: scan left to right tracking the parity p of acting
/// letters seen so far, drop each acting letter (toggling p), emit the
/// letter itself when it lies in Lk(acting) or p = 0, and its hatted copy
/// otherwise. The result is not normalized.
Word rewrite_in_sprime(const KernelSystem& ks, const Word& w);

struct Decomposition {
  Word u;        // sprime word, normalized
  int eps = 0;   // exponent of the acting letter
  int delta = 0; // exponent of z

  bool operator==(const Decomposition&) const = default;
};

/// Unique decomposition g = u * acting^eps * z^delta for a transvection
/// context. The projection to u is what the Y-action is built from.
Decomposition decompose(const ExtContext& ctx, const KernelSystem& ks,
                        const ExtElement& e);
ExtElement reassemble(const ExtContext& ctx, const KernelSystem& ks,
                      const Decomposition& d);

/// Presentation of W on sprime plus the acting letter, with the commutation
/// rows of the kernel system and the conjugation rows asa = s (link) and
/// asa = hat(s), a hat(s) a = s (outside the star).
GroupPresentation build_p2(const KernelSystem& ks);

/// build_p2 plus the z rows: z^2, z s z s for sprime letters other than the
/// moved letter, z d z a d, and z a z a.
GroupPresentation build_p3(const ExtContext& ctx, const KernelSystem& ks);

/// Evaluates a word over the generators of p1/p2/p3 (S letters, hatted
/// letters, the acting letter, z) in the extension.
ExtElement eval_in_extension(const ExtContext& ctx, const KernelSystem* ks,
                             const std::vector<std::string>& letters);

/// Letters of a p1 (graph-auto context) or p3 (transvection context) word
/// evaluating to e; used to turn elements into composites of generator maps.
std::vector<std::string> element_letters(const ExtContext& ctx, const KernelSystem* ks,
                                         const ExtElement& e);

// -- Extensions by a finite subgroup of graph automorphisms ---------------

/// Closure of a set of graph automorphisms under composition. Element 0 is
/// the identity.
struct PermGroup {
  std::vector<std::vector<Letter>> elements;

  std::size_t size() const { return elements.size(); }
  std::size_t index_of(const std::vector<Letter>& p) const;
  std::size_t compose(std::size_t i, std::size_t j) const;  // elements[i] after elements[j]
};

PermGroup perm_closure(const DefiningGraph& g,
                       const std::vector<std::vector<Letter>>& generators);

/// Element w * h of the extension of W by a finite permutation group H.
struct SubExtElement {
  Word w;
  std::size_t h = 0;

  bool operator==(const SubExtElement&) const = default;
};

SubExtElement sub_multiply(const Alphabet& alpha, const PermGroup& hgroup,
                           const SubExtElement& e1, const SubExtElement& e2);

}  // namespace racgkit
