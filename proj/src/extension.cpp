#include "racgkit/extension.hpp"

#include <algorithm>
#include <sstream>

namespace racgkit {

namespace {

std::string fresh_label(const std::vector<std::string>& taken, std::string base) {
  while (std::find(taken.begin(), taken.end(), base) != taken.end()) base += "'";
  return base;
}

Word phi_power(const ExtContext& ctx, int k, Word w) {
  for (int i = 0; i < k; ++i) w = apply(ctx.phi, ctx.alphabet, w);
  return w;
}

}  // namespace

ExtContext make_ext_context(const Automorphism& phi) {
  ExtContext ctx;
  ctx.phi = phi;
  ctx.alphabet = Alphabet::of_graph(phi.graph);
  ctx.m = aut_order(phi);
  ctx.z_label = fresh_label(phi.graph.labels(), "z");
  return ctx;
}

std::string format_element(const ExtContext& ctx, const ExtElement& e) {
  if (e.w.empty() && e.k == 0) return "1";
  std::string out;
  if (!e.w.empty()) out = format_word(ctx.alphabet, e.w);
  for (int i = 0; i < e.k; ++i) {
    if (!out.empty()) out += ' ';
    out += ctx.z_label;
  }
  return out;
}

ExtElement ext_multiply(const ExtContext& ctx, const ExtElement& e1,
                        const ExtElement& e2) {
  ExtElement out;
  out.w = multiply(ctx.alphabet, e1.w, phi_power(ctx, e1.k, e2.w));
  out.k = (e1.k + e2.k) % ctx.m;
  return out;
}

ExtElement ext_inverse(const ExtContext& ctx, const ExtElement& e) {
  ExtElement out;
  out.k = (ctx.m - e.k) % ctx.m;
  out.w = phi_power(ctx, out.k, inverse_word(e.w));
  return out;
}

bool ext_is_identity(const ExtElement& e) { return e.w.empty() && e.k == 0; }

OrderResult ext_element_order(const ExtContext& ctx, const ExtElement& e, int bound) {
  if (bound < 1) throw std::invalid_argument("order bound must be >= 1");
  ExtElement base{normalize(ctx.alphabet, e.w), ((e.k % ctx.m) + ctx.m) % ctx.m};
  ExtElement power = base;
  for (int k = 1; k <= bound; ++k) {
    if (ext_is_identity(power)) return {k, false, bound};
    power = ext_multiply(ctx, power, base);
  }
  return {0, true, bound};
}

GroupPresentation racg_presentation(const DefiningGraph& g) {
  GroupPresentation p;
  p.generators = g.labels();
  p.family_order = {"squares", "edge-commutators"};
  for (const auto& s : g.labels()) p.relators.push_back({{s, s}, "squares"});
  for (const auto& [u, v] : g.edges()) {
    const std::string& a = g.label(u);
    const std::string& b = g.label(v);
    p.relators.push_back({{a, b, a, b}, "edge-commutators"});
  }
  return p;
}

GroupPresentation build_p1(const ExtContext& ctx) {
  const DefiningGraph& g = ctx.phi.graph;
  GroupPresentation p = racg_presentation(g);
  p.generators.push_back(ctx.z_label);
  p.family_order.push_back("z-power");
  p.family_order.push_back("conjugation");
  GroupPresentation::Relator zpow;
  zpow.family = "z-power";
  zpow.letters.assign(static_cast<std::size_t>(ctx.m), ctx.z_label);
  p.relators.push_back(std::move(zpow));
  if (ctx.m >= 2) {
    for (Letter s = 0; s < g.vertex_count(); ++s) {
      GroupPresentation::Relator r;
      r.family = "conjugation";
      r.letters.push_back(ctx.z_label);
      r.letters.push_back(g.label(s));
      for (int i = 0; i + 1 < ctx.m; ++i) r.letters.push_back(ctx.z_label);
      Word img = inverse_word(apply(ctx.phi, ctx.alphabet, Word{s}));
      for (Letter x : img) r.letters.push_back(g.label(x));
      p.relators.push_back(std::move(r));
    }
  }
  return p;
}

// -- Partial conjugation case ----------------------------------------------

DefiningGraph lambda_graph(const DefiningGraph& g, Letter acting, VertexSet domain) {
  auto check = validate_partial_conjugation(g, acting, domain);
  if (!check) throw std::invalid_argument(check.reason);
  std::string x_label = fresh_label(g.labels(), "x");
  std::vector<std::string> taken = g.labels();
  taken.push_back(x_label);
  std::string ax_label = fresh_label(taken, g.label(acting) + x_label);

  DefiningGraph lam;
  for (Letter v = 0; v < g.vertex_count(); ++v)
    lam.add_vertex(v == acting ? ax_label : g.label(v));
  Letter x = lam.add_vertex(x_label);
  for (const auto& [u, v] : g.edges()) lam.add_edge(u, v);  // indices carry over
  for (Letter v = 0; v < g.vertex_count(); ++v)
    if (((domain >> v) & 1u) == 0) lam.add_edge(x, v);
  for (VertexSet rest = domain; rest; rest &= rest - 1)
    lam.add_edge(acting, static_cast<Letter>(__builtin_ctz(rest)));
  return lam;
}

void LambdaCertificate::add(std::string name, bool pass, std::string detail) {
  all_pass = all_pass && pass;
  items.push_back({std::move(name), pass, std::move(detail)});
}

LambdaCertificate verify_lambda_isomorphism_against(const DefiningGraph& g,
                                                    Letter acting, VertexSet domain,
                                                    const DefiningGraph& lambda) {
  LambdaCertificate cert;
  auto check = validate_partial_conjugation(g, acting, domain);
  if (!check) {
    cert.add("valid partial conjugation", false, check.reason);
    return cert;
  }
  ExtContext ctx = make_ext_context(make_partial_conjugation(g, acting, domain));
  Alphabet lam_alpha = Alphabet::of_graph(lambda);

  cert.add("lambda vertex count = |S| + 1",
           lambda.vertex_count() == g.vertex_count() + 1,
           std::to_string(lambda.vertex_count()) + " vertices");
  cert.add("lambda edge count = |E| + |S|",
           lambda.edge_count() == g.edge_count() + g.vertex_count(),
           std::to_string(lambda.edge_count()) + " edges");

  // Candidate assignments. Forward: lambda generators into the extension,
  // x -> z and the relabeled acting vertex -> acting * z. Backward: the
  // extension generators into the lambda group.
  std::string x_label = fresh_label(g.labels(), "x");
  std::vector<std::string> taken = g.labels();
  taken.push_back(x_label);
  std::string ax_label = fresh_label(taken, g.label(acting) + x_label);
  auto x_lam = lambda.find(x_label);
  auto ax_lam = lambda.find(ax_label);
  if (!x_lam || !ax_lam) {
    cert.add("lambda carries the generated labels", false,
             "missing '" + x_label + "' or '" + ax_label + "'");
    return cert;
  }

  // Lambda generator -> word over the p1 generators.
  auto alpha_letters = [&](Letter lv) -> std::vector<std::string> {
    if (lv == *x_lam) return {ctx.z_label};
    if (lv == *ax_lam) return {g.label(acting), ctx.z_label};
    return {lambda.label(lv)};
  };
  // p1 generator label -> word over the lambda generators.
  auto beta_word = [&](const std::string& p1_letter) -> Word {
    if (p1_letter == ctx.z_label) return {*x_lam};
    if (p1_letter == g.label(acting)) return {*ax_lam, *x_lam};
    return {lambda.require(p1_letter)};
  };
  auto eval_alpha = [&](const std::vector<std::string>& letters) -> ExtElement {
    ExtElement acc;
    for (const auto& l : letters) {
      for (const auto& al : alpha_letters(lambda.require(l)))
        acc = ext_multiply(ctx, acc,
                           al == ctx.z_label ? ExtElement{{}, 1}
                                             : ExtElement{{g.require(al)}, 0});
    }
    return acc;
  };

  for (const auto& rel : racg_presentation(lambda).relators) {
    ExtElement val = eval_alpha(rel.letters);
    cert.add("lambda relator '" + relator_text(rel) + "' holds in the extension",
             ext_is_identity(val),
             ext_is_identity(val) ? "" : "maps to " + format_element(ctx, val));
  }
  for (const auto& rel : build_p1(ctx).relators) {
    Word img;
    for (const auto& l : rel.letters) {
      Word part = beta_word(l);
      img.insert(img.end(), part.begin(), part.end());
    }
    img = normalize(lam_alpha, std::move(img));
    cert.add("extension relator '" + relator_text(rel) + "' holds in the lambda group",
             img.empty(), img.empty() ? "" : "maps to " + format_word(lam_alpha, img));
  }
  for (Letter lv = 0; lv < lambda.vertex_count(); ++lv) {
    Word round;
    for (const auto& l : alpha_letters(lv)) {
      Word part = beta_word(l);
      round.insert(round.end(), part.begin(), part.end());
    }
    round = normalize(lam_alpha, std::move(round));
    cert.add("round trip fixes lambda generator " + lambda.label(lv),
             round == Word{lv},
             round == Word{lv} ? "" : "returns " + format_word(lam_alpha, round));
  }
  std::vector<std::string> p1_gens = g.labels();
  p1_gens.push_back(ctx.z_label);
  for (const auto& p1_letter : p1_gens) {
    Word bw = beta_word(p1_letter);
    std::vector<std::string> bw_labels;
    for (Letter lv : bw) bw_labels.push_back(lambda.label(lv));
    ExtElement round = eval_alpha(bw_labels);
    ExtElement expected = p1_letter == ctx.z_label ? ExtElement{{}, 1}
                                                   : ExtElement{{g.require(p1_letter)}, 0};
    cert.add("round trip fixes extension generator " + p1_letter, round == expected,
             round == expected ? "" : "returns " + format_element(ctx, round));
  }
  return cert;
}

LambdaCertificate verify_lambda_isomorphism(const DefiningGraph& g, Letter acting,
                                            VertexSet domain) {
  return verify_lambda_isomorphism_against(g, acting, domain,
                                           lambda_graph(g, acting, domain));
}

// -- Transvection case ------------------------------------------------------

KernelSystem kernel_system(const DefiningGraph& g, Letter acting) {
  if (acting >= g.vertex_count()) throw std::invalid_argument("unknown vertex");
  KernelSystem ks;
  ks.graph = g;
  ks.acting = acting;
  VertexSet lk = link(g, acting);
  VertexSet outside = g.all_vertices_mask() & ~star(g, acting);
  ks.central = outside == 0;
  ks.unhat_of.assign(g.vertex_count(), std::nullopt);
  ks.hat_of.assign(g.vertex_count(), std::nullopt);

  std::vector<std::string> taken = g.labels();
  for (Letter v = 0; v < g.vertex_count(); ++v) {
    if (v == acting) continue;
    ks.unhat_of[v] = static_cast<Letter>(ks.sprime.labels.size());
    ks.sprime.labels.push_back(g.label(v));
    ks.origin.push_back(v);
    ks.hatted.push_back(false);
  }
  for (Letter v = 0; v < g.vertex_count(); ++v) {
    if (((outside >> v) & 1u) == 0) continue;
    std::string hat = fresh_label(taken, g.label(v) + "^");
    taken.push_back(hat);
    ks.hat_of[v] = static_cast<Letter>(ks.sprime.labels.size());
    ks.sprime.labels.push_back(hat);
    ks.origin.push_back(v);
    ks.hatted.push_back(true);
  }
  ks.sprime.commuting.assign(ks.sprime.size(), 0);
  auto set_commute = [&](Letter i, Letter j) {
    ks.sprime.commuting[i] |= (1u << j);
    ks.sprime.commuting[j] |= (1u << i);
  };
  for (const auto& [s, t] : g.edges()) {
    if (s == acting || t == acting) continue;
    set_commute(*ks.unhat_of[s], *ks.unhat_of[t]);
    bool s_out = ((outside >> s) & 1u) != 0;
    bool t_out = ((outside >> t) & 1u) != 0;
    if (s_out && t_out) set_commute(*ks.hat_of[s], *ks.hat_of[t]);
    if (s_out && ((lk >> t) & 1u)) set_commute(*ks.hat_of[s], *ks.unhat_of[t]);
    if (t_out && ((lk >> s) & 1u)) set_commute(*ks.hat_of[t], *ks.unhat_of[s]);
  }
  ks.theta.resize(ks.sprime.size());
  for (Letter i = 0; i < ks.sprime.size(); ++i) {
    Letter v = ks.origin[i];
    if ((outside >> v) & 1u)
      ks.theta[i] = ks.hatted[i] ? *ks.unhat_of[v] : *ks.hat_of[v];
    else
      ks.theta[i] = i;
  }
  // theta must preserve the commutation relation it permutes.
  for (Letter i = 0; i < ks.sprime.size(); ++i)
    for (Letter j = static_cast<Letter>(i + 1); j < ks.sprime.size(); ++j)
      if (ks.sprime.commute(i, j) != ks.sprime.commute(ks.theta[i], ks.theta[j]))
        throw std::logic_error("kernel system: theta does not preserve commutation");
  return ks;
}

Word expand_to_s(const KernelSystem& ks, const Word& sprime_word) {
  Word out;
  out.reserve(sprime_word.size() * 3);
  for (Letter x : sprime_word) {
    if (x >= ks.sprime.size()) throw std::invalid_argument("letter out of range");
    if (ks.hatted[x]) {
      out.push_back(ks.acting);
      out.push_back(ks.origin[x]);
      out.push_back(ks.acting);
    } else {
      out.push_back(ks.origin[x]);
    }
  }
  return out;
}

Word rewrite_in_sprime(const KernelSystem& ks, const Word& w) {
  VertexSet lk = link(ks.graph, ks.acting);
  Word out;
  int p = 0;
  for (Letter s : w) {
    if (s >= ks.graph.vertex_count()) throw std::invalid_argument("letter out of range");
    if (s == ks.acting) {
      p ^= 1;
      continue;
    }
    if (((lk >> s) & 1u) != 0 || p == 0)
      out.push_back(*ks.unhat_of[s]);
    else
      out.push_back(*ks.hat_of[s]);
  }
  if (p != 0)
    throw std::invalid_argument("word is not in the kernel: odd count of '" +
                                ks.graph.label(ks.acting) + "'");
  return out;
}

Decomposition decompose(const ExtContext& ctx, const KernelSystem& ks,
                        const ExtElement& e) {
  if (ctx.phi.kind != AutKind::transvection)
    throw std::invalid_argument("decompose requires a transvection context");
  if (ks.acting != ctx.phi.acting)
    throw std::invalid_argument("kernel system does not match the context");
  Decomposition d;
  d.eps = parity(e.w, ctx.phi.acting);
  d.delta = ((e.k % ctx.m) + ctx.m) % ctx.m;
  Word wa = e.w;
  if (d.eps) wa.push_back(ctx.phi.acting);
  d.u = normalize(ks.sprime, rewrite_in_sprime(ks, wa));
  return d;
}

ExtElement reassemble(const ExtContext& ctx, const KernelSystem& ks,
                      const Decomposition& d) {
  Word w = expand_to_s(ks, d.u);
  if (d.eps) w.push_back(ctx.phi.acting);
  return {normalize(ctx.alphabet, std::move(w)), d.delta % ctx.m};
}

GroupPresentation build_p2(const KernelSystem& ks) {
  const DefiningGraph& g = ks.graph;
  VertexSet lk = link(g, ks.acting);
  VertexSet outside = g.all_vertices_mask() & ~star(g, ks.acting);
  const std::string a = g.label(ks.acting);

  GroupPresentation p;
  p.generators = ks.sprime.labels;
  p.generators.push_back(a);
  p.family_order = {"squares",          "edge-commutators", "hat-hat-commutators",
                    "hat-link-commutators", "acting-square", "link-conjugation",
                    "hat-conjugation"};
  for (const auto& x : ks.sprime.labels) p.relators.push_back({{x, x}, "squares"});
  auto lab = [&](Letter sp) { return ks.sprime.labels[sp]; };
  for (const auto& [s, t] : g.edges()) {
    if (s == ks.acting || t == ks.acting) continue;
    p.relators.push_back({{lab(*ks.unhat_of[s]), lab(*ks.unhat_of[t]),
                           lab(*ks.unhat_of[s]), lab(*ks.unhat_of[t])},
                          "edge-commutators"});
  }
  for (const auto& [s, t] : g.edges()) {
    if (((outside >> s) & 1u) && ((outside >> t) & 1u))
      p.relators.push_back({{lab(*ks.hat_of[s]), lab(*ks.hat_of[t]),
                             lab(*ks.hat_of[s]), lab(*ks.hat_of[t])},
                            "hat-hat-commutators"});
  }
  for (const auto& [s, t] : g.edges()) {
    Letter out_v, lk_v;
    if (((outside >> s) & 1u) && ((lk >> t) & 1u)) {
      out_v = s;
      lk_v = t;
    } else if (((outside >> t) & 1u) && ((lk >> s) & 1u)) {
      out_v = t;
      lk_v = s;
    } else {
      continue;
    }
    p.relators.push_back({{lab(*ks.hat_of[out_v]), lab(*ks.unhat_of[lk_v]),
                           lab(*ks.hat_of[out_v]), lab(*ks.unhat_of[lk_v])},
                          "hat-link-commutators"});
  }
  p.relators.push_back({{a, a}, "acting-square"});
  for (VertexSet rest = lk; rest; rest &= rest - 1) {
    Letter s = static_cast<Letter>(__builtin_ctz(rest));
    p.relators.push_back({{a, g.label(s), a, g.label(s)}, "link-conjugation"});
  }
  for (VertexSet rest = outside; rest; rest &= rest - 1) {
    Letter s = static_cast<Letter>(__builtin_ctz(rest));
    p.relators.push_back({{a, g.label(s), a, lab(*ks.hat_of[s])}, "hat-conjugation"});
    p.relators.push_back({{a, lab(*ks.hat_of[s]), a, g.label(s)}, "hat-conjugation"});
  }
  return p;
}

GroupPresentation build_p3(const ExtContext& ctx, const KernelSystem& ks) {
  if (ctx.phi.kind != AutKind::transvection)
    throw std::invalid_argument("p3 requires a transvection context");
  if (ks.acting != ctx.phi.acting)
    throw std::invalid_argument("kernel system does not match the context");
  const std::string a = ctx.phi.graph.label(ctx.phi.acting);
  const std::string d = ctx.phi.graph.label(ctx.phi.moved);
  const std::string& z = ctx.z_label;

  GroupPresentation p = build_p2(ks);
  p.generators.push_back(z);
  p.family_order.push_back("z-square");
  p.family_order.push_back("z-commutators");
  p.family_order.push_back("z-moved-twist");
  p.family_order.push_back("z-acting-commutator");
  p.relators.push_back({{z, z}, "z-square"});
  for (Letter sp = 0; sp < ks.sprime.size(); ++sp) {
    if (!ks.hatted[sp] && ks.origin[sp] == ctx.phi.moved) continue;
    const std::string& s = ks.sprime.labels[sp];
    p.relators.push_back({{z, s, z, s}, "z-commutators"});
  }
  p.relators.push_back({{z, d, z, a, d}, "z-moved-twist"});
  p.relators.push_back({{z, a, z, a}, "z-acting-commutator"});
  return p;
}

ExtElement eval_in_extension(const ExtContext& ctx, const KernelSystem* ks,
                             const std::vector<std::string>& letters) {
  ExtElement acc;
  for (const auto& l : letters) {
    ExtElement next;
    if (l == ctx.z_label) {
      next = {{}, 1 % ctx.m};
    } else if (auto gv = ctx.phi.graph.find(l)) {
      next = {{*gv}, 0};
    } else if (ks) {
      Letter sp = ks->sprime.require(l);
      next = {normalize(ctx.alphabet, expand_to_s(*ks, {sp})), 0};
    } else {
      throw std::invalid_argument("unknown generator '" + l + "'");
    }
    acc = ext_multiply(ctx, acc, next);
  }
  return acc;
}

std::vector<std::string> element_letters(const ExtContext& ctx, const KernelSystem* ks,
                                         const ExtElement& e) {
  std::vector<std::string> out;
  if (ctx.phi.kind == AutKind::transvection) {
    if (!ks) throw std::invalid_argument("transvection context needs a kernel system");
    Decomposition d = decompose(ctx, *ks, e);
    for (Letter sp : d.u) out.push_back(ks->sprime.labels[sp]);
    if (d.eps) out.push_back(ctx.phi.graph.label(ctx.phi.acting));
    for (int i = 0; i < d.delta; ++i) out.push_back(ctx.z_label);
  } else {
    for (Letter s : e.w) out.push_back(ctx.phi.graph.label(s));
    for (int i = 0; i < ((e.k % ctx.m) + ctx.m) % ctx.m; ++i) out.push_back(ctx.z_label);
  }
  return out;
}

// -- Extensions by a finite subgroup of graph automorphisms -----------------

std::size_t PermGroup::index_of(const std::vector<Letter>& p) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == p) return i;
  throw std::invalid_argument("permutation not in group");
}

std::size_t PermGroup::compose(std::size_t i, std::size_t j) const {
  const auto& pi = elements.at(i);
  const auto& pj = elements.at(j);
  std::vector<Letter> r(pi.size());
  for (std::size_t v = 0; v < pi.size(); ++v) r[v] = pi[pj[v]];
  return index_of(r);
}

PermGroup perm_closure(const DefiningGraph& g,
                       const std::vector<std::vector<Letter>>& generators) {
  for (const auto& p : generators) {
    auto check = validate_graph_automorphism(g, p);
    if (!check.result) throw std::invalid_argument(check.result.reason);
  }
  PermGroup grp;
  std::vector<Letter> id(g.vertex_count());
  for (std::size_t v = 0; v < id.size(); ++v) id[v] = static_cast<Letter>(v);
  grp.elements.push_back(id);
  std::vector<std::vector<Letter>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<Letter>> next;
    for (const auto& p : frontier) {
      for (const auto& gen : generators) {
        std::vector<Letter> q(p.size());
        for (std::size_t v = 0; v < p.size(); ++v) q[v] = gen[p[v]];
        if (std::find(grp.elements.begin(), grp.elements.end(), q) ==
            grp.elements.end()) {
          grp.elements.push_back(q);
          next.push_back(q);
        }
      }
    }
    frontier = std::move(next);
  }
  return grp;
}

SubExtElement sub_multiply(const Alphabet& alpha, const PermGroup& hgroup,
                           const SubExtElement& e1, const SubExtElement& e2) {
  const auto& h1 = hgroup.elements.at(e1.h);
  Word mapped;
  mapped.reserve(e2.w.size());
  for (Letter s : e2.w) mapped.push_back(h1[s]);
  Word prod = e1.w;
  prod.insert(prod.end(), mapped.begin(), mapped.end());
  return {normalize(alpha, std::move(prod)), hgroup.compose(e1.h, e2.h)};
}

}  // namespace racgkit
