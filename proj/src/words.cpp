#include "racgkit/words.hpp"

#include <algorithm>
#include <sstream>

namespace racgkit {

namespace {

// Deletes one pair of equal letters separated only by letters commuting with
// them, if any exists. This is the only way a word over involution
// generators can get shorter.
bool delete_one_pair(const Alphabet& g, Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[j] == w[i]) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
        return true;
      }
      if (!g.commute(w[i], w[j])) break;
    }
  }
  return false;
}

int max_clique_masks(const std::vector<std::uint32_t>& adj, std::uint32_t candidates) {
  int best = 0;
  while (candidates) {
    Letter v = static_cast<Letter>(__builtin_ctz(candidates));
    candidates &= candidates - 1;
    best = std::max(best, 1 + max_clique_masks(adj, candidates & adj[v]));
  }
  return best;
}

}  // namespace

Alphabet Alphabet::of_graph(const DefiningGraph& g) {
  Alphabet a;
  a.labels = g.labels();
  a.commuting.resize(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    a.commuting[v] = g.adjacency_mask(static_cast<Letter>(v));
  return a;
}

std::optional<Letter> Alphabet::find(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<Letter>(i);
  return std::nullopt;
}

Letter Alphabet::require(const std::string& label) const {
  auto v = find(label);
  if (!v) throw std::invalid_argument("unknown letter '" + label + "'");
  return *v;
}

int Alphabet::max_clique() const {
  return max_clique_masks(commuting,
                          size() == 32 ? ~0u : (1u << size()) - 1u);
}

Word parse_word(const Alphabet& g, const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> toks;
  std::string tok;
  while (in >> tok) toks.push_back(tok);
  if (toks.size() == 1 && toks[0] == "1" && !g.find("1")) return {};
  Word w;
  w.reserve(toks.size());
  for (const auto& t : toks) w.push_back(g.require(t));
  return w;
}

std::string format_word(const Alphabet& g, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += g.labels.at(w[i]);
  }
  return out;
}

Word normalize(const Alphabet& g, Word w) {
  for (Letter x : w)
    if (x >= g.size()) throw std::invalid_argument("letter out of range");
  while (delete_one_pair(g, w)) {
  }
  // The reduced word determines a partial order on its letter occurrences
  // (p before q when they do not commute); its linearizations are exactly
  // the words reachable by commuting swaps. Emitting the least available
  // letter at each step yields the lexicographically least linearization.
  Word out;
  out.reserve(w.size());
  std::vector<bool> used(w.size(), false);
  for (std::size_t step = 0; step < w.size(); ++step) {
    std::size_t best = w.size();
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (used[p]) continue;
      bool available = true;
      for (std::size_t q = 0; q < p; ++q) {
        if (used[q]) continue;
        if (w[q] == w[p] || !g.commute(w[q], w[p])) {
          available = false;
          break;
        }
      }
      if (available && (best == w.size() || w[p] < w[best])) best = p;
    }
    used[best] = true;
    out.push_back(w[best]);
  }
  return out;
}

Word multiply(const Alphabet& g, const Word& u, const Word& w) {
  Word prod = u;
  prod.insert(prod.end(), w.begin(), w.end());
  return normalize(g, std::move(prod));
}

Word inverse_word(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

int parity(const Word& w, Letter s) {
  int count = 0;
  for (Letter x : w)
    if (x == s) ++count;
  return count & 1;
}

OrderResult element_order(const Alphabet& g, const Word& w, int bound) {
  if (bound < 1) throw std::invalid_argument("order bound must be >= 1");
  Word base = normalize(g, w);
  Word power = base;
  for (int k = 1; k <= bound; ++k) {
    if (power.empty()) return {k, false, bound};
    power = multiply(g, power, base);
  }
  return {0, true, bound};
}

}  // namespace racgkit
