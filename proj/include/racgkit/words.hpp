#pragma once

#include <optional>
#include <string>
#include <vector>

#include "racgkit/graph.hpp"

namespace racgkit {

/// Generator alphabet with a commutation relation. Letter order is the
/// shortlex order. All generators are involutions, so words carry no
/// inverse letters and the inverse of a word is its reversal.
struct Alphabet {
  std::vector<std::string> labels;
  std::vector<std::uint32_t> commuting;  // bit j of commuting[i]: i and j commute

  static Alphabet of_graph(const DefiningGraph& g);

  std::size_t size() const { return labels.size(); }
  bool commute(Letter a, Letter b) const {
    return a != b && ((commuting[a] >> b) & 1u) != 0;
  }
  std::optional<Letter> find(const std::string& label) const;
  Letter require(const std::string& label) const;
  int max_clique() const;
};

using Word = std::vector<Letter>;

/// Space-separated labels; "1" denotes the empty word.
Word parse_word(const Alphabet& g, const std::string& text);
std::string format_word(const Alphabet& g, const Word& w);

/// Shortlex normal form: fully cancels pairs of equal letters separated by
/// letters commuting with them, then emits the lexicographically least
/// linearization of the remaining commutation class. Idempotent; constant on
/// equivalence classes of the group defined by the alphabet.
Word normalize(const Alphabet& g, Word w);

Word multiply(const Alphabet& g, const Word& u, const Word& w);

/// Inverse = reversal (every generator has order 2).
Word inverse_word(Word w);

/// Number of occurrences of s, mod 2. Constant on equivalence classes.
int parity(const Word& w, Letter s);

struct OrderResult {
  int order = 0;  // meaningful when !exceeded
  bool exceeded = false;
  int bound = 0;

  std::string str() const {
    return exceeded ? "> " + std::to_string(bound) : std::to_string(order);
  }
  bool operator==(const OrderResult&) const = default;
};

/// Smallest k >= 1 with w^k trivial, if k <= bound; otherwise marks exceeded.
OrderResult element_order(const Alphabet& g, const Word& w, int bound);

}  // namespace racgkit
