#pragma once

#include <cstddef>
#include <vector>

#include "racgkit/words.hpp"

namespace racgkit {

// Independent ground truth for the word problem, used by tests to certify
// normalize(). Both entry points work purely with the two elementary moves
// (delete an adjacent equal pair, swap an adjacent commuting pair) and never
// call normalize().

/// Decides u = w by breadth-first search over all words reachable from
/// u * reverse(w) by elementary moves, testing whether the empty word is
/// reached. Both inputs must have length <= length_cap <= 8.
bool oracle_equal(const Alphabet& g, const Word& u, const Word& w,
                  std::size_t length_cap = 8);

/// Equality classes of every word of length <= max_len, computed by
/// union-find over the elementary-move graph on the full word universe.
/// Moves never increase length, so connectivity inside this universe decides
/// equality for all pairs of words it contains.
class OracleClasses {
 public:
  OracleClasses(const Alphabet& g, std::size_t max_len);

  std::size_t word_count() const { return parent_.size(); }
  Word word_at(std::size_t index) const;
  std::size_t index_of(const Word& w) const;
  std::size_t class_of(const Word& w) const;
  std::size_t class_count() const;
  /// Representatives (class roots) of words of length <= len.
  std::size_t class_count_up_to(std::size_t len) const;

 private:
  std::size_t root(std::size_t i) const;

  std::size_t letters_;
  std::size_t max_len_;
  std::vector<std::size_t> offset_;           // offset_[l] = index of first word of length l
  mutable std::vector<std::size_t> parent_;   // union-find with path compression
};

}  // namespace racgkit
