#include "racgkit/oracle.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace racgkit {

namespace {

void push_moves(const Alphabet& g, const Word& w, std::vector<Word>& out) {
  out.clear();
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == w[i + 1]) {
      Word shorter;
      shorter.reserve(w.size() - 2);
      shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
      out.push_back(std::move(shorter));
    } else if (g.commute(w[i], w[i + 1])) {
      Word swapped = w;
      std::swap(swapped[i], swapped[i + 1]);
      out.push_back(std::move(swapped));
    }
  }
}

}  // namespace

bool oracle_equal(const Alphabet& g, const Word& u, const Word& w,
                  std::size_t length_cap) {
  if (length_cap > 8) throw std::invalid_argument("oracle length cap exceeds 8");
  if (u.size() > length_cap || w.size() > length_cap)
    throw std::invalid_argument("word length exceeds oracle cap");
  Word start = u;
  Word winv = w;
  std::reverse(winv.begin(), winv.end());
  start.insert(start.end(), winv.begin(), winv.end());

  std::set<Word> seen;
  std::queue<Word> frontier;
  seen.insert(start);
  frontier.push(std::move(start));
  std::vector<Word> moves;
  while (!frontier.empty()) {
    Word cur = std::move(frontier.front());
    frontier.pop();
    if (cur.empty()) return true;
    push_moves(g, cur, moves);
    for (auto& next : moves) {
      if (seen.insert(next).second) frontier.push(std::move(next));
    }
  }
  return false;
}

OracleClasses::OracleClasses(const Alphabet& g, std::size_t max_len)
    : letters_(g.size()), max_len_(max_len) {
  // Words ordered by length, then lexicographically by letters.
  offset_.assign(max_len + 2, 0);
  std::size_t pow = 1;
  std::size_t total = 0;
  for (std::size_t l = 0; l <= max_len; ++l) {
    offset_[l] = total;
    total += pow;
    pow *= std::max<std::size_t>(letters_, 1);
  }
  offset_[max_len + 1] = total;
  const std::size_t count = letters_ == 0 ? 1 : total;
  parent_.resize(count);
  for (std::size_t i = 0; i < count; ++i) parent_[i] = i;

  std::vector<Word> moves;
  for (std::size_t idx = 0; idx < count; ++idx) {
    Word w = word_at(idx);
    push_moves(g, w, moves);
    for (const auto& next : moves) {
      std::size_t a = root(idx);
      std::size_t b = root(index_of(next));
      if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }
  }
}

Word OracleClasses::word_at(std::size_t index) const {
  std::size_t len = 0;
  while (len + 1 <= max_len_ && index >= offset_[len + 1]) ++len;
  std::size_t rank = index - offset_[len];
  Word w(len);
  for (std::size_t i = len; i-- > 0;) {
    w[i] = static_cast<Letter>(rank % letters_);
    rank /= letters_;
  }
  return w;
}

std::size_t OracleClasses::index_of(const Word& w) const {
  if (w.size() > max_len_) throw std::invalid_argument("word longer than oracle universe");
  std::size_t rank = 0;
  for (Letter x : w) rank = rank * letters_ + x;
  return offset_[w.size()] + rank;
}

std::size_t OracleClasses::root(std::size_t i) const {
  while (parent_[i] != i) {
    parent_[i] = parent_[parent_[i]];
    i = parent_[i];
  }
  return i;
}

std::size_t OracleClasses::class_of(const Word& w) const { return root(index_of(w)); }

std::size_t OracleClasses::class_count() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < parent_.size(); ++i)
    if (root(i) == i) ++n;
  return n;
}

std::size_t OracleClasses::class_count_up_to(std::size_t len) const {
  // A class is counted once, at its root; roots are least indices, and the
  // least index in a class is the shortest word, so restricting to indices
  // below the length cutoff counts classes with a representative that short.
  std::size_t limit = offset_.at(std::min(len + 1, max_len_ + 1));
  std::size_t n = 0;
  for (std::size_t i = 0; i < limit; ++i)
    if (root(i) == i) ++n;
  return n;
}

}  // namespace racgkit
