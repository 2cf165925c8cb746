#include "racgkit/presentation.hpp"

#include <algorithm>
#include <sstream>

namespace racgkit {

std::size_t GroupPresentation::family_count(const std::string& name) const {
  std::size_t n = 0;
  for (const auto& r : relators)
    if (r.family == name) ++n;
  return n;
}

std::size_t GroupPresentation::longest_relator() const {
  std::size_t longest = 0;
  for (const auto& r : relators) longest = std::max(longest, r.letters.size());
  return longest;
}

std::string relator_text(const GroupPresentation::Relator& r) {
  std::string out;
  for (std::size_t i = 0; i < r.letters.size(); ++i) {
    if (i) out += ' ';
    out += r.letters[i];
  }
  return out;
}

std::string to_text(const GroupPresentation& p) {
  std::ostringstream out;
  out << "gen";
  for (const auto& g : p.generators) out << " " << g;
  out << "\n";
  for (const auto& r : p.relators) out << "rel " << relator_text(r) << "\n";
  return out.str();
}

}  // namespace racgkit
