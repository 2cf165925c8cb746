#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace racgkit {

/// Finite presentation whose relators are positive words over the generator
/// labels (all generators here are involutions or a finite-order z, so no
/// inverse symbols are needed). Relators carry the name of the construction
/// rule that produced them; family_order also lists rules that happened to
/// produce no relator, so empty families can be reported as vacuous.
struct GroupPresentation {
  struct Relator {
    std::vector<std::string> letters;
    std::string family;
  };

  std::vector<std::string> generators;
  std::vector<Relator> relators;
  std::vector<std::string> family_order;

  std::size_t family_count(const std::string& name) const;
  std::size_t longest_relator() const;
};

/// `gen a d z` line followed by one `rel ...` line per relator.
std::string to_text(const GroupPresentation& p);

std::string relator_text(const GroupPresentation::Relator& r);

}  // namespace racgkit
