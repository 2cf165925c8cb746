#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "racgkit/words.hpp"

namespace racgkit {

using VertexId = std::uint32_t;

/// Cube of dimension clique.size() with the given base corner. The corner
/// set is base * (every subproduct of the clique letters); the base is the
/// shortlex-least corner, so each cube is recorded exactly once.
struct Cube {
  VertexId base = 0;
  std::vector<Letter> clique;  // sorted, pairwise commuting
};

/// Radius-r ball of the cube complex of the Coxeter group presented by the
/// alphabet: vertices are the normal forms of length <= r, edges join words
/// differing by one right multiplication, and cubes fill in wherever all
/// corners of a clique subproduct lie in the ball.
class CubeBall {
 public:
  Alphabet alphabet;
  int radius = 0;
  std::vector<Word> vertices;  // shortlex order; index 0 is the empty word
  std::vector<std::vector<std::optional<VertexId>>> neighbor;  // [v][letter]
  std::vector<std::pair<VertexId, VertexId>> edge_list;        // u < w
  std::vector<std::vector<Cube>> cubes_by_dim;                 // index = dimension

  std::optional<VertexId> find(const Word& w) const;
  std::size_t word_length(VertexId v) const { return vertices.at(v).size(); }
  std::string vertex_name(VertexId v) const;
  bool has_cube(VertexId base, const std::vector<Letter>& clique) const;
  int max_dim() const;

  // Test hook: removes the cube from the records so detection of corrupted
  // data can be exercised.
  bool remove_cube(VertexId base, const std::vector<Letter>& clique);

  std::map<Word, VertexId> index;
  std::set<std::pair<VertexId, std::uint32_t>> cube_keys;  // (base, clique mask)
};

CubeBall build_ball(const Alphabet& alpha, int radius);

/// Vertices whose every length-<=k continuation stays inside the ball,
/// i.e. normal-form length <= radius - k.
std::vector<VertexId> interior_vertices(const CubeBall& ball, int depth);

/// True iff around v every set of pairwise-commuting generators spans a
/// recorded cube. v must be interior at depth max-clique so the full link is
/// inside the ball.
bool link_is_flag(const CubeBall& ball, VertexId v);

struct CubeDimResult {
  int dim = 0;
  bool exact = false;  // false: radius too small for a top cube, bound only

  std::string str() const {
    return exact ? std::to_string(dim) : std::to_string(dim) + " (bound only)";
  }
};
CubeDimResult max_cube_dim(const CubeBall& ball);

/// The ball with a two-edge "v" appended at every vertex: new vertices u^-1
/// and u^+1 per base vertex u^0, each joined to u^0 only.
/// Vertex ids: [0,n) base, [n,2n) the -1 copies, [2n,3n) the +1 copies.
class VPlusBall {
 public:
  CubeBall base;
  std::vector<std::pair<VertexId, VertexId>> edge_list;

  std::size_t base_count() const { return base.vertices.size(); }
  std::size_t vertex_count() const { return 3 * base_count(); }
  VertexId base_of(VertexId v) const { return static_cast<VertexId>(v % base_count()); }
  int level_of(VertexId v) const;  // -1, 0 or +1
  VertexId at_level(VertexId base_vertex, int level) const;
  std::string vertex_name(VertexId v) const;
};

VPlusBall build_vplus(CubeBall ball);

std::string ball_to_json(const CubeBall& ball);
std::string ball_to_dot(const CubeBall& ball, const std::string& name = "ball");
std::string vplus_to_json(const VPlusBall& vp);
std::string vplus_to_dot(const VPlusBall& vp, const std::string& name = "vplus");

}  // namespace racgkit
