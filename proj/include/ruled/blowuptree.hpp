#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ruled/farey.hpp"
#include "ruled/rational.hpp"
#include "ruled/surface.hpp"

namespace ruled {

// Where a blowup centre sits on its parent's exceptional line.
struct Position {
  enum class Kind { NodeLeft, NodeRight, Free };
  Kind kind = Kind::Free;
  Rat coord;  // Free only, nonzero
  std::string str() const;
  friend bool operator==(const Position& a, const Position& b) {
    return a.kind == b.kind && (a.kind != Kind::Free || a.coord == b.coord);
  }
};

struct TreeVertex {
  Position at;
  std::vector<TreeVertex> children;
};

// A point of the closed fiber: [p:q] in the homogeneous fibre coordinates,
// or a point with coordinate `at` on the line with the given slope of some nodal surface.
struct TreeRoot {
  bool on_line = false;
  Rat p, q;  // base point, not both zero
  Slope line;
  Rat at;
  std::vector<TreeVertex> children;

  static TreeRoot base(const Rat& p, const Rat& q);
  static TreeRoot residual(const Slope& line, const Rat& at);
  bool same_point(const Rat& p2, const Rat& q2) const;
  std::string point_str() const;
};

struct BlowupTree {
  std::vector<TreeRoot> roots;
};

// Sibling positions distinct, free coordinates nonzero, lines under free points have no node-right.
void check_tree(const BlowupTree& t);

std::size_t subtree_size(const TreeVertex& v);
std::size_t root_size(const TreeRoot& r);
std::size_t total_vertices(const BlowupTree& t);
std::size_t n_x(const BlowupTree& t);

struct Normalized {
  NodalSurface surface;
  BlowupTree residual;  // roots are residual points on lines of `surface`
};
// Needs a single root at [0:1]; UnsupportedSupport otherwise.
Normalized normalize_pure_nodes(const BlowupTree& t);

// Pull back along z -> z^b on the fibre coordinate y = p/q; residual roots are rejected.
// RootUnavailable when a base point has irrational preimages.
BlowupTree pullback_tree(const BlowupTree& t, unsigned b);

}  // namespace ruled
