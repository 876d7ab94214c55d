#pragma once

// Internal: unrooted view of a framed tree with cyclic vertex orientations,
// shared by the isomorphism canonicalizer and the IHX relation builder.

#include <vector>

#include "wt/tree.hpp"

namespace wt::detail {

/// Vertices of a framed tree. Leaves carry a label > 0 and one neighbour;
/// trivalent vertices carry label 0 and three neighbours in cyclic order.
/// For a join (a, b) presented below parent p the cyclic order is (p, a, b).
struct TreeGraph {
  struct Vertex {
    int label = 0;
    std::vector<int> neighbours;
  };
  std::vector<Vertex> vertices;

  bool is_leaf(int v) const { return vertices[v].label > 0; }
};

TreeGraph build_graph(const FramedTree& tree);

/// The rooted tree hanging off vertex `at` on the side away from `from`.
/// Child order follows the cyclic orientation at each vertex.
RootedTree hang(const TreeGraph& graph, int at, int from);

struct SignedRooted {
  RootedTree form;
  int sign = 1;            // parity of child swaps to reach `form`
  bool symmetric = false;  // some vertex has isomorphic children
};

SignedRooted canonicalize_signed(const RootedTree& tree);

struct SignedFramed {
  FramedTree form;
  int sign = 1;
  /// An orientation-reversing automorphism exists, so the oriented tree
  /// equals its own negative.
  bool symmetric = false;
};

/// Canonical presentation over all edges, together with the orientation
/// sign of the input presentation relative to it. Symmetric trees always
/// report sign +1.
SignedFramed canonicalize_signed(const FramedTree& tree);

}  // namespace wt::detail
