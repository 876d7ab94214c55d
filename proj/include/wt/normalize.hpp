#pragma once

// Raising a twisted Whitney tower to a Cochran tower by exchanging beta-bad
// trees for t_k^inf trees and higher-order trees, at the level of forests.
//
// Moves:
//   boundary_twist      (1,1)^inf with twisting w  ->  (w mod 2) copies of +<1,(1,1)>
//   cancel_arf_pairs    <1,(1,1)> trees (2-torsion) removed in pairs
//   eliminate_t_tree    t_{2k-1} -> t_k^inf with w = s;  t_{2k} -> t_k^inf with w = 2s
//   cancel_pair         isomorphic beta-bad trees of opposite sign
//   ihx_zero            beta-bad trees (or same-shape groups) zero modulo IHX/AS
//   assume_eliminable   remaining beta-bad trees, only when explicitly allowed
// The higher-order trees a move creates are not materialized; the frontier
// absorbs them.

#include <optional>
#include <string>
#include <vector>

#include "wt/forest.hpp"
#include "wt/ihx.hpp"

namespace wt {

/// Orientation convention shared with the clasper effect oracle. A positive
/// t_2 contributes t_1^inf with twisting +2 (beta^1 = +2) when
/// t_tree_sign = +1.
struct Conventions {
  int t_tree_sign = 1;
};

struct Move {
  std::string rule;
  std::vector<ForestEntry> consumed;
  std::vector<ForestEntry> produced;
  std::optional<OrderBound> frontier;  // frontier after the move, if changed

  friend bool operator==(const Move&, const Move&) = default;
};

using MoveLog = std::vector<Move>;

struct Rewrite {
  IntersectionForest forest;
  MoveLog log;
};

/// Applies a logged move sequence: every consumed entry must be present.
IntersectionForest replay(const IntersectionForest& forest, const MoveLog& log);

/// `target` (when given) is the Cochran order the caller is working
/// towards; the frontier then drops to target + 1. Without a target the
/// frontier drops to the order of the consumed tree.
Rewrite boundary_twist_11inf(const IntersectionForest& forest, std::optional<int> target = std::nullopt);

/// Throws DomainError("Arf obstruction ...") when the number of framed
/// <1,(1,1)> entries is odd.
Rewrite cancel_arf_pairs(const IntersectionForest& forest, std::optional<int> target = std::nullopt);

/// `which` indexes forest.entries() and must be a framed t_n.
Rewrite eliminate_t_tree(const IntersectionForest& forest, std::size_t which, std::optional<int> target = std::nullopt,
                         const Conventions& conventions = {});

struct NormalizeOptions {
  int target = 2;  // even, >= 2
  bool assume_eliminable = false;
  int ihx_bound = kDefaultIhxBound;
  Conventions conventions;
};

/// Produces a forest of Cochran order >= target. Throws DomainError naming
/// the first failed precondition or the first beta-bad entry that no rule
/// eliminates.
Rewrite normalize(const IntersectionForest& forest, const NormalizeOptions& options);

}  // namespace wt
