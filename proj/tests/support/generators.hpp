#pragma once

#include <random>
#include <vector>

#include "wt/forest.hpp"

namespace gen {

std::vector<int> labels(int ones, int twos);

/// Random framed tree with the given label counts, randomly spelled.
wt::FramedTree framed(int ones, int twos, std::mt19937& rng);
/// Random twisted tree whose body has the given label counts.
wt::TwistedTree twisted(int ones, int twos, std::mt19937& rng);

/// t_n and t_i^inf as caterpillar spellings, built without the library's
/// constructors.
wt::FramedTree caterpillar_t(int n);
wt::TwistedTree caterpillar_t_inf(int i);

/// Entries that may appear in a Cochran tower of order 2k: t_i^inf with any
/// twisting, framed trees with >= 3 2-labels or two 2-labels (not t_n),
/// twisted trees with >= 2 2-labels or one (not t_i^inf), and beta-bad trees
/// above the order-2k range.
wt::ForestEntry cochran_entry(int k, std::mt19937& rng);

/// A random Cochran tower of order 2k with frontier >= 2k + 1.
wt::IntersectionForest cochran_forest(int k, std::mt19937& rng);

/// A Cochran tower of order 2k plus beta-bad debris that the normalization
/// moves remove when raising to target 2k: t_n trees, <1,(1,1)> pairs,
/// (1,1)^inf with even twisting, cancelling pairs, and <(1,1),(1,2)>.
wt::IntersectionForest eliminable_forest(int k, std::mt19937& rng);

}  // namespace gen
