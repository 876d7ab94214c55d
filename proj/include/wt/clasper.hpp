#pragma once

// Effect of simple and twisted tree-clasper surgeries on the beta^i.
//
// A surgery is described by its tree type: a signed framed tree or an
// omega-twisted tree, i.e. the same data as a forest entry. Concordances
// between surgeries leave every beta^i unchanged, so a sequence of
// surgeries from the unlink is summarized by adding up per-surgery effects.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "wt/forest.hpp"
#include "wt/normalize.hpp"

namespace wt {

using ClasperSurgery = ForestEntry;

enum class EffectClass {
  TInf,             // twisted, isomorphic to t_i^inf
  Tn,               // framed, isomorphic to t_n
  FramedManyTwos,   // framed, at least three 2-labels
  TwistedTwoTwos,   // twisted, at least two 2-labels
  TwistedOneTwo,    // twisted, one 2-label, not t_i^inf
  FramedTwoTwos,    // framed, two 2-labels and n >= 2 1-labels, not t_n
  LinkingChanger,   // framed <1,2>
  BetaBadOther,     // remaining beta-bad trees
};

struct Classification {
  EffectClass kind;
  int index = 0;  // i for TInf, n for Tn and FramedTwoTwos

  friend bool operator==(const Classification&, const Classification&) = default;
};

std::string to_string(EffectClass kind);
/// "t_2", "t_1^inf", "framed, >= 3 2-labels", ...
std::string describe(const Classification& c);

/// Throws DomainError for labels outside {1,2}.
Classification classify(const ClasperSurgery& surgery);

struct EffectReport {
  /// Nonzero changes of beta^i for determinate i <= max_order.
  std::map<int, std::int64_t> delta;
  /// Smallest i <= max_order + 1 at which the change is unpredictable.
  std::optional<int> indeterminate_from;
  /// The surgery changes the linking number, so beta is undefined after it.
  bool undefined = false;

  friend bool operator==(const EffectReport&, const EffectReport&) = default;
};

/// Effect on beta^i for 1 <= i <= max_order.
EffectReport effect(const ClasperSurgery& surgery, int max_order, const Conventions& conventions = {});
/// Componentwise sum over a surgery sequence; indeterminacy is the minimum
/// over members, and delta keys at or beyond it are dropped.
EffectReport aggregate(std::span<const ClasperSurgery> sequence, int max_order, const Conventions& conventions = {});

}  // namespace wt
