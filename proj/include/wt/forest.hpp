#pragma once

// Intersection forests of twisted Whitney towers.
//
// A forest is a multiset of signed framed trees and omega-weighted twisted
// trees, plus a frontier G: besides the listed entries the tower may hold
// unknown framed trees of order > G and unknown twisted trees of order > G/2.
// G = inf means the listing is exhaustive.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wt/error.hpp"
#include "wt/tree.hpp"

namespace wt {

/// A non-negative order, or infinity. `none()` (value -1) is reserved for
/// Cochran orders of forests that are not Cochran towers of any order.
class OrderBound {
 public:
  constexpr OrderBound() = default;
  constexpr explicit OrderBound(std::int64_t value) : value_(value) {}
  static constexpr OrderBound infinite() {
    OrderBound b;
    b.infinite_ = true;
    return b;
  }
  static constexpr OrderBound none() { return OrderBound(-1); }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  /// Precondition: !is_infinite().
  constexpr std::int64_t value() const noexcept { return value_; }

  friend constexpr bool operator==(const OrderBound&, const OrderBound&) = default;
  friend constexpr std::strong_ordering operator<=>(const OrderBound& a, const OrderBound& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  /// "inf", "none" or the decimal value.
  std::string to_string() const;

 private:
  bool infinite_ = false;
  std::int64_t value_ = 0;
};

struct FramedEntry {
  FramedTree tree;
  int sign = 1;  // +1 or -1
  friend bool operator==(const FramedEntry&, const FramedEntry&) = default;
};

struct TwistedEntry {
  TwistedTree tree;
  std::int64_t omega = 1;  // nonzero twisting
  friend bool operator==(const TwistedEntry&, const TwistedEntry&) = default;
};

using ForestEntry = std::variant<FramedEntry, TwistedEntry>;

/// Validates sign/omega and stores the tree in canonical form. Forest signs
/// are coefficients of the canonically oriented representative.
ForestEntry make_framed_entry(const FramedTree& tree, int sign);
ForestEntry make_twisted_entry(const TwistedTree& tree, std::int64_t omega);

int entry_order(const ForestEntry& entry);
bool is_beta_bad(const ForestEntry& entry);
/// "+ <1,2>", "w=3 (1,2)^inf"
std::string render(const ForestEntry& entry);
/// Total order used to keep forests sorted.
std::strong_ordering compare(const ForestEntry& a, const ForestEntry& b);

class IntersectionForest {
 public:
  IntersectionForest() = default;
  explicit IntersectionForest(std::vector<ForestEntry> entries,
                              OrderBound frontier = OrderBound::infinite());

  /// Entries in canonical sorted order (a multiset; repeats kept).
  const std::vector<ForestEntry>& entries() const noexcept { return entries_; }
  OrderBound frontier() const noexcept { return frontier_; }
  bool empty() const noexcept { return entries_.empty(); }

  IntersectionForest with_frontier(OrderBound frontier) const;
  IntersectionForest with_entries(std::vector<ForestEntry> entries) const;

  friend bool operator==(const IntersectionForest&, const IntersectionForest&) = default;

 private:
  std::vector<ForestEntry> entries_;
  OrderBound frontier_ = OrderBound::infinite();
};

/// Forest file: optional `frontier INT|inf` header, then one entry per line
/// (`+ <framed>`, `- <framed>`, `w=INT <twisted>`); `#` comments and blank
/// lines are ignored.
IntersectionForest parse_forest(std::string_view text);
/// Canonical file spelling; parse_forest(render(f)) == f.
std::string render(const IntersectionForest& forest);

/// Largest n such that the listed framed trees have order >= n and the
/// twisted ones order >= n/2, capped at frontier + 1.
OrderBound tower_order(const IntersectionForest& forest);

/// Largest n such that framed beta-bad entries have order > n and twisted
/// beta-bad entries order > n/2, capped at the frontier. `none()` when even
/// n = 0 fails (an order-0 beta-bad tree is present).
OrderBound cochran_order(const IntersectionForest& forest);

/// Raised by beta() when the forest is not a Cochran tower of order 2i.
class BetaUndefinedError : public DomainError {
 public:
  BetaUndefinedError(int index, OrderBound achieved);
  int index() const noexcept { return index_; }
  OrderBound achieved() const noexcept { return achieved_; }

 private:
  int index_;
  OrderBound achieved_;
};

/// Sum of omega over twisted entries isomorphic to t_i^inf. Requires
/// cochran_order(forest) >= 2i.
std::int64_t beta(const IntersectionForest& forest, int i);

/// beta^i for 1 <= i <= floor(cochran_order / 2), truncated to `depth` when
/// given. Forests of infinite Cochran order need an explicit depth.
std::vector<std::int64_t> beta_vector(const IntersectionForest& forest,
                                      std::optional<int> depth = std::nullopt);

/// Signed count of framed <1,2> entries.
std::int64_t linking_number(const IntersectionForest& forest);
/// (signed count of <1,(1,1)> + sum of omega over (1,1)^inf) mod 2.
int arf_parity(const IntersectionForest& forest);

/// The tower obtained after 2k+1 iterations of the construction for the
/// link with beta^i = 1 for all i: twisted t_i^inf (omega +1) for
/// 1 <= i <= 2k+1 and two linear framed trees with one 2-label and 2k+2
/// 1-labels, signs +1 and -1.
IntersectionForest infmany_forest(int k);

}  // namespace wt
