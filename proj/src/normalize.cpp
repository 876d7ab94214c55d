#include "wt/normalize.hpp"

#include <algorithm>
#include <map>

#include "wt/error.hpp"

namespace wt {

namespace {

const CanonicalKey& key_11inf() {
  static const CanonicalKey key = canonical(parse_twisted("(1,1)^inf"));
  return key;
}

const CanonicalKey& key_y111() {
  static const CanonicalKey key = canonical(parse_framed("<1,(1,1)>"));
  return key;
}

bool is_twisted_11(const ForestEntry& entry) {
  const auto* twisted = std::get_if<TwistedEntry>(&entry);
  return twisted && twisted->tree.order() == 1 && canonical(twisted->tree) == key_11inf();
}

bool is_framed_y111(const ForestEntry& entry) {
  const auto* framed = std::get_if<FramedEntry>(&entry);
  return framed && framed->tree.order() == 1 && canonical(framed->tree) == key_y111();
}

IntersectionForest apply(const IntersectionForest& forest, const Move& move) {
  std::vector<ForestEntry> entries = forest.entries();
  for (const auto& gone : move.consumed) {
    auto it = std::find(entries.begin(), entries.end(), gone);
    if (it == entries.end()) throw DomainError("move '" + move.rule + "' consumes absent entry " + render(gone));
    entries.erase(it);
  }
  entries.insert(entries.end(), move.produced.begin(), move.produced.end());
  return IntersectionForest(std::move(entries), move.frontier.value_or(forest.frontier()));
}

OrderBound lowered(OrderBound frontier, std::optional<int> target, int consumed_order) {
  OrderBound candidate(target ? *target + 1 : std::max(consumed_order, 1));
  return std::min(frontier, candidate);
}

class Recorder {
 public:
  explicit Recorder(IntersectionForest forest) : forest_(std::move(forest)) {}

  void record(Move move) {
    forest_ = apply(forest_, move);
    log_.push_back(std::move(move));
  }

  const IntersectionForest& forest() const { return forest_; }
  Rewrite finish() && { return {std::move(forest_), std::move(log_)}; }

 private:
  IntersectionForest forest_;
  MoveLog log_;
};

}  // namespace

IntersectionForest replay(const IntersectionForest& forest, const MoveLog& log) {
  IntersectionForest current = forest;
  for (const auto& move : log) current = apply(current, move);
  return current;
}

Rewrite boundary_twist_11inf(const IntersectionForest& forest, std::optional<int> target) {
  Recorder recorder(forest);
  for (const auto& entry : forest.entries()) {
    if (!is_twisted_11(entry)) continue;
    Move move{"boundary_twist", {entry}, {}, std::nullopt};
    if (std::get<TwistedEntry>(entry).omega % 2 != 0) {
      move.produced.push_back(make_framed_entry(parse_framed("<1,(1,1)>"), 1));
    }
    move.frontier = lowered(recorder.forest().frontier(), target, 1);
    recorder.record(std::move(move));
  }
  return std::move(recorder).finish();
}

Rewrite cancel_arf_pairs(const IntersectionForest& forest, std::optional<int> target) {
  std::vector<ForestEntry> y_trees;
  for (const auto& entry : forest.entries()) {
    if (is_framed_y111(entry)) y_trees.push_back(entry);
  }
  if (y_trees.size() % 2 != 0) {
    throw DomainError("Arf obstruction: odd number (" + std::to_string(y_trees.size()) +
                      ") of <1,(1,1)> trees; Arf(L_1) != 0");
  }
  Recorder recorder(forest);
  for (std::size_t i = 0; i + 1 < y_trees.size(); i += 2) {
    Move move{"cancel_arf_pairs", {y_trees[i], y_trees[i + 1]}, {}, std::nullopt};
    move.frontier = lowered(recorder.forest().frontier(), target, 1);
    recorder.record(std::move(move));
  }
  return std::move(recorder).finish();
}

Rewrite eliminate_t_tree(const IntersectionForest& forest, std::size_t which, std::optional<int> target,
                         const Conventions& conventions) {
  if (which >= forest.entries().size()) throw DomainError("eliminate_t_tree: entry index out of range");
  const ForestEntry& entry = forest.entries()[which];
  const auto* framed = std::get_if<FramedEntry>(&entry);
  std::optional<int> n = framed ? t_index(framed->tree) : std::nullopt;
  if (!n) throw DomainError("eliminate_t_tree: " + render(entry) + " is not a t_n tree");

  const int k = (*n + 1) / 2;
  const std::int64_t weight = (*n % 2 == 0 ? 2 : 1) * framed->sign * conventions.t_tree_sign;
  const CanonicalKey t_inf = canonical(make_t_inf(k));

  Move move{"eliminate_t_tree", {entry}, {}, std::nullopt};
  std::int64_t omega = weight;
  for (const auto& other : forest.entries()) {
    const auto* twisted = std::get_if<TwistedEntry>(&other);
    if (twisted && twisted->tree.order() == k && canonical(twisted->tree) == t_inf) {
      move.consumed.push_back(other);
      omega += twisted->omega;
    }
  }
  if (omega != 0) move.produced.push_back(make_twisted_entry(make_t_inf(k), omega));
  move.frontier = lowered(forest.frontier(), target, *n);

  Recorder recorder(forest);
  recorder.record(std::move(move));
  return std::move(recorder).finish();
}

Rewrite normalize(const IntersectionForest& forest, const NormalizeOptions& options) {
  const int target = options.target;
  if (target < 2 || target % 2 != 0) {
    throw DomainError("normalize: target must be an even integer >= 2, got " + std::to_string(target));
  }
  for (const auto& entry : forest.entries()) is_beta_bad(entry);  // labels in {1,2}

  if (std::int64_t lk = linking_number(forest); lk != 0) {
    throw DomainError("normalize: linking number is " + std::to_string(lk) + ", not 0");
  }
  for (const auto& entry : forest.entries()) {
    if (std::holds_alternative<FramedEntry>(entry) && entry_order(entry) == 0) {
      throw DomainError("normalize: framed order-0 entry " + render(entry) +
                        " present; cancel order-0 intersections before normalizing");
    }
  }
  if (arf_parity(forest) != 0) throw DomainError("Arf obstruction: Arf(L_1) != 0, no Cochran tower exists");

  const int k = target / 2;
  auto in_range_bad = [&](const ForestEntry& e) {
    if (!is_beta_bad(e)) return false;
    return std::holds_alternative<FramedEntry>(e) ? entry_order(e) <= target : entry_order(e) <= k;
  };

  Recorder recorder(forest);
  auto record_all = [&](const MoveLog& moves) {
    for (const auto& m : moves) recorder.record(m);
  };
  auto frontier_after = [&](Move& move) {
    move.frontier = std::min(recorder.forest().frontier(), OrderBound(target + 1));
  };

  record_all(boundary_twist_11inf(recorder.forest(), target).log);
  record_all(cancel_arf_pairs(recorder.forest(), target).log);

  // t_n trees below the target turn into t_k^inf trees.
  for (bool changed = true; changed;) {
    changed = false;
    const auto& entries = recorder.forest().entries();
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const auto* framed = std::get_if<FramedEntry>(&entries[i]);
      if (!framed || framed->tree.order() > target || !t_index(framed->tree)) continue;
      record_all(eliminate_t_tree(recorder.forest(), i, target, options.conventions).log);
      changed = true;
      break;
    }
  }

  // Oppositely signed framed pairs, and twisted entries of one class merged.
  for (bool changed = true; changed;) {
    changed = false;
    const auto entries = recorder.forest().entries();
    for (std::size_t i = 0; i < entries.size() && !changed; ++i) {
      if (!in_range_bad(entries[i])) continue;
      if (const auto* a = std::get_if<FramedEntry>(&entries[i])) {
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
          const auto* b = std::get_if<FramedEntry>(&entries[j]);
          if (b && b->sign == -a->sign && b->tree == a->tree) {
            Move move{"cancel_pair", {entries[i], entries[j]}, {}, std::nullopt};
            frontier_after(move);
            recorder.record(std::move(move));
            changed = true;
            break;
          }
        }
      } else {
        const auto& t = std::get<TwistedEntry>(entries[i]);
        Move move{"cancel_pair", {entries[i]}, {}, std::nullopt};
        std::int64_t omega = t.omega;
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
          const auto* b = std::get_if<TwistedEntry>(&entries[j]);
          if (b && b->tree == t.tree) {
            move.consumed.push_back(entries[j]);
            omega += b->omega;
          }
        }
        if (move.consumed.size() < 2) continue;
        if (omega != 0) move.produced.push_back(make_twisted_entry(t.tree, omega));
        frontier_after(move);
        recorder.record(std::move(move));
        changed = true;
      }
    }
  }

  // Framed beta-bad trees that vanish modulo IHX and antisymmetry, first as
  // whole same-shape groups, then one at a time.
  {
    std::map<std::pair<int, std::vector<int>>, std::vector<ForestEntry>> groups;
    for (const auto& entry : recorder.forest().entries()) {
      const auto* framed = std::get_if<FramedEntry>(&entry);
      if (!framed || !in_range_bad(entry) || framed->tree.order() > options.ihx_bound) continue;
      groups[{framed->tree.order(), label_multiset(framed->tree)}].push_back(entry);
    }
    for (const auto& [shape, members] : groups) {
      TreeVector sum;
      for (const auto& e : members) {
        const auto& f = std::get<FramedEntry>(e);
        sum.add(canonical(f.tree), f.sign);
      }
      if (members.size() > 1 && is_zero_mod_ihx_as(sum, options.ihx_bound)) {
        Move move{"ihx_zero", members, {}, std::nullopt};
        frontier_after(move);
        recorder.record(std::move(move));
        continue;
      }
      for (const auto& e : members) {
        const auto& f = std::get<FramedEntry>(e);
        TreeVector single;
        single.add(canonical(f.tree), f.sign);
        if (!is_zero_mod_ihx_as(single, options.ihx_bound)) continue;
        Move move{"ihx_zero", {e}, {}, std::nullopt};
        frontier_after(move);
        recorder.record(std::move(move));
      }
    }
  }

  for (const auto& entry : std::vector<ForestEntry>(recorder.forest().entries())) {
    if (!in_range_bad(entry)) continue;
    if (!options.assume_eliminable) {
      throw DomainError("not eliminable at order " + std::to_string(entry_order(entry)) + ": " + render(entry) +
                        " (pass --assume-eliminable to treat it as zero modulo IHX)");
    }
    Move move{"assume_eliminable", {entry}, {}, std::nullopt};
    frontier_after(move);
    recorder.record(std::move(move));
  }

  return std::move(recorder).finish();
}

}  // namespace wt
