#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "generators.hpp"
#include "wt/error.hpp"
#include "wt/forest.hpp"

using namespace wt;

namespace {

IntersectionForest forest(std::string_view text) { return parse_forest(text); }

// Largest n <= limit for which `holds(n)` is true for all n' <= n, found by
// testing each n; `limit + 1` plays the role of infinity.
template <class P>
OrderBound exhaustive(P holds, int limit) {
  if (!holds(0)) return OrderBound::none();
  int n = 0;
  while (n <= limit && holds(n + 1)) ++n;
  return n > limit ? OrderBound::infinite() : OrderBound(n);
}

// Def 1.4 and Def 1.7 predicates, read off the entries directly.
bool tower_predicate(const IntersectionForest& f, int n) {
  if (!f.frontier().is_infinite() && n > f.frontier().value() + 1) return false;
  for (const auto& e : f.entries()) {
    int d = entry_order(e);
    if (std::holds_alternative<FramedEntry>(e) ? d < n : 2 * d < n) return false;
  }
  return true;
}

bool cochran_predicate(const IntersectionForest& f, int n) {
  if (!f.frontier().is_infinite() && n > f.frontier().value()) return false;
  for (const auto& e : f.entries()) {
    if (!is_beta_bad(e)) continue;
    int d = entry_order(e);
    if (std::holds_alternative<FramedEntry>(e) ? d <= n : 2 * d <= n) return false;
  }
  return true;
}

}  // namespace

TEST(ForestParse, Examples) {
  IntersectionForest wh = forest("w=1 (1,2)^inf");
  ASSERT_EQ(wh.entries().size(), 1u);
  EXPECT_TRUE(wh.frontier().is_infinite());
  const auto& t = std::get<TwistedEntry>(wh.entries()[0]);
  EXPECT_EQ(t.omega, 1);
  EXPECT_EQ(t_inf_index(t.tree), 1);

  IntersectionForest t2 = forest("+ <(2,1),(1,2)>");
  ASSERT_EQ(t2.entries().size(), 1u);
  EXPECT_EQ(t_index(std::get<FramedEntry>(t2.entries()[0]).tree), 2);

  IntersectionForest empty = forest("frontier 7\n");
  EXPECT_TRUE(empty.empty());
  EXPECT_EQ(empty.frontier(), OrderBound(7));
}

TEST(ForestParse, KeepsRepeatsAndComments) {
  IntersectionForest f = forest("# two copies\n+ <1,(1,1)>\n\n+ <(1,1),1>  # same tree\n- <2,(1,2)>\n");
  EXPECT_EQ(f.entries().size(), 3u);
}

TEST(ForestParse, Errors) {
  EXPECT_THROW(forest("w=0 (1,2)^inf"), ParseError);
  EXPECT_THROW(forest("frontier 0"), ParseError);
  EXPECT_THROW(forest("frontier -3"), ParseError);
  EXPECT_THROW(forest("* <1,2>"), ParseError);
  EXPECT_THROW(forest("+ (1,2)^inf"), ParseError);
  EXPECT_THROW(forest("w=1 <1,2>"), ParseError);
  try {
    forest("+ <1,2>\n+ <1,0>\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ForestParse, RenderRoundTrip) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    IntersectionForest f = gen::cochran_forest(1 + trial % 4, rng);
    EXPECT_EQ(parse_forest(render(f)), f);
  }
}

TEST(ForestOrder, TowerExamples) {
  EXPECT_TRUE(tower_order(IntersectionForest()).is_infinite());
  EXPECT_EQ(tower_order(forest("+ <(2,1),(1,2)>")), OrderBound(2));
  EXPECT_EQ(tower_order(forest("w=1 (1,2)^inf")), OrderBound(2));
  EXPECT_EQ(tower_order(forest("frontier 3\n")), OrderBound(4));
}

TEST(ForestOrder, CochranExamples) {
  EXPECT_TRUE(cochran_order(forest("w=1 (1,2)^inf")).is_infinite());
  EXPECT_EQ(cochran_order(forest("+ <(2,1),(1,2)>")), OrderBound(1));
  EXPECT_EQ(cochran_order(infmany_forest(2)), OrderBound(4));
  EXPECT_EQ(cochran_order(forest("+ <1,2>")), OrderBound::none());
  EXPECT_EQ(cochran_order(forest("frontier 5\nw=1 (1,2)^inf")), OrderBound(5));
}

TEST(ForestOrder, MatchesExhaustivePredicates) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    IntersectionForest f = trial % 2 ? gen::cochran_forest(1 + trial % 4, rng) : gen::eliminable_forest(1 + trial % 3, rng);
    EXPECT_EQ(tower_order(f), exhaustive([&](int n) { return tower_predicate(f, n); }, 64)) << render(f);
    EXPECT_EQ(cochran_order(f), exhaustive([&](int n) { return cochran_predicate(f, n); }, 64)) << render(f);
  }
}

TEST(ForestOrder, CochranBoundedByFrontierAndBadTrees) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    IntersectionForest f = gen::eliminable_forest(1 + trial % 4, rng);
    OrderBound c = cochran_order(f);
    EXPECT_LE(c, f.frontier());
    for (const auto& e : f.entries()) {
      if (is_beta_bad(e) && std::holds_alternative<FramedEntry>(e)) EXPECT_LE(c, OrderBound(entry_order(e) - 1));
    }
  }
}

TEST(ForestOrder, TInfEntriesNeverChangeCochranOrder) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    IntersectionForest f = gen::eliminable_forest(1 + trial % 4, rng);
    auto entries = f.entries();
    entries.push_back(make_twisted_entry(make_t_inf(1 + static_cast<int>(rng() % 6)), 5));
    EXPECT_EQ(cochran_order(f.with_entries(entries)), cochran_order(f));
  }
}

TEST(ForestBeta, Whitehead) {
  IntersectionForest wh = forest("w=1 (1,2)^inf");
  EXPECT_EQ(beta(wh, 1), 1);
  EXPECT_EQ(beta(wh, 2), 0);
  EXPECT_EQ(beta_vector(wh, 5), (std::vector<std::int64_t>{1, 0, 0, 0, 0}));
  EXPECT_THROW(beta_vector(wh), DomainError);
}

TEST(ForestBeta, InfinitelyManyFamily) {
  IntersectionForest f2 = infmany_forest(2);
  EXPECT_EQ(beta(f2, 1), 1);
  EXPECT_EQ(beta(f2, 2), 1);
  EXPECT_EQ(beta_vector(f2), (std::vector<std::int64_t>{1, 1}));
  EXPECT_EQ(beta_vector(infmany_forest(3)), (std::vector<std::int64_t>{1, 1, 1}));
  EXPECT_EQ(cochran_order(infmany_forest(1)), OrderBound(2));
  OrderBound tower = tower_order(f2);
  EXPECT_TRUE(tower == OrderBound(1) || tower == OrderBound(2));
}

TEST(ForestBeta, RefusedBelowCochranOrder) {
  IntersectionForest t2 = forest("+ <(2,1),(1,2)>");
  try {
    beta(t2, 1);
    FAIL();
  } catch (const BetaUndefinedError& e) {
    EXPECT_EQ(e.index(), 1);
    EXPECT_EQ(e.achieved(), OrderBound(1));
  }
  EXPECT_TRUE(beta_vector(t2).empty());
}

TEST(ForestBeta, EmptyForestIsUnlink) {
  EXPECT_EQ(beta_vector(IntersectionForest(), 6), std::vector<std::int64_t>(6, 0));
}

TEST(ForestBeta, HandSumsOfTwistings) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ForestEntry> entries;
    std::vector<std::int64_t> expected(6, 0);
    for (int n = static_cast<int>(rng() % 8); n > 0; --n) {
      int i = 1 + static_cast<int>(rng() % 6);
      std::int64_t w = static_cast<std::int64_t>(rng() % 7) - 3;
      if (w == 0) continue;
      expected[i - 1] += w;
      entries.push_back(make_twisted_entry(gen::caterpillar_t_inf(i), w));
    }
    std::shuffle(entries.begin(), entries.end(), rng);
    EXPECT_EQ(beta_vector(IntersectionForest(entries), 6), expected);
  }
}

TEST(ForestBeta, InvariantUnderRespellingAndOrder) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    int k = 1 + trial % 3;
    IntersectionForest f = gen::cochran_forest(k, rng);
    auto entries = f.entries();
    std::reverse(entries.begin(), entries.end());
    IntersectionForest g(entries, f.frontier());
    EXPECT_EQ(g, f);
    EXPECT_EQ(beta_vector(g, k), beta_vector(f, k));
  }
}

TEST(ForestReadings, LinkingAndArf) {
  EXPECT_EQ(linking_number(IntersectionForest()), 0);
  EXPECT_EQ(arf_parity(IntersectionForest()), 0);
  EXPECT_EQ(arf_parity(forest("w=1 (1,1)^inf")), 1);
  EXPECT_EQ(arf_parity(forest("w=2 (1,1)^inf\n+ <1,(1,1)>\n- <(1,1),1>")), 0);
  EXPECT_EQ(linking_number(forest("+ <1,2>\n+ <1,2>\n- <2,1>")), 1);
}

TEST(ForestReadings, InfmanyShape) {
  for (int k = 1; k <= 5; ++k) {
    IntersectionForest f = infmany_forest(k);
    EXPECT_TRUE(f.frontier().is_infinite());
    int framed = 0, twisted = 0;
    for (const auto& e : f.entries()) {
      if (const auto* fr = std::get_if<FramedEntry>(&e)) {
        ++framed;
        EXPECT_EQ(fr->tree.order(), 2 * k + 1);
        EXPECT_EQ(fr->tree.label_count(Label(2)), 1);
      } else {
        ++twisted;
        EXPECT_EQ(std::get<TwistedEntry>(e).omega, 1);
      }
    }
    EXPECT_EQ(framed, 2);
    EXPECT_EQ(twisted, 2 * k + 1);
  }
}
