// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "oracles.hpp"
#include "wt/clasper.hpp"
#include "wt/eta_wall.hpp"
#include "wt/forest.hpp"
#include "wt/ihx.hpp"
#include "wt/laurent.hpp"
#include "wt/normalize.hpp"

using namespace wt;
using oracle::operator+=;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

LaurentPoly sym(std::int64_t n) { return symmetric_power(n); }

Outcome table_reproduction() {
  Outcome o;
  const std::vector<std::pair<int, std::vector<long>>> table = {
      {-1, {2}},
      {0, {2, -1}},
      {1, {2, -4, 1}},
      {2, {2, -9, 6, -1}},
      {3, {2, -16, 20, -8, 1}},
      {4, {2, -25, 50, -35, 10, -1}},
  };
  auto start = std::chrono::steady_clock::now();
  for (const auto& [k, coefficients] : table) {
    XPoly expected(std::vector<BigInt>(coefficients.begin(), coefficients.end()));
    XPoly got = beta_series(example_Lk(k));
    if (got != expected) o.fail("k=" + std::to_string(k) + ": got " + render(got));
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= 1.0) o.fail("took " + std::to_string(seconds) + " s");
  if (o.pass) o.detail = "6 rows exact in " + std::to_string(seconds * 1000).substr(0, 5) + " ms";
  return o;
}

Outcome eta_formula() {
  Outcome o;
  for (std::int64_t k = -5; k <= 10; ++k) {
    LaurentPoly expected = -sym(k) + LaurentPoly::constant(2) * sym(k + 1) - sym(k + 2);
    if (lambda(example_Lk(k)) != expected) o.fail("k=" + std::to_string(k));
  }
  if (o.pass) o.detail = "k in [-5, 10]";
  return o;
}

Outcome whitehead() {
  Outcome o;
  IntersectionForest wh = parse_forest("w=1 (1,2)^inf");
  if (!cochran_order(wh).is_infinite()) o.fail("cochran order " + cochran_order(wh).to_string());
  for (int depth : {1, 2, 5, 50, 200}) {
    std::vector<std::int64_t> expected(depth, 0);
    expected[0] = 1;
    if (beta_vector(wh, depth) != expected) o.fail("depth " + std::to_string(depth));
  }
  if (o.pass) o.detail = "cochran order inf; (1,0,0,...) to depth 200";
  return o;
}

Outcome infmany_family() {
  Outcome o;
  for (int k = 1; k <= 10; ++k) {
    IntersectionForest f = infmany_forest(k);
    if (cochran_order(f) != OrderBound(2 * k)) o.fail("k=" + std::to_string(k) + ": order " + cochran_order(f).to_string());
    if (beta_vector(f) != std::vector<std::int64_t>(k, 1)) o.fail("k=" + std::to_string(k) + ": beta");
  }
  if (o.pass) o.detail = "k = 1..10";
  return o;
}

Outcome x_round_trip() {
  Outcome o;
  std::mt19937 rng(20241016);
  std::uniform_int_distribution<int> coeff(-100, 100), degree(0, 30);
  const std::vector<Rational> points{Rational(3, 2), Rational(-2), Rational(7, 3)};
  int failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    LaurentPoly f;
    BigInt constant = 0;
    for (int e = 1, d = degree(rng); e <= d; ++e) {
      int c = coeff(rng);
      f += LaurentPoly::monomial(c, e) + LaurentPoly::monomial(c, -e);
      constant -= 2 * c;
    }
    f += LaurentPoly::constant(constant);
    XPoly p = to_x_poly(f);
    bool ok = from_x_poly(p) == f;
    for (const Rational& t : points) {
      Rational x = (Rational(1) - t) * (Rational(1) - Rational(1) / t);
      ok = ok && p.eval(x) == f.eval(t);
    }
    if (!ok) ++failures;
  }
  if (failures) o.fail(std::to_string(failures) + " failures");
  if (o.pass) o.detail = "1000 instances, 0 failures";
  return o;
}

Outcome canonicalization() {
  Outcome o;
  std::mt19937 rng(6);
  for (int trial = 0; trial < 10000; ++trial) {
    int order = static_cast<int>(rng() % 9);
    std::vector<int> labels;
    for (int i = 0; i < order + 2; ++i) labels.push_back(1 + static_cast<int>(rng() % 3));
    if (trial % 2 == 0 || order == 0) {
      oracle::Graph g = oracle::random_framed_graph(labels, rng);
      if (canonical(oracle::spell_framed(g, rng)) != canonical(oracle::spell_framed(g, rng))) o.fail("framed respelling");
    } else {
      labels.pop_back();
      oracle::Graph g = oracle::random_twisted_graph(labels, rng);
      if (canonical(oracle::spell_twisted(g, rng)) != canonical(oracle::spell_twisted(g, rng))) o.fail("twisted respelling");
    }
  }
  std::size_t classes = 0, pairs = 0;
  for (int leaves = 2; leaves <= 6; ++leaves) {
    for (int twos = 0; twos <= leaves; ++twos) {
      for (int threes = 0; twos + threes <= leaves; ++threes) {
        std::vector<int> labels(leaves - twos - threes, 1);
        labels.insert(labels.end(), twos, 2);
        labels.insert(labels.end(), threes, 3);
        auto all = oracle::trees_by_insertion(labels);
        auto reps = oracle::classes(all);
        std::vector<CanonicalKey> keys;
        for (const auto& r : reps) keys.push_back(canonical(oracle::spell_framed(r, rng)));
        for (std::size_t i = 0; i < keys.size(); ++i) {
          for (std::size_t j = i + 1; j < keys.size(); ++j, ++pairs) {
            if (keys[i] == keys[j]) o.fail("collision " + keys[i].text());
          }
        }
        // Every generated tree gets the key of its class.
        for (const auto& g : all) {
          CanonicalKey key = canonical(oracle::spell_framed(g, rng));
          std::size_t matches = 0;
          for (std::size_t i = 0; i < reps.size(); ++i) {
            if (oracle::brute_isomorphic(g, reps[i]) && keys[i] == key) ++matches;
          }
          if (matches != 1) o.fail("class key mismatch");
        }
        classes += reps.size();
        // Twisted trees with the same leaves (one label becomes the twist).
        if (leaves >= 3) {
          std::vector<int> body(labels.begin() + 1, labels.end());
          body.push_back(oracle::Graph::kTwist);
          auto twisted = oracle::classes(oracle::trees_by_insertion(body));
          std::vector<CanonicalKey> tkeys;
          for (const auto& r : twisted) tkeys.push_back(canonical(oracle::spell_twisted(r, rng)));
          for (std::size_t i = 0; i < tkeys.size(); ++i) {
            for (std::size_t j = i + 1; j < tkeys.size(); ++j, ++pairs) {
              if (tkeys[i] == tkeys[j]) o.fail("twisted collision " + tkeys[i].text());
            }
          }
          classes += twisted.size();
        }
      }
    }
  }
  if (o.pass) {
    o.detail = "10^4 respellings; " + std::to_string(classes) + " classes, " + std::to_string(pairs) +
               " distinct pairs, 0 collisions";
  }
  return o;
}

Outcome ihx_suite() {
  Outcome o;
  std::mt19937 rng(7);
  std::size_t relators = 0, symmetric = 0, combos = 0;
  std::vector<std::pair<int, std::vector<int>>> shapes;
  for (int order = 0; order <= 4; ++order) {
    for (int twos = 0; twos <= order + 2; ++twos) {
      std::vector<int> labels(order + 2 - twos, 1);
      labels.insert(labels.end(), twos, 2);
      shapes.emplace_back(order, labels);
    }
  }
  for (const auto& [order, labels] : shapes) {
    const RelationLattice& lattice = lattice_for(order, labels);
    for (const auto& rel : ihx_relations(order, labels)) {
      ++relators;
      if (!lattice.contains(rel.vector)) o.fail("relator not zero");
      oracle::TensorPoly image;
      for (const auto& t : rel.trees) image += oracle::lie_image(t);
      if (!image.empty()) o.fail("relator is not a Jacobi identity");
    }
    for (const auto& key : lattice.symmetric_classes()) {
      ++symmetric;
      TreeVector two;
      two.add(key, 2);
      if (!lattice.contains(two)) o.fail("2T not zero for " + key.text());
    }
  }
  TreeVector y;
  y.add(parse_framed("<1,(1,1)>"), 1);
  if (is_zero_mod_ihx_as(y)) o.fail("Y-tree reduces to zero");
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& [order, labels] = shapes[rng() % shapes.size()];
    const RelationLattice& lattice = lattice_for(order, labels);
    if (lattice.relators().empty()) continue;
    TreeVector combo;
    for (int n = 1 + static_cast<int>(rng() % 6); n > 0; --n) {
      combo += BigInt(static_cast<int>(rng() % 11) - 5) * lattice.relators()[rng() % lattice.relators().size()];
    }
    ++combos;
    if (!lattice.reduce(combo).is_zero()) o.fail("relator combination not zero");
  }
  if (o.pass) {
    o.detail = std::to_string(relators) + " relators, " + std::to_string(symmetric) + " 2T checks, " +
               std::to_string(combos) + " combinations; Y-tree nonzero";
  }
  return o;
}

Outcome oracle_consistency() {
  Outcome o;
  std::mt19937 rng(8);
  for (int trial = 0; trial < 500; ++trial) {
    int k = 1 + trial % 4;
    IntersectionForest f = gen::cochran_forest(k, rng);
    if (cochran_order(f) < OrderBound(2 * k)) {
      o.fail("generator produced cochran order " + cochran_order(f).to_string());
      continue;
    }
    EffectReport r = aggregate(f.entries(), k);
    std::vector<std::int64_t> predicted(k, 0);
    for (const auto& [i, d] : r.delta) predicted[i - 1] = d;
    if (r.undefined || (r.indeterminate_from && *r.indeterminate_from <= k) || predicted != beta_vector(f, k)) {
      o.fail("Cochran tower mismatch:\n" + render(f));
    }
  }
  std::size_t compared = 0, fully_equal = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int k = 1 + trial % 4;
    IntersectionForest f = gen::eliminable_forest(k, rng);
    EffectReport r = aggregate(f.entries(), k);
    NormalizeOptions options;
    options.target = 2 * k;
    std::vector<std::int64_t> after;
    try {
      after = beta_vector(normalize(f, options).forest, k);
    } catch (const std::exception& e) {
      o.fail(std::string("normalize failed: ") + e.what());
      continue;
    }
    // Indices at or past indeterminate_from carry no prediction.
    std::vector<std::int64_t> predicted(k, 0);
    for (const auto& [i, d] : r.delta) predicted[i - 1] = d;
    if (predicted == after) ++fully_equal;
    int limit = std::min(k + 1, r.indeterminate_from.value_or(k + 1));
    for (int i = 1; i < limit; ++i, ++compared) {
      auto it = r.delta.find(i);
      if (after[i - 1] != (it == r.delta.end() ? 0 : it->second)) o.fail("eliminable mismatch:\n" + render(f));
    }
  }
  if (o.pass) {
    o.detail = "500 Cochran towers; 200 eliminable forests agree on all " + std::to_string(compared) +
               " determinate values, " + std::to_string(fully_equal) + " agree at every i <= k";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"eta table reproduction", table_reproduction},
      {"eta formula for L^k", eta_formula},
      {"Whitehead link forest", whitehead},
      {"infinitely many beta family", infmany_family},
      {"x-conversion round trip", x_round_trip},
      {"canonicalization soundness", canonicalization},
      {"IHX suite", ihx_suite},
      {"oracle cross-consistency", oracle_consistency},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << std::endl;
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
