#include "wt/ihx.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>

#include "tree_graph.hpp"
#include "wt/error.hpp"

namespace wt {

SignedKey canonical_signed(const FramedTree& presentation) {
  detail::SignedFramed s = detail::canonicalize_signed(presentation);
  return {CanonicalKey(render(s.form)), s.sign, s.symmetric};
}

void TreeVector::add(const CanonicalKey& key, const BigInt& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

void TreeVector::add(const FramedTree& presentation, const BigInt& coefficient) {
  SignedKey s = canonical_signed(presentation);
  add(s.key, coefficient * s.sign);
}

BigInt TreeVector::coefficient(const CanonicalKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? BigInt(0) : it->second;
}

TreeVector& TreeVector::operator+=(const TreeVector& other) {
  for (const auto& [key, c] : other.terms_) add(key, c);
  return *this;
}

TreeVector operator*(const BigInt& scale, const TreeVector& v) {
  TreeVector out;
  for (const auto& [key, c] : v.terms_) out.add(key, scale * c);
  return out;
}

std::string render(const TreeVector& v) {
  if (v.is_zero()) return "0";
  std::ostringstream out;
  for (const auto& [key, c] : v.terms()) out << c << " * " << key.text() << '\n';
  return out.str();
}

namespace {

void collect_labels(const RootedTree& tree, std::vector<int>& out) {
  if (tree.is_leaf()) {
    out.push_back(tree.label().value());
    return;
  }
  collect_labels(tree.left(), out);
  collect_labels(tree.right(), out);
}

using Counts = std::map<int, int>;

Counts to_counts(const std::vector<int>& labels) {
  Counts counts;
  for (int l : labels) ++counts[l];
  return counts;
}

// Every sub-multiset of `counts` (including empty and full).
std::vector<Counts> sub_multisets(const Counts& counts) {
  std::vector<Counts> out{Counts{}};
  for (const auto& [label, n] : counts) {
    std::vector<Counts> next;
    for (const auto& partial : out) {
      for (int k = 0; k <= n; ++k) {
        Counts c = partial;
        if (k) c[label] = k;
        next.push_back(std::move(c));
      }
    }
    out = std::move(next);
  }
  return out;
}

Counts minus(const Counts& a, const Counts& b) {
  Counts out;
  for (const auto& [label, n] : a) {
    auto it = b.find(label);
    int k = n - (it == b.end() ? 0 : it->second);
    if (k) out[label] = k;
  }
  return out;
}

int total(const Counts& c) {
  int n = 0;
  for (const auto& [label, k] : c) n += k;
  return n;
}

std::vector<RootedTree> all_rooted(const Counts& counts, std::map<Counts, std::vector<RootedTree>>& memo) {
  if (auto it = memo.find(counts); it != memo.end()) return it->second;
  std::vector<RootedTree> out;
  if (total(counts) == 1) {
    out.push_back(RootedTree::leaf(Label(counts.begin()->first)));
  } else {
    std::map<CanonicalKey, RootedTree> seen;
    for (const Counts& left : sub_multisets(counts)) {
      Counts right = minus(counts, left);
      if (total(left) == 0 || total(right) == 0) continue;
      for (const auto& a : all_rooted(left, memo)) {
        for (const auto& b : all_rooted(right, memo)) {
          RootedTree joined = canonical_form(RootedTree::join(a, b));
          seen.emplace(CanonicalKey(render(joined)), joined);
        }
      }
    }
    for (auto& [key, tree] : seen) out.push_back(tree);
  }
  memo.emplace(counts, out);
  return out;
}

void check_shape(int order, std::vector<int>& labels, int bound) {
  if (order < 0) throw DomainError("order must be non-negative");
  if (order > bound) {
    throw DomainError("order " + std::to_string(order) + " exceeds the IHX enumeration bound " + std::to_string(bound));
  }
  if (static_cast<int>(labels.size()) != order + 2) {
    throw DomainError("an order " + std::to_string(order) + " framed tree has " + std::to_string(order + 2) +
                      " leaves, got " + std::to_string(labels.size()) + " labels");
  }
  for (int l : labels) {
    if (l < 1) throw DomainError("labels must be positive");
  }
  std::sort(labels.begin(), labels.end());
}

}  // namespace

std::vector<int> label_multiset(const FramedTree& tree) {
  std::vector<int> out;
  collect_labels(tree.first(), out);
  collect_labels(tree.second(), out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CanonicalKey> enumerate_framed(int order, std::vector<int> labels, int bound) {
  check_shape(order, labels, bound);
  Counts counts = to_counts(labels);
  std::map<Counts, std::vector<RootedTree>> memo;
  std::set<CanonicalKey> keys;
  for (const Counts& left : sub_multisets(counts)) {
    Counts right = minus(counts, left);
    if (total(left) == 0 || total(right) == 0) continue;
    for (const auto& a : all_rooted(left, memo)) {
      for (const auto& b : all_rooted(right, memo)) keys.insert(canonical(FramedTree(a, b)));
    }
  }
  return {keys.begin(), keys.end()};
}

std::vector<IhxRelation> ihx_relations(int order, std::vector<int> labels, int bound) {
  std::vector<IhxRelation> out;
  for (const CanonicalKey& key : enumerate_framed(order, labels, bound)) {
    FramedTree tree = parse_framed(key.text());
    detail::TreeGraph graph = detail::build_graph(tree);
    for (int u = 0; u < static_cast<int>(graph.vertices.size()); ++u) {
      if (graph.is_leaf(u)) continue;
      for (int w : graph.vertices[u].neighbours) {
        if (w < u || graph.is_leaf(w)) continue;
        // Around u: (w, a, b); around w: (u, c, d).
        const auto& nu = graph.vertices[u].neighbours;
        const auto& nw = graph.vertices[w].neighbours;
        int iu = static_cast<int>(std::find(nu.begin(), nu.end(), w) - nu.begin());
        int iw = static_cast<int>(std::find(nw.begin(), nw.end(), u) - nw.begin());
        RootedTree a = detail::hang(graph, nu[(iu + 1) % 3], u);
        RootedTree b = detail::hang(graph, nu[(iu + 2) % 3], u);
        RootedTree c = detail::hang(graph, nw[(iw + 1) % 3], w);
        RootedTree d = detail::hang(graph, nw[(iw + 2) % 3], w);
        auto j = [&d](const RootedTree& x, const RootedTree& y, const RootedTree& z) {
          return FramedTree(RootedTree::join(RootedTree::join(x, y), z), d);
        };
        IhxRelation relation{{j(a, b, c), j(b, c, a), j(c, a, b)}, {}};
        for (const auto& t : relation.trees) relation.vector.add(t, 1);
        out.push_back(std::move(relation));
      }
    }
  }
  return out;
}

std::vector<TreeVector> ihx_relators(int order, std::vector<int> labels, int bound) {
  std::vector<TreeVector> out;
  for (auto& relation : ihx_relations(order, std::move(labels), bound)) out.push_back(std::move(relation.vector));
  return out;
}

// ---------------------------------------------------------------------------
// Lattice

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt abs_value(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

}  // namespace

RelationLattice::RelationLattice(int order, std::vector<int> labels, int bound) : order_(order) {
  check_shape(order, labels, bound);
  labels_ = labels;
  basis_ = enumerate_framed(order, labels, bound);
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);

  relators_ = ihx_relators(order, labels, bound);
  for (const CanonicalKey& key : basis_) {
    if (canonical_signed(parse_framed(key.text())).symmetric) {
      symmetric_.push_back(key);
      TreeVector two;
      two.add(key, 2);
      relators_.push_back(std::move(two));
    }
  }

  std::vector<std::vector<BigInt>> rows;
  for (const auto& r : relators_) {
    if (!r.is_zero()) rows.push_back(dense(r));
  }
  const std::size_t width = basis_.size();
  std::size_t next = 0;
  for (std::size_t col = 0; col < width && next < rows.size(); ++col) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = next; r < rows.size(); ++r) {
        if (rows[r][col] != 0 && (best == rows.size() || abs_value(rows[r][col]) < abs_value(rows[best][col]))) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[next], rows[best]);
      bool cleared = true;
      for (std::size_t r = next + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        BigInt q = rows[r][col] / rows[next][col];
        for (std::size_t k = col; k < width; ++k) rows[r][k] -= q * rows[next][k];
        if (rows[r][col] != 0) cleared = false;
      }
      if (cleared) {
        if (rows[next][col] < 0) {
          for (auto& x : rows[next]) x = -x;
        }
        echelon_.push_back(rows[next]);
        pivot_columns_.push_back(col);
        ++next;
        break;
      }
    }
  }
}

std::vector<BigInt> RelationLattice::dense(const TreeVector& v) const {
  std::vector<BigInt> out(basis_.size());
  for (const auto& [key, c] : v.terms()) {
    auto it = index_.find(key);
    if (it == index_.end()) {
      throw DomainError("tree " + key.text() + " is not an order " + std::to_string(order_) +
                        " class with the lattice's labels");
    }
    out[it->second] = c;
  }
  return out;
}

TreeVector RelationLattice::reduce(const TreeVector& v) const {
  std::vector<BigInt> x = dense(v);
  for (std::size_t i = 0; i < echelon_.size(); ++i) {
    std::size_t col = pivot_columns_[i];
    BigInt q = floor_div(x[col], echelon_[i][col]);
    if (q == 0) continue;
    for (std::size_t k = col; k < x.size(); ++k) x[k] -= q * echelon_[i][k];
  }
  TreeVector out;
  for (std::size_t k = 0; k < x.size(); ++k) out.add(basis_[k], x[k]);
  return out;
}

const RelationLattice& lattice_for(int order, std::vector<int> labels, int bound) {
  static std::mutex mutex;
  static std::map<std::pair<int, std::vector<int>>, std::unique_ptr<RelationLattice>> cache;
  check_shape(order, labels, bound);
  std::lock_guard lock(mutex);
  auto& slot = cache[{order, labels}];
  if (!slot) slot = std::make_unique<RelationLattice>(order, labels, bound);
  return *slot;
}

TreeVector reduce(const TreeVector& v, int bound) {
  if (v.is_zero()) return v;
  std::optional<std::pair<int, std::vector<int>>> shape;
  for (const auto& [key, c] : v.terms()) {
    FramedTree tree = parse_framed(key.text());
    std::pair<int, std::vector<int>> s{tree.order(), label_multiset(tree)};
    if (shape && *shape != s) throw DomainError("reduce needs trees of one order and one label multiset");
    shape = std::move(s);
  }
  return lattice_for(shape->first, shape->second, bound).reduce(v);
}

bool is_zero_mod_ihx_as(const TreeVector& v, int bound) { return reduce(v, bound).is_zero(); }

}  // namespace wt
