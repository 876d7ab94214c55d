#include "wt/tree.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <vector>

#include "tree_graph.hpp"
#include "wt/error.hpp"

namespace wt {

Label::Label(int value) : value_(value) {
  if (value < 1) throw DomainError("label must be a positive integer, got " + std::to_string(value));
}

struct RootedTree::Node {
  int label = 0;  // > 0 for leaves
  int leaves = 1;
  std::vector<RootedTree> children;  // empty for leaves, else {left, right}
};

RootedTree RootedTree::leaf(Label label) {
  auto node = std::make_shared<Node>();
  node->label = label.value();
  return RootedTree(std::move(node));
}

RootedTree RootedTree::join(RootedTree left, RootedTree right) {
  auto node = std::make_shared<Node>();
  node->leaves = left.node_->leaves + right.node_->leaves;
  node->children.reserve(2);
  node->children.push_back(std::move(left));
  node->children.push_back(std::move(right));
  return RootedTree(std::move(node));
}

bool RootedTree::is_leaf() const noexcept { return node_->label > 0; }

Label RootedTree::label() const {
  if (!is_leaf()) throw DomainError("label() on a trivalent vertex");
  return Label(node_->label);
}

const RootedTree& RootedTree::left() const {
  if (is_leaf()) throw DomainError("left() on a leaf");
  return node_->children[0];
}

const RootedTree& RootedTree::right() const {
  if (is_leaf()) throw DomainError("right() on a leaf");
  return node_->children[1];
}

int RootedTree::order() const noexcept { return node_->leaves - 1; }
int RootedTree::leaf_count() const noexcept { return node_->leaves; }

int RootedTree::label_count(Label label) const noexcept {
  if (is_leaf()) return node_->label == label.value() ? 1 : 0;
  return left().label_count(label) + right().label_count(label);
}

bool operator==(const RootedTree& a, const RootedTree& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_leaf() || b.is_leaf()) return a.is_leaf() && b.is_leaf() && a.node_->label == b.node_->label;
  return a.left() == b.left() && a.right() == b.right();
}

FramedTree::FramedTree(RootedTree first, RootedTree second)
    : first_(std::move(first)), second_(std::move(second)) {}

TwistedTree::TwistedTree(RootedTree body) : body_(std::move(body)) {
  if (body_.is_leaf()) throw DomainError("a twisted tree needs at least one trivalent vertex");
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  AnyTree parse_any() {
    skip_space();
    if (peek() == '<') {
      FramedTree framed = parse_framed_body();
      expect_end();
      return framed;
    }
    RootedTree rooted = parse_rooted_body();
    skip_space();
    if (peek() == '^') {
      std::size_t at = pos_;
      ++pos_;
      skip_space();
      if (text_.substr(pos_, 3) != "inf") fail("malformed twist marker, expected '^inf'", at);
      pos_ += 3;
      if (rooted.is_leaf()) fail("a twisted tree needs at least one trivalent vertex", at);
      expect_end();
      return TwistedTree(std::move(rooted));
    }
    expect_end();
    return rooted;
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw ParseError(what + " at position " + std::to_string(at), at);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    skip_space();
    if (peek() != c) {
      fail(std::string("expected '") + c + "'" + (peek() ? std::string(", found '") + peek() + "'" : ", found end of input"),
           pos_);
    }
    ++pos_;
  }

  void expect_end() {
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + peek() + "'", pos_);
  }

  FramedTree parse_framed_body() {
    expect('<');
    RootedTree first = parse_rooted_body();
    expect(',');
    RootedTree second = parse_rooted_body();
    expect('>');
    return FramedTree(std::move(first), std::move(second));
  }

  RootedTree parse_rooted_body() {
    skip_space();
    if (peek() == '(') {
      ++pos_;
      RootedTree left = parse_rooted_body();
      expect(',');
      RootedTree right = parse_rooted_body();
      expect(')');
      return RootedTree::join(std::move(left), std::move(right));
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) {
      fail(peek() ? std::string("expected a label or '(', found '") + peek() + "'"
                  : std::string("expected a label or '(', found end of input"),
           start);
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc()) fail("label out of range", start);
    if (value == 0) fail("label 0 is not a link component", start);
    return RootedTree::leaf(Label(value));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

AnyTree parse_tree(std::string_view text) { return TreeParser(text).parse_any(); }

RootedTree parse_rooted(std::string_view text) {
  AnyTree tree = parse_tree(text);
  if (auto* rooted = std::get_if<RootedTree>(&tree)) return *rooted;
  throw ParseError("expected a rooted tree", 0);
}

FramedTree parse_framed(std::string_view text) {
  AnyTree tree = parse_tree(text);
  if (auto* framed = std::get_if<FramedTree>(&tree)) return *framed;
  throw ParseError("expected a framed tree '<J,K>'", 0);
}

TwistedTree parse_twisted(std::string_view text) {
  AnyTree tree = parse_tree(text);
  if (auto* twisted = std::get_if<TwistedTree>(&tree)) return *twisted;
  throw ParseError("expected a twisted tree 'J^inf'", 0);
}

// ---------------------------------------------------------------------------
// Rendering and counting

namespace {

void render_into(const RootedTree& tree, std::string& out) {
  if (tree.is_leaf()) {
    out += std::to_string(tree.label().value());
    return;
  }
  out += '(';
  render_into(tree.left(), out);
  out += ',';
  render_into(tree.right(), out);
  out += ')';
}

}  // namespace

std::string render(const RootedTree& tree) {
  std::string out;
  render_into(tree, out);
  return out;
}

std::string render(const FramedTree& tree) {
  std::string out = "<";
  render_into(tree.first(), out);
  out += ',';
  render_into(tree.second(), out);
  out += '>';
  return out;
}

std::string render(const TwistedTree& tree) { return render(tree.body()) + "^inf"; }

std::string render(const AnyTree& tree) {
  return std::visit([](const auto& t) { return render(t); }, tree);
}

int order(const AnyTree& tree) {
  return std::visit([](const auto& t) { return t.order(); }, tree);
}

int label_count(const AnyTree& tree, Label label) {
  return std::visit([label](const auto& t) { return t.label_count(label); }, tree);
}

// ---------------------------------------------------------------------------
// Canonical forms

std::strong_ordering compare(const RootedTree& a, const RootedTree& b) {
  if (a.is_leaf() != b.is_leaf()) return a.is_leaf() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_leaf()) return a.label().value() <=> b.label().value();
  if (auto c = compare(a.left(), b.left()); c != 0) return c;
  return compare(a.right(), b.right());
}

namespace detail {

SignedRooted canonicalize_signed(const RootedTree& tree) {
  if (tree.is_leaf()) return {tree, 1, false};
  SignedRooted a = canonicalize_signed(tree.left());
  SignedRooted b = canonicalize_signed(tree.right());
  auto c = compare(a.form, b.form);
  bool symmetric = a.symmetric || b.symmetric || c == 0;
  if (c > 0) return {RootedTree::join(b.form, a.form), -a.sign * b.sign, symmetric};
  return {RootedTree::join(a.form, b.form), a.sign * b.sign, symmetric};
}

namespace {

int add_rooted(TreeGraph& graph, const RootedTree& tree, int parent) {
  int id = static_cast<int>(graph.vertices.size());
  graph.vertices.emplace_back();
  if (tree.is_leaf()) {
    graph.vertices[id].label = tree.label().value();
    graph.vertices[id].neighbours = {parent};
    return id;
  }
  int left = add_rooted(graph, tree.left(), id);
  int right = add_rooted(graph, tree.right(), id);
  graph.vertices[id].neighbours = {parent, left, right};
  return id;
}

}  // namespace

TreeGraph build_graph(const FramedTree& tree) {
  TreeGraph graph;
  // Roots of the two halves point at each other; patch after both exist.
  int first = add_rooted(graph, tree.first(), -1);
  int second = add_rooted(graph, tree.second(), first);
  graph.vertices[first].neighbours[0] = second;
  return graph;
}

RootedTree hang(const TreeGraph& graph, int at, int from) {
  const auto& vertex = graph.vertices[at];
  if (vertex.label > 0) return RootedTree::leaf(Label(vertex.label));
  const auto& n = vertex.neighbours;
  int i = 0;
  while (n[i] != from) ++i;
  return RootedTree::join(hang(graph, n[(i + 1) % 3], at), hang(graph, n[(i + 2) % 3], at));
}

SignedFramed canonicalize_signed(const FramedTree& tree) {
  TreeGraph graph = build_graph(tree);
  std::optional<SignedFramed> best;
  for (int u = 0; u < static_cast<int>(graph.vertices.size()); ++u) {
    for (int w : graph.vertices[u].neighbours) {
      if (w < u) continue;
      SignedRooted a = canonicalize_signed(hang(graph, u, w));
      SignedRooted b = canonicalize_signed(hang(graph, w, u));
      if (compare(a.form, b.form) > 0) std::swap(a, b);
      SignedFramed candidate{FramedTree(a.form, b.form), a.sign * b.sign, a.symmetric || b.symmetric};
      if (!best) {
        best = std::move(candidate);
        continue;
      }
      auto c = compare(candidate.form.first(), best->form.first());
      if (c == 0) c = compare(candidate.form.second(), best->form.second());
      if (c < 0) {
        candidate.symmetric = candidate.symmetric || best->symmetric;
        best = std::move(candidate);
      } else if (c == 0) {
        // Two edges presenting the same tree: an automorphism maps one onto
        // the other, and differing signs mean it reverses orientation.
        best->symmetric = best->symmetric || candidate.symmetric || candidate.sign != best->sign;
      } else {
        best->symmetric = best->symmetric || candidate.symmetric;
      }
    }
  }
  if (best->symmetric) best->sign = 1;
  return *best;
}

}  // namespace detail

RootedTree canonical_form(const RootedTree& tree) { return detail::canonicalize_signed(tree).form; }

FramedTree canonical_form(const FramedTree& tree) { return detail::canonicalize_signed(tree).form; }

TwistedTree canonical_form(const TwistedTree& tree) { return TwistedTree(canonical_form(tree.body())); }

CanonicalKey canonical(const RootedTree& tree) { return CanonicalKey(render(canonical_form(tree))); }
CanonicalKey canonical(const FramedTree& tree) { return CanonicalKey(render(canonical_form(tree))); }
CanonicalKey canonical(const TwistedTree& tree) { return CanonicalKey(render(canonical_form(tree))); }

bool is_isomorphic(const FramedTree& a, const FramedTree& b) { return canonical(a) == canonical(b); }
bool is_isomorphic(const TwistedTree& a, const TwistedTree& b) { return canonical(a) == canonical(b); }

// ---------------------------------------------------------------------------
// The t families and beta-badness

namespace {

RootedTree caterpillar(int ones) {
  RootedTree body = RootedTree::leaf(Label(2));
  for (int i = 0; i < ones; ++i) body = RootedTree::join(std::move(body), RootedTree::leaf(Label(1)));
  return body;
}

}  // namespace

FramedTree make_t(int n) {
  if (n < 1) throw DomainError("t_n is defined for n >= 1, got " + std::to_string(n));
  return FramedTree(caterpillar(n), RootedTree::leaf(Label(2)));
}

TwistedTree make_t_inf(int i) {
  if (i < 1) throw DomainError("t_i^inf is defined for i >= 1, got " + std::to_string(i));
  return TwistedTree(caterpillar(i));
}

std::optional<int> t_index(const FramedTree& tree) {
  int n = tree.order();
  if (n < 1 || tree.label_count(Label(2)) != 2 || tree.label_count(Label(1)) != n) return std::nullopt;
  if (canonical(tree) != canonical(make_t(n))) return std::nullopt;
  return n;
}

std::optional<int> t_inf_index(const TwistedTree& tree) {
  int i = tree.order();
  if (tree.label_count(Label(2)) != 1 || tree.label_count(Label(1)) != i) return std::nullopt;
  if (canonical(tree) != canonical(make_t_inf(i))) return std::nullopt;
  return i;
}

namespace {

void require_two_component(const RootedTree& tree) {
  if (tree.leaf_count() != tree.label_count(Label(1)) + tree.label_count(Label(2))) {
    throw DomainError("beta invariants are defined for 2-component links; tree " + render(tree) +
                      " has a label outside {1,2}");
  }
}

}  // namespace

void require_two_component(const FramedTree& tree) {
  if (tree.leaf_count() != tree.label_count(Label(1)) + tree.label_count(Label(2))) {
    throw DomainError("beta invariants are defined for 2-component links; tree " + render(tree) +
                      " has a label outside {1,2}");
  }
}

void require_two_component(const TwistedTree& tree) { require_two_component(tree.body()); }

bool is_beta_bad(const FramedTree& tree) {
  require_two_component(tree);
  return tree.label_count(Label(2)) <= 1 || t_index(tree).has_value();
}

bool is_beta_bad(const TwistedTree& tree) {
  require_two_component(tree);
  return tree.label_count(Label(2)) == 0;
}

}  // namespace wt
