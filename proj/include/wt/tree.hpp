#pragma once

// Labeled unitrivalent trees.
//
// A RootedTree is a non-associative bracketing of link-component labels.
// Gluing two rooted trees at their roots gives a FramedTree <J,K>; relabeling
// the root of a rooted tree by the twist symbol gives a TwistedTree J^inf.
// Trees are unordered: child order and the choice of gluing edge carry no
// meaning, and canonical() reduces any spelling to a unique key.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace wt {

class Label {
 public:
  /// Throws DomainError for values < 1.
  explicit Label(int value);

  int value() const noexcept { return value_; }

  auto operator<=>(const Label&) const = default;

 private:
  int value_;
};

class RootedTree {
 public:
  static RootedTree leaf(Label label);
  static RootedTree join(RootedTree left, RootedTree right);

  bool is_leaf() const noexcept;
  /// Precondition: is_leaf().
  Label label() const;
  /// Precondition: !is_leaf().
  const RootedTree& left() const;
  const RootedTree& right() const;

  /// Number of trivalent vertices (leaves - 1).
  int order() const noexcept;
  int leaf_count() const noexcept;
  int label_count(Label label) const noexcept;

  /// Structural (presentation) equality; child order matters.
  friend bool operator==(const RootedTree& a, const RootedTree& b);

 private:
  struct Node;
  explicit RootedTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Two rooted trees glued at their roots: <J,K>. <J,K> and <K,J> are the same
/// tree; the presentation order is kept only for rendering.
class FramedTree {
 public:
  FramedTree(RootedTree first, RootedTree second);

  const RootedTree& first() const noexcept { return first_; }
  const RootedTree& second() const noexcept { return second_; }

  int order() const noexcept { return first_.order() + second_.order(); }
  int leaf_count() const noexcept { return first_.leaf_count() + second_.leaf_count(); }
  int label_count(Label label) const noexcept {
    return first_.label_count(label) + second_.label_count(label);
  }

  friend bool operator==(const FramedTree&, const FramedTree&) = default;

 private:
  RootedTree first_;
  RootedTree second_;
};

/// A rooted tree whose root carries the twist symbol. The body must have at
/// least one trivalent vertex.
class TwistedTree {
 public:
  explicit TwistedTree(RootedTree body);

  const RootedTree& body() const noexcept { return body_; }

  int order() const noexcept { return body_.order(); }
  int label_count(Label label) const noexcept { return body_.label_count(label); }

  friend bool operator==(const TwistedTree&, const TwistedTree&) = default;

 private:
  RootedTree body_;
};

using AnyTree = std::variant<RootedTree, FramedTree, TwistedTree>;

/// Grammar:
///   rooted  ::= INT | '(' rooted ',' rooted ')'
///   framed  ::= '<' rooted ',' rooted '>'
///   twisted ::= rooted '^inf'
/// Whitespace is insignificant. Throws ParseError.
AnyTree parse_tree(std::string_view text);
RootedTree parse_rooted(std::string_view text);
FramedTree parse_framed(std::string_view text);
TwistedTree parse_twisted(std::string_view text);

/// Presentation spelling (not canonical unless the input was canonical).
std::string render(const RootedTree& tree);
std::string render(const FramedTree& tree);
std::string render(const TwistedTree& tree);
std::string render(const AnyTree& tree);

int order(const AnyTree& tree);
int label_count(const AnyTree& tree, Label label);

/// Isomorphism-class key. Its text is the canonical spelling of the tree, so
/// it parses back to a representative of the class.
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::string text) : text_(std::move(text)) {}

  const std::string& text() const noexcept { return text_; }

  auto operator<=>(const CanonicalKey&) const = default;

 private:
  std::string text_;
};

/// Child-order normal form of a rooted tree: at every vertex the smaller
/// subtree (leaves before joins, labels ascending) comes first.
RootedTree canonical_form(const RootedTree& tree);
/// Normal form over child orders and over every edge at which the tree can
/// be presented as <J,K>.
FramedTree canonical_form(const FramedTree& tree);
TwistedTree canonical_form(const TwistedTree& tree);

CanonicalKey canonical(const RootedTree& tree);
CanonicalKey canonical(const FramedTree& tree);
CanonicalKey canonical(const TwistedTree& tree);

bool is_isomorphic(const FramedTree& a, const FramedTree& b);
bool is_isomorphic(const TwistedTree& a, const TwistedTree& b);

/// Total order on rooted-tree presentations: leaves before joins, leaves by
/// label, joins lexicographically by (left, right).
std::strong_ordering compare(const RootedTree& a, const RootedTree& b);

/// t_n: caterpillar with two 2-labels at its ends and n 1-labels. n >= 1.
FramedTree make_t(int n);
/// t_i^inf: caterpillar with the twist root at one end, a 2-label at the
/// other and i 1-labels. i >= 1.
TwistedTree make_t_inf(int i);

/// n if the tree is isomorphic to t_n.
std::optional<int> t_index(const FramedTree& tree);
/// i if the tree is isomorphic to t_i^inf.
std::optional<int> t_inf_index(const TwistedTree& tree);

/// Throws DomainError unless every label is 1 or 2.
void require_two_component(const FramedTree& tree);
void require_two_component(const TwistedTree& tree);

bool is_beta_bad(const FramedTree& tree);
bool is_beta_bad(const TwistedTree& tree);

}  // namespace wt
