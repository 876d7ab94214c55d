#pragma once

// Framed trees modulo antisymmetry and IHX.
//
// An oriented tree is a FramedTree presentation read with the cyclic order
// (parent, left, right) at every trivalent vertex. Swapping the children of
// one vertex negates the tree. canonical_signed() maps a presentation to its
// isomorphism class together with the sign relating the presentation to the
// class's canonical orientation. A tree with an orientation-reversing
// automorphism equals its own negative and is 2-torsion.
//
// For every internal edge the Jacobi form of IHX,
//   <((A,B),C),D> + <((B,C),A),D> + <((C,A),B),D> = 0,
// is a relator. reduce() returns the canonical residue of an integer
// combination modulo the lattice spanned by all IHX relators and the 2T
// relators of symmetric trees.

#include <array>
#include <map>
#include <vector>

#include "wt/laurent.hpp"
#include "wt/tree.hpp"

namespace wt {

inline constexpr int kDefaultIhxBound = 4;

struct SignedKey {
  CanonicalKey key;
  int sign = 1;
  bool symmetric = false;
};

SignedKey canonical_signed(const FramedTree& presentation);

/// Integer combination of framed-tree classes, keyed by canonical key.
class TreeVector {
 public:
  TreeVector() = default;

  void add(const CanonicalKey& key, const BigInt& coefficient);
  /// Adds coefficient * (oriented class of `presentation`).
  void add(const FramedTree& presentation, const BigInt& coefficient);

  const std::map<CanonicalKey, BigInt>& terms() const noexcept { return terms_; }
  BigInt coefficient(const CanonicalKey& key) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  TreeVector& operator+=(const TreeVector& other);
  friend TreeVector operator+(TreeVector a, const TreeVector& b) { return a += b; }
  friend TreeVector operator*(const BigInt& scale, const TreeVector& v);

  friend bool operator==(const TreeVector&, const TreeVector&) = default;

 private:
  std::map<CanonicalKey, BigInt> terms_;
};

/// "INT * <tree>" lines; "0" when empty.
std::string render(const TreeVector& v);

/// Sorted label values; the multiset of leaves of a framed tree.
std::vector<int> label_multiset(const FramedTree& tree);

/// All isomorphism classes of framed trees of the given order whose leaves
/// carry exactly `labels`, in ascending key order. Throws DomainError when
/// order > bound or |labels| != order + 2.
std::vector<CanonicalKey> enumerate_framed(int order, std::vector<int> labels, int bound = kDefaultIhxBound);

/// One IHX relation: the three oriented presentations and their sum.
struct IhxRelation {
  std::array<FramedTree, 3> trees;
  TreeVector vector;
};

/// Relations for every class and every edge joining two trivalent vertices.
std::vector<IhxRelation> ihx_relations(int order, std::vector<int> labels, int bound = kDefaultIhxBound);
std::vector<TreeVector> ihx_relators(int order, std::vector<int> labels, int bound = kDefaultIhxBound);

class RelationLattice {
 public:
  RelationLattice(int order, std::vector<int> labels, int bound = kDefaultIhxBound);

  int order() const noexcept { return order_; }
  const std::vector<int>& labels() const noexcept { return labels_; }
  const std::vector<CanonicalKey>& basis() const noexcept { return basis_; }
  /// IHX relators followed by 2T relators for symmetric classes.
  const std::vector<TreeVector>& relators() const noexcept { return relators_; }
  /// Classes T with 2T = 0 by antisymmetry.
  const std::vector<CanonicalKey>& symmetric_classes() const noexcept { return symmetric_; }

  /// Canonical coset representative. Throws DomainError for keys outside
  /// the basis.
  TreeVector reduce(const TreeVector& v) const;
  bool contains(const TreeVector& v) const { return reduce(v).is_zero(); }

 private:
  std::vector<BigInt> dense(const TreeVector& v) const;

  int order_;
  std::vector<int> labels_;
  std::vector<CanonicalKey> basis_;
  std::map<CanonicalKey, std::size_t> index_;
  std::vector<TreeVector> relators_;
  std::vector<CanonicalKey> symmetric_;
  // Row echelon (Hermite) basis of the relator lattice; pivots positive.
  std::vector<std::vector<BigInt>> echelon_;
  std::vector<std::size_t> pivot_columns_;
};

/// Shared, lazily built lattice for (order, labels). Thread-safe.
const RelationLattice& lattice_for(int order, std::vector<int> labels, int bound = kDefaultIhxBound);

/// Residue of a homogeneous combination (all keys of one order and one label
/// multiset). Throws DomainError for mixed input.
TreeVector reduce(const TreeVector& v, int bound = kDefaultIhxBound);
bool is_zero_mod_ihx_as(const TreeVector& v, int bound = kDefaultIhxBound);

}  // namespace wt
