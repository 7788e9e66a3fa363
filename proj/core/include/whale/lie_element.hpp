#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "whale/generators.hpp"
#include "whale/rational.hpp"

namespace whale {

/// Immutable binary bracket tree over generator indices. Every tree is
/// homogeneous; the degree is the sum of the leaf degrees.
class BracketTree {
 public:
  static BracketTree leaf(std::size_t gen_index, int degree);
  static BracketTree bracket(const BracketTree& l, const BracketTree& r);

  bool is_leaf() const { return node_->left == nullptr; }
  std::size_t leaf_index() const { return node_->gen; }
  BracketTree left() const { return BracketTree(node_->left); }
  BracketTree right() const { return BracketTree(node_->right); }
  int degree() const { return node_->degree; }
  int length() const { return node_->length; }

  /// Total structural order used to keep term lists canonical.
  std::strong_ordering operator<=>(const BracketTree& other) const {
    return compare(*node_, *other.node_);
  }
  bool operator==(const BracketTree& other) const {
    return (*this <=> other) == std::strong_ordering::equal;
  }

 private:
  struct Node {
    std::size_t gen = 0;
    int degree = 0;
    int length = 1;
    std::shared_ptr<const Node> left, right;
  };
  explicit BracketTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static std::strong_ordering compare(const Node& a, const Node& b);
  std::shared_ptr<const Node> node_;
};

/// Formal rational linear combination of bracket trees over a fixed
/// generator set. This is a *formal* sum: semantic equality is decided by
/// the tensor normal form, not by the term list.
class LieElement {
 public:
  LieElement() = default;
  explicit LieElement(GeneratorSetPtr gens) : gens_(std::move(gens)) {}

  static LieElement generator(const GeneratorSetPtr& gens, std::size_t index);
  static LieElement term(const GeneratorSetPtr& gens, Rational coef,
                         const BracketTree& tree);

  const GeneratorSetPtr& generators() const { return gens_; }
  const std::map<BracketTree, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  LieElement& operator+=(const LieElement& other);
  LieElement& operator-=(const LieElement& other);
  LieElement& operator*=(const Rational& c);
  friend LieElement operator+(LieElement a, const LieElement& b) {
    a += b;
    return a;
  }
  friend LieElement operator-(LieElement a, const LieElement& b) {
    a -= b;
    return a;
  }
  friend LieElement operator*(const Rational& c, LieElement a) {
    a *= c;
    return a;
  }
  LieElement operator-() const;

  /// Formal bracket [x, y]: pairwise trees, no relations applied.
  friend LieElement formal_bracket(const LieElement& x, const LieElement& y);

  /// Degree if every term agrees, nullopt for 0 or mixed elements.
  std::optional<int> homogeneous_degree() const;
  std::map<int, LieElement> graded_parts() const;
  LieElement part_of_degree(int n) const;
  /// Terms of a given bracket length (1 = linear part).
  LieElement part_of_length(int len) const;
  int max_length() const;

  std::string to_text() const;

 private:
  void check_same(const LieElement& other) const;
  GeneratorSetPtr gens_;
  std::map<BracketTree, Rational> terms_;
};

}  // namespace whale
