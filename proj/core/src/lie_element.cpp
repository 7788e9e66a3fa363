#include "whale/lie_element.hpp"

#include <sstream>

namespace whale {

BracketTree BracketTree::leaf(std::size_t gen_index, int degree) {
  auto n = std::make_shared<Node>();
  n->gen = gen_index;
  n->degree = degree;
  n->length = 1;
  return BracketTree(std::move(n));
}

BracketTree BracketTree::bracket(const BracketTree& l, const BracketTree& r) {
  auto n = std::make_shared<Node>();
  n->left = l.node_;
  n->right = r.node_;
  n->degree = l.degree() + r.degree();
  n->length = l.length() + r.length();
  return BracketTree(std::move(n));
}

std::strong_ordering BracketTree::compare(const Node& a, const Node& b) {
  if (auto c = a.length <=> b.length; c != 0) return c;
  if (auto c = a.degree <=> b.degree; c != 0) return c;
  if (a.left == nullptr && b.left == nullptr) return a.gen <=> b.gen;
  if (a.left == nullptr) return std::strong_ordering::less;
  if (b.left == nullptr) return std::strong_ordering::greater;
  if (auto c = compare(*a.left, *b.left); c != 0) return c;
  return compare(*a.right, *b.right);
}

LieElement LieElement::generator(const GeneratorSetPtr& gens,
                                 std::size_t index) {
  return term(gens, Rational(1),
              BracketTree::leaf(index, gens->degree(index)));
}

LieElement LieElement::term(const GeneratorSetPtr& gens, Rational coef,
                            const BracketTree& tree) {
  LieElement e(gens);
  if (coef != 0) e.terms_.emplace(tree, std::move(coef));
  return e;
}

void LieElement::check_same(const LieElement& other) const {
  if (!gens_ || !other.gens_) {
    if (terms_.empty() && other.terms_.empty()) return;
    throw AlgebraMismatch("element without a generator set");
  }
  if (!same_generators(gens_, other.gens_))
    throw AlgebraMismatch("elements over different generator sets");
}

LieElement& LieElement::operator+=(const LieElement& other) {
  if (!gens_) gens_ = other.gens_;
  check_same(other);
  for (const auto& [t, c] : other.terms_) {
    auto it = terms_.find(t);
    if (it == terms_.end()) {
      terms_.emplace(t, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& other) {
  return *this += -other;
}

LieElement& LieElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, v] : terms_) v *= c;
  return *this;
}

LieElement LieElement::operator-() const {
  LieElement e(*this);
  for (auto& [t, v] : e.terms_) v = -v;
  return e;
}

LieElement formal_bracket(const LieElement& x, const LieElement& y) {
  x.check_same(y);
  LieElement out(x.gens_ ? x.gens_ : y.gens_);
  for (const auto& [tx, cx] : x.terms_)
    for (const auto& [ty, cy] : y.terms_) {
      const Rational c = cx * cy;
      auto tree = BracketTree::bracket(tx, ty);
      auto it = out.terms_.find(tree);
      if (it == out.terms_.end()) {
        out.terms_.emplace(std::move(tree), c);
      } else {
        it->second += c;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  return out;
}

std::optional<int> LieElement::homogeneous_degree() const {
  std::optional<int> deg;
  for (const auto& [t, c] : terms_) {
    if (!deg)
      deg = t.degree();
    else if (*deg != t.degree())
      return std::nullopt;
  }
  return deg;
}

std::map<int, LieElement> LieElement::graded_parts() const {
  std::map<int, LieElement> parts;
  for (const auto& [t, c] : terms_) {
    auto [it, fresh] = parts.try_emplace(t.degree(), gens_);
    it->second += LieElement::term(gens_, c, t);
  }
  return parts;
}

LieElement LieElement::part_of_degree(int n) const {
  LieElement out(gens_);
  for (const auto& [t, c] : terms_)
    if (t.degree() == n) out += LieElement::term(gens_, c, t);
  return out;
}

LieElement LieElement::part_of_length(int len) const {
  LieElement out(gens_);
  for (const auto& [t, c] : terms_)
    if (t.length() == len) out += LieElement::term(gens_, c, t);
  return out;
}

int LieElement::max_length() const {
  int len = 0;
  for (const auto& [t, c] : terms_) len = std::max(len, t.length());
  return len;
}

namespace {
void tree_text(const BracketTree& t, const GeneratorSet& gens,
               std::ostringstream& os) {
  if (t.is_leaf()) {
    os << gens.name(t.leaf_index());
    return;
  }
  os << '[';
  tree_text(t.left(), gens, os);
  os << ", ";
  tree_text(t.right(), gens, os);
  os << ']';
}
}  // namespace

std::string LieElement::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    Rational coef = c;
    if (first) {
      if (coef < 0) {
        os << "- ";
        coef = -coef;
      }
    } else {
      os << (coef < 0 ? " - " : " + ");
      if (coef < 0) coef = -coef;
    }
    if (coef != 1) os << to_string(coef) << ' ';
    tree_text(t, *gens_, os);
    first = false;
  }
  return os.str();
}

}  // namespace whale
