#include "whale/finite_lie.hpp"

#include <cassert>

#include "whale/errors.hpp"

namespace whale {

FiniteLie::FiniteLie(
    GeneratorSetPtr basis,
    std::map<std::pair<std::size_t, std::size_t>, LieElement> brackets,
    std::vector<LieElement> d_values, int truncation, std::string name)
    : gens_(std::move(basis)),
      table_(std::move(brackets)),
      d_values_(std::move(d_values)),
      truncation_(truncation),
      name_(std::move(name)) {
  if (d_values_.empty()) d_values_.assign(gens_->size(), LieElement(gens_));
  if (d_values_.size() != gens_->size())
    throw ValidationError("differential values must match basis size");
  for (auto& v : d_values_)
    if (!v.generators()) v = LieElement(gens_);
  for (const auto& [key, val] : table_) {
    if (key.first > key.second)
      throw ValidationError("bracket table keys must satisfy i <= j");
    if (key.second >= gens_->size())
      throw ValidationError("bracket table index out of range");
  }
  for (std::size_t i = 0; i < gens_->size(); ++i)
    by_degree_[gens_->degree(i)].push_back(i);
}

LieElement FiniteLie::leaf_bracket(std::size_t i, std::size_t j) const {
  const int total = gens_->degree(i) + gens_->degree(j);
  check_degree(total, "bracket");
  if (i == j && gens_->degree(i) % 2 == 0) return LieElement(gens_);
  const bool swap = i > j;
  auto it = table_.find(swap ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == table_.end()) return LieElement(gens_);
  LieElement out = it->second;
  if (swap) {
    // [e_i, e_j] = (-1)^{|i||j|+1} [e_j, e_i]
    const int s = gens_->degree(i) * gens_->degree(j) + 1;
    if (s % 2 != 0) out = -out;
  }
  return out;
}

LieElement FiniteLie::normalize(const LieElement& x) const {
  if (!same_generators(x.generators(), gens_))
    throw AlgebraMismatch("element not over this algebra");
  struct Rec {
    const FiniteLie& alg;
    LieElement on_tree(const BracketTree& t) {
      if (t.is_leaf())
        return LieElement::generator(alg.gens_, t.leaf_index());
      return alg.bracket(on_tree(t.left()), on_tree(t.right()));
    }
  } rec{*this};
  LieElement out(gens_);
  for (const auto& [t, c] : x.terms()) {
    if (t.is_leaf())
      out += LieElement::term(gens_, c, t);
    else
      out += c * rec.on_tree(t);
  }
  return out;
}

LieElement FiniteLie::bracket(const LieElement& x, const LieElement& y) const {
  const LieElement nx = normalize(x);
  const LieElement ny = normalize(y);
  LieElement out(gens_);
  for (const auto& [tx, cx] : nx.terms())
    for (const auto& [ty, cy] : ny.terms())
      out += (cx * cy) * leaf_bracket(tx.leaf_index(), ty.leaf_index());
  return out;
}

LieElement FiniteLie::differential(const LieElement& x) const {
  const LieElement nx = normalize(x);
  LieElement out(gens_);
  for (const auto& [t, c] : nx.terms()) out += c * d_values_[t.leaf_index()];
  return out;
}

std::size_t FiniteLie::dim(int degree) const {
  if (degree < 1) return 0;
  check_degree(degree, "dim");
  auto it = by_degree_.find(degree);
  return it == by_degree_.end() ? 0 : it->second.size();
}

LieElement FiniteLie::basis_element(int degree, std::size_t i) const {
  check_degree(degree, "basis_element");
  return LieElement::generator(gens_, by_degree_.at(degree)[i]);
}

Vec FiniteLie::coordinates(const LieElement& x, int degree) const {
  check_degree(degree, "coordinates");
  const LieElement nx = normalize(x).part_of_degree(degree);
  auto it = by_degree_.find(degree);
  const std::vector<std::size_t> empty;
  const auto& idx = it == by_degree_.end() ? empty : it->second;
  Vec out(idx.size(), Rational(0));
  for (const auto& [t, c] : nx.terms()) {
    auto pos = std::find(idx.begin(), idx.end(), t.leaf_index());
    assert(pos != idx.end());
    out[pos - idx.begin()] = c;
  }
  return out;
}

bool FiniteLie::is_zero(const LieElement& x) const {
  return normalize(x).empty();
}

std::vector<std::string> FiniteLie::validate() const {
  std::vector<std::string> out;
  const std::size_t n = gens_->size();
  auto within = [&](int deg) {
    return truncation_ == kNoTruncation || deg <= truncation_;
  };

  for (const auto& [key, val] : table_) {
    const auto [i, j] = key;
    const int total = gens_->degree(i) + gens_->degree(j);
    for (const auto& [t, c] : val.terms()) {
      if (!t.is_leaf()) {
        out.push_back("bracket table entries must be basis combinations");
        continue;
      }
      if (t.degree() != total)
        out.push_back("[" + gens_->name(i) + ", " + gens_->name(j) +
                      "] has an entry of wrong degree");
    }
    if (i == j && gens_->degree(i) % 2 == 0 && !val.empty())
      out.push_back("[" + gens_->name(i) + ", " + gens_->name(i) +
                    "] must vanish for even degree");
  }

  // Jacobi: [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]]
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const int total =
            gens_->degree(i) + gens_->degree(j) + gens_->degree(k);
        if (!within(total)) continue;
        const LieElement x = gen(i), y = gen(j), z = gen(k);
        LieElement lhs = bracket(x, bracket(y, z));
        LieElement rhs = bracket(bracket(x, y), z);
        LieElement third = bracket(y, bracket(x, z));
        if ((gens_->degree(i) * gens_->degree(j)) % 2 != 0)
          rhs -= third;
        else
          rhs += third;
        if (!(lhs - rhs).empty()) {
          out.push_back("Jacobi fails on (" + gens_->name(i) + ", " +
                        gens_->name(j) + ", " + gens_->name(k) + ")");
        }
      }

  for (std::size_t i = 0; i < n; ++i) {
    const LieElement& dv = d_values_[i];
    if (dv.empty()) continue;
    for (const auto& [t, c] : dv.terms())
      if (t.degree() != gens_->degree(i) - 1) {
        out.push_back("d(" + gens_->name(i) + ") has wrong degree");
        break;
      }
    if (!differential(dv).empty())
      out.push_back("d(d(" + gens_->name(i) + ")) != 0");
  }

  // Leibniz: d[x,y] = [dx,y] + (-1)^{|x|}[x,dy]
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const int total = gens_->degree(i) + gens_->degree(j);
      if (!within(total)) continue;
      const LieElement x = gen(i), y = gen(j);
      LieElement lhs = differential(bracket(x, y));
      LieElement rhs = bracket(differential(x), y);
      LieElement second = bracket(x, differential(y));
      if (gens_->degree(i) % 2 != 0)
        rhs -= second;
      else
        rhs += second;
      if (!(lhs - rhs).empty())
        out.push_back("Leibniz fails on (" + gens_->name(i) + ", " +
                      gens_->name(j) + ")");
    }
  return out;
}

FiniteLiePtr homology_algebra(const DglAlgebra& algebra, int cap,
                              std::string name) {
  std::vector<Generator> basis_gens;
  std::vector<AlgebraHomology> hom(cap + 1);
  std::vector<std::vector<std::size_t>> index(cap + 1);
  for (int d = 1; d + 1 <= cap + 1 && d <= cap; ++d) {
    hom[d] = homology(algebra, d);
    for (std::size_t i = 0; i < hom[d].dimension; ++i) {
      index[d].push_back(basis_gens.size());
      basis_gens.push_back(
          {"h" + std::to_string(d) + "_" + std::to_string(i), d});
    }
  }
  auto gs = std::make_shared<const GeneratorSet>(basis_gens);

  std::map<std::pair<std::size_t, std::size_t>, LieElement> table;
  for (int d1 = 1; d1 <= cap; ++d1)
    for (int d2 = d1; d1 + d2 <= cap; ++d2)
      for (std::size_t i = 0; i < hom[d1].dimension; ++i)
        for (std::size_t j = 0; j < hom[d2].dimension; ++j) {
          const std::size_t gi = index[d1][i];
          const std::size_t gj = index[d2][j];
          if (gi > gj) continue;
          const LieElement prod = algebra.bracket(
              hom[d1].representatives[i], hom[d2].representatives[j]);
          if (algebra.is_zero(prod)) continue;
          const Vec coords =
              hom[d1 + d2].quotient.project(algebra.coordinates(prod, d1 + d2));
          LieElement entry(gs);
          for (std::size_t k = 0; k < coords.size(); ++k)
            if (coords[k] != 0)
              entry += coords[k] * LieElement::generator(gs, index[d1 + d2][k]);
          if (!entry.empty()) table.emplace(std::make_pair(gi, gj), entry);
        }

  return std::make_shared<const FiniteLie>(gs, std::move(table),
                                           std::vector<LieElement>{}, cap,
                                           std::move(name));
}

}  // namespace whale
