#include "whale/extension.hpp"

#include "whale/errors.hpp"

namespace whale {

std::size_t ExtensionAlgebra::a_index(std::size_t i) const {
  return base_->generators()->size() + i;
}

LieElement ExtensionAlgebra::a_element(std::size_t i) const {
  return LieElement::generator(ext_->generators(), a_index(i));
}

std::size_t ExtensionAlgebra::suspended_index(std::size_t i,
                                              std::size_t base_gen) const {
  const std::size_t nv = base_->generators()->size();
  return nv + degrees_.size() + i * nv + base_gen;
}

ExtensionAlgebra::ExtensionAlgebra(FreeDglPtr base,
                                   std::vector<int> sphere_degrees)
    : base_(std::move(base)), degrees_(std::move(sphere_degrees)) {
  for (int p : degrees_)
    if (p < 2) throw DegreeError("extension degrees must be > 1");

  const GeneratorSet& V = *base_->generators();
  const std::size_t nv = V.size();
  const std::size_t na = degrees_.size();

  std::vector<Generator> gens;
  gens.reserve(nv + na + na * nv);
  for (std::size_t v = 0; v < nv; ++v) gens.push_back(V[v]);
  for (std::size_t i = 0; i < na; ++i)
    gens.push_back({"@a" + std::to_string(i + 1), degrees_[i] - 1});
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t v = 0; v < nv; ++v)
      gens.push_back({"@S" + std::to_string(i + 1) + "(" + V.name(v) + ")",
                      V.degree(v) + degrees_[i]});
  auto ext_gens = std::make_shared<const GeneratorSet>(std::move(gens));

  // base generators keep their indices, so trees transfer across by reuse of
  // the index space; only the generator-set pointer changes.
  auto relabel = [&](const LieElement& x) {
    LieElement out(ext_gens);
    struct Rec {
      const GeneratorSetPtr& gs;
      BracketTree on(const BracketTree& t) {
        if (t.is_leaf())
          return BracketTree::leaf(t.leaf_index(), gs->degree(t.leaf_index()));
        return BracketTree::bracket(on(t.left()), on(t.right()));
      }
    } rec{ext_gens};
    for (const auto& [t, c] : x.terms())
      out += LieElement::term(ext_gens, c, rec.on(t));
    return out;
  };

  // provisional algebra with zero differential hosts the evaluations needed
  // to express del on the suspended generators
  std::vector<LieElement> zero_d(ext_gens->size(), LieElement(ext_gens));
  auto ext0 = std::make_shared<const FreeDgl>(ext_gens, zero_d);

  std::vector<LieElement> lambda_values;
  for (std::size_t v = 0; v < nv; ++v)
    lambda_values.push_back(LieElement::generator(ext_gens, v));
  auto lambda0 = std::make_shared<const DglMap>(
      base_, std::static_pointer_cast<const DglAlgebra>(ext0), lambda_values,
      "lambda");

  std::vector<PsiDerivation> susp0;
  for (std::size_t i = 0; i < na; ++i) {
    std::vector<LieElement> values;
    for (std::size_t v = 0; v < nv; ++v)
      values.push_back(
          LieElement::generator(ext_gens, suspended_index(i, v)));
    susp0.emplace_back(lambda0, degrees_[i], std::move(values));
  }

  std::vector<LieElement> d_values(ext_gens->size(), LieElement(ext_gens));
  for (std::size_t v = 0; v < nv; ++v)
    d_values[v] = relabel(base_->differential_of(v));
  for (std::size_t i = 0; i < na; ++i) {
    const int p = degrees_[i];
    for (std::size_t v = 0; v < nv; ++v) {
      LieElement val = formal_bracket(
          LieElement::generator(ext_gens, a_index(i)),
          LieElement::generator(ext_gens, v));
      if ((p - 1) % 2 != 0) val = -val;
      LieElement tail = susp0[i].evaluate(base_->differential_of(v));
      if (p % 2 != 0) tail = -tail;
      d_values[suspended_index(i, v)] = val + tail;
    }
  }

  ext_ = std::make_shared<const FreeDgl>(ext_gens, std::move(d_values),
                                         base_->name().empty()
                                             ? std::string{}
                                             : base_->name() + "(a)");
  lambda_ = std::make_shared<const DglMap>(
      base_, std::static_pointer_cast<const DglAlgebra>(ext_),
      std::move(lambda_values), "lambda");
  id_ext_ = DglMap::identity(ext_);

  for (std::size_t i = 0; i < na; ++i) {
    std::vector<LieElement> values;
    for (std::size_t v = 0; v < nv; ++v)
      values.push_back(
          LieElement::generator(ext_gens, suspended_index(i, v)));
    suspensions_.emplace_back(lambda_, degrees_[i], std::move(values));
  }
  for (std::size_t i = 0; i < na; ++i) {
    std::vector<LieElement> values(ext_gens->size(), LieElement(ext_gens));
    for (std::size_t v = 0; v < nv; ++v)
      values[v] = LieElement::generator(ext_gens, suspended_index(i, v));
    thetas_.emplace_back(id_ext_, degrees_[i], std::move(values));
  }
}

}  // namespace whale
