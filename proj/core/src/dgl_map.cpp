#include "whale/dgl_map.hpp"

#include "whale/errors.hpp"

namespace whale {

DglMap::DglMap(FreeDglPtr source, DglAlgebraPtr target,
               std::vector<LieElement> values, std::string name)
    : source_(std::move(source)),
      target_(std::move(target)),
      values_(std::move(values)),
      name_(std::move(name)) {
  if (values_.size() != source_->generators()->size())
    throw ValidationError("map values must match source generator count");
  for (auto& v : values_)
    if (!v.generators()) v = LieElement(target_->generators());
}

LieElement DglMap::apply(const LieElement& x) const {
  if (!same_generators(x.generators(), source_->generators()))
    throw AlgebraMismatch("map applied to element outside its source");
  struct Rec {
    const DglMap& f;
    LieElement on_tree(const BracketTree& t) {
      if (t.is_leaf()) return f.values_[t.leaf_index()];
      return f.target_->bracket(on_tree(t.left()), on_tree(t.right()));
    }
  } rec{*this};
  LieElement out(target_->generators());
  for (const auto& [t, c] : x.terms()) out += c * rec.on_tree(t);
  return out;
}

std::vector<std::string> DglMap::validate() const {
  std::vector<std::string> out;
  const auto& gens = *source_->generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const LieElement& v = values_[i];
    if (!v.empty()) {
      for (const auto& [t, c] : v.terms())
        if (t.degree() != gens.degree(i)) {
          out.push_back("value of '" + gens.name(i) + "' is not degree-0");
          break;
        }
    }
    // chain condition: psi(d v) = d(psi v)
    const LieElement lhs = apply(source_->differential_of(i));
    const LieElement rhs = target_->differential(v);
    if (!target_->is_zero(lhs - rhs))
      out.push_back("map does not commute with d on '" + gens.name(i) + "'");
  }
  return out;
}

DglMapPtr DglMap::identity(const FreeDglPtr& algebra) {
  std::vector<LieElement> values;
  for (std::size_t i = 0; i < algebra->generators()->size(); ++i)
    values.push_back(algebra->gen(i));
  return std::make_shared<const DglMap>(algebra, algebra, std::move(values),
                                        "id");
}

DglMapPtr compose(const DglMapPtr& phi, const DglMapPtr& psi,
                  std::string name) {
  if (!same_generators(psi->target()->generators(),
                       phi->source()->generators()))
    throw AlgebraMismatch("compose: inner target does not match outer source");
  std::vector<LieElement> values;
  for (std::size_t i = 0; i < psi->source()->generators()->size(); ++i)
    values.push_back(phi->apply(psi->value(i)));
  if (name.empty()) name = phi->name() + "*" + psi->name();
  return std::make_shared<const DglMap>(psi->source(), phi->target(),
                                        std::move(values), std::move(name));
}

DglMapPtr zero_map(const FreeDglPtr& source, const DglAlgebraPtr& target,
                   std::string name) {
  std::vector<LieElement> values(source->generators()->size(),
                                 LieElement(target->generators()));
  return std::make_shared<const DglMap>(source, target, std::move(values),
                                        std::move(name));
}

}  // namespace whale
