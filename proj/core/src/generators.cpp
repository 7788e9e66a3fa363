#include "whale/generators.hpp"

namespace whale {

GeneratorSet::GeneratorSet(std::vector<Generator> gens)
    : gens_(std::move(gens)) {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].degree < 1)
      throw ValidationError("generator '" + gens_[i].name +
                            "' has degree < 1; algebras must be connected");
    auto [it, inserted] = by_name_.emplace(gens_[i].name, i);
    if (!inserted)
      throw ValidationError("duplicate generator name '" + gens_[i].name + "'");
    max_degree_ = std::max(max_degree_, gens_[i].degree);
  }
}

std::optional<std::size_t> GeneratorSet::index_of(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

}  // namespace whale
