#pragma once

#include "whale/rel.hpp"

namespace whale {

/// The extension algebra L(a_1, ..., a_n) of a free DGL L = L(V; d):
/// free on V, the a_i (degree p_i - 1) and suspended copies V^{a_i}
/// (degree shift p_i), with
///   del(v) = d(v), del(a_i) = 0,
///   del(S_{a_i} v) = (-1)^{p_i - 1}[a_i, v] + (-1)^{p_i} S_{a_i}(d v).
class ExtensionAlgebra {
 public:
  ExtensionAlgebra(FreeDglPtr base, std::vector<int> sphere_degrees);

  const FreeDglPtr& base() const { return base_; }
  const FreeDglPtr& algebra() const { return ext_; }
  const DglMapPtr& inclusion() const { return lambda_; }

  std::size_t attached_count() const { return degrees_.size(); }
  int sphere_degree(std::size_t i) const { return degrees_[i]; }

  std::size_t a_index(std::size_t i) const;
  LieElement a_element(std::size_t i) const;
  std::size_t suspended_index(std::size_t i, std::size_t base_gen) const;

  /// Suspension S_{a_i} in Der_{p_i}(L, L(a...); lambda).
  const PsiDerivation& suspension(std::size_t i) const {
    return suspensions_[i];
  }
  /// Theta_{a_i} in Der_{p_i}(L(a...)) over the identity: S_{a_i} on V,
  /// zero on every a_j and every suspended copy.
  const PsiDerivation& theta(std::size_t i) const { return thetas_[i]; }

  /// Transport an element of the base along the inclusion.
  LieElement include(const LieElement& x) const { return lambda_->apply(x); }

 private:
  FreeDglPtr base_;
  std::vector<int> degrees_;
  FreeDglPtr ext_;
  DglMapPtr lambda_;
  DglMapPtr id_ext_;
  std::vector<PsiDerivation> suspensions_;
  std::vector<PsiDerivation> thetas_;
};

}  // namespace whale
