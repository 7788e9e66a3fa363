#pragma once

#include "whale/algebra.hpp"

namespace whale {

/// Degree-0 map of DG Lie algebras, free source, given by generator values
/// and extended multiplicatively.
class DglMap {
 public:
  DglMap(FreeDglPtr source, DglAlgebraPtr target,
         std::vector<LieElement> values, std::string name = {});

  const FreeDglPtr& source() const { return source_; }
  const DglAlgebraPtr& target() const { return target_; }
  const std::string& name() const { return name_; }
  const LieElement& value(std::size_t gen_index) const {
    return values_[gen_index];
  }

  LieElement apply(const LieElement& x) const;

  /// Degree preservation and the chain condition on every generator.
  std::vector<std::string> validate() const;

  static std::shared_ptr<const DglMap> identity(const FreeDglPtr& algebra);

 private:
  FreeDglPtr source_;
  DglAlgebraPtr target_;
  std::vector<LieElement> values_;
  std::string name_;
};

using DglMapPtr = std::shared_ptr<const DglMap>;

/// phi after psi; requires psi's target and phi's source to agree as free
/// algebras (the usual lifting situation).
DglMapPtr compose(const DglMapPtr& phi, const DglMapPtr& psi,
                  std::string name = {});

/// The zero map between the given algebras.
DglMapPtr zero_map(const FreeDglPtr& source, const DglAlgebraPtr& target,
                   std::string name = {});

}  // namespace whale
