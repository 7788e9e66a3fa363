#pragma once

#include <map>

#include "whale/algebra.hpp"

namespace whale {

/// Finite-type graded Lie algebra given by structure constants, with an
/// optional differential (often zero, as for a homology algebra). May be a
/// truncation: degrees above truncation_degree() are not claimed to be
/// faithful and accessing them raises CapTooLow.
class FiniteLie : public DglAlgebra {
 public:
  /// brackets: [e_i, e_j] for i <= j as leaf combinations; omitted pairs are
  /// zero. d_values: linear differential on basis elements, may be empty.
  FiniteLie(GeneratorSetPtr basis,
            std::map<std::pair<std::size_t, std::size_t>, LieElement> brackets,
            std::vector<LieElement> d_values = {},
            int truncation = kNoTruncation, std::string name = {});

  const GeneratorSetPtr& generators() const override { return gens_; }
  bool is_free() const override { return false; }
  int truncation_degree() const override { return truncation_; }
  const std::string& name() const { return name_; }

  LieElement bracket(const LieElement& x, const LieElement& y) const override;
  LieElement differential(const LieElement& x) const override;

  std::size_t dim(int degree) const override;
  LieElement basis_element(int degree, std::size_t i) const override;
  Vec coordinates(const LieElement& x, int degree) const override;
  bool is_zero(const LieElement& x) const override;

  /// Graded antisymmetry/Jacobi on all triples within the truncation, degree
  /// bookkeeping, d degree -1, d*d = 0, Leibniz. Empty result means valid.
  std::vector<std::string> validate() const;

  /// Reduce bracket trees via structure constants to a leaf combination.
  LieElement normalize(const LieElement& x) const;

  const std::map<std::pair<std::size_t, std::size_t>, LieElement>&
  bracket_table() const {
    return table_;
  }
  const LieElement& differential_of(std::size_t i) const {
    return d_values_[i];
  }

 private:
  LieElement leaf_bracket(std::size_t i, std::size_t j) const;

  GeneratorSetPtr gens_;
  std::map<std::pair<std::size_t, std::size_t>, LieElement> table_;
  std::vector<LieElement> d_values_;
  int truncation_;
  std::string name_;
  std::map<int, std::vector<std::size_t>> by_degree_;
};

using FiniteLiePtr = std::shared_ptr<const FiniteLie>;

/// Homology of a coefficient algebra as a FiniteLie with zero differential,
/// faithful through `cap`: basis h<degree>_<index> per homology class,
/// brackets by projecting brackets of representatives.
FiniteLiePtr homology_algebra(const DglAlgebra& algebra, int cap,
                              std::string name = {});

}  // namespace whale
