#pragma once

#include <limits>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "whale/free_lie.hpp"

namespace whale {

constexpr int kNoTruncation = std::numeric_limits<int>::max();

/// Coefficient algebra: everything a derivation complex needs from its
/// target. Elements are LieElements over the algebra's generator set; the
/// algebra decides how to multiply, differentiate and coordinatize them.
class DglAlgebra {
 public:
  virtual ~DglAlgebra() = default;

  virtual const GeneratorSetPtr& generators() const = 0;
  virtual bool is_free() const = 0;

  /// Largest degree at which the algebra's data is meaningful;
  /// kNoTruncation when exact in every degree.
  virtual int truncation_degree() const { return kNoTruncation; }

  virtual LieElement bracket(const LieElement& x,
                             const LieElement& y) const = 0;
  virtual LieElement differential(const LieElement& x) const = 0;

  virtual std::size_t dim(int degree) const = 0;
  virtual LieElement basis_element(int degree, std::size_t i) const = 0;
  /// Coordinates of the degree-n part of x in the degree-n basis.
  virtual Vec coordinates(const LieElement& x, int degree) const = 0;
  virtual bool is_zero(const LieElement& x) const = 0;

  LieElement zero() const { return LieElement(generators()); }
  LieElement gen(std::size_t i) const {
    return LieElement::generator(generators(), i);
  }
  void check_degree(int degree, const char* what) const;
};

using DglAlgebraPtr = std::shared_ptr<const DglAlgebra>;

/// Free DG Lie algebra: generators plus a differential given on generators
/// and extended as a derivation.
class FreeDgl : public DglAlgebra,
                public std::enable_shared_from_this<FreeDgl> {
 public:
  /// d_values[i] is d of generator i (may be the zero element).
  FreeDgl(GeneratorSetPtr gens, std::vector<LieElement> d_values,
          std::string name = {});
  static std::shared_ptr<const FreeDgl> make(
      std::vector<Generator> gens,
      std::map<std::string, LieElement> d_by_name = {}, std::string name = {});

  const GeneratorSetPtr& generators() const override { return gens_; }
  bool is_free() const override { return true; }
  const std::string& name() const { return name_; }

  LieElement bracket(const LieElement& x, const LieElement& y) const override;
  /// Leibniz extension of the generator values.
  LieElement differential(const LieElement& x) const override;
  const LieElement& differential_of(std::size_t gen_index) const {
    return d_values_[gen_index];
  }

  std::size_t dim(int degree) const override;
  LieElement basis_element(int degree, std::size_t i) const override;
  Vec coordinates(const LieElement& x, int degree) const override;
  bool is_zero(const LieElement& x) const override;

  const FreeLieContext& context() const { return *ctx_; }

  /// Degree bookkeeping, connectedness, d*d = 0 on every generator.
  /// Returns human-readable violations; empty means valid.
  std::vector<std::string> validate() const;

  /// True iff no d(v) has a linear part.
  bool is_minimal() const;

  /// Quadratic coefficients c_{ij}(v): d(v) = sum_{i<=j} c_{ij}(v)[v_i, v_j]
  /// + longer terms, against the authoritative generator order.
  std::map<std::pair<std::size_t, std::size_t>, Rational>
  quadratic_coefficients(std::size_t gen_index) const;

 private:
  GeneratorSetPtr gens_;
  std::vector<LieElement> d_values_;
  std::string name_;
  std::shared_ptr<FreeLieContext> ctx_;
};

using FreeDglPtr = std::shared_ptr<const FreeDgl>;

/// Per-generator filtration stage assignment; stage(v) = s means
/// d(v) must only involve generators of stage < s.
struct GeneratorFiltration {
  std::vector<int> stage;  // one entry per generator, values in 1..length
  int length = 0;
  /// Checks d(V(i)) inside L(V(i-1)). Returns violations.
  std::vector<std::string> validate(const FreeDgl& algebra) const;
};

/// Degreewise homology of a coefficient algebra.
struct AlgebraHomology {
  std::size_t dimension = 0;
  std::vector<LieElement> representatives;  // echelon-chosen cycles
  QuotientSpace quotient;                   // in degree-n coordinates
};
AlgebraHomology homology(const DglAlgebra& algebra, int degree,
                         PivotStrategy strategy = PivotStrategy::MinBitSize);

}  // namespace whale
