#pragma once

#include "whale/chain.hpp"

namespace whale {

/// Degree-n psi-derivation theta: L -> K, given by values on the free
/// source's generators and extended by
///   theta([x,y]) = [theta(x), psi(y)] + (-1)^{n|x|}[psi(x), theta(y)].
class PsiDerivation {
 public:
  PsiDerivation(DglMapPtr psi, int degree, std::vector<LieElement> values);
  static PsiDerivation zero(const DglMapPtr& psi, int degree);
  /// theta(v_gen) = value, zero on other generators.
  static PsiDerivation elementary(const DglMapPtr& psi, int degree,
                                  std::size_t gen, const LieElement& value);

  const DglMapPtr& psi() const { return psi_; }
  int degree() const { return degree_; }
  const LieElement& value(std::size_t gen_index) const {
    return values_[gen_index];
  }

  LieElement evaluate(const LieElement& x) const;

  PsiDerivation& operator+=(const PsiDerivation& other);
  PsiDerivation& operator-=(const PsiDerivation& other);
  PsiDerivation& operator*=(const Rational& c);
  friend PsiDerivation operator+(PsiDerivation a, const PsiDerivation& b) {
    a += b;
    return a;
  }
  friend PsiDerivation operator-(PsiDerivation a, const PsiDerivation& b) {
    a -= b;
    return a;
  }
  friend PsiDerivation operator*(const Rational& c, PsiDerivation a) {
    a *= c;
    return a;
  }
  PsiDerivation operator-() const;

  bool is_zero() const;

 private:
  DglMapPtr psi_;
  int degree_;
  std::vector<LieElement> values_;
};

/// D_psi(theta) = d_K o theta - (-1)^{|theta|} theta o d_L.
PsiDerivation d_derivation(const PsiDerivation& theta);

/// ad_psi(alpha): x -> [alpha, psi(x)]; alpha homogeneous.
PsiDerivation ad_psi(const DglMapPtr& psi, const LieElement& alpha);

/// Post-compose with a coefficient map: phi o theta, a (phi o psi)-derivation.
PsiDerivation push_derivation(const DglMapPtr& phi, const DglMapPtr& composed,
                              const PsiDerivation& theta);

/// The complex (Der(L, K; psi), D_psi), coordinatized by
/// "generator v -> k-th basis element of K_{|v|+n}" in generator-then-target
/// order.
class DerivationComplex : public ChainComplex {
 public:
  explicit DerivationComplex(DglMapPtr psi);

  std::size_t dim(int n) const override;
  int ambient_degree(int n) const override;

  Vec coordinates(const PsiDerivation& theta) const;
  PsiDerivation from_coordinates(int degree, const Vec& coords) const;
  const DglMapPtr& psi() const { return psi_; }

 protected:
  SparseMatrix compute_boundary(int n) const override;

 private:
  DglMapPtr psi_;
};

using DerivationComplexPtr = std::shared_ptr<const DerivationComplex>;

/// ad_psi as a chain map K -> Der(L, K; psi).
class AdjointChainMap : public ChainMap {
 public:
  explicit AdjointChainMap(DglMapPtr psi);
  const ChainComplex& source() const override { return *src_; }
  const ChainComplex& target() const override { return *tgt_; }
  const DerivationComplexPtr& derivations() const { return tgt_; }

 protected:
  SparseMatrix compute_matrix(int n) const override;

 private:
  DglMapPtr psi_;
  std::shared_ptr<const AlgebraComplex> src_;
  DerivationComplexPtr tgt_;
};

/// psi itself as a chain map L -> K (for the plain mapping cone Rel(psi)).
class MapChainMap : public ChainMap {
 public:
  explicit MapChainMap(DglMapPtr psi);
  const ChainComplex& source() const override { return *src_; }
  const ChainComplex& target() const override { return *tgt_; }

 protected:
  SparseMatrix compute_matrix(int n) const override;

 private:
  DglMapPtr psi_;
  std::shared_ptr<const AlgebraComplex> src_, tgt_;
};

}  // namespace whale
