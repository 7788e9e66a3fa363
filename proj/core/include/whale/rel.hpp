#pragma once

#include "whale/derivation.hpp"

namespace whale {

/// Element (chi, theta) of Rel_p(ad_psi) = K_{p-1} (+) Der_p(L, K; psi).
struct RelElement {
  LieElement chi;
  PsiDerivation theta;
  int degree() const { return theta.degree(); }
};

RelElement rel_zero(const DglMapPtr& psi, int degree);

/// delta(chi, theta) = (-d_K chi, ad_psi(chi) + D_psi(theta)).
RelElement rel_differential(const RelElement& z);

bool rel_is_zero(const RelElement& z);
RelElement rel_add(const RelElement& a, const RelElement& b);
RelElement rel_scale(const Rational& c, const RelElement& a);
bool is_rel_cycle(const RelElement& z);

/// Shared coordinate machinery for Rel(ad_psi).
class RelContext {
 public:
  explicit RelContext(DglMapPtr psi);

  const DglMapPtr& psi() const { return psi_; }
  const ConeComplex& complex() const { return *cone_; }
  const DerivationComplex& derivations() const { return *der_; }

  Vec coordinates(const RelElement& z) const;
  RelElement from_coordinates(int degree, const Vec& coords) const;

  /// Largest K-degree used by the degree-n piece of the cone.
  int ambient_degree(int n) const { return cone_->ambient_degree(n); }

 private:
  DglMapPtr psi_;
  std::shared_ptr<const AdjointChainMap> ad_;
  DerivationComplexPtr der_;
  std::shared_ptr<const ConeComplex> cone_;
};

using RelContextPtr = std::shared_ptr<const RelContext>;

/// Boundary certificate: either a witness w with delta(w) = z (or D(w) = z),
/// or a non-solvability certificate vector.
struct BoundaryWitness {
  bool is_boundary = false;
  std::optional<RelElement> rel_witness;
  std::optional<PsiDerivation> der_witness;
  Vec certificate;
};

/// Homology of Der(L, K; psi) at degree n >= 2, with classes.
class DerHomologySpace {
 public:
  DerHomologySpace(DglMapPtr psi, int degree,
                   PivotStrategy strategy = PivotStrategy::MinBitSize);

  std::size_t dimension() const { return h_.dimension; }
  int degree() const { return degree_; }
  const PsiDerivation& representative(std::size_t i) const { return reps_[i]; }
  /// Homology coordinates of a cycle; NotACycle otherwise.
  Vec coordinates(const PsiDerivation& theta) const;
  const DerivationComplexPtr& complex() const { return der_; }

 private:
  DglMapPtr psi_;
  int degree_;
  DerivationComplexPtr der_;
  ChainHomology h_;
  std::vector<PsiDerivation> reps_;
};

/// Homology of Rel(ad_psi) at degree n >= 2, with classes.
class RelHomologySpace {
 public:
  RelHomologySpace(DglMapPtr psi, int degree,
                   PivotStrategy strategy = PivotStrategy::MinBitSize);
  RelHomologySpace(RelContextPtr ctx, int degree,
                   PivotStrategy strategy = PivotStrategy::MinBitSize);

  std::size_t dimension() const { return h_.dimension; }
  int degree() const { return degree_; }
  const RelElement& representative(std::size_t i) const { return reps_[i]; }
  Vec coordinates(const RelElement& z) const;
  const RelContextPtr& context() const { return ctx_; }

 private:
  RelContextPtr ctx_;
  int degree_;
  ChainHomology h_;
  std::vector<RelElement> reps_;
};

/// Exact boundary test in Rel(ad_psi); needs ambient degree z.degree()+1,
/// refused (CapTooLow) when that exceeds `cap`.
BoundaryWitness is_boundary(const RelContext& ctx, const RelElement& z,
                            int cap,
                            PivotStrategy strategy = PivotStrategy::MinBitSize);

/// Exact boundary test in Der(L, K; psi).
BoundaryWitness is_boundary(const DerivationComplex& der,
                            const PsiDerivation& theta, int cap,
                            PivotStrategy strategy = PivotStrategy::MinBitSize);

}  // namespace whale
