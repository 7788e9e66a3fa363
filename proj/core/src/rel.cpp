#include "whale/rel.hpp"

#include <cassert>

#include "whale/errors.hpp"

namespace whale {

RelElement rel_zero(const DglMapPtr& psi, int degree) {
  return RelElement{LieElement(psi->target()->generators()),
                    PsiDerivation::zero(psi, degree)};
}

RelElement rel_differential(const RelElement& z) {
  const DglMapPtr& psi = z.theta.psi();
  const DglAlgebra& K = *psi->target();
  LieElement chi = -K.differential(z.chi);
  PsiDerivation theta = d_derivation(z.theta);
  if (!z.chi.empty()) theta += ad_psi(psi, z.chi);
  return RelElement{std::move(chi), std::move(theta)};
}

bool rel_is_zero(const RelElement& z) {
  return z.theta.psi()->target()->is_zero(z.chi) && z.theta.is_zero();
}

RelElement rel_add(const RelElement& a, const RelElement& b) {
  assert(a.degree() == b.degree());
  return RelElement{a.chi + b.chi, a.theta + b.theta};
}

RelElement rel_scale(const Rational& c, const RelElement& a) {
  return RelElement{c * a.chi, c * a.theta};
}

bool is_rel_cycle(const RelElement& z) {
  return rel_is_zero(rel_differential(z));
}

RelContext::RelContext(DglMapPtr psi) : psi_(std::move(psi)) {
  ad_ = std::make_shared<const AdjointChainMap>(psi_);
  der_ = ad_->derivations();
  cone_ = std::make_shared<const ConeComplex>(ad_);
}

Vec RelContext::coordinates(const RelElement& z) const {
  const DglAlgebra& K = *psi_->target();
  Vec out = z.degree() - 1 >= 1 ? K.coordinates(z.chi, z.degree() - 1) : Vec{};
  const Vec der = der_->coordinates(z.theta);
  out.insert(out.end(), der.begin(), der.end());
  return out;
}

RelElement RelContext::from_coordinates(int degree, const Vec& coords) const {
  const DglAlgebra& K = *psi_->target();
  const std::size_t kdim = degree - 1 >= 1 ? K.dim(degree - 1) : 0;
  LieElement chi(K.generators());
  for (std::size_t i = 0; i < kdim; ++i)
    if (coords[i] != 0) chi += coords[i] * K.basis_element(degree - 1, i);
  Vec rest(coords.begin() + kdim, coords.end());
  return RelElement{std::move(chi), der_->from_coordinates(degree, rest)};
}

DerHomologySpace::DerHomologySpace(DglMapPtr psi, int degree,
                                   PivotStrategy strategy)
    : psi_(std::move(psi)),
      degree_(degree),
      der_(std::make_shared<const DerivationComplex>(psi_)) {
  if (degree < 2)
    throw DegreeError("derivation homology is defined for degrees >= 2");
  h_ = chain_homology(*der_, degree, strategy);
  for (const auto& rep : h_.quotient.representatives())
    reps_.push_back(der_->from_coordinates(degree, rep));
}

Vec DerHomologySpace::coordinates(const PsiDerivation& theta) const {
  if (!d_derivation(theta).is_zero())
    throw NotACycle("derivation is not a D_psi-cycle");
  return h_.quotient.project(der_->coordinates(theta));
}

RelHomologySpace::RelHomologySpace(DglMapPtr psi, int degree,
                                   PivotStrategy strategy)
    : RelHomologySpace(std::make_shared<const RelContext>(std::move(psi)),
                       degree, strategy) {}

RelHomologySpace::RelHomologySpace(RelContextPtr ctx, int degree,
                                   PivotStrategy strategy)
    : ctx_(std::move(ctx)), degree_(degree) {
  if (degree < 2)
    throw DegreeError("Rel homology is defined for degrees >= 2");
  h_ = chain_homology(ctx_->complex(), degree, strategy);
  for (const auto& rep : h_.quotient.representatives())
    reps_.push_back(ctx_->from_coordinates(degree, rep));
}

Vec RelHomologySpace::coordinates(const RelElement& z) const {
  if (!is_rel_cycle(z)) throw NotACycle("element is not a delta-cycle");
  return h_.quotient.project(ctx_->coordinates(z));
}

BoundaryWitness is_boundary(const RelContext& ctx, const RelElement& z,
                            int cap, PivotStrategy strategy) {
  const int n = z.degree();
  const int needed = n + 1;
  if (needed > cap)
    throw CapTooLow("boundary test at degree " + std::to_string(n) +
                        " needs complex degree " + std::to_string(needed),
                    needed, cap);
  if (!is_rel_cycle(z)) throw NotACycle("boundary test requires a cycle");
  BoundaryWitness out;
  const SparseMatrix& delta = ctx.complex().boundary(n + 1);
  auto sol = RowReduction(delta, strategy).solve(ctx.coordinates(z));
  if (sol.solution.has_value()) {
    out.is_boundary = true;
    out.rel_witness = ctx.from_coordinates(n + 1, *sol.solution);
  } else {
    out.certificate = std::move(sol.certificate);
  }
  return out;
}

BoundaryWitness is_boundary(const DerivationComplex& der,
                            const PsiDerivation& theta, int cap,
                            PivotStrategy strategy) {
  const int n = theta.degree();
  const int needed = n + 1;
  if (needed > cap)
    throw CapTooLow("boundary test at degree " + std::to_string(n) +
                        " needs complex degree " + std::to_string(needed),
                    needed, cap);
  if (!d_derivation(theta).is_zero())
    throw NotACycle("boundary test requires a cycle");
  BoundaryWitness out;
  const SparseMatrix& d = der.boundary(n + 1);
  auto sol = RowReduction(d, strategy).solve(der.coordinates(theta));
  if (sol.solution.has_value()) {
    out.is_boundary = true;
    out.der_witness = der.from_coordinates(n + 1, *sol.solution);
  } else {
    out.certificate = std::move(sol.certificate);
  }
  return out;
}

}  // namespace whale
