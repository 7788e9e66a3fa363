#include "whale/lift.hpp"

#include <algorithm>
#include <numeric>

#include "whale/errors.hpp"

namespace whale {

SparseMatrix map_matrix(const DglMap& f, int degree) {
  const DglAlgebra& src = *f.source();
  const DglAlgebra& tgt = *f.target();
  const std::size_t cols = degree >= 1 ? src.dim(degree) : 0;
  const std::size_t rows = degree >= 1 ? tgt.dim(degree) : 0;
  SparseMatrix m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    const LieElement img = f.apply(src.basis_element(degree, j));
    if (tgt.is_zero(img)) continue;
    const Vec coords = tgt.coordinates(img, degree);
    for (std::size_t i = 0; i < rows; ++i)
      if (coords[i] != 0) m.set(i, j, coords[i]);
  }
  return m;
}

std::vector<std::string> validate_surjective_quasi_iso(const DglMap& phi,
                                                       int cap) {
  std::vector<std::string> out;
  auto src = std::make_shared<const AlgebraComplex>(
      std::static_pointer_cast<const DglAlgebra>(phi.source()));
  for (auto msg : phi.validate()) out.push_back(msg);
  for (int d = 1; d <= cap; ++d) {
    const SparseMatrix m = map_matrix(phi, d);
    if (rank(m) != m.rows())
      out.push_back("not surjective in degree " + std::to_string(d));
  }
  for (int d = 1; d + 1 <= cap; ++d) {
    const AlgebraHomology hs = homology(*phi.source(), d);
    const AlgebraHomology ht = homology(*phi.target(), d);
    if (hs.dimension != ht.dimension) {
      out.push_back("homology dimensions differ in degree " +
                    std::to_string(d));
      continue;
    }
    // induced map must have full rank
    SparseMatrix induced(ht.dimension, hs.dimension);
    for (std::size_t j = 0; j < hs.dimension; ++j) {
      const LieElement img = phi.apply(hs.representatives[j]);
      const Vec coords = ht.quotient.project(
          phi.target()->coordinates(img, d));
      for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0) induced.set(i, j, coords[i]);
    }
    if (rank(induced) != hs.dimension)
      out.push_back("induced homology map not injective in degree " +
                    std::to_string(d));
  }
  return out;
}

namespace {

/// Solve for (zbar in K_m cycle, alpha in K'_{m+1}) with
/// phi(zbar) - d_{K'}(alpha) = c. Returns false on failure.
bool solve_cycle_preimage(const DglMap& phi, int m, const LieElement& c,
                          LieElement& zbar, LieElement& alpha) {
  const DglAlgebra& K = *phi.source();
  const DglAlgebra& Kp = *phi.target();
  const std::size_t nK = m >= 1 ? K.dim(m) : 0;
  const std::size_t nKp1 = m + 1 >= 1 ? Kp.dim(m + 1) : 0;
  const std::size_t rows_d = m - 1 >= 1 ? K.dim(m - 1) : 0;
  const std::size_t rows_c = m >= 1 ? Kp.dim(m) : 0;

  SparseMatrix A(rows_d + rows_c, nK + nKp1);
  auto kc = std::make_shared<const AlgebraComplex>(
      std::static_pointer_cast<const DglAlgebra>(phi.source()));
  if (nK > 0 && rows_d > 0) A.insert_block(0, 0, kc->boundary(m));
  if (nK > 0 && rows_c > 0) A.insert_block(rows_d, 0, map_matrix(phi, m));
  if (nKp1 > 0 && rows_c > 0) {
    auto kpc = std::make_shared<const AlgebraComplex>(phi.target());
    A.insert_block(rows_d, nK, kpc->boundary(m + 1), Rational(-1));
  }

  Vec b(rows_d + rows_c, Rational(0));
  if (rows_c > 0) {
    const Vec cc = Kp.coordinates(c, m);
    for (std::size_t i = 0; i < rows_c; ++i) b[rows_d + i] = cc[i];
  }
  auto sol = solve(A, b);
  if (!sol.solution.has_value()) return false;
  zbar = LieElement(K.generators());
  for (std::size_t i = 0; i < nK; ++i)
    if ((*sol.solution)[i] != 0)
      zbar += (*sol.solution)[i] * K.basis_element(m, i);
  alpha = LieElement(Kp.generators());
  for (std::size_t i = 0; i < nKp1; ++i)
    if ((*sol.solution)[nK + i] != 0)
      alpha += (*sol.solution)[nK + i] * Kp.basis_element(m + 1, i);
  return true;
}

}  // namespace

LiftResult lift_through_quasi_iso(const PsiDerivation& theta_prime,
                                  const DglMapPtr& psi, const DglMapPtr& phi,
                                  int cap) {
  const FreeDgl& L = *psi->source();
  if (!L.is_minimal())
    throw ValidationError("lifting requires a minimal source");
  const DglMapPtr composed = compose(phi, psi);
  if (!d_derivation(theta_prime).is_zero())
    throw NotACycle("lifting requires a D-cycle");

  const int p = theta_prime.degree();
  const auto& gens = *L.generators();
  int needed = 0;
  for (std::size_t i = 0; i < gens.size(); ++i)
    needed = std::max(needed, gens.degree(i) + p + 1);
  if (needed > cap)
    throw CapTooLow("lifting needs target degree " + std::to_string(needed),
                    needed, cap);

  // nondecreasing degree order, stable in the authoritative order
  std::vector<std::size_t> order(gens.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a,
                                                   std::size_t b) {
    return gens.degree(a) < gens.degree(b);
  });

  const DglAlgebra& K = *phi->source();
  const DglAlgebra& Kp = *phi->target();
  std::vector<LieElement> theta_vals(gens.size(), LieElement(K.generators()));
  std::vector<LieElement> second_vals(gens.size(),
                                      LieElement(Kp.generators()));

  auto kc = std::make_shared<const AlgebraComplex>(
      std::static_pointer_cast<const DglAlgebra>(phi->source()));

  for (std::size_t r : order) {
    const int m = gens.degree(r) + p;
    // y = (-1)^p theta(d_L x_r), defined on earlier generators
    const PsiDerivation partial_theta(psi, p, theta_vals);
    LieElement y = partial_theta.evaluate(L.differential_of(r));
    if (p % 2 != 0) y = -y;

    LieElement z(K.generators());
    if (!K.is_zero(y)) {
      const Vec yc = K.coordinates(y, m - 1);
      auto sol = RowReduction(kc->boundary(m)).solve(yc);
      if (!sol.solution.has_value())
        throw QuasiIsoViolation(
            "lift: theta(d x) is not a boundary in degree " +
                std::to_string(m - 1),
            m - 1);
      for (std::size_t i = 0; i < sol.solution->size(); ++i)
        if ((*sol.solution)[i] != 0)
          z += (*sol.solution)[i] * K.basis_element(m, i);
    }

    const PsiDerivation partial_second(composed, p + 1, second_vals);
    LieElement c = theta_prime.value(r);
    LieElement tail = partial_second.evaluate(L.differential_of(r));
    // c = theta'(x_r) + (-1)^p theta''(d_L x_r) - phi(z)
    if (p % 2 == 0)
      c += tail;
    else
      c -= tail;
    c -= phi->apply(z);

    LieElement zbar(K.generators()), alpha(Kp.generators());
    if (!Kp.is_zero(c)) {
      if (!solve_cycle_preimage(*phi, m, c, zbar, alpha))
        throw QuasiIsoViolation(
            "lift: no cycle preimage in degree " + std::to_string(m), m);
    }
    theta_vals[r] = zbar + z;
    second_vals[r] = alpha;
  }

  return LiftResult{PsiDerivation(psi, p, std::move(theta_vals)),
                    PsiDerivation(composed, p + 1, std::move(second_vals))};
}

RelElement push_rel_element(const DglMapPtr& phi, const DglMapPtr& composed,
                            const RelElement& z) {
  return RelElement{phi->apply(z.chi),
                    push_derivation(phi, composed, z.theta)};
}

}  // namespace whale
