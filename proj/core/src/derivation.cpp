#include "whale/derivation.hpp"

#include <cassert>

#include "whale/errors.hpp"

namespace whale {

PsiDerivation::PsiDerivation(DglMapPtr psi, int degree,
                             std::vector<LieElement> values)
    : psi_(std::move(psi)), degree_(degree), values_(std::move(values)) {
  if (values_.size() != psi_->source()->generators()->size())
    throw ValidationError("derivation values must match source generators");
  for (auto& v : values_)
    if (!v.generators()) v = LieElement(psi_->target()->generators());
}

PsiDerivation PsiDerivation::zero(const DglMapPtr& psi, int degree) {
  return PsiDerivation(
      psi, degree,
      std::vector<LieElement>(psi->source()->generators()->size(),
                              LieElement(psi->target()->generators())));
}

PsiDerivation PsiDerivation::elementary(const DglMapPtr& psi, int degree,
                                        std::size_t gen,
                                        const LieElement& value) {
  PsiDerivation out = zero(psi, degree);
  out.values_[gen] = value;
  return out;
}

LieElement PsiDerivation::evaluate(const LieElement& x) const {
  if (!same_generators(x.generators(), psi_->source()->generators()))
    throw AlgebraMismatch("derivation applied outside its source");
  const DglAlgebra& K = *psi_->target();
  struct Rec {
    const PsiDerivation& th;
    const DglAlgebra& K;
    LieElement on_tree(const BracketTree& t) {
      if (t.is_leaf()) return th.values_[t.leaf_index()];
      const auto& gens = th.psi_->source()->generators();
      const LieElement l = LieElement::term(gens, Rational(1), t.left());
      const LieElement r = LieElement::term(gens, Rational(1), t.right());
      // theta([x,y]) = [theta x, psi y] + (-1)^{n|x|}[psi x, theta y]
      LieElement out = K.bracket(on_tree(t.left()), th.psi_->apply(r));
      LieElement second = K.bracket(th.psi_->apply(l), on_tree(t.right()));
      if ((th.degree_ * t.left().degree()) % 2 != 0)
        out -= second;
      else
        out += second;
      return out;
    }
  } rec{*this, K};
  LieElement out(K.generators());
  for (const auto& [t, c] : x.terms()) out += c * rec.on_tree(t);
  return out;
}

PsiDerivation& PsiDerivation::operator+=(const PsiDerivation& other) {
  assert(degree_ == other.degree_);
  for (std::size_t i = 0; i < values_.size(); ++i)
    values_[i] += other.values_[i];
  return *this;
}

PsiDerivation& PsiDerivation::operator-=(const PsiDerivation& other) {
  assert(degree_ == other.degree_);
  for (std::size_t i = 0; i < values_.size(); ++i)
    values_[i] -= other.values_[i];
  return *this;
}

PsiDerivation& PsiDerivation::operator*=(const Rational& c) {
  for (auto& v : values_) v *= c;
  return *this;
}

PsiDerivation PsiDerivation::operator-() const {
  PsiDerivation out(*this);
  for (auto& v : out.values_) v = -v;
  return out;
}

bool PsiDerivation::is_zero() const {
  const DglAlgebra& K = *psi_->target();
  for (const auto& v : values_)
    if (!K.is_zero(v)) return false;
  return true;
}

PsiDerivation d_derivation(const PsiDerivation& theta) {
  const DglMapPtr& psi = theta.psi();
  const DglAlgebra& K = *psi->target();
  const FreeDgl& L = *psi->source();
  const bool odd = theta.degree() % 2 != 0;
  std::vector<LieElement> values;
  values.reserve(L.generators()->size());
  for (std::size_t i = 0; i < L.generators()->size(); ++i) {
    LieElement v = K.differential(theta.value(i));
    LieElement second = theta.evaluate(L.differential_of(i));
    if (odd)
      v += second;
    else
      v -= second;
    values.push_back(std::move(v));
  }
  return PsiDerivation(psi, theta.degree() - 1, std::move(values));
}

PsiDerivation ad_psi(const DglMapPtr& psi, const LieElement& alpha) {
  auto deg = alpha.homogeneous_degree();
  if (!deg && !alpha.empty())
    throw DegreeError("ad_psi requires a homogeneous element");
  const DglAlgebra& K = *psi->target();
  std::vector<LieElement> values;
  for (std::size_t i = 0; i < psi->source()->generators()->size(); ++i)
    values.push_back(K.bracket(alpha, psi->value(i)));
  return PsiDerivation(psi, deg.value_or(0), std::move(values));
}

PsiDerivation push_derivation(const DglMapPtr& phi, const DglMapPtr& composed,
                              const PsiDerivation& theta) {
  std::vector<LieElement> values;
  for (std::size_t i = 0; i < theta.psi()->source()->generators()->size(); ++i)
    values.push_back(phi->apply(theta.value(i)));
  return PsiDerivation(composed, theta.degree(), std::move(values));
}

DerivationComplex::DerivationComplex(DglMapPtr psi) : psi_(std::move(psi)) {}

std::size_t DerivationComplex::dim(int n) const {
  if (n < 1) return 0;
  const auto& gens = *psi_->source()->generators();
  const DglAlgebra& K = *psi_->target();
  std::size_t total = 0;
  for (std::size_t i = 0; i < gens.size(); ++i)
    total += K.dim(gens.degree(i) + n);
  return total;
}

int DerivationComplex::ambient_degree(int n) const {
  const auto& gens = *psi_->source()->generators();
  int deg = 0;
  for (std::size_t i = 0; i < gens.size(); ++i)
    deg = std::max(deg, gens.degree(i) + n);
  return deg;
}

Vec DerivationComplex::coordinates(const PsiDerivation& theta) const {
  const auto& gens = *psi_->source()->generators();
  const DglAlgebra& K = *psi_->target();
  Vec out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Vec part =
        K.coordinates(theta.value(i), gens.degree(i) + theta.degree());
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

PsiDerivation DerivationComplex::from_coordinates(int degree,
                                                  const Vec& coords) const {
  const auto& gens = *psi_->source()->generators();
  const DglAlgebra& K = *psi_->target();
  std::vector<LieElement> values;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const int kdeg = gens.degree(i) + degree;
    const std::size_t kdim = K.dim(kdeg);
    LieElement v(K.generators());
    for (std::size_t k = 0; k < kdim; ++k)
      if (coords[pos + k] != 0)
        v += coords[pos + k] * K.basis_element(kdeg, k);
    pos += kdim;
    values.push_back(std::move(v));
  }
  assert(pos == coords.size());
  return PsiDerivation(psi_, degree, std::move(values));
}

SparseMatrix DerivationComplex::compute_boundary(int n) const {
  const std::size_t cols = dim(n);
  const std::size_t rows = dim(n - 1);
  SparseMatrix m(rows, cols);
  if (cols == 0 || rows == 0) return m;
  const auto& gens = *psi_->source()->generators();
  const DglAlgebra& K = *psi_->target();
  std::size_t col = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const int kdeg = gens.degree(i) + n;
    const std::size_t kdim = K.dim(kdeg);
    for (std::size_t k = 0; k < kdim; ++k, ++col) {
      const PsiDerivation theta =
          PsiDerivation::elementary(psi_, n, i, K.basis_element(kdeg, k));
      const Vec img = coordinates(d_derivation(theta));
      for (std::size_t r = 0; r < rows; ++r)
        if (img[r] != 0) m.set(r, col, img[r]);
    }
  }
  return m;
}

AdjointChainMap::AdjointChainMap(DglMapPtr psi)
    : psi_(std::move(psi)),
      src_(std::make_shared<const AlgebraComplex>(psi_->target())),
      tgt_(std::make_shared<const DerivationComplex>(psi_)) {}

SparseMatrix AdjointChainMap::compute_matrix(int n) const {
  const std::size_t cols = src_->dim(n);
  const std::size_t rows = tgt_->dim(n);
  SparseMatrix m(rows, cols);
  if (cols == 0 || rows == 0) return m;
  const DglAlgebra& K = *psi_->target();
  for (std::size_t j = 0; j < cols; ++j) {
    const Vec img =
        tgt_->coordinates(ad_psi(psi_, K.basis_element(n, j)));
    for (std::size_t r = 0; r < rows; ++r)
      if (img[r] != 0) m.set(r, j, img[r]);
  }
  return m;
}

MapChainMap::MapChainMap(DglMapPtr psi)
    : psi_(std::move(psi)),
      src_(std::make_shared<const AlgebraComplex>(
          std::static_pointer_cast<const DglAlgebra>(psi_->source()))),
      tgt_(std::make_shared<const AlgebraComplex>(psi_->target())) {}

SparseMatrix MapChainMap::compute_matrix(int n) const {
  const std::size_t cols = src_->dim(n);
  const std::size_t rows = tgt_->dim(n);
  SparseMatrix m(rows, cols);
  if (cols == 0 || rows == 0) return m;
  for (std::size_t j = 0; j < cols; ++j) {
    const LieElement img = psi_->apply(psi_->source()->basis_element(n, j));
    if (psi_->target()->is_zero(img)) continue;
    const Vec coords = psi_->target()->coordinates(img, n);
    for (std::size_t r = 0; r < rows; ++r)
      if (coords[r] != 0) m.set(r, j, coords[r]);
  }
  return m;
}

}  // namespace whale
