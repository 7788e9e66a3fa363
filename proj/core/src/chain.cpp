#include "whale/chain.hpp"

namespace whale {

const SparseMatrix& ChainComplex::boundary(int n) const {
  std::scoped_lock lock(mu_);
  auto it = cache_.find(n);
  if (it == cache_.end()) it = cache_.emplace(n, compute_boundary(n)).first;
  return it->second;
}

const SparseMatrix& ChainMap::matrix(int n) const {
  std::scoped_lock lock(mu_);
  auto it = cache_.find(n);
  if (it == cache_.end()) it = cache_.emplace(n, compute_matrix(n)).first;
  return it->second;
}

SparseMatrix AlgebraComplex::compute_boundary(int n) const {
  const std::size_t cols = dim(n);
  const std::size_t rows = dim(n - 1);
  SparseMatrix m(rows, cols);
  if (rows == 0 || cols == 0) return m;
  for (std::size_t j = 0; j < cols; ++j) {
    const LieElement db =
        algebra_->differential(algebra_->basis_element(n, j));
    if (algebra_->is_zero(db)) continue;
    const Vec col = algebra_->coordinates(db, n - 1);
    for (std::size_t i = 0; i < rows; ++i)
      if (col[i] != 0) m.set(i, j, col[i]);
  }
  return m;
}

SparseMatrix ConeComplex::compute_boundary(int n) const {
  const ChainComplex& src = f_->source();
  const ChainComplex& tgt = f_->target();
  const std::size_t src_n = src.dim(n - 1), src_lo = src.dim(n - 2);
  const std::size_t tgt_n = tgt.dim(n), tgt_lo = tgt.dim(n - 1);
  SparseMatrix m(src_lo + tgt_lo, src_n + tgt_n);
  if (src_n > 0 && src_lo > 0)
    m.insert_block(0, 0, src.boundary(n - 1), Rational(-1));
  if (src_n > 0 && tgt_lo > 0) m.insert_block(src_lo, 0, f_->matrix(n - 1));
  if (tgt_n > 0 && tgt_lo > 0) m.insert_block(src_lo, src_n, tgt.boundary(n));
  return m;
}

ChainHomology chain_homology(const ChainComplex& complex, int n,
                             PivotStrategy strategy) {
  ChainHomology h;
  const std::size_t dim_n = complex.dim(n);
  std::vector<Vec> cycles =
      RowReduction(complex.boundary(n), strategy).kernel_basis();
  std::vector<Vec> boundaries;
  const SparseMatrix& d_hi = complex.boundary(n + 1);
  for (std::size_t j = 0; j < d_hi.cols(); ++j) {
    Vec col(dim_n, Rational(0));
    bool nonzero = false;
    for (std::size_t i = 0; i < dim_n; ++i) {
      col[i] = d_hi.at(i, j);
      nonzero |= col[i] != 0;
    }
    if (nonzero) boundaries.push_back(std::move(col));
  }
  h.quotient = QuotientSpace(cycles, boundaries, dim_n, strategy);
  h.dimension = h.quotient.dimension();
  return h;
}

SparseMatrix induced_homology_matrix(const ChainMap& f, int n,
                                     const ChainHomology& source_h,
                                     const ChainHomology& target_h) {
  SparseMatrix m(target_h.dimension, source_h.dimension);
  const SparseMatrix& fm = f.matrix(n);
  for (std::size_t j = 0; j < source_h.dimension; ++j) {
    const Vec img = fm.apply(source_h.quotient.representatives()[j]);
    const Vec coords = target_h.quotient.project(img);
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (coords[i] != 0) m.set(i, j, coords[i]);
  }
  return m;
}

}  // namespace whale
