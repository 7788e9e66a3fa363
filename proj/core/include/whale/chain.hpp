#pragma once

#include <memory>
#include <mutex>

#include "whale/dgl_map.hpp"

namespace whale {

/// Degreewise-coordinatized chain complex with a cached boundary matrix.
class ChainComplex {
 public:
  virtual ~ChainComplex() = default;
  virtual std::size_t dim(int n) const = 0;
  /// Matrix of the boundary C_n -> C_{n-1}.
  const SparseMatrix& boundary(int n) const;
  /// Largest target-algebra degree the complex touches at degree n.
  virtual int ambient_degree(int n) const = 0;

 protected:
  virtual SparseMatrix compute_boundary(int n) const = 0;

 private:
  mutable std::mutex mu_;
  mutable std::map<int, SparseMatrix> cache_;
};

using ChainComplexPtr = std::shared_ptr<const ChainComplex>;

struct ChainHomology {
  std::size_t dimension = 0;
  QuotientSpace quotient;
};
ChainHomology chain_homology(const ChainComplex& complex, int n,
                             PivotStrategy strategy = PivotStrategy::MinBitSize);

/// A coefficient algebra viewed as a chain complex.
class AlgebraComplex : public ChainComplex {
 public:
  explicit AlgebraComplex(DglAlgebraPtr algebra)
      : algebra_(std::move(algebra)) {}
  std::size_t dim(int n) const override {
    return n < 1 ? 0 : algebra_->dim(n);
  }
  int ambient_degree(int n) const override { return n; }
  const DglAlgebraPtr& algebra() const { return algebra_; }

 protected:
  SparseMatrix compute_boundary(int n) const override;

 private:
  DglAlgebraPtr algebra_;
};

/// Chain map with cached degreewise matrices.
class ChainMap {
 public:
  virtual ~ChainMap() = default;
  virtual const ChainComplex& source() const = 0;
  virtual const ChainComplex& target() const = 0;
  const SparseMatrix& matrix(int n) const;

 protected:
  virtual SparseMatrix compute_matrix(int n) const = 0;

 private:
  mutable std::mutex mu_;
  mutable std::map<int, SparseMatrix> cache_;
};

using ChainMapPtr = std::shared_ptr<const ChainMap>;

/// Mapping cone Rel(f): Rel_n = C_{n-1} (+) D_n for f: C -> D, with
/// delta(c, d) = (-d_C c, f(c) + d_D d). Source block first.
class ConeComplex : public ChainComplex {
 public:
  explicit ConeComplex(ChainMapPtr f) : f_(std::move(f)) {}
  std::size_t dim(int n) const override {
    return f_->source().dim(n - 1) + f_->target().dim(n);
  }
  int ambient_degree(int n) const override {
    return std::max(f_->source().ambient_degree(n - 1),
                    f_->target().ambient_degree(n));
  }
  const ChainMap& map() const { return *f_; }

 protected:
  SparseMatrix compute_boundary(int n) const override;

 private:
  ChainMapPtr f_;
};

/// Matrix of H_n(f): columns are the images of the source homology basis in
/// target homology coordinates.
SparseMatrix induced_homology_matrix(const ChainMap& f, int n,
                                     const ChainHomology& source_h,
                                     const ChainHomology& target_h);

}  // namespace whale
