#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "whale/rational.hpp"

namespace whale {

using Vec = std::vector<Rational>;

/// Rational sparse matrix, row major. No stored zeros.
class SparseMatrix {
 public:
  SparseMatrix() : rows_(0), cols_(0) {}
  SparseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void set(std::size_t r, std::size_t c, const Rational& v);
  void add(std::size_t r, std::size_t c, const Rational& v);
  Rational at(std::size_t r, std::size_t c) const;
  const std::map<std::size_t, Rational>& row(std::size_t r) const {
    return data_[r];
  }
  std::size_t nonzeros() const;

  SparseMatrix transpose() const;
  Vec apply(const Vec& x) const;

  /// Columns are the given vectors; rows = ambient dimension.
  static SparseMatrix from_columns(const std::vector<Vec>& cols,
                                   std::size_t ambient);
  static SparseMatrix identity(std::size_t n);

  /// Place `m` as a block with upper-left corner (r0, c0).
  void insert_block(std::size_t r0, std::size_t c0, const SparseMatrix& m,
                    const Rational& scale = Rational(1));

 private:
  std::size_t rows_, cols_;
  std::vector<std::map<std::size_t, Rational>> data_;
};

enum class PivotStrategy {
  /// Entry with smallest numerator*denominator bit size, ties by (row, col).
  MinBitSize,
  /// First structurally nonzero entry in (row, col) order.
  FirstNonZero,
};

struct SolveOutcome {
  /// Present iff the system is consistent; one solution (free vars = 0).
  std::optional<Vec> solution;
  /// On failure: y with y*A = 0 and y.b != 0.
  Vec certificate;
};

/// Exact Gauss-Jordan elimination of A, carrying the transform so that many
/// right-hand sides can be solved against one factorization.
class RowReduction {
 public:
  explicit RowReduction(const SparseMatrix& m,
                        PivotStrategy strategy = PivotStrategy::MinBitSize);

  std::size_t rank() const { return pivots_.size(); }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  SolveOutcome solve(const Vec& b) const;
  /// Echelon-normalized kernel basis: leading coefficient 1, leading
  /// positions strictly increasing.
  std::vector<Vec> kernel_basis() const;

 private:
  struct Row {
    std::map<std::size_t, Rational> entries;    // reduced row of A
    std::map<std::size_t, Rational> transform;  // matching row of U (U*A = R)
  };
  std::size_t rows_, cols_;
  std::vector<Row> reduced_;                      // pivot rows, then zero rows
  std::vector<std::pair<std::size_t, std::size_t>> pivots_;  // (row, col)
};

std::size_t rank(const SparseMatrix& m,
                 PivotStrategy strategy = PivotStrategy::MinBitSize);
std::vector<Vec> kernel_basis(const SparseMatrix& m,
                              PivotStrategy strategy = PivotStrategy::MinBitSize);
SolveOutcome solve(const SparseMatrix& m, const Vec& b,
                   PivotStrategy strategy = PivotStrategy::MinBitSize);

/// Reduced-row-echelon form of the span of `vectors`; deterministic basis.
std::vector<Vec> echelonize(const std::vector<Vec>& vectors,
                            std::size_t ambient);

/// Coordinates on a quotient span(cycles)/span(boundaries).
///
/// Representatives are cycles reduced to echelon form against the boundary
/// span, so repeated runs produce identical bases. Throws InvalidComplex if
/// some boundary is not in the span of the cycles.
class QuotientSpace {
 public:
  QuotientSpace() = default;
  QuotientSpace(const std::vector<Vec>& cycles,
                const std::vector<Vec>& boundaries, std::size_t ambient,
                PivotStrategy strategy = PivotStrategy::MinBitSize);

  std::size_t dimension() const { return reps_.size(); }
  const std::vector<Vec>& representatives() const { return reps_; }

  /// Express a cycle in homology coordinates. Throws InvalidComplex if the
  /// vector is not in the span of the original cycles.
  Vec project(const Vec& cycle) const;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vec> reps_;
  std::shared_ptr<const RowReduction> solver_;  // columns: reps | boundary basis
};

}  // namespace whale
