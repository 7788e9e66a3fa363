#include "whale/sparse_matrix.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <memory>

#include "whale/errors.hpp"

namespace whale {

void SparseMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
  assert(r < rows_ && c < cols_);
  if (v == 0)
    data_[r].erase(c);
  else
    data_[r][c] = v;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
  assert(r < rows_ && c < cols_);
  auto it = data_[r].find(c);
  if (it == data_[r].end()) {
    if (v != 0) data_[r].emplace(c, v);
    return;
  }
  it->second += v;
  if (it->second == 0) data_[r].erase(it);
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
  auto it = data_[r].find(c);
  return it == data_[r].end() ? Rational(0) : it->second;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) t.data_[c].emplace(r, v);
  return t;
}

Vec SparseMatrix::apply(const Vec& x) const {
  assert(x.size() == cols_);
  Vec y(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) y[r] += v * x[c];
  return y;
}

SparseMatrix SparseMatrix::from_columns(const std::vector<Vec>& cols,
                                        std::size_t ambient) {
  SparseMatrix m(ambient, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    assert(cols[j].size() == ambient);
    for (std::size_t i = 0; i < ambient; ++i)
      if (cols[j][i] != 0) m.data_[i].emplace(j, cols[j][i]);
  }
  return m;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace(i, Rational(1));
  return m;
}

void SparseMatrix::insert_block(std::size_t r0, std::size_t c0,
                                const SparseMatrix& m, const Rational& scale) {
  assert(r0 + m.rows() <= rows_ && c0 + m.cols() <= cols_);
  if (scale == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.data_[r]) add(r0 + r, c0 + c, scale * v);
}

namespace {

void axpy(std::map<std::size_t, Rational>& dst,
          const std::map<std::size_t, Rational>& src, const Rational& coef) {
  if (coef == 0) return;
  for (const auto& [c, v] : src) {
    auto it = dst.find(c);
    if (it == dst.end()) {
      dst.emplace(c, coef * v);
    } else {
      it->second += coef * v;
      if (it->second == 0) dst.erase(it);
    }
  }
}

}  // namespace

RowReduction::RowReduction(const SparseMatrix& m, PivotStrategy strategy)
    : rows_(m.rows()), cols_(m.cols()) {
  reduced_.resize(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    reduced_[r].entries = m.row(r);
    reduced_[r].transform.emplace(r, Rational(1));
  }

  std::vector<bool> used(rows_, false);
  for (;;) {
    // pick a pivot among unused rows
    std::size_t best_r = rows_, best_c = 0;
    std::size_t best_bits = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = 0; r < rows_; ++r) {
      if (used[r] || reduced_[r].entries.empty()) continue;
      if (strategy == PivotStrategy::FirstNonZero) {
        const std::size_t c = reduced_[r].entries.begin()->first;
        if (best_r == rows_ || r < best_r) {
          best_r = r;
          best_c = c;
        }
        continue;
      }
      for (const auto& [c, v] : reduced_[r].entries) {
        const std::size_t bits = bit_size(v);
        if (bits < best_bits ||
            (bits == best_bits &&
             std::pair(r, c) < std::pair(best_r, best_c))) {
          best_bits = bits;
          best_r = r;
          best_c = c;
        }
      }
    }
    if (best_r == rows_) break;

    used[best_r] = true;
    Row& pivot = reduced_[best_r];
    const Rational inv = Rational(1) / pivot.entries.at(best_c);
    if (inv != 1) {
      for (auto& [c, v] : pivot.entries) v *= inv;
      for (auto& [c, v] : pivot.transform) v *= inv;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == best_r) continue;
      auto it = reduced_[r].entries.find(best_c);
      if (it == reduced_[r].entries.end()) continue;
      const Rational coef = -it->second;
      axpy(reduced_[r].entries, pivot.entries, coef);
      axpy(reduced_[r].transform, pivot.transform, coef);
    }
    pivots_.emplace_back(best_r, best_c);
  }
  std::sort(pivots_.begin(), pivots_.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
}

SolveOutcome RowReduction::solve(const Vec& b) const {
  assert(b.size() == rows_);
  SolveOutcome out;
  // consistency: transformed rhs must vanish on zero rows of R
  Vec tb(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational s(0);
    for (const auto& [c, v] : reduced_[r].transform) s += v * b[c];
    tb[r] = s;
  }
  std::vector<bool> is_pivot_row(rows_, false);
  for (const auto& [r, c] : pivots_) is_pivot_row[r] = true;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (!is_pivot_row[r] && tb[r] != 0) {
      Vec cert(rows_, Rational(0));
      for (const auto& [c, v] : reduced_[r].transform) cert[c] = v;
      out.certificate = std::move(cert);
      return out;
    }
  }
  Vec x(cols_, Rational(0));
  for (const auto& [r, c] : pivots_) x[c] = tb[r];
  out.solution = std::move(x);
  return out;
}

std::vector<Vec> RowReduction::kernel_basis() const {
  std::vector<bool> is_pivot_col(cols_, false);
  for (const auto& [r, c] : pivots_) is_pivot_col[c] = true;

  std::vector<Vec> raw;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot_col[f]) continue;
    Vec v(cols_, Rational(0));
    v[f] = 1;
    for (const auto& [r, c] : pivots_) {
      auto it = reduced_[r].entries.find(f);
      if (it != reduced_[r].entries.end()) v[c] = -it->second;
    }
    raw.push_back(std::move(v));
  }
  return echelonize(raw, cols_);
}

std::size_t rank(const SparseMatrix& m, PivotStrategy strategy) {
  return RowReduction(m, strategy).rank();
}

std::vector<Vec> kernel_basis(const SparseMatrix& m, PivotStrategy strategy) {
  return RowReduction(m, strategy).kernel_basis();
}

SolveOutcome solve(const SparseMatrix& m, const Vec& b,
                   PivotStrategy strategy) {
  return RowReduction(m, strategy).solve(b);
}

std::vector<Vec> echelonize(const std::vector<Vec>& vectors,
                            std::size_t ambient) {
  // row reduce the stack of vectors to rref; deterministic regardless of the
  // pivot strategy used elsewhere.
  std::vector<std::map<std::size_t, Rational>> rows;
  for (const auto& v : vectors) {
    std::map<std::size_t, Rational> r;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) r.emplace(i, v[i]);
    // reduce against existing rows
    for (const auto& piv : rows) {
      const std::size_t pc = piv.begin()->first;
      auto it = r.find(pc);
      if (it == r.end()) continue;
      axpy(r, piv, -it->second);
    }
    if (r.empty()) continue;
    const Rational inv = Rational(1) / r.begin()->second;
    if (inv != 1)
      for (auto& [c, val] : r) val *= inv;
    // back-substitute into existing rows
    const std::size_t pc = r.begin()->first;
    for (auto& piv : rows) {
      auto it = piv.find(pc);
      if (it == piv.end()) continue;
      axpy(piv, r, -it->second);
    }
    rows.push_back(std::move(r));
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return a.begin()->first < b.begin()->first;
  });
  std::vector<Vec> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    Vec v(ambient, Rational(0));
    for (const auto& [c, val] : r) v[c] = val;
    out.push_back(std::move(v));
  }
  return out;
}

QuotientSpace::QuotientSpace(const std::vector<Vec>& cycles,
                             const std::vector<Vec>& boundaries,
                             std::size_t ambient, PivotStrategy strategy)
    : ambient_(ambient) {
  const std::vector<Vec> bnd = echelonize(boundaries, ambient);

  // precondition: boundaries lie in the cycle span
  {
    std::vector<Vec> all = cycles;
    all.insert(all.end(), bnd.begin(), bnd.end());
    const std::size_t rc =
        rank(SparseMatrix::from_columns(cycles, ambient), strategy);
    const std::size_t ra =
        rank(SparseMatrix::from_columns(all, ambient), strategy);
    if (ra != rc)
      throw InvalidComplex(
          "quotient: a boundary vector is not in the span of the cycles");
  }

  // representatives: residues of the cycles modulo span(boundaries),
  // collected greedily so that reps (+) boundaries is a direct sum
  std::vector<std::map<std::size_t, Rational>> span;
  auto to_sparse = [](const Vec& v) {
    std::map<std::size_t, Rational> r;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) r.emplace(i, v[i]);
    return r;
  };
  auto reduce = [&](std::map<std::size_t, Rational> r) {
    for (const auto& piv : span) {
      auto it = r.find(piv.begin()->first);
      if (it == r.end()) continue;
      const Rational coef = it->second;
      for (const auto& [c, v] : piv) {
        auto jt = r.find(c);
        if (jt == r.end()) {
          r.emplace(c, -coef * v);
        } else {
          jt->second -= coef * v;
          if (jt->second == 0) r.erase(jt);
        }
      }
    }
    return r;
  };
  auto insert_sorted = [&](std::map<std::size_t, Rational> r) {
    const Rational inv = Rational(1) / r.begin()->second;
    if (inv != 1)
      for (auto& [c, v] : r) v *= inv;
    span.push_back(std::move(r));
    std::sort(span.begin(), span.end(), [](const auto& a, const auto& b) {
      return a.begin()->first < b.begin()->first;
    });
  };
  for (const auto& b : bnd) insert_sorted(to_sparse(b));
  for (const auto& c : cycles) {
    auto r = reduce(to_sparse(c));
    if (r.empty()) continue;
    const Rational inv = Rational(1) / r.begin()->second;
    Vec rep(ambient, Rational(0));
    for (const auto& [col, v] : r) rep[col] = inv * v;
    reps_.push_back(std::move(rep));
    insert_sorted(std::move(r));
  }

  std::vector<Vec> cols = reps_;
  cols.insert(cols.end(), bnd.begin(), bnd.end());
  solver_ = std::make_shared<RowReduction>(
      SparseMatrix::from_columns(cols, ambient), strategy);
}

Vec QuotientSpace::project(const Vec& cycle) const {
  if (reps_.empty() && !solver_) return {};
  auto out = solver_->solve(cycle);
  if (!out.solution.has_value())
    throw InvalidComplex("quotient: vector is not in the cycle span");
  Vec coords(reps_.size());
  for (std::size_t i = 0; i < reps_.size(); ++i)
    coords[i] = (*out.solution)[i];
  return coords;
}

}  // namespace whale
