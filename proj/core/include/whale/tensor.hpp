#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "whale/lie_element.hpp"

namespace whale {

/// Tensor word: sequence of generator indices.
using Word = std::vector<std::uint32_t>;

/// Finitely supported coordinates in the tensor algebra, one degree.
class TensorCoordinates {
 public:
  TensorCoordinates() = default;
  explicit TensorCoordinates(int degree) : degree_(degree) {}

  int degree() const { return degree_; }
  const std::map<Word, Rational>& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }

  void add(const Word& w, const Rational& c);
  TensorCoordinates& operator+=(const TensorCoordinates& other);
  TensorCoordinates& operator*=(const Rational& c);
  bool operator==(const TensorCoordinates&) const = default;

 private:
  int degree_ = 0;
  std::map<Word, Rational> coords_;
};

/// Canonical normal form: bracket -> graded commutator
/// a (x) b - (-1)^{|a||b|} b (x) a. Kernel = the antisymmetry and Jacobi
/// relations, so semantic equality of elements is equality of images.
/// Throws DegreeError on non-homogeneous input.
TensorCoordinates to_tensor(const LieElement& x);

/// Semantic zero test via the normal form (works for free algebras).
bool tensor_zero(const LieElement& x);

/// Semantic equality via the normal form.
bool tensor_equal(const LieElement& x, const LieElement& y);

}  // namespace whale
