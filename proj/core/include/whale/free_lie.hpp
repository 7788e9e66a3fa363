#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "whale/sparse_matrix.hpp"
#include "whale/tensor.hpp"

namespace whale {

/// Degreewise coordinatization of the free graded Lie algebra on a generator
/// set, via the embedding into the tensor algebra. Caches tensor word lists,
/// a Lie basis per degree and the solver expressing tensor images in that
/// basis. Thread safe; all caches are built under a lock.
class FreeLieContext {
 public:
  explicit FreeLieContext(GeneratorSetPtr gens);

  const GeneratorSetPtr& generators() const { return gens_; }

  /// Tensor words of total degree n, lexicographic by generator index.
  const std::vector<Word>& words(int degree) const;

  /// Trees whose tensor images form a basis of the degree-n component.
  /// Deterministic across runs.
  const std::vector<LieElement>& basis(int degree) const;
  std::size_t dim(int degree) const;

  /// Dense tensor coordinates of a homogeneous element over words(degree).
  Vec tensor_vector(const LieElement& x, int degree) const;

  /// Coordinates in the degree-n Lie basis.
  Vec coordinates(const LieElement& x, int degree) const;
  LieElement from_coordinates(int degree, const Vec& coords) const;

 private:
  struct DegreeData {
    std::vector<Word> words;
    std::map<Word, std::size_t> word_index;
    std::vector<LieElement> basis;
    std::shared_ptr<const RowReduction> solver;  // columns = basis images
    bool words_done = false;
    bool basis_done = false;
  };
  DegreeData& degree_data(int degree) const;
  void build_words(int degree, DegreeData& dd) const;
  void build_basis(int degree, DegreeData& dd) const;

  GeneratorSetPtr gens_;
  mutable std::recursive_mutex mu_;
  mutable std::map<int, DegreeData> cache_;
};

}  // namespace whale
