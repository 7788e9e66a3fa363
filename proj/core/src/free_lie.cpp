#include "whale/free_lie.hpp"

#include <cassert>

#include "whale/errors.hpp"

namespace whale {

FreeLieContext::FreeLieContext(GeneratorSetPtr gens)
    : gens_(std::move(gens)) {}

FreeLieContext::DegreeData& FreeLieContext::degree_data(int degree) const {
  return cache_[degree];
}

const std::vector<Word>& FreeLieContext::words(int degree) const {
  std::scoped_lock lock(mu_);
  DegreeData& dd = degree_data(degree);
  if (!dd.words_done) build_words(degree, dd);
  return dd.words;
}

void FreeLieContext::build_words(int degree, DegreeData& dd) const {
  dd.words_done = true;
  if (degree < 0) return;
  if (degree == 0) {
    dd.words.push_back({});
    dd.word_index.emplace(Word{}, 0);
    return;
  }
  for (std::uint32_t g = 0; g < gens_->size(); ++g) {
    const int d = gens_->degree(g);
    if (d > degree) continue;
    const std::vector<Word>& tails = words(degree - d);
    for (const Word& t : tails) {
      Word w;
      w.reserve(t.size() + 1);
      w.push_back(g);
      w.insert(w.end(), t.begin(), t.end());
      dd.word_index.emplace(w, dd.words.size());
      dd.words.push_back(std::move(w));
    }
  }
}

Vec FreeLieContext::tensor_vector(const LieElement& x, int degree) const {
  std::scoped_lock lock(mu_);
  DegreeData& dd = degree_data(degree);
  if (!dd.words_done) build_words(degree, dd);
  Vec v(dd.words.size(), Rational(0));
  const TensorCoordinates tc = to_tensor(x.part_of_degree(degree));
  for (const auto& [w, c] : tc.coords()) {
    auto it = dd.word_index.find(w);
    assert(it != dd.word_index.end());
    v[it->second] = c;
  }
  return v;
}

const std::vector<LieElement>& FreeLieContext::basis(int degree) const {
  std::scoped_lock lock(mu_);
  DegreeData& dd = degree_data(degree);
  if (!dd.basis_done) build_basis(degree, dd);
  return dd.basis;
}

void FreeLieContext::build_basis(int degree, DegreeData& dd) const {
  dd.basis_done = true;
  if (degree < 1) return;
  if (!dd.words_done) build_words(degree, dd);

  // candidates: generators of this degree, then brackets of basis elements of
  // complementary lower degrees
  std::vector<LieElement> cands;
  for (std::size_t g = 0; g < gens_->size(); ++g)
    if (gens_->degree(g) == degree) cands.push_back(LieElement::generator(gens_, g));
  for (int d1 = 1; 2 * d1 <= degree; ++d1) {
    const int d2 = degree - d1;
    const auto& b1 = basis(d1);
    const auto& b2 = basis(d2);
    if (d1 < d2) {
      for (const auto& x : b1)
        for (const auto& y : b2) cands.push_back(formal_bracket(x, y));
    } else {
      for (std::size_t i = 0; i < b1.size(); ++i)
        for (std::size_t j = i; j < b2.size(); ++j)
          cands.push_back(formal_bracket(b1[i], b2[j]));
    }
  }

  // greedy independent subset, incremental echelon over tensor coordinates
  std::vector<std::map<std::size_t, Rational>> rref;
  std::vector<Vec> accepted_vectors;
  for (const auto& cand : cands) {
    Vec tv = tensor_vector(cand, degree);
    std::map<std::size_t, Rational> r;
    for (std::size_t i = 0; i < tv.size(); ++i)
      if (tv[i] != 0) r.emplace(i, tv[i]);
    for (const auto& piv : rref) {
      auto it = r.find(piv.begin()->first);
      if (it == r.end()) continue;
      const Rational coef = -it->second;
      for (const auto& [c, v] : piv) {
        auto jt = r.find(c);
        if (jt == r.end()) {
          r.emplace(c, coef * v);
        } else {
          jt->second += coef * v;
          if (jt->second == 0) r.erase(jt);
        }
      }
    }
    if (r.empty()) continue;
    const Rational inv = Rational(1) / r.begin()->second;
    if (inv != 1)
      for (auto& [c, v] : r) v *= inv;
    rref.push_back(std::move(r));
    dd.basis.push_back(cand);
    accepted_vectors.push_back(std::move(tv));
  }

  dd.solver = std::make_shared<RowReduction>(
      SparseMatrix::from_columns(accepted_vectors, dd.words.size()));
}

std::size_t FreeLieContext::dim(int degree) const {
  return basis(degree).size();
}

Vec FreeLieContext::coordinates(const LieElement& x, int degree) const {
  std::scoped_lock lock(mu_);
  DegreeData& dd = degree_data(degree);
  if (!dd.basis_done) build_basis(degree, dd);
  const Vec tv = tensor_vector(x, degree);
  auto out = dd.solver->solve(tv);
  if (!out.solution.has_value())
    throw Error("internal: element outside the span of the Lie basis");
  return *out.solution;
}

LieElement FreeLieContext::from_coordinates(int degree,
                                            const Vec& coords) const {
  const auto& b = basis(degree);
  assert(coords.size() == b.size());
  LieElement out(gens_);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (coords[i] != 0) out += coords[i] * b[i];
  return out;
}

}  // namespace whale
