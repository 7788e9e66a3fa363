#include "whale/algebra.hpp"

#include <cassert>

#include "whale/errors.hpp"

namespace whale {

void DglAlgebra::check_degree(int degree, const char* what) const {
  if (degree > truncation_degree())
    throw CapTooLow(std::string(what) + ": degree " + std::to_string(degree) +
                        " exceeds the algebra's truncation degree " +
                        std::to_string(truncation_degree()),
                    degree, truncation_degree());
}

FreeDgl::FreeDgl(GeneratorSetPtr gens, std::vector<LieElement> d_values,
                 std::string name)
    : gens_(std::move(gens)),
      d_values_(std::move(d_values)),
      name_(std::move(name)),
      ctx_(std::make_shared<FreeLieContext>(gens_)) {
  if (d_values_.size() != gens_->size())
    throw ValidationError("differential values must match generator count");
  for (auto& v : d_values_)
    if (!v.generators()) v = LieElement(gens_);
}

FreeDglPtr FreeDgl::make(std::vector<Generator> gens,
                         std::map<std::string, LieElement> d_by_name,
                         std::string name) {
  auto gs = std::make_shared<const GeneratorSet>(std::move(gens));
  std::vector<LieElement> values(gs->size(), LieElement(gs));
  for (auto& [n, v] : d_by_name) {
    auto idx = gs->index_of(n);
    if (!idx) throw ValidationError("unknown generator '" + n + "'");
    values[*idx] = std::move(v);
  }
  return std::make_shared<const FreeDgl>(gs, std::move(values),
                                         std::move(name));
}

LieElement FreeDgl::bracket(const LieElement& x, const LieElement& y) const {
  if (!same_generators(x.generators(), gens_) ||
      !same_generators(y.generators(), gens_))
    throw AlgebraMismatch("bracket: element not over this algebra");
  return formal_bracket(x, y);
}

LieElement FreeDgl::differential(const LieElement& x) const {
  if (!same_generators(x.generators(), gens_))
    throw AlgebraMismatch("differential: element not over this algebra");
  // d[x,y] = [dx, y] + (-1)^{|x|}[x, dy], recursively over trees
  struct Rec {
    const FreeDgl& alg;
    LieElement on_tree(const BracketTree& t) {
      if (t.is_leaf()) return alg.d_values_[t.leaf_index()];
      const LieElement l = LieElement::term(alg.gens_, Rational(1), t.left());
      const LieElement r = LieElement::term(alg.gens_, Rational(1), t.right());
      LieElement out = formal_bracket(on_tree(t.left()), r);
      LieElement second = formal_bracket(l, on_tree(t.right()));
      if (t.left().degree() % 2 != 0)
        out -= second;
      else
        out += second;
      return out;
    }
  } rec{*this};
  LieElement out(gens_);
  for (const auto& [t, c] : x.terms()) out += c * rec.on_tree(t);
  return out;
}

std::size_t FreeDgl::dim(int degree) const { return ctx_->dim(degree); }

LieElement FreeDgl::basis_element(int degree, std::size_t i) const {
  return ctx_->basis(degree)[i];
}

Vec FreeDgl::coordinates(const LieElement& x, int degree) const {
  if (!same_generators(x.generators(), gens_))
    throw AlgebraMismatch("coordinates: element not over this algebra");
  return ctx_->coordinates(x, degree);
}

bool FreeDgl::is_zero(const LieElement& x) const { return tensor_zero(x); }

std::vector<std::string> FreeDgl::validate() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < gens_->size(); ++i) {
    const auto& name = gens_->name(i);
    const int deg = gens_->degree(i);
    const LieElement& dv = d_values_[i];
    if (dv.empty()) continue;
    auto hd = dv.homogeneous_degree();
    if (!hd) {
      out.push_back("d(" + name + ") is not homogeneous");
      continue;
    }
    if (*hd != deg - 1)
      out.push_back("d(" + name + ") has degree " + std::to_string(*hd) +
                    ", expected " + std::to_string(deg - 1));
    if (deg == 1 && !tensor_zero(dv))
      out.push_back("d(" + name + ") nonzero in degree 0 breaks connectedness");
  }
  for (std::size_t i = 0; i < gens_->size(); ++i) {
    if (d_values_[i].empty()) continue;
    if (!tensor_zero(differential(d_values_[i])))
      out.push_back("d(d(" + gens_->name(i) + ")) != 0");
  }
  return out;
}

bool FreeDgl::is_minimal() const {
  for (const auto& dv : d_values_)
    if (!tensor_zero(dv.part_of_length(1))) return false;
  return true;
}

std::map<std::pair<std::size_t, std::size_t>, Rational>
FreeDgl::quadratic_coefficients(std::size_t gen_index) const {
  std::map<std::pair<std::size_t, std::size_t>, Rational> out;
  const LieElement quad = d_values_[gen_index].part_of_length(2);
  if (tensor_zero(quad)) return out;
  const int deg = gens_->degree(gen_index) - 1;

  // candidate pairs [v_i, v_j], i <= j, of matching degree; skip [v,v] for
  // even-degree v (identically zero)
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<Vec> images;
  for (std::size_t i = 0; i < gens_->size(); ++i)
    for (std::size_t j = i; j < gens_->size(); ++j) {
      if (gens_->degree(i) + gens_->degree(j) != deg) continue;
      if (i == j && gens_->degree(i) % 2 == 0) continue;
      pairs.emplace_back(i, j);
      images.push_back(
          ctx_->tensor_vector(formal_bracket(gen(i), gen(j)), deg));
    }
  const Vec rhs = ctx_->tensor_vector(quad, deg);
  auto sol = solve(SparseMatrix::from_columns(images, ctx_->words(deg).size()),
                   rhs);
  if (!sol.solution.has_value())
    throw Error("internal: quadratic part outside the pairwise bracket span");
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if ((*sol.solution)[k] != 0) out.emplace(pairs[k], (*sol.solution)[k]);
  return out;
}

std::vector<std::string> GeneratorFiltration::validate(
    const FreeDgl& algebra) const {
  std::vector<std::string> out;
  const auto& gens = *algebra.generators();
  if (stage.size() != gens.size()) {
    out.push_back("filtration must assign a stage to every generator");
    return out;
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (stage[i] < 1 || stage[i] > length) {
      out.push_back("stage of '" + gens.name(i) + "' outside 1.." +
                    std::to_string(length));
      continue;
    }
    const LieElement& dv = algebra.differential_of(i);
    if (dv.empty()) continue;
    // every tensor word letter must have stage < stage(v)
    const TensorCoordinates tc = to_tensor(dv);
    for (const auto& [w, c] : tc.coords())
      for (auto g : w)
        if (stage[g] >= stage[i]) {
          out.push_back("d(" + gens.name(i) + ") involves '" + gens.name(g) +
                        "' of stage >= " + std::to_string(stage[i]));
          goto next_gen;
        }
  next_gen:;
  }
  return out;
}

AlgebraHomology homology(const DglAlgebra& algebra, int degree,
                         PivotStrategy strategy) {
  algebra.check_degree(degree + 1, "homology");
  const std::size_t n = algebra.dim(degree);
  const std::size_t n_lo = degree >= 1 ? algebra.dim(degree - 1) : 0;
  const std::size_t n_hi = algebra.dim(degree + 1);

  SparseMatrix d_n(n_lo, n);
  for (std::size_t j = 0; j < n; ++j) {
    const LieElement b = algebra.basis_element(degree, j);
    const LieElement db = algebra.differential(b);
    if (n_lo == 0) continue;
    const Vec col = algebra.coordinates(db, degree - 1);
    for (std::size_t i = 0; i < n_lo; ++i)
      if (col[i] != 0) d_n.set(i, j, col[i]);
  }
  std::vector<Vec> cycles = RowReduction(d_n, strategy).kernel_basis();

  std::vector<Vec> boundaries;
  for (std::size_t j = 0; j < n_hi; ++j) {
    const LieElement b = algebra.basis_element(degree + 1, j);
    const LieElement db = algebra.differential(b);
    if (algebra.is_zero(db)) continue;
    boundaries.push_back(algebra.coordinates(db, degree));
  }

  AlgebraHomology h;
  h.quotient = QuotientSpace(cycles, boundaries, n, strategy);
  h.dimension = h.quotient.dimension();
  for (const auto& rep : h.quotient.representatives()) {
    LieElement e(algebra.generators());
    for (std::size_t i = 0; i < n; ++i)
      if (rep[i] != 0) e += rep[i] * algebra.basis_element(degree, i);
    h.representatives.push_back(std::move(e));
  }
  return h;
}

}  // namespace whale
