#pragma once

// Shared builders and independent oracles for the test suites.

#include <random>

#include "whale/finite_lie.hpp"
#include "whale/model_io.hpp"

namespace whale::testing {

inline Rational Q(long n, long d = 1) { return Rational(n, d); }

// ---------------------------------------------------------------------------
// model builders

/// L(u; 0) with |u| = degree.
inline FreeDglPtr sphere_model(int degree, const std::string& name = "u") {
  return FreeDgl::make({{name, degree}}, {}, "sphere");
}

/// Quillen model of the Example-6.7-style target, truncated so that it is
/// faithful through Lie degree 7.
inline FreeDglPtr example_y_model() {
  std::vector<Generator> gens = {
      {"w1", 1},   {"w2", 2},   {"w3", 2},   {"w11", 3},
      {"w12", 4},  {"w13", 4},  {"w23", 5},  {"w111", 5},
      {"w112", 6}, {"w113", 6}, {"w1111", 7}};
  auto gs = std::make_shared<const GeneratorSet>(gens);
  auto g = [&](const char* n) {
    return LieElement::generator(gs, *gs->index_of(n));
  };
  std::map<std::string, LieElement> d;
  d["w11"] = Q(1, 2) * formal_bracket(g("w1"), g("w1"));
  d["w12"] = formal_bracket(g("w1"), g("w2"));
  d["w13"] = formal_bracket(g("w1"), g("w3"));
  d["w23"] = formal_bracket(g("w2"), g("w3"));
  d["w111"] = formal_bracket(g("w1"), g("w11"));
  d["w112"] = formal_bracket(g("w1"), g("w12")) -
              formal_bracket(g("w2"), g("w11"));
  d["w113"] = formal_bracket(g("w1"), g("w13")) -
              formal_bracket(g("w3"), g("w11"));
  d["w1111"] = formal_bracket(g("w1"), g("w111")) +
               Q(1, 2) * formal_bracket(g("w11"), g("w11"));
  std::vector<LieElement> values(gs->size(), LieElement(gs));
  for (auto& [n, v] : d) values[*gs->index_of(n)] = v;
  return std::make_shared<const FreeDgl>(gs, std::move(values), "LY");
}

/// The Example-6.7 map L(v; 0) -> LY, v |-> w3, |v| = 2.
inline DglMapPtr example_map() {
  auto LX = FreeDgl::make({{"v", 2}}, {}, "LX");
  auto LY = example_y_model();
  std::vector<LieElement> values = {
      LieElement::generator(LY->generators(), *LY->generators()->index_of("w3"))};
  return std::make_shared<const DglMap>(LX, LY, std::move(values), "f");
}

// ---------------------------------------------------------------------------
// random model generation

struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  int uniform(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(engine);
  }
  Rational coefficient() {
    static const long nums[] = {-2, -1, -1, 1, 1, 2, 3};
    static const long dens[] = {1, 1, 2};
    return Rational(nums[uniform(0, 6)], dens[uniform(0, 2)]);
  }
};

/// Random two-stage free DGL: lower generators closed, upper generators map
/// to random quadratic elements of the lower stage (d*d = 0 holds by
/// construction). Degrees <= max_degree, at most max_gens generators.
inline FreeDglPtr random_two_stage_dgl(Rng& rng, int max_gens = 5,
                                       int max_degree = 5) {
  const int n_lower = rng.uniform(1, std::max(1, max_gens - 1));
  const int n_upper = rng.uniform(0, max_gens - n_lower);

  std::vector<Generator> gens;
  std::vector<int> lower_degrees;
  for (int i = 0; i < n_lower; ++i) {
    const int d = rng.uniform(1, std::max(1, max_degree - 2));
    lower_degrees.push_back(d);
    gens.push_back({"x" + std::to_string(i), d});
  }

  struct Pair {
    std::size_t i, j;
    int degree;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < lower_degrees.size(); ++i)
    for (std::size_t j = i; j < lower_degrees.size(); ++j) {
      if (i == j && lower_degrees[i] % 2 == 0) continue;
      const int d = lower_degrees[i] + lower_degrees[j];
      if (d + 1 <= max_degree) pairs.push_back({i, j, d});
    }

  for (int u = 0; u < n_upper; ++u) {
    int deg;
    if (!pairs.empty() && rng.uniform(0, 3) > 0) {
      deg = pairs[static_cast<std::size_t>(rng.uniform(
                      0, static_cast<int>(pairs.size()) - 1))]
                .degree +
            1;
    } else {
      deg = rng.uniform(1, max_degree);  // closed upper generator
    }
    gens.push_back({"y" + std::to_string(u), deg});
  }

  auto gs = std::make_shared<const GeneratorSet>(gens);
  std::vector<LieElement> values(gs->size(), LieElement(gs));
  for (int u = 0; u < n_upper; ++u) {
    const std::size_t gi = lower_degrees.size() + u;
    const int want = gs->degree(gi) - 1;
    LieElement dv(gs);
    for (const auto& p : pairs) {
      if (p.degree != want) continue;
      if (rng.uniform(0, 1) == 0) continue;
      dv += rng.coefficient() *
            formal_bracket(LieElement::generator(gs, p.i),
                           LieElement::generator(gs, p.j));
    }
    values[gi] = dv;
  }
  return std::make_shared<const FreeDgl>(gs, std::move(values), "R");
}

/// Random DGL map into a target algebra: closed generators go to random
/// cycles, the rest get preimages solving the chain condition. Where a
/// required solve fails, the offending assignments are zeroed and the
/// construction retried, so the result is always a valid chain map.
inline DglMapPtr random_map(Rng& rng, const FreeDglPtr& src,
                            const DglAlgebraPtr& tgt) {
  const auto& gens = *src->generators();
  std::vector<LieElement> values(gens.size(), LieElement(tgt->generators()));
  std::vector<bool> closed(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    closed[i] = src->is_zero(src->differential_of(i));
    if (!closed[i]) continue;
    const int d = gens.degree(i);
    const std::size_t dim = d <= tgt->truncation_degree() ? tgt->dim(d) : 0;
    LieElement v(tgt->generators());
    for (std::size_t k = 0; k < dim; ++k)
      if (rng.uniform(0, 2) == 0)
        v += rng.coefficient() * tgt->basis_element(d, k);
    if (tgt->is_zero(tgt->differential(v))) values[i] = v;
  }
  for (int attempt = 0; attempt < 16; ++attempt) {
    bool retry = false;
    for (std::size_t i = 0; i < gens.size() && !retry; ++i) {
      if (closed[i]) continue;
      auto probe =
          std::make_shared<const DglMap>(src, tgt, values, "probe");
      const LieElement t = probe->apply(src->differential_of(i));
      if (tgt->is_zero(t)) {
        values[i] = LieElement(tgt->generators());
        continue;
      }
      const int d = gens.degree(i);
      // solve d_K x = t over the degree-d basis
      const std::size_t dim = tgt->dim(d);
      std::vector<Vec> cols;
      for (std::size_t k = 0; k < dim; ++k)
        cols.push_back(tgt->coordinates(
            tgt->differential(tgt->basis_element(d, k)), d - 1));
      auto sol = solve(SparseMatrix::from_columns(cols, tgt->dim(d - 1)),
                       tgt->coordinates(t, d - 1));
      if (!sol.solution.has_value()) {
        // zero the closed assignments feeding d(v) and start over
        const TensorCoordinates tc = to_tensor(src->differential_of(i));
        for (const auto& [w, c] : tc.coords())
          for (auto gidx : w) values[gidx] = LieElement(tgt->generators());
        retry = true;
        break;
      }
      LieElement x(tgt->generators());
      for (std::size_t k = 0; k < dim; ++k)
        if ((*sol.solution)[k] != 0)
          x += (*sol.solution)[k] * tgt->basis_element(d, k);
      values[i] = x;
    }
    if (!retry) break;
  }
  auto out = std::make_shared<const DglMap>(src, tgt, values, "rnd");
  return out;
}

/// Random delta-cycle in Rel_p(ad_psi): sample the kernel of the cone
/// boundary at degree p.
inline std::vector<RelElement> random_rel_cycles(Rng& rng,
                                                 const RelContextPtr& ctx,
                                                 int degree, int count) {
  const auto kernel =
      RowReduction(ctx->complex().boundary(degree)).kernel_basis();
  std::vector<RelElement> out;
  if (kernel.empty()) return out;
  for (int c = 0; c < count; ++c) {
    Vec v(kernel.front().size(), Rational(0));
    for (const auto& k : kernel) {
      const Rational coef = rng.coefficient();
      if (rng.uniform(0, 1) == 0) continue;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += coef * k[i];
    }
    out.push_back(ctx->from_coordinates(degree, v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// independent oracles

/// Free graded Lie algebra dimensions through `cap` from the tensor-algebra
/// Hilbert series: T(t) = prod_n (1+t^n)^{l_n} / (1-t^n)^{l_n} with the
/// factor chosen by the parity of n. Pure counting, no linear algebra.
inline std::vector<long long> pbw_lie_dims(const std::vector<int>& degrees,
                                           int cap) {
  std::vector<long long> T(cap + 1, 0);
  T[0] = 1;
  for (int n = 1; n <= cap; ++n)
    for (int d : degrees)
      if (d <= n) T[n] += T[n - d];

  std::vector<long long> R = T;
  std::vector<long long> dims(cap + 1, 0);
  for (int n = 1; n <= cap; ++n) {
    const long long l = R[n];
    dims[n] = l;
    if (l == 0) continue;
    if (n % 2 != 0) {
      // divide by (1 + t^n)^l
      for (long long rep = 0; rep < l; ++rep)
        for (int k = n; k <= cap; ++k) R[k] -= R[k - n];
    } else {
      // multiply by (1 - t^n)^l
      for (long long rep = 0; rep < l; ++rep)
        for (int k = cap; k >= n; --k) R[k] -= R[k - n];
    }
  }
  return dims;
}

/// Rank of the span of all bracket trees of the given degree (brute force,
/// no basis selection involved).
inline std::size_t all_tree_rank(const FreeDglPtr& algebra, int degree) {
  const auto& gens = *algebra->generators();
  std::map<int, std::vector<LieElement>> trees;
  for (int d = 1; d <= degree; ++d) {
    auto& list = trees[d];
    for (std::size_t g = 0; g < gens.size(); ++g)
      if (gens.degree(g) == d)
        list.push_back(LieElement::generator(algebra->generators(), g));
    for (int d1 = 1; d1 < d; ++d1)
      for (const auto& l : trees[d1])
        for (const auto& r : trees[d - d1])
          list.push_back(formal_bracket(l, r));
  }
  std::vector<Vec> vectors;
  const auto& ctx = algebra->context();
  for (const auto& t : trees[degree])
    vectors.push_back(ctx.tensor_vector(t, degree));
  if (vectors.empty()) return 0;
  return rank(SparseMatrix::from_columns(vectors, vectors.front().size()));
}

}  // namespace whale::testing
