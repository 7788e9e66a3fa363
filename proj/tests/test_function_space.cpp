#include "doctest.h"
#include "support.hpp"
#include "whale/errors.hpp"
#include "whale/function_space.hpp"

using namespace whale;
using testing::Q;
using testing::Rng;

namespace {

/// S^2 x S^2 model: v1, v2 in degree 1, v3 in degree 3 with d v3 = [v1, v2].
FreeDglPtr s2xs2_model() {
  auto gs = std::make_shared<const GeneratorSet>(
      std::vector<Generator>{{"v1", 1}, {"v2", 1}, {"v3", 3}});
  std::vector<LieElement> d(3, LieElement(gs));
  d[2] = formal_bracket(LieElement::generator(gs, 0),
                        LieElement::generator(gs, 1));
  return std::make_shared<const FreeDgl>(gs, d, "s2xs2");
}

/// CP^2 model: v1 degree 1, v2 degree 3, d v2 = 1/2 [v1, v1].
FreeDglPtr cp2_model() {
  auto gs = std::make_shared<const GeneratorSet>(
      std::vector<Generator>{{"v1", 1}, {"v2", 3}});
  std::vector<LieElement> d(2, LieElement(gs));
  d[1] = Q(1, 2) * formal_bracket(LieElement::generator(gs, 0),
                                  LieElement::generator(gs, 0));
  return std::make_shared<const FreeDgl>(gs, d, "cp2");
}

DglMapPtr map_to_sphere(const FreeDglPtr& X, int n, const char* hit_gen,
                        const Rational& ck) {
  auto S = testing::sphere_model(n - 1);
  std::vector<LieElement> values(X->generators()->size(),
                                 LieElement(S->generators()));
  if (hit_gen) {
    values[*X->generators()->index_of(hit_gen)] = ck * S->gen(0);
  }
  return std::make_shared<const DglMap>(
      X, std::static_pointer_cast<const DglAlgebra>(S), values, "f");
}

}  // namespace

TEST_CASE("analyze_component on the worked example") {
  auto f = testing::example_map();
  const ComponentReport report =
      analyze_component(f, MapMode::Free, 2, 4, 5);
  REQUIRE(report.dims.size() == 3);
  // the degree-2 and degree-3 classes pair to a nonzero degree-4 class
  bool found = false;
  for (const auto& e : report.products)
    if (e.deg_a == 2 && e.deg_b == 3 && e.nonzero) found = true;
  CHECK(found);
  CHECK(report.wl.length >= 2);
  CHECK_FALSE(report.wl.exhausted);
  CHECK_THROWS_AS(analyze_component(f, MapMode::Free, 2, 5, 5), CapTooLow);
  CHECK_THROWS_AS(analyze_component(f, MapMode::Free, 1, 4, 5), DegreeError);
}

TEST_CASE("zero map: free dims split as H(K) + shifted Der") {
  auto LX = FreeDgl::make({{"s2", 2}});
  auto LY = testing::example_y_model();
  auto f = zero_map(LX, LY, "0");
  const ComponentReport report = analyze_component(f, MapMode::Free, 2, 4, 5);
  for (const auto& [deg, dim] : report.dims) {
    const std::size_t expect = homology(*LY, deg - 1).dimension +
                               homology(*LY, deg + 2).dimension;
    CHECK(dim == expect);
  }
}

TEST_CASE("based dims for a sphere source equal the shifted target") {
  auto LX = FreeDgl::make({{"v", 2}});
  auto LY = testing::example_y_model();
  auto f = zero_map(LX, LY, "0");
  const ComponentReport report =
      analyze_component(f, MapMode::Based, 2, 4, 5);
  for (const auto& [deg, dim] : report.dims)
    CHECK(dim == homology(*LY, deg + 2).dimension);
}

TEST_CASE("coformal replacement validates and rejects") {
  auto K = testing::sphere_model(3);
  auto LX = FreeDgl::make({{"x", 3}});
  auto f = std::make_shared<const DglMap>(
      LX, std::static_pointer_cast<const DglAlgebra>(K),
      std::vector<LieElement>{K->gen(0)}, "f");

  auto H = homology_algebra(*K, 8, "H");
  std::vector<LieElement> rho_values = {H->basis_element(3, 0)};
  auto rho = std::make_shared<const DglMap>(
      K, std::static_pointer_cast<const DglAlgebra>(H), rho_values, "rho");
  auto g = coformal_replace(f, rho, 7);
  CHECK(g->target() == rho->target());

  // a replacement that forgets the bracket is rejected
  auto gs = std::make_shared<const GeneratorSet>(
      std::vector<Generator>{{"u", 3}, {"uu", 6}});
  auto A = std::make_shared<const FiniteLie>(
      gs, std::map<std::pair<std::size_t, std::size_t>, LieElement>{});
  std::vector<LieElement> bad_values = {A->gen(0)};
  auto bad = std::make_shared<const DglMap>(
      K, std::static_pointer_cast<const DglAlgebra>(A), bad_values, "bad");
  CHECK_THROWS_AS(coformal_replace(f, bad, 7), QuasiIsoViolation);
}

TEST_CASE("products agree across a coformal replacement") {
  auto K = testing::sphere_model(3);
  auto LX = s2xs2_model();
  auto f = zero_map(LX, std::static_pointer_cast<const DglAlgebra>(K), "0");
  auto H = homology_algebra(*K, 9, "H");
  std::vector<LieElement> rho_values = {H->basis_element(3, 0)};
  auto rho = std::make_shared<const DglMap>(
      K, std::static_pointer_cast<const DglAlgebra>(H), rho_values, "rho");
  auto g = coformal_replace(f, rho, 6);

  const ComponentReport before = analyze_component(f, MapMode::Based, 2, 3, 4);
  const ComponentReport after = analyze_component(g, MapMode::Based, 2, 3, 4);
  REQUIRE(before.dims.size() == after.dims.size());
  for (std::size_t i = 0; i < before.dims.size(); ++i)
    CHECK(before.dims[i].dimension == after.dims[i].dimension);
  REQUIRE(before.products.size() == after.products.size());
  for (std::size_t i = 0; i < before.products.size(); ++i)
    CHECK(before.products[i].nonzero == after.products[i].nonzero);
  CHECK(whitehead_length(f, Theater::Der, 4).length ==
        whitehead_length(g, Theater::Der, 4).length);
}

TEST_CASE("sphere classifier on the stated families") {
  {
    // S^2 x S^2 -> S^4, H(f) = 0: based 2, free 2
    auto f = map_to_sphere(s2xs2_model(), 4, nullptr, Q(0));
    const auto decision = sphere_classify(sphere_problem_from_map(*f));
    CHECK(decision.based == 2);
    CHECK(decision.free == 2);
    REQUIRE(decision.witness_pair.has_value());
  }
  {
    // S^2 x S^2 -> S^4 hitting the top cell: still 2, and free = based
    auto f = map_to_sphere(s2xs2_model(), 4, "v3", Q(1));
    const auto decision = sphere_classify(sphere_problem_from_map(*f));
    CHECK(decision.based == 2);
    CHECK(decision.free == 2);
  }
  {
    // CP^2 -> S^4 via the top cell: the diagonal pair (x1, x1) works
    auto f = map_to_sphere(cp2_model(), 4, "v2", Q(1));
    const auto decision = sphere_classify(sphere_problem_from_map(*f));
    CHECK(decision.based == 2);
    CHECK(decision.free == 2);
  }
  {
    // wedge source: every c_{ij} vanishes
    auto X = FreeDgl::make({{"s2", 1}, {"s7", 6}}, {}, "wedge");
    auto f = map_to_sphere(X, 4, nullptr, Q(0));
    const auto decision = sphere_classify(sphere_problem_from_map(*f));
    CHECK(decision.based == 1);
    CHECK(decision.free == 2);  // H(f) = 0 keeps the free component at 2
  }
  {
    // wedge source hitting H^4: free = based = 1
    auto X = FreeDgl::make({{"s4", 3}, {"s7", 6}}, {}, "wedge");
    auto f = map_to_sphere(X, 4, "s4", Q(1));
    const auto decision = sphere_classify(sphere_problem_from_map(*f));
    CHECK(decision.based == 1);
    CHECK(decision.free == 1);
  }
  {
    // odd target sphere: 1/1 immediately
    SphereProblem p = sphere_problem_from_map(
        *map_to_sphere(s2xs2_model(), 5, nullptr, Q(0)));
    CHECK(p.n == 5);
    const auto decision = sphere_classify(p);
    CHECK(decision.based == 1);
    CHECK(decision.free == 1);
  }
  {
    // n = 2: H^{<= 0} has no candidates
    auto X = FreeDgl::make({{"s2", 1}}, {}, "X");
    auto f = map_to_sphere(X, 2, "s2", Q(1));
    const auto decision = sphere_classify(sphere_problem_from_map(*f));
    CHECK(decision.based == 1);
  }
}

TEST_CASE("condition (ii) can veto a product pair") {
  // X with x1 x2 != 0 and x1 x4 != 0 where x4 has degree n = 4:
  // generators v1, v2 degree 1 (x1, x2 deg 2), v3 deg 3 (x3 = x1x2),
  // v4 deg 3 (x4), v5 deg 5 with d v5 = [v1, v4] (x1 x4 = x5).
  auto gs = std::make_shared<const GeneratorSet>(std::vector<Generator>{
      {"v1", 1}, {"v2", 1}, {"v3", 3}, {"v4", 3}, {"v5", 5}});
  std::vector<LieElement> d(5, LieElement(gs));
  d[2] = formal_bracket(LieElement::generator(gs, 0),
                        LieElement::generator(gs, 1));
  d[4] = formal_bracket(LieElement::generator(gs, 0),
                        LieElement::generator(gs, 3));
  auto X = std::make_shared<const FreeDgl>(gs, d, "X");
  REQUIRE(X->validate().empty());
  {
    // f hits x4: c_k = 1 at k = v4; pair (x1, x2) violates (ii) since
    // c_k c_{14}(v5) != 0
    auto f = map_to_sphere(X, 4, "v4", Q(1));
    const auto decision = sphere_classify(sphere_problem_from_map(*f));
    CHECK(decision.based == 1);
    CHECK(decision.free == 1);
  }
  {
    // null map: the pair passes again
    auto f = map_to_sphere(X, 4, nullptr, Q(0));
    const auto decision = sphere_classify(sphere_problem_from_map(*f));
    CHECK(decision.based == 2);
  }
}

TEST_CASE("classifier agrees with the general based machinery") {
  struct Fixture {
    FreeDglPtr X;
    const char* hit;
    Rational ck;
    int cap;
  };
  const Fixture fixtures[] = {
      {s2xs2_model(), nullptr, Q(0), 5},
      {s2xs2_model(), "v3", Q(1), 5},
      {cp2_model(), "v2", Q(1), 5},
      {cp2_model(), nullptr, Q(0), 5},
      {FreeDgl::make({{"s2", 1}, {"s7", 6}}, {}, "w"), nullptr, Q(0), 5},
  };
  for (const auto& fx : fixtures) {
    auto f = map_to_sphere(fx.X, 4, fx.hit, fx.ck);
    const auto decision = sphere_classify(sphere_problem_from_map(*f));
    const auto wl = whitehead_length(f, Theater::Der, fx.cap);
    CHECK(decision.based == std::max(wl.length, 1));
  }
}

TEST_CASE("null-component equality") {
  auto X = FreeDgl::make({{"v", 1}}, {}, "S2");
  auto Y = testing::sphere_model(3);
  const auto check =
      check_null_equality(X, std::static_pointer_cast<const DglAlgebra>(Y), 8);
  CHECK(check.passed);

  // and against a product-free target
  auto LY = testing::example_y_model();
  const auto check2 = check_null_equality(X, LY, 5);
  CHECK(check2.passed);
}

TEST_CASE("coformal bound property") {
  // K = L(a, b, c; d c = [a, b]): coformal with finite homology
  auto gs = std::make_shared<const GeneratorSet>(
      std::vector<Generator>{{"a", 3}, {"b", 3}, {"c", 7}});
  std::vector<LieElement> d(3, LieElement(gs));
  d[2] = formal_bracket(LieElement::generator(gs, 0),
                        LieElement::generator(gs, 1));
  auto K = std::make_shared<const FreeDgl>(gs, d, "K");
  auto H = homology_algebra(*K, 12, "H");
  std::vector<LieElement> rho_values = {H->basis_element(3, 0),
                                        H->basis_element(3, 1),
                                        LieElement(H->generators())};
  auto rho = std::make_shared<const DglMap>(
      K, std::static_pointer_cast<const DglAlgebra>(H), rho_values, "rho");

  auto LX = FreeDgl::make({{"x", 3}});
  auto f = std::make_shared<const DglMap>(
      LX, std::static_pointer_cast<const DglAlgebra>(K),
      std::vector<LieElement>{K->gen(0)}, "f");
  const auto check = check_coformal_bound(f, rho, 8);
  CHECK(check.passed);
}

TEST_CASE("co-H source with surjective map to a coformal target") {
  auto gs = std::make_shared<const GeneratorSet>(
      std::vector<Generator>{{"a", 3}, {"b", 3}, {"c", 7}});
  std::vector<LieElement> d(3, LieElement(gs));
  d[2] = formal_bracket(LieElement::generator(gs, 0),
                        LieElement::generator(gs, 1));
  auto K = std::make_shared<const FreeDgl>(gs, d, "K");
  // H(K) is a,b,[a,a],[b,b] and vanishes in degrees 7..13, so the
  // homology algebra is honest through degree 14
  auto H = homology_algebra(*K, 14, "H");

  // wedge of two 4-spheres and two 7-spheres, mapped onto the basis
  auto X = FreeDgl::make({{"p1", 3}, {"p2", 3}, {"q1", 6}, {"q2", 6}}, {},
                         "wedge");
  std::vector<LieElement> values = {
      H->basis_element(3, 0), H->basis_element(3, 1), H->basis_element(6, 0),
      H->basis_element(6, 1)};
  auto f = std::make_shared<const DglMap>(
      X, std::static_pointer_cast<const DglAlgebra>(H), values, "f");
  REQUIRE(f->validate().empty());
  const auto check = check_coh_abelian(f, 8);
  CHECK(check.passed);
}

TEST_CASE("cone length bound") {
  auto X = cp2_model();
  GeneratorFiltration filt{{1, 2}, 2};
  auto LY = testing::example_y_model();
  auto f = zero_map(X, LY, "0");
  const auto check = check_cone_bound(f, filt, 5);
  CHECK(check.passed);

  // a co-H source has cone length 1 and based WL 1
  auto W = FreeDgl::make({{"s3", 2}, {"s5", 4}}, {}, "wedge");
  GeneratorFiltration filt1{{1, 1}, 1};
  auto g = zero_map(W, LY, "0");
  const auto check1 = check_cone_bound(g, filt1, 5);
  CHECK(check1.passed);
}
