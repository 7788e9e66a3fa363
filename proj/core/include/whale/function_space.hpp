#pragma once

#include <optional>

#include "whale/finite_lie.hpp"
#include "whale/lift.hpp"
#include "whale/whitehead.hpp"

namespace whale {

enum class MapMode { Based, Free };

struct DimensionEntry {
  int degree = 0;
  std::size_t dimension = 0;
};

struct ProductEntry {
  int deg_a = 0;
  std::size_t idx_a = 0;
  int deg_b = 0;
  std::size_t idx_b = 0;
  int degree = 0;  // deg_a + deg_b - 1
  Vec coordinates;
  bool nonzero = false;
};

/// Rational homotopy of one function-space component: dimensions, the
/// product table on homology basis classes, and the Whitehead length search.
struct ComponentReport {
  std::string map_name;
  MapMode mode = MapMode::Based;
  int window_lo = 2, window_hi = 2, cap = 0;
  std::vector<DimensionEntry> dims;
  std::vector<ProductEntry> products;
  WhiteheadLengthResult wl;
};

ComponentReport analyze_component(
    const DglMapPtr& f, MapMode mode, int window_lo, int window_hi, int cap,
    PivotStrategy strategy = PivotStrategy::MinBitSize);

/// Validates rho as a surjective quasi-iso up to cap and returns rho o f.
/// Throws QuasiIsoViolation with the failing degree otherwise.
DglMapPtr coformal_replace(const DglMapPtr& f, const DglMapPtr& rho, int cap);

/// Input data for the even-sphere classifier: reduced cohomology basis of X,
/// quadratic coefficients of the Quillen differential (dual cup products),
/// target dimension n, and the scalar c_k describing H(f).
struct SphereProblem {
  std::vector<Generator> cohomology_basis;  // degrees >= 2, nondecreasing
  std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Rational>>
      c;  // c[{i,j}][l] = c_{ij}(v_l), keyed i <= j
  int n = 2;
  Rational c_k = 0;
  std::optional<std::size_t> k;  // basis index with L_f(v_k) = c_k u
};

std::vector<std::string> validate_sphere(const SphereProblem& problem);

struct SphereDecision {
  int based = 1;
  int free = 1;
  std::optional<std::pair<std::size_t, std::size_t>> witness_pair;
  std::optional<std::size_t> witness_v;
  std::string detail;
};

SphereDecision sphere_classify(const SphereProblem& problem);

/// Derive the classifier input from a Quillen model of f: X -> S^n; the
/// target must be a one-generator model with zero differential.
SphereProblem sphere_problem_from_map(const DglMap& f);

struct PropertyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Null component: WL(map(X, Y; 0)) equals the Whitehead length of Y
/// within the cap.
PropertyCheck check_null_equality(const FreeDglPtr& X, const DglAlgebraPtr& Y,
                                  int cap);

/// Coformal bound: max(based, free) over rho o f is at most WL(H) within cap.
PropertyCheck check_coformal_bound(const DglMapPtr& f, const DglMapPtr& rho,
                                   int cap);

/// Co-H source + surjective map to a zero-differential target: free WL = 1.
PropertyCheck check_coh_abelian(const DglMapPtr& f, int cap);

/// Filtered source: based WL <= filtration length.
PropertyCheck check_cone_bound(const DglMapPtr& f,
                               const GeneratorFiltration& filtration, int cap);

}  // namespace whale
