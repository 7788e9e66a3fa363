#pragma once

#include "whale/extension.hpp"

namespace whale {

/// {x, y} = (-1)^{|x|+1}[x, d(y)] in any DG Lie algebra; Whitehead
/// identities hold up to boundaries.
LieElement pre_whitehead(const DglAlgebra& algebra, const LieElement& x,
                         const LieElement& y);

/// Graded commutator of two derivations over the same identity map:
/// [a, b] = a o b - (-1)^{|a||b|} b o a, as a derivation given on generators.
PsiDerivation der_commutator(const PsiDerivation& a, const PsiDerivation& b);

/// {a, b} = (-1)^{|a|+1}[a, D(b)] in the derivation DG Lie algebra.
PsiDerivation pre_whitehead_der(const PsiDerivation& a,
                                const PsiDerivation& b);

/// Pair in the plain mapping cone Rel_p(psi) = L_{p-1} (+) K_p.
struct MapConePair {
  LieElement src;  // degree p-1 in L
  LieElement tgt;  // degree p in K
  int degree = 0;
};

MapConePair map_cone_differential(const DglMap& psi, const MapConePair& z);
bool is_map_cone_cycle(const DglMap& psi, const MapConePair& z);

/// [[(a, alpha), (b, beta)]] = ((-1)^p [a, b], {alpha, beta}) on Rel(psi).
MapConePair cone_whitehead(const DglMap& psi, const MapConePair& za,
                           const MapConePair& zb);

/// The universal example ((-1)^q [a, b], {Theta_a, Theta_b} o lambda) in
/// Rel_{p+q-1}(ad_lambda), bundled with its extension algebra.
struct UniversalExample {
  std::shared_ptr<const ExtensionAlgebra> extension;
  RelElement cycle;  // over ad_lambda
};
UniversalExample universal_example(const FreeDglPtr& L, int p, int q);

/// Closed form of {Theta_a, Theta_b} o lambda on a generator:
/// (-1)^{q(p+1)}[b, S_a v] + (-1)^p [a, S_b v]
/// + (-1)^{(p+1)(q+1)} Theta_b Theta_a lambda (d v).
LieElement closed_formula_on_generator(const ExtensionAlgebra& ext,
                                       std::size_t base_gen);

/// (zeta_1 | ... | zeta_n)_psi : L(a_1, ..., a_n) -> K for cycles zeta_i.
DglMapPtr induced_map(const DglMapPtr& psi,
                      const std::vector<RelElement>& zetas,
                      const ExtensionAlgebra& ext);

/// [[zeta_a, zeta_b]] = ((-1)^p [chi_a, chi_b], {zeta_a, zeta_b}) on
/// Rel(ad_psi). Inputs must be delta-cycles.
RelElement rel_whitehead(const DglMapPtr& psi, const RelElement& za,
                         const RelElement& zb);

/// [[theta_a, theta_b]] = {(0, theta_a), (0, theta_b)} on Der(L, K; psi).
PsiDerivation der_whitehead(const DglMapPtr& psi, const PsiDerivation& ta,
                            const PsiDerivation& tb);

/// Left fold of the binary product; n >= 2.
RelElement iterated_whitehead(const DglMapPtr& psi,
                              const std::vector<RelElement>& zetas);

/// Single-shot universal iterated construction (for crosschecking the fold):
/// derivation part (zeta_1|...|zeta_n)_psi o w(Theta_{a_1},...,Theta_{a_n})
/// o lambda and first component from the left-justified bracket.
PsiDerivation iterated_pairing_single_shot(
    const DglMapPtr& psi, const std::vector<RelElement>& zetas);

enum class Theater { Rel, Der };

struct WlWitnessStep {
  int class_degree = 0;
  std::size_t class_index = 0;
};

struct WhiteheadLengthResult {
  int length = 0;      // certified lower bound
  bool exhausted = true;  // true iff the in-cap search space was exhausted
  std::vector<WlWitnessStep> witness;  // one chain achieving `length`
};

/// Longest certified-nonzero left-justified iterated product of homology
/// basis classes, searching complex degrees <= cap.
WhiteheadLengthResult whitehead_length(
    const DglMapPtr& psi, Theater which, int cap,
    PivotStrategy strategy = PivotStrategy::MinBitSize);

/// Same search on the homology Lie algebra of a coefficient algebra
/// (Whitehead length of the underlying space, degrees >= 1).
WhiteheadLengthResult dgl_whitehead_length(
    const DglAlgebra& algebra, int cap,
    PivotStrategy strategy = PivotStrategy::MinBitSize);

}  // namespace whale
