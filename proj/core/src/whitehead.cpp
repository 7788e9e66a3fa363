#include "whale/whitehead.hpp"

#include <cassert>

#include "whale/errors.hpp"

namespace whale {

LieElement pre_whitehead(const DglAlgebra& algebra, const LieElement& x,
                         const LieElement& y) {
  auto deg = x.homogeneous_degree();
  if (!deg && !x.empty())
    throw DegreeError("pre-Whitehead pairing requires homogeneous arguments");
  LieElement out = algebra.bracket(x, algebra.differential(y));
  // {x, y} = (-1)^{|x|+1}[x, d y]
  if (deg.value_or(0) % 2 == 0) out = -out;
  return out;
}

PsiDerivation der_commutator(const PsiDerivation& a, const PsiDerivation& b) {
  const DglMapPtr& id = a.psi();
  assert(same_generators(id->source()->generators(),
                         b.psi()->source()->generators()));
  const std::size_t n = id->source()->generators()->size();
  const bool flip = (a.degree() * b.degree()) % 2 != 0;
  std::vector<LieElement> values;
  values.reserve(n);
  for (std::size_t g = 0; g < n; ++g) {
    LieElement v = a.evaluate(b.value(g));
    LieElement second = b.evaluate(a.value(g));
    if (flip)
      v += second;
    else
      v -= second;
    values.push_back(std::move(v));
  }
  return PsiDerivation(id, a.degree() + b.degree(), std::move(values));
}

PsiDerivation pre_whitehead_der(const PsiDerivation& a,
                                const PsiDerivation& b) {
  PsiDerivation out = der_commutator(a, d_derivation(b));
  if (a.degree() % 2 == 0) out *= Rational(-1);
  return out;
}

MapConePair map_cone_differential(const DglMap& psi, const MapConePair& z) {
  return MapConePair{-psi.source()->differential(z.src),
                     psi.apply(z.src) + psi.target()->differential(z.tgt),
                     z.degree - 1};
}

bool is_map_cone_cycle(const DglMap& psi, const MapConePair& z) {
  const MapConePair d = map_cone_differential(psi, z);
  return psi.source()->is_zero(d.src) && psi.target()->is_zero(d.tgt);
}

MapConePair cone_whitehead(const DglMap& psi, const MapConePair& za,
                           const MapConePair& zb) {
  if (!is_map_cone_cycle(psi, za) || !is_map_cone_cycle(psi, zb))
    throw NotACycle("cone product requires delta_psi-cycles");
  LieElement first = psi.source()->bracket(za.src, zb.src);
  if (za.degree % 2 != 0) first = -first;
  return MapConePair{std::move(first),
                     pre_whitehead(*psi.target(), za.tgt, zb.tgt),
                     za.degree + zb.degree - 1};
}

namespace {

/// {Theta_a, Theta_b} o lambda as a derivation over the inclusion.
PsiDerivation theta_pairing_over_lambda(const ExtensionAlgebra& ext,
                                        const PsiDerivation& pair) {
  const std::size_t nv = ext.base()->generators()->size();
  std::vector<LieElement> values;
  values.reserve(nv);
  for (std::size_t v = 0; v < nv; ++v) values.push_back(pair.value(v));
  return PsiDerivation(ext.inclusion(), pair.degree(), std::move(values));
}

}  // namespace

UniversalExample universal_example(const FreeDglPtr& L, int p, int q) {
  auto ext = std::make_shared<const ExtensionAlgebra>(
      L, std::vector<int>{p, q});
  const PsiDerivation pair =
      pre_whitehead_der(ext->theta(0), ext->theta(1));
  PsiDerivation restricted = theta_pairing_over_lambda(*ext, pair);
  // D_lambda({Theta_a, Theta_b} o lambda) = (-1)^q ad_lambda([a, b]), so the
  // cycle pairs the derivation with (-1)^{q-1}[a, b].
  LieElement first =
      ext->algebra()->bracket(ext->a_element(0), ext->a_element(1));
  if (q % 2 == 0) first = -first;
  return UniversalExample{ext,
                          RelElement{std::move(first), std::move(restricted)}};
}

LieElement closed_formula_on_generator(const ExtensionAlgebra& ext,
                                       std::size_t base_gen) {
  assert(ext.attached_count() == 2);
  const int p = ext.sphere_degree(0);
  const int q = ext.sphere_degree(1);
  const FreeDgl& E = *ext.algebra();
  const LieElement a = ext.a_element(0);
  const LieElement b = ext.a_element(1);
  const LieElement sa_v = ext.suspension(0).value(base_gen);
  const LieElement sb_v = ext.suspension(1).value(base_gen);

  LieElement out = E.bracket(b, sa_v);
  if ((q * (p + 1)) % 2 != 0) out = -out;
  LieElement second = E.bracket(a, sb_v);
  if (p % 2 != 0) second = -second;
  out += second;

  const LieElement dv = ext.base()->differential_of(base_gen);
  if (!dv.empty()) {
    LieElement third =
        ext.theta(1).evaluate(ext.theta(0).evaluate(ext.include(dv)));
    if (((p + 1) * (q + 1)) % 2 != 0) third = -third;
    out += third;
  }
  return out;
}

DglMapPtr induced_map(const DglMapPtr& psi,
                      const std::vector<RelElement>& zetas,
                      const ExtensionAlgebra& ext) {
  assert(zetas.size() == ext.attached_count());
  const std::size_t nv = psi->source()->generators()->size();
  const std::size_t na = zetas.size();
  std::vector<LieElement> values(ext.algebra()->generators()->size());
  for (std::size_t v = 0; v < nv; ++v) values[v] = psi->value(v);
  for (std::size_t i = 0; i < na; ++i) {
    // x = a_i has degree p_i - 1, so (-1)^{|x|+1} = (-1)^{p_i}
    LieElement chi = zetas[i].chi;
    if (ext.sphere_degree(i) % 2 != 0) chi = -chi;
    values[ext.a_index(i)] = std::move(chi);
    for (std::size_t v = 0; v < nv; ++v)
      values[ext.suspended_index(i, v)] = zetas[i].theta.value(v);
  }
  return std::make_shared<const DglMap>(ext.algebra(), psi->target(),
                                        std::move(values), "(zeta)");
}

RelElement rel_whitehead(const DglMapPtr& psi, const RelElement& za,
                         const RelElement& zb) {
  if (!is_rel_cycle(za) || !is_rel_cycle(zb))
    throw NotACycle("Whitehead product requires delta-cycles");
  const int p = za.degree();
  const int q = zb.degree();
  if (p < 2 || q < 2)
    throw DegreeError("Whitehead product requires degrees >= 2");

  const UniversalExample u = universal_example(psi->source(), p, q);
  const DglMapPtr m = induced_map(psi, {za, zb}, *u.extension);

  const std::size_t nv = psi->source()->generators()->size();
  std::vector<LieElement> values;
  values.reserve(nv);
  for (std::size_t v = 0; v < nv; ++v)
    values.push_back(m->apply(u.cycle.theta.value(v)));
  PsiDerivation pairing(psi, p + q - 1, std::move(values));

  // D({zeta_a, zeta_b}) = (-1)^p ad([chi_a, chi_b]); the delta-cycle pairs
  // the derivation with (-1)^{p+1}[chi_a, chi_b].
  LieElement first = psi->target()->bracket(za.chi, zb.chi);
  if (p % 2 == 0) first = -first;
  return RelElement{std::move(first), std::move(pairing)};
}

PsiDerivation der_whitehead(const DglMapPtr& psi, const PsiDerivation& ta,
                            const PsiDerivation& tb) {
  const RelElement za{LieElement(psi->target()->generators()), ta};
  const RelElement zb{LieElement(psi->target()->generators()), tb};
  return rel_whitehead(psi, za, zb).theta;
}

RelElement iterated_whitehead(const DglMapPtr& psi,
                              const std::vector<RelElement>& zetas) {
  if (zetas.size() < 2)
    throw DegreeError("iterated product needs at least two factors");
  RelElement acc = rel_whitehead(psi, zetas[0], zetas[1]);
  for (std::size_t i = 2; i < zetas.size(); ++i)
    acc = rel_whitehead(psi, acc, zetas[i]);
  return acc;
}

PsiDerivation iterated_pairing_single_shot(
    const DglMapPtr& psi, const std::vector<RelElement>& zetas) {
  assert(zetas.size() >= 2);
  std::vector<int> degrees;
  for (const auto& z : zetas) degrees.push_back(z.degree());
  ExtensionAlgebra ext(psi->source(), degrees);

  PsiDerivation w = pre_whitehead_der(ext.theta(0), ext.theta(1));
  for (std::size_t i = 2; i < zetas.size(); ++i)
    w = pre_whitehead_der(w, ext.theta(i));

  const DglMapPtr m = induced_map(psi, zetas, ext);
  const std::size_t nv = psi->source()->generators()->size();
  std::vector<LieElement> values;
  values.reserve(nv);
  for (std::size_t v = 0; v < nv; ++v) values.push_back(m->apply(w.value(v)));
  int total = 0;
  for (int d : degrees) total += d - 1;
  return PsiDerivation(psi, total + 1, std::move(values));
}

WhiteheadLengthResult whitehead_length(const DglMapPtr& psi, Theater which,
                                       int cap, PivotStrategy strategy) {
  if (cap < 3)
    throw CapTooLow("whitehead length search needs cap >= 3", 3, cap);
  WhiteheadLengthResult out;

  if (which == Theater::Rel) {
    auto ctx = std::make_shared<const RelContext>(psi);
    std::map<int, RelHomologySpace> spaces;
    for (int d = 2; d <= cap - 1; ++d)
      spaces.emplace(d, RelHomologySpace(ctx, d, strategy));

    struct Chain {
      RelElement rep;
      int degree;
      int length;
      std::vector<WlWitnessStep> path;
    };
    std::vector<Chain> frontier;
    for (auto& [d, sp] : spaces)
      for (std::size_t i = 0; i < sp.dimension(); ++i) {
        frontier.push_back(Chain{sp.representative(i), d, 1, {{d, i}}});
        if (out.length < 1) {
          out.length = 1;
          out.witness = {{d, i}};
        }
      }
    while (!frontier.empty()) {
      std::vector<Chain> next;
      for (const auto& ch : frontier) {
        for (auto& [d, sp] : spaces) {
          if (sp.dimension() == 0) continue;
          const int rdeg = ch.degree + d - 1;
          if (rdeg > cap - 1) {
            out.exhausted = false;
            continue;
          }
          for (std::size_t i = 0; i < sp.dimension(); ++i) {
            RelElement prod =
                rel_whitehead(psi, ch.rep, sp.representative(i));
            Vec coords = spaces.at(rdeg).coordinates(prod);
            bool nonzero = false;
            for (const auto& c : coords) nonzero |= c != 0;
            if (!nonzero) continue;
            Chain ext{std::move(prod), rdeg, ch.length + 1, ch.path};
            ext.path.push_back({d, i});
            if (ext.length > out.length) {
              out.length = ext.length;
              out.witness = ext.path;
            }
            next.push_back(std::move(ext));
          }
        }
      }
      frontier = std::move(next);
    }
    return out;
  }

  // Der theater
  std::map<int, DerHomologySpace> spaces;
  for (int d = 2; d <= cap - 1; ++d)
    spaces.emplace(d, DerHomologySpace(psi, d, strategy));
  struct Chain {
    PsiDerivation rep;
    int degree;
    int length;
    std::vector<WlWitnessStep> path;
  };
  std::vector<Chain> frontier;
  for (auto& [d, sp] : spaces)
    for (std::size_t i = 0; i < sp.dimension(); ++i) {
      frontier.push_back(Chain{sp.representative(i), d, 1, {{d, i}}});
      if (out.length < 1) {
        out.length = 1;
        out.witness = {{d, i}};
      }
    }
  while (!frontier.empty()) {
    std::vector<Chain> next;
    for (const auto& ch : frontier) {
      for (auto& [d, sp] : spaces) {
        if (sp.dimension() == 0) continue;
        const int rdeg = ch.degree + d - 1;
        if (rdeg > cap - 1) {
          out.exhausted = false;
          continue;
        }
        for (std::size_t i = 0; i < sp.dimension(); ++i) {
          PsiDerivation prod =
              der_whitehead(psi, ch.rep, sp.representative(i));
          Vec coords = spaces.at(rdeg).coordinates(prod);
          bool nonzero = false;
          for (const auto& c : coords) nonzero |= c != 0;
          if (!nonzero) continue;
          Chain ext{std::move(prod), rdeg, ch.length + 1, ch.path};
          ext.path.push_back({d, i});
          if (ext.length > out.length) {
            out.length = ext.length;
            out.witness = ext.path;
          }
          next.push_back(std::move(ext));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

WhiteheadLengthResult dgl_whitehead_length(const DglAlgebra& algebra, int cap,
                                           PivotStrategy strategy) {
  if (cap < 2)
    throw CapTooLow("whitehead length search needs cap >= 2", 2, cap);
  WhiteheadLengthResult out;
  std::map<int, AlgebraHomology> spaces;
  for (int d = 1; d <= cap - 1; ++d)
    spaces.emplace(d, homology(algebra, d, strategy));

  struct Chain {
    LieElement rep;
    int degree;
    int length;
    std::vector<WlWitnessStep> path;
  };
  std::vector<Chain> frontier;
  for (auto& [d, sp] : spaces)
    for (std::size_t i = 0; i < sp.dimension; ++i) {
      frontier.push_back(Chain{sp.representatives[i], d, 1, {{d, i}}});
      if (out.length < 1) {
        out.length = 1;
        out.witness = {{d, i}};
      }
    }
  while (!frontier.empty()) {
    std::vector<Chain> next;
    for (const auto& ch : frontier) {
      for (auto& [d, sp] : spaces) {
        if (sp.dimension == 0) continue;
        const int rdeg = ch.degree + d;
        if (rdeg > cap - 1) {
          out.exhausted = false;
          continue;
        }
        for (std::size_t i = 0; i < sp.dimension; ++i) {
          LieElement prod = algebra.bracket(ch.rep, sp.representatives[i]);
          if (algebra.is_zero(prod)) continue;
          Vec coords = spaces.at(rdeg).quotient.project(
              algebra.coordinates(prod, rdeg));
          bool nonzero = false;
          for (const auto& c : coords) nonzero |= c != 0;
          if (!nonzero) continue;
          Chain ext{std::move(prod), rdeg, ch.length + 1, ch.path};
          ext.path.push_back({d, i});
          if (ext.length > out.length) {
            out.length = ext.length;
            out.witness = ext.path;
          }
          next.push_back(std::move(ext));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace whale
