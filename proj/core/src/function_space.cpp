#include "whale/function_space.hpp"

#include <algorithm>

#include "whale/errors.hpp"

namespace whale {

ComponentReport analyze_component(const DglMapPtr& f, MapMode mode,
                                  int window_lo, int window_hi, int cap,
                                  PivotStrategy strategy) {
  if (window_lo < 2)
    throw DegreeError("component analysis excludes degrees < 2");
  if (window_hi + 1 > cap)
    throw CapTooLow("window needs complex degree " +
                        std::to_string(window_hi + 1),
                    window_hi + 1, cap);
  ComponentReport report;
  report.map_name = f->name();
  report.mode = mode;
  report.window_lo = window_lo;
  report.window_hi = window_hi;
  report.cap = cap;

  if (mode == MapMode::Free) {
    auto ctx = std::make_shared<const RelContext>(f);
    std::map<int, RelHomologySpace> spaces;
    for (int d = window_lo; d <= window_hi; ++d) {
      spaces.emplace(d, RelHomologySpace(ctx, d, strategy));
      report.dims.push_back({d, spaces.at(d).dimension()});
    }
    for (int p = window_lo; p <= window_hi; ++p)
      for (int q = p; q <= window_hi; ++q) {
        const int r = p + q - 1;
        if (r > window_hi || r + 1 > cap) continue;
        const auto& sa = spaces.at(p);
        const auto& sb = spaces.at(q);
        for (std::size_t i = 0; i < sa.dimension(); ++i)
          for (std::size_t j = (p == q ? i : 0); j < sb.dimension(); ++j) {
            ProductEntry e{p, i, q, j, r, {}, false};
            const RelElement prod = rel_whitehead(
                f, sa.representative(i), sb.representative(j));
            e.coordinates = spaces.at(r).coordinates(prod);
            for (const auto& c : e.coordinates) e.nonzero |= c != 0;
            report.products.push_back(std::move(e));
          }
      }
    report.wl = whitehead_length(f, Theater::Rel, cap, strategy);
    return report;
  }

  std::map<int, DerHomologySpace> spaces;
  for (int d = window_lo; d <= window_hi; ++d) {
    spaces.emplace(d, DerHomologySpace(f, d, strategy));
    report.dims.push_back({d, spaces.at(d).dimension()});
  }
  for (int p = window_lo; p <= window_hi; ++p)
    for (int q = p; q <= window_hi; ++q) {
      const int r = p + q - 1;
      if (r > window_hi || r + 1 > cap) continue;
      const auto& sa = spaces.at(p);
      const auto& sb = spaces.at(q);
      for (std::size_t i = 0; i < sa.dimension(); ++i)
        for (std::size_t j = (p == q ? i : 0); j < sb.dimension(); ++j) {
          ProductEntry e{p, i, q, j, r, {}, false};
          const PsiDerivation prod =
              der_whitehead(f, sa.representative(i), sb.representative(j));
          e.coordinates = spaces.at(r).coordinates(prod);
          for (const auto& c : e.coordinates) e.nonzero |= c != 0;
          report.products.push_back(std::move(e));
        }
    }
  report.wl = whitehead_length(f, Theater::Der, cap, strategy);
  return report;
}

DglMapPtr coformal_replace(const DglMapPtr& f, const DglMapPtr& rho, int cap) {
  if (!same_generators(f->target()->generators(),
                       rho->source()->generators()))
    throw AlgebraMismatch("replacement source must match the map's target");
  const auto violations = validate_surjective_quasi_iso(*rho, cap);
  if (!violations.empty()) {
    std::string msg = "replacement map is not a surjective quasi-iso:";
    for (const auto& v : violations) msg += "\n  " + v;
    throw QuasiIsoViolation(msg, cap);
  }
  return compose(rho, f, f->name() + "~");
}

std::vector<std::string> validate_sphere(const SphereProblem& p) {
  std::vector<std::string> out;
  int prev = 0;
  for (std::size_t i = 0; i < p.cohomology_basis.size(); ++i) {
    const auto& g = p.cohomology_basis[i];
    if (g.degree < 2) out.push_back("cohomology degrees must be >= 2");
    if (g.degree < prev)
      out.push_back("cohomology basis must be nondecreasing in degree");
    prev = g.degree;
  }
  if (p.n < 2) out.push_back("sphere dimension must be >= 2");
  if (p.c_k != 0) {
    if (!p.k.has_value()) {
      out.push_back("nonzero c_k requires the index k");
    } else if (*p.k >= p.cohomology_basis.size()) {
      out.push_back("index k out of range");
    } else if (p.cohomology_basis[*p.k].degree != p.n) {
      out.push_back("basis element k must have cohomology degree n");
    }
  }
  for (const auto& [key, table] : p.c) {
    const auto [i, j] = key;
    if (i > j || j >= p.cohomology_basis.size()) {
      out.push_back("bad c_{ij} key");
      continue;
    }
    const int di = p.cohomology_basis[i].degree;
    const int dj = p.cohomology_basis[j].degree;
    // even Lie degree of v_i means odd cohomology degree of x_i
    if (i == j && (di - 1) % 2 == 0) {
      bool nonzero = false;
      for (const auto& [l, v] : table) nonzero |= v != 0;
      if (nonzero)
        out.push_back("c_{ii} must vanish for even-degree v_i (x" +
                      std::to_string(i) + ")");
    }
    for (const auto& [l, v] : table) {
      if (l >= p.cohomology_basis.size()) {
        out.push_back("bad generator index in c table");
        continue;
      }
      if (v != 0 && p.cohomology_basis[l].degree != di + dj)
        out.push_back("c_{ij}(v) nonzero with deg x_i + deg x_j != deg x_v");
    }
  }
  return out;
}

namespace {

Rational c_lookup(const SphereProblem& p, std::size_t i, std::size_t j,
                  std::size_t l) {
  const auto key = i <= j ? std::make_pair(i, j) : std::make_pair(j, i);
  auto it = p.c.find(key);
  if (it == p.c.end()) return Rational(0);
  auto jt = it->second.find(l);
  return jt == it->second.end() ? Rational(0) : jt->second;
}

}  // namespace

SphereDecision sphere_classify(const SphereProblem& p) {
  {
    const auto violations = validate_sphere(p);
    if (!violations.empty()) {
      std::string msg = "sphere problem invalid:";
      for (const auto& v : violations) msg += "\n  " + v;
      throw ValidationError(msg);
    }
  }
  SphereDecision out;
  if (p.n % 2 != 0) {
    out.based = out.free = 1;
    out.detail = "odd sphere target: every component is rationally null";
    return out;
  }
  const std::size_t s = p.cohomology_basis.size();
  const bool have_k = p.c_k != 0;
  const std::size_t k = have_k ? *p.k : 0;

  for (std::size_t i = 0; i < s && !out.witness_pair; ++i) {
    if (p.cohomology_basis[i].degree > p.n - 2) continue;
    for (std::size_t j = i; j < s && !out.witness_pair; ++j) {
      if (p.cohomology_basis[j].degree > p.n - 2) continue;
      // (i): x_i x_j != 0
      std::optional<std::size_t> witness_v;
      for (std::size_t l = 0; l < s; ++l)
        if (c_lookup(p, i, j, l) != 0) {
          witness_v = l;
          break;
        }
      if (!witness_v) continue;
      if (have_k) {
        // (ii): c_k c_{ik}(w) = c_k c_{jk}(w) = 0 for all w
        bool cycle_ok = true;
        for (std::size_t w = 0; w < s && cycle_ok; ++w)
          cycle_ok = c_lookup(p, i, k, w) == 0 && c_lookup(p, j, k, w) == 0;
        if (!cycle_ok) continue;
        // (iii): no v with c_{ij}(v) != 0 also has some c_{rk}(v) != 0
        bool boundary_free = true;
        for (std::size_t l = 0; l < s && boundary_free; ++l) {
          if (c_lookup(p, i, j, l) == 0) continue;
          for (std::size_t r = 0; r < s; ++r)
            if (c_lookup(p, r, k, l) != 0) {
              boundary_free = false;
              break;
            }
        }
        if (!boundary_free) continue;
      }
      out.witness_pair = {i, j};
      out.witness_v = witness_v;
    }
  }

  out.based = out.witness_pair ? 2 : 1;
  if (!have_k)
    out.free = 2;  // H(f) = 0: the evaluation fibration splits rationally
  else
    out.free = out.based;
  if (out.witness_pair)
    out.detail = "witness pair (" +
                 p.cohomology_basis[out.witness_pair->first].name + ", " +
                 p.cohomology_basis[out.witness_pair->second].name + ")";
  else
    out.detail = "no pair satisfies the product conditions";
  return out;
}

SphereProblem sphere_problem_from_map(const DglMap& f) {
  const FreeDgl& L = *f.source();
  const auto& gens = *L.generators();
  if (!f.target()->is_free() || f.target()->generators()->size() != 1)
    throw ValidationError(
        "sphere classifier needs a one-generator target model");
  const auto& tgt_gens = *f.target()->generators();
  const int n = tgt_gens.degree(0) + 1;

  SphereProblem p;
  p.n = n;
  int prev = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens.degree(i) < prev)
      throw ValidationError(
          "sphere classifier requires generators in nondecreasing degree");
    prev = gens.degree(i);
    p.cohomology_basis.push_back({gens.name(i), gens.degree(i) + 1});
  }
  for (std::size_t l = 0; l < gens.size(); ++l) {
    for (const auto& [key, coef] : L.quadratic_coefficients(l)) {
      if (coef != 0) p.c[key][l] = coef;
    }
  }
  // find v_k with L_f(v_k) = c_k u
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const LieElement& val = f.value(i);
    if (f.target()->is_zero(val)) continue;
    if (gens.degree(i) != n - 1)
      continue;  // values off degree n-1 do not enter the criteria
    if (p.k.has_value())
      throw ValidationError(
          "expected a single degree-(n-1) generator mapping to the sphere; "
          "change basis so only one does");
    const Vec coords = f.target()->coordinates(val, n - 1);
    p.k = i;
    p.c_k = coords.at(0);
  }
  if (!p.k.has_value()) p.c_k = 0;
  return p;
}

PropertyCheck check_null_equality(const FreeDglPtr& X, const DglAlgebraPtr& Y,
                                  int cap) {
  PropertyCheck out{"null-equality", false, ""};
  const DglMapPtr f = zero_map(X, Y, "0");
  const auto wl_map = whitehead_length(f, Theater::Rel, cap);
  const auto wl_y = dgl_whitehead_length(*Y, cap);
  out.passed = wl_map.length == wl_y.length;
  out.detail = "WL(map(X,Y;0)) = " + std::to_string(wl_map.length) +
               ", WL(Y) = " + std::to_string(wl_y.length) + " within cap " +
               std::to_string(cap);
  return out;
}

PropertyCheck check_coformal_bound(const DglMapPtr& f, const DglMapPtr& rho,
                                   int cap) {
  PropertyCheck out{"coformal-bound", false, ""};
  const DglMapPtr g = coformal_replace(f, rho, cap);
  const int based = whitehead_length(g, Theater::Der, cap).length;
  const int free_wl = whitehead_length(g, Theater::Rel, cap).length;
  const int wl_y = dgl_whitehead_length(*rho->target(), cap).length;
  out.passed = std::max(based, free_wl) <= wl_y;
  out.detail = "based = " + std::to_string(based) +
               ", free = " + std::to_string(free_wl) +
               ", WL(Y) = " + std::to_string(wl_y);
  return out;
}

PropertyCheck check_coh_abelian(const DglMapPtr& f, int cap) {
  PropertyCheck out{"coh-abelian", false, ""};
  const FreeDgl& X = *f->source();
  for (std::size_t i = 0; i < X.generators()->size(); ++i)
    if (!X.is_zero(X.differential_of(i))) {
      out.detail = "source is not a co-H model (nonzero differential)";
      return out;
    }
  // target must have zero differential
  const DglAlgebra& Y = *f->target();
  for (int d = 1; d <= cap; ++d)
    for (std::size_t i = 0; i < Y.dim(d); ++i)
      if (!Y.is_zero(Y.differential(Y.basis_element(d, i)))) {
        out.detail = "target differential is nonzero";
        return out;
      }
  for (int d = 1; d <= cap; ++d) {
    const SparseMatrix m = map_matrix(*f, d);
    if (rank(m) != m.rows()) {
      out.detail = "map is not surjective in degree " + std::to_string(d);
      return out;
    }
  }
  const auto wl = whitehead_length(f, Theater::Rel, cap);
  out.passed = wl.length <= 1;
  out.detail = "free WL = " + std::to_string(wl.length);
  return out;
}

PropertyCheck check_cone_bound(const DglMapPtr& f,
                               const GeneratorFiltration& filtration,
                               int cap) {
  PropertyCheck out{"cone-bound", false, ""};
  const auto violations = filtration.validate(*f->source());
  if (!violations.empty()) {
    out.detail = "invalid filtration: " + violations.front();
    return out;
  }
  const auto wl = whitehead_length(f, Theater::Der, cap);
  out.passed = wl.length <= filtration.length;
  out.detail = "based WL = " + std::to_string(wl.length) +
               " vs cone length " + std::to_string(filtration.length);
  return out;
}

}  // namespace whale
