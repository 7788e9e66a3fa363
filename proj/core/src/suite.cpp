#include "whale/suite.hpp"

#include <sstream>

#include "whale/errors.hpp"

namespace whale {

namespace {

struct DirectiveArgs {
  const AssertDirective& dir;
  const ModelFile& mf;

  std::optional<std::string> get(const std::string& key) const {
    auto it = dir.kv.find(key);
    if (it == dir.kv.end()) return std::nullopt;
    return it->second;
  }
  std::string require(const std::string& key) const {
    auto v = get(key);
    if (!v)
      throw ValidationError("assert " + dir.kind + " needs " + key + "=");
    return *v;
  }
  int require_int(const std::string& key) const {
    return std::stoi(require(key));
  }
  std::optional<int> get_int(const std::string& key) const {
    auto v = get(key);
    if (!v) return std::nullopt;
    return std::stoi(*v);
  }

  const ParsedMap& map() const {
    if (auto name = get("map")) {
      const ParsedMap* m = mf.find_map(*name);
      if (!m) throw ValidationError("unknown map '" + *name + "'");
      return *m;
    }
    if (mf.maps.empty()) throw ValidationError("file has no map block");
    return mf.maps.front();
  }
  const ParsedModel& model(const std::string& key) const {
    const std::string name = require(key);
    const ParsedModel* m = mf.find_model(name);
    if (!m) throw ValidationError("unknown model '" + name + "'");
    return *m;
  }
};

std::string wl_text(const WhiteheadLengthResult& wl) {
  std::ostringstream os;
  os << "wl = " << wl.length << " (exhausted: " << (wl.exhausted ? "yes" : "no")
     << ")";
  return os.str();
}

SuiteResult run_one(const AssertDirective& dir, const ModelFile& mf,
                    const std::string& filename) {
  SuiteResult res;
  res.file = filename;
  res.line = dir.line;
  res.assertion = dir.kind;
  DirectiveArgs args{dir, mf};

  if (dir.kind == "valid") {
    const auto violations = validate_model_file(mf);
    res.passed = violations.empty();
    res.detail = violations.empty() ? "all blocks valid" : violations.front();
  } else if (dir.kind == "minimal") {
    const ParsedModel& m = args.model("model");
    if (m.finite) throw ValidationError("minimality applies to free models");
    const bool expected = args.require("expect") == "true";
    const bool got = m.free_dgl->is_minimal();
    res.passed = got == expected;
    res.detail = std::string("is_minimal = ") + (got ? "true" : "false");
  } else if (dir.kind == "homology") {
    const ParsedModel& m = args.model("model");
    const int degree = args.require_int("degree");
    const auto h = homology(*m.algebra(), degree);
    const std::size_t expected =
        static_cast<std::size_t>(args.require_int("dim"));
    res.passed = h.dimension == expected;
    res.detail = "H_" + std::to_string(degree) + " has dimension " +
                 std::to_string(h.dimension);
  } else if (dir.kind == "dims") {
    const ParsedMap& f = args.map();
    const int lo = args.require_int("from");
    const int hi = args.require_int("to");
    const int cap = args.require_int("cap");
    const MapMode mode =
        args.require("mode") == "free" ? MapMode::Free : MapMode::Based;
    const auto report = analyze_component(f.map, mode, lo, hi, cap);
    std::vector<std::size_t> expected;
    {
      std::istringstream is(args.require("expect"));
      std::string tok;
      while (std::getline(is, tok, ',')) expected.push_back(std::stoul(tok));
    }
    res.passed = expected.size() == report.dims.size();
    std::ostringstream os;
    os << "dims:";
    for (std::size_t i = 0; i < report.dims.size(); ++i) {
      os << " " << report.dims[i].dimension;
      if (res.passed && report.dims[i].dimension != expected[i])
        res.passed = false;
    }
    res.detail = os.str();
  } else if (dir.kind == "wl") {
    const ParsedMap& f = args.map();
    const int cap = args.require_int("cap");
    const Theater which =
        args.require("mode") == "free" ? Theater::Rel : Theater::Der;
    const auto wl = whitehead_length(f.map, which, cap);
    res.passed = true;
    if (auto v = args.get_int("min")) res.passed &= wl.length >= *v;
    if (auto v = args.get_int("max")) res.passed &= wl.length <= *v;
    if (auto v = args.get_int("eq")) res.passed &= wl.length == *v;
    if (auto v = args.get("exhausted"))
      res.passed &= wl.exhausted == (*v == "true");
    res.detail = wl_text(wl);
  } else if (dir.kind == "sphere") {
    SphereProblem prob;
    if (mf.sphere.has_value()) {
      prob = *mf.sphere;
    } else {
      prob = sphere_problem_from_map(*args.map().map);
    }
    const auto decision = sphere_classify(prob);
    res.passed = decision.based == args.require_int("based") &&
                 decision.free == args.require_int("free");
    res.detail = "based = " + std::to_string(decision.based) +
                 ", free = " + std::to_string(decision.free) + " (" +
                 decision.detail + ")";
  } else if (dir.kind == "null-equality") {
    const ParsedModel& X = args.model("source");
    const ParsedModel& Y = args.model("target");
    if (X.finite) throw ValidationError("source must be a free model");
    const auto check =
        check_null_equality(X.free_dgl, Y.algebra(), args.require_int("cap"));
    res.passed = check.passed;
    res.detail = check.detail;
  } else if (dir.kind == "coformal-bound") {
    const ParsedMap& f = args.map();
    const std::string rho_name = args.require("rho");
    const ParsedMap* rho = mf.find_map(rho_name);
    if (!rho) throw ValidationError("unknown map '" + rho_name + "'");
    const auto check =
        check_coformal_bound(f.map, rho->map, args.require_int("cap"));
    res.passed = check.passed;
    res.detail = check.detail;
  } else if (dir.kind == "coh-abelian") {
    const auto check = check_coh_abelian(args.map().map,
                                         args.require_int("cap"));
    res.passed = check.passed;
    res.detail = check.detail;
  } else if (dir.kind == "cone-bound") {
    const ParsedMap& f = args.map();
    const ParsedModel* src = mf.find_model(f.source);
    if (!src || !src->filtration)
      throw ValidationError("cone-bound needs a filtration on the source");
    const auto check =
        check_cone_bound(f.map, *src->filtration, args.require_int("cap"));
    res.passed = check.passed;
    res.detail = check.detail;
  } else {
    throw ValidationError("unknown assert kind '" + dir.kind + "'");
  }
  return res;
}

}  // namespace

std::vector<SuiteResult> run_asserts(const ModelFile& mf,
                                     const std::string& filename) {
  std::vector<SuiteResult> out;
  for (const auto& dir : mf.asserts) {
    try {
      out.push_back(run_one(dir, mf, filename));
    } catch (const Error& e) {
      SuiteResult res;
      res.file = filename;
      res.line = dir.line;
      res.assertion = dir.kind;
      res.passed = false;
      res.detail = std::string("error: ") + e.what();
      out.push_back(std::move(res));
    }
  }
  return out;
}

}  // namespace whale
