// Command-line surface: validate models, compute homology, Whitehead
// products and Whitehead length of function-space components, run the
// even-sphere classifier and fixture suites. Reports are plain text or
// schema-versioned JSON (--json), byte-stable for identical inputs.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "whale/errors.hpp"
#include "whale/suite.hpp"
#include "whale/version.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace whale;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitCapTooLow = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) throw Error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string fnv1a_digest(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

struct Output {
  bool as_json = false;
  std::string report_dir;
  json report;

  void begin(const std::string& command, const std::string& input_path,
             const std::string& input_text) {
    report = json{{"schema", 1},
                  {"command", command},
                  {"input",
                   {{"path", input_path}, {"digest", fnv1a_digest(input_text)}}},
                  {"kernel",
                   {{"name", std::string(kKernelName)},
                    {"version", std::string(kKernelVersion)}}},
                  {"status", "ok"}};
  }
  void write_report_file() {
    if (report_dir.empty()) return;
    fs::create_directories(report_dir);
    const std::string name =
        report["input"]["digest"].get<std::string>() + "-" +
        report["command"].get<std::string>() + ".json";
    std::ofstream out_file(fs::path(report_dir) / name, std::ios::binary);
    out_file << report.dump(2) << "\n";
  }
  int finish(int code = kExitOk) {
    if (as_json) std::cout << report.dump(2) << "\n";
    write_report_file();
    return code;
  }
  int fail(const std::string& type, const std::string& message, int code,
           json extra = json::object()) {
    report["status"] = "error";
    json err = {{"type", type}, {"message", message}};
    for (auto& [k, v] : extra.items()) err[k] = v;
    report["error"] = std::move(err);
    if (as_json)
      std::cout << report.dump(2) << "\n";
    else
      std::cerr << "error (" << type << "): " << message << "\n";
    write_report_file();
    return code;
  }
};

json rational_json(const Rational& q) { return to_string(q); }

json vec_json(const Vec& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(rational_json(c));
  return out;
}

const ParsedMap& pick_map(const ModelFile& mf, const std::string& name) {
  if (!name.empty()) {
    const ParsedMap* m = mf.find_map(name);
    if (!m) throw ValidationError("unknown map '" + name + "'");
    return *m;
  }
  if (mf.maps.empty()) throw ValidationError("the file declares no map");
  return mf.maps.front();
}

DglMapPtr resolve_map(const ModelFile& mf, const std::string& map_name,
                      const std::string& replace_name, int cap) {
  DglMapPtr f = pick_map(mf, map_name).map;
  if (!replace_name.empty()) {
    const ParsedMap* rho = mf.find_map(replace_name);
    if (!rho) throw ValidationError("unknown map '" + replace_name + "'");
    f = coformal_replace(f, rho->map, cap);
  }
  return f;
}

int run_validate(Output& out, const std::string& path) {
  const std::string text = slurp(path);
  out.begin("validate", path, text);
  const ModelFile mf = parse_model_file(text);
  const auto violations = validate_model_file(mf);
  json jv = json::array();
  for (const auto& v : violations) jv.push_back(v);
  out.report["result"] = {{"violations", jv},
                          {"models", mf.models.size()},
                          {"maps", mf.maps.size()}};
  if (!violations.empty()) {
    if (!out.as_json)
      for (const auto& v : violations) std::cout << "invalid: " << v << "\n";
    return out.finish(kExitFailure);
  }
  if (!out.as_json) std::cout << "ok\n";
  return out.finish();
}

int run_homology(Output& out, const std::string& path,
                 const std::string& model, int lo, int hi) {
  const std::string text = slurp(path);
  out.begin("homology", path, text);
  const ModelFile mf = parse_model_file(text);
  const ParsedModel* m = nullptr;
  if (!model.empty()) {
    m = mf.find_model(model);
    if (!m) throw ValidationError("unknown model '" + model + "'");
  } else if (mf.models.size() == 1) {
    m = &mf.models.front();
  } else {
    throw ValidationError("several models; pick one with --model");
  }
  json dims = json::array();
  for (int n = lo; n <= hi; ++n) {
    const auto h = homology(*m->algebra(), n);
    dims.push_back({{"degree", n}, {"dimension", h.dimension}});
    if (!out.as_json) std::cout << "H_" << n << " dim " << h.dimension << "\n";
  }
  out.report["result"] = {{"model", m->name}, {"homology", dims}};
  return out.finish();
}

json wl_json(const WhiteheadLengthResult& wl) {
  json witness = json::array();
  for (const auto& s : wl.witness)
    witness.push_back({{"degree", s.class_degree}, {"index", s.class_index}});
  return {{"length", wl.length},
          {"exhausted", wl.exhausted},
          {"witness", witness}};
}

int run_wl(Output& out, const std::string& path, const std::string& mode,
           int cap, const std::string& map_name,
           const std::string& replace_name) {
  const std::string text = slurp(path);
  out.begin("wl", path, text);
  const ModelFile mf = parse_model_file(text);
  const DglMapPtr f = resolve_map(mf, map_name, replace_name, cap);
  const Theater which = mode == "free" ? Theater::Rel : Theater::Der;
  const auto wl = whitehead_length(f, which, cap);
  out.report["result"] = {{"mode", mode}, {"cap", cap}, {"wl", wl_json(wl)}};
  if (!out.as_json)
    std::cout << "WL >= " << wl.length
              << (wl.exhausted ? " (exhausted within cap)"
                               : " (not exhausted within cap)")
              << "\n";
  return out.finish();
}

int run_product(Output& out, const std::string& path, const std::string& mode,
                const std::string& classes, int cap,
                const std::string& map_name,
                const std::string& replace_name) {
  const std::string text = slurp(path);
  out.begin("product", path, text);
  const ModelFile mf = parse_model_file(text);
  const DglMapPtr f = resolve_map(mf, map_name, replace_name, cap);

  std::size_t ia = 0, ib = 0;
  {
    std::istringstream is(classes);
    char comma = 0;
    if (!(is >> ia >> comma >> ib) || comma != ',')
      throw ValidationError("--classes expects two indices 'i,j'");
  }

  struct ClassRef {
    int degree;
    std::size_t index;
  };
  std::vector<ClassRef> table;
  json jclasses = json::array();
  json result;

  if (mode == "free") {
    auto ctx = std::make_shared<const RelContext>(f);
    std::map<int, RelHomologySpace> spaces;
    for (int d = 2; d <= cap - 1; ++d) {
      spaces.emplace(d, RelHomologySpace(ctx, d));
      for (std::size_t i = 0; i < spaces.at(d).dimension(); ++i) {
        jclasses.push_back({{"id", table.size()}, {"degree", d}, {"index", i}});
        table.push_back({d, i});
      }
    }
    if (ia >= table.size() || ib >= table.size())
      throw ValidationError("class index out of range");
    const auto& ca = table[ia];
    const auto& cb = table[ib];
    const int r = ca.degree + cb.degree - 1;
    if (r + 1 > cap)
      throw CapTooLow("product lives in degree " + std::to_string(r), r + 1,
                      cap);
    const RelElement prod =
        rel_whitehead(f, spaces.at(ca.degree).representative(ca.index),
                      spaces.at(cb.degree).representative(cb.index));
    const Vec coords = spaces.at(r).coordinates(prod);
    const auto bd = is_boundary(*ctx, prod, cap);
    bool nonzero = false;
    for (const auto& c : coords) nonzero |= c != 0;
    result = {{"mode", mode},          {"classes", jclasses},
              {"pair", {ia, ib}},      {"degree", r},
              {"coordinates", vec_json(coords)}, {"nonzero", nonzero},
              {"boundary", bd.is_boundary}};
    if (!out.as_json)
      std::cout << "product degree " << r << ", "
                << (nonzero ? "nonzero" : "zero") << " in homology\n";
  } else {
    std::map<int, DerHomologySpace> spaces;
    for (int d = 2; d <= cap - 1; ++d) {
      spaces.emplace(d, DerHomologySpace(f, d));
      for (std::size_t i = 0; i < spaces.at(d).dimension(); ++i) {
        jclasses.push_back({{"id", table.size()}, {"degree", d}, {"index", i}});
        table.push_back({d, i});
      }
    }
    if (ia >= table.size() || ib >= table.size())
      throw ValidationError("class index out of range");
    const auto& ca = table[ia];
    const auto& cb = table[ib];
    const int r = ca.degree + cb.degree - 1;
    if (r + 1 > cap)
      throw CapTooLow("product lives in degree " + std::to_string(r), r + 1,
                      cap);
    const PsiDerivation prod =
        der_whitehead(f, spaces.at(ca.degree).representative(ca.index),
                      spaces.at(cb.degree).representative(cb.index));
    const Vec coords = spaces.at(r).coordinates(prod);
    auto der = std::make_shared<const DerivationComplex>(f);
    const auto bd = is_boundary(*der, prod, cap);
    bool nonzero = false;
    for (const auto& c : coords) nonzero |= c != 0;
    result = {{"mode", mode},          {"classes", jclasses},
              {"pair", {ia, ib}},      {"degree", r},
              {"coordinates", vec_json(coords)}, {"nonzero", nonzero},
              {"boundary", bd.is_boundary}};
    if (!out.as_json)
      std::cout << "product degree " << r << ", "
                << (nonzero ? "nonzero" : "zero") << " in homology\n";
  }
  out.report["result"] = std::move(result);
  return out.finish();
}

int run_sphere(Output& out, const std::string& path) {
  const std::string text = slurp(path);
  out.begin("sphere", path, text);
  const ModelFile mf = parse_model_file(text);
  SphereProblem problem;
  if (mf.sphere.has_value()) {
    problem = *mf.sphere;
  } else {
    problem = sphere_problem_from_map(*pick_map(mf, "").map);
  }
  const auto decision = sphere_classify(problem);
  json certificate;
  if (decision.witness_pair) {
    certificate = {
        {"pair",
         {problem.cohomology_basis[decision.witness_pair->first].name,
          problem.cohomology_basis[decision.witness_pair->second].name}}};
    if (decision.witness_v)
      certificate["witness_generator"] =
          problem.cohomology_basis[*decision.witness_v].name;
  } else {
    certificate = {{"exhausted", "no pair satisfies (i)-(iii)"}};
  }
  out.report["result"] = {{"n", problem.n},
                          {"ck", rational_json(problem.c_k)},
                          {"based", decision.based},
                          {"free", decision.free},
                          {"certificate", certificate}};
  if (!out.as_json)
    std::cout << "based WL = " << decision.based
              << ", free WL = " << decision.free << " (" << decision.detail
              << ")\n";
  return out.finish();
}

int run_suite(Output& out, const std::string& dir) {
  out.begin("suite", dir, dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = entry.path().extension();
    if (ext == ".dgl" || ext == ".prob") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  json jresults = json::array();
  bool all_passed = true;
  for (const auto& file : files) {
    const ModelFile mf = parse_model_file(slurp(file.string()));
    for (const auto& r : run_asserts(mf, file.filename().string())) {
      all_passed &= r.passed;
      jresults.push_back({{"file", r.file},
                          {"line", r.line},
                          {"assertion", r.assertion},
                          {"passed", r.passed},
                          {"detail", r.detail}});
      if (!out.as_json)
        std::cout << (r.passed ? "PASS" : "FAIL") << " " << r.file << ":"
                  << r.line << " " << r.assertion << " (" << r.detail
                  << ")\n";
    }
  }
  out.report["result"] = {{"checks", jresults}, {"passed", all_passed}};
  return out.finish(all_passed ? kExitOk : kExitFailure);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Whitehead-product kernel for DG Lie models"};
  app.require_subcommand(1);

  Output out;
  std::string path, model_name, map_name, replace_name, mode = "free";
  std::string degrees = "1..4", classes;
  int cap = 0;

  auto* v = app.add_subcommand("validate", "validate models and maps");
  v->add_option("file", path)->required();

  auto* h = app.add_subcommand("homology", "degreewise homology of a model");
  h->add_option("file", path)->required();
  h->add_option("--degrees", degrees, "degree range a..b")->required();
  h->add_option("--model", model_name);

  auto* p = app.add_subcommand("product", "Whitehead product of two classes");
  p->add_option("file", path)->required();
  p->add_option("--mode", mode)
      ->check(CLI::IsMember({"based", "free"}))
      ->required();
  p->add_option("--classes", classes, "pair of class ids 'i,j'")->required();
  p->add_option("--cap", cap, "complex-degree cap")->required();
  p->add_option("--map", map_name);
  p->add_option("--replace", replace_name,
                "compose with this surjective quasi-iso first");

  auto* w = app.add_subcommand("wl", "Whitehead length search");
  w->add_option("file", path)->required();
  w->add_option("--mode", mode)
      ->check(CLI::IsMember({"based", "free"}))
      ->required();
  w->add_option("--cap", cap, "complex-degree cap")->required();
  w->add_option("--map", map_name);
  w->add_option("--replace", replace_name);

  auto* s = app.add_subcommand("sphere", "even-sphere classifier");
  s->add_option("file", path)->required();

  auto* u = app.add_subcommand("suite", "run assert blocks of fixture files");
  u->add_option("dir", path)->required();

  for (auto* sub : {v, h, p, w, s, u}) {
    sub->add_flag("--json", out.as_json, "emit a JSON report on stdout");
    sub->add_option("--report-dir", out.report_dir,
                    "also write the JSON report into this directory");
  }

  CLI11_PARSE(app, argc, argv);

  out.begin(app.get_subcommands().front()->get_name(), path, "");
  try {
    if (v->parsed()) return run_validate(out, path);
    if (h->parsed()) {
      const auto dots = degrees.find("..");
      if (dots == std::string::npos)
        throw ValidationError("--degrees expects a..b");
      const int lo = std::stoi(degrees.substr(0, dots));
      const int hi = std::stoi(degrees.substr(dots + 2));
      return run_homology(out, path, model_name, lo, hi);
    }
    if (p->parsed())
      return run_product(out, path, mode, classes, cap, map_name,
                         replace_name);
    if (w->parsed()) return run_wl(out, path, mode, cap, map_name,
                                   replace_name);
    if (s->parsed()) return run_sphere(out, path);
    if (u->parsed()) return run_suite(out, path);
  } catch (const CapTooLow& e) {
    return out.fail("CapTooLow", e.what(), kExitCapTooLow,
                    {{"needed", e.needed_degree}, {"cap", e.cap}});
  } catch (const ParseError& e) {
    return out.fail("ParseError", e.what(), kExitFailure,
                    {{"line", e.line}, {"column", e.column}});
  } catch (const QuasiIsoViolation& e) {
    return out.fail("QuasiIsoViolation", e.what(), kExitFailure,
                    {{"degree", e.degree}});
  } catch (const Error& e) {
    return out.fail("Error", e.what(), kExitFailure);
  }
  return kExitFailure;
}
