#include "whale/model_io.hpp"

#include <cctype>
#include <sstream>

#include "whale/errors.hpp"

namespace whale {

const ParsedModel* ModelFile::find_model(std::string_view name) const {
  for (const auto& m : models)
    if (m.name == name) return &m;
  return nullptr;
}

const ParsedMap* ModelFile::find_map(std::string_view name) const {
  for (const auto& m : maps)
    if (m.name == name) return &m;
  return nullptr;
}

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;
  int line;

  int column() const { return static_cast<int>(pos) + 1; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line, column());
  }
  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool ident_start(char c) { return std::isalpha(c) || c == '_'; }
  std::string ident() {
    skip_ws();
    if (pos >= s.size() || !ident_start(s[pos])) fail("expected identifier");
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(s[pos]) || s[pos] == '_')) ++pos;
    return s.substr(start, pos - start);
  }
  Integer digits() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(s[pos])) fail("expected number");
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(s[pos])) ++pos;
    return Integer(s.substr(start, pos - start));
  }
  int small_int() {
    bool neg = accept('-');
    Integer d = digits();
    int v = static_cast<int>(d);
    return neg ? -v : v;
  }
  Rational rational() {
    bool neg = accept('-');
    Integer num = digits();
    Integer den = 1;
    if (accept('/')) den = digits();
    if (den == 0) fail("zero denominator");
    Rational r(num, den);
    return neg ? -r : r;
  }
  std::string rest() {
    skip_ws();
    return s.substr(pos);
  }
};

LieElement parse_factor(Lexer& lx, const GeneratorSetPtr& gens);

LieElement parse_expr(Lexer& lx, const GeneratorSetPtr& gens) {
  LieElement out(gens);
  bool negate = lx.accept('-');
  for (;;) {
    LieElement term(gens);
    const char c = lx.peek();
    if (std::isdigit(c)) {
      const Rational coef = lx.rational();
      const char c2 = lx.peek();
      if (c2 == '[' || lx.ident_start(c2)) {
        term = coef * parse_factor(lx, gens);
      } else if (coef == 0) {
        term = LieElement(gens);  // bare 0
      } else {
        lx.fail("a scalar must multiply a generator or bracket");
      }
    } else {
      term = parse_factor(lx, gens);
    }
    out += negate ? -term : term;
    if (lx.accept('+')) {
      negate = false;
    } else if (lx.accept('-')) {
      negate = true;
    } else {
      break;
    }
  }
  return out;
}

LieElement parse_factor(Lexer& lx, const GeneratorSetPtr& gens) {
  if (lx.accept('[')) {
    LieElement left = parse_expr(lx, gens);
    lx.expect(',');
    LieElement right = parse_expr(lx, gens);
    lx.expect(']');
    return formal_bracket(left, right);
  }
  const std::string name = lx.ident();
  auto idx = gens->index_of(name);
  if (!idx) lx.fail("unknown name '" + name + "'");
  return LieElement::generator(gens, *idx);
}

struct RawLine {
  std::string text;
  int line = 0;
};

struct ModelBlock {
  std::string name;
  bool finite = false;
  int line = 0;
  int truncated = kNoTruncation;
  std::vector<Generator> gens;
  std::vector<RawLine> d_lines;        // "NAME = expr" (after the 'd')
  std::vector<RawLine> bracket_lines;  // "[a, b] = expr" (finite only)
  std::vector<RawLine> stage_lines;    // "NAME = int"
};

struct MapBlock {
  std::string name, source, target;
  int line = 0;
  std::vector<RawLine> value_lines;  // "NAME = expr" (after the map name)
};

struct SphereBlock {
  int line = 0;
  std::vector<RawLine> lines;
};

ParsedModel build_model(const ModelBlock& blk) {
  ParsedModel out;
  out.name = blk.name;
  out.finite = blk.finite;
  out.line = blk.line;
  auto gens = std::make_shared<const GeneratorSet>(blk.gens);

  std::vector<LieElement> d_values(gens->size(), LieElement(gens));
  for (const auto& raw : blk.d_lines) {
    Lexer lx{raw.text, 0, raw.line};
    const std::string name = lx.ident();
    auto idx = gens->index_of(name);
    if (!idx) lx.fail("unknown name '" + name + "'");
    lx.expect('=');
    d_values[*idx] = parse_expr(lx, gens);
    if (!lx.at_end()) lx.fail("trailing input");
  }

  if (!blk.finite) {
    if (!blk.bracket_lines.empty())
      throw ParseError("bracket lines are only valid in finite-lie models",
                       blk.bracket_lines.front().line, 1);
    out.free_dgl =
        std::make_shared<const FreeDgl>(gens, std::move(d_values), blk.name);
    if (!blk.stage_lines.empty()) {
      GeneratorFiltration filt;
      filt.stage.assign(gens->size(), 1);
      for (const auto& raw : blk.stage_lines) {
        Lexer lx{raw.text, 0, raw.line};
        const std::string name = lx.ident();
        auto idx = gens->index_of(name);
        if (!idx) lx.fail("unknown name '" + name + "'");
        lx.expect('=');
        filt.stage[*idx] = lx.small_int();
        if (!lx.at_end()) lx.fail("trailing input");
      }
      filt.length = *std::max_element(filt.stage.begin(), filt.stage.end());
      out.filtration = std::move(filt);
    }
    return out;
  }

  std::map<std::pair<std::size_t, std::size_t>, LieElement> table;
  for (const auto& raw : blk.bracket_lines) {
    Lexer lx{raw.text, 0, raw.line};
    lx.expect('[');
    const std::string na = lx.ident();
    lx.expect(',');
    const std::string nb = lx.ident();
    lx.expect(']');
    lx.expect('=');
    auto ia = gens->index_of(na);
    auto ib = gens->index_of(nb);
    if (!ia) lx.fail("unknown name '" + na + "'");
    if (!ib) lx.fail("unknown name '" + nb + "'");
    LieElement value = parse_expr(lx, gens);
    if (!lx.at_end()) lx.fail("trailing input");
    std::size_t i = *ia, j = *ib;
    if (i > j) {
      // store the i <= j normal form
      const int sign = gens->degree(i) * gens->degree(j) + 1;
      if (sign % 2 != 0) value = -value;
      std::swap(i, j);
    }
    auto [it, inserted] = table.emplace(std::make_pair(i, j), value);
    if (!inserted) lx.fail("duplicate bracket line");
  }
  out.finite_lie = std::make_shared<const FiniteLie>(
      gens, std::move(table), std::move(d_values), blk.truncated, blk.name);
  if (!blk.stage_lines.empty())
    throw ParseError("filtrations are only valid in free-dgl models",
                     blk.stage_lines.front().line, 1);
  return out;
}

ParsedMap build_map(const MapBlock& blk, const ModelFile& mf) {
  const ParsedModel* src = mf.find_model(blk.source);
  const ParsedModel* tgt = mf.find_model(blk.target);
  if (!src)
    throw ParseError("unknown model '" + blk.source + "'", blk.line, 1);
  if (!tgt)
    throw ParseError("unknown model '" + blk.target + "'", blk.line, 1);
  if (src->finite)
    throw ParseError("map sources must be free-dgl models", blk.line, 1);

  const auto& sgens = src->free_dgl->generators();
  const auto& tgens = tgt->algebra()->generators();
  std::vector<LieElement> values(sgens->size(), LieElement(tgens));
  for (const auto& raw : blk.value_lines) {
    Lexer lx{raw.text, 0, raw.line};
    const std::string name = lx.ident();
    auto idx = sgens->index_of(name);
    if (!idx) lx.fail("unknown name '" + name + "'");
    lx.expect('=');
    values[*idx] = parse_expr(lx, tgens);
    if (!lx.at_end()) lx.fail("trailing input");
  }
  ParsedMap out;
  out.name = blk.name;
  out.source = blk.source;
  out.target = blk.target;
  out.line = blk.line;
  out.map = std::make_shared<const DglMap>(src->free_dgl, tgt->algebra(),
                                           std::move(values), blk.name);
  return out;
}

SphereProblem build_sphere(const SphereBlock& blk) {
  SphereProblem p;
  std::vector<Generator> basis;
  auto index_of = [&](const std::string& name,
                      const Lexer& lx) -> std::size_t {
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i].name == name) return i;
    throw ParseError("unknown basis name '" + name + "'", lx.line, 1);
  };
  std::optional<std::string> k_name;
  struct CLine {
    std::string xi, xj, xv;
    Rational value;
    int line;
  };
  std::vector<CLine> c_lines;
  for (const auto& raw : blk.lines) {
    Lexer lx{raw.text, 0, raw.line};
    const std::string head = lx.ident();
    if (head == "n") {
      lx.expect('=');
      p.n = lx.small_int();
    } else if (head == "ck") {
      lx.expect('=');
      p.c_k = lx.rational();
    } else if (head == "k") {
      lx.expect('=');
      k_name = lx.ident();
    } else if (head == "basis") {
      const std::string name = lx.ident();
      lx.expect(':');
      basis.push_back({name, lx.small_int()});
    } else if (head == "c") {
      CLine cl;
      cl.xi = lx.ident();
      cl.xj = lx.ident();
      cl.xv = lx.ident();
      lx.expect('=');
      cl.value = lx.rational();
      cl.line = raw.line;
      c_lines.push_back(std::move(cl));
    } else {
      lx.fail("unknown sphere-problem line '" + head + "'");
    }
    if (!lx.at_end()) lx.fail("trailing input");
  }
  p.cohomology_basis = basis;
  for (const auto& cl : c_lines) {
    Lexer lx{cl.xi, 0, cl.line};
    std::size_t i = index_of(cl.xi, lx);
    std::size_t j = index_of(cl.xj, lx);
    std::size_t v = index_of(cl.xv, lx);
    if (i > j) std::swap(i, j);
    if (cl.value != 0) p.c[{i, j}][v] = cl.value;
  }
  if (k_name) {
    Lexer lx{*k_name, 0, blk.line};
    p.k = index_of(*k_name, lx);
  }
  return p;
}

}  // namespace

ModelFile parse_model_file(const std::string& text) {
  ModelFile mf;
  std::optional<ModelBlock> model;
  std::optional<MapBlock> map;
  std::optional<SphereBlock> sphere;

  auto flush = [&]() {
    if (model) {
      mf.models.push_back(build_model(*model));
      model.reset();
    }
    if (map) {
      mf.maps.push_back(build_map(*map, mf));
      map.reset();
    }
    if (sphere) {
      if (mf.sphere.has_value())
        throw ParseError("multiple sphere blocks", sphere->line, 1);
      mf.sphere = build_sphere(*sphere);
      sphere.reset();
    }
  };

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    while (!raw.empty() && (raw.back() == ' ' || raw.back() == '\t' ||
                            raw.back() == '\r'))
      raw.pop_back();
    Lexer lx{raw, 0, line_no};
    if (lx.at_end()) continue;

    if (lx.peek() == '[') {
      if (!model || !model->finite)
        lx.fail("bracket lines belong to finite-lie models");
      model->bracket_lines.push_back({raw, line_no});
      continue;
    }

    const std::size_t before = lx.pos;
    const std::string head = lx.ident();
    if (head == "model") {
      flush();
      ModelBlock blk;
      blk.name = lx.ident();
      lx.expect(':');
      const std::string kind = lx.ident();
      // the lexer stops identifiers at '-', stitch the kind together
      std::string full_kind = kind;
      if (lx.accept('-')) full_kind += "-" + lx.ident();
      if (full_kind == "free-dgl") {
        blk.finite = false;
      } else if (full_kind == "finite-lie") {
        blk.finite = true;
      } else {
        lx.fail("model kind must be free-dgl or finite-lie");
      }
      blk.line = line_no;
      model = std::move(blk);
    } else if (head == "gen" && model) {
      const std::string name = lx.ident();
      lx.expect(':');
      model->gens.push_back({name, lx.small_int()});
      if (!lx.at_end()) lx.fail("trailing input");
    } else if (head == "d" && model && lx.peek() != '=') {
      model->d_lines.push_back({lx.rest(), line_no});
    } else if (head == "stage" && model) {
      model->stage_lines.push_back({lx.rest(), line_no});
    } else if (head == "truncated" && model) {
      model->truncated = lx.small_int();
      if (!lx.at_end()) lx.fail("trailing input");
    } else if (head == "map") {
      flush();
      MapBlock blk;
      blk.name = lx.ident();
      lx.expect(':');
      blk.source = lx.ident();
      lx.expect('-');
      lx.expect('>');
      blk.target = lx.ident();
      blk.line = line_no;
      if (!lx.at_end()) lx.fail("trailing input");
      map = std::move(blk);
    } else if (head == "sphere") {
      flush();
      sphere = SphereBlock{line_no, {}};
      if (!lx.at_end()) lx.fail("trailing input");
    } else if (head == "assert") {
      flush();
      AssertDirective dir;
      dir.kind = lx.ident();
      while (lx.accept('-')) dir.kind += "-" + lx.ident();
      dir.line = line_no;
      while (!lx.at_end()) {
        const std::string key = lx.ident();
        lx.expect('=');
        lx.skip_ws();
        std::size_t start = lx.pos;
        while (lx.pos < raw.size() && raw[lx.pos] != ' ' &&
               raw[lx.pos] != '\t')
          ++lx.pos;
        dir.kv[key] = raw.substr(start, lx.pos - start);
      }
      mf.asserts.push_back(std::move(dir));
    } else if (map && head == map->name) {
      map->value_lines.push_back({lx.rest(), line_no});
    } else if (sphere) {
      lx.pos = before;
      sphere->lines.push_back({raw, line_no});
    } else {
      lx.pos = before;
      lx.fail("unrecognized line '" + head + "'");
    }
  }
  flush();
  return mf;
}

namespace {

std::string rational_text(const Rational& q) { return to_string(q); }

void serialize_element(std::ostringstream& os, const LieElement& e) {
  os << e.to_text();
}

}  // namespace

std::string serialize_model_file(const ModelFile& mf) {
  std::ostringstream os;
  bool first_block = true;
  auto sep = [&]() {
    if (!first_block) os << "\n";
    first_block = false;
  };
  for (const auto& m : mf.models) {
    sep();
    os << "model " << m.name << " : " << (m.finite ? "finite-lie" : "free-dgl")
       << "\n";
    const auto& gens = *m.algebra()->generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
      os << "gen " << gens.name(i) << " : " << gens.degree(i) << "\n";
    if (m.finite) {
      if (m.finite_lie->truncation_degree() != kNoTruncation)
        os << "truncated " << m.finite_lie->truncation_degree() << "\n";
      for (const auto& [key, value] : m.finite_lie->bracket_table()) {
        if (value.empty()) continue;
        os << "[" << gens.name(key.first) << ", " << gens.name(key.second)
           << "] = ";
        serialize_element(os, value);
        os << "\n";
      }
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const LieElement& dv = m.finite_lie->differential_of(i);
        if (dv.empty()) continue;
        os << "d " << gens.name(i) << " = ";
        serialize_element(os, dv);
        os << "\n";
      }
    } else {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const LieElement& dv = m.free_dgl->differential_of(i);
        if (dv.empty()) continue;
        os << "d " << gens.name(i) << " = ";
        serialize_element(os, dv);
        os << "\n";
      }
      if (m.filtration)
        for (std::size_t i = 0; i < gens.size(); ++i)
          os << "stage " << gens.name(i) << " = " << m.filtration->stage[i]
             << "\n";
    }
  }
  for (const auto& f : mf.maps) {
    sep();
    os << "map " << f.name << " : " << f.source << " -> " << f.target << "\n";
    const auto& gens = *f.map->source()->generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (f.map->value(i).empty()) continue;
      os << f.name << " " << gens.name(i) << " = ";
      serialize_element(os, f.map->value(i));
      os << "\n";
    }
  }
  if (mf.sphere) {
    sep();
    const auto& p = *mf.sphere;
    os << "sphere\n";
    os << "n = " << p.n << "\n";
    os << "ck = " << rational_text(p.c_k) << "\n";
    if (p.k) os << "k = " << p.cohomology_basis[*p.k].name << "\n";
    for (const auto& b : p.cohomology_basis)
      os << "basis " << b.name << " : " << b.degree << "\n";
    for (const auto& [key, table] : p.c)
      for (const auto& [l, v] : table)
        if (v != 0)
          os << "c " << p.cohomology_basis[key.first].name << " "
             << p.cohomology_basis[key.second].name << " "
             << p.cohomology_basis[l].name << " = " << rational_text(v)
             << "\n";
  }
  for (const auto& a : mf.asserts) {
    sep();
    os << "assert " << a.kind;
    for (const auto& [k, v] : a.kv) os << " " << k << "=" << v;
    os << "\n";
  }
  return os.str();
}

std::vector<std::string> validate_model_file(const ModelFile& mf) {
  std::vector<std::string> out;
  for (const auto& m : mf.models) {
    const auto violations =
        m.finite ? m.finite_lie->validate() : m.free_dgl->validate();
    for (const auto& v : violations) out.push_back(m.name + ": " + v);
    if (m.filtration)
      for (const auto& v : m.filtration->validate(*m.free_dgl))
        out.push_back(m.name + ": " + v);
  }
  for (const auto& f : mf.maps)
    for (const auto& v : f.map->validate())
      out.push_back(f.name + ": " + v);
  if (mf.sphere)
    for (const auto& v : validate_sphere(*mf.sphere))
      out.push_back("sphere: " + v);
  return out;
}

}  // namespace whale
