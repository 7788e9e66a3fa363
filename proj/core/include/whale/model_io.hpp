#pragma once

#include "whale/function_space.hpp"

namespace whale {

struct ParsedModel {
  std::string name;
  bool finite = false;
  FreeDglPtr free_dgl;
  FiniteLiePtr finite_lie;
  std::optional<GeneratorFiltration> filtration;
  int line = 0;
  DglAlgebraPtr algebra() const {
    if (finite) return finite_lie;
    return free_dgl;
  }
};

struct ParsedMap {
  std::string name;
  std::string source;
  std::string target;
  DglMapPtr map;
  int line = 0;
};

struct AssertDirective {
  std::string kind;
  std::map<std::string, std::string> kv;
  int line = 0;
};

struct ModelFile {
  std::vector<ParsedModel> models;
  std::vector<ParsedMap> maps;
  std::optional<SphereProblem> sphere;
  std::vector<AssertDirective> asserts;

  const ParsedModel* find_model(std::string_view name) const;
  const ParsedMap* find_map(std::string_view name) const;
};

/// Parse the text model format. Syntax errors raise ParseError with
/// line/column; undeclared names are syntax errors too.
ModelFile parse_model_file(const std::string& text);

/// Canonical re-serialization; parse(serialize(parse(t))) is stable.
std::string serialize_model_file(const ModelFile& mf);

/// Run every validator (models, maps, filtrations, sphere data).
/// Messages carry the owning block's name.
std::vector<std::string> validate_model_file(const ModelFile& mf);

}  // namespace whale
