#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "whale/errors.hpp"

namespace whale {

struct Generator {
  std::string name;
  int degree = 1;
  bool operator==(const Generator&) const = default;
};

/// Ordered list of named graded generators. Connected: all degrees >= 1.
/// The order is authoritative; it is fixed by the model file and drives every
/// coordinatization downstream.
class GeneratorSet {
 public:
  explicit GeneratorSet(std::vector<Generator> gens);

  std::size_t size() const { return gens_.size(); }
  const Generator& operator[](std::size_t i) const { return gens_[i]; }
  int degree(std::size_t i) const { return gens_[i].degree; }
  const std::string& name(std::size_t i) const { return gens_[i].name; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  const std::vector<Generator>& items() const { return gens_; }
  int max_degree() const { return max_degree_; }

  bool operator==(const GeneratorSet& other) const {
    return gens_ == other.gens_;
  }

 private:
  std::vector<Generator> gens_;
  std::unordered_map<std::string, std::size_t> by_name_;
  int max_degree_ = 0;
};

using GeneratorSetPtr = std::shared_ptr<const GeneratorSet>;

inline bool same_generators(const GeneratorSetPtr& a,
                            const GeneratorSetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace whale
