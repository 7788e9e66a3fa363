#include "whale/tensor.hpp"

#include "whale/errors.hpp"

namespace whale {

void TensorCoordinates::add(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto it = coords_.find(w);
  if (it == coords_.end()) {
    coords_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) coords_.erase(it);
  }
}

TensorCoordinates& TensorCoordinates::operator+=(
    const TensorCoordinates& other) {
  for (const auto& [w, c] : other.coords_) add(w, c);
  return *this;
}

TensorCoordinates& TensorCoordinates::operator*=(const Rational& c) {
  if (c == 0) {
    coords_.clear();
    return *this;
  }
  for (auto& [w, v] : coords_) v *= c;
  return *this;
}

namespace {

// expansion of one tree as a list of (word, coefficient)
void expand(const BracketTree& t, std::vector<std::pair<Word, Rational>>& out) {
  if (t.is_leaf()) {
    out.push_back({Word{static_cast<std::uint32_t>(t.leaf_index())},
                   Rational(1)});
    return;
  }
  std::vector<std::pair<Word, Rational>> l, r;
  expand(t.left(), l);
  expand(t.right(), r);
  const int dl = t.left().degree();
  const int dr = t.right().degree();
  const bool flip_negative = ((dl * dr) % 2) != 0;
  out.reserve(out.size() + 2 * l.size() * r.size());
  for (const auto& [wl, cl] : l)
    for (const auto& [wr, cr] : r) {
      Word ab = wl;
      ab.insert(ab.end(), wr.begin(), wr.end());
      out.push_back({std::move(ab), cl * cr});
      Word ba = wr;
      ba.insert(ba.end(), wl.begin(), wl.end());
      Rational c = cl * cr;
      if (!flip_negative) c = -c;
      out.push_back({std::move(ba), std::move(c)});
    }
}

}  // namespace

TensorCoordinates to_tensor(const LieElement& x) {
  auto deg = x.homogeneous_degree();
  if (!deg && !x.empty())
    throw DegreeError("to_tensor requires a homogeneous element");
  TensorCoordinates tc(deg.value_or(0));
  for (const auto& [t, c] : x.terms()) {
    std::vector<std::pair<Word, Rational>> words;
    expand(t, words);
    for (const auto& [w, wc] : words) tc.add(w, c * wc);
  }
  return tc;
}

bool tensor_zero(const LieElement& x) {
  if (x.empty()) return true;
  // non-homogeneous elements are zero iff every graded part is
  for (const auto& [deg, part] : x.graded_parts())
    if (!to_tensor(part).is_zero()) return false;
  return true;
}

bool tensor_equal(const LieElement& x, const LieElement& y) {
  return tensor_zero(x - y);
}

}  // namespace whale
