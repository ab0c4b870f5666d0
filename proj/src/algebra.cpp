#include "mhopf/algebra.hpp"

#include <stdexcept>

namespace mhopf {

Rng Rng::stream(std::uint64_t seed, std::string_view tag) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : tag) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return Rng(seed ^ (h + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2)));
}

Vec Algebra::local_unit(std::span<const Vec>) const {
  if (auto u = unit()) return *u;
  throw std::logic_error(name() + ": non-unital algebra without a local-unit rule");
}

Atom Algebra::sample_atom(Rng& rng) const {
  auto b = basis();
  if (!b || b->empty()) throw std::logic_error(name() + ": no sampler for an infinite basis");
  return (*b)[rng.below(b->size())];
}

std::size_t Algebra::dim() const {
  auto b = basis();
  if (!b) throw std::logic_error(name() + " is infinite-dimensional");
  return b->size();
}

Vec mul(const Algebra& alg, const Vec& x, const Vec& y) {
  return extend2(x, y, [&](const Label& a, const Label& b) { return alg.multiply(single(a), single(b)); });
}

Vec mul(const Algebra& alg, const Vec& x, const Vec& y, const Vec& z) { return mul(alg, mul(alg, x, y), z); }

Scalar random_coefficient(const Field& field, Rng& rng) {
  const auto p = field.characteristic();
  if (p != 0 && p < 8) return field(static_cast<long>(1 + rng.below(p - 1)));
  static constexpr long kChoices[] = {-2, -1, 1, 2};
  return field(kChoices[rng.below(4)]);
}

Vec random_element(const Algebra& alg, Rng& rng, std::size_t max_support) {
  const std::size_t n = 1 + rng.below(max_support);
  Vec v;
  for (std::size_t i = 0; i < n; ++i) v.add_term(Label{alg.sample_atom(rng)}, random_coefficient(alg.field(), rng));
  if (v.is_zero()) v.add_term(Label{alg.sample_atom(rng)}, alg.field()(1));
  return v;
}

Vec Multiplier::left_mul(const Vec& x) const {
  if (!left) throw std::logic_error("multiplier has no left action: " + description);
  return extend(x, [&](const Label& l) { return left(single(l)); });
}

Vec Multiplier::right_mul(const Vec& x) const {
  if (!right) throw std::logic_error("multiplier has no right action: " + description);
  return extend(x, [&](const Label& l) { return right(single(l)); });
}

Multiplier Multiplier::of(AlgebraPtr alg, Vec f) {
  Multiplier m;
  m.description = f.str();
  m.left = [alg, f](Atom x) { return mul(*alg, f, Vec::atom(x)); };
  m.right = [alg, f](Atom x) { return mul(*alg, Vec::atom(x), f); };
  return m;
}

Multiplier Multiplier::identity() {
  Multiplier m;
  m.description = "1";
  m.left = [](Atom x) { return Vec::atom(x); };
  m.right = [](Atom x) { return Vec::atom(x); };
  return m;
}

Multiplier compose(const Multiplier& f, const Multiplier& g) {
  Multiplier m;
  m.description = "(" + f.description + ")(" + g.description + ")";
  if (f.left && g.left) m.left = [f, g](Atom x) { return f.left_mul(g.left(x)); };
  if (f.right && g.right) m.right = [f, g](Atom x) { return g.right_mul(f.right(x)); };
  return m;
}

bool multiplier_compatible(const Algebra& alg, const Multiplier& m, std::span<const Vec> xs, std::span<const Vec> ys) {
  for (const auto& x : xs)
    for (const auto& y : ys)
      if (!(mul(alg, m.right_mul(x), y) == mul(alg, x, m.left_mul(y)))) return false;
  return true;
}

}  // namespace mhopf
