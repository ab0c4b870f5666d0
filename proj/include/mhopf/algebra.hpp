#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "mhopf/element.hpp"
#include "mhopf/scalar.hpp"

namespace mhopf {

/// Seeded generator with platform-independent bounded draws.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  /// Derived stream for a named sub-task; independent of call order.
  static Rng stream(std::uint64_t seed, std::string_view tag);

  std::uint64_t next() { return g_(); }
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : g_() % n; }
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

private:
  std::mt19937_64 g_;
};

/// A non-degenerate algebra, unital or not, given on a basis of atoms.
class Algebra {
public:
  virtual ~Algebra() = default;

  virtual std::string name() const = 0;
  virtual Field field() const = 0;
  /// Product of two basis elements.
  virtual Vec multiply(Atom a, Atom b) const = 0;
  virtual std::optional<Vec> unit() const { return std::nullopt; }
  /// e with e x = x e = x for every x in xs.
  virtual Vec local_unit(std::span<const Vec> xs) const;
  /// The basis when finite-dimensional.
  virtual std::optional<std::vector<Atom>> basis() const { return std::nullopt; }
  virtual Atom sample_atom(Rng& rng) const;
  virtual std::string atom_name(Atom a) const { return std::to_string(a); }

  bool is_finite() const { return basis().has_value(); }
  bool has_unit() const { return unit().has_value(); }
  std::size_t dim() const;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

Vec mul(const Algebra& alg, const Vec& x, const Vec& y);
Vec mul(const Algebra& alg, const Vec& x, const Vec& y, const Vec& z);

/// Random element: support of 1..max_support basis atoms, coefficients drawn
/// from {-2,-1,1,2} (all nonzero residues for primes below 8).
Vec random_element(const Algebra& alg, Rng& rng, std::size_t max_support = 4);
Scalar random_coefficient(const Field& field, Rng& rng);

/// Element of M(A) given by its two multiplication maps. One-sided
/// multipliers (R(A), L(A)) leave the other map empty.
struct Multiplier {
  std::function<Vec(Atom)> left;   // x -> f x
  std::function<Vec(Atom)> right;  // x -> x f
  std::string description;

  Vec left_mul(const Vec& x) const;
  Vec right_mul(const Vec& x) const;

  static Multiplier of(AlgebraPtr alg, Vec f);
  static Multiplier identity();
  /// f g as a multiplier: (fg)x = f(gx), x(fg) = (xf)g.
  friend Multiplier compose(const Multiplier& f, const Multiplier& g);
};

/// (x f) y == x (f y); returns false on the first violating pair.
bool multiplier_compatible(const Algebra& alg, const Multiplier& m, std::span<const Vec> xs, std::span<const Vec> ys);

}  // namespace mhopf
