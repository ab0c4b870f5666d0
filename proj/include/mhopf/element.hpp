#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mhopf/scalar.hpp"

namespace mhopf {

/// One tensor leg: a group element in normal form, a dual-basis index, ...
using Atom = std::int64_t;

/// Basis symbol of a (possibly iterated) tensor product: an ordered tuple of
/// atoms with explicit arity. Tensoring concatenates; nothing reassociates.
class Label {
public:
  static constexpr std::size_t kMaxArity = 8;

  Label() = default;
  Label(std::initializer_list<Atom> atoms);
  explicit Label(std::span<const Atom> atoms);

  std::size_t size() const { return n_; }
  Atom operator[](std::size_t i) const { return a_[i]; }
  Atom front() const { return a_[0]; }
  Atom back() const { return a_[n_ - 1]; }
  std::span<const Atom> atoms() const { return {a_.data(), n_}; }

  /// Legs [from, to).
  Label slice(std::size_t from, std::size_t to) const;
  Label head(std::size_t k) const { return slice(0, k); }
  Label tail(std::size_t k) const { return slice(k, n_); }
  void push_back(Atom a);

  friend Label concat(const Label& a, const Label& b);
  friend std::strong_ordering operator<=>(const Label& a, const Label& b);
  friend bool operator==(const Label& a, const Label& b);

  std::string str() const;

private:
  std::array<Atom, kMaxArity> a_{};
  std::uint8_t n_ = 0;
};

/// Finite formal linear combination of basis symbols with nonzero exact
/// coefficients. The carrier for algebra, module and tensor elements.
class Vec {
public:
  using Terms = std::map<Label, Scalar>;

  Vec() = default;
  explicit Vec(const Label& l, Scalar c = Scalar(1));
  static Vec atom(Atom a, Scalar c = Scalar(1)) { return Vec(Label{a}, std::move(c)); }

  const Terms& terms() const& { return terms_; }
  /// By value on temporaries, so `for (... : f().terms())` stays valid.
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  Scalar coeff(const Label& l) const;

  void add_term(const Label& l, const Scalar& c);
  /// this += c * x
  void axpy(const Scalar& c, const Vec& x);

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(const Scalar& c);
  Vec operator-() const;
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(Scalar c, Vec x) { return x *= c; }
  friend Vec operator*(Vec x, const Scalar& c) { return x *= c; }
  friend bool operator==(const Vec& a, const Vec& b);

  /// Canonical text: "2*[0,1] + -1*[3]" or "0".
  std::string str() const;

private:
  Terms terms_;
};

/// Bilinear tensor product over the product basis.
Vec tensor(const Vec& x, const Vec& y);
Vec tensor(const Vec& x, const Vec& y, const Vec& z);

/// Linear extension of a basis map: sum_l c_l f(l).
template <class F>
Vec extend(const Vec& x, F&& f) {
  Vec out;
  for (const auto& [l, c] : x.terms()) out.axpy(c, f(l));
  return out;
}

/// Bilinear extension of a map on pairs of basis symbols.
template <class F>
Vec extend2(const Vec& x, const Vec& y, F&& f) {
  Vec out;
  for (const auto& [lx, cx] : x.terms())
    for (const auto& [ly, cy] : y.terms()) out.axpy(cx * cy, f(lx, ly));
  return out;
}

/// For every term of a tensor whose labels split at `k`, apply f(head, tail)
/// and sum. Used to act on one group of legs at a time.
template <class F>
Vec extend_split(const Vec& x, std::size_t k, F&& f) {
  Vec out;
  for (const auto& [l, c] : x.terms()) out.axpy(c, f(l.head(k), l.tail(k)));
  return out;
}

/// Apply a linear map to legs [from, to) of every term.
template <class F>
Vec apply_legs(const Vec& x, std::size_t from, std::size_t to, F&& f) {
  Vec out;
  for (const auto& [l, c] : x.terms()) {
    Label pre = l.head(from), mid = l.slice(from, to), post = l.tail(to);
    Vec img = f(mid);
    for (const auto& [m, d] : img.terms()) out.add_term(concat(concat(pre, m), post), c * d);
  }
  return out;
}

/// Reorder legs: result leg i is input leg perm[i].
Vec permute_legs(const Vec& x, std::span<const std::size_t> perm);
/// The flip on two-leg tensors whose first leg has `k` atoms.
Vec flip(const Vec& x, std::size_t k = 1);

/// Atom of a single-leg label, checked.
Atom single(const Label& l);

}  // namespace mhopf
