#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace mhopf {

class ArithmeticError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Exact scalar: an arbitrary-precision rational, or a residue modulo a prime.
///
/// A rational value (`modulus() == 0`) is a field-agnostic literal. When it
/// meets a prime-field value in an operation it is reduced into that field,
/// so constants such as 1, -1 or 1/2 can be written once and used everywhere.
/// Mixing two different primes is an error.
class Scalar {
public:
  Scalar() = default;
  Scalar(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  static Scalar rational(long num, long den);
  static Scalar modular(const mpz_class& value, std::uint64_t prime);

  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  const mpq_class& raw() const { return q_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "3/4" for rationals, "3" for residues (always in [0, p)).
  std::string str() const;

  /// The same value reduced into F_p (p == 0 leaves it unchanged).
  Scalar in_field(std::uint64_t prime) const;

private:
  static std::uint64_t join(std::uint64_t a, std::uint64_t b);
  void reduce();

  mpq_class q_{0};
  std::uint64_t p_ = 0;
};

/// The configured base field: the rationals, or F_p.
class Field {
public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);
  /// Parses "rational" or "fp:<p>".
  static Field parse(const std::string& spec);

  std::uint64_t characteristic() const { return p_; }
  bool is_prime() const { return p_ != 0; }
  Scalar operator()(long v) const { return Scalar(v).in_field(p_); }
  Scalar frac(long num, long den) const { return Scalar::rational(num, den).in_field(p_); }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

}  // namespace mhopf
