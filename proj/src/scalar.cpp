#include "mhopf/scalar.hpp"

#include <charconv>

namespace mhopf {

namespace {

bool is_prime_number(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw ArithmeticError("division by zero");
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::modular(const mpz_class& value, std::uint64_t prime) {
  Scalar s{mpq_class(value)};
  s.p_ = prime;
  s.reduce();
  return s;
}

std::uint64_t Scalar::join(std::uint64_t a, std::uint64_t b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw ArithmeticError("scalars from different prime fields");
}

void Scalar::reduce() {
  if (p_ == 0) return;
  mpz_class m(static_cast<unsigned long>(p_));
  mpz_class den = q_.get_den();
  mpz_class num = q_.get_num();
  if (den != 1) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
      throw ArithmeticError("denominator not invertible modulo " + std::to_string(p_));
    num *= inv;
  }
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), m.get_mpz_t());
  q_ = mpq_class(r);
}

Scalar Scalar::in_field(std::uint64_t prime) const {
  if (prime == 0 || p_ == prime) return *this;
  if (p_ != 0) throw ArithmeticError("scalars from different prime fields");
  Scalar s = *this;
  s.p_ = prime;
  s.reduce();
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.q_ = -s.q_;
  s.reduce();
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  p_ = join(p_, o.p_);
  q_ += o.q_;
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  p_ = join(p_, o.p_);
  q_ -= o.q_;
  reduce();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  p_ = join(p_, o.p_);
  q_ *= o.q_;
  reduce();
  return *this;
}

Scalar Scalar::inverse() const {
  if (p_ != 0) {
    Scalar s = *this;
    if (s.is_zero()) throw ArithmeticError("division by zero");
    mpz_class inv;
    mpz_class m(static_cast<unsigned long>(p_));
    mpz_invert(inv.get_mpz_t(), q_.get_num_mpz_t(), m.get_mpz_t());
    s.q_ = mpq_class(inv);
    return s;
  }
  if (is_zero()) throw ArithmeticError("division by zero");
  return Scalar(mpq_class(1) / q_);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  std::uint64_t p = join(p_, o.p_);
  Scalar d = o.in_field(p);
  *this = in_field(p);
  return *this *= d.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ == b.p_) return a.q_ == b.q_;
  std::uint64_t p = Scalar::join(a.p_, b.p_);
  return a.in_field(p).q_ == b.in_field(p).q_;
}

std::string Scalar::str() const { return q_.get_str(); }

Field Field::prime(std::uint64_t p) {
  if (!is_prime_number(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
  return Field(p);
}

Field Field::parse(const std::string& spec) {
  if (spec == "rational" || spec == "Q") return rationals();
  if (spec.rfind("fp:", 0) == 0) {
    std::uint64_t p = 0;
    const char* first = spec.data() + 3;
    const char* last = spec.data() + spec.size();
    auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec != std::errc() || ptr != last) throw std::invalid_argument("bad field spec: " + spec);
    return prime(p);
  }
  throw std::invalid_argument("bad field spec: " + spec);
}

std::string Field::name() const { return p_ == 0 ? "rational" : "fp:" + std::to_string(p_); }

}  // namespace mhopf
