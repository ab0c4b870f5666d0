#include <vector>

#include "doctest.h"
#include "mhopf/laws.hpp"
#include "mhopf/linalg.hpp"

using namespace mhopf;

TEST_SUITE("core") {
  TEST_CASE("prime field arithmetic") {
    const Field F = Field::prime(5);
    CHECK(F(3) * F(2) == F(1));
    CHECK(F(4) + F(3) == F(2));
    CHECK(F(2).inverse() == F(3));
    CHECK(F.frac(1, 2) == F(3));
    CHECK(F(-1).str() == "4");
    CHECK_THROWS_AS(F(0).inverse(), ArithmeticError);
    CHECK(Field::parse("fp:7") == Field::prime(7));
    CHECK(Field::parse("rational") == Field::rationals());
    CHECK_THROWS(Field::parse("fp:8"));
  }

  TEST_CASE("rationals stay exact") {
    const Scalar a = Scalar::rational(1, 3), b = Scalar::rational(1, 6);
    CHECK(a + b == Scalar::rational(1, 2));
    CHECK((a / b) == Scalar(2));
    CHECK((a * b).str() == "1/18");
  }

  TEST_CASE("tensor is bilinear on basis symbols") {
    const Vec d1 = Vec::atom(1), d2 = Vec::atom(2);
    CHECK(tensor(d1, d2) == Vec(Label{1, 2}));
    CHECK(tensor(Vec{}, d2).is_zero());
    const Vec g = Vec::atom(7), h = Vec::atom(8), k = Vec::atom(9);
    CHECK(tensor(2 * g + h, k) == 2 * Vec(Label{7, 9}) + Vec(Label{8, 9}));
    CHECK(tensor(d1, d2, g).terms().begin()->first.size() == 3);
  }

  TEST_CASE("zero coefficients never stored") {
    Vec v = Vec::atom(1) - Vec::atom(1);
    CHECK(v.is_zero());
    CHECK(v.str() == "0");
  }

  TEST_CASE("linear solves") {
    const Label x{0}, y{1};
    {
      const std::vector<Vec> rows{Vec(x)};
      const std::vector<Scalar> rhs{Scalar(1)};
      auto s = lin_solve(rows, rhs);
      REQUIRE(s);
      CHECK(s->coeff(x) == Scalar(1));
    }
    {
      const std::vector<Vec> rows{Vec(x) + Vec(y), Vec(x) - Vec(y)};
      const std::vector<Scalar> rhs{Scalar(0), Scalar(2)};
      auto s = lin_solve(rows, rhs);
      REQUIRE(s);
      CHECK(s->coeff(x) == Scalar(1));
      CHECK(s->coeff(y) == Scalar(-1));
    }
    {
      const std::vector<Vec> rows{Vec(x), Vec(x)};
      const std::vector<Scalar> rhs{Scalar(0), Scalar(1)};
      CHECK_FALSE(lin_solve(rows, rhs));
    }
  }

  TEST_CASE("quotient spaces") {
    const std::vector<Label> amb{Label{0}, Label{1}};
    {
      const std::vector<Vec> rel;
      QuotientSpace q(amb, rel);
      CHECK(q.dim() == 2);
    }
    {
      const std::vector<Vec> rel{Vec(Label{0}) - Vec(Label{1})};
      QuotientSpace q(amb, rel);
      CHECK(q.dim() == 1);
      CHECK(q.project(Vec(Label{0})) == q.project(Vec(Label{1})));
      CHECK(q.project(rel[0]).is_zero());
    }
  }

  TEST_CASE("rank and null space") {
    const std::vector<Vec> vs{Vec(Label{0}) + Vec(Label{1}), Vec(Label{1}) + Vec(Label{2}),
                              Vec(Label{0}) - Vec(Label{2})};
    CHECK(rank(vs) == 2);
    const std::vector<Label> unknowns{Label{0}, Label{1}};
    const std::vector<Vec> rows{Vec(Label{0}) + Vec(Label{1})};
    const auto ns = null_space(rows, unknowns);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0].coeff(Label{0}) == -ns[0].coeff(Label{1}));
  }

  TEST_CASE("serial and parallel kernels report the same first failure") {
    for (std::size_t bad : {std::size_t(0), std::size_t(17), std::size_t(999), std::size_t(5000)}) {
      const Probe probe = [bad](std::size_t i) -> std::optional<Witness> {
        if (i >= bad && i % 3 == bad % 3) return Witness{}.add("i", std::to_string(i));
        return std::nullopt;
      };
      const auto s = first_failure_serial(1000, probe);
      const auto p = first_failure_parallel(1000, probe);
      CHECK(s.failed_at == p.failed_at);
      CHECK(s.checked == p.checked);
      if (s.failed_at) CHECK(*s.failed_at == bad);
    }
  }

  TEST_CASE("rng streams are independent of draw order") {
    Rng a = Rng::stream(7, "law#3"), b = Rng::stream(7, "law#3"), c = Rng::stream(7, "law#4");
    const auto x = a.next();
    CHECK(x == b.next());
    CHECK(x != c.next());
  }
}
