#include <array>

#include "doctest.h"
#include "mhopf/instances.hpp"
#include "mhopf/mha_laws.hpp"
#include "oracles.hpp"

using namespace mhopf;

namespace {

// H4 on g^a x^b, atom a + 2b: (g^a x^b)(g^c x^d) = (-1)^(bc) g^(a+c) x^(b+d).
Vec h4_mul(Atom i, Atom j) {
  const long a = i % 2, b = i / 2, c = j % 2, d = j / 2;
  if (b + d > 1) return {};
  return Vec::atom((a + c) % 2 + 2 * (b + d), (b * c) % 2 ? -1 : 1);
}

Vec h4_mul(const Vec& x, const Vec& y) {
  return extend2(x, y, [](const Label& l, const Label& m) { return h4_mul(l[0], m[0]); });
}

// Delta(g) = g (x) g, Delta(x) = x (x) 1 + g (x) x, extended multiplicatively.
Vec h4_delta(Atom i) {
  const Vec one = Vec::atom(0), g = Vec::atom(1), x = Vec::atom(2);
  const Vec dg = tensor(g, g), dx = tensor(x, one) + tensor(g, x);
  auto leg_mul = [](const Vec& u, const Vec& v) {
    return extend2(u, v, [](const Label& l, const Label& m) {
      return tensor(h4_mul(l[0], m[0]), h4_mul(l[1], m[1]));
    });
  };
  switch (i) {
    case 0: return tensor(one, one);
    case 1: return dg;
    case 2: return dx;
    default: return leg_mul(dg, dx);
  }
}

}  // namespace

TEST_SUITE("instances") {
  TEST_CASE("K(Z) slices against pointwise evaluation") {
    auto A = make_instance("fun-Z", Field::rationals());
    CHECK(A->t1(3, 1) == oracle::fun_z_t1(3, 1));
    CHECK(A->t1(3, 1) == Vec(Label{2, 1}));
    for (long n = -4; n <= 4; ++n)
      for (long m = -4; m <= 4; ++m) CHECK(A->t1(n, m) == oracle::fun_z_t1(n, m));
    CHECK(T_inv(*A, 1, A->t1(3, 1)) == Vec(Label{3, 1}));
    CHECK(A->antipode(5) == Vec::atom(-5));
    CHECK(A->counit(0) == Scalar(1));
    CHECK(A->counit(5) == Scalar(0));
  }

  TEST_CASE("KS3 slices are the grouplike ones") {
    auto A = make_instance("grp-S3", Field::rationals());
    for (Atom g = 0; g < 6; ++g)
      for (Atom h = 0; h < 6; ++h) {
        CHECK(A->multiply(g, h) == Vec::atom(oracle::s3_mul(static_cast<int>(g), static_cast<int>(h))));
        CHECK(A->t2(g, h) == Vec(Label{oracle::s3_mul(static_cast<int>(g), static_cast<int>(h)), h}));
        CHECK(T_inv(*A, 1, Vec(Label{g, h})) == Vec(Label{g, oracle::s3_mul(oracle::s3_inv(static_cast<int>(g)), static_cast<int>(h))}));
        CHECK(T_inv(*A, 2, A->t2(g, h)) == Vec(Label{g, h}));
        // Cocommutative: T is the flip; T'(g (x) h) = h (x) h^-1 g h.
        CHECK(script_t(*A, Vec(Label{g, h})) == Vec(Label{h, g}));
        const int conj = oracle::s3_mul(oracle::s3_mul(oracle::s3_inv(static_cast<int>(h)), static_cast<int>(g)), static_cast<int>(h));
        CHECK(script_t_prime(*A, Vec(Label{g, h})) == Vec(Label{h, conj}));
      }
  }

  TEST_CASE("T' is the flip on K(Z), T is not the flip on K(Dinf)") {
    auto Z = make_instance("fun-Z", Field::rationals());
    for (long n = -3; n <= 3; ++n)
      for (long m = -3; m <= 3; ++m) CHECK(script_t_prime(*Z, Vec(Label{n, m})) == Vec(Label{m, n}));
    auto D = make_instance("fun-Dinf", Field::rationals());
    bool differs = false;
    for (Atom a = -6; a <= 6 && !differs; ++a)
      for (Atom b = -6; b <= 6 && !differs; ++b)
        differs = !(script_t(*D, Vec(Label{a, b})) == Vec(Label{b, a}));
    CHECK(differs);
  }

  TEST_CASE("round trips of the braiding operators") {
    for (const char* name : {"fun-Z", "grp-S3", "sweedler-H4"}) {
      auto A = make_instance(name, Field::rationals());
      Rng rng(11);
      for (int i = 0; i < 50; ++i) {
        const Vec x = tensor(random_element(*A, rng), random_element(*A, rng));
        CHECK(script_t_inv(*A, script_t(*A, x)) == x);
        CHECK(script_t_prime_inv(*A, script_t_prime(*A, x)) == x);
        for (int k = 1; k <= 4; ++k) CHECK(T_inv(*A, k, T(*A, k, x)) == x);
      }
    }
  }

  TEST_CASE("Sweedler H4 against its presentation") {
    auto A = make_instance("sweedler-H4", Field::rationals());
    for (Atom i = 0; i < 4; ++i)
      for (Atom j = 0; j < 4; ++j) {
        CHECK(A->multiply(i, j) == h4_mul(i, j));
        // Delta(a)(1 (x) b) straight from the coproduct table.
        const Vec expect = extend(h4_delta(i), [&](const Label& l) {
          return tensor(Vec::atom(l[0]), h4_mul(Vec::atom(l[1]), Vec::atom(j)));
        });
        CHECK(A->t1(i, j) == expect);
      }
    const Vec g = Vec::atom(1), x = Vec::atom(2), gx = Vec::atom(3);
    CHECK(S(*A, x) == -gx);
    CHECK(S(*A, S(*A, x)) == -x);
    CHECK(A->counit(2) == Scalar(0));
    CHECK(A->counit(1) == Scalar(1));
    CHECK(t1(*A, x, g) == tensor(x, g) + tensor(g, h4_mul(x, g)));
  }

  TEST_CASE("dual of KZ2 and the double dual of KS3") {
    auto Z2 = make_instance("grp-Z2", Field::rationals());
    auto D = dual_hopf(*Z2);
    for (Atom h = 0; h < 2; ++h)
      for (Atom k = 0; k < 2; ++k) {
        CHECK(D->multiply(h, k) == (h == k ? Vec::atom(h) : Vec{}));
        CHECK(pair(Vec::atom(h), Vec::atom(k)) == Scalar(h == k ? 1 : 0));
      }
    auto S3 = make_instance("grp-S3", Field::rationals());
    auto DD = dual_hopf(*dual_hopf(*S3));
    for (Atom a = 0; a < 6; ++a)
      for (Atom b = 0; b < 6; ++b) {
        CHECK(DD->multiply(a, b) == S3->multiply(a, b));
        CHECK(DD->t1(a, b) == S3->t1(a, b));
      }
  }

  TEST_CASE("integrals") {
    auto S3 = make_instance("grp-S3", Field::rationals());
    const auto d = compute_integrals(*S3);
    Vec all;
    for (Atom g = 0; g < 6; ++g) all += Vec::atom(g);
    CHECK(d.t == all);
    for (Atom g = 0; g < 6; ++g) CHECK(pair(d.phi, Vec::atom(g)) == Scalar(g == 0 ? 1 : 0));

    auto Z2 = make_instance("grp-Z2", Field::rationals());
    const auto z = compute_integrals(*Z2);
    CHECK(pair(z.phi, Vec::atom(0)) == Scalar(1));
    CHECK(pair(z.phi, Vec::atom(1)) == Scalar(0));
    CHECK(z.t == Vec::atom(0) + Vec::atom(1));

    auto H4 = make_instance("sweedler-H4", Field::rationals());
    const auto h = compute_integrals(*H4);
    CHECK_FALSE(verify_integrals(*H4, h));
    CHECK(pair(h.phi, h.t) == Scalar(1));
  }

  TEST_CASE("automorphisms") {
    auto Z = make_instance("fun-Z", Field::rationals());
    const auto neg = make_automorphism(Z, "neg");
    CHECK(neg(Vec::atom(4)) == Vec::atom(-4));
    CHECK_FALSE(verify_automorphism(*Z, neg));
    auto H4 = make_instance("sweedler-H4", Field::rationals());
    const auto two = make_automorphism(H4, "scale:2");
    CHECK(two(Vec::atom(2)) == 2 * Vec::atom(2));
    CHECK(two(Vec::atom(1)) == Vec::atom(1));
    CHECK_THROWS_AS(make_automorphism(H4, "shift"), AutomorphismError);
    CHECK_FALSE(verify_automorphism(*H4, HopfAutomorphism::identity()));
  }

  TEST_CASE("quasitriangular structure on KZ2 over F5") {
    const Field F = Field::prime(5);
    auto A = make_instance("grp-Z2", F);
    const auto qt = qt_for_cyclic(*A, 2);
    const Vec e = Vec::atom(0), g = Vec::atom(1);
    const Vec expect = F(3) * (tensor(e, e) + tensor(e, g) + tensor(g, e) - tensor(g, g));
    CHECK(qt.R == expect);
    for (const auto& c : qt_axioms(*A, qt)) CHECK_MESSAGE(!c.run(), c.id);
    CHECK(mul_legs(*A, qt.R, qt.R_inv) == tensor(e, e));
    for (const auto& c : qt_axioms(*A, qt_trivial(*A))) CHECK_MESSAGE(!c.run(), c.id);
    // Q has no primitive cube root of unity.
    auto Z3 = make_instance("grp-Zn:3", Field::rationals());
    CHECK_THROWS(qt_for_cyclic(*Z3, 3));
  }

  TEST_CASE("axioms pass on every registered instance, identity antipode fails on H4") {
    for (const auto& name : {"fun-Z", "fun-Dinf", "grp-S3", "grp-Z2", "sweedler-H4", "dual:grp-S3"}) {
      Report r;
      r.seed = 5;
      r.samples = 40;
      LawRunner run(r, Exec::serial);
      mha_axiom_laws(run, *make_instance(name, Field::rationals()));
      braid_laws(run, *make_instance(name, Field::rationals()));
      for (const auto& l : r.laws) CHECK_MESSAGE(l.pass, name, " ", l.id);
    }
    Report r;
    r.seed = 5;
    r.samples = 40;
    LawRunner run(r, Exec::serial);
    mha_axiom_laws(run, *with_identity_antipode(make_instance("sweedler-H4", Field::rationals())));
    const LawResult* law = r.find("antipode-left");
    REQUIRE(law);
    CHECK_FALSE(law->pass);
    CHECK(law->witness.has_value());
  }
}
