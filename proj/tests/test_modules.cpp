#include "doctest.h"
#include "mhopf/instances.hpp"
#include "mhopf/modules.hpp"
#include "oracles.hpp"

using namespace mhopf;

namespace {

// Gamma(h)(1 (x) a) = h (x) h a on a group algebra, written out directly.
Coaction grouplike(const HopfPtr& A) {
  Coaction c;
  c.name = "grouplike";
  c.slice_r = [A](const Label& h, Atom a) { return tensor(Vec(h), A->multiply(single(h), a)); };
  c.slice_l = [A](const Label& h, Atom a) { return tensor(Vec(h), A->multiply(a, single(h))); };
  return c;
}

Report fresh(std::size_t samples = 60) {
  Report r;
  r.seed = 3;
  r.samples = samples;
  return r;
}

}  // namespace

TEST_SUITE("extended-modules") {
  TEST_CASE("extension of the action to multipliers") {
    auto Z = make_instance("fun-Z", Field::rationals());
    const Module X = regular_module(Z);
    CHECK(extend_action(X, Multiplier::identity(), Vec::atom(0)) == Vec::atom(0));
    // The all-ones function u, multiplying pointwise.
    Multiplier u;
    u.left = [](Atom n) { return Vec::atom(n); };
    u.right = u.left;
    for (Atom n = -5; n <= 5; ++n) CHECK(extend_action(X, u, Vec::atom(n)) == Vec::atom(n));
    // Two different local units give the same result.
    const Vec x = Vec::atom(2) + 3 * Vec::atom(-1);
    const Vec e1 = Vec::atom(2) + Vec::atom(-1), e2 = e1 + Vec::atom(9);
    const Multiplier f = Multiplier::of(Z, Vec::atom(2) - Vec::atom(4));
    CHECK(extend_action_with(X, f, x, e1) == extend_action_with(X, f, x, e2));
    CHECK(extend_action(X, f, x) == Vec::atom(2));

    auto S3 = make_instance("grp-S3", Field::rationals());
    const Module R = regular_module(S3);
    Rng rng(4);
    for (int i = 0; i < 20; ++i) {
      const Vec a = random_element(*S3, rng), v = random_element(*S3, rng);
      CHECK(extend_action(R, Multiplier::of(S3, a), v) == R.act(a, v));
    }
  }

  TEST_CASE("the embedding x -> rho_x") {
    auto Z = make_instance("fun-Z", Field::rationals());
    const Module X = regular_module(Z);
    const ExtendedElement r = embed_rho(X, Vec::atom(0));
    for (Atom n = -4; n <= 4; ++n) CHECK(r.rho(Vec::atom(n)) == (n == 0 ? Vec::atom(0) : Vec{}));
    const ExtendedElement zero = embed_rho(X, Vec{});
    CHECK(zero.rho(Vec::atom(3)).is_zero());
    // rho_{a.x} = a . rho_x with (a . rho)(a') = rho(a' a).
    const Vec a = Vec::atom(1) + Vec::atom(2), x = Vec::atom(2) - Vec::atom(5), a2 = Vec::atom(2) + Vec::atom(5);
    CHECK(embed_rho(X, X.act(a, x)).rho(a2) == act_extended(*Z, a, embed_rho(X, x)).rho(a2));
  }

  TEST_CASE("extended-module laws on every carrier") {
    for (const char* name : {"fun-Z", "fun-Dinf", "grp-S3", "sweedler-H4"}) {
      auto A = make_instance(name, Field::rationals());
      Report r = fresh();
      LawRunner run(r, Exec::serial);
      for (const Module& X : {regular_module(A), trivial_module(A)}) {
        module_laws(run, X.name + "/", X);
        extended_module_laws(run, X.name + "/", X);
      }
      for (const auto& l : r.laws) CHECK_MESSAGE(l.pass, name, " ", l.id);
    }
  }

  TEST_CASE("grouplike coaction on KS3 and a corrupted one") {
    auto S3 = make_instance("grp-S3", Field::rationals());
    const Module V = regular_module(S3);
    {
      Report r = fresh();
      LawRunner run(r, Exec::serial);
      comodule_laws(run, "", V, grouplike(S3));
      CHECK(r.all_pass());
    }
    // Counit returns eps(a) v exactly, checked on every basis pair.
    for (Atom h = 0; h < 6; ++h)
      for (Atom a = 0; a < 6; ++a) {
        const Vec s = grouplike(S3).slice_r(Label{h}, a);
        const Vec c = apply_legs(s, 1, 2, [&](const Label& m) { return Vec(Label{}, S3->counit(m[0])); });
        CHECK(c == Vec::atom(h));
      }
    Coaction bad;
    bad.slice_r = [S3](const Label& v, Atom a) { return tensor(Vec(v), S3->multiply(a, a)); };
    Report r = fresh();
    LawRunner run(r, Exec::serial);
    comodule_laws(run, "", V, bad);
    const LawResult* co = r.find("coaction-coassociative");
    REQUIRE(co);
    CHECK_FALSE(co->pass);
    CHECK(co->witness.has_value());
  }

  TEST_CASE("factorization through M(A) on finite carriers") {
    auto S3 = make_instance("grp-S3", Field::rationals());
    {
      const Module K = trivial_module(S3);
      Coaction triv;
      triv.slice_r = [](const Label& v, Atom a) { return tensor(Vec(v), Vec::atom(a)); };
      triv.slice_l = triv.slice_r;
      const auto f = factor_coaction(K, triv);
      REQUIRE(f.size() == 1);
      REQUIRE(f[0].terms.size() == 1);
      for (Atom a = 0; a < 6; ++a) CHECK(f[0].terms[0].second.left_mul(Vec::atom(a)) == Vec::atom(a));
    }
    {
      const auto f = factor_coaction(regular_module(S3), grouplike(S3));
      REQUIRE(f.size() == 6);
      for (const auto& fv : f) {
        REQUIRE(fv.terms.size() == 1);
        CHECK(fv.terms[0].first == fv.v);
        for (Atom a = 0; a < 6; ++a) {
          const Vec expect = Vec::atom(oracle::s3_mul(static_cast<int>(fv.v[0]), static_cast<int>(a)));
          CHECK(fv.terms[0].second.left_mul(Vec::atom(a)) == expect);
        }
      }
    }
    {
      // One-dimensional K(Z)-comodule of the character k -> (-1)^k: the
      // factor is the multiplier sum_k (-1)^k delta_k, which is not in K(Z).
      auto Z = make_instance("fun-Z", Field::rationals());
      Module V;
      V.name = "sign";
      V.A = Z;
      V.basis = std::vector<Label>{Label{0}};
      V.act_basis = [](Atom g, const Label& v) { return g == 0 ? Vec(v) : Vec{}; };
      V.local_unit = [](const Label&) { return Vec::atom(0); };
      V.sample_label = [](Rng&) { return Label{0}; };
      Coaction c;
      c.slice_r = [](const Label& v, Atom k) { return Vec(Label{v[0], k}, k % 2 == 0 ? 1 : -1); };
      c.slice_l = c.slice_r;
      const auto f = factor_coaction(V, c);
      REQUIRE(f.size() == 1);
      REQUIRE(f[0].terms.size() == 1);
      const Multiplier& m = f[0].terms[0].second;
      for (Atom k = -20; k <= 20; ++k) CHECK(m.left_mul(Vec::atom(k)) == Vec::atom(k, k % 2 == 0 ? 1 : -1));
      Report r = fresh();
      LawRunner run(r, Exec::serial);
      comodule_laws(run, "", V, c);
      extended_coaction_laws(run, "", V, c);
      for (const auto& l : r.laws) CHECK_MESSAGE(l.pass, l.id);
    }
  }
}
