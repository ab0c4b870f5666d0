#include "doctest.h"
#include "mhopf/instances.hpp"
#include "mhopf/yd.hpp"
#include "oracles.hpp"

using namespace mhopf;

namespace {

int conj(int g, int h) { return oracle::s3_mul(oracle::s3_mul(g, h), oracle::s3_inv(g)); }

// KS3 with g.h = g h g^-1 and h -> h (x) h, from the permutation oracle.
YDModule conjugation(const HopfPtr& A) {
  YDModule V;
  V.name = "conjugation";
  V.module = regular_module(A);
  V.module.act_basis = [](Atom g, const Label& h) { return Vec::atom(conj(static_cast<int>(g), static_cast<int>(h[0]))); };
  V.module.local_unit = [](const Label&) { return Vec::atom(0); };
  V.coaction.slice_r = [](const Label& h, Atom a) {
    return Vec(Label{h[0], oracle::s3_mul(static_cast<int>(h[0]), static_cast<int>(a))});
  };
  V.coaction.slice_l = [](const Label& h, Atom a) {
    return Vec(Label{h[0], oracle::s3_mul(static_cast<int>(a), static_cast<int>(h[0]))});
  };
  return V;
}

Report fresh(std::size_t samples = 50) {
  Report r;
  r.seed = 9;
  r.samples = samples;
  return r;
}

}  // namespace

TEST_SUITE("yd") {
  TEST_CASE("compatibility for conjugation and grouplike coaction on KS3") {
    auto A = make_instance("grp-S3", Field::rationals());
    const YDModule V = conjugation(A);
    for (int g = 0; g < 6; ++g)
      for (int h = 0; h < 6; ++h)
        for (int a = 0; a < 6; ++a) {
          const int c = conj(g, h);
          const Vec expect(Label{c, oracle::s3_mul(c, a)});
          CHECK(yd_lhs(V, Vec::atom(g), Vec::atom(h), Vec::atom(a)) == expect);
          CHECK(yd_rhs(V, Vec::atom(g), Vec::atom(h), Vec::atom(a)) == expect);
        }
    Report r = fresh();
    LawRunner run(r, Exec::serial);
    yd_laws(run, "", V);
    CHECK(r.all_pass());
  }

  TEST_CASE("registered objects pass, corrupted ones fail") {
    for (const char* name : {"fun-Z", "grp-S3", "grp-Z2", "sweedler-H4"}) {
      auto A = make_instance(name, Field::rationals());
      for (const auto& V : yd_fixtures(A)) {
        Report r = fresh();
        LawRunner run(r, Exec::serial);
        yd_laws(run, "", V);
        CHECK_MESSAGE(r.all_pass(), name, " ", V.name);
      }
    }
    auto S3 = make_instance("grp-S3", Field::rationals());
    for (const auto& V : yd_controls(S3)) {
      if (V.name != "regular-grouplike") continue;
      Report r = fresh();
      LawRunner run(r, Exec::serial);
      yd_laws(run, "", V);
      const LawResult* l = r.find("yd-compatible");
      REQUIRE(l);
      CHECK_FALSE(l->pass);
      CHECK(l->witness.has_value());
      CHECK(r.find("module-associative")->pass);
      CHECK(r.find("coaction-coassociative")->pass);
    }
  }

  TEST_CASE("tensor products") {
    auto A = make_instance("grp-S3", Field::rationals());
    const YDModule V = conjugation(A);
    const YDModule T = yd_tensor(V, V);
    for (int g = 0; g < 6; ++g)
      for (int h = 0; h < 6; ++h)
        for (int a = 0; a < 6; ++a) {
          const Vec expect(Label{g, h, oracle::s3_mul(oracle::s3_mul(h, g), a)});
          CHECK(T.coaction.right(Vec(Label{g, h}), Vec::atom(a)) == expect);
        }
    const YDModule K = trivial_yd(A);
    const YDModule VK = yd_tensor(V, K);
    for (int g = 0; g < 6; ++g)
      for (int h = 0; h < 6; ++h) {
        CHECK(VK.module.act(Vec::atom(g), Vec(Label{h, 0})) == Vec(Label{conj(g, h), 0}));
        CHECK(VK.coaction.right(Vec(Label{h, 0}), Vec::atom(g)) == Vec(Label{h, 0, oracle::s3_mul(h, g)}));
      }
    Report r = fresh();
    LawRunner run(r, Exec::serial);
    yd_laws(run, "", T);
    CHECK(r.all_pass());
  }

  TEST_CASE("braiding and the functor G") {
    auto A = make_instance("grp-S3", Field::rationals());
    const YDModule V = conjugation(A);
    const Module X = regular_module(A);
    for (int x = 0; x < 6; ++x)
      for (int h = 0; h < 6; ++h) {
        const Vec c = braiding_c(X, V, Vec(Label{x, h}));
        CHECK(c == Vec(Label{h, oracle::s3_mul(h, x)}));
        CHECK(braiding_c_inv(X, V, c) == Vec(Label{x, h}));
      }
    const HalfBraiding G = functor_g(V);
    for (int a = 0; a < 6; ++a)
      for (int h = 0; h < 6; ++h) CHECK(G.c_A(a, Label{h}) == Vec(Label{h, oracle::s3_mul(h, a)}));
    Report r = fresh();
    LawRunner run(r, Exec::serial);
    braiding_laws(run, "", X, V, &V);
    half_braiding_laws(run, "G-", G);
    CHECK(r.all_pass());
  }

  TEST_CASE("F and G are inverse on the hypothesis classes") {
    for (const char* name : {"fun-Z", "fun-Dinf", "grp-S3", "grp-Z2", "sweedler-H4"}) {
      auto A = make_instance(name, Field::rationals());
      const auto fx = yd_fixtures(A);
      CHECK(fx.size() >= 3);
      Report r = fresh();
      LawRunner run(r, Exec::serial);
      for (const auto& V : fx) equivalence_laws(run, V.name + "/", V);
      for (const auto& H : half_braiding_fixtures(A)) {
        equivalence_laws(run, H.name + "/", H);
        yd_laws(run, "F-" + H.name + "/", functor_f(H));
      }
      for (const auto& l : r.laws) CHECK_MESSAGE(l.pass, name, " ", l.id);
    }
    // F(G(V)) = V exactly for KZ2 with trivial action and grouplike coaction.
    auto Z2 = make_instance("grp-Z2", Field::rationals());
    YDModule V;
    V.module = regular_module(Z2);
    V.module.act_basis = [Z2](Atom a, const Label& h) { return Vec(h, Z2->counit(a)); };
    V.module.local_unit = [](const Label&) { return Vec::atom(0); };
    V.coaction.slice_r = [Z2](const Label& h, Atom a) { return tensor(Vec(h), Z2->multiply(h[0], a)); };
    V.coaction.slice_l = [Z2](const Label& h, Atom a) { return tensor(Vec(h), Z2->multiply(a, h[0])); };
    const YDModule FG = functor_f(functor_g(V));
    for (Atom h = 0; h < 2; ++h)
      for (Atom a = 0; a < 2; ++a) {
        CHECK(FG.module.act(Vec::atom(a), Vec::atom(h)) == V.module.act(Vec::atom(a), Vec::atom(h)));
        CHECK(FG.coaction.slice_r(Label{h}, a) == V.coaction.slice_r(Label{h}, a));
        CHECK(FG.coaction.slice_l(Label{h}, a) == V.coaction.slice_l(Label{h}, a));
      }
  }
}
