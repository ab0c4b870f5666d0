#include "doctest.h"
#include "mhopf/dcp.hpp"
#include "mhopf/gyd.hpp"
#include "mhopf/instances.hpp"
#include "oracles.hpp"

using namespace mhopf;

namespace {

std::string inner(int g) { return g == 0 ? std::string("id") : "inner:" + std::to_string(g); }

Report fresh(std::size_t samples = 40) {
  Report r;
  r.seed = 13;
  r.samples = samples;
  return r;
}

}  // namespace

TEST_SUITE("gyd") {
  TEST_CASE("pair group on inner automorphisms of S3") {
    auto A = make_instance("grp-S3", Field::rationals());
    Rng rng(1);
    const AutoPair unit;
    for (int g = 0; g < 6; ++g)
      for (int h = 0; h < 6; ++h) {
        const AutoPair p = make_pair(A, inner(g), inner(h));
        CHECK_FALSE(same_pair(*A, pair_product(unit, p), p, rng));
        CHECK_FALSE(same_pair(*A, pair_product(p, pair_inverse(p)), unit, rng));
        for (int k : {1, 3})
          for (int l : {2, 4}) {
            // (c_g, c_h) # (c_k, c_l) = (c_gk, c_{l k^-1 h k})
            const AutoPair q = make_pair(A, inner(k), inner(l));
            const int second = oracle::s3_mul(oracle::s3_mul(oracle::s3_mul(l, oracle::s3_inv(k)), h), k);
            const AutoPair expect = make_pair(A, inner(oracle::s3_mul(g, k)), inner(second));
            CHECK_FALSE(same_pair(*A, pair_product(p, q), expect, rng));
          }
      }
  }

  TEST_CASE("fixtures pass, a fixture checked at the wrong pair fails") {
    for (const char* name : {"fun-Z", "grp-S3", "sweedler-H4"}) {
      auto A = make_instance(name, Field::rationals());
      for (const auto& V : gyd_fixtures(A)) {
        Report r = fresh();
        LawRunner run(r, Exec::serial);
        gyd_laws(run, "", V);
        CHECK_MESSAGE(r.all_pass(), name, " ", V.name, " ", V.pair.name());
      }
    }
    auto H4 = make_instance("sweedler-H4", Field::rationals());
    bool seen = false;
    for (const auto& V : gyd_controls(H4)) {
      if (V.name.find('@') == std::string::npos) continue;
      seen = true;
      Report r = fresh();
      LawRunner run(r, Exec::serial);
      gyd_laws(run, "", V);
      const LawResult* l = r.find("gyd-compatible");
      REQUIRE(l);
      CHECK_FALSE(l->pass);
      CHECK(l->witness.has_value());
    }
    CHECK(seen);
  }

  TEST_CASE("tensor and crossing land at the predicted pairs") {
    auto A = make_instance("grp-S3", Field::rationals());
    const auto fx = gyd_fixtures(A);
    Rng rng(2);
    for (const auto& V : fx)
      for (const auto& W : fx) {
        CHECK_FALSE(same_pair(*A, gyd_tensor(V, W).pair, pair_product(V.pair, W.pair), rng));
        const GYDModule C = crossed_functor(V.pair, W);
        CHECK_FALSE(same_pair(*A, C.pair, pair_product(V.pair, pair_product(W.pair, pair_inverse(V.pair))), rng));
      }
    // The identity pair leaves W unchanged.
    for (const auto& W : fx) CHECK_FALSE(same_gyd_structure(crossed_functor(AutoPair{}, W), W));
  }

  TEST_CASE("T-category laws") {
    for (const char* name : {"grp-S3", "sweedler-H4", "grp-Z2"}) {
      auto A = make_instance(name, Field::rationals());
      Report r = fresh(30);
      LawRunner run(r, Exec::parallel);
      pair_group_laws(run, A);
      t_category_laws(run, gyd_fixtures(A));
      for (const auto& l : r.laws) CHECK_MESSAGE(l.pass, name, " ", l.id);
    }
  }
}
