#include <memory>

#include "doctest.h"
#include "mhopf/dcp.hpp"
#include "mhopf/instances.hpp"
#include "mhopf/yd_algebras.hpp"
#include "oracles.hpp"

using namespace mhopf;

namespace {

Report fresh(std::size_t samples = 40) {
  Report r;
  r.seed = 17;
  r.samples = samples;
  return r;
}

// KZ2 with trivial action and h -> h (x) h.
YDModule trivial_action_grouplike(const HopfPtr& A) {
  YDModule V;
  V.name = "grouplike";
  V.module = regular_module(A);
  V.module.act_basis = [A](Atom a, const Label& h) { return Vec(h, A->counit(a)); };
  V.module.local_unit = [](const Label&) { return Vec::atom(0); };
  V.coaction.slice_r = [A](const Label& h, Atom a) { return tensor(Vec(h), A->multiply(h[0], a)); };
  V.coaction.slice_l = [A](const Label& h, Atom a) { return tensor(Vec(h), A->multiply(a, h[0])); };
  return V;
}

bool commutative(const Algebra& D) {
  const auto b = D.basis().value();
  for (Atom x : b)
    for (Atom y : b)
      if (!(D.multiply(x, y) == D.multiply(y, x))) return false;
  return true;
}

}  // namespace

TEST_SUITE("dcp") {
  TEST_CASE("D(KZ2) is the commutative algebra K(Z2) (x) KZ2") {
    auto A = make_instance("grp-Z2", Field::rationals());
    const CrossedProduct D(A, AutoPair{});
    CHECK(D.basis()->size() == 4);
    for (Atom h = 0; h < 2; ++h)
      for (Atom a = 0; a < 2; ++a)
        for (Atom k = 0; k < 2; ++k)
          for (Atom b = 0; b < 2; ++b) {
            const Vec expect = h == k ? Vec::atom(h * 2 + (a + b) % 2) : Vec{};
            CHECK(D.multiply(D.atom(h, a), D.atom(k, b)) == expect);
          }
    CHECK(commutative(D));
    for (Atom x = 0; x < 4; ++x) CHECK(mul(D, *D.unit(), Vec::atom(x)) == Vec::atom(x));
    CHECK(*D.unit() == Vec::atom(D.atom(0, 0)) + Vec::atom(D.atom(1, 0)));
  }

  TEST_CASE("D(KS3): conjugation on the dual basis") {
    auto A = make_instance("grp-S3", Field::rationals());
    const CrossedProduct D(A, AutoPair{});
    for (int k = 0; k < 6; ++k)
      for (int g = 0; g < 6; ++g)
        for (int l = 0; l < 6; ++l) {
          const int c = oracle::s3_mul(oracle::s3_mul(g, l), oracle::s3_inv(g));
          const Vec expect = k == c ? Vec::atom(D.atom(k, g)) : Vec{};
          CHECK(D.multiply(D.atom(k, g), D.atom(l, 0)) == expect);
        }
    CHECK(D.basis()->size() == 36);
    CHECK_FALSE(commutative(D));
    // Associativity on all basis triples.
    bool assoc = true;
    for (Atom x = 0; x < 36 && assoc; ++x)
      for (Atom y = 0; y < 36 && assoc; ++y) {
        const Vec xy = D.multiply(x, y);
        for (Atom z = 0; z < 36 && assoc; ++z)
          assoc = mul(D, xy, Vec::atom(z)) == mul(D, Vec::atom(x), D.multiply(y, z));
      }
    CHECK(assoc);
  }

  TEST_CASE("serial and parallel tables agree, and match the formula") {
    auto A = make_instance("sweedler-H4", Field::rationals());
    auto dual = dual_hopf(*A);
    const AutoPair p = make_pair(A, "scale:2", "scale:-1");
    const auto ser = crossed_product_table(*A, *dual, p, Exec::serial);
    const auto par = crossed_product_table(*A, *dual, p, Exec::parallel);
    CHECK(ser == par);
    for (Atom x = 0; x < 16; x += 3)
      for (Atom y = 0; y < 16; ++y) CHECK(ser[x][y] == crossed_product_formula(*A, *dual, p, x, y));
  }

  TEST_CASE("YD modules as crossed-product modules") {
    auto S3 = make_instance("grp-S3", Field::rationals());
    auto D = std::make_shared<const CrossedProduct>(S3, AutoPair{});
    const AlgebraModule K = yd_to_dcp_module(as_gyd(trivial_yd(S3)), D);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) CHECK(K.act(Vec::atom(D->atom(i, j)), Vec::atom(0)) == (i == 0 ? Vec::atom(0) : Vec{}));

    auto Z2 = make_instance("grp-Z2", Field::rationals());
    auto D2 = std::make_shared<const CrossedProduct>(Z2, AutoPair{});
    const GYDModule V = as_gyd(trivial_action_grouplike(Z2));
    const AlgebraModule M = yd_to_dcp_module(V, D2);
    for (Atom p = 0; p < 2; ++p)
      for (Atom g = 0; g < 2; ++g)
        for (Atom h = 0; h < 2; ++h) CHECK(M.act(Vec::atom(D2->atom(p, g)), Vec::atom(h)) == (p == h ? Vec::atom(h) : Vec{}));
    const GYDModule back = dcp_module_to_yd(M, D2, compute_integrals(*Z2));
    CHECK_FALSE(same_gyd_structure(back, V));
    CHECK_FALSE(same_algebra_module(yd_to_dcp_module(back, D2), M));

    // The regular module comes back as a valid YD module.
    const GYDModule reg = dcp_module_to_yd(regular_algebra_module(D), D, compute_integrals(*S3));
    Report r = fresh();
    LawRunner run(r, Exec::parallel);
    gyd_laws(run, "", reg);
    CHECK(r.all_pass());
  }

  TEST_CASE("correspondence and crossed-product laws") {
    for (const char* name : {"grp-Z2", "sweedler-H4"}) {
      auto A = make_instance(name, Field::rationals());
      Report r = fresh();
      LawRunner run(r, Exec::parallel);
      dcp_laws(run, A);
      correspondence_laws(run, A);
      for (const auto& l : r.laws) CHECK_MESSAGE(l.pass, name, " ", l.id);
    }
  }

  TEST_CASE("Drinfeld doubles") {
    CHECK(drinfeld_double(make_instance("grp-Z2", Field::rationals())).hopf->basis()->size() == 4);
    const DoubleHopf D = drinfeld_double(make_instance("sweedler-H4", Field::rationals()));
    CHECK(D.hopf->basis()->size() == 16);
    CHECK(tables_of(*D.hopf).mult.size() == 16);
  }

  TEST_CASE("smash products") {
    auto Z2 = make_instance("grp-Z2", Field::rationals());
    const HopfPtr D = drinfeld_double(Z2).hopf;
    // K with the counit action: H # D is D.
    const ModuleAlgebra K{"K", ground_field(Z2->field()), trivial_module(D)};
    const SmashProduct KD(K, D);
    for (Atom x = 0; x < 4; ++x)
      for (Atom y = 0; y < 4; ++y) CHECK(KD.multiply(x, y) == D->multiply(x, y));
    // KZ2 with the counit action: the tensor product algebra.
    Module triv;
    triv.name = "counit";
    triv.A = D;
    triv.basis = std::vector<Label>{Label{0}, Label{1}};
    triv.act_basis = [D](Atom d, const Label& h) { return Vec(h, D->counit(d)); };
    triv.local_unit = [D](const Label&) { return *D->unit(); };
    triv.sample_label = [](Rng& rng) { return Label{static_cast<Atom>(rng.below(2))}; };
    const ModuleAlgebra H{"KZ2", Z2, triv};
    const SmashProduct HD(H, D);
    for (Atom h = 0; h < 2; ++h)
      for (Atom d = 0; d < 4; ++d)
        for (Atom h2 = 0; h2 < 2; ++h2)
          for (Atom d2 = 0; d2 < 4; ++d2) {
            const Vec expect = extend2(Z2->multiply(h, h2), D->multiply(d, d2),
                                       [](const Label& a, const Label& b) { return Vec::atom(a[0] * 4 + b[0]); });
            CHECK(HD.multiply(h * 4 + d, h2 * 4 + d2) == expect);
          }
    // D acting on itself by left multiplication is not a module algebra.
    const ModuleAlgebra reg{"regular", D, regular_module(D)};
    CHECK_THROWS(SmashProduct(reg, D));
  }
}
