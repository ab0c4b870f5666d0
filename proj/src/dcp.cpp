#include "mhopf/dcp.hpp"

#include <algorithm>
#include <iterator>

namespace mhopf {

namespace {

std::size_t dim_of(const MultiplierHopfAlgebra& A) {
  auto b = A.basis();
  if (!b || !A.has_unit()) throw std::invalid_argument(A.name() + ": crossed products need a finite-dimensional unital instance");
  for (std::size_t i = 0; i < b->size(); ++i)
    if ((*b)[i] != static_cast<Atom>(i)) throw std::invalid_argument(A.name() + ": basis atoms must be 0..n-1");
  return b->size();
}

Atom encode(std::size_t n, Atom q, Atom b) { return static_cast<Atom>(static_cast<std::size_t>(q) * n + static_cast<std::size_t>(b)); }

// Functional x > p_k < y, i.e. z -> p_k(y z x), over the dual basis.
Vec coregular(const MultiplierHopfAlgebra& A, std::size_t n, const Vec& x, Atom k, const Vec& y) {
  Vec f;
  for (std::size_t m = 0; m < n; ++m) {
    const Scalar c = mul(A, y, leg(static_cast<Atom>(m)), x).coeff(Label{k});
    if (!c.is_zero()) f.add_term(Label{static_cast<Atom>(m)}, c);
  }
  return f;
}

// sum over Delta^(2)(a_j) of (alpha(a_(1)) > p_k < S^-1 beta(a_(3))) (x) a_(2), as (dual atom, base atom).
Vec twisted_middle(const MultiplierHopfAlgebra& A, std::size_t n, const AutoPair& pair, Atom j, Atom k) {
  Vec out;
  for (const auto& [l, c] : coproduct2(A, leg(j)).terms()) {
    const Vec f = coregular(A, n, pair.alpha(leg(l[0])), k, S_inv(A, pair.beta(leg(l[2]))));
    for (const auto& [lf, cf] : f.terms()) out.add_term(Label{lf[0], l[1]}, c * cf);
  }
  return out;
}

Vec assemble(const MultiplierHopfAlgebra& A, const MultiplierHopfAlgebra& dual, std::size_t n, Atom i, const Vec& middle, Atom l) {
  Vec out;
  for (const auto& [lm, c] : middle.terms()) {
    const Vec p = dual.multiply(i, lm[0]);
    const Vec a = A.multiply(lm[1], l);
    for (const auto& [lp, cp] : p.terms())
      for (const auto& [la, ca] : a.terms()) out.add_term(Label{encode(n, single(lp), single(la))}, c * cp * ca);
  }
  return out;
}

}  // namespace

Vec crossed_product_formula(const MultiplierHopfAlgebra& A, const MultiplierHopfAlgebra& dual, const AutoPair& pair,
                            Atom x, Atom y) {
  const std::size_t n = dim_of(A);
  const auto N = static_cast<Atom>(n);
  return assemble(A, dual, n, x / N, twisted_middle(A, n, pair, x % N, y / N), y % N);
}

std::vector<std::vector<Vec>> crossed_product_table(const MultiplierHopfAlgebra& A, const MultiplierHopfAlgebra& dual,
                                                    const AutoPair& pair, Exec exec) {
  const std::size_t n = dim_of(A), N = n * n;
  std::vector<Vec> middle(N);
  std::vector<std::vector<Vec>> table(N, std::vector<Vec>(N));
  auto middle_at = [&](std::size_t jk) {
    middle[jk] = twisted_middle(A, n, pair, static_cast<Atom>(jk / n), static_cast<Atom>(jk % n));
  };
  auto row = [&](std::size_t x) {
    for (std::size_t y = 0; y < N; ++y)
      table[x][y] = assemble(A, dual, n, static_cast<Atom>(x / n), middle[(x % n) * n + y / n], static_cast<Atom>(y % n));
  };
  if (exec == Exec::serial) {
    for (std::size_t jk = 0; jk < N; ++jk) middle_at(jk);
    for (std::size_t x = 0; x < N; ++x) row(x);
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t jk = 0; jk < N; ++jk) middle_at(jk);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t x = 0; x < N; ++x) row(x);
  }
  return table;
}

CrossedProduct::CrossedProduct(HopfPtr base, AutoPair pair, Exec exec)
    : base_(std::move(base)), dual_(dual_hopf(*base_)), pair_(std::move(pair)), n_(dim_of(*base_)) {
  table_ = crossed_product_table(*base_, *dual_, pair_, exec);
  unit_ = from_base(*base_->unit());
}

Vec CrossedProduct::from_dual(const Vec& p) const {
  const Vec one = *base_->unit();
  Vec out;
  for (const auto& [lp, cp] : p.terms())
    for (const auto& [la, ca] : one.terms()) out.add_term(Label{encode(n_, single(lp), single(la))}, cp * ca);
  return out;
}

Vec CrossedProduct::from_base(const Vec& a) const {
  const Vec eps = *dual_->unit();
  Vec out;
  for (const auto& [lp, cp] : eps.terms())
    for (const auto& [la, ca] : a.terms()) out.add_term(Label{encode(n_, single(lp), single(la))}, cp * ca);
  return out;
}

std::string CrossedProduct::name() const {
  if (pair_.alpha.name == "id" && pair_.beta.name == "id") return "D(" + base_->name() + ")";
  return "D(" + base_->name() + ")" + pair_.name();
}

std::optional<std::vector<Atom>> CrossedProduct::basis() const {
  std::vector<Atom> b(n_ * n_);
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = static_cast<Atom>(i);
  return b;
}

std::string CrossedProduct::atom_name(Atom x) const {
  const auto N = static_cast<Atom>(n_);
  return dual_->atom_name(x / N) + "><" + base_->atom_name(x % N);
}

Vec AlgebraModule::act(const Vec& r, const Vec& m) const {
  Vec out;
  for (const auto& [lr, cr] : r.terms())
    for (const auto& [lm, cm] : m.terms()) out.axpy(cr * cm, act_basis(single(lr), lm));
  return out;
}

AlgebraModule yd_to_dcp_module(const GYDModule& V, const std::shared_ptr<const CrossedProduct>& D) {
  if (!V.module.basis) throw std::invalid_argument(V.name + ": correspondence needs a finite carrier");
  AlgebraModule M;
  M.name = "dcp(" + V.name + ")";
  M.R = D;
  M.basis = *V.module.basis;
  const std::size_t k = V.module.legs;
  const auto n = static_cast<Atom>(D->n());
  const Vec one = *D->base().unit();
  M.act_basis = [V, k, n, one](Atom x, const Label& m) {
    const Atom i = x / n, j = x % n;
    Vec out;
    for (const auto& [l, c] : V.coaction.right(V.module.act(leg(j), Vec(m)), one).terms())
      if (l.back() == i) out.add_term(l.head(k), c);
    return out;
  };
  return M;
}

GYDModule dcp_module_to_yd(const AlgebraModule& M, const std::shared_ptr<const CrossedProduct>& D,
                           const IntegralData& integrals) {
  const auto& A = D->base();
  const HopfPtr Ap = D->base_ptr();
  GYDModule V;
  V.name = "yd(" + M.name + ")";
  V.pair = D->pair();
  V.module.name = V.name;
  V.module.A = Ap;
  V.module.legs = M.basis.empty() ? 1 : M.basis.front().size();
  V.module.basis = M.basis;
  V.module.act_basis = [M, D](Atom a, const Label& m) { return M.act(D->from_base(leg(a)), Vec(m)); };
  V.module.local_unit = [one = *A.unit()](const Label&) { return one; };
  V.module.sample_label = [basis = M.basis](Rng& rng) { return basis[rng.below(basis.size())]; };
  // (phi(. t_(2)) >< 1, S^-1(t_(1))) for every term of Delta(t)
  std::vector<std::pair<Vec, Vec>> legs;
  for (const auto& [l, c] : coproduct(A, integrals.t).terms()) {
    Vec f;
    for (std::size_t m = 0; m < D->n(); ++m) {
      const Scalar v = pair(integrals.phi, A.multiply(static_cast<Atom>(m), l[1]));
      if (!v.is_zero()) f.add_term(Label{static_cast<Atom>(m)}, v);
    }
    legs.emplace_back(D->from_dual(f) * c, S_inv(A, leg(l[0])));
  }
  V.coaction.name = V.name;
  V.coaction.slice_r = [M, Ap, legs](const Label& m, Atom a) {
    Vec out;
    for (const auto& [d, s] : legs) out += tensor(M.act(d, Vec(m)), mul(*Ap, s, leg(a)));
    return out;
  };
  return V;
}

AlgebraModule regular_algebra_module(const AlgebraPtr& R) {
  AlgebraModule M;
  M.name = "regular";
  M.R = R;
  const auto atoms = R->basis().value();
  for (Atom a : atoms) M.basis.push_back(Label{a});
  M.act_basis = [R](Atom x, const Label& m) { return R->multiply(x, single(m)); };
  return M;
}

std::optional<Witness> same_algebra_module(const AlgebraModule& M, const AlgebraModule& N) {
  const auto atoms = M.R->basis().value();
  for (Atom x : atoms)
    for (const auto& m : M.basis)
      if (auto w = expect_equal(M.act_basis(x, m), N.act_basis(x, m),
                                Witness{}.add("lhs", M.name).add("rhs", N.name).add("r", M.R->atom_name(x)).add("m", Vec(m))))
        return w;
  return std::nullopt;
}

std::optional<Witness> same_gyd_structure(const GYDModule& V, const GYDModule& W) {
  const auto& A = *V.A();
  const auto atoms = A.basis().value();
  for (Atom a : atoms)
    for (const auto& v : *V.module.basis) {
      Witness ctx = Witness{}.add("lhs", V.name).add("rhs", W.name).add("a", leg(a)).add("v", Vec(v));
      if (auto w = expect_equal(V.module.act_basis(a, v), W.module.act_basis(a, v), Witness(ctx).add("part", "action")))
        return w;
      if (auto w = expect_equal(V.coaction.slice_r(v, a), W.coaction.slice_r(v, a), Witness(ctx).add("part", "coaction")))
        return w;
    }
  return std::nullopt;
}

namespace {

std::optional<HopfPtr> try_double(const CrossedProduct& D, bool swap_dual_legs) {
  const auto& A = D.base();
  const auto& dual = *D.dual_ptr();
  const std::size_t n = D.n(), N = n * n;
  HopfTables t;
  t.name = D.name();
  t.field = A.field();
  for (std::size_t x = 0; x < N; ++x) t.names.push_back(D.atom_name(static_cast<Atom>(x)));
  t.mult = D.table();
  t.unit = *D.unit();
  for (std::size_t x = 0; x < N; ++x) {
    const Atom i = static_cast<Atom>(x / n), j = static_cast<Atom>(x % n);
    t.counit.push_back(dual.counit(i) * A.counit(j));
    Vec cop;
    for (const auto& [lp, cp] : coproduct(dual, leg(i)).terms())
      for (const auto& [la, ca] : coproduct(A, leg(j)).terms()) {
        const Atom p1 = swap_dual_legs ? lp[1] : lp[0], p2 = swap_dual_legs ? lp[0] : lp[1];
        cop.add_term(Label{encode(n, p1, la[0]), encode(n, p2, la[1])}, cp * ca);
      }
    t.coproduct.push_back(cop);
  }
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y) {
      Vec lhs;
      for (const auto& [l, c] : t.mult[x][y].terms()) lhs.axpy(c, t.coproduct[static_cast<std::size_t>(single(l))]);
      Vec rhs;
      for (const auto& [l1, c1] : t.coproduct[x].terms())
        for (const auto& [l2, c2] : t.coproduct[y].terms())
          rhs.axpy(c1 * c2, tensor(t.mult[static_cast<std::size_t>(l1[0])][static_cast<std::size_t>(l2[0])],
                                   t.mult[static_cast<std::size_t>(l1[1])][static_cast<std::size_t>(l2[1])]));
      if (!(lhs == rhs)) return std::nullopt;
    }
  try {
    return std::make_shared<FiniteHopf>(std::move(t));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

DoubleHopf drinfeld_double(const HopfPtr& A) {
  const CrossedProduct D(A, AutoPair{});
  if (auto h = try_double(D, false)) return {*h, "(p_(1) >< a_(1)) (x) (p_(2) >< a_(2))"};
  if (auto h = try_double(D, true)) return {*h, "(p_(2) >< a_(1)) (x) (p_(1) >< a_(2))"};
  throw std::runtime_error("D(" + A->name() + "): no coproduct convention is multiplicative");
}

std::vector<AutoPair> correspondence_pairs(const HopfPtr& A) {
  std::vector<AutoPair> out{AutoPair{}};
  for (auto& p : twisted_pairs(A)) out.push_back(p);
  return out;
}

void dcp_laws(LawRunner& run, const HopfPtr& A) {
  const IntegralData integrals = compute_integrals(*A);
  run.fact("integrals", "(i (x) phi)Delta(a) = phi(a)1, a t = eps(a) t, phi(t) = 1", [&]() -> std::optional<Witness> {
    if (auto w = verify_integrals(*A, integrals)) return w;
    if (pair(integrals.phi, integrals.t) != Scalar(1)) return Witness{}.add("phi(t)", pair(integrals.phi, integrals.t).str());
    return std::nullopt;
  });
  for (const auto& p : correspondence_pairs(A)) {
    const auto D = std::make_shared<const CrossedProduct>(A, p, run.exec());
    const std::string tag = "@" + p.name();
    const auto N = D->dim();
    const bool exhaustive = D->n() <= 4;
    const std::size_t count = exhaustive ? N * N * N : std::max<std::size_t>(500, run.samples());
    run.law("dcp-associative" + tag, "(xy)z = x(yz) in the crossed product", count,
            [D, N, exhaustive](Rng& rng, std::size_t i) {
              Vec x, y, z;
              if (exhaustive) {
                x = leg(static_cast<Atom>(digit(i, N, 0)));
                y = leg(static_cast<Atom>(digit(i, N, 1)));
                z = leg(static_cast<Atom>(digit(i, N, 2)));
              } else {
                x = random_element(*D, rng), y = random_element(*D, rng), z = random_element(*D, rng);
              }
              return expect_equal(mul(*D, mul(*D, x, y), z), mul(*D, x, mul(*D, y, z)),
                                  Witness{}.add("x", x).add("y", y).add("z", z));
            });
    run.law("dcp-unit" + tag, "(eps >< 1) x = x = x (eps >< 1)", N, [D](Rng&, std::size_t i) -> std::optional<Witness> {
      const Vec x = leg(static_cast<Atom>(i)), e = *D->unit();
      if (auto w = expect_equal(mul(*D, e, x), x, Witness{}.add("x", x))) return w;
      return expect_equal(mul(*D, x, e), x, Witness{}.add("x", x));
    });
    run.law("dcp-formula" + tag, "table entries equal the product formula", run.samples(), [D, A, p](Rng& rng, std::size_t) {
      const Atom x = D->sample_atom(rng), y = D->sample_atom(rng);
      return expect_equal(D->multiply(x, y), crossed_product_formula(*A, *D->dual_ptr(), p, x, y),
                          Witness{}.add("x", D->atom_name(x)).add("y", D->atom_name(y)));
    });
  }
  run.fact("double-hopf", "D(A) with counit p(1)eps(a) is a Hopf algebra", [&]() -> std::optional<Witness> {
    try {
      const DoubleHopf d = drinfeld_double(A);
      run.report().notes.push_back("D(" + A->name() + ") coproduct: " + d.coproduct_convention);
      return std::nullopt;
    } catch (const std::exception& e) {
      return Witness{}.add("error", e.what());
    }
  });
}

void correspondence_laws(LawRunner& run, const HopfPtr& A) {
  const IntegralData integrals = compute_integrals(*A);
  struct Case {
    std::shared_ptr<const CrossedProduct> D;
    GYDModule V;
  };
  std::vector<Case> cases;
  std::vector<std::shared_ptr<const CrossedProduct>> doubles;
  for (const auto& p : correspondence_pairs(A)) doubles.push_back(std::make_shared<const CrossedProduct>(A, p, run.exec()));
  Rng probe = Rng::stream(run.seed(), "correspondence-pairs");
  for (const auto& V : gyd_fixtures(A)) {
    if (!V.module.finite()) continue;
    auto it = std::find_if(doubles.begin(), doubles.end(),
                           [&](const auto& D) { return !same_pair(*A, D->pair(), V.pair, probe); });
    if (it == doubles.end()) {
      doubles.push_back(std::make_shared<const CrossedProduct>(A, V.pair, run.exec()));
      it = std::prev(doubles.end());
    }
    cases.push_back({*it, V});
  }
  run.law("yd-dcp-yd", "yd(dcp(V)) = V", cases.size(), [&](Rng&, std::size_t i) {
    const auto& [D, V] = cases[i];
    return same_gyd_structure(dcp_module_to_yd(yd_to_dcp_module(V, D), D, integrals), V);
  });
  run.law("dcp-yd-dcp", "dcp(yd(M)) = M", cases.size(), [&](Rng&, std::size_t i) {
    const auto& [D, V] = cases[i];
    const AlgebraModule M = yd_to_dcp_module(V, D);
    return same_algebra_module(yd_to_dcp_module(dcp_module_to_yd(M, D, integrals), D), M);
  });
  run.law("dcp-module-associative", "(dd').m = d.(d'.m) and (eps >< 1).m = m on dcp(V)", cases.size() * run.samples(),
          [&](Rng& rng, std::size_t i) -> std::optional<Witness> {
    const auto& [D, V] = cases[i % cases.size()];
    const AlgebraModule M = yd_to_dcp_module(V, D);
    const Vec d = random_element(*D, rng), d2 = random_element(*D, rng);
    const Vec m = Vec(M.basis[rng.below(M.basis.size())]);
    Witness ctx = Witness{}.add("module", M.name).add("d", d).add("d'", d2).add("m", m);
    if (auto w = expect_equal(M.act(*D->unit(), m), m, ctx)) return w;
    return expect_equal(M.act(mul(*D, d, d2), m), M.act(d, M.act(d2, m)), ctx);
  });
  run.law("regular-dcp-yd", "dcp(yd(D)) = D and yd(D) is compatible at the pair", doubles.size() * run.samples(),
          [&](Rng& rng, std::size_t i) -> std::optional<Witness> {
            const auto& D = doubles[i % doubles.size()];
            const AlgebraModule M = regular_algebra_module(D);
            const GYDModule V = dcp_module_to_yd(M, D, integrals);
            if (i < doubles.size())
              if (auto w = same_algebra_module(yd_to_dcp_module(V, D), M)) return w;
            const Vec a = random_element(*A, rng), v = V.module.sample(rng), a2 = random_element(*A, rng);
            return expect_equal(gyd_lhs(V, a, v, a2), gyd_rhs(V, a, v, a2),
                                Witness{}.add("pair", V.pair.name()).add("a", a).add("v", v).add("a'", a2));
          });
  // m -> m d' is a module map of the regular module; it must stay a map of
  // comodules and modules over A after transport.
  run.law("morphism-transport", "f(m) = m d' commutes with a. and Gamma on yd(D)", doubles.size() * run.samples(),
          [&](Rng& rng, std::size_t i) -> std::optional<Witness> {
            const auto& D = doubles[i % doubles.size()];
            const GYDModule V = dcp_module_to_yd(regular_algebra_module(D), D, integrals);
            const Vec d2 = random_element(*D, rng);
            auto f = [&](const Vec& m) { return mul(*D, m, d2); };
            const Vec a = random_element(*A, rng), m = V.module.sample(rng);
            Witness ctx = Witness{}.add("pair", V.pair.name()).add("d'", d2).add("a", a).add("m", m);
            if (auto w = expect_equal(f(V.module.act(a, m)), V.module.act(a, f(m)), Witness(ctx).add("part", "action")))
              return w;
            const Vec lhs = apply_legs(V.coaction.right(m, a), 0, 1, [&](const Label& l) { return f(Vec(l)); });
            return expect_equal(lhs, V.coaction.right(f(m), a), Witness(ctx).add("part", "coaction"));
          });
}

}  // namespace mhopf
