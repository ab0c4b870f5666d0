#include "mhopf/modules.hpp"

#include <map>
#include <set>

namespace mhopf {

Vec Module::act(const Vec& a, const Vec& v) const {
  Vec out;
  for (const auto& [la, ca] : a.terms())
    for (const auto& [lv, cv] : v.terms()) out.axpy(ca * cv, act_basis(single(la), lv));
  return out;
}

Vec Module::unit_for(const Vec& v) const {
  std::vector<Vec> units;
  for (const auto& [l, c] : v.terms()) units.push_back(local_unit(l));
  if (units.size() == 1) return units.front();
  return A->local_unit(units);
}

Vec Module::sample(Rng& rng) const {
  const std::size_t n = 1 + rng.below(3);
  Vec v;
  for (std::size_t i = 0; i < n; ++i) v.add_term(sample_label(rng), random_coefficient(A->field(), rng));
  if (v.is_zero()) v.add_term(sample_label(rng), A->field()(1));
  return v;
}

Vec Coaction::right(const Vec& v, const Vec& a) const {
  return extend2(v, a, [&](const Label& lv, const Label& la) { return slice_r(lv, single(la)); });
}

Vec Coaction::left(const Vec& v, const Vec& a) const {
  if (!slice_l) throw std::logic_error(name + ": coaction has no left slice");
  return extend2(v, a, [&](const Label& lv, const Label& la) { return slice_l(lv, single(la)); });
}

Module regular_module(const HopfPtr& A) {
  Module m;
  m.name = "regular";
  m.A = A;
  if (auto b = A->basis()) {
    m.basis.emplace();
    for (Atom a : *b) m.basis->push_back(Label{a});
  }
  m.act_basis = [A](Atom a, const Label& v) { return A->multiply(a, single(v)); };
  m.local_unit = [A](const Label& v) {
    const Vec x(v);
    return A->local_unit(std::span<const Vec>(&x, 1));
  };
  m.sample_label = [A](Rng& rng) { return Label{A->sample_atom(rng)}; };
  return m;
}

Vec counit_unit(const MultiplierHopfAlgebra& A) {
  if (auto u = A.unit()) return *u;
  Rng rng(17);
  for (int i = 0; i < 256; ++i) {
    const Atom a = i == 0 ? 0 : A.sample_atom(rng);
    if (A.counit(a).is_zero()) continue;
    Vec e = Vec::atom(a, A.counit(a).inverse());
    const Vec u = A.local_unit(std::span<const Vec>(&e, 1));
    if (eps(A, u) == Scalar(1)) return u;
  }
  throw std::logic_error(A.name() + ": no element with counit 1 found");
}

Module trivial_module(const HopfPtr& A) {
  Module m;
  m.name = "trivial";
  m.A = A;
  m.basis = std::vector<Label>{Label{0}};
  m.act_basis = [A](Atom a, const Label& v) { return Vec(v, A->counit(a)); };
  const Vec e = counit_unit(*A);
  m.local_unit = [e](const Label&) { return e; };
  m.sample_label = [](Rng&) { return Label{0}; };
  return m;
}

Module tensor_module(const Module& X, const Module& Y) {
  Module m;
  m.name = "(" + X.name + ")(x)(" + Y.name + ")";
  m.A = X.A;
  m.legs = X.legs + Y.legs;
  if (X.basis && Y.basis) {
    m.basis.emplace();
    for (const auto& x : *X.basis)
      for (const auto& y : *Y.basis) m.basis->push_back(concat(x, y));
  }
  const auto A = X.A;
  const std::size_t k = X.legs;
  m.act_basis = [A, X, Y, k](Atom a, const Label& xy) {
    const Label x = xy.head(k), y = xy.tail(k);
    Vec out;
    for (const auto& [l, c] : t1(*A, leg(a), Y.local_unit(y)).terms())
      out.axpy(c, tensor(X.act_basis(l[0], x), Y.act_basis(l[1], y)));
    return out;
  };
  // x (x) y = sum p . (x (x) q . y) over T1^-1(e_x (x) e_y) = sum p (x) q, so a
  // local unit for all p works for x (x) y.
  m.local_unit = [A, X, Y, k](const Label& xy) {
    std::vector<Vec> ps;
    for (const auto& [l, c] : T_inv(*A, 1, tensor(X.local_unit(xy.head(k)), Y.local_unit(xy.tail(k)))).terms())
      ps.push_back(leg(l[0]));
    return A->local_unit(ps);
  };
  m.sample_label = [X, Y](Rng& rng) { return concat(X.sample_label(rng), Y.sample_label(rng)); };
  return m;
}

Vec extend_action_with(const Module& X, const Multiplier& f, const Vec& x, const Vec& e) {
  return X.act(f.left_mul(e), x);
}

Vec extend_action(const Module& X, const Multiplier& f, const Vec& x) {
  return extend_action_with(X, f, x, X.unit_for(x));
}

ExtendedElement embed_rho(const Module& X, const Vec& x) {
  ExtendedElement y;
  y.kind = ExtendedElement::Kind::left;
  y.rho = [X, x](const Vec& a) { return X.act(a, x); };
  return y;
}

ExtendedElement act_extended(const MultiplierHopfAlgebra& A, const Vec& a, const ExtendedElement& y) {
  ExtendedElement z = y;
  auto rho = y.rho;
  z.rho = [&A, a, rho](const Vec& a2) { return rho(mul(A, a2, a)); };
  return z;
}

std::optional<Witness> check_extended(const ExtendedElement& y, const BimoduleOps& ops, const Vec& a, const Vec& a2) {
  Witness ctx = Witness{}.add("a", a).add("a'", a2);
  using K = ExtendedElement::Kind;
  if (y.kind != K::right) {
    if (auto w = expect_equal(y.rho(ops.mul(a, a2)), ops.left(a, y.rho(a2)), Witness(ctx).add("law", "rho(aa') = a.rho(a')")))
      return w;
  }
  if (y.kind != K::left) {
    if (auto w = expect_equal(y.lam(ops.mul(a, a2)), ops.right(y.lam(a), a2), Witness(ctx).add("law", "lam(aa') = lam(a).a'")))
      return w;
  }
  if (y.kind == K::bimodule) {
    if (auto w = expect_equal(ops.left(a, y.lam(a2)), ops.right(y.rho(a), a2), Witness(ctx).add("law", "a.lam(a') = rho(a).a'")))
      return w;
  }
  return std::nullopt;
}

BimoduleOps last_leg_bimodule(const MultiplierHopfAlgebra& A, std::size_t v_legs) {
  BimoduleOps ops;
  ops.mul = [&A](const Vec& a, const Vec& b) { return mul(A, a, b); };
  ops.left = [&A, v_legs](const Vec& a, const Vec& x) {
    return apply_legs(x, v_legs, v_legs + 1, [&](const Label& m) { return mul(A, a, Vec(m)); });
  };
  ops.right = [&A, v_legs](const Vec& x, const Vec& a) {
    return apply_legs(x, v_legs, v_legs + 1, [&](const Label& m) { return mul(A, Vec(m), a); });
  };
  return ops;
}

ExtendedElement coaction_element(const Coaction& c, const Vec& v) {
  ExtendedElement y;
  y.kind = c.has_left() ? ExtendedElement::Kind::bimodule : ExtendedElement::Kind::right;
  y.lam = [c, v](const Vec& a) { return c.right(v, a); };
  if (c.has_left()) y.rho = [c, v](const Vec& a) { return c.left(v, a); };
  return y;
}

namespace {

// Component of x (labels w + one atom) along module label w, as an element of A.
Vec component(const Vec& x, const Label& w) {
  Vec out;
  for (const auto& [l, c] : x.terms())
    if (l.head(w.size()) == w) out.add_term(l.tail(w.size()), c);
  return out;
}

}  // namespace

std::vector<Factorization> factor_coaction(const Module& V, const Coaction& c) {
  if (!V.basis) throw std::invalid_argument(V.name + ": factorization needs a finite carrier");
  const auto& A = *V.A;
  std::vector<Atom> probes;
  if (auto b = A.basis()) {
    probes = *b;
  } else {
    Rng rng(29);
    for (int i = 0; i < 64; ++i) probes.push_back(A.sample_atom(rng));
  }
  std::vector<Factorization> out;
  for (const Label& v : *V.basis) {
    Factorization f{v, {}};
    std::set<Label> seen;
    for (Atom p : probes)
      for (const auto& [l, coeff] : c.slice_r(v, p).terms()) seen.insert(l.head(V.legs));
    for (const Label& w : seen) {
      Multiplier m;
      m.description = "Gamma(" + v.str() + ")_" + w.str();
      m.left = [c, v, w](Atom a) { return component(c.slice_r(v, a), w); };
      if (c.has_left()) m.right = [c, v, w](Atom a) { return component(c.slice_l(v, a), w); };
      f.terms.emplace_back(w, std::move(m));
    }
    out.push_back(std::move(f));
  }
  return out;
}

void module_laws(LawRunner& run, const std::string& prefix, const Module& X) {
  const auto& A = *X.A;
  const std::size_t n = run.samples();
  run.law(prefix + "module-associative", "(ab).v = a.(b.v)", n, [&](Rng& rng, std::size_t) {
    const Vec a = random_element(A, rng), b = random_element(A, rng), v = X.sample(rng);
    return expect_equal(X.act(mul(A, a, b), v), X.act(a, X.act(b, v)), Witness{}.add("a", a).add("b", b).add("v", v));
  });
  run.law(prefix + "module-local-unit", "e_v . v = v", n, [&](Rng& rng, std::size_t) {
    const Vec v = X.sample(rng);
    return expect_equal(X.act(X.unit_for(v), v), v, Witness{}.add("v", v));
  });
}

void comodule_laws(LawRunner& run, const std::string& prefix, const Module& V, const Coaction& c) {
  const auto& A = *V.A;
  const std::size_t k = V.legs;
  const std::size_t n = run.samples();
  const BimoduleOps ops = last_leg_bimodule(A, k);

  run.law(prefix + "coaction-right-linear", "Gamma(v)(1 (x) aa') = (Gamma(v)(1 (x) a))(1 (x) a')", n,
          [&](Rng& rng, std::size_t) {
            const Vec v = V.sample(rng), a = random_element(A, rng), a2 = random_element(A, rng);
            return expect_equal(c.right(v, mul(A, a, a2)), ops.right(c.right(v, a), a2),
                                Witness{}.add("v", v).add("a", a).add("a'", a2));
          });

  // (Gamma (x) i)Gamma(v)(1 (x) x (x) y) against (i (x) Delta)Gamma(v)(1 (x) x (x) y);
  // the right side is sum (i (x) T1)(Gamma(v)(1 (x) p) (x) q) over
  // T1^-1(x (x) y) = sum p (x) q.
  run.law(prefix + "coaction-coassociative", "(Gamma (x) i)Gamma = (i (x) Delta)Gamma, sliced by 1 (x) x (x) y", n,
          [&](Rng& rng, std::size_t) {
            const Vec v = V.sample(rng), x = random_element(A, rng), y = random_element(A, rng);
            Vec lhs;
            for (const auto& [l, cf] : c.right(v, y).terms())
              lhs.axpy(cf, tensor(c.right(Vec(l.head(k)), x), leg(l.back())));
            Vec rhs;
            for (const auto& [l, cf] : T_inv(A, 1, tensor(x, y)).terms()) {
              const Vec g = c.right(v, leg(l[0]));
              rhs.axpy(cf, apply_legs(tensor(g, leg(l[1])), k, k + 2,
                                      [&](const Label& pq) { return t1(A, leg(pq[0]), leg(pq[1])); }));
            }
            return expect_equal(lhs, rhs, Witness{}.add("v", v).add("x", x).add("y", y));
          });
  run.law(prefix + "coaction-counit", "(i (x) eps)(Gamma(v)(1 (x) a)) = eps(a) v", n, [&](Rng& rng, std::size_t) {
    const Vec v = V.sample(rng), a = random_element(A, rng);
    const Vec lhs = apply_legs(c.right(v, a), k, k + 1, [&](const Label& m) { return Vec(Label{}, A.counit(single(m))); });
    return expect_equal(lhs, eps(A, a) * v, Witness{}.add("v", v).add("a", a));
  });
  if (!c.has_left()) return;
  run.law(prefix + "coaction-left-linear", "(1 (x) aa')Gamma(v) = (1 (x) a)((1 (x) a')Gamma(v))", n,
          [&](Rng& rng, std::size_t) {
            const Vec v = V.sample(rng), a = random_element(A, rng), a2 = random_element(A, rng);
            return expect_equal(c.left(v, mul(A, a, a2)), ops.left(a, c.left(v, a2)),
                                Witness{}.add("v", v).add("a", a).add("a'", a2));
          });
  run.law(prefix + "coaction-two-sided", "(1 (x) a)(Gamma(v)(1 (x) a')) = ((1 (x) a)Gamma(v))(1 (x) a')", n,
          [&](Rng& rng, std::size_t) {
            const Vec v = V.sample(rng), a = random_element(A, rng), a2 = random_element(A, rng);
            return check_extended(coaction_element(c, v), ops, a, a2);
          });
}

void extended_module_laws(LawRunner& run, const std::string& prefix, const Module& X) {
  const auto& A = *X.A;
  const std::size_t n = run.samples();
  BimoduleOps ops;
  ops.mul = [&A](const Vec& a, const Vec& b) { return mul(A, a, b); };
  ops.left = [&X](const Vec& a, const Vec& x) { return X.act(a, x); };

  // Odd samples use the identity multiplier, even ones a multiplier from A.
  auto draw_multiplier = [&](Rng& rng, std::size_t i) {
    return i % 2 ? Multiplier::identity() : Multiplier::of(X.A, random_element(A, rng));
  };
  run.law(prefix + "extend-independent", "(f e) . x = (f e') . x for local units e, e' of x", n,
          [&](Rng& rng, std::size_t i) {
            const Vec x = X.sample(rng);
            const Multiplier f = draw_multiplier(rng, i);
            const Vec e = X.unit_for(x);
            const std::vector<Vec> both{e, random_element(A, rng)};
            const Vec e2 = A.local_unit(both);
            return expect_equal(extend_action_with(X, f, x, e), extend_action_with(X, f, x, e2),
                                Witness{}.add("f", f.description).add("x", x).add("e", e).add("e'", e2));
          });
  run.law(prefix + "extend-identity", "1 . x = x", n, [&](Rng& rng, std::size_t) {
    const Vec x = X.sample(rng);
    return expect_equal(extend_action(X, Multiplier::identity(), x), x, Witness{}.add("x", x));
  });
  run.law(prefix + "extend-restricts", "f . x = a . x for f = a in A", n, [&](Rng& rng, std::size_t) {
    const Vec x = X.sample(rng), a = random_element(A, rng);
    return expect_equal(extend_action(X, Multiplier::of(X.A, a), x), X.act(a, x), Witness{}.add("a", a).add("x", x));
  });
  run.law(prefix + "rho-left-kind", "rho_x(a a') = a . rho_x(a')", n, [&](Rng& rng, std::size_t) {
    const Vec x = X.sample(rng), a = random_element(A, rng), a2 = random_element(A, rng);
    auto w = check_extended(embed_rho(X, x), ops, a, a2);
    if (w) w->add("x", x);
    return w;
  });
  run.law(prefix + "rho-module-map", "rho_{a.x}(a') = (a . rho_x)(a') = rho_x(a' a)", n, [&](Rng& rng, std::size_t) {
    const Vec x = X.sample(rng), a = random_element(A, rng), a2 = random_element(A, rng);
    return expect_equal(embed_rho(X, X.act(a, x)).rho(a2), act_extended(A, a, embed_rho(X, x)).rho(a2),
                        Witness{}.add("x", x).add("a", a).add("a'", a2));
  });
  run.law(prefix + "extended-in-carrier", "a . rho_x = rho_{rho_x(a)}", n, [&](Rng& rng, std::size_t) {
    const Vec x = X.sample(rng), a = random_element(A, rng), a2 = random_element(A, rng);
    const ExtendedElement y = embed_rho(X, x);
    return expect_equal(act_extended(A, a, y).rho(a2), embed_rho(X, y.rho(a)).rho(a2),
                        Witness{}.add("x", x).add("a", a).add("a'", a2));
  });
  // Injectivity of x -> rho_x on basis vectors: rho_x(e) = x for a local unit e.
  std::vector<Label> probes;
  if (X.basis) {
    probes = *X.basis;
  } else {
    Rng rng = Rng::stream(run.seed(), prefix + "rho-injective");
    for (std::size_t i = 0; i < n; ++i) probes.push_back(X.sample_label(rng));
  }
  run.law(prefix + "rho-injective", "x != 0 implies rho_x(e_x) = x != 0", probes.size(),
          [&](Rng&, std::size_t i) -> std::optional<Witness> {
            const Vec x(probes[i]);
            const Vec r = embed_rho(X, x).rho(X.unit_for(x));
            if (r.is_zero()) return Witness{}.add("x", x).add("law", "rho_x vanishes at a local unit");
            return expect_equal(r, x, Witness{}.add("x", x));
          });
  if (auto one = A.unit()) {
    run.law(prefix + "extended-unital", "rho_x(1) = x when A is unital", n, [&](Rng& rng, std::size_t) {
      const Vec x = X.sample(rng);
      return expect_equal(embed_rho(X, x).rho(*one), x, Witness{}.add("x", x));
    });
  }
}

void extended_coaction_laws(LawRunner& run, const std::string& prefix, const Module& V, const Coaction& c) {
  const auto& A = *V.A;
  const std::size_t k = V.legs;
  const std::size_t n = run.samples();
  const BimoduleOps ops = last_leg_bimodule(A, k);
  run.law(prefix + "coaction-element", "Gamma(v) satisfies the extended-module laws of its kind", n,
          [&](Rng& rng, std::size_t) {
            const Vec v = V.sample(rng), a = random_element(A, rng), a2 = random_element(A, rng);
            auto w = check_extended(coaction_element(c, v), ops, a, a2);
            if (w) w->add("v", v);
            return w;
          });
  if (c.has_left()) {
    run.law(prefix + "coaction-in-carrier", "(1 (x) a')((1 (x) a)Gamma(v)) = (1 (x) a'a)Gamma(v)", n,
            [&](Rng& rng, std::size_t) {
              const Vec v = V.sample(rng), a = random_element(A, rng), a2 = random_element(A, rng);
              const ExtendedElement y = coaction_element(c, v);
              return expect_equal(ops.left(a2, y.rho(a)), act_extended(A, a, y).rho(a2),
                                  Witness{}.add("v", v).add("a", a).add("a'", a2));
            });
  }
  if (!V.basis) return;
  const auto factors = factor_coaction(V, c);
  const std::size_t dim = V.basis->size();
  run.law(prefix + "coaction-factorization", "Gamma(v) = sum_i v_i (x) m_i, m_i in M(A), rank <= dim V", factors.size(),
          [&](Rng& rng, std::size_t i) -> std::optional<Witness> {
            const Factorization& f = factors[i];
            Witness ctx = Witness{}.add("v", Vec(f.v));
            if (f.terms.size() > dim)
              return ctx.add("law", "rank " + std::to_string(f.terms.size()) + " exceeds dim V " + std::to_string(dim));
            std::vector<Vec> xs, ys;
            for (int j = 0; j < 3; ++j) {
              xs.push_back(random_element(A, rng));
              ys.push_back(random_element(A, rng));
            }
            for (const auto& [w, m] : f.terms) {
              if (!m.right) continue;
              if (!multiplier_compatible(A, m, xs, ys)) return ctx.add("m", m.description).add("law", "(x m) y != x (m y)");
            }
            for (const Vec& a : xs) {
              Vec r, l;
              for (const auto& [w, m] : f.terms) {
                r += tensor(Vec(w), m.left_mul(a));
                if (m.right) l += tensor(Vec(w), m.right_mul(a));
              }
              if (auto wr = expect_equal(c.right(Vec(f.v), a), r, Witness(ctx).add("a", a))) return wr;
              if (c.has_left())
                if (auto wl = expect_equal(c.left(Vec(f.v), a), l, Witness(ctx).add("a", a))) return wl;
            }
            return std::nullopt;
          });
}

}  // namespace mhopf
