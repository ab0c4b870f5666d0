#include "mhopf/yd.hpp"

#include "mhopf/instances.hpp"

namespace mhopf {

namespace {

Label cat3(const Label& a, const Label& b, const Label& c) { return concat(concat(a, b), c); }

// sum w (x) f . x over sliceR-like output sum w (x) f (w has k legs).
Vec act_last_leg_on(const Module& X, const Vec& wf, std::size_t k, const Label& x) {
  Vec out;
  for (const auto& [l, c] : wf.terms())
    for (const auto& [lx, cx] : X.act_basis(l.back(), x).terms()) out.add_term(concat(l.head(k), lx), c * cx);
  return out;
}

}  // namespace

Vec yd_lhs(const YDModule& V, const Vec& a, const Vec& v, const Vec& a2) {
  return V.coaction.right(V.module.act(a, v), a2);
}

Vec yd_rhs(const YDModule& V, const Vec& a, const Vec& v, const Vec& a2) {
  const auto& A = *V.A();
  const std::size_t k = V.module.legs;
  const Vec cd = apply_legs(t2(A, S(A, a2), a), 0, 1, [&](const Label& c) { return S_inv(A, Vec(c)); });
  Vec out;
  for (const auto& [lcd, c0] : cd.terms()) {
    for (const auto& [lwf, c1] : V.coaction.right(v, leg(lcd[0])).terms()) {
      const Label w = lwf.head(k);
      for (const auto& [lxy, c2] : A.t1(lcd[1], lwf.back()).terms())
        for (const auto& [lw, c3] : V.module.act_basis(lxy[0], w).terms())
          out.add_term(with_leg(lw, lxy[1]), c0 * c1 * c2 * c3);
    }
  }
  return out;
}

Vec yd_alt_lhs(const YDModule& V, const Vec& a, const Vec& v, const Vec& a2) {
  const auto& A = *V.A();
  Vec out;
  for (const auto& [l, c] : t3(A, a, a2).terms())
    out.axpy(c, V.coaction.right(V.module.act(leg(l[1]), v), leg(l[0])));
  return out;
}

Vec yd_alt_rhs(const YDModule& V, const Vec& a, const Vec& v, const Vec& a2) {
  const auto& A = *V.A();
  const std::size_t k = V.module.legs;
  Vec out;
  for (const auto& [lwf, c1] : V.coaction.right(v, a2).terms())
    for (const auto& [lxy, c2] : t1(A, a, leg(lwf.back())).terms())
      for (const auto& [lw, c3] : V.module.act_basis(lxy[0], lwf.head(k)).terms())
        out.add_term(with_leg(lw, lxy[1]), c1 * c2 * c3);
  return out;
}

void yd_laws(LawRunner& run, const std::string& prefix, const YDModule& V) {
  module_laws(run, prefix, V.module);
  comodule_laws(run, prefix, V.module, V.coaction);
  const auto& A = *V.A();
  const std::size_t n = run.samples();
  run.law(prefix + "yd-compatible", "(a.v)_(0) (x) (a.v)_(1) a' = a_(2).v_(0) (x) a_(3) v_(1) S^-1(a_(1)) a'", n,
          [&](Rng& rng, std::size_t) {
            const Vec a = random_element(A, rng), v = V.module.sample(rng), a2 = random_element(A, rng);
            return expect_equal(yd_lhs(V, a, v, a2), yd_rhs(V, a, v, a2), Witness{}.add("a", a).add("v", v).add("a'", a2));
          });
  run.law(prefix + "yd-compatible-alt", "(a_(2).v)_(0) (x) (a_(2).v)_(1) a_(1) a' = a_(1).v_(0) (x) a_(2) v_(1) a'", n,
          [&](Rng& rng, std::size_t) {
            const Vec a = random_element(A, rng), v = V.module.sample(rng), a2 = random_element(A, rng);
            return expect_equal(yd_alt_lhs(V, a, v, a2), yd_alt_rhs(V, a, v, a2),
                                Witness{}.add("a", a).add("v", v).add("a'", a2));
          });
}

YDModule yd_tensor(const YDModule& V, const YDModule& W) {
  YDModule out;
  out.name = "(" + V.name + ")(x)(" + W.name + ")";
  out.module = tensor_module(V.module, W.module);
  out.module.name = out.name;
  const std::size_t kv = V.module.legs, kw = W.module.legs;
  out.coaction.name = out.name;
  out.coaction.slice_r = [V, W, kv](const Label& vw, Atom a) {
    Vec res;
    for (const auto& [l1, c1] : V.coaction.slice_r(vw.head(kv), a).terms())
      for (const auto& [l2, c2] : W.coaction.slice_r(vw.tail(kv), l1.back()).terms())
        res.add_term(concat(l1.head(kv), l2), c1 * c2);
    return res;
  };
  out.coaction.slice_l = [V, W, kv, kw](const Label& vw, Atom b) {
    Vec res;
    for (const auto& [l2, c2] : W.coaction.slice_l(vw.tail(kv), b).terms())
      for (const auto& [l1, c1] : V.coaction.slice_l(vw.head(kv), l2.back()).terms())
        res.add_term(cat3(l1.head(kv), l2.head(kw), Label{l1.back()}), c1 * c2);
    return res;
  };
  return out;
}

Vec braiding_c(const Module& X, const YDModule& V, const Vec& xv) {
  const std::size_t kx = X.legs;
  Vec out;
  for (const auto& [l, c] : xv.terms()) {
    const Label x = l.head(kx), v = l.tail(kx);
    out.axpy(c, act_last_leg_on(X, V.coaction.right(Vec(v), X.local_unit(x)), V.module.legs, x));
  }
  return out;
}

Vec braiding_c_inv(const Module& X, const YDModule& V, const Vec& vx) {
  const auto& A = *V.A();
  const std::size_t kv = V.module.legs;
  Vec out;
  for (const auto& [l, c] : vx.terms()) {
    const Label v = l.head(kv), x = l.tail(kv);
    const Vec wf = V.coaction.left(Vec(v), S_inv(A, X.local_unit(x)));
    for (const auto& [lwf, c1] : wf.terms())
      for (const auto& [ls, c2] : A.antipode(lwf.back()).terms())
        for (const auto& [lx, c3] : X.act_basis(single(ls), x).terms())
          out.add_term(concat(lx, lwf.head(kv)), c * c1 * c2 * c3);
  }
  return out;
}

Vec HalfBraiding::component(const Vec& a_v) const {
  Vec out;
  for (const auto& [l, c] : a_v.terms()) out.axpy(c, c_A(l[0], l.tail(1)));
  return out;
}

Vec HalfBraiding::inverse_component(const Vec& v_a) const {
  Vec out;
  for (const auto& [l, c] : v_a.terms()) out.axpy(c, c_A_inv(l.head(l.size() - 1), l.back()));
  return out;
}

Vec half_braiding_at(const HalfBraiding& H, const Module& X, const Vec& xv) {
  const std::size_t kx = X.legs;
  Vec out;
  for (const auto& [l, c] : xv.terms()) {
    const Label x = l.head(kx), v = l.tail(kx);
    out.axpy(c, act_last_leg_on(X, H.component(tensor(X.local_unit(x), Vec(v))), H.V.legs, x));
  }
  return out;
}

void half_braiding_laws(LawRunner& run, const std::string& prefix, const HalfBraiding& H) {
  const auto& A = *H.V.A;
  const std::size_t n = run.samples();
  const std::size_t k = H.V.legs;
  const Module reg = regular_module(H.V.A);
  const Module AV = tensor_module(reg, H.V), VA = tensor_module(H.V, reg);
  auto on_last = [&](const Vec& x, const Vec& a) {
    return apply_legs(x, k, k + 1, [&](const Label& m) { return mul(A, Vec(m), a); });
  };
  run.law(prefix + "hb-right-linear", "C_{A,V}(ba (x) v) = C_{A,V}(b (x) v)(1 (x) a)", n, [&](Rng& rng, std::size_t) {
    const Vec a = random_element(A, rng), b = random_element(A, rng), v = H.V.sample(rng);
    return expect_equal(H.component(tensor(mul(A, b, a), v)), on_last(H.component(tensor(b, v)), a),
                        Witness{}.add("a", a).add("b", b).add("v", v));
  });
  run.law(prefix + "hb-left-linear", "a.C_{A,V}(x (x) v) = C_{A,V}(a.(x (x) v))", n, [&](Rng& rng, std::size_t) {
    const Vec a = random_element(A, rng), x = random_element(A, rng), v = H.V.sample(rng);
    const Vec xv = tensor(x, v);
    return expect_equal(VA.act(a, H.component(xv)), H.component(AV.act(a, xv)),
                        Witness{}.add("a", a).add("x", x).add("v", v));
  });
  run.law(prefix + "hb-composition", "C_{A(x)A,V} = (C_{A,V} (x) i)(i (x) C_{A,V})", n, [&](Rng& rng, std::size_t) {
    const Vec x = random_element(A, rng), y = random_element(A, rng), v = H.V.sample(rng);
    const Module AA = tensor_module(reg, reg);
    const Vec lhs = half_braiding_at(H, AA, tensor(x, y, v));
    const Vec inner = apply_legs(tensor(x, y, v), 1, 2 + k, [&](const Label& yv) { return H.component(Vec(yv)); });
    const Vec rhs = apply_legs(inner, 0, 1 + k, [&](const Label& xw) { return H.component(Vec(xw)); });
    return expect_equal(lhs, rhs, Witness{}.add("x", x).add("y", y).add("v", v));
  });
  run.law(prefix + "hb-derived-component", "C_{A,V}(x (x) v) = (i (x) xbar)C_{A,V}(e (x) v)", n,
          [&](Rng& rng, std::size_t) {
            const Vec x = random_element(A, rng), v = H.V.sample(rng);
            return expect_equal(half_braiding_at(H, reg, tensor(x, v)), H.component(tensor(x, v)),
                                Witness{}.add("x", x).add("v", v));
          });
  if (!H.c_A_inv) return;
  run.law(prefix + "hb-invertible", "C^-1_{A,V} C_{A,V} = i and C_{A,V} C^-1_{A,V} = i", n, [&](Rng& rng, std::size_t) {
    const Vec x = random_element(A, rng), v = H.V.sample(rng);
    if (auto w = expect_equal(H.inverse_component(H.component(tensor(x, v))), tensor(x, v), Witness{}.add("x", x).add("v", v)))
      return w;
    return expect_equal(H.component(H.inverse_component(tensor(v, x))), tensor(v, x), Witness{}.add("v", v).add("x", x));
  });
}

HalfBraiding functor_g(const YDModule& V) {
  HalfBraiding H;
  H.name = "G(" + V.name + ")";
  H.V = V.module;
  const auto A = V.A();
  const Coaction c = V.coaction;
  H.c_A = [c](Atom a, const Label& v) { return c.slice_r(v, a); };
  // C^-1(v (x) a) = S(v_(1)) a (x) v_(0), with S(v_(1)) a = S(S^-1(a) v_(1)).
  H.c_A_inv = [A, c](const Label& v, Atom a) {
    const Vec wf = c.left(Vec(v), S_inv(*A, leg(a)));
    return flip(apply_legs(wf, v.size(), v.size() + 1, [&](const Label& f) { return S(*A, Vec(f)); }), v.size());
  };
  return H;
}

YDModule functor_f(const HalfBraiding& H) {
  const auto A = H.V.A;
  if (!(A->has_unit() || A->commutative() || H.V.finite()))
    throw HypothesisError("F(" + H.name + "): " + A->name() +
                          " is neither unital nor commutative and the carrier is infinite-dimensional");
  if (!H.c_A_inv) throw HypothesisError("F(" + H.name + "): inverse component required");
  YDModule V;
  V.name = "F(" + H.name + ")";
  V.module = H.V;
  V.coaction.name = V.name;
  auto cA = H.c_A;
  auto cAi = H.c_A_inv;
  V.coaction.slice_r = [cA](const Label& v, Atom a) { return cA(a, v); };
  // (1 (x) b)Gamma(v) = (i (x) S^-1) tau C^-1_{A,V}(v (x) S(b)).
  V.coaction.slice_l = [A, cAi](const Label& v, Atom b) {
    Vec inv;
    for (const auto& [l, c] : A->antipode(b).terms()) inv.axpy(c, cAi(v, single(l)));
    const Vec swapped = flip(inv, 1);
    return apply_legs(swapped, v.size(), v.size() + 1, [&](const Label& f) { return S_inv(*A, Vec(f)); });
  };
  return V;
}

void braiding_laws(LawRunner& run, const std::string& prefix, const Module& X, const YDModule& V, const YDModule* W) {
  const auto& A = *V.A();
  const std::size_t n = run.samples();
  const std::size_t kx = X.legs, kv = V.module.legs;
  run.law(prefix + "braid-roundtrip", "C^-1_{X,V} C_{X,V} = i and C_{X,V} C^-1_{X,V} = i", n,
          [&](Rng& rng, std::size_t) -> std::optional<Witness> {
            const Vec x = X.sample(rng), v = V.module.sample(rng);
            if (auto w = expect_equal(braiding_c_inv(X, V, braiding_c(X, V, tensor(x, v))), tensor(x, v),
                                      Witness{}.add("x", x).add("v", v)))
              return w;
            return expect_equal(braiding_c(X, V, braiding_c_inv(X, V, tensor(v, x))), tensor(v, x),
                                Witness{}.add("v", v).add("x", x));
          });
  run.law(prefix + "braid-left-linear", "C_{X,V}(a.(x (x) v)) = a.C_{X,V}(x (x) v)", n, [&](Rng& rng, std::size_t) {
    const Vec a = random_element(A, rng), x = X.sample(rng), v = V.module.sample(rng);
    const Vec xv = tensor(x, v);
    return expect_equal(braiding_c(X, V, tensor_module(X, V.module).act(a, xv)),
                        tensor_module(V.module, X).act(a, braiding_c(X, V, xv)),
                        Witness{}.add("a", a).add("x", x).add("v", v));
  });
  const Module reg = regular_module(V.A());
  run.law(prefix + "braid-natural", "(i (x) f)C_{A,V} = C_{A,V}(f (x) i) for f(x) = xb", n, [&](Rng& rng, std::size_t) {
    const Vec b = random_element(A, rng), x = random_element(A, rng), v = V.module.sample(rng);
    auto f = [&](const Label& m) { return mul(A, Vec(m), b); };
    const Vec lhs = apply_legs(braiding_c(reg, V, tensor(x, v)), kv, kv + 1, f);
    const Vec rhs = braiding_c(reg, V, apply_legs(tensor(x, v), 0, 1, f));
    return expect_equal(lhs, rhs, Witness{}.add("b", b).add("x", x).add("v", v));
  });
  const Module XX = tensor_module(X, X);
  run.law(prefix + "hexagon-left", "C_{X(x)Y,V} = (C_{X,V} (x) i)(i (x) C_{Y,V})", n, [&](Rng& rng, std::size_t) {
    const Vec x = X.sample(rng), y = X.sample(rng), v = V.module.sample(rng);
    const Vec lhs = braiding_c(XX, V, tensor(x, y, v));
    const Vec inner = apply_legs(tensor(x, y, v), kx, 2 * kx + kv, [&](const Label& yv) { return braiding_c(X, V, Vec(yv)); });
    const Vec rhs = apply_legs(inner, 0, kx + kv, [&](const Label& xw) { return braiding_c(X, V, Vec(xw)); });
    return expect_equal(lhs, rhs, Witness{}.add("x", x).add("y", y).add("v", v));
  });
  if (!W) return;
  const YDModule VW = yd_tensor(V, *W);
  const std::size_t kw = W->module.legs;
  run.law(prefix + "hexagon-right", "C_{X,V(x)W} = (i (x) C_{X,W})(C_{X,V} (x) i)", n, [&](Rng& rng, std::size_t) {
    const Vec x = X.sample(rng), v = V.module.sample(rng), w = W->module.sample(rng);
    const Vec lhs = braiding_c(X, VW, tensor(x, v, w));
    const Vec inner = apply_legs(tensor(x, v, w), 0, kx + kv, [&](const Label& xv) { return braiding_c(X, V, Vec(xv)); });
    const Vec rhs = apply_legs(inner, kv, kv + kx + kw, [&](const Label& xw) { return braiding_c(X, *W, Vec(xw)); });
    return expect_equal(lhs, rhs, Witness{}.add("x", x).add("v", v).add("w", w));
  });
}

void equivalence_laws(LawRunner& run, const std::string& prefix, const YDModule& V) {
  const auto& A = *V.A();
  const std::size_t n = run.samples();
  const HalfBraiding G = functor_g(V);
  const YDModule FG = functor_f(G);
  const HalfBraiding GFG = functor_g(FG);
  run.law(prefix + "FG-action", "F(G(V)) has the action of V", n, [&](Rng& rng, std::size_t) {
    const Vec a = random_element(A, rng), v = V.module.sample(rng);
    return expect_equal(FG.module.act(a, v), V.module.act(a, v), Witness{}.add("a", a).add("v", v));
  });
  run.law(prefix + "FG-coaction", "F(G(V)) has the slices of V", n, [&](Rng& rng, std::size_t) -> std::optional<Witness> {
    const Vec a = random_element(A, rng), v = V.module.sample(rng);
    if (auto w = expect_equal(FG.coaction.right(v, a), V.coaction.right(v, a), Witness{}.add("slice", "right").add("a", a).add("v", v)))
      return w;
    return expect_equal(FG.coaction.left(v, a), V.coaction.left(v, a), Witness{}.add("slice", "left").add("a", a).add("v", v));
  });
  run.law(prefix + "GFG-component", "G(F(G(V))) = G(V) on A and its inverse", n,
          [&](Rng& rng, std::size_t) -> std::optional<Witness> {
            const Vec a = random_element(A, rng), v = V.module.sample(rng);
            if (auto w = expect_equal(GFG.component(tensor(a, v)), G.component(tensor(a, v)), Witness{}.add("a", a).add("v", v)))
              return w;
            return expect_equal(GFG.inverse_component(tensor(v, a)), G.inverse_component(tensor(v, a)),
                                Witness{}.add("v", v).add("a", a));
          });
}

void equivalence_laws(LawRunner& run, const std::string& prefix, const HalfBraiding& H) {
  const auto& A = *H.V.A;
  const std::size_t n = run.samples();
  const YDModule F = functor_f(H);
  const HalfBraiding GF = functor_g(F);
  run.law(prefix + "GF-component", "G(F(H)) = H on A and its inverse", n, [&](Rng& rng, std::size_t) -> std::optional<Witness> {
    const Vec a = random_element(A, rng), v = H.V.sample(rng);
    if (auto w = expect_equal(GF.component(tensor(a, v)), H.component(tensor(a, v)), Witness{}.add("a", a).add("v", v)))
      return w;
    return expect_equal(GF.inverse_component(tensor(v, a)), H.inverse_component(tensor(v, a)),
                        Witness{}.add("v", v).add("a", a));
  });
}

void morphism_transport_law(LawRunner& run, const std::string& id, const Module& X, const YDModule& V,
                            const YDModule& W, const std::function<Vec(const Vec&)>& f) {
  const std::size_t kx = X.legs, kv = V.module.legs;
  run.law(id, "(f (x) i)C_{X,V} = C_{X,W}(i (x) f)", run.samples(), [&, f](Rng& rng, std::size_t) {
    const Vec x = X.sample(rng), v = V.module.sample(rng);
    auto fl = [&](const Label& l) { return f(Vec(l)); };
    const Vec lhs = apply_legs(braiding_c(X, V, tensor(x, v)), 0, kv, fl);
    const Vec rhs = braiding_c(X, W, apply_legs(tensor(x, v), kx, kx + kv, fl));
    return expect_equal(lhs, rhs, Witness{}.add("x", x).add("v", v));
  });
}

YDModule adjoint_yd(const HopfPtr& A) {
  YDModule V;
  V.name = "adjoint";
  V.module = regular_module(A);
  V.module.name = "adjoint";
  V.module.act_basis = [A](Atom a, const Label& v) {
    Vec out;
    for (const auto& [l, c] : A->t1(a, single(v)).terms()) out.axpy(c, mul(*A, leg(l[1]), S_inv(*A, leg(l[0]))));
    return out;
  };
  const Vec e0 = counit_unit(*A);
  V.module.local_unit = [A, e0](const Label& v) {
    if (auto u = A->unit()) return *u;
    const Vec x(v);
    const std::vector<Vec> xs{e0, x, S(*A, x), S_inv(*A, x)};
    return A->local_unit(xs);
  };
  V.coaction.name = "Delta";
  V.coaction.slice_r = [A](const Label& v, Atom a) { return A->t1(single(v), a); };
  V.coaction.slice_l = [A](const Label& v, Atom b) { return A->t4(b, single(v)); };
  return V;
}

YDModule trivial_yd(const HopfPtr& A) {
  YDModule V;
  V.name = "trivial";
  V.module = trivial_module(A);
  V.coaction.name = "v (x) 1";
  V.coaction.slice_r = [](const Label& v, Atom a) { return Vec(with_leg(v, a)); };
  V.coaction.slice_l = [](const Label& v, Atom b) { return Vec(with_leg(v, b)); };
  return V;
}

YDModule graded_yd(const HopfPtr& A, const GradedRep& rep) {
  YDModule V;
  V.name = rep.name;
  Module& m = V.module;
  m.name = rep.name;
  m.A = A;
  if (rep.basis) {
    m.basis.emplace();
    for (Atom n : *rep.basis) m.basis->push_back(Label{n});
  }
  const Field F = A->field();
  m.act_basis = [rep, F](Atom g, const Label& v) { return g == rep.degree(single(v)) ? Vec(v, F(1)) : Vec{}; };
  m.local_unit = [rep, F](const Label& v) { return Vec::atom(rep.degree(single(v)), F(1)); };
  m.sample_label = [rep](Rng& rng) { return Label{rep.sample(rng)}; };
  V.coaction.name = rep.name;
  auto slice = [rep](const Label& v, Atom k) { return tensor(rep.pi(k, single(v)), leg(k)); };
  V.coaction.slice_r = slice;
  V.coaction.slice_l = slice;
  return V;
}

YDModule character_yd(const HopfPtr& A, std::string name, std::function<Scalar(Atom)> chi, Vec z) {
  YDModule V;
  V.name = name;
  V.module = trivial_module(A);
  V.module.name = name;
  V.module.act_basis = [chi](Atom a, const Label& v) { return Vec(v, chi(a)); };
  V.coaction.name = name;
  V.coaction.slice_r = [A, z](const Label& v, Atom a) {
    return extend(mul(*A, z, leg(a)), [&](const Label& m) { return Vec(concat(v, m)); });
  };
  V.coaction.slice_l = [A, z](const Label& v, Atom b) {
    return extend(mul(*A, leg(b), z), [&](const Label& m) { return Vec(concat(v, m)); });
  };
  return V;
}

namespace {

int s3_sign(Atom g) {
  static constexpr int sign[6] = {1, -1, -1, 1, 1, -1};
  return sign[g];
}

}  // namespace

std::vector<YDModule> yd_fixtures(const HopfPtr& A) {
  std::vector<YDModule> out{trivial_yd(A), adjoint_yd(A)};
  const Field F = A->field();
  if (auto fa = dynamic_cast<const FunctionAlgebra*>(A.get())) {
    const GroupPtr G = fa->group_ptr();
    if (G->name() == "Z") {
      out.push_back(graded_yd(A, GradedRep{"translation", std::nullopt, [](Atom) { return Atom{0}; },
                                           [F](Atom k, Atom n) { return Vec::atom(n + k, F(1)); },
                                           [G](Rng& rng) { return G->sample(rng); }}));
      out.push_back(graded_yd(A, GradedRep{"sign", std::nullopt, [](Atom n) { return n; },
                                           [F](Atom k, Atom n) { return Vec::atom(n, F(k % 2 == 0 ? 1 : -1)); },
                                           [G](Rng& rng) { return G->sample(rng); }}));
    } else {
      out.push_back(graded_yd(A, GradedRep{"conjugation", G->elements(), [](Atom h) { return h; },
                                           [G, F](Atom k, Atom h) { return Vec::atom(G->mul(G->mul(k, h), G->inv(k)), F(1)); },
                                           [G](Rng& rng) { return G->sample(rng); }}));
    }
  } else if (auto ga = dynamic_cast<const GroupAlgebra*>(A.get())) {
    const GroupPtr G = ga->group_ptr();
    if (G->name() == "S3") {
      out.push_back(character_yd(A, "sign", [F](Atom g) { return F(s3_sign(g)); }, leg(G->identity())));
    } else if (G->finite() && G->elements()->size() % 2 == 0) {
      // Z_n with n even: g^i acts by (-1)^i, graded at the central g.
      out.push_back(character_yd(A, "sign", [F](Atom g) { return F(g % 2 == 0 ? 1 : -1); }, leg(1)));
    }
  } else if (A->name() == "H4") {
    out.push_back(character_yd(A, "sign", [F](Atom a) { return a == 0 ? F(1) : a == 1 ? F(-1) : F(0); }, leg(1)));
  }
  return out;
}

std::vector<YDModule> yd_controls(const HopfPtr& A) {
  std::vector<YDModule> out;
  if (dynamic_cast<const GroupAlgebra*>(A.get())) {
    YDModule V;
    V.name = "regular-grouplike";
    V.module = regular_module(A);
    V.coaction.name = "h (x) h";
    V.coaction.slice_r = [A](const Label& h, Atom a) { return tensor(Vec(h), A->multiply(single(h), a)); };
    V.coaction.slice_l = [A](const Label& h, Atom b) { return tensor(Vec(h), A->multiply(b, single(h))); };
    out.push_back(V);
  }
  // v (x) aa is a valid coaction when the basis is idempotent; use v (x) S(a) there.
  Rng rng(3);
  const Atom probe = A->sample_atom(rng);
  const bool idempotent = A->multiply(probe, probe) == leg(probe);
  YDModule W = adjoint_yd(A);
  W.name = idempotent ? "antipode-coaction" : "squared-coaction";
  W.coaction.name = idempotent ? "v (x) S(a)" : "v (x) aa";
  if (idempotent)
    W.coaction.slice_r = [A](const Label& v, Atom a) { return tensor(Vec(v), A->antipode(a)); };
  else
    W.coaction.slice_r = [A](const Label& v, Atom a) { return tensor(Vec(v), A->multiply(a, a)); };
  W.coaction.slice_l = W.coaction.slice_r;
  out.push_back(W);
  return out;
}

std::vector<HalfBraiding> half_braiding_fixtures(const HopfPtr& A) {
  std::vector<HalfBraiding> out;
  const Field F = A->field();
  if (auto fa = dynamic_cast<const FunctionAlgebra*>(A.get()); fa && fa->group().name() == "Z") {
    // c_A(delta_a (x) e_n) = e_{n+a} (x) delta_a, acting on V with delta_g . e_n = [g = 0] e_n.
    HalfBraiding H;
    H.name = "translation";
    H.V = graded_yd(A, GradedRep{"translation", std::nullopt, [](Atom) { return Atom{0}; },
                                 [F](Atom k, Atom n) { return Vec::atom(n + k, F(1)); },
                                 [](Rng& rng) { return Atom(rng.range(-6, 6)); }}).module;
    H.c_A = [F](Atom a, const Label& v) { return Vec(Label{single(v) + a, a}, F(1)); };
    H.c_A_inv = [F](const Label& v, Atom a) { return Vec(Label{a, single(v) - a}, F(1)); };
    out.push_back(H);
  } else if (auto ga = dynamic_cast<const GroupAlgebra*>(A.get())) {
    // Conjugation module: c_A(a (x) h) = h (x) ha, inverse h^-1 a (x) h.
    const GroupPtr G = ga->group_ptr();
    HalfBraiding H;
    H.name = "conjugation";
    H.V = adjoint_yd(A).module;
    H.c_A = [G, F](Atom a, const Label& h) { return Vec(Label{single(h), G->mul(single(h), a)}, F(1)); };
    H.c_A_inv = [G, F](const Label& h, Atom a) { return Vec(Label{G->mul(G->inv(single(h)), a), single(h)}, F(1)); };
    out.push_back(H);
  } else if (A->name() == "H4") {
    // chi(g) = -1 with c_A(a (x) 1) = 1 (x) ga and inverse S(g)a (x) 1 = ga (x) 1.
    HalfBraiding H;
    H.name = "sign";
    H.V = yd_fixtures(A).back().module;
    H.c_A = [A](Atom a, const Label& v) { return tensor(Vec(v), A->multiply(1, a)); };
    H.c_A_inv = [A](const Label& v, Atom a) { return tensor(A->multiply(1, a), Vec(v)); };
    out.push_back(H);
  }
  return out;
}

}  // namespace mhopf
