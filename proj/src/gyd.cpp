#include "mhopf/gyd.hpp"

#include "mhopf/linalg.hpp"

namespace mhopf {

AutoPair pair_product(const AutoPair& p, const AutoPair& q) {
  const HopfAutomorphism gi = inverse(q.alpha);
  return {compose(p.alpha, q.alpha), compose(q.beta, compose(gi, compose(p.beta, q.alpha)))};
}

AutoPair pair_inverse(const AutoPair& p) {
  const HopfAutomorphism ai = inverse(p.alpha);
  return {ai, compose(p.alpha, compose(inverse(p.beta), ai))};
}

AutoPair make_pair(const HopfPtr& A, const std::string& alpha, const std::string& beta) {
  return {make_automorphism(A, alpha), make_automorphism(A, beta)};
}

std::optional<Witness> same_automorphism(const MultiplierHopfAlgebra& A, const HopfAutomorphism& f,
                                         const HopfAutomorphism& g, Rng& rng) {
  std::vector<Atom> atoms;
  if (auto b = A.basis()) {
    atoms = *b;
  } else {
    for (int i = 0; i < 12; ++i) atoms.push_back(A.sample_atom(rng));
  }
  for (Atom a : atoms) {
    if (auto w = expect_equal(f(leg(a)), g(leg(a)), Witness{}.add("f", f.name).add("g", g.name).add("a", leg(a))))
      return w;
  }
  return std::nullopt;
}

std::optional<Witness> same_pair(const MultiplierHopfAlgebra& A, const AutoPair& p, const AutoPair& q, Rng& rng) {
  if (auto w = same_automorphism(A, p.alpha, q.alpha, rng)) return w->add("leg", "alpha");
  if (auto w = same_automorphism(A, p.beta, q.beta, rng)) return w->add("leg", "beta");
  return std::nullopt;
}

GYDModule as_gyd(const YDModule& V) { return {V.name, V.module, V.coaction, AutoPair{}}; }

Vec gyd_lhs(const GYDModule& V, const Vec& a, const Vec& v, const Vec& a2) {
  return V.coaction.right(V.module.act(a, v), a2);
}

Vec gyd_rhs(const GYDModule& V, const Vec& a, const Vec& v, const Vec& a2) {
  const auto& A = *V.A();
  const auto& [alpha, beta] = V.pair;
  const std::size_t k = V.module.legs;
  const Vec cd = apply_legs(t2(A, S(A, alpha.inverse(a2)), a), 0, 1,
                            [&](const Label& c) { return alpha(S_inv(A, Vec(c))); });
  Vec out;
  for (const auto& [lcd, c0] : cd.terms()) {
    for (const auto& [lwf, c1] : V.coaction.right(v, leg(lcd[0])).terms()) {
      const Label w = lwf.head(k);
      const Vec xy = apply_legs(t1(A, leg(lcd[1]), beta.inverse(leg(lwf.back()))), 1, 2,
                                [&](const Label& y) { return beta(Vec(y)); });
      for (const auto& [lxy, c2] : xy.terms())
        for (const auto& [lw, c3] : V.module.act_basis(lxy[0], w).terms())
          out.add_term(with_leg(lw, lxy[1]), c0 * c1 * c2 * c3);
    }
  }
  return out;
}

void gyd_laws(LawRunner& run, const std::string& prefix, const GYDModule& V) {
  module_laws(run, prefix, V.module);
  comodule_laws(run, prefix, V.module, V.coaction);
  const auto& A = *V.A();
  run.law(prefix + "gyd-compatible",
          "(a.v)_(0) (x) (a.v)_(1) a' = a_(2).v_(0) (x) beta(a_(3)) v_(1) alpha(S^-1(a_(1))) a'", run.samples(),
          [&](Rng& rng, std::size_t) {
            const Vec a = random_element(A, rng), v = V.module.sample(rng), a2 = random_element(A, rng);
            return expect_equal(gyd_lhs(V, a, v, a2), gyd_rhs(V, a, v, a2),
                                Witness{}.add("pair", V.pair.name()).add("a", a).add("v", v).add("a'", a2));
          });
}

GYDModule gyd_tensor(const GYDModule& V, const GYDModule& W) {
  GYDModule out;
  out.name = "(" + V.name + ")(x)(" + W.name + ")";
  out.pair = pair_product(V.pair, W.pair);
  const auto A = V.A();
  const HopfAutomorphism gamma = W.pair.alpha;
  const HopfAutomorphism theta = compose(inverse(gamma), compose(V.pair.beta, gamma));
  const std::size_t kv = V.module.legs, kw = W.module.legs;
  Module& m = out.module;
  m.name = out.name;
  m.A = A;
  m.legs = kv + kw;
  if (V.module.basis && W.module.basis) {
    m.basis.emplace();
    for (const auto& x : *V.module.basis)
      for (const auto& y : *W.module.basis) m.basis->push_back(concat(x, y));
  }
  const Module MV = V.module, MW = W.module;
  // gamma(a_(1)).v (x) theta(a_(2)).w = sum gamma(p).v (x) theta(q).w over T1(a (x) theta^-1(e_w)).
  m.act_basis = [A, MV, MW, gamma, theta, kv](Atom a, const Label& vw) {
    const Label v = vw.head(kv), w = vw.tail(kv);
    Vec out;
    for (const auto& [l, c] : t1(*A, leg(a), theta.inverse(MW.local_unit(w))).terms())
      out.axpy(c, tensor(MV.act(gamma(leg(l[0])), Vec(v)), MW.act(theta(leg(l[1])), Vec(w))));
    return out;
  };
  m.local_unit = [A, MV, MW, gamma, theta, kv](const Label& vw) {
    std::vector<Vec> ps;
    const Vec x = tensor(gamma.inverse(MV.local_unit(vw.head(kv))), theta.inverse(MW.local_unit(vw.tail(kv))));
    for (const auto& [l, c] : T_inv(*A, 1, x).terms()) ps.push_back(leg(l[0]));
    return A->local_unit(ps);
  };
  m.sample_label = [MV, MW](Rng& rng) { return concat(MV.sample_label(rng), MW.sample_label(rng)); };
  const Coaction cv = V.coaction, cw = W.coaction;
  out.coaction.name = out.name;
  out.coaction.slice_r = [cv, cw, kv](const Label& vw, Atom a) {
    Vec res;
    for (const auto& [l1, c1] : cv.slice_r(vw.head(kv), a).terms())
      for (const auto& [l2, c2] : cw.slice_r(vw.tail(kv), l1.back()).terms()) res.add_term(concat(l1.head(kv), l2), c1 * c2);
    return res;
  };
  if (cv.has_left() && cw.has_left()) {
    out.coaction.slice_l = [cv, cw, kv, kw](const Label& vw, Atom b) {
      Vec res;
      for (const auto& [l2, c2] : cw.slice_l(vw.tail(kv), b).terms())
        for (const auto& [l1, c1] : cv.slice_l(vw.head(kv), l2.back()).terms())
          res.add_term(concat(concat(l1.head(kv), l2.head(kw)), Label{l1.back()}), c1 * c2);
      return res;
    };
  }
  return out;
}

GYDModule crossed_functor(const AutoPair& p, const GYDModule& W) {
  const auto& [alpha, beta] = p;
  const auto& [gamma, delta] = W.pair;
  const HopfAutomorphism ai = inverse(alpha), gi = inverse(gamma);
  GYDModule out = W;
  out.name = "^" + p.name() + "(" + W.name + ")";
  out.pair = {compose(alpha, compose(gamma, ai)),
              compose(alpha, compose(inverse(beta), compose(delta, compose(gi, compose(beta, compose(gamma, ai))))))};
  const HopfAutomorphism phi = compose(gi, compose(beta, compose(gamma, ai)));
  const HopfAutomorphism twist = compose(alpha, inverse(beta));
  const Module MW = W.module;
  out.module.name = out.name;
  out.module.act_basis = [MW, phi](Atom a, const Label& w) { return MW.act(phi(leg(a)), Vec(w)); };
  out.module.local_unit = [MW, phi](const Label& w) { return phi.inverse(MW.local_unit(w)); };
  const Coaction c = W.coaction;
  const std::size_t k = W.module.legs;
  out.coaction.name = out.name;
  out.coaction.slice_r = [c, twist, k](const Label& w, Atom a) {
    return apply_legs(c.right(Vec(w), twist.inverse(leg(a))), k, k + 1, [&](const Label& f) { return twist(Vec(f)); });
  };
  if (c.has_left()) {
    out.coaction.slice_l = [c, twist, k](const Label& w, Atom b) {
      return apply_legs(c.left(Vec(w), twist.inverse(leg(b))), k, k + 1, [&](const Label& f) { return twist(Vec(f)); });
    };
  }
  return out;
}

Vec gyd_braiding(const GYDModule& V, const GYDModule& W, const Vec& vw) {
  const HopfAutomorphism& beta = V.pair.beta;
  const std::size_t kv = V.module.legs, kw = W.module.legs;
  Vec out;
  for (const auto& [l, c] : vw.terms()) {
    const Label v = l.head(kv), w = l.tail(kv);
    for (const auto& [lyf, c1] : W.coaction.right(Vec(w), beta(V.module.local_unit(v))).terms())
      for (const auto& [lv, c2] : V.module.act(beta.inverse(leg(lyf.back())), Vec(v)).terms())
        out.add_term(concat(lyf.head(kw), lv), c * c1 * c2);
  }
  return out;
}

std::function<Vec(const Vec&)> gyd_braiding_inverse(const GYDModule& V, const GYDModule& W) {
  const std::size_t kv = V.module.legs, kw = W.module.legs;
  if (W.coaction.has_left()) {
    // beta^-1(S(w_(1))).v (x) w_(0), with S(w_(1)) beta(e_v) = S(S^-1(beta(e_v)) w_(1)).
    return [V, W, kv, kw](const Vec& wv) {
      const auto& A = *V.A();
      const HopfAutomorphism& beta = V.pair.beta;
      Vec out;
      for (const auto& [l, c] : wv.terms()) {
        const Label w = l.head(kw), v = l.tail(kw);
        const Vec yf = W.coaction.left(Vec(w), S_inv(A, beta(V.module.local_unit(v))));
        for (const auto& [lyf, c1] : yf.terms())
          for (const auto& [lv, c2] : V.module.act(beta.inverse(S(A, leg(lyf.back()))), Vec(v)).terms())
            out.add_term(concat(lv, lyf.head(kw)), c * c1 * c2);
      }
      return out;
    };
  }
  if (!(V.module.basis && W.module.basis))
    throw std::invalid_argument("braiding inverse for " + V.name + ", " + W.name + " needs a left slice or finite carriers");
  std::vector<Label> dom, cod;
  for (const auto& v : *V.module.basis)
    for (const auto& w : *W.module.basis) {
      dom.push_back(concat(v, w));
      cod.push_back(concat(w, v));
    }
  auto inv = invert_map(dom, cod, [&](const Label& l) { return gyd_braiding(V, W, Vec(l)); });
  if (!inv) throw std::invalid_argument("braiding " + V.name + ", " + W.name + " is singular");
  auto table = std::make_shared<const std::map<Label, Vec>>(std::move(*inv));
  return [table](const Vec& wv) {
    Vec out;
    for (const auto& [l, c] : wv.terms()) out.axpy(c, table->at(l));
    return out;
  };
}

GYDModule twisted_adjoint(const HopfPtr& A, const AutoPair& p) {
  GYDModule V = as_gyd(adjoint_yd(A));
  V.pair = p;
  V.name = "adjoint" + p.name();
  V.module.name = V.name;
  const auto& [alpha, beta] = p;
  V.module.act_basis = [A, alpha, beta](Atom a, const Label& v) {
    Vec out;
    for (const auto& [l, c] : t1(*A, leg(a), beta.inverse(Vec(v))).terms())
      out.axpy(c, mul(*A, beta(leg(l[1])), alpha(S_inv(*A, leg(l[0])))));
    return out;
  };
  if (auto u = A->unit()) {
    V.module.local_unit = [u = *u](const Label&) { return u; };
  } else if (auto fa = dynamic_cast<const FunctionAlgebra*>(A.get())) {
    // delta_g . delta_n = [g = alpha^-1(n)^-1 beta^-1(n)] delta_n
    const GroupPtr G = fa->group_ptr();
    V.module.local_unit = [G, alpha, beta](const Label& v) {
      const Atom an = single(alpha.inverse(Vec(v)).terms().begin()->first);
      const Atom bn = single(beta.inverse(Vec(v)).terms().begin()->first);
      return leg(G->mul(G->inv(an), bn));
    };
  } else {
    throw std::invalid_argument("twisted adjoint needs local units for " + A->name());
  }
  return V;
}

namespace {

std::vector<std::string> nontrivial_specs(const MultiplierHopfAlgebra& A) {
  std::vector<std::string> out;
  for (auto& s : automorphism_specs(A))
    if (s != "id") out.push_back(s);
  return out;
}

}  // namespace

std::vector<AutoPair> twisted_pairs(const HopfPtr& A) {
  const auto specs = nontrivial_specs(*A);
  if (specs.empty()) return {};
  const std::string s0 = specs[0], s1 = specs.size() > 1 ? specs[1] : specs[0];
  std::vector<AutoPair> pairs{make_pair(A, s0, "id"), make_pair(A, "id", s0), make_pair(A, s0, s1)};
  if (s1 != s0) pairs.push_back(make_pair(A, s1, s0));
  return pairs;
}

std::vector<GYDModule> gyd_fixtures(const HopfPtr& A) {
  std::vector<GYDModule> out;
  for (const auto& V : yd_fixtures(A)) out.push_back(as_gyd(V));
  const auto pairs = twisted_pairs(A);
  if (pairs.empty()) return out;
  const std::size_t first_twisted = out.size();
  for (const auto& p : pairs) out.push_back(twisted_adjoint(A, p));
  if (auto fa = dynamic_cast<const FunctionAlgebra*>(A.get()); fa && fa->group().name() == "Z") {
    // delta_g . e_n = [g = n] e_n, Gamma(e_n)(1 (x) delta_k) = e_{n-2k} (x) delta_k at (neg, id)
    const Field F = A->field();
    YDModule base = graded_yd(A, GradedRep{"shift", std::nullopt, [](Atom n) { return n; },
                                           [F](Atom k, Atom n) { return Vec::atom(n - 2 * k, F(1)); },
                                           [](Rng& rng) { return Atom(rng.range(-6, 6)); }});
    GYDModule V = as_gyd(base);
    V.pair = make_pair(A, "neg", "id");
    V.name = "shift" + V.pair.name();
    out.push_back(V);
  }
  // Crossed images of the first twisted fixture.
  out.push_back(crossed_functor(pairs.back(), GYDModule(out[first_twisted])));
  return out;
}

std::vector<GYDModule> gyd_controls(const HopfPtr& A) {
  std::vector<GYDModule> out;
  for (const auto& V : yd_controls(A)) out.push_back(as_gyd(V));
  const auto specs = nontrivial_specs(*A);
  if (specs.empty()) return out;
  // Correct at (id, s) but checked at a different beta.
  GYDModule V = twisted_adjoint(A, make_pair(A, "id", specs[0]));
  V.pair = make_pair(A, "id", specs.size() > 1 ? specs[1] : "id");
  V.name = "adjoint(id, " + specs[0] + ")@" + V.pair.name();
  out.push_back(V);
  return out;
}

void pair_group_laws(LawRunner& run, const HopfPtr& A) {
  std::vector<HopfAutomorphism> autos;
  for (const auto& s : automorphism_specs(*A)) autos.push_back(make_automorphism(A, s));
  auto draw = [&](Rng& rng) { return AutoPair{autos[rng.below(autos.size())], autos[rng.below(autos.size())]}; };
  const std::size_t n = run.samples();
  run.law("pair-associative", "(p # q) # r = p # (q # r)", n, [&](Rng& rng, std::size_t) {
    const AutoPair p = draw(rng), q = draw(rng), r = draw(rng);
    auto w = same_pair(*A, pair_product(pair_product(p, q), r), pair_product(p, pair_product(q, r)), rng);
    if (w) w->add("p", p.name()).add("q", q.name()).add("r", r.name());
    return w;
  });
  run.law("pair-unit", "(i, i) # p = p = p # (i, i)", n, [&](Rng& rng, std::size_t) -> std::optional<Witness> {
    const AutoPair p = draw(rng);
    if (auto w = same_pair(*A, pair_product(AutoPair{}, p), p, rng)) return w->add("p", p.name());
    if (auto w = same_pair(*A, pair_product(p, AutoPair{}), p, rng)) return w->add("p", p.name());
    return std::nullopt;
  });
  run.law("pair-inverse", "p^-1 # p = (i, i) = p # p^-1", n, [&](Rng& rng, std::size_t) -> std::optional<Witness> {
    const AutoPair p = draw(rng);
    if (auto w = same_pair(*A, pair_product(pair_inverse(p), p), AutoPair{}, rng)) return w->add("p", p.name());
    if (auto w = same_pair(*A, pair_product(p, pair_inverse(p)), AutoPair{}, rng)) return w->add("p", p.name());
    return std::nullopt;
  });
}

namespace {

std::optional<Witness> same_object(const GYDModule& X, const GYDModule& Y, Rng& rng) {
  const auto& A = *X.A();
  if (auto w = same_pair(A, X.pair, Y.pair, rng)) return w->add("object", X.name);
  const Vec a = random_element(A, rng), v = X.module.sample(rng);
  Witness ctx = Witness{}.add("lhs", X.name).add("rhs", Y.name).add("a", a).add("v", v);
  if (auto w = expect_equal(X.module.act(a, v), Y.module.act(a, v), Witness(ctx).add("part", "action"))) return w;
  return expect_equal(X.coaction.right(v, a), Y.coaction.right(v, a), Witness(ctx).add("part", "coaction"));
}

std::optional<Witness> compatible_at(const GYDModule& V, Rng& rng) {
  const auto& A = *V.A();
  const Vec a = random_element(A, rng), v = V.module.sample(rng), a2 = random_element(A, rng);
  return expect_equal(gyd_lhs(V, a, v, a2), gyd_rhs(V, a, v, a2),
                      Witness{}.add("object", V.name).add("pair", V.pair.name()).add("a", a).add("v", v).add("a'", a2));
}

}  // namespace

void t_category_laws(LawRunner& run, const std::vector<GYDModule>& fx) {
  if (fx.empty()) return;
  const auto& A = *fx.front().A();
  const std::size_t n = run.samples();
  auto pick = [&](Rng& rng) -> const GYDModule& { return fx[rng.below(fx.size())]; };

  run.law("t-tensor", "V (x) W is compatible at pair(V) # pair(W)", n, [&](Rng& rng, std::size_t) {
    const GYDModule& V = pick(rng);
    const GYDModule& W = pick(rng);
    return compatible_at(gyd_tensor(V, W), rng);
  });
  run.law("t-crossed", "^p W is compatible at p # pair(W) # p^-1", n, [&](Rng& rng, std::size_t) -> std::optional<Witness> {
    const AutoPair p = pick(rng).pair;
    const GYDModule& W = pick(rng);
    const GYDModule X = crossed_functor(p, W);
    if (auto w = same_pair(A, X.pair, pair_product(p, pair_product(W.pair, pair_inverse(p))), rng)) return w;
    return compatible_at(X, rng);
  });
  run.law("t-crossed-monoidal", "^p(V (x) W) = ^pV (x) ^pW", n, [&](Rng& rng, std::size_t) {
    const AutoPair p = pick(rng).pair;
    const GYDModule& V = pick(rng);
    const GYDModule& W = pick(rng);
    return same_object(crossed_functor(p, gyd_tensor(V, W)), gyd_tensor(crossed_functor(p, V), crossed_functor(p, W)), rng);
  });
  run.law("t-crossed-functorial", "^p(^q W) = ^(p # q) W", n, [&](Rng& rng, std::size_t) {
    const AutoPair p = pick(rng).pair, q = pick(rng).pair;
    const GYDModule& W = pick(rng);
    return same_object(crossed_functor(p, crossed_functor(q, W)), crossed_functor(pair_product(p, q), W), rng);
  });
  run.law("t-braiding-linear", "C_{V,W}(a.(v (x) w)) = a.C_{V,W}(v (x) w)", n, [&](Rng& rng, std::size_t) {
    const GYDModule& V = pick(rng);
    const GYDModule& W = pick(rng);
    const GYDModule VW = gyd_tensor(V, W), WV = gyd_tensor(crossed_functor(V.pair, W), V);
    const Vec a = random_element(A, rng), x = tensor(V.module.sample(rng), W.module.sample(rng));
    return expect_equal(gyd_braiding(V, W, VW.module.act(a, x)), WV.module.act(a, gyd_braiding(V, W, x)),
                        Witness{}.add("V", V.name).add("W", W.name).add("a", a).add("v(x)w", x));
  });
  run.law("t-braiding-invertible", "C^-1 C = i and C C^-1 = i", n, [&](Rng& rng, std::size_t) -> std::optional<Witness> {
    const GYDModule& V = pick(rng);
    const GYDModule& W = pick(rng);
    const auto inv = gyd_braiding_inverse(V, W);
    const Vec v = V.module.sample(rng), w = W.module.sample(rng);
    Witness ctx = Witness{}.add("V", V.name).add("W", W.name).add("v", v).add("w", w);
    if (auto e = expect_equal(inv(gyd_braiding(V, W, tensor(v, w))), tensor(v, w), ctx)) return e;
    return expect_equal(gyd_braiding(V, W, inv(tensor(w, v))), tensor(w, v), ctx);
  });
  run.law("t-braiding-crossing", "C_{^pV,^pW} = C_{V,W}", n, [&](Rng& rng, std::size_t) {
    const AutoPair p = pick(rng).pair;
    const GYDModule& V = pick(rng);
    const GYDModule& W = pick(rng);
    const Vec x = tensor(V.module.sample(rng), W.module.sample(rng));
    return expect_equal(gyd_braiding(crossed_functor(p, V), crossed_functor(p, W), x), gyd_braiding(V, W, x),
                        Witness{}.add("p", p.name()).add("V", V.name).add("W", W.name).add("v(x)w", x));
  });
  run.law("t-hexagon-left", "C_{U(x)V,W} = (C_{U,^V W} (x) i)(i (x) C_{V,W})", n, [&](Rng& rng, std::size_t) {
    const GYDModule& U = pick(rng);
    const GYDModule& V = pick(rng);
    const GYDModule& W = pick(rng);
    const std::size_t ku = U.module.legs, kv = V.module.legs, kw = W.module.legs;
    const Vec x = tensor(U.module.sample(rng), V.module.sample(rng), W.module.sample(rng));
    const Vec lhs = gyd_braiding(gyd_tensor(U, V), W, x);
    const GYDModule VW = crossed_functor(V.pair, W);
    const Vec mid = apply_legs(x, ku, ku + kv + kw, [&](const Label& l) { return gyd_braiding(V, W, Vec(l)); });
    const Vec rhs = apply_legs(mid, 0, ku + kw, [&](const Label& l) { return gyd_braiding(U, VW, Vec(l)); });
    return expect_equal(lhs, rhs, Witness{}.add("U", U.name).add("V", V.name).add("W", W.name).add("x", x));
  });
  run.law("t-hexagon-right", "C_{U,V(x)W} = (i (x) C_{U,W})(C_{U,V} (x) i)", n, [&](Rng& rng, std::size_t) {
    const GYDModule& U = pick(rng);
    const GYDModule& V = pick(rng);
    const GYDModule& W = pick(rng);
    const std::size_t ku = U.module.legs, kv = V.module.legs, kw = W.module.legs;
    const Vec x = tensor(U.module.sample(rng), V.module.sample(rng), W.module.sample(rng));
    const Vec lhs = gyd_braiding(U, gyd_tensor(V, W), x);
    const Vec mid = apply_legs(x, 0, ku + kv, [&](const Label& l) { return gyd_braiding(U, V, Vec(l)); });
    const Vec rhs = apply_legs(mid, kv, kv + ku + kw, [&](const Label& l) { return gyd_braiding(U, W, Vec(l)); });
    return expect_equal(lhs, rhs, Witness{}.add("U", U.name).add("V", V.name).add("W", W.name).add("x", x));
  });
}

}  // namespace mhopf
