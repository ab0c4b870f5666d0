#include "mhopf/mha_laws.hpp"

#include "mhopf/instances.hpp"

namespace mhopf {

namespace {

Vec first_leg_times(const MultiplierHopfAlgebra& A, const Vec& x, Atom p) {
  return apply_legs(x, 0, 1, [&](const Label& l) { return A.multiply(single(l), p); });
}

// m o (f (x) g) on a two-leg tensor
Vec multiply_legs(const MultiplierHopfAlgebra& A, const Vec& x, const std::function<Vec(const Vec&)>& f,
                  const std::function<Vec(const Vec&)>& g) {
  Vec out;
  for (const auto& [l, c] : x.terms()) out.axpy(c, mul(A, f(leg(l[0])), g(leg(l[1]))));
  return out;
}

Vec id(const Vec& v) { return v; }

}  // namespace

void mha_axiom_laws(LawRunner& run, const MultiplierHopfAlgebra& A) {
  const std::size_t n = run.samples();
  const ElementSampler s1(A, 1, n), s2(A, 2, n), s3(A, 3, n);
  auto Sf = [&A](const Vec& v) { return S(A, v); };

  run.law("coassociativity", "(a(x)1(x)1)(Delta(x)id)(Delta(b)(1(x)c)) = (id(x)Delta)((a(x)1)Delta(b))(1(x)1(x)c)",
          s3.count(), [&](Rng& rng, std::size_t i) {
            auto x = s3.draw(rng, i);
            Vec lhs = extend(t1(A, x[1], x[2]), [&](const Label& l) { return tensor(t2(A, x[0], leg(l[0])), leg(l[1])); });
            Vec rhs = extend(t2(A, x[0], x[1]), [&](const Label& l) { return tensor(leg(l[0]), t1(A, leg(l[1]), x[2])); });
            return expect_equal(lhs, rhs, Witness{}.add("a", x[0]).add("b", x[1]).add("c", x[2]));
          });

  run.law("counit-right", "(id(x)eps)(Delta(a)(1(x)b)) = a eps(b)", s2.count(), [&](Rng& rng, std::size_t i) {
    auto x = s2.draw(rng, i);
    Vec lhs = apply_legs(t1(A, x[0], x[1]), 1, 2, [&](const Label& l) { return Vec(Label{}, A.counit(single(l))); });
    return expect_equal(lhs, eps(A, x[1]) * x[0], Witness{}.add("a", x[0]).add("b", x[1]));
  });

  run.law("counit-left", "(eps(x)id)((a(x)1)Delta(b)) = eps(a) b", s2.count(), [&](Rng& rng, std::size_t i) {
    auto x = s2.draw(rng, i);
    Vec lhs = apply_legs(t2(A, x[0], x[1]), 0, 1, [&](const Label& l) { return Vec(Label{}, A.counit(single(l))); });
    return expect_equal(lhs, eps(A, x[0]) * x[1], Witness{}.add("a", x[0]).add("b", x[1]));
  });

  run.law("antipode-left", "m(S(x)id)(Delta(a)(1(x)b)) = eps(a) b", s2.count(), [&](Rng& rng, std::size_t i) {
    auto x = s2.draw(rng, i);
    return expect_equal(multiply_legs(A, t1(A, x[0], x[1]), Sf, id), eps(A, x[0]) * x[1],
                        Witness{}.add("a", x[0]).add("b", x[1]));
  });

  run.law("antipode-right", "m(id(x)S)((b(x)1)Delta(a)) = eps(a) b", s2.count(), [&](Rng& rng, std::size_t i) {
    auto x = s2.draw(rng, i);
    return expect_equal(multiply_legs(A, t2(A, x[1], x[0]), id, Sf), eps(A, x[0]) * x[1],
                        Witness{}.add("a", x[0]).add("b", x[1]));
  });

  run.law("antipode-bijective", "S(S^-1(a)) = S^-1(S(a)) = a", s1.count(), [&](Rng& rng, std::size_t i) {
    auto x = s1.draw(rng, i);
    if (auto w = expect_equal(S(A, S_inv(A, x[0])), x[0], Witness{}.add("a", x[0]).add("side", "S S^-1"))) return w;
    return expect_equal(S_inv(A, S(A, x[0])), x[0], Witness{}.add("a", x[0]).add("side", "S^-1 S"));
  });

  for (int k = 1; k <= 4; ++k) {
    const std::string K = std::to_string(k);
    run.law("T" + K + "-roundtrip", "T" + K + "^-1 T" + K + " = T" + K + " T" + K + "^-1 = id on A(x)A", s2.count(),
            [&, k](Rng& rng, std::size_t i) {
              auto x = s2.draw(rng, i);
              const Vec ab = tensor(x[0], x[1]);
              if (auto w = expect_equal(T_inv(A, k, T(A, k, ab)), ab, Witness{}.add("x", ab).add("order", "inv after"))) return w;
              return expect_equal(T(A, k, T_inv(A, k, ab)), ab, Witness{}.add("x", ab).add("order", "inv before"));
            });
  }

  run.law("script-t-T2", "T o T2 = T4", s2.count(), [&](Rng& rng, std::size_t i) {
    auto x = s2.draw(rng, i);
    const Vec ab = tensor(x[0], x[1]);
    return expect_equal(script_t(A, T(A, 2, ab)), T(A, 4, ab), Witness{}.add("x", ab));
  });

  run.law("associativity", "(ab)c = a(bc)", s3.count(), [&](Rng& rng, std::size_t i) {
    auto x = s3.draw(rng, i);
    return expect_equal(mul(A, mul(A, x[0], x[1]), x[2]), mul(A, x[0], mul(A, x[1], x[2])),
                        Witness{}.add("a", x[0]).add("b", x[1]).add("c", x[2]));
  });

  run.law("non-degenerate", "a != 0 => a e != 0 and e a != 0 for a local unit e", s1.count(), [&](Rng& rng, std::size_t i) -> std::optional<Witness> {
    auto x = s1.draw(rng, i);
    const Vec e = A.local_unit(std::span<const Vec>(x));
    if (mul(A, x[0], e).is_zero() || mul(A, e, x[0]).is_zero()) return Witness{}.add("a", x[0]).add("e", e);
    return std::nullopt;
  });

  run.law("local-unit", "e x = x e = x for e = localUnit(x, y)", s2.count(), [&](Rng& rng, std::size_t i) -> std::optional<Witness> {
    auto x = s2.draw(rng, i);
    const Vec e = A.local_unit(std::span<const Vec>(x));
    for (const auto& v : x)
      if (!(mul(A, e, v) == v) || !(mul(A, v, e) == v)) return Witness{}.add("x", v).add("e", e);
    return std::nullopt;
  });

  run.law("delta-multiplicative", "Delta(ab)(1(x)c) = Delta(a)(Delta(b)(1(x)c))", s3.count(), [&](Rng& rng, std::size_t i) {
    auto x = s3.draw(rng, i);
    Vec rhs = extend(t1(A, x[1], x[2]), [&](const Label& l) { return first_leg_times(A, t1(A, x[0], leg(l[1])), l[0]); });
    return expect_equal(t1(A, mul(A, x[0], x[1]), x[2]), rhs, Witness{}.add("a", x[0]).add("b", x[1]).add("c", x[2]));
  });

  run.law("counit-multiplicative", "eps(ab) = eps(a) eps(b)", s2.count(), [&](Rng& rng, std::size_t i) -> std::optional<Witness> {
    auto x = s2.draw(rng, i);
    if (eps(A, mul(A, x[0], x[1])) == eps(A, x[0]) * eps(A, x[1])) return std::nullopt;
    return Witness{}.add("a", x[0]).add("b", x[1]);
  });

  run.law("counit-antipode", "eps(S(a)) = eps(a)", s1.count(), [&](Rng& rng, std::size_t i) -> std::optional<Witness> {
    auto x = s1.draw(rng, i);
    if (eps(A, S(A, x[0])) == eps(A, x[0])) return std::nullopt;
    return Witness{}.add("a", x[0]).add("eps(S a)", eps(A, S(A, x[0])).str()).add("eps(a)", eps(A, x[0]).str());
  });

  run.law("antipode-antimultiplicative", "S(ab) = S(b) S(a)", s2.count(), [&](Rng& rng, std::size_t i) {
    auto x = s2.draw(rng, i);
    return expect_equal(S(A, mul(A, x[0], x[1])), mul(A, S(A, x[1]), S(A, x[0])), Witness{}.add("a", x[0]).add("b", x[1]));
  });
}

Vec script_t_sweedler(const MultiplierHopfAlgebra& A, const Vec& a, const Vec& b) {
  Vec out;
  for (const auto& [l, c] : coproduct2(A, b).terms())
    out.axpy(c, tensor(leg(l[1]), mul(A, mul(A, a, S(A, leg(l[0]))), leg(l[2]))));
  return out;
}

Vec script_t_prime_sweedler(const MultiplierHopfAlgebra& A, const Vec& a, const Vec& b) {
  Vec out;
  for (const auto& [l, c] : coproduct2(A, b).terms())
    out.axpy(c, tensor(leg(l[0]), mul(A, mul(A, S(A, leg(l[1])), a), leg(l[2]))));
  return out;
}

Vec script_t_inv_sweedler(const MultiplierHopfAlgebra& A, const Vec& a, const Vec& b) {
  Vec out;
  for (const auto& [l, c] : coproduct2(A, a).terms())
    out.axpy(c, tensor(mul(A, mul(A, b, S_inv(A, leg(l[2]))), leg(l[0])), leg(l[1])));
  return out;
}

Vec script_t_prime_inv_sweedler(const MultiplierHopfAlgebra& A, const Vec& a, const Vec& b) {
  Vec out;
  for (const auto& [l, c] : coproduct2(A, a).terms())
    out.axpy(c, tensor(mul(A, mul(A, leg(l[2]), b), S_inv(A, leg(l[1]))), leg(l[0])));
  return out;
}

void braid_laws(LawRunner& run, const MultiplierHopfAlgebra& A) {
  const std::size_t n = run.samples();
  const ElementSampler s2(A, 2, n), s3(A, 3, n, 216);

  struct Op {
    std::string id, name;
    std::function<Vec(const Vec&)> fwd, bwd;
  };
  const std::vector<Op> ops = {
      {"script-t", "T", [&A](const Vec& x) { return script_t(A, x); }, [&A](const Vec& x) { return script_t_inv(A, x); }},
      {"script-t-prime", "T'", [&A](const Vec& x) { return script_t_prime(A, x); },
       [&A](const Vec& x) { return script_t_prime_inv(A, x); }},
  };

  for (const auto& op : ops) {
    run.law("braid-" + op.id, "(" + op.name + "(x)id)(id(x)" + op.name + ")(" + op.name + "(x)id) = (id(x)" + op.name + ")(" +
                                  op.name + "(x)id)(id(x)" + op.name + ")",
            s3.count(), [&](Rng& rng, std::size_t i) {
              auto x = s3.draw(rng, i);
              const Vec abc = tensor(x[0], x[1], x[2]);
              Vec lhs = on_legs(on_legs(on_legs(abc, 0, op.fwd), 1, op.fwd), 0, op.fwd);
              Vec rhs = on_legs(on_legs(on_legs(abc, 1, op.fwd), 0, op.fwd), 1, op.fwd);
              return expect_equal(lhs, rhs, Witness{}.add("a", x[0]).add("b", x[1]).add("c", x[2]));
            });
    run.law(op.id + "-roundtrip", op.name + "^-1 " + op.name + " = " + op.name + " " + op.name + "^-1 = id", s2.count(),
            [&](Rng& rng, std::size_t i) {
              auto x = s2.draw(rng, i);
              const Vec ab = tensor(x[0], x[1]);
              if (auto w = expect_equal(op.bwd(op.fwd(ab)), ab, Witness{}.add("x", ab).add("order", "inv after"))) return w;
              return expect_equal(op.fwd(op.bwd(ab)), ab, Witness{}.add("x", ab).add("order", "inv before"));
            });
  }

  if (A.cocommutative())
    run.law("script-t-flip", "A cocommutative => T = flip", s2.count(), [&](Rng& rng, std::size_t i) {
      auto x = s2.draw(rng, i);
      return expect_equal(script_t(A, tensor(x[0], x[1])), tensor(x[1], x[0]), Witness{}.add("a", x[0]).add("b", x[1]));
    });
  if (A.commutative())
    run.law("script-t-prime-flip", "A commutative => T' = flip", s2.count(), [&](Rng& rng, std::size_t i) {
      auto x = s2.draw(rng, i);
      return expect_equal(script_t_prime(A, tensor(x[0], x[1])), tensor(x[1], x[0]), Witness{}.add("a", x[0]).add("b", x[1]));
    });

  if (A.has_unit() && A.is_finite()) {
    run.law("script-t-sweedler", "T4(S(x)id)T3(id(x)S^-1)flip (a(x)b) = b_(2) (x) a S(b_(1)) b_(3), and likewise for T', T^-1, T'^-1",
            s2.count(), [&](Rng& rng, std::size_t i) -> std::optional<Witness> {
              auto x = s2.draw(rng, i);
              const Vec ab = tensor(x[0], x[1]);
              Witness ctx = Witness{}.add("a", x[0]).add("b", x[1]);
              if (auto w = expect_equal(script_t(A, ab), script_t_sweedler(A, x[0], x[1]), Witness(ctx).add("op", "T"))) return w;
              if (auto w = expect_equal(script_t_prime(A, ab), script_t_prime_sweedler(A, x[0], x[1]), Witness(ctx).add("op", "T'")))
                return w;
              if (auto w = expect_equal(script_t_inv(A, ab), script_t_inv_sweedler(A, x[0], x[1]), Witness(ctx).add("op", "T^-1")))
                return w;
              return expect_equal(script_t_prime_inv(A, ab), script_t_prime_inv_sweedler(A, x[0], x[1]),
                                  Witness(ctx).add("op", "T'^-1"));
            });
  }
}

}  // namespace mhopf
