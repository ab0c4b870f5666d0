#include "mhopf/yd_algebras.hpp"

#include <algorithm>

#include "mhopf/linalg.hpp"

namespace mhopf {

TableAlgebra::TableAlgebra(std::string name, Field field, std::vector<std::string> names, std::vector<std::vector<Vec>> mult,
                           std::optional<Vec> unit)
    : name_(std::move(name)), field_(field), names_(std::move(names)), mult_(std::move(mult)), unit_(std::move(unit)) {
  if (mult_.size() != names_.size()) throw std::invalid_argument(name_ + ": table and names differ in size");
}

Vec TableAlgebra::local_unit(std::span<const Vec> xs) const {
  if (unit_) return *unit_;
  return Algebra::local_unit(xs);
}

std::optional<std::vector<Atom>> TableAlgebra::basis() const {
  std::vector<Atom> b(names_.size());
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = static_cast<Atom>(i);
  return b;
}

AlgebraPtr dual_numbers(const Field& F) {
  std::vector<std::vector<Vec>> m{{leg(0), leg(1)}, {leg(1), Vec{}}};
  for (auto& row : m)
    for (auto& v : row) v *= F(1);
  return std::make_shared<TableAlgebra>("K[t]/(t^2)", F, std::vector<std::string>{"1", "t"}, std::move(m), Vec::atom(0, F(1)));
}

AlgebraPtr ground_field(const Field& F) {
  return std::make_shared<TableAlgebra>("K", F, std::vector<std::string>{"1"}, std::vector<std::vector<Vec>>{{Vec::atom(0, F(1))}},
                                        Vec::atom(0, F(1)));
}

namespace {

Module carrier_of(const AlgebraPtr& R, const HopfPtr& A, std::string name) {
  Module m;
  m.name = std::move(name);
  m.A = A;
  if (auto b = R->basis()) {
    m.basis.emplace();
    for (Atom a : *b) m.basis->push_back(Label{a});
  }
  m.act_basis = [A](Atom a, const Label& v) { return Vec(v, A->counit(a)); };
  const Vec e = counit_unit(*A);
  m.local_unit = [e](const Label&) { return e; };
  m.sample_label = [R](Rng& rng) { return Label{R->sample_atom(rng)}; };
  return m;
}

Vec sample_r(const Algebra& R, Rng& rng) { return random_element(R, rng, 3); }

// x_(0) y_(0) (x) x_(1) y_(1) a
Vec coaction_product(const Algebra& R, const Coaction& c, const Vec& x, const Vec& y, const Vec& a) {
  Vec out;
  for (const auto& [ly, cy] : c.right(y, a).terms())
    for (const auto& [lx, cx] : c.right(x, leg(ly.back())).terms())
      out.axpy(cx * cy, tensor(R.multiply(lx[0], ly[0]), leg(lx.back())));
  return out;
}

void comodule_algebra_only(LawRunner& run, const std::string& prefix, const AlgebraPtr& R, const HopfPtr& A,
                           const Coaction& c) {
  run.law(prefix + "comodule-algebra-multiplicative", "Gamma(x y)(1 (x) a) = x_(0) y_(0) (x) x_(1) y_(1) a", run.samples(),
          [&](Rng& rng, std::size_t) {
            const Vec x = sample_r(*R, rng), y = sample_r(*R, rng), a = random_element(*A, rng);
            return expect_equal(c.right(mul(*R, x, y), a), coaction_product(*R, c, x, y, a),
                                Witness{}.add("x", x).add("y", y).add("a", a));
          });
  if (auto one = R->unit())
    run.law(prefix + "comodule-algebra-unit", "Gamma(1)(1 (x) a) = 1 (x) a", run.samples(), [&, one](Rng& rng, std::size_t) {
      const Vec a = random_element(*A, rng);
      return expect_equal(c.right(*one, a), tensor(*one, a), Witness{}.add("a", a));
    });
}

}  // namespace

void module_algebra_laws(LawRunner& run, const std::string& prefix, const ModuleAlgebra& M) {
  const auto& A = *M.action.A;
  const auto& R = *M.R;
  const Module& act = M.action;
  const std::size_t n = run.samples();
  run.law(prefix + "module-algebra-multiplicative", "a.(x x') = (a_(1).x)(a_(2).x')", n, [&](Rng& rng, std::size_t) {
    const Vec a = random_element(A, rng), x = sample_r(R, rng), x2 = sample_r(R, rng);
    Vec rhs;
    for (const auto& [l, c] : t1(A, a, act.unit_for(x2)).terms())
      rhs.axpy(c, mul(R, act.act(leg(l[0]), x), act.act(leg(l[1]), x2)));
    return expect_equal(act.act(a, mul(R, x, x2)), rhs, Witness{}.add("a", a).add("x", x).add("x'", x2));
  });
  run.law(prefix + "module-algebra-left-extension", "(a.x)x' = a_(1).(x (S(a_(2)).x'))", n, [&](Rng& rng, std::size_t) {
    const Vec a = random_element(A, rng), x = sample_r(R, rng), x2 = sample_r(R, rng);
    Vec rhs;
    for (const auto& [l, c] : t4(A, S_inv(A, act.unit_for(x2)), a).terms())
      rhs.axpy(c, act.act(leg(l[0]), mul(R, x, act.act(S(A, leg(l[1])), x2))));
    return expect_equal(mul(R, act.act(a, x), x2), rhs, Witness{}.add("a", a).add("x", x).add("x'", x2));
  });
  run.law(prefix + "module-algebra-right-extension", "x(a.x') = a_(2).((S^-1(a_(1)).x)x')", n, [&](Rng& rng, std::size_t) {
    const Vec a = random_element(A, rng), x = sample_r(R, rng), x2 = sample_r(R, rng);
    Vec rhs;
    for (const auto& [l, c] : t2(A, S(A, act.unit_for(x)), a).terms())
      rhs.axpy(c, act.act(leg(l[1]), mul(R, act.act(S_inv(A, leg(l[0])), x), x2)));
    return expect_equal(mul(R, x, act.act(a, x2)), rhs, Witness{}.add("a", a).add("x", x).add("x'", x2));
  });
  if (auto one = R.unit())
    run.law(prefix + "module-algebra-unit", "a.1 = eps(a)1", n, [&, one](Rng& rng, std::size_t) {
      const Vec a = random_element(A, rng);
      return expect_equal(act.act(a, *one), eps(A, a) * *one, Witness{}.add("a", a));
    });
}

void comodule_algebra_laws(LawRunner& run, const std::string& prefix, const ComoduleAlgebra& C) {
  const Module carrier = carrier_of(C.R, C.A, C.name);
  comodule_laws(run, prefix, carrier, C.coaction);
  comodule_algebra_only(run, prefix, C.R, C.A, C.coaction);
}

void yd_module_algebra_laws(LawRunner& run, const std::string& prefix, const YDModuleAlgebra& H) {
  module_algebra_laws(run, prefix, H.as_module());
  comodule_algebra_only(run, prefix, H.R, H.V.A(), H.V.coaction);
  yd_laws(run, prefix, H.V);
}

std::optional<Witness> a_commutative_at(const YDModuleAlgebra& H, const Vec& x, const Vec& y) {
  const auto& R = *H.R;
  Vec rhs;
  for (const auto& [l, c] : H.V.coaction.right(y, H.V.module.unit_for(x)).terms())
    rhs.axpy(c, mul(R, Vec(l.head(1)), H.V.module.act(leg(l.back()), x)));
  return expect_equal(mul(R, x, y), rhs, Witness{}.add("x", x).add("y", y));
}

void a_commutative_law(LawRunner& run, const std::string& id, const YDModuleAlgebra& H) {
  run.law(id, "x y = y_(0) (y_(1).x)", run.samples(), [&](Rng& rng, std::size_t) {
    return a_commutative_at(H, sample_r(*H.R, rng), sample_r(*H.R, rng));
  });
}

Coaction coaction_from_qt(const Module& M, const QTStructure& qt) {
  Coaction c;
  c.name = "tau(R)(h (x) 1)";
  const HopfPtr A = M.A;
  c.slice_r = [M, A, R = qt.R](const Label& h, Atom a) {
    Vec out;
    for (const auto& [l, cf] : R.terms()) out.axpy(cf, tensor(M.act(leg(l[1]), Vec(h)), A->multiply(l[0], a)));
    return out;
  };
  c.slice_l = [M, A, R = qt.R](const Label& h, Atom b) {
    Vec out;
    for (const auto& [l, cf] : R.terms()) out.axpy(cf, tensor(M.act(leg(l[1]), Vec(h)), A->multiply(b, l[0])));
    return out;
  };
  return c;
}

YDModuleAlgebra qt_yd_algebra(const ModuleAlgebra& M, const QTStructure& qt) {
  YDModuleAlgebra H;
  H.name = M.name + "/" + qt.name;
  H.R = M.R;
  H.V.name = H.name;
  H.V.module = M.action;
  H.V.coaction = coaction_from_qt(M.action, qt);
  return H;
}

void qt_braiding_law(LawRunner& run, const std::string& id, const Module& X, const Module& V, const QTStructure& qt) {
  YDModule W;
  W.name = V.name;
  W.module = V;
  W.coaction = coaction_from_qt(V, qt);
  run.law(id, "C_{X,V}(x (x) v) = tau(R)(v (x) x)", run.samples(), [&, W](Rng& rng, std::size_t) {
    const Vec x = X.sample(rng), v = V.sample(rng);
    Vec rhs;
    for (const auto& [l, c] : qt.R.terms()) rhs.axpy(c, tensor(V.act(leg(l[1]), v), X.act(leg(l[0]), x)));
    return expect_equal(braiding_c(X, W, tensor(x, v)), rhs, Witness{}.add("x", x).add("v", v));
  });
}

namespace {

Module on_algebra(const HopfPtr& A, const AlgebraPtr& R, std::string name, std::function<Vec(Atom, Atom)> act) {
  Module m = carrier_of(R, A, std::move(name));
  m.act_basis = [act](Atom a, const Label& v) { return act(a, single(v)); };
  if (auto one = A->unit()) m.local_unit = [one = *one](const Label&) { return one; };
  return m;
}

const Group* group_of(const MultiplierHopfAlgebra& A) {
  auto* ga = dynamic_cast<const GroupAlgebra*>(&A);
  return ga ? &ga->group() : nullptr;
}

int s3_sign(Atom g) {
  static constexpr int sign[6] = {1, -1, -1, 1, 1, -1};
  return sign[g];
}

// Character by which a group acts on t in K[t]/(t^2), when registered.
std::optional<std::function<Scalar(Atom)>> sign_character(const HopfPtr& A) {
  const Field F = A->field();
  const Group* G = group_of(*A);
  if (!G || !G->finite()) return std::nullopt;
  if (G->name() == "S3") return [F](Atom g) { return F(s3_sign(g)); };
  if (G->elements()->size() % 2 == 0 && G->abelian()) return [F](Atom g) { return F(g % 2 == 0 ? 1 : -1); };
  return std::nullopt;
}

}  // namespace

std::vector<ModuleAlgebra> module_algebra_fixtures(const HopfPtr& A) {
  const Field F = A->field();
  std::vector<ModuleAlgebra> out;
  out.push_back({"trivial", A, on_algebra(A, A, "trivial", [A](Atom a, Atom x) { return Vec::atom(x, A->counit(a)); })});
  if (A->commutative() || A->cocommutative()) out.push_back({"adjoint", A, adjoint_yd(A).module});
  const AlgebraPtr D = dual_numbers(F);
  if (auto chi = sign_character(A)) {
    out.push_back({"dual-numbers-sign", D, on_algebra(A, D, "dual-numbers-sign", [chi = *chi](Atom g, Atom x) {
                     return x == 0 ? leg(0) * chi(0) : Vec::atom(1, chi(g));
                   })});
  } else if (A->name() == "H4") {
    // g.t = -t, x.t = 1, x.1 = 0
    out.push_back({"dual-numbers-h4", D, on_algebra(A, D, "dual-numbers-h4", [F](Atom a, Atom x) {
                     if (x == 0) return a == 0 || a == 1 ? Vec::atom(0, F(1)) : Vec{};
                     switch (a) {
                       case 0: return Vec::atom(1, F(1));
                       case 1: return Vec::atom(1, F(-1));
                       default: return Vec::atom(0, F(1));
                     }
                   })});
  }
  return out;
}

std::vector<ModuleAlgebra> module_algebra_controls(const HopfPtr& A) {
  std::vector<ModuleAlgebra> out;
  if (group_of(*A))
    out.push_back({"left-regular", A, on_algebra(A, A, "left-regular", [A](Atom a, Atom x) { return A->multiply(a, x); })});
  return out;
}

std::vector<ComoduleAlgebra> comodule_algebra_fixtures(const HopfPtr& A) {
  std::vector<ComoduleAlgebra> out;
  Coaction delta;
  delta.name = "Delta";
  delta.slice_r = [A](const Label& x, Atom a) { return A->t1(single(x), a); };
  delta.slice_l = [A](const Label& x, Atom b) { return A->t4(b, single(x)); };
  out.push_back({"Delta", A, A, delta});
  Coaction triv;
  triv.name = "x (x) 1";
  triv.slice_r = [](const Label& x, Atom a) { return Vec(with_leg(x, a)); };
  triv.slice_l = [](const Label& x, Atom b) { return Vec(with_leg(x, b)); };
  out.push_back({"trivial", A, A, triv});
  return out;
}

std::vector<ComoduleAlgebra> comodule_algebra_controls(const HopfPtr& A) {
  std::vector<ComoduleAlgebra> out;
  const Group* G = group_of(*A);
  if (!G || G->abelian()) return out;
  Coaction sq;
  sq.name = "x (x) x^2";
  sq.slice_r = [G](const Label& x, Atom a) {
    const Atom g = single(x);
    return Vec(Label{g, G->mul(G->mul(g, g), a)});
  };
  out.push_back({"square", A, A, sq});
  return out;
}

std::vector<QTStructure> qt_structures(const HopfPtr& A) {
  std::vector<QTStructure> out;
  if (!A->has_unit() || !A->is_finite()) return out;
  std::vector<QTStructure> candidates{qt_trivial(*A)};
  const Group* G = group_of(*A);
  if (G && G->finite() && G->abelian()) {
    try {
      candidates.push_back(qt_for_cyclic(*A, static_cast<int>(G->elements()->size())));
    } catch (const std::invalid_argument&) {
    }
  }
  for (auto& qt : candidates) {
    const auto axioms = qt_axioms(*A, qt);
    if (std::all_of(axioms.begin(), axioms.end(), [](const QTCheck& c) { return !c.run(); })) out.push_back(std::move(qt));
  }
  return out;
}

std::vector<YDModuleAlgebra> yd_algebra_fixtures(const HopfPtr& A) {
  std::vector<YDModuleAlgebra> out;
  {
    YDModuleAlgebra H;
    H.name = "trivial";
    H.R = A;
    H.V.name = "trivial";
    H.V.module = module_algebra_fixtures(A).front().action;
    H.V.coaction.name = "x (x) 1";
    H.V.coaction.slice_r = [](const Label& x, Atom a) { return Vec(with_leg(x, a)); };
    H.V.coaction.slice_l = [](const Label& x, Atom b) { return Vec(with_leg(x, b)); };
    out.push_back(H);
  }
  if (A->commutative() || A->cocommutative()) out.push_back({"adjoint", A, adjoint_yd(A)});
  for (const auto& qt : qt_structures(A)) {
    if (qt.name == "trivial") continue;
    for (const auto& M : module_algebra_fixtures(A))
      if (M.name != "trivial" && M.name != "adjoint") out.push_back(qt_yd_algebra(M, qt));
  }
  return out;
}

Vec YDHAModule::act_h(const Vec& h, const Vec& m) const {
  Vec out;
  for (const auto& [lh, ch] : h.terms())
    for (const auto& [lm, cm] : m.terms()) out.axpy(ch * cm, hact(single(lh), lm));
  return out;
}

namespace {

YDHAModule plain(std::string name, const std::shared_ptr<const YDModuleAlgebra>& H, YDModule M,
                 std::function<Vec(Atom, const Label&)> hact) {
  YDHAModule out;
  out.name = std::move(name);
  out.H = H;
  out.M = std::move(M);
  out.M.name = out.name;
  out.M.module.name = out.name;
  out.hact = std::move(hact);
  out.flat_legs = out.M.module.legs;
  out.flatten = [](const Vec& x) { return x; };
  out.unflatten = [](const Vec& x) { return x; };
  return out;
}

std::vector<Atom> atoms_of(const Algebra& R) { return R.basis().value(); }

}  // namespace

YDHAModule hq_regular(const std::shared_ptr<const YDModuleAlgebra>& H) {
  const AlgebraPtr R = H->R;
  return plain("H", H, H->V, [R](Atom h, const Label& m) { return R->multiply(h, single(m)); });
}

YDHAModule hq_scalar(const std::shared_ptr<const YDModuleAlgebra>& H, const YDModule& V) {
  if (H->R->dim() != 1) throw std::invalid_argument("hq_scalar needs H = K");
  const Vec one = *H->R->unit();
  return plain(V.name, H, V, [one](Atom h, const Label& m) { return Vec(m, one.coeff(Label{h})); });
}

YDHAModule hq_free(const std::shared_ptr<const YDModuleAlgebra>& H, const YDModule& V) {
  const AlgebraPtr R = H->R;
  return plain("H(x)" + V.name, H, yd_tensor(H->V, V),
               [R](Atom h, const Label& m) { return tensor(R->multiply(h, m[0]), Vec(m.tail(1))); });
}

YDHAModule hq_augmented(const std::shared_ptr<const YDModuleAlgebra>& H, const YDModule& V) {
  if (H->R->name() != "K[t]/(t^2)") throw std::invalid_argument("hq_augmented needs H = K[t]/(t^2)");
  return plain(V.name + "/t=0", H, V, [](Atom h, const Label& m) { return h == 0 ? Vec(m) : Vec{}; });
}

void hq_laws(LawRunner& run, const std::string& prefix, const YDHAModule& M) {
  const auto& H = *M.H;
  const auto& R = *H.R;
  const auto& A = *M.M.A();
  const Module& mod = M.M.module;
  const std::size_t n = run.samples(), k = M.legs();
  yd_laws(run, prefix, M.M);
  run.law(prefix + "hq-H-module", "(h h') -> m = h -> (h' -> m)", n, [&](Rng& rng, std::size_t) {
    const Vec h = sample_r(R, rng), h2 = sample_r(R, rng), m = mod.sample(rng);
    return expect_equal(M.act_h(mul(R, h, h2), m), M.act_h(h, M.act_h(h2, m)), Witness{}.add("h", h).add("h'", h2).add("m", m));
  });
  if (auto one = R.unit())
    run.law(prefix + "hq-unit", "1 -> m = m", n, [&, one](Rng& rng, std::size_t) {
      const Vec m = mod.sample(rng);
      return expect_equal(M.act_h(*one, m), m, Witness{}.add("m", m));
    });
  run.law(prefix + "hq-A-linear", "a.(h -> m) = (a_(1).h) -> (a_(2).m)", n, [&](Rng& rng, std::size_t) {
    const Vec a = random_element(A, rng), h = sample_r(R, rng), m = mod.sample(rng);
    Vec rhs;
    for (const auto& [l, c] : t1(A, a, mod.unit_for(m)).terms())
      rhs.axpy(c, M.act_h(H.V.module.act(leg(l[0]), h), mod.act(leg(l[1]), m)));
    return expect_equal(mod.act(a, M.act_h(h, m)), rhs, Witness{}.add("a", a).add("h", h).add("m", m));
  });
  run.law(prefix + "hq-colinear", "Gamma(h -> m)(1 (x) a') = h_(0) -> m_(0) (x) m_(1) h_(1) a'", n, [&](Rng& rng, std::size_t) {
    const Vec h = sample_r(R, rng), m = mod.sample(rng), a2 = random_element(A, rng);
    Vec rhs;
    for (const auto& [lh, ch] : H.V.coaction.right(h, a2).terms())
      for (const auto& [lm, cm] : M.M.coaction.right(m, leg(lh.back())).terms())
        rhs.axpy(ch * cm, tensor(M.hact(lh[0], lm.head(k)), leg(lm.back())));
    return expect_equal(M.M.coaction.right(M.act_h(h, m), a2), rhs, Witness{}.add("h", h).add("m", m).add("a'", a2));
  });
}

std::function<Vec(const Vec&, const Vec&)> right_h_action(const YDHAModule& M) {
  const auto& H = *M.H;
  const auto atoms = atoms_of(*H.R);
  for (Atom x : atoms)
    for (Atom y : atoms)
      if (auto w = a_commutative_at(H, leg(x), leg(y)))
        throw HypothesisError(H.name + " is not A-commutative: " + w->items.front().second + ", " + w->items[1].second);
  return [M](const Vec& m, const Vec& h) {
    Vec out;
    for (const auto& [lm, cm] : m.terms()) {
      const Vec e = M.M.module.local_unit(lm);
      for (const auto& [lh, ch] : M.H->V.coaction.right(h, e).terms())
        out.axpy(cm * ch, M.act_h(leg(lh[0]), M.M.module.act(leg(lh.back()), Vec(lm))));
    }
    return out;
  };
}

void bimodule_law(LawRunner& run, const std::string& id, const YDHAModule& M) {
  const auto right = right_h_action(M);
  const auto& R = *M.H->R;
  run.law(id, "(h -> m) <- h' = h -> (m <- h')", run.samples(), [&](Rng& rng, std::size_t) {
    const Vec h = sample_r(R, rng), h2 = sample_r(R, rng), m = M.M.module.sample(rng);
    return expect_equal(right(M.act_h(h, m), h2), M.act_h(h, right(m, h2)), Witness{}.add("h", h).add("h'", h2).add("m", m));
  });
}

namespace {

// Projects the first k legs of every term and keeps the rest.
Vec project_head(const QuotientSpace& Q, std::size_t k, const Vec& x) {
  Vec out;
  for (const auto& [l, c] : x.terms())
    for (const auto& [q, cq] : Q.project(Vec(l.head(k))).terms()) out.add_term(concat(q, l.tail(k)), c * cq);
  return out;
}

std::vector<Label> product_basis(const YDHAModule& M, const YDHAModule& N) {
  std::vector<Label> out;
  for (const auto& m : M.basis())
    for (const auto& n : N.basis()) out.push_back(concat(m, n));
  return out;
}

// m <- h (x) n - m (x) h -> n over basis elements, zero ones dropped.
std::vector<Vec> balancing_relators(const YDHAModule& M, const YDHAModule& N) {
  const auto right = right_h_action(M);
  std::vector<Vec> out;
  for (const auto& m : M.basis())
    for (Atom h : atoms_of(*M.H->R))
      for (const auto& n : N.basis()) {
        Vec r = tensor(right(Vec(m), leg(h)), Vec(n));
        r.axpy(Scalar(-1), tensor(Vec(m), N.hact(h, n)));
        if (!r.is_zero()) out.push_back(std::move(r));
      }
  return out;
}

std::vector<Atom> probe_atoms(const MultiplierHopfAlgebra& A, const std::string& tag) {
  if (auto b = A.basis()) return *b;
  Rng rng = Rng::stream(0, tag);
  std::vector<Atom> out;
  for (int i = 0; i < 6; ++i) out.push_back(A.sample_atom(rng));
  return out;
}

void require_tensorable(const YDHAModule& M, const YDHAModule& N) {
  if (M.H != N.H) throw std::invalid_argument(M.name + ", " + N.name + ": different algebras H");
  if (!M.H->R->has_unit() || !M.H->R->is_finite()) throw HypothesisError(M.H->name + ": tensor over H needs a finite unital H");
  if (!M.M.module.finite() || !N.M.module.finite())
    throw HypothesisError(M.name + ", " + N.name + ": tensor over H needs finite carriers");
}

}  // namespace

YDHAModule tensor_over_h(const YDHAModule& M, const YDHAModule& N) {
  require_tensorable(M, N);
  const std::size_t km = M.legs(), k = km + N.legs();
  const std::vector<Vec> relators = balancing_relators(M, N);
  auto Q = std::make_shared<const QuotientSpace>(product_basis(M, N), relators);
  const YDModule MN = yd_tensor(M.M, N.M);

  YDHAModule out;
  out.name = "(" + M.name + ")(x)_H(" + N.name + ")";
  out.H = M.H;
  YDModule& T = out.M;
  T.name = out.name;
  T.module.name = out.name;
  T.module.A = M.M.A();
  T.module.legs = 1;
  T.module.basis.emplace();
  for (std::size_t i = 0; i < Q->dim(); ++i) T.module.basis->push_back(Label{static_cast<Atom>(i)});
  T.module.act_basis = [Q, MN](Atom a, const Label& q) { return Q->project(MN.module.act(leg(a), Q->section(Vec(q)))); };
  T.module.local_unit = [Q, MN](const Label& q) { return MN.module.unit_for(Q->section(Vec(q))); };
  T.module.sample_label = [dim = Q->dim()](Rng& rng) { return Label{static_cast<Atom>(rng.below(dim))}; };
  T.coaction.name = out.name;
  T.coaction.slice_r = [Q, MN, k](const Label& q, Atom a) {
    return project_head(*Q, k, MN.coaction.right(Q->section(Vec(q)), leg(a)));
  };
  if (MN.coaction.has_left())
    T.coaction.slice_l = [Q, MN, k](const Label& q, Atom b) {
      return project_head(*Q, k, MN.coaction.left(Q->section(Vec(q)), leg(b)));
    };
  out.hact = [Q, M, km](Atom h, const Label& q) {
    return Q->project(apply_legs(Q->section(Vec(q)), 0, km, [&](const Label& m) { return M.hact(h, m); }));
  };
  out.flat_legs = M.flat_legs + N.flat_legs;
  out.flatten = [Q, M, N, km](const Vec& x) {
    return extend_split(Q->section(x), km,
                        [&](const Label& m, const Label& n) { return tensor(M.flatten(Vec(m)), N.flatten(Vec(n))); });
  };
  out.unflatten = [Q, M, N](const Vec& y) {
    return Q->project(extend_split(
        y, M.flat_legs, [&](const Label& m, const Label& n) { return tensor(M.unflatten(Vec(m)), N.unflatten(Vec(n))); }));
  };
  out.left_legs = km;
  out.lift = [Q](const Vec& q) { return Q->section(q); };
  out.project = [Q](const Vec& x) { return Q->project(x); };
  return out;
}

void relator_stability_law(LawRunner& run, const std::string& id, const YDHAModule& M, const YDHAModule& N) {
  require_tensorable(M, N);
  const std::size_t km = M.legs(), k = km + N.legs();
  const std::vector<Vec> relators = balancing_relators(M, N);
  const QuotientSpace Q(product_basis(M, N), relators);
  const YDModule MN = yd_tensor(M.M, N.M);
  const auto right_n = right_h_action(N);
  const auto h_atoms = atoms_of(*M.H->R);
  const auto a_atoms = probe_atoms(*M.M.A(), id);
  run.law(id, "h ->, a., Gamma and <- h map balancing relators into the relator span", relators.size(),
          [&](Rng&, std::size_t i) -> std::optional<Witness> {
            const Vec& r = relators[i];
            auto zero = [&](const Vec& x, const std::string& part) {
              return expect_equal(x, Vec{}, Witness{}.add("relator", r).add("structure", part));
            };
            for (Atom h : h_atoms) {
              if (auto w = zero(Q.project(apply_legs(r, 0, km, [&](const Label& m) { return M.hact(h, m); })), "h ->"))
                return w;
              if (auto w = zero(Q.project(apply_legs(r, km, k, [&](const Label& n) { return right_n(Vec(n), leg(h)); })),
                                "<- h"))
                return w;
            }
            for (Atom a : a_atoms) {
              if (auto w = zero(Q.project(MN.module.act(leg(a), r)), "a.")) return w;
              if (auto w = zero(project_head(Q, k, MN.coaction.right(r, leg(a))), "Gamma")) return w;
            }
            return std::nullopt;
          });
}

namespace {

// f : T -> X is a bijection commuting with a., Gamma and h ->.
std::optional<Witness> iso_check(const YDHAModule& T, const YDHAModule& X, const std::function<Vec(const Vec&)>& f) {
  Witness ctx = Witness{}.add("from", T.name).add("to", X.name);
  if (!invert_map(T.basis(), X.basis(), [&](const Label& q) { return f(Vec(q)); }))
    return Witness(ctx).add("failure", "not bijective");
  const std::size_t k = T.legs();
  for (const auto& q : T.basis()) {
    const Vec fq = f(Vec(q));
    for (Atom a : probe_atoms(*T.M.A(), T.name)) {
      if (auto w = expect_equal(f(T.M.module.act_basis(a, q)), X.M.module.act(leg(a), fq),
                                Witness(ctx).add("q", Vec(q)).add("a", leg(a)).add("part", "action")))
        return w;
      if (auto w = expect_equal(apply_legs(T.M.coaction.slice_r(q, a), 0, k, [&](const Label& l) { return f(Vec(l)); }),
                                X.M.coaction.right(fq, leg(a)),
                                Witness(ctx).add("q", Vec(q)).add("a", leg(a)).add("part", "coaction")))
        return w;
    }
    for (Atom h : atoms_of(*T.H->R))
      if (auto w = expect_equal(f(T.hact(h, q)), X.act_h(leg(h), fq), Witness(ctx).add("q", Vec(q)).add("h", leg(h))))
        return w;
  }
  return std::nullopt;
}

}  // namespace

void hq_monoidal_laws(LawRunner& run, const std::vector<YDHAModule>& objects) {
  if (objects.empty()) return;
  const auto& H = objects.front().H;
  const YDHAModule unit = hq_regular(H);
  auto obj = [&](std::size_t i) -> const YDHAModule& { return objects[i % objects.size()]; };
  const std::size_t count = std::min<std::size_t>(3, objects.size());

  for (std::size_t i = 0; i < count; ++i) {
    const YDHAModule& X = obj(i);
    run.fact("hq-unit-right:" + X.name, "M (x)_H H -> M, m (x) h -> m <- h, is an isomorphism", [&]() {
      const YDHAModule T = tensor_over_h(X, unit);
      const auto right = right_h_action(X);
      return iso_check(T, X, [&](const Vec& q) {
        return extend_split(T.lift(q), X.legs(), [&](const Label& m, const Label& h) { return right(Vec(m), Vec(h)); });
      });
    });
    run.fact("hq-unit-left:" + X.name, "H (x)_H M -> M, h (x) m -> h -> m, is an isomorphism", [&]() {
      const YDHAModule T = tensor_over_h(unit, X);
      return iso_check(T, X, [&](const Vec& q) {
        return extend_split(T.lift(q), 1, [&](const Label& h, const Label& m) { return X.act_h(Vec(h), Vec(m)); });
      });
    });
  }

  auto assoc = [](const YDHAModule& from, const YDHAModule& to) {
    return [&from, &to](const Vec& q) { return to.unflatten(from.flatten(q)); };
  };
  // (f (x)_H g) on representatives
  auto tensor_map = [](const YDHAModule& from, const YDHAModule& to, const std::function<Vec(const Vec&)>& f,
                       const std::function<Vec(const Vec&)>& g) {
    return [&from, &to, f, g](const Vec& q) {
      return to.project(extend_split(from.lift(q), from.left_legs,
                                     [&](const Label& a, const Label& b) { return tensor(f(Vec(a)), g(Vec(b))); }));
    };
  };
  const auto id = [](const Vec& x) { return x; };

  {
    const YDHAModule &X = obj(0), &Y = obj(1), &Z = obj(2);
    run.fact("hq-associator", "(X (x)_H Y) (x)_H Z -> X (x)_H (Y (x)_H Z) is well defined and an isomorphism", [&]() -> std::optional<Witness> {
      const YDHAModule L = tensor_over_h(tensor_over_h(X, Y), Z);
      const YDHAModule R = tensor_over_h(X, tensor_over_h(Y, Z));
      for (const auto& q : L.basis())
        if (auto w = expect_equal(L.unflatten(L.flatten(Vec(q))), Vec(q), Witness{}.add("q", Vec(q)).add("part", "flatten")))
          return w;
      // flat balancing relators of X (x) Y (x) Z must vanish on both sides
      const auto rx = right_h_action(X), ry = right_h_action(Y);
      for (const auto& x : X.basis())
        for (const auto& y : Y.basis())
          for (const auto& z : Z.basis())
            for (Atom h : atoms_of(*H->R)) {
              Vec r1 = tensor(rx(Vec(x), leg(h)), Vec(y), Vec(z));
              r1.axpy(Scalar(-1), tensor(Vec(x), Y.hact(h, y), Vec(z)));
              Vec r2 = tensor(Vec(x), ry(Vec(y), leg(h)), Vec(z));
              r2.axpy(Scalar(-1), tensor(Vec(x), Vec(y), Z.hact(h, z)));
              for (const Vec& r : {r1, r2})
                for (const YDHAModule* T : {&L, &R})
                  if (auto w = expect_equal(T->unflatten(r), Vec{}, Witness{}.add("relator", r).add("object", T->name)))
                    return w;
            }
      return iso_check(L, R, assoc(L, R));
    });
  }

  {
    const YDHAModule &W = obj(0), &X = obj(1), &Y = obj(2), &Z = obj(3);
    run.fact("hq-pentagon", "a_{W,X,Y(x)Z} a_{W(x)X,Y,Z} = (1 (x) a_{X,Y,Z}) a_{W,X(x)Y,Z} (a_{W,X,Y} (x) 1)", [&]() -> std::optional<Witness> {
      const YDHAModule WX = tensor_over_h(W, X), XY = tensor_over_h(X, Y), YZ = tensor_over_h(Y, Z);
      const YDHAModule WX_Y = tensor_over_h(WX, Y), W_XY = tensor_over_h(W, XY);
      const YDHAModule XY_Z = tensor_over_h(XY, Z), X_YZ = tensor_over_h(X, YZ);
      const YDHAModule S = tensor_over_h(WX_Y, Z);
      const YDHAModule P1 = tensor_over_h(WX, YZ);
      const YDHAModule P2 = tensor_over_h(W_XY, Z);
      const YDHAModule P3 = tensor_over_h(W, XY_Z);
      const YDHAModule T = tensor_over_h(W, X_YZ);
      const auto a1 = assoc(S, P1), a2 = assoc(P1, T), a4 = assoc(P2, P3);
      const auto a3 = tensor_map(S, P2, assoc(WX_Y, W_XY), id);
      const auto a5 = tensor_map(P3, T, id, assoc(XY_Z, X_YZ));
      for (const auto& q : S.basis())
        if (auto w = expect_equal(a2(a1(Vec(q))), a5(a4(a3(Vec(q)))), Witness{}.add("q", Vec(q))))
          return w;
      return std::nullopt;
    });
  }
}

std::shared_ptr<const YDModuleAlgebra> hq_algebra(const HopfPtr& A) {
  const Group* G = group_of(*A);
  if (G && G->finite() && G->abelian() && G->elements()->size() == 2) {
    for (const auto& qt : qt_structures(A))
      if (qt.name != "trivial")
        for (const auto& M : module_algebra_fixtures(A))
          if (M.name == "dual-numbers-sign") return std::make_shared<const YDModuleAlgebra>(qt_yd_algebra(M, qt));
  }
  YDModuleAlgebra K;
  K.name = "K";
  K.R = ground_field(A->field());
  K.V = trivial_yd(A);
  return std::make_shared<const YDModuleAlgebra>(std::move(K));
}

std::vector<YDHAModule> hq_fixtures(const HopfPtr& A) {
  const auto H = hq_algebra(A);
  std::vector<YDHAModule> out{hq_regular(H)};
  if (H->R->name() == "K[t]/(t^2)") {
    const auto chi = *sign_character(A);
    const Vec g = leg(1) * A->field()(1), e = leg(0) * A->field()(1);
    out.push_back(hq_free(H, character_yd(A, "sign-g", chi, g)));
    out.push_back(hq_augmented(H, trivial_yd(A)));
    out.push_back(hq_augmented(H, character_yd(A, "sign", chi, e)));
    return out;
  }
  std::vector<YDModule> finite;
  for (const auto& V : yd_fixtures(A))
    if (V.module.finite()) finite.push_back(V);
  std::stable_sort(finite.begin(), finite.end(),
                   [](const YDModule& x, const YDModule& y) { return x.module.basis->size() < y.module.basis->size(); });
  for (std::size_t i = 0; i < finite.size() && i < 3; ++i) out.push_back(hq_scalar(H, finite[i]));
  return out;
}

std::vector<YDHAModule> hq_controls(const HopfPtr& A) {
  YDHAModule M = hq_fixtures(A).back();
  const Field F = A->field();
  M.name = "doubled-action";
  M.hact = [h = M.hact, F](Atom a, const Label& m) { return F(2) * h(a, m); };
  return {M};
}

SmashProduct::SmashProduct(ModuleAlgebra H, HopfPtr D)
    : H_(std::move(H)), D_(std::move(D)), nh_(H_.R->dim()), nd_(D_->dim()) {
  const auto hs = atoms_of(*H_.R), ds = atoms_of(*D_);
  const Module& act = H_.action;
  for (Atom d : ds) {
    const Vec cop = coproduct(*D_, leg(d));
    for (Atom x : hs) {
      for (Atom y : hs) {
        Vec rhs;
        for (const auto& [l, c] : cop.terms()) rhs.axpy(c, mul(*H_.R, act.act_basis(l[0], Label{x}), act.act_basis(l[1], Label{y})));
        if (!(act.act(leg(d), H_.R->multiply(x, y)) == rhs))
          throw std::invalid_argument(H_.name + " is not a " + D_->name() + "-module algebra at d = " + D_->atom_name(d) +
                                      ", x = " + H_.R->atom_name(x) + ", y = " + H_.R->atom_name(y));
      }
    }
    if (auto one = H_.R->unit())
      if (!(act.act(leg(d), *one) == D_->counit(d) * *one))
        throw std::invalid_argument(H_.name + ": d.1 differs from eps(d)1 at d = " + D_->atom_name(d));
  }
}

std::string SmashProduct::name() const { return H_.name + "#" + D_->name(); }

Vec SmashProduct::multiply(Atom x, Atom y) const {
  const auto nd = static_cast<Atom>(nd_);
  const Atom h = x / nd, d = x % nd, h2 = y / nd, d2 = y % nd;
  Vec out;
  for (const auto& [l, c] : coproduct(*D_, leg(d)).terms()) {
    const Vec hh = mul(*H_.R, leg(h), H_.action.act_basis(l[0], Label{h2}));
    const Vec dd = D_->multiply(l[1], d2);
    for (const auto& [lh, ch] : hh.terms())
      for (const auto& [ld, cd] : dd.terms()) out.add_term(Label{single(lh) * nd + single(ld)}, c * ch * cd);
  }
  return out;
}

std::optional<Vec> SmashProduct::unit() const {
  const auto h1 = H_.R->unit(), d1 = D_->unit();
  if (!h1 || !d1) return std::nullopt;
  Vec out;
  for (const auto& [lh, ch] : h1->terms())
    for (const auto& [ld, cd] : d1->terms()) out.add_term(Label{single(lh) * static_cast<Atom>(nd_) + single(ld)}, ch * cd);
  return out;
}

std::optional<std::vector<Atom>> SmashProduct::basis() const {
  std::vector<Atom> b(nh_ * nd_);
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = static_cast<Atom>(i);
  return b;
}

std::string SmashProduct::atom_name(Atom x) const {
  const auto nd = static_cast<Atom>(nd_);
  return H_.R->atom_name(x / nd) + "#" + D_->atom_name(x % nd);
}

ModuleAlgebra double_module_algebra(const YDModuleAlgebra& H, const DoubleHopf& D) {
  const HopfPtr A = H.V.A();
  const auto cp = std::make_shared<const CrossedProduct>(A, AutoPair{});
  const AlgebraModule M = yd_to_dcp_module(as_gyd(H.V), cp);
  ModuleAlgebra out;
  out.name = H.name;
  out.R = H.R;
  out.action = carrier_of(H.R, D.hopf, "dcp(" + H.name + ")");
  out.action.act_basis = M.act_basis;
  out.action.local_unit = [one = *D.hopf->unit()](const Label&) { return one; };
  return out;
}

void smash_laws(LawRunner& run, const HopfPtr& A) {
  if (!A->is_finite() || !A->has_unit()) {
    run.report().notes.push_back(A->name() + ": smash products need a finite-dimensional unital instance");
    return;
  }
  const DoubleHopf D = drinfeld_double(A);
  const HopfPtr& DA = D.hopf;
  const auto cp = std::make_shared<const CrossedProduct>(A, AutoPair{}, run.exec());
  const Field F = A->field();
  auto counit_action = [&](const AlgebraPtr& R, const std::string& name) {
    ModuleAlgebra M{name, R, carrier_of(R, DA, name)};
    M.action.local_unit = [one = *DA->unit()](const Label&) { return one; };
    return M;
  };

  run.fact("smash-ground-field", "K # D(A) = D(A)", [&]() -> std::optional<Witness> {
    const SmashProduct S(counit_action(ground_field(F), "K"), DA);
    for (Atom x : atoms_of(*DA))
      for (Atom y : atoms_of(*DA))
        if (auto w = expect_equal(S.multiply(x, y), DA->multiply(x, y), Witness{}.add("x", DA->atom_name(x)).add("y", DA->atom_name(y))))
          return w;
    return std::nullopt;
  });
  run.fact("smash-counit-action", "A # D(A) with d.h = eps(d)h is the tensor product algebra", [&]() -> std::optional<Witness> {
    const SmashProduct S(counit_action(A, "A"), DA);
    const auto nd = static_cast<Atom>(DA->dim());
    for (Atom x : atoms_of(S))
      for (Atom y : atoms_of(S)) {
        const Vec expect = extend2(A->multiply(x / nd, y / nd), DA->multiply(x % nd, y % nd),
                                   [&](const Label& h, const Label& d) { return Vec(Label{single(h) * nd + single(d)}); });
        if (auto w = expect_equal(S.multiply(x, y), expect, Witness{}.add("x", S.atom_name(x)).add("y", S.atom_name(y))))
          return w;
      }
    return std::nullopt;
  });
  run.fact("smash-rejects-regular", "D(A) acting on itself by left multiplication is not a module algebra", [&]() -> std::optional<Witness> {
    ModuleAlgebra M{"D(A)-regular", DA, carrier_of(DA, DA, "regular")};
    M.action.act_basis = [DA](Atom d, const Label& x) { return DA->multiply(d, single(x)); };
    try {
      SmashProduct S(M, DA);
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
    return Witness{}.add("failure", "constructor accepted the regular action");
  });

  for (const auto& H : yd_algebra_fixtures(A)) {
    if (!H.R->is_finite()) continue;
    run.law("smash-associative:" + H.name, "(xy)z = x(yz) in H # D(A)", run.samples(), [&](Rng& rng, std::size_t) -> std::optional<Witness> {
      try {
        const SmashProduct S(double_module_algebra(H, D), DA);
        const Vec x = random_element(S, rng), y = random_element(S, rng), z = random_element(S, rng);
        return expect_equal(mul(S, mul(S, x, y), z), mul(S, x, mul(S, y, z)), Witness{}.add("x", x).add("y", y).add("z", z));
      } catch (const std::invalid_argument& e) {
        return Witness{}.add("error", e.what());
      }
    });
  }

  const auto objects = hq_fixtures(A);
  const SmashProduct S(double_module_algebra(*objects.front().H, D), DA);
  const auto nd = static_cast<Atom>(DA->dim());
  for (const auto& M : objects) {
    const AlgebraModule dm = yd_to_dcp_module(as_gyd(M.M), cp);
    auto act = [&](const Vec& s, const Vec& m) {
      Vec out;
      for (const auto& [l, c] : s.terms()) {
        const Atom x = single(l);
        out.axpy(c, M.act_h(leg(x / nd), dm.act(leg(x % nd), m)));
      }
      return out;
    };
    run.law("hq-smash-module:" + M.name, "(h # d).m = h -> (d.m) is an H # D(A)-module", run.samples(), [&](Rng& rng, std::size_t) -> std::optional<Witness> {
      const Vec x = random_element(S, rng), y = random_element(S, rng), m = M.M.module.sample(rng);
      Witness ctx = Witness{}.add("x", x).add("y", y).add("m", m);
      if (auto w = expect_equal(act(*S.unit(), m), m, ctx)) return w;
      return expect_equal(act(mul(S, x, y), m), act(x, act(y, m)), ctx);
    });
  }
}

}  // namespace mhopf
