#include "mhopf/instances.hpp"

#include <map>
#include <set>

#include "mhopf/linalg.hpp"

namespace mhopf {

// ---- K(G) -------------------------------------------------------------------

std::optional<Vec> FunctionAlgebra::unit() const {
  auto e = g_->elements();
  if (!e) return std::nullopt;
  Vec u;
  for (Atom g : *e) u.add_term(Label{g}, field_(1));
  return u;
}

Vec FunctionAlgebra::local_unit(std::span<const Vec> xs) const {
  if (auto u = unit()) return *u;
  std::set<Atom> atoms;
  for (const auto& x : xs)
    for (const auto& [l, c] : x.terms())
      for (Atom a : l.atoms()) atoms.insert(a);
  Vec e;
  for (Atom a : atoms) e.add_term(Label{a}, field_(1));
  return e;
}

// Delta(d_a)(p, q) = d_a(pq)
Vec FunctionAlgebra::t1(Atom a, Atom b) const { return Vec(Label{g_->mul(a, g_->inv(b)), b}, field_(1)); }
Vec FunctionAlgebra::t2(Atom a, Atom b) const { return Vec(Label{a, g_->mul(g_->inv(a), b)}, field_(1)); }
Vec FunctionAlgebra::t3(Atom a, Atom b) const { return Vec(Label{b, g_->mul(g_->inv(b), a)}, field_(1)); }
Vec FunctionAlgebra::t4(Atom a, Atom b) const { return Vec(Label{g_->mul(b, g_->inv(a)), a}, field_(1)); }

// ---- KG ---------------------------------------------------------------------

Vec GroupAlgebra::t1(Atom a, Atom b) const { return Vec(Label{a, g_->mul(a, b)}, field_(1)); }
Vec GroupAlgebra::t2(Atom a, Atom b) const { return Vec(Label{g_->mul(a, b), b}, field_(1)); }
Vec GroupAlgebra::t3(Atom a, Atom b) const { return Vec(Label{g_->mul(a, b), a}, field_(1)); }
Vec GroupAlgebra::t4(Atom a, Atom b) const { return Vec(Label{b, g_->mul(a, b)}, field_(1)); }

// ---- tables -----------------------------------------------------------------

std::vector<Vec> solve_antipode(const HopfTables& t) {
  const std::size_t n = t.mult.size();
  // unknown [k, u] = coefficient of a_k in S(a_u)
  std::vector<Vec> rows;
  std::vector<Scalar> rhs;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Vec> eq(n);
    for (const auto& [l, c] : t.coproduct[j].terms()) {
      const auto u = static_cast<std::size_t>(l[0]), v = static_cast<std::size_t>(l[1]);
      for (std::size_t k = 0; k < n; ++k)
        for (const auto& [m, d] : t.mult[k][v].terms())
          eq[static_cast<std::size_t>(single(m))].add_term(Label{static_cast<Atom>(k), static_cast<Atom>(u)}, c * d);
    }
    for (std::size_t m = 0; m < n; ++m) {
      rows.push_back(eq[m]);
      rhs.push_back(t.counit[j] * t.unit.coeff(Label{static_cast<Atom>(m)}));
    }
  }
  auto sol = lin_solve(rows, rhs);
  if (!sol) throw std::runtime_error(t.name + ": bialgebra has no antipode");
  std::vector<Vec> S(n);
  for (const auto& [l, c] : sol->terms()) S[static_cast<std::size_t>(l[1])].add_term(Label{l[0]}, c);
  return S;
}

FiniteHopf::FiniteHopf(HopfTables t) : t_(std::move(t)) {
  const std::size_t n = t_.mult.size();
  if (t_.names.empty())
    for (std::size_t i = 0; i < n; ++i) t_.names.push_back(std::to_string(i));
  if (t_.antipode.empty()) t_.antipode = solve_antipode(t_);
  if (t_.antipode_inv.empty()) {
    std::vector<Label> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(Label{static_cast<Atom>(i)});
    auto inv = invert_map(labels, labels, [&](const Label& l) { return t_.antipode[idx(single(l))]; });
    if (!inv) throw std::runtime_error(t_.name + ": antipode is not bijective");
    for (std::size_t i = 0; i < n; ++i) t_.antipode_inv.push_back(inv->at(labels[i]));
  }
  commutative_ = cocommutative_ = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(t_.coproduct[i] == flip(t_.coproduct[i]))) cocommutative_ = false;
    for (std::size_t j = 0; j < n; ++j)
      if (!(t_.mult[i][j] == t_.mult[j][i])) commutative_ = false;
  }
}

std::optional<std::vector<Atom>> FiniteHopf::basis() const {
  std::vector<Atom> b(t_.mult.size());
  for (std::size_t i = 0; i < b.size(); ++i) b[i] = static_cast<Atom>(i);
  return b;
}

// T1(a (x) b) = sum a_(1) (x) a_(2) b, read from the stored Delta(a).
Vec FiniteHopf::t1(Atom a, Atom b) const {
  Vec out;
  for (const auto& [l, c] : t_.coproduct.at(idx(a)).terms())
    out.axpy(c, tensor(Vec::atom(l[0]), multiply(l[1], b)));
  return out;
}

Vec FiniteHopf::t2(Atom a, Atom b) const {
  Vec out;
  for (const auto& [l, c] : t_.coproduct.at(idx(b)).terms())
    out.axpy(c, tensor(multiply(a, l[0]), Vec::atom(l[1])));
  return out;
}

Vec FiniteHopf::t3(Atom a, Atom b) const {
  Vec out;
  for (const auto& [l, c] : t_.coproduct.at(idx(a)).terms())
    out.axpy(c, tensor(multiply(l[0], b), Vec::atom(l[1])));
  return out;
}

Vec FiniteHopf::t4(Atom a, Atom b) const {
  Vec out;
  for (const auto& [l, c] : t_.coproduct.at(idx(b)).terms())
    out.axpy(c, tensor(Vec::atom(l[0]), multiply(a, l[1])));
  return out;
}

HopfPtr sweedler_h4(const Field& field) {
  if (field.characteristic() == 2) throw std::invalid_argument("Sweedler's algebra needs characteristic other than 2");
  // atom i + 2j is g^i x^j
  HopfTables t;
  t.name = "H4";
  t.field = field;
  t.names = {"1", "g", "x", "gx"};
  t.mult.assign(4, std::vector<Vec>(4));
  for (Atom a = 0; a < 4; ++a)
    for (Atom b = 0; b < 4; ++b) {
      const Atom i = a & 1, j = a >> 1, k = b & 1, l = b >> 1;
      if (j + l >= 2) continue;
      const long sign = (j * k) % 2 ? -1 : 1;
      t.mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = Vec::atom(((i + k) & 1) + 2 * (j + l), field(sign));
    }
  const Scalar one = field(1);
  t.coproduct = {Vec(Label{0, 0}, one), Vec(Label{1, 1}, one), Vec(Label{2, 0}, one) + Vec(Label{1, 2}, one),
                 Vec(Label{3, 1}, one) + Vec(Label{0, 3}, one)};
  t.counit = {one, one, field(0), field(0)};
  t.antipode = {Vec::atom(0, one), Vec::atom(1, one), Vec::atom(3, field(-1)), Vec::atom(2, one)};
  t.antipode_inv = {Vec::atom(0, one), Vec::atom(1, one), Vec::atom(3, one), Vec::atom(2, field(-1))};
  t.unit = Vec::atom(0, one);
  return std::make_shared<FiniteHopf>(std::move(t));
}

Vec coproduct(const MultiplierHopfAlgebra& A, const Vec& a) {
  auto u = A.unit();
  if (!u) throw std::logic_error(A.name() + ": Delta(a) is only a finite tensor for unital instances");
  return t1(A, a, *u);
}

Vec coproduct2(const MultiplierHopfAlgebra& A, const Vec& a) {
  return apply_legs(coproduct(A, a), 0, 1, [&](const Label& l) { return coproduct(A, Vec(l)); });
}

Vec mul_legs(const Algebra& A, const Vec& x, const Vec& y) {
  return extend2(x, y, [&](const Label& p, const Label& q) {
    if (p.size() != q.size()) throw std::invalid_argument("mul_legs: arity mismatch");
    Vec out(Label{}, Scalar(1));
    for (std::size_t i = 0; i < p.size(); ++i) out = tensor(out, A.multiply(p[i], q[i]));
    return out;
  });
}

HopfTables tables_of(const MultiplierHopfAlgebra& A) {
  auto b = A.basis();
  auto u = A.unit();
  if (!b || !u) throw std::invalid_argument(A.name() + ": tables need a finite basis and a unit");
  std::map<Atom, Atom> pos;
  for (std::size_t i = 0; i < b->size(); ++i) pos[(*b)[i]] = static_cast<Atom>(i);
  auto relabel = [&](const Vec& v) {
    Vec out;
    for (const auto& [l, c] : v.terms()) {
      Label m;
      for (Atom a : l.atoms()) m.push_back(pos.at(a));
      out.add_term(m, c);
    }
    return out;
  };
  HopfTables t;
  t.name = A.name();
  t.field = A.field();
  const std::size_t n = b->size();
  t.mult.assign(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const Atom a = (*b)[i];
    t.names.push_back(A.atom_name(a));
    for (std::size_t j = 0; j < n; ++j) t.mult[i][j] = relabel(A.multiply(a, (*b)[j]));
    t.coproduct.push_back(relabel(coproduct(A, Vec::atom(a))));
    t.counit.push_back(A.counit(a));
    t.antipode.push_back(relabel(A.antipode(a)));
    t.antipode_inv.push_back(relabel(A.antipode_inv(a)));
  }
  t.unit = relabel(*u);
  return t;
}

HopfPtr dual_hopf(const MultiplierHopfAlgebra& A) {
  const HopfTables a = tables_of(A);
  const std::size_t n = a.mult.size();
  const Field F = a.field;
  HopfTables d;
  d.name = "dual(" + a.name + ")";
  d.field = F;
  for (const auto& s : a.names) d.names.push_back("p_" + s);
  d.mult.assign(n, std::vector<Vec>(n));
  d.coproduct.assign(n, Vec{});
  d.antipode.assign(n, Vec{});
  d.antipode_inv.assign(n, Vec{});
  for (std::size_t k = 0; k < n; ++k) {
    const Atom K = static_cast<Atom>(k);
    for (const auto& [l, c] : a.coproduct[k].terms())
      d.mult[static_cast<std::size_t>(l[0])][static_cast<std::size_t>(l[1])].add_term(Label{K}, c);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Scalar m = a.mult[i][j].coeff(Label{K});
        if (!m.is_zero()) d.coproduct[k].add_term(Label{static_cast<Atom>(i), static_cast<Atom>(j)}, m);
      }
    d.counit.push_back(a.unit.coeff(Label{K}) + F(0));
    for (std::size_t i = 0; i < n; ++i) {
      const Atom I = static_cast<Atom>(i);
      d.antipode[k].add_term(Label{I}, a.antipode[i].coeff(Label{K}));
      d.antipode_inv[k].add_term(Label{I}, a.antipode_inv[i].coeff(Label{K}));
    }
  }
  for (std::size_t k = 0; k < n; ++k) d.unit.add_term(Label{static_cast<Atom>(k)}, a.counit[k]);
  return std::make_shared<FiniteHopf>(std::move(d));
}

Scalar pair(const Vec& functional, const Vec& a) {
  Scalar s(0);
  for (const auto& [l, c] : a.terms()) s += c * functional.coeff(l);
  return s;
}

IntegralData compute_integrals(const MultiplierHopfAlgebra& A) {
  auto basis = A.basis();
  auto unit = A.unit();
  if (!basis || !unit) throw std::invalid_argument(A.name() + ": integrals are computed for finite-dimensional Hopf algebras");
  const Field F = A.field();
  std::vector<Label> unknowns;
  for (Atom a : *basis) unknowns.push_back(Label{a});

  // a t = eps(a) t, one equation per basis a and output coordinate m
  std::vector<Vec> rows;
  for (Atom a : *basis) {
    std::map<Label, Vec> eq;
    for (Atom k : *basis) {
      Vec img = A.multiply(a, k) - A.counit(a) * Vec::atom(k);
      for (const auto& [m, c] : img.terms()) eq[m].add_term(Label{k}, c);
    }
    for (auto& [m, r] : eq) rows.push_back(std::move(r));
  }
  auto ts = null_space(rows, unknowns);
  if (ts.empty()) throw std::runtime_error(A.name() + ": no cointegral");
  IntegralData d;
  d.t = ts.front() * F(1);

  // (id (x) phi)Delta(a) = phi(a) 1, plus phi(t) = 1
  rows.clear();
  std::vector<Scalar> rhs;
  for (Atom a : *basis) {
    std::map<Label, Vec> eq;
    for (const auto& [l, c] : coproduct(A, Vec::atom(a)).terms()) eq[Label{l[0]}].add_term(Label{l[1]}, c);
    for (const auto& [m, c] : unit->terms()) eq[m].add_term(Label{a}, -c);
    for (auto& [m, r] : eq) {
      rows.push_back(std::move(r));
      rhs.push_back(F(0));
    }
  }
  rows.push_back(d.t);
  rhs.push_back(F(1));
  auto phi = lin_solve(rows, rhs);
  if (!phi) throw std::runtime_error(A.name() + ": integral cannot be normalized against the cointegral");
  d.phi = *phi;
  return d;
}

std::optional<Witness> verify_integrals(const MultiplierHopfAlgebra& A, const IntegralData& d) {
  const Vec one = *A.unit();
  const auto atoms = A.basis().value();
  for (Atom a : atoms) {
    const Vec av = Vec::atom(a);
    Vec lhs = apply_legs(coproduct(A, av), 1, 2, [&](const Label& l) { return Vec(Label{}, pair(d.phi, Vec(l))); });
    if (auto w = expect_equal(lhs, pair(d.phi, av) * one, Witness{}.add("a", av).add("law", "(id(x)phi)Delta(a) = phi(a)1")))
      return w;
    if (auto w = expect_equal(mul(A, av, d.t), A.counit(a) * d.t, Witness{}.add("a", av).add("law", "a t = eps(a) t")))
      return w;
  }
  if (!(pair(d.phi, d.t) == Scalar(1)))
    return Witness{}.add("phi", d.phi).add("t", d.t).add("phi(t)", pair(d.phi, d.t).str());
  return std::nullopt;
}

// ---- automorphisms ----------------------------------------------------------

Vec HopfAutomorphism::operator()(const Vec& a) const {
  return extend(a, [&](const Label& l) { return fwd(single(l)); });
}

Vec HopfAutomorphism::inverse(const Vec& a) const {
  return extend(a, [&](const Label& l) { return bwd(single(l)); });
}

Vec HopfAutomorphism::on_legs(const Vec& x) const {
  return extend(x, [&](const Label& l) {
    Vec out(Label{}, Scalar(1));
    for (Atom a : l.atoms()) out = tensor(out, fwd(a));
    return out;
  });
}

HopfAutomorphism HopfAutomorphism::identity() {
  return {"id", [](Atom a) { return Vec::atom(a); }, [](Atom a) { return Vec::atom(a); }};
}

HopfAutomorphism compose(const HopfAutomorphism& f, const HopfAutomorphism& g) {
  if (f.name == "id") return g;
  if (g.name == "id") return f;
  return {f.name + "*" + g.name, [f, g](Atom a) { return f(g.fwd(a)); }, [f, g](Atom a) { return g.inverse(f.bwd(a)); }};
}

HopfAutomorphism inverse(const HopfAutomorphism& f) {
  if (f.name == "id") return f;
  return {"(" + f.name + ")^-1", f.bwd, f.fwd};
}

std::optional<Witness> verify_automorphism(const MultiplierHopfAlgebra& A, const HopfAutomorphism& f, std::uint64_t seed,
                                           std::size_t samples) {
  std::vector<std::pair<Vec, Vec>> pairs;
  if (auto b = A.basis())
    for (Atom x : *b)
      for (Atom y : *b) pairs.emplace_back(Vec::atom(x), Vec::atom(y));
  Rng rng = Rng::stream(seed, "automorphism:" + f.name);
  for (std::size_t i = 0; i < samples; ++i) pairs.emplace_back(random_element(A, rng), random_element(A, rng));

  for (const auto& [a, b] : pairs) {
    Witness ctx = Witness{}.add("automorphism", f.name).add("a", a).add("b", b);
    Witness w1 = ctx;
    if (auto w = expect_equal(f(mul(A, a, b)), mul(A, f(a), f(b)), w1.add("law", "f(ab) = f(a)f(b)"))) return w;
    Witness w2 = ctx;
    if (auto w = expect_equal(t1(A, f(a), f(b)), f.on_legs(t1(A, a, b)), w2.add("law", "T1(f a (x) f b) = (f(x)f)T1(a (x) b)")))
      return w;
    Witness w3 = ctx;
    if (auto w = expect_equal(f.inverse(f(a)), a, w3.add("law", "f^-1 f = id"))) return w;
    Witness w4 = ctx;
    if (auto w = expect_equal(f(f.inverse(a)), a, w4.add("law", "f f^-1 = id"))) return w;
  }
  return std::nullopt;
}

namespace {

Scalar parse_scalar(const std::string& s, const Field& F) {
  auto slash = s.find('/');
  long num = std::stol(s.substr(0, slash));
  long den = slash == std::string::npos ? 1 : std::stol(s.substr(slash + 1));
  return F.frac(num, den);
}

HopfAutomorphism lift(const MultiplierHopfAlgebra& A, const GroupAut& g) {
  const Field F = A.field();
  return {g.name, [g, F](Atom a) { return Vec::atom(g.fwd(a), F(1)); }, [g, F](Atom a) { return Vec::atom(g.inv(a), F(1)); }};
}

GroupPtr group_of(const MultiplierHopfAlgebra& A) {
  if (auto* f = dynamic_cast<const FunctionAlgebra*>(&A)) return f->group_ptr();
  if (auto* g = dynamic_cast<const GroupAlgebra*>(&A)) return g->group_ptr();
  return nullptr;
}

bool is_h4(const MultiplierHopfAlgebra& A) { return A.name() == "H4"; }

}  // namespace

HopfAutomorphism make_automorphism(const HopfPtr& A, const std::string& spec) {
  HopfAutomorphism f;
  if (spec == "id") return HopfAutomorphism::identity();
  if (auto G = group_of(*A)) {
    if (spec == "neg") {
      if (!G->abelian()) throw UnknownName("neg needs an abelian group");
      f = lift(*A, negation(G));
    } else if (spec.rfind("inner:", 0) == 0) {
      f = lift(*A, inner(G, std::stol(spec.substr(6))));
      f.name = spec;
    } else {
      throw UnknownName("unknown automorphism '" + spec + "' for " + A->name());
    }
  } else if (is_h4(*A)) {
    const Field F = A->field();
    if (spec.rfind("scale:", 0) == 0) {
      Scalar q = parse_scalar(spec.substr(6), F);
      if (q.is_zero()) throw AutomorphismError("scale factor must be nonzero", Witness{}.add("scale", q.str()));
      Scalar qi = q.inverse();
      auto scaled = [](Scalar s) {
        return [s](Atom a) { return a >= 2 ? Vec::atom(a, s) : Vec::atom(a); };
      };
      f = {spec, scaled(q), scaled(qi)};
    } else if (spec == "shift") {
      // x -> x + 1, gx -> gx + g: linear and invertible, not multiplicative
      f = {spec,
           [](Atom a) { return a == 2 ? Vec::atom(2) + Vec::atom(0) : a == 3 ? Vec::atom(3) + Vec::atom(1) : Vec::atom(a); },
           [](Atom a) { return a == 2 ? Vec::atom(2) - Vec::atom(0) : a == 3 ? Vec::atom(3) - Vec::atom(1) : Vec::atom(a); }};
    } else {
      throw UnknownName("unknown automorphism '" + spec + "' for " + A->name());
    }
  } else {
    throw UnknownName("unknown automorphism '" + spec + "' for " + A->name());
  }
  if (auto w = verify_automorphism(*A, f)) throw AutomorphismError(spec + " is not a Hopf automorphism of " + A->name(), *w);
  return f;
}

std::vector<std::string> automorphism_specs(const MultiplierHopfAlgebra& A) {
  std::vector<std::string> out{"id"};
  if (auto G = group_of(A)) {
    if (G->abelian()) {
      if (G->finite() && G->elements()->size() <= 2) return out;
      out.push_back("neg");
    } else if (auto e = G->elements()) {
      for (Atom g : *e)
        if (g != G->identity()) out.push_back("inner:" + std::to_string(g));
    } else {
      out.push_back("inner:1");
      out.push_back("inner:2");
    }
  } else if (is_h4(A)) {
    out.push_back("scale:-1");
    out.push_back("scale:2");
  }
  return out;
}

// ---- quasitriangular structures ---------------------------------------------

QTStructure qt_for_cyclic(const MultiplierHopfAlgebra& A, int n) {
  auto* ga = dynamic_cast<const GroupAlgebra*>(&A);
  if (!ga || !ga->group().finite() || ga->group().elements()->size() != static_cast<std::size_t>(n) || !ga->group().abelian())
    throw std::invalid_argument("qt_for_cyclic needs the group algebra of Z_" + std::to_string(n));
  const Field F = A.field();
  const auto p = F.characteristic();
  if (p != 0 && static_cast<std::uint64_t>(n) % p == 0) throw std::invalid_argument("n is not invertible in the field");
  auto pow = [](Scalar b, long e) {
    Scalar r(1);
    for (long i = 0; i < e; ++i) r *= b;
    return r;
  };
  auto primitive = [&](const Scalar& w) {
    if (!(pow(w, n) == Scalar(1))) return false;
    for (int k = 1; k < n; ++k)
      if (pow(w, k) == Scalar(1)) return false;
    return true;
  };
  std::optional<Scalar> omega;
  if (p == 0) {
    for (long c : {1L, -1L})
      if (primitive(F(c))) omega = F(c);
  } else {
    for (std::uint64_t c = 1; c < p && !omega; ++c)
      if (primitive(F(static_cast<long>(c)))) omega = F(static_cast<long>(c));
  }
  if (!omega) throw std::invalid_argument("no primitive " + std::to_string(n) + "-th root of unity in " + F.name());
  const Scalar ninv = F(n).inverse();
  const Scalar winv = omega->inverse();
  QTStructure q;
  q.name = "cyclic-" + std::to_string(n) + "(w=" + omega->str() + ")";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      q.R.add_term(Label{i, j}, ninv * pow(*omega, static_cast<long>(i) * j));
      q.R_inv.add_term(Label{i, j}, ninv * pow(winv, static_cast<long>(i) * j));
    }
  return q;
}

QTStructure qt_trivial(const MultiplierHopfAlgebra& A) {
  Vec one = *A.unit();
  return {"trivial", tensor(one, one), tensor(one, one)};
}

std::vector<QTCheck> qt_axioms(const MultiplierHopfAlgebra& A, const QTStructure& qt) {
  const Vec one = *A.unit();
  auto legs3 = [one](const Vec& R, std::size_t i, std::size_t j) {
    // R placed on legs i < j of a three-leg tensor, 1 elsewhere
    return extend(R, [&](const Label& l) {
      Vec out(Label{}, Scalar(1));
      for (std::size_t k = 0; k < 3; ++k) out = tensor(out, k == i ? Vec::atom(l[0]) : k == j ? Vec::atom(l[1]) : one);
      return out;
    });
  };
  std::vector<QTCheck> out;
  out.push_back({"qt-intertwines", "R Delta(a) = Delta^cop(a) R", [&A, qt]() -> std::optional<Witness> {
                   const auto atoms = A.basis().value();
                   for (Atom a : atoms) {
                     Vec d = coproduct(A, Vec::atom(a));
                     if (auto w = expect_equal(mul_legs(A, qt.R, d), mul_legs(A, flip(d), qt.R), Witness{}.add("a", Vec::atom(a))))
                       return w;
                   }
                   return std::nullopt;
                 }});
  out.push_back({"qt-fusion-left", "(Delta (x) id)R = R13 R23", [&A, qt, legs3]() {
                   Vec lhs = apply_legs(qt.R, 0, 1, [&](const Label& l) { return coproduct(A, Vec(l)); });
                   return expect_equal(lhs, mul_legs(A, legs3(qt.R, 0, 2), legs3(qt.R, 1, 2)));
                 }});
  out.push_back({"qt-fusion-right", "(id (x) Delta)R = R13 R12", [&A, qt, legs3]() {
                   Vec lhs = apply_legs(qt.R, 1, 2, [&](const Label& l) { return coproduct(A, Vec(l)); });
                   return expect_equal(lhs, mul_legs(A, legs3(qt.R, 0, 2), legs3(qt.R, 0, 1)));
                 }});
  out.push_back({"qt-invertible", "R R^-1 = R^-1 R = 1 (x) 1", [&A, qt, one]() -> std::optional<Witness> {
                   if (auto w = expect_equal(mul_legs(A, qt.R, qt.R_inv), tensor(one, one))) return w;
                   return expect_equal(mul_legs(A, qt.R_inv, qt.R), tensor(one, one));
                 }});
  return out;
}

// ---- registry ---------------------------------------------------------------

namespace {

class IdentityAntipode final : public MultiplierHopfAlgebra {
public:
  explicit IdentityAntipode(HopfPtr A) : A_(std::move(A)) {}
  std::string name() const override { return A_->name() + "[S=id]"; }
  Field field() const override { return A_->field(); }
  Vec multiply(Atom a, Atom b) const override { return A_->multiply(a, b); }
  std::optional<Vec> unit() const override { return A_->unit(); }
  Vec local_unit(std::span<const Vec> xs) const override { return A_->local_unit(xs); }
  std::optional<std::vector<Atom>> basis() const override { return A_->basis(); }
  Atom sample_atom(Rng& rng) const override { return A_->sample_atom(rng); }
  std::string atom_name(Atom a) const override { return A_->atom_name(a); }
  Vec t1(Atom a, Atom b) const override { return A_->t1(a, b); }
  Vec t2(Atom a, Atom b) const override { return A_->t2(a, b); }
  Vec t3(Atom a, Atom b) const override { return A_->t3(a, b); }
  Vec t4(Atom a, Atom b) const override { return A_->t4(a, b); }
  Scalar counit(Atom a) const override { return A_->counit(a); }
  Vec antipode(Atom a) const override { return Vec::atom(a); }
  Vec antipode_inv(Atom a) const override { return Vec::atom(a); }
  bool commutative() const override { return A_->commutative(); }
  bool cocommutative() const override { return A_->cocommutative(); }

private:
  HopfPtr A_;
};

}  // namespace

HopfPtr make_instance(const std::string& name, const Field& field) {
  if (name == "fun-Z") return std::make_shared<FunctionAlgebra>(integers(), field);
  if (name == "fun-Dinf") return std::make_shared<FunctionAlgebra>(infinite_dihedral(), field);
  if (name == "grp-S3") return std::make_shared<GroupAlgebra>(symmetric3(), field);
  if (name == "grp-Z2") return std::make_shared<GroupAlgebra>(cyclic(2), field);
  if (name.rfind("grp-Zn:", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(name.substr(7));
    } catch (const std::exception&) {
      throw UnknownName("bad cyclic order in '" + name + "'");
    }
    if (n < 1 || n > 64) throw UnknownName("cyclic order out of range in '" + name + "'");
    return std::make_shared<GroupAlgebra>(cyclic(n), field);
  }
  if (name == "sweedler-H4") return sweedler_h4(field);
  if (name.rfind("dual:", 0) == 0) {
    HopfPtr base = make_instance(name.substr(5), field);
    if (!base->is_finite() || !base->has_unit()) throw UnknownName("dual needs a finite-dimensional Hopf algebra: " + name);
    return dual_hopf(*base);
  }
  throw UnknownName("unknown instance '" + name + "'");
}

std::vector<std::string> instance_names() {
  return {"fun-Z", "fun-Dinf", "grp-S3", "grp-Z2", "grp-Zn:<n>", "sweedler-H4", "dual:<name>"};
}

HopfPtr with_identity_antipode(HopfPtr A) { return std::make_shared<IdentityAntipode>(std::move(A)); }

}  // namespace mhopf
