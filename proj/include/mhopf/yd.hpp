#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mhopf/modules.hpp"

namespace mhopf {

/// Left module with an M_0-valued right coaction.
struct YDModule {
  std::string name;
  Module module;
  Coaction coaction;

  const HopfPtr& A() const { return module.A; }
};

/// Right-hand side of the compatibility condition,
///   a_(2) . v_(0) (x) a_(3) v_(1) S^-1(a_(1)) a',
/// evaluated as sum x . w (x) y over (S^-1 (x) i)T2(S(a') (x) a) = sum c (x) d,
/// Gamma(v)(1 (x) c) = sum w (x) f and T1(d (x) f) = sum x (x) y.
Vec yd_rhs(const YDModule& V, const Vec& a, const Vec& v, const Vec& a2);
/// Left-hand side (a.v)_(0) (x) (a.v)_(1) a'.
Vec yd_lhs(const YDModule& V, const Vec& a, const Vec& v, const Vec& a2);
/// The equivalent form (a_(2).v)_(0) (x) (a_(2).v)_(1) a_(1) a' against
/// a_(1).v_(0) (x) a_(2) v_(1) a', through T3(a (x) a') and T1(a (x) f).
Vec yd_alt_lhs(const YDModule& V, const Vec& a, const Vec& v, const Vec& a2);
Vec yd_alt_rhs(const YDModule& V, const Vec& a, const Vec& v, const Vec& a2);

/// Module, comodule and both compatibility forms.
void yd_laws(LawRunner& run, const std::string& prefix, const YDModule& V);

/// V (x) W: diagonal action, coaction v_(0) (x) w_(0) (x) w_(1) v_(1) a'.
YDModule yd_tensor(const YDModule& V, const YDModule& W);

/// C_{X,V}(x (x) v) = v_(0) (x) v_(1) . x, with v_(1) acting through a local
/// unit of x. Labels: x-legs then v-legs in, v-legs then x-legs out.
Vec braiding_c(const Module& X, const YDModule& V, const Vec& xv);
/// C^-1_{X,V}(v (x) x) = S(v_(1)) . x (x) v_(0).
Vec braiding_c_inv(const Module& X, const YDModule& V, const Vec& vx);

/// Centre object given by its component at the regular module:
/// c_A(a, v) = C_{A,V}(a (x) v) in V (x) A, and the inverse component
/// c_A_inv(v, a) = C^-1_{A,V}(v (x) a) in A (x) V.
struct HalfBraiding {
  std::string name;
  Module V;
  std::function<Vec(Atom, const Label&)> c_A;
  std::function<Vec(const Label&, Atom)> c_A_inv;

  Vec component(const Vec& a_v) const;
  Vec inverse_component(const Vec& v_a) const;
};

/// C_{X,V}(x (x) v) = (i (x) xbar)c_A(e (x) v) for a local unit e of x.
Vec half_braiding_at(const HalfBraiding& H, const Module& X, const Vec& xv);

void half_braiding_laws(LawRunner& run, const std::string& prefix, const HalfBraiding& H);

class HypothesisError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// G(V) = (V, C_{-,V}).
HalfBraiding functor_g(const YDModule& V);
/// F(H): Gamma(v)(1 (x) a) = c_A(a, v) and (1 (x) b)Gamma(v) read off the
/// inverse component. Only for unital or commutative instances, or
/// finite-dimensional carriers; throws HypothesisError otherwise.
YDModule functor_f(const HalfBraiding& H);

/// Hexagons, round trips, linearity and naturality of the braiding for X
/// against V (and V (x) W when given).
void braiding_laws(LawRunner& run, const std::string& prefix, const Module& X, const YDModule& V, const YDModule* W);
/// F(G(V)) = V and G(F(G(V))) = G(V) on sampled arguments.
void equivalence_laws(LawRunner& run, const std::string& prefix, const YDModule& V);
/// G(F(H)) = H.
void equivalence_laws(LawRunner& run, const std::string& prefix, const HalfBraiding& H);
/// (f (x) i)C_{X,V} = C_{X,W}(i (x) f) for a module and comodule map f : V -> W.
void morphism_transport_law(LawRunner& run, const std::string& id, const Module& X, const YDModule& V,
                            const YDModule& W, const std::function<Vec(const Vec&)>& f);

/// Adjoint module: a . v = a_(2) v S^-1(a_(1)), Gamma = Delta.
YDModule adjoint_yd(const HopfPtr& A);
/// K with counit action and Gamma(1) = 1 (x) 1.
YDModule trivial_yd(const HopfPtr& A);

/// One-dimensional object: a . 1 = chi(a) 1, Gamma(1) = 1 (x) z for a central
/// grouplike z of a unital instance.
YDModule character_yd(const HopfPtr& A, std::string name, std::function<Scalar(Atom)> chi, Vec z);

/// Registered objects of the instance, all passing yd_laws.
std::vector<YDModule> yd_fixtures(const HopfPtr& A);
/// Corrupted objects that must fail: left-regular action with grouplike
/// coaction (group algebras) and a coaction v (x) a a.
std::vector<YDModule> yd_controls(const HopfPtr& A);
/// Half-braidings built directly, not through G.
std::vector<HalfBraiding> half_braiding_fixtures(const HopfPtr& A);

/// K(G) objects from a G-graded space with a compatible representation:
/// delta_g . e_n = [g = deg n] e_n and Gamma(e_n)(1 (x) delta_k) = pi_k e_n (x) delta_k.
struct GradedRep {
  std::string name;
  std::optional<std::vector<Atom>> basis;
  std::function<Atom(Atom)> degree;
  std::function<Vec(Atom k, Atom n)> pi;  // single-atom labels
  std::function<Atom(Rng&)> sample;
};
YDModule graded_yd(const HopfPtr& A, const GradedRep& rep);

}  // namespace mhopf
