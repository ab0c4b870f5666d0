#pragma once

#include <string>
#include <vector>

#include "mhopf/instances.hpp"
#include "mhopf/yd.hpp"

namespace mhopf {

/// Element (alpha, beta) of Aut(A) x Aut(A).
struct AutoPair {
  HopfAutomorphism alpha = HopfAutomorphism::identity();
  HopfAutomorphism beta = HopfAutomorphism::identity();

  std::string name() const { return "(" + alpha.name + ", " + beta.name + ")"; }
};

/// (alpha, beta) # (gamma, delta) = (alpha gamma, delta gamma^-1 beta gamma)
AutoPair pair_product(const AutoPair& p, const AutoPair& q);
/// (alpha^-1, alpha beta^-1 alpha^-1)
AutoPair pair_inverse(const AutoPair& p);
AutoPair make_pair(const HopfPtr& A, const std::string& alpha, const std::string& beta);

/// f == g on every basis atom (finite) or on sampled atoms.
std::optional<Witness> same_automorphism(const MultiplierHopfAlgebra& A, const HopfAutomorphism& f,
                                         const HopfAutomorphism& g, Rng& rng);
std::optional<Witness> same_pair(const MultiplierHopfAlgebra& A, const AutoPair& p, const AutoPair& q, Rng& rng);

/// Module with an M_r-valued coaction, compatible at `pair`.
struct GYDModule {
  std::string name;
  Module module;
  Coaction coaction;
  AutoPair pair;

  const HopfPtr& A() const { return module.A; }
};

GYDModule as_gyd(const YDModule& V);

/// a_(2).v_(0) (x) beta(a_(3)) v_(1) alpha(S^-1(a_(1))) a', through
/// (alpha (x) i)(S^-1 (x) i)T2(S(alpha^-1 a') (x) a) = sum c (x) d,
/// Gamma(v)(1 (x) c) = sum w (x) f and (i (x) beta)T1(d (x) beta^-1 f).
Vec gyd_rhs(const GYDModule& V, const Vec& a, const Vec& v, const Vec& a2);
Vec gyd_lhs(const GYDModule& V, const Vec& a, const Vec& v, const Vec& a2);

/// Module, comodule and twisted compatibility laws.
void gyd_laws(LawRunner& run, const std::string& prefix, const GYDModule& V);

/// V (x) W at (alpha, beta) # (gamma, delta):
///   a.(v (x) w) = gamma(a_(1)).v (x) gamma^-1 beta gamma(a_(2)).w,
///   coaction v_(0) (x) w_(0) (x) w_(1) v_(1) a'.
GYDModule gyd_tensor(const GYDModule& V, const GYDModule& W);
/// ^(alpha, beta)W for W at (gamma, delta): a -> w = gamma^-1 beta gamma alpha^-1(a).w,
/// coaction w_(0) (x) alpha beta^-1(w_(1)) a', at the conjugated pair.
GYDModule crossed_functor(const AutoPair& p, const GYDModule& W);

/// C_{V,W}(v (x) w) = w_(0) (x) beta^-1(w_(1)).v in ^V W (x) V.
Vec gyd_braiding(const GYDModule& V, const GYDModule& W, const Vec& vw);
/// Inverse of the braiding on ^V W (x) V: the closed form
/// beta^-1(S(w_(1))).v (x) w_(0) when W has a left slice, otherwise solved
/// on the finite bases. Throws if neither applies or C is singular.
std::function<Vec(const Vec&)> gyd_braiding_inverse(const GYDModule& V, const GYDModule& W);

/// Nontrivial pairs built from the instance's registered automorphisms.
std::vector<AutoPair> twisted_pairs(const HopfPtr& A);
/// Registered objects at the identity pair and at nontrivial pairs.
std::vector<GYDModule> gyd_fixtures(const HopfPtr& A);
/// Twisted adjoint: a.v = beta(a_(2)) v alpha(S^-1(a_(1))), Gamma = Delta.
GYDModule twisted_adjoint(const HopfPtr& A, const AutoPair& p);
/// A fixture checked against the wrong pair.
std::vector<GYDModule> gyd_controls(const HopfPtr& A);

/// Pair-group laws on the registered automorphisms.
void pair_group_laws(LawRunner& run, const HopfPtr& A);
/// Tensor, crossing and braiding laws of the T-category on the fixtures.
void t_category_laws(LawRunner& run, const std::vector<GYDModule>& fixtures);

}  // namespace mhopf
