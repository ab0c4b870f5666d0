#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mhopf/hopf.hpp"
#include "mhopf/laws.hpp"

namespace mhopf {

/// Unital left A-module on a basis of labels with a fixed number of legs.
struct Module {
  std::string name;
  HopfPtr A;
  std::size_t legs = 1;
  std::optional<std::vector<Label>> basis;
  std::function<Vec(Atom, const Label&)> act_basis;
  /// e in A with e . v = v.
  std::function<Vec(const Label&)> local_unit;
  std::function<Label(Rng&)> sample_label;

  Vec act(const Vec& a, const Vec& v) const;
  /// One local unit for every label of v.
  Vec unit_for(const Vec& v) const;
  Vec sample(Rng& rng) const;
  bool finite() const { return basis.has_value(); }
};

/// Right coaction through slices:
///   slice_r(v, a) = Gamma(v)(1 (x) a),  slice_l(v, a) = (1 (x) a)Gamma(v),
/// both with labels v-legs + 1. slice_l is empty for coactions that only
/// take values in M_r(V (x) A).
struct Coaction {
  std::string name;
  std::function<Vec(const Label&, Atom)> slice_r;
  std::function<Vec(const Label&, Atom)> slice_l;

  bool has_left() const { return static_cast<bool>(slice_l); }
  Vec right(const Vec& v, const Vec& a) const;
  Vec left(const Vec& v, const Vec& a) const;
};

/// A acting on itself by left multiplication.
Module regular_module(const HopfPtr& A);
/// The ground field with a . 1 = eps(a) 1; single basis label [0].
Module trivial_module(const HopfPtr& A);
/// An element e of A with eps(e) = 1 that is a local unit for itself.
Vec counit_unit(const MultiplierHopfAlgebra& A);
/// X (x) Y with a . (x (x) y) = a_(1) . x (x) a_(2) . y, computed as
/// sum p . x (x) q . y over T1(a (x) e_y) = sum p (x) q.
Module tensor_module(const Module& X, const Module& Y);

/// f . x = (f e) . x for a local unit e of x.
Vec extend_action(const Module& X, const Multiplier& f, const Vec& x);
/// Same through a caller-supplied local unit; used to check independence of
/// the decomposition.
Vec extend_action_with(const Module& X, const Multiplier& f, const Vec& x, const Vec& e);

/// Element of an extended module: a left-kind map rho with
/// rho(a a') = a . rho(a'), a right-kind map lam with lam(a a') = lam(a) . a',
/// or a compatible pair.
struct ExtendedElement {
  enum class Kind { left, right, bimodule };
  Kind kind = Kind::left;
  std::function<Vec(const Vec&)> rho;
  std::function<Vec(const Vec&)> lam;
};

/// rho_x(a) = a . x
ExtendedElement embed_rho(const Module& X, const Vec& x);
/// (a . rho)(a') = rho(a' a)
ExtendedElement act_extended(const MultiplierHopfAlgebra& A, const Vec& a, const ExtendedElement& y);

/// Bimodule structure used to state the extended-module laws.
struct BimoduleOps {
  std::function<Vec(const Vec&, const Vec&)> mul;
  std::function<Vec(const Vec& a, const Vec& x)> left;
  std::function<Vec(const Vec& x, const Vec& a)> right;
};

/// The left-kind, right-kind and pair laws of y at the sampled a, a'.
std::optional<Witness> check_extended(const ExtendedElement& y, const BimoduleOps& ops, const Vec& a, const Vec& a2);

/// V (x) A as an A-bimodule by multiplication on the last leg.
BimoduleOps last_leg_bimodule(const MultiplierHopfAlgebra& A, std::size_t v_legs);

/// Gamma(v) as an element of M_0(V (x) A): lam = slice_r, rho = slice_l.
ExtendedElement coaction_element(const Coaction& c, const Vec& v);

/// Factorization Gamma(v) = sum_i v_i (x) m_i with m_i in M(A), read off the
/// slices of a coaction on a finite-dimensional carrier.
struct Factorization {
  Label v;
  std::vector<std::pair<Label, Multiplier>> terms;
};
std::vector<Factorization> factor_coaction(const Module& V, const Coaction& c);

/// Module laws: associativity, unitality, non-degeneracy.
void module_laws(LawRunner& run, const std::string& prefix, const Module& X);
/// Comodule laws: right-module map, sliced coassociativity, counit, and the
/// M_0 pair compatibility when slice_l is present.
void comodule_laws(LawRunner& run, const std::string& prefix, const Module& V, const Coaction& c);

/// Extension of the action to M(A), the embedding x -> rho_x and A.Y in X.
void extended_module_laws(LawRunner& run, const std::string& prefix, const Module& X);
/// Gamma(v) as an extended element, and its factorization through M(A) on
/// finite carriers.
void extended_coaction_laws(LawRunner& run, const std::string& prefix, const Module& V, const Coaction& c);

/// Two-leg helper: concatenates a module label and an algebra atom.
inline Label with_leg(const Label& v, Atom a) {
  Label l = v;
  l.push_back(a);
  return l;
}

}  // namespace mhopf
