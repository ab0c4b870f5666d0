#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mhopf/dcp.hpp"

namespace mhopf {

/// Algebra given by structure constants on atoms 0..n-1.
class TableAlgebra final : public Algebra {
public:
  TableAlgebra(std::string name, Field field, std::vector<std::string> names, std::vector<std::vector<Vec>> mult,
               std::optional<Vec> unit);

  std::string name() const override { return name_; }
  Field field() const override { return field_; }
  Vec multiply(Atom a, Atom b) const override { return mult_.at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(b)); }
  std::optional<Vec> unit() const override { return unit_; }
  Vec local_unit(std::span<const Vec> xs) const override;
  std::optional<std::vector<Atom>> basis() const override;
  std::string atom_name(Atom a) const override { return names_.at(static_cast<std::size_t>(a)); }

private:
  std::string name_;
  Field field_;
  std::vector<std::string> names_;
  std::vector<std::vector<Vec>> mult_;
  std::optional<Vec> unit_;
};

/// K[t]/(t^2) on 1, t.
AlgebraPtr dual_numbers(const Field& F);
/// The ground field as a one-dimensional algebra.
AlgebraPtr ground_field(const Field& F);

/// R with an action of A; module labels are single R atoms.
struct ModuleAlgebra {
  std::string name;
  AlgebraPtr R;
  Module action;
};

/// R with a coaction of A through slices.
struct ComoduleAlgebra {
  std::string name;
  AlgebraPtr R;
  HopfPtr A;
  Coaction coaction;
};

/// Module algebra and comodule algebra on one R, Yetter-Drinfel'd compatible.
struct YDModuleAlgebra {
  std::string name;
  AlgebraPtr R;
  YDModule V;

  ModuleAlgebra as_module() const { return {name, R, V.module}; }
  ComoduleAlgebra as_comodule() const { return {name, R, V.A(), V.coaction}; }
};

/// a.(x x') = (a_(1).x)(a_(2).x') through T1(a (x) e) for a local unit e of x',
/// (a.x)x' = a_(1).(x (S(a_(2)).x')) through (i (x) S)T1(a (x) S^-1 e),
/// x(a.x') = a_(2).((S^-1(a_(1)).x)x') through T2(S(e) (x) a), and a.1 = eps(a)1.
void module_algebra_laws(LawRunner& run, const std::string& prefix, const ModuleAlgebra& M);
/// Comodule laws, Gamma(x y)(1 (x) a) = x_(0) y_(0) (x) x_(1) y_(1) a and Gamma(1) = 1 (x) 1.
void comodule_algebra_laws(LawRunner& run, const std::string& prefix, const ComoduleAlgebra& C);
void yd_module_algebra_laws(LawRunner& run, const std::string& prefix, const YDModuleAlgebra& H);
/// x y = y_(0) (y_(1).x), with y_(1) acting through a local unit of x.
std::optional<Witness> a_commutative_at(const YDModuleAlgebra& H, const Vec& x, const Vec& y);
void a_commutative_law(LawRunner& run, const std::string& id, const YDModuleAlgebra& H);

/// rho(h) = tau(R)(h (x) 1): Gamma(h)(1 (x) a) = sum s_i.h (x) r_i a for R = sum r_i (x) s_i.
Coaction coaction_from_qt(const Module& M, const QTStructure& qt);
YDModuleAlgebra qt_yd_algebra(const ModuleAlgebra& M, const QTStructure& qt);
/// The braiding through the induced coaction against tau(R)(n (x) m) on X (x) V.
void qt_braiding_law(LawRunner& run, const std::string& id, const Module& X, const Module& V, const QTStructure& qt);

/// Module algebras of the instance (valid), and the left-regular action on
/// a group algebra (fails the multiplicativity law).
std::vector<ModuleAlgebra> module_algebra_fixtures(const HopfPtr& A);
std::vector<ModuleAlgebra> module_algebra_controls(const HopfPtr& A);
std::vector<ComoduleAlgebra> comodule_algebra_fixtures(const HopfPtr& A);
/// x -> x (x) x^2 on a group algebra: coassociative, counital, not multiplicative.
std::vector<ComoduleAlgebra> comodule_algebra_controls(const HopfPtr& A);
std::vector<YDModuleAlgebra> yd_algebra_fixtures(const HopfPtr& A);
/// QT structures registered for the instance: the trivial one, and the
/// cyclic one on group algebras of Z_n when the field has the root, each kept
/// only when it passes the quasitriangular axioms.
std::vector<QTStructure> qt_structures(const HopfPtr& A);

/// Object of H-Q^A: a Yetter-Drinfel'd module M with an action of H such that
///   a.(h -> m) = (a_(1).h) -> (a_(2).m),
///   Gamma(h -> m)(1 (x) a') = h_(0) -> m_(0) (x) m_(1) h_(1) a'.
/// Nested tensor products over H remember how their elements sit in the flat
/// tensor product of their factors.
struct YDHAModule {
  std::string name;
  std::shared_ptr<const YDModuleAlgebra> H;
  YDModule M;
  std::function<Vec(Atom, const Label&)> hact;
  std::size_t flat_legs = 0;
  std::function<Vec(const Vec&)> flatten;
  std::function<Vec(const Vec&)> unflatten;
  // Set on tensor products over H: representatives in the tensor product of
  // the two factors, whose left factor has left_legs legs.
  std::size_t left_legs = 0;
  std::function<Vec(const Vec&)> lift;
  std::function<Vec(const Vec&)> project;

  Vec act_h(const Vec& h, const Vec& m) const;
  std::size_t legs() const { return M.module.legs; }
  const std::vector<Label>& basis() const { return *M.module.basis; }
};

/// H acting on itself by multiplication.
YDHAModule hq_regular(const std::shared_ptr<const YDModuleAlgebra>& H);
/// V with h -> v = eps-free scalar action: only for H = K.
YDHAModule hq_scalar(const std::shared_ptr<const YDModuleAlgebra>& H, const YDModule& V);
/// H (x) V with h -> (h' (x) v) = h h' (x) v.
YDHAModule hq_free(const std::shared_ptr<const YDModuleAlgebra>& H, const YDModule& V);
/// V on which t acts by zero: H = K[t]/(t^2) only.
YDHAModule hq_augmented(const std::shared_ptr<const YDModuleAlgebra>& H, const YDModule& V);

/// H-module law, the two compatibilities and 1 -> m = m.
void hq_laws(LawRunner& run, const std::string& prefix, const YDHAModule& M);

/// m <- h = h_(0) -> (h_(1).m). Throws HypothesisError unless H is
/// A-commutative on its whole basis.
std::function<Vec(const Vec&, const Vec&)> right_h_action(const YDHAModule& M);
/// (h -> m) <- h' = h -> (m <- h').
void bimodule_law(LawRunner& run, const std::string& id, const YDHAModule& M);

/// M (x)_H N: M (x) N modulo m <- h (x) n - m (x) h -> n, with the action,
/// coaction and H-action of the representatives. Requires finite carriers and
/// a finite unital A-commutative H.
YDHAModule tensor_over_h(const YDHAModule& M, const YDHAModule& N);
/// Every structure maps the balancing relators into the relator span.
void relator_stability_law(LawRunner& run, const std::string& id, const YDHAModule& M, const YDHAModule& N);

/// Unit isomorphisms M (x)_H H = M = H (x)_H M, the associator and the
/// pentagon on the given objects.
void hq_monoidal_laws(LawRunner& run, const std::vector<YDHAModule>& objects);

std::shared_ptr<const YDModuleAlgebra> hq_algebra(const HopfPtr& A);
/// Registered objects over hq_algebra(A).
std::vector<YDHAModule> hq_fixtures(const HopfPtr& A);
/// h -> m replaced by 2 h -> m.
std::vector<YDHAModule> hq_controls(const HopfPtr& A);

/// H # D with (h # d)(h' # d') = h (d_(1).h') # d_(2) d' for a finite
/// D-module algebra H. Atom i*dim(D) + j is h_i # d_j. Throws if the action
/// fails the module-algebra laws on the basis.
class SmashProduct final : public Algebra {
public:
  SmashProduct(ModuleAlgebra H, HopfPtr D);

  std::string name() const override;
  Field field() const override { return D_->field(); }
  Vec multiply(Atom x, Atom y) const override;
  std::optional<Vec> unit() const override;
  std::optional<std::vector<Atom>> basis() const override;
  std::string atom_name(Atom x) const override;

private:
  ModuleAlgebra H_;
  HopfPtr D_;
  std::size_t nh_, nd_;
};

/// The D(A)-module algebra of a YD module algebra on a finite-dimensional
/// unital instance, through the correspondence.
ModuleAlgebra double_module_algebra(const YDModuleAlgebra& H, const DoubleHopf& D);
/// Smash product checks: associativity, and the H-Q^A objects as modules over
/// H # D(A) through (h # d).m = h -> (d.m).
void smash_laws(LawRunner& run, const HopfPtr& A);

}  // namespace mhopf
