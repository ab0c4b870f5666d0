#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mhopf/groups.hpp"
#include "mhopf/hopf.hpp"
#include "mhopf/laws.hpp"

namespace mhopf {

/// K(G): finitely supported functions on G, basis delta_g (atom g).
/// Unital exactly when G is finite.
class FunctionAlgebra final : public MultiplierHopfAlgebra {
public:
  FunctionAlgebra(GroupPtr g, Field field) : g_(std::move(g)), field_(field) {}

  const Group& group() const { return *g_; }
  GroupPtr group_ptr() const { return g_; }

  std::string name() const override { return "K(" + g_->name() + ")"; }
  Field field() const override { return field_; }
  Vec multiply(Atom a, Atom b) const override { return a == b ? Vec::atom(a, field_(1)) : Vec{}; }
  std::optional<Vec> unit() const override;
  Vec local_unit(std::span<const Vec> xs) const override;
  std::optional<std::vector<Atom>> basis() const override { return g_->elements(); }
  Atom sample_atom(Rng& rng) const override { return g_->sample(rng); }
  std::string atom_name(Atom a) const override { return "d" + g_->element_name(a); }

  Vec t1(Atom a, Atom b) const override;
  Vec t2(Atom a, Atom b) const override;
  Vec t3(Atom a, Atom b) const override;
  Vec t4(Atom a, Atom b) const override;
  Scalar counit(Atom a) const override { return field_(a == g_->identity() ? 1 : 0); }
  Vec antipode(Atom a) const override { return Vec::atom(g_->inv(a), field_(1)); }
  Vec antipode_inv(Atom a) const override { return Vec::atom(g_->inv(a), field_(1)); }
  bool commutative() const override { return true; }
  bool cocommutative() const override { return g_->abelian(); }

private:
  GroupPtr g_;
  Field field_;
};

/// KG: the group algebra, Delta(g) = g (x) g.
class GroupAlgebra final : public MultiplierHopfAlgebra {
public:
  GroupAlgebra(GroupPtr g, Field field) : g_(std::move(g)), field_(field) {}

  const Group& group() const { return *g_; }
  GroupPtr group_ptr() const { return g_; }

  std::string name() const override { return "K" + g_->name(); }
  Field field() const override { return field_; }
  Vec multiply(Atom a, Atom b) const override { return Vec::atom(g_->mul(a, b), field_(1)); }
  std::optional<Vec> unit() const override { return Vec::atom(g_->identity(), field_(1)); }
  std::optional<std::vector<Atom>> basis() const override { return g_->elements(); }
  Atom sample_atom(Rng& rng) const override { return g_->sample(rng); }
  std::string atom_name(Atom a) const override { return g_->element_name(a); }

  Vec t1(Atom a, Atom b) const override;
  Vec t2(Atom a, Atom b) const override;
  Vec t3(Atom a, Atom b) const override;
  Vec t4(Atom a, Atom b) const override;
  Scalar counit(Atom) const override { return field_(1); }
  Vec antipode(Atom a) const override { return Vec::atom(g_->inv(a), field_(1)); }
  Vec antipode_inv(Atom a) const override { return Vec::atom(g_->inv(a), field_(1)); }
  bool commutative() const override { return g_->abelian(); }
  bool cocommutative() const override { return true; }

private:
  GroupPtr g_;
  Field field_;
};

/// Structure constants of a finite-dimensional Hopf algebra on basis atoms
/// 0..n-1. Coproducts are two-leg vectors.
struct HopfTables {
  std::string name;
  Field field = Field::rationals();
  std::vector<std::string> names;
  std::vector<std::vector<Vec>> mult;  // mult[i][j] = a_i a_j
  std::vector<Vec> coproduct;
  std::vector<Scalar> counit;
  std::vector<Vec> antipode;      // empty: solved from the antipode equation
  std::vector<Vec> antipode_inv;  // empty: inverted from the antipode
  Vec unit;
};

/// Finite-dimensional Hopf algebra given by tables; the slices are
/// T1(a (x) b) = sum a_(1) (x) a_(2) b and so on.
class FiniteHopf final : public MultiplierHopfAlgebra {
public:
  explicit FiniteHopf(HopfTables t);

  const HopfTables& tables() const { return t_; }

  std::string name() const override { return t_.name; }
  Field field() const override { return t_.field; }
  Vec multiply(Atom a, Atom b) const override { return t_.mult.at(idx(a)).at(idx(b)); }
  std::optional<Vec> unit() const override { return t_.unit; }
  std::optional<std::vector<Atom>> basis() const override;
  std::string atom_name(Atom a) const override { return t_.names.at(idx(a)); }

  Vec t1(Atom a, Atom b) const override;
  Vec t2(Atom a, Atom b) const override;
  Vec t3(Atom a, Atom b) const override;
  Vec t4(Atom a, Atom b) const override;
  Scalar counit(Atom a) const override { return t_.counit.at(idx(a)); }
  Vec antipode(Atom a) const override { return t_.antipode.at(idx(a)); }
  Vec antipode_inv(Atom a) const override { return t_.antipode_inv.at(idx(a)); }
  bool commutative() const override { return commutative_; }
  bool cocommutative() const override { return cocommutative_; }

private:
  static std::size_t idx(Atom a) { return static_cast<std::size_t>(a); }

  HopfTables t_;
  bool commutative_ = false;
  bool cocommutative_ = false;
};

/// S as the convolution inverse of the identity: the unique linear map with
/// sum S(a_(1)) a_(2) = eps(a) 1, found by a linear solve. Throws if the
/// bialgebra has no antipode.
std::vector<Vec> solve_antipode(const HopfTables& t);

/// Sweedler's four-dimensional Hopf algebra on 1, g, x, gx (atoms 0..3).
/// Requires characteristic other than 2.
HopfPtr sweedler_h4(const Field& field);

/// Delta(a) for unital instances, read off the slice T1(a (x) 1).
Vec coproduct(const MultiplierHopfAlgebra& A, const Vec& a);
/// (Delta (x) id)Delta(a) for unital instances, as a three-leg tensor.
Vec coproduct2(const MultiplierHopfAlgebra& A, const Vec& a);

/// Leg-wise product of two tensors of equal arity.
Vec mul_legs(const Algebra& A, const Vec& x, const Vec& y);

/// Tables of a finite-dimensional unital instance, read through its slices.
HopfTables tables_of(const MultiplierHopfAlgebra& A);

/// The dual Hopf algebra on the dual basis p_0..p_{n-1}: product dual to
/// Delta, coproduct dual to the product, unit eps, counit p(1), S(p) = p o S.
HopfPtr dual_hopf(const MultiplierHopfAlgebra& A);

/// Functionals A -> K are vectors over the basis labels: phi(a_k) is the
/// coefficient of [k].
Scalar pair(const Vec& functional, const Vec& a);

struct IntegralData {
  Vec phi;  // left integral on A: (id (x) phi)Delta(a) = phi(a) 1
  Vec t;    // left cointegral in A: a t = eps(a) t
};

/// Solves the defining equations of both integrals and normalizes phi(t) = 1.
/// Throws std::runtime_error if no normalized pair exists.
IntegralData compute_integrals(const MultiplierHopfAlgebra& A);
/// Re-verifies both defining equations on every basis element.
std::optional<Witness> verify_integrals(const MultiplierHopfAlgebra& A, const IntegralData& d);

/// A comultiplication-respecting algebra automorphism of A.
struct HopfAutomorphism {
  std::string name;
  std::function<Vec(Atom)> fwd;
  std::function<Vec(Atom)> bwd;

  Vec operator()(const Vec& a) const;
  Vec inverse(const Vec& a) const;
  /// Apply to every leg of a tensor.
  Vec on_legs(const Vec& x) const;

  static HopfAutomorphism identity();
};

HopfAutomorphism compose(const HopfAutomorphism& f, const HopfAutomorphism& g);  // f o g
HopfAutomorphism inverse(const HopfAutomorphism& f);

class AutomorphismError : public std::invalid_argument {
public:
  AutomorphismError(const std::string& what, Witness w) : std::invalid_argument(what), witness(std::move(w)) {}
  Witness witness;
};

/// Algebra-map, Delta-compatibility and round-trip laws on sampled elements
/// (and all basis pairs when finite).
std::optional<Witness> verify_automorphism(const MultiplierHopfAlgebra& A, const HopfAutomorphism& f,
                                           std::uint64_t seed = 1, std::size_t samples = 40);

/// Builds the automorphism named by `spec` ("id", "neg", "inner:<g>",
/// "scale:<q>", "shift") and verifies it; throws AutomorphismError with a
/// witness when a law fails.
HopfAutomorphism make_automorphism(const HopfPtr& A, const std::string& spec);
/// Specs known to be valid for the instance.
std::vector<std::string> automorphism_specs(const MultiplierHopfAlgebra& A);

/// Invertible R in A (x) A for a finite-dimensional unital instance.
struct QTStructure {
  std::string name;
  Vec R;
  Vec R_inv;
};

/// R = n^-1 sum w^{ij} g^i (x) g^j on K Z_n, with w a primitive n-th root of
/// unity in the field. Throws if the field has none.
QTStructure qt_for_cyclic(const MultiplierHopfAlgebra& A, int n);
QTStructure qt_trivial(const MultiplierHopfAlgebra& A);

/// The quasitriangular axioms, each returning a witness on failure:
/// R Delta(a) = Delta^cop(a) R; (Delta (x) id)R = R13 R23;
/// (id (x) Delta)R = R13 R12; R R^-1 = R^-1 R = 1 (x) 1.
struct QTCheck {
  std::string id;
  std::string formula;
  std::function<std::optional<Witness>()> run;
};
std::vector<QTCheck> qt_axioms(const MultiplierHopfAlgebra& A, const QTStructure& qt);

class UnknownName : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// "fun-Z", "fun-Dinf", "grp-S3", "grp-Z2", "grp-Zn:<n>", "sweedler-H4",
/// "dual:<name>".
HopfPtr make_instance(const std::string& name, const Field& field);
std::vector<std::string> instance_names();

/// Same instance with S and S^-1 replaced by the identity.
HopfPtr with_identity_antipode(HopfPtr A);

}  // namespace mhopf
