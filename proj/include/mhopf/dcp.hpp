#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mhopf/gyd.hpp"

namespace mhopf {

/// Diagonal crossed product of the dual with A at (alpha, beta), for a
/// finite-dimensional unital instance on atoms 0..n-1:
///   (p >< a)(p' >< a') = p (alpha(a_(1)) > p' < S^-1 beta(a_(3))) >< a_(2) a'
/// with (x > q < y)(z) = q(y z x). Atom i*n + j is p_i >< a_j.
class CrossedProduct final : public Algebra {
public:
  CrossedProduct(HopfPtr base, AutoPair pair, Exec exec = Exec::parallel);

  const MultiplierHopfAlgebra& base() const { return *base_; }
  const HopfPtr& base_ptr() const { return base_; }
  const HopfPtr& dual_ptr() const { return dual_; }
  const AutoPair& pair() const { return pair_; }
  std::size_t n() const { return n_; }
  Atom atom(std::size_t i, std::size_t j) const { return static_cast<Atom>(i * n_ + j); }
  /// Embeddings p -> p >< 1 and a -> eps >< a.
  Vec from_dual(const Vec& p) const;
  Vec from_base(const Vec& a) const;

  std::string name() const override;
  Field field() const override { return base_->field(); }
  Vec multiply(Atom x, Atom y) const override { return table_.at(static_cast<std::size_t>(x)).at(static_cast<std::size_t>(y)); }
  std::optional<Vec> unit() const override { return unit_; }
  Vec local_unit(std::span<const Vec>) const override { return unit_; }
  std::optional<std::vector<Atom>> basis() const override;
  std::string atom_name(Atom x) const override;

  const std::vector<std::vector<Vec>>& table() const { return table_; }

private:
  HopfPtr base_;
  HopfPtr dual_;
  AutoPair pair_;
  std::size_t n_;
  std::vector<std::vector<Vec>> table_;
  Vec unit_;
};

/// Product p_i >< a_j times p_k >< a_l straight from the formula, without the table.
Vec crossed_product_formula(const MultiplierHopfAlgebra& A, const MultiplierHopfAlgebra& dual, const AutoPair& pair,
                            Atom x, Atom y);
/// Full multiplication table, row by row; the parallel variant splits rows
/// across threads and produces the same table.
std::vector<std::vector<Vec>> crossed_product_table(const MultiplierHopfAlgebra& A, const MultiplierHopfAlgebra& dual,
                                                    const AutoPair& pair, Exec exec);

/// Finite-dimensional module over an arbitrary algebra.
struct AlgebraModule {
  std::string name;
  AlgebraPtr R;
  std::vector<Label> basis;
  std::function<Vec(Atom, const Label&)> act_basis;

  Vec act(const Vec& r, const Vec& m) const;
};

/// (p >< a).m = p((a.m)_(1)) (a.m)_(0)
AlgebraModule yd_to_dcp_module(const GYDModule& V, const std::shared_ptr<const CrossedProduct>& D);
/// a.m = (eps >< a).m and Gamma(m)(1 (x) a') = (phi(. t_(2)) >< 1).m (x) S^-1(t_(1)) a'.
GYDModule dcp_module_to_yd(const AlgebraModule& M, const std::shared_ptr<const CrossedProduct>& D,
                           const IntegralData& integrals);
AlgebraModule regular_algebra_module(const AlgebraPtr& R);

/// Same action on every basis pair.
std::optional<Witness> same_algebra_module(const AlgebraModule& M, const AlgebraModule& N);
/// Same action and right slices on every pair of basis elements.
std::optional<Witness> same_gyd_structure(const GYDModule& V, const GYDModule& W);

/// Drinfel'd double D(A) at the identity pair as a Hopf algebra: counit
/// p(1) eps(a), coproduct found among the two leg orders of
/// (p_(1) >< a_(1)) (x) (p_(2) >< a_(2)) by checking multiplicativity, and
/// the antipode solved. Throws if neither order works.
struct DoubleHopf {
  HopfPtr hopf;
  std::string coproduct_convention;
};
DoubleHopf drinfeld_double(const HopfPtr& A);

/// Registered pairs for the correspondence: the identity pair plus the
/// twisted-adjoint pairs of gyd_fixtures.
std::vector<AutoPair> correspondence_pairs(const HopfPtr& A);

/// Integrals, associativity and unit of the crossed products.
void dcp_laws(LawRunner& run, const HopfPtr& A);
/// Both round trips for every fixture at every registered pair.
void correspondence_laws(LawRunner& run, const HopfPtr& A);

}  // namespace mhopf
