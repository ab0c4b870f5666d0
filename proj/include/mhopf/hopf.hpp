#pragma once

#include <memory>

#include "mhopf/algebra.hpp"

namespace mhopf {

/// Regular multiplier Hopf algebra. The comultiplication never exists as an
/// object; it is reachable only through the four slices
///
///   t1(a, b) = Delta(a)(1 (x) b)    t2(a, b) = (a (x) 1)Delta(b)
///   t3(a, b) = Delta(a)(b (x) 1)    t4(a, b) = (1 (x) a)Delta(b)
///
/// each a finite tensor with two-leg labels. Every Sweedler expression used
/// elsewhere is a composition of these with S, S^-1 and local units.
class MultiplierHopfAlgebra : public Algebra {
public:
  virtual Vec t1(Atom a, Atom b) const = 0;
  virtual Vec t2(Atom a, Atom b) const = 0;
  virtual Vec t3(Atom a, Atom b) const = 0;
  virtual Vec t4(Atom a, Atom b) const = 0;
  virtual Scalar counit(Atom a) const = 0;
  virtual Vec antipode(Atom a) const = 0;
  virtual Vec antipode_inv(Atom a) const = 0;

  /// Structural flags the instance knows about itself.
  virtual bool commutative() const = 0;
  virtual bool cocommutative() const = 0;
};

using HopfPtr = std::shared_ptr<const MultiplierHopfAlgebra>;

// Linear extensions. Elements of A carry one-leg labels; A (x) A two legs.
Vec t1(const MultiplierHopfAlgebra& A, const Vec& a, const Vec& b);
Vec t2(const MultiplierHopfAlgebra& A, const Vec& a, const Vec& b);
Vec t3(const MultiplierHopfAlgebra& A, const Vec& a, const Vec& b);
Vec t4(const MultiplierHopfAlgebra& A, const Vec& a, const Vec& b);
Scalar eps(const MultiplierHopfAlgebra& A, const Vec& a);
Vec S(const MultiplierHopfAlgebra& A, const Vec& a);
Vec S_inv(const MultiplierHopfAlgebra& A, const Vec& a);

/// k-th canonical map T_k on a two-leg tensor, k in 1..4.
Vec T(const MultiplierHopfAlgebra& A, int k, const Vec& x);
/// Inverse of T_k, expressed through the other slices and the antipode:
///   T1^-1(a(x)b) = (id(x)S) T4(S^-1 b (x) a)
///   T2^-1(a(x)b) = (S(x)id) T3(b (x) S^-1 a)
///   T3^-1(a(x)b) = flip (S^-1(x)id) T2(S a (x) b)
///   T4^-1(a(x)b) = flip (id(x)S^-1) T1(a (x) S b)
Vec T_inv(const MultiplierHopfAlgebra& A, int k, const Vec& x);

/// Apply f (x) g leg-wise to a two-leg tensor.
Vec apply_pair(const Vec& x, const std::function<Vec(const Vec&)>& f, const std::function<Vec(const Vec&)>& g);

/// The braiding operators on A (x) A, computed by their factorizations
///   T  = T4 (S (x) id) T3 (id (x) S^-1) flip,
///   T' = (id (x) S) T4 flip (id (x) S^-1) T4,
/// and their inverses obtained by inverting each factor.
Vec script_t(const MultiplierHopfAlgebra& A, const Vec& x);
Vec script_t_inv(const MultiplierHopfAlgebra& A, const Vec& x);
Vec script_t_prime(const MultiplierHopfAlgebra& A, const Vec& x);
Vec script_t_prime_inv(const MultiplierHopfAlgebra& A, const Vec& x);

/// Apply a two-leg operator to legs (i, i+1) of a three-leg tensor.
Vec on_legs(const Vec& x3, std::size_t i, const std::function<Vec(const Vec&)>& op);

/// Delta(c)(x (x) y) for a tensor x (x) y, computed as T1(cp (x) q) summed over
/// T1^-1(x (x) y) = sum p (x) q. `c_times` returns c p for a given p.
Vec delta_times(const MultiplierHopfAlgebra& A, const Vec& x_tensor_y, const std::function<Vec(const Vec&)>& c_times);

/// a (x) 1 (x) ... : tensor of an element with a pure label leg list.
inline Vec leg(Atom a) { return Vec::atom(a); }

}  // namespace mhopf
