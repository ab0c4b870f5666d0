#pragma once

#include "mhopf/hopf.hpp"
#include "mhopf/laws.hpp"

namespace mhopf {

/// Sliced coassociativity, counit, antipode, S bijectivity, T_k round trips,
/// T o T2 = T4, associativity, non-degeneracy, local units, Delta
/// multiplicative and the standard antipode consequences.
void mha_axiom_laws(LawRunner& run, const MultiplierHopfAlgebra& A);

/// Braid equations for T and T', inverse round trips, the flip
/// specializations, and (unital finite instances) agreement of the
/// factorized operators with their Sweedler forms.
void braid_laws(LawRunner& run, const MultiplierHopfAlgebra& A);

/// Sweedler forms through the materialized Delta of a unital instance:
///   T(a (x) b)     = b_(2) (x) a S(b_(1)) b_(3)
///   T'(a (x) b)    = b_(1) (x) S(b_(2)) a b_(3)
///   T^-1(a (x) b)  = b S^-1(a_(3)) a_(1) (x) a_(2)
///   T'^-1(a (x) b) = a_(3) b S^-1(a_(2)) (x) a_(1)
Vec script_t_sweedler(const MultiplierHopfAlgebra& A, const Vec& a, const Vec& b);
Vec script_t_prime_sweedler(const MultiplierHopfAlgebra& A, const Vec& a, const Vec& b);
Vec script_t_inv_sweedler(const MultiplierHopfAlgebra& A, const Vec& a, const Vec& b);
Vec script_t_prime_inv_sweedler(const MultiplierHopfAlgebra& A, const Vec& a, const Vec& b);

}  // namespace mhopf
