#pragma once

// Independent reference computations for the unit tests: plain permutation
// arithmetic, pointwise function evaluation, explicit Sweedler tables.

#include <array>
#include <vector>

#include "mhopf/element.hpp"

namespace oracle {

using Perm = std::array<int, 3>;

// Permutations of {0,1,2} in lexicographic order of their images.
inline std::vector<Perm> s3() {
  return {Perm{0, 1, 2}, Perm{0, 2, 1}, Perm{1, 0, 2}, Perm{1, 2, 0}, Perm{2, 0, 1}, Perm{2, 1, 0}};
}

inline int index_of(const Perm& p) {
  const auto all = s3();
  for (int i = 0; i < 6; ++i)
    if (all[static_cast<std::size_t>(i)] == p) return i;
  return -1;
}

// (p q)(i) = p(q(i))
inline int s3_mul(int a, int b) {
  const auto all = s3();
  const Perm& p = all[static_cast<std::size_t>(a)];
  const Perm& q = all[static_cast<std::size_t>(b)];
  return index_of(Perm{p[q[0]], p[q[1]], p[q[2]]});
}

inline int s3_inv(int a) {
  for (int b = 0; b < 6; ++b)
    if (s3_mul(a, b) == 0) return b;
  return -1;
}

// Delta(delta_n)(p, q) = [p + q = n] on Z, sliced by 1 (x) delta_m: the
// only surviving term is delta_{n-m} (x) delta_m, found by scanning a window.
inline mhopf::Vec fun_z_t1(long n, long m) {
  mhopf::Vec out;
  for (long p = -50; p <= 50; ++p)
    for (long q = -50; q <= 50; ++q)
      if (p + q == n && q == m) out.add_term(mhopf::Label{p, q}, 1);
  return out;
}

}  // namespace oracle
