#include "mhopf/hopf.hpp"

#include <stdexcept>

namespace mhopf {

namespace {

template <class Slice>
Vec slice2(const Vec& a, const Vec& b, Slice s) {
  return extend2(a, b, [&](const Label& x, const Label& y) { return s(single(x), single(y)); });
}

// Each T_k applied to a two-leg tensor, term by term.
template <class Slice>
Vec on_pairs(const Vec& x, Slice s) {
  Vec out;
  for (const auto& [l, c] : x.terms()) {
    if (l.size() != 2) throw std::invalid_argument("expected a two-leg tensor, got " + l.str());
    out.axpy(c, s(l[0], l[1]));
  }
  return out;
}

}  // namespace

Vec t1(const MultiplierHopfAlgebra& A, const Vec& a, const Vec& b) {
  return slice2(a, b, [&](Atom x, Atom y) { return A.t1(x, y); });
}
Vec t2(const MultiplierHopfAlgebra& A, const Vec& a, const Vec& b) {
  return slice2(a, b, [&](Atom x, Atom y) { return A.t2(x, y); });
}
Vec t3(const MultiplierHopfAlgebra& A, const Vec& a, const Vec& b) {
  return slice2(a, b, [&](Atom x, Atom y) { return A.t3(x, y); });
}
Vec t4(const MultiplierHopfAlgebra& A, const Vec& a, const Vec& b) {
  return slice2(a, b, [&](Atom x, Atom y) { return A.t4(x, y); });
}

Scalar eps(const MultiplierHopfAlgebra& A, const Vec& a) {
  Scalar s(0);
  for (const auto& [l, c] : a.terms()) s += c * A.counit(single(l));
  return s;
}

Vec S(const MultiplierHopfAlgebra& A, const Vec& a) {
  return extend(a, [&](const Label& l) { return A.antipode(single(l)); });
}

Vec S_inv(const MultiplierHopfAlgebra& A, const Vec& a) {
  return extend(a, [&](const Label& l) { return A.antipode_inv(single(l)); });
}

Vec T(const MultiplierHopfAlgebra& A, int k, const Vec& x) {
  switch (k) {
    case 1: return on_pairs(x, [&](Atom a, Atom b) { return A.t1(a, b); });
    case 2: return on_pairs(x, [&](Atom a, Atom b) { return A.t2(a, b); });
    case 3: return on_pairs(x, [&](Atom a, Atom b) { return A.t3(a, b); });
    case 4: return on_pairs(x, [&](Atom a, Atom b) { return A.t4(a, b); });
    default: throw std::invalid_argument("T_k needs k in 1..4");
  }
}

Vec T_inv(const MultiplierHopfAlgebra& A, int k, const Vec& x) {
  switch (k) {
    case 1:
      return on_pairs(x, [&](Atom a, Atom b) {
        Vec y = t4(A, S_inv(A, leg(b)), leg(a));
        return apply_legs(y, 1, 2, [&](const Label& l) { return A.antipode(single(l)); });
      });
    case 2:
      return on_pairs(x, [&](Atom a, Atom b) {
        Vec y = t3(A, leg(b), S_inv(A, leg(a)));
        return apply_legs(y, 0, 1, [&](const Label& l) { return A.antipode(single(l)); });
      });
    case 3:
      return on_pairs(x, [&](Atom a, Atom b) {
        Vec y = t2(A, S(A, leg(a)), leg(b));
        return flip(apply_legs(y, 0, 1, [&](const Label& l) { return A.antipode_inv(single(l)); }));
      });
    case 4:
      return on_pairs(x, [&](Atom a, Atom b) {
        Vec y = t1(A, leg(a), S(A, leg(b)));
        return flip(apply_legs(y, 1, 2, [&](const Label& l) { return A.antipode_inv(single(l)); }));
      });
    default: throw std::invalid_argument("T_k needs k in 1..4");
  }
}

Vec apply_pair(const Vec& x, const std::function<Vec(const Vec&)>& f, const std::function<Vec(const Vec&)>& g) {
  Vec out;
  for (const auto& [l, c] : x.terms()) {
    if (l.size() != 2) throw std::invalid_argument("expected a two-leg tensor, got " + l.str());
    out.axpy(c, tensor(f(leg(l[0])), g(leg(l[1]))));
  }
  return out;
}

namespace {

Vec id(const Vec& v) { return v; }

}  // namespace

Vec script_t(const MultiplierHopfAlgebra& A, const Vec& x) {
  auto s = [&](const Vec& v) { return S(A, v); };
  auto si = [&](const Vec& v) { return S_inv(A, v); };
  Vec y = apply_pair(flip(x), id, si);
  y = T(A, 3, y);
  y = apply_pair(y, s, id);
  return T(A, 4, y);
}

Vec script_t_inv(const MultiplierHopfAlgebra& A, const Vec& x) {
  auto s = [&](const Vec& v) { return S(A, v); };
  auto si = [&](const Vec& v) { return S_inv(A, v); };
  Vec y = T_inv(A, 4, x);
  y = apply_pair(y, si, id);
  y = T_inv(A, 3, y);
  y = apply_pair(y, id, s);
  return flip(y);
}

Vec script_t_prime(const MultiplierHopfAlgebra& A, const Vec& x) {
  auto s = [&](const Vec& v) { return S(A, v); };
  auto si = [&](const Vec& v) { return S_inv(A, v); };
  Vec y = T(A, 4, x);
  y = apply_pair(y, id, si);
  y = T(A, 4, flip(y));
  return apply_pair(y, id, s);
}

Vec script_t_prime_inv(const MultiplierHopfAlgebra& A, const Vec& x) {
  auto s = [&](const Vec& v) { return S(A, v); };
  auto si = [&](const Vec& v) { return S_inv(A, v); };
  Vec y = apply_pair(x, id, si);
  y = T_inv(A, 4, y);
  y = flip(y);
  y = apply_pair(y, id, s);
  return T_inv(A, 4, y);
}

Vec on_legs(const Vec& x3, std::size_t i, const std::function<Vec(const Vec&)>& op) {
  return apply_legs(x3, i, i + 2, [&](const Label& l) { return op(Vec(l)); });
}

Vec delta_times(const MultiplierHopfAlgebra& A, const Vec& x_tensor_y, const std::function<Vec(const Vec&)>& c_times) {
  Vec pq = T_inv(A, 1, x_tensor_y);
  Vec out;
  for (const auto& [l, c] : pq.terms()) out.axpy(c, t1(A, c_times(leg(l[0])), leg(l[1])));
  return out;
}

}  // namespace mhopf
