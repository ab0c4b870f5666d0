#include "mhopf/groups.hpp"

#include <array>
#include <stdexcept>

namespace mhopf {

Atom Group::sample(Rng& rng) const {
  auto e = elements();
  if (!e) throw std::logic_error(name() + ": no sampler");
  return (*e)[rng.below(e->size())];
}

namespace {

class Integers final : public Group {
public:
  std::string name() const override { return "Z"; }
  Atom identity() const override { return 0; }
  Atom mul(Atom g, Atom h) const override { return g + h; }
  Atom inv(Atom g) const override { return -g; }
  Atom sample(Rng& rng) const override { return rng.range(-6, 6); }
  bool abelian() const override { return true; }
};

class InfiniteDihedral final : public Group {
public:
  static Atom make(Atom k, Atom e) { return 2 * k + e; }
  static Atom rot(Atom g) { return g >> 1; }
  static Atom refl(Atom g) { return g & 1; }

  std::string name() const override { return "Dinf"; }
  Atom identity() const override { return 0; }
  // r^k s^e r^m s^f = r^(k + (-1)^e m) s^(e+f)
  Atom mul(Atom g, Atom h) const override {
    const Atom m = refl(g) ? -rot(h) : rot(h);
    return make(rot(g) + m, (refl(g) + refl(h)) & 1);
  }
  Atom inv(Atom g) const override { return refl(g) ? g : make(-rot(g), 0); }
  Atom sample(Rng& rng) const override { return make(rng.range(-4, 4), rng.range(0, 1)); }
  bool abelian() const override { return false; }
  std::string element_name(Atom g) const override {
    return "r^" + std::to_string(rot(g)) + (refl(g) ? "s" : "");
  }
};

class Cyclic final : public Group {
public:
  explicit Cyclic(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
  }
  std::string name() const override { return "Z" + std::to_string(n_); }
  Atom identity() const override { return 0; }
  Atom mul(Atom g, Atom h) const override { return (g + h) % n_; }
  Atom inv(Atom g) const override { return (n_ - g) % n_; }
  std::optional<std::vector<Atom>> elements() const override {
    std::vector<Atom> v(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) v[static_cast<std::size_t>(i)] = i;
    return v;
  }
  bool abelian() const override { return true; }
  std::string element_name(Atom g) const override { return g == 0 ? "e" : g == 1 ? "g" : "g^" + std::to_string(g); }

private:
  int n_;
};

using Perm = std::array<int, 3>;
constexpr std::array<Perm, 6> kPerms = {{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

Atom perm_index(const Perm& p) {
  for (std::size_t i = 0; i < kPerms.size(); ++i)
    if (kPerms[i] == p) return static_cast<Atom>(i);
  throw std::logic_error("not a permutation");
}

class Symmetric3 final : public Group {
public:
  std::string name() const override { return "S3"; }
  Atom identity() const override { return 0; }
  // (gh)(i) = g(h(i))
  Atom mul(Atom g, Atom h) const override {
    const Perm& a = kPerms[static_cast<std::size_t>(g)];
    const Perm& b = kPerms[static_cast<std::size_t>(h)];
    return perm_index({a[b[0]], a[b[1]], a[b[2]]});
  }
  Atom inv(Atom g) const override {
    const Perm& a = kPerms[static_cast<std::size_t>(g)];
    Perm r{};
    for (int i = 0; i < 3; ++i) r[a[i]] = i;
    return perm_index(r);
  }
  std::optional<std::vector<Atom>> elements() const override { return std::vector<Atom>{0, 1, 2, 3, 4, 5}; }
  bool abelian() const override { return false; }
  std::string element_name(Atom g) const override {
    const Perm& a = kPerms[static_cast<std::size_t>(g)];
    return "[" + std::to_string(a[0]) + std::to_string(a[1]) + std::to_string(a[2]) + "]";
  }
};

}  // namespace

GroupPtr integers() { return std::make_shared<Integers>(); }
GroupPtr infinite_dihedral() { return std::make_shared<InfiniteDihedral>(); }
GroupPtr cyclic(int n) { return std::make_shared<Cyclic>(n); }
GroupPtr symmetric3() { return std::make_shared<Symmetric3>(); }

GroupAut inner(const GroupPtr& g, Atom by) {
  const Atom inv = g->inv(by);
  return {"inner:" + std::to_string(by), [g, by, inv](Atom x) { return g->mul(g->mul(by, x), inv); },
          [g, by, inv](Atom x) { return g->mul(g->mul(inv, x), by); }};
}

GroupAut negation(const GroupPtr& g) {
  if (!g->abelian()) throw std::invalid_argument("inversion is an automorphism only of abelian groups");
  return {"neg", [g](Atom x) { return g->inv(x); }, [g](Atom x) { return g->inv(x); }};
}

}  // namespace mhopf
