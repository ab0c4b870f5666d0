#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mhopf/algebra.hpp"

namespace mhopf {

/// Discrete group on normal-form atoms.
class Group {
public:
  virtual ~Group() = default;
  virtual std::string name() const = 0;
  virtual Atom identity() const = 0;
  virtual Atom mul(Atom g, Atom h) const = 0;
  virtual Atom inv(Atom g) const = 0;
  /// All elements when finite, in atom order.
  virtual std::optional<std::vector<Atom>> elements() const { return std::nullopt; }
  /// Draw from a window around the identity (infinite groups).
  virtual Atom sample(Rng& rng) const;
  virtual bool abelian() const = 0;
  virtual std::string element_name(Atom g) const { return std::to_string(g); }

  bool finite() const { return elements().has_value(); }
};

using GroupPtr = std::shared_ptr<const Group>;

/// The integers under addition; atom n is n.
GroupPtr integers();
/// Infinite dihedral group <r, s | s^2 = e, s r s = r^-1>; r^k s^e is atom 2k + e.
GroupPtr infinite_dihedral();
/// Cyclic group Z_n; atom i is g^i.
GroupPtr cyclic(int n);
/// Permutations of {0,1,2}, numbered in lexicographic order of their images.
GroupPtr symmetric3();

/// Group automorphism given by images of every element (finite groups) or
/// by a formula.
struct GroupAut {
  std::string name;
  std::function<Atom(Atom)> fwd;
  std::function<Atom(Atom)> inv;
};

GroupAut inner(const GroupPtr& g, Atom by);
GroupAut negation(const GroupPtr& g);

}  // namespace mhopf
