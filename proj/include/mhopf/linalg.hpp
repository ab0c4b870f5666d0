#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "mhopf/element.hpp"

namespace mhopf {

/// Dense row-major matrix over exact scalars.
using Matrix = std::vector<std::vector<Scalar>>;

/// In-place reduced row echelon form; returns pivot columns in row order.
std::vector<std::size_t> rref(Matrix& m);

/// Coordinates of `vectors` against `basis` (columns), one row per vector.
Matrix coordinates(std::span<const Vec> vectors, std::span<const Label> basis);

/// Sorted union of all labels appearing in `vectors`.
std::vector<Label> support(std::span<const Vec> vectors);

/// One exact solution of sum_l rows[i][l] x_l = rhs[i] (free unknowns set to
/// zero), as a vector over the unknown labels, or nullopt when inconsistent.
/// Throws std::invalid_argument if rows and rhs differ in length.
std::optional<Vec> lin_solve(std::span<const Vec> rows, std::span<const Scalar> rhs);

/// Basis of the solution space of the homogeneous system over `unknowns`.
/// Each basis vector has its own free unknown set to 1.
std::vector<Vec> null_space(std::span<const Vec> rows, std::span<const Label> unknowns);

std::size_t rank(std::span<const Vec> vectors);

/// The quotient of span(ambient) by span(relators), with a projection onto
/// the quotient basis {[0], [1], ...} and a section back into the ambient.
class QuotientSpace {
public:
  QuotientSpace(std::vector<Label> ambient, std::span<const Vec> relators);

  std::size_t dim() const { return free_cols_.size(); }
  std::size_t ambient_dim() const { return ambient_.size(); }
  const std::vector<Label>& ambient() const { return ambient_; }

  Vec project(const Vec& x) const;
  Vec section(Atom i) const;
  Vec section(const Vec& q) const;

private:
  std::vector<Label> ambient_;
  std::map<Label, std::size_t> column_;
  Matrix reduced_;                     // rref of the relator matrix, zero rows dropped
  std::vector<std::size_t> pivots_;    // pivot column of each reduced row
  std::vector<std::size_t> free_cols_; // non-pivot columns = quotient basis
  std::vector<long> free_index_;       // column -> quotient index or -1
};

/// Inverse of the linear map f: span(domain) -> span(codomain), given on
/// basis labels. Returns the inverse on codomain labels, or nullopt if f is
/// not bijective.
std::optional<std::map<Label, Vec>> invert_map(std::span<const Label> domain, std::span<const Label> codomain,
                                               const std::function<Vec(const Label&)>& f);

}  // namespace mhopf
