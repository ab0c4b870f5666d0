#include "mhopf/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mhopf {

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Scalar inv = m[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<Label> support(std::span<const Vec> vectors) {
  std::set<Label> s;
  for (const auto& v : vectors)
    for (const auto& [l, c] : v.terms()) s.insert(l);
  return {s.begin(), s.end()};
}

Matrix coordinates(std::span<const Vec> vectors, std::span<const Label> basis) {
  std::map<Label, std::size_t> col;
  for (std::size_t j = 0; j < basis.size(); ++j) col.emplace(basis[j], j);
  Matrix m(vectors.size(), std::vector<Scalar>(basis.size(), Scalar(0)));
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (const auto& [l, c] : vectors[i].terms()) {
      auto it = col.find(l);
      if (it == col.end()) throw std::invalid_argument("vector has a label outside the basis: " + l.str());
      m[i][it->second] = c;
    }
  return m;
}

std::optional<Vec> lin_solve(std::span<const Vec> rows, std::span<const Scalar> rhs) {
  if (rows.size() != rhs.size()) throw std::invalid_argument("lin_solve: rows and rhs differ in length");
  std::vector<Label> unknowns = support(rows);
  Matrix m = coordinates(rows, unknowns);
  const std::size_t n = unknowns.size();
  for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(rhs[i]);
  if (m.empty()) return Vec{};
  auto pivots = rref(m);
  Vec x;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == n) return std::nullopt;  // 0 = nonzero
    x.add_term(unknowns[pivots[r]], m[r][n]);
  }
  return x;
}

std::vector<Vec> null_space(std::span<const Vec> rows, std::span<const Label> unknowns) {
  Matrix m = coordinates(rows, unknowns);
  const std::size_t n = unknowns.size();
  std::vector<std::size_t> pivots = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(unknowns[f]);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (!m[r][f].is_zero()) v.add_term(unknowns[pivots[r]], -m[r][f]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(std::span<const Vec> vectors) {
  auto basis = support(vectors);
  Matrix m = coordinates(vectors, basis);
  return rref(m).size();
}

QuotientSpace::QuotientSpace(std::vector<Label> ambient, std::span<const Vec> relators) : ambient_(std::move(ambient)) {
  for (std::size_t j = 0; j < ambient_.size(); ++j) column_.emplace(ambient_[j], j);
  reduced_ = coordinates(relators, ambient_);
  pivots_ = rref(reduced_);
  reduced_.resize(pivots_.size());
  free_index_.assign(ambient_.size(), -1);
  std::vector<bool> is_pivot(ambient_.size(), false);
  for (auto p : pivots_) is_pivot[p] = true;
  for (std::size_t j = 0; j < ambient_.size(); ++j)
    if (!is_pivot[j]) {
      free_index_[j] = static_cast<long>(free_cols_.size());
      free_cols_.push_back(j);
    }
}

Vec QuotientSpace::project(const Vec& x) const {
  std::vector<Scalar> v(ambient_.size(), Scalar(0));
  for (const auto& [l, c] : x.terms()) {
    auto it = column_.find(l);
    if (it == column_.end()) throw std::invalid_argument("project: label outside the ambient basis: " + l.str());
    v[it->second] = c;
  }
  // subtract multiples of relator rows to clear every pivot column
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    Scalar f = v[pivots_[r]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!reduced_[r][j].is_zero()) v[j] -= f * reduced_[r][j];
  }
  Vec out;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (free_index_[j] >= 0) out.add_term(Label{free_index_[j]}, v[j]);
  return out;
}

Vec QuotientSpace::section(Atom i) const {
  if (i < 0 || static_cast<std::size_t>(i) >= free_cols_.size()) throw std::out_of_range("quotient index");
  return Vec(ambient_[free_cols_[static_cast<std::size_t>(i)]]);
}

Vec QuotientSpace::section(const Vec& q) const {
  return extend(q, [&](const Label& l) { return section(single(l)); });
}

std::optional<std::map<Label, Vec>> invert_map(std::span<const Label> domain, std::span<const Label> codomain,
                                               const std::function<Vec(const Label&)>& f) {
  if (domain.size() != codomain.size()) return std::nullopt;
  const std::size_t n = domain.size();
  // columns of [M | I] where M maps domain coordinates to codomain coordinates
  std::vector<Vec> images;
  images.reserve(n);
  for (const auto& d : domain) images.push_back(f(d));
  Matrix img = coordinates(images, codomain);  // img[j][i] = coeff of codomain i in f(domain j)
  Matrix m(n, std::vector<Scalar>(2 * n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = img[j][i];
    m[i][n + i] = Scalar(1);
  }
  auto pivots = rref(m);
  if (pivots.size() < n || pivots[n - 1] >= n) return std::nullopt;
  std::map<Label, Vec> inv;
  for (std::size_t i = 0; i < n; ++i) {
    Vec v;
    for (std::size_t j = 0; j < n; ++j) v.add_term(domain[j], m[j][n + i]);
    inv.emplace(codomain[i], std::move(v));
  }
  return inv;
}

}  // namespace mhopf
