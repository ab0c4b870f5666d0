#include "mhopf/element.hpp"

#include <algorithm>
#include <stdexcept>

namespace mhopf {

Label::Label(std::initializer_list<Atom> atoms) : Label(std::span<const Atom>(atoms.begin(), atoms.size())) {}

Label::Label(std::span<const Atom> atoms) {
  if (atoms.size() > kMaxArity) throw std::length_error("label arity exceeds " + std::to_string(kMaxArity));
  std::copy(atoms.begin(), atoms.end(), a_.begin());
  n_ = static_cast<std::uint8_t>(atoms.size());
}

Label Label::slice(std::size_t from, std::size_t to) const {
  if (from > to || to > n_) throw std::out_of_range("label slice");
  return Label(std::span<const Atom>(a_.data() + from, to - from));
}

void Label::push_back(Atom a) {
  if (n_ == kMaxArity) throw std::length_error("label arity exceeds " + std::to_string(kMaxArity));
  a_[n_++] = a;
}

Label concat(const Label& a, const Label& b) {
  Label out = a;
  for (std::size_t i = 0; i < b.n_; ++i) out.push_back(b.a_[i]);
  return out;
}

std::strong_ordering operator<=>(const Label& a, const Label& b) {
  std::size_t n = std::min(a.n_, b.n_);
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = a.a_[i] <=> b.a_[i]; c != 0) return c;
  return a.n_ <=> b.n_;
}

bool operator==(const Label& a, const Label& b) { return (a <=> b) == 0; }

std::string Label::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) s += ",";
    s += std::to_string(a_[i]);
  }
  return s + "]";
}

Atom single(const Label& l) {
  if (l.size() != 1) throw std::invalid_argument("expected a single-leg label, got " + l.str());
  return l[0];
}

Vec::Vec(const Label& l, Scalar c) {
  if (!c.is_zero()) terms_.emplace(l, std::move(c));
}

Scalar Vec::coeff(const Label& l) const {
  auto it = terms_.find(l);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Vec::add_term(const Label& l, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(l, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Vec::axpy(const Scalar& c, const Vec& x) {
  if (c.is_zero()) return;
  for (const auto& [l, d] : x.terms_) add_term(l, c * d);
}

Vec& Vec::operator+=(const Vec& o) {
  for (const auto& [l, d] : o.terms_) add_term(l, d);
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  for (const auto& [l, d] : o.terms_) add_term(l, -d);
  return *this;
}

Vec& Vec::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    // a rational literal can vanish once reduced into a prime field
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
  return *this;
}

Vec Vec::operator-() const {
  Vec out = *this;
  return out *= Scalar(-1);
}

bool operator==(const Vec& a, const Vec& b) {
  if (a.terms_.size() == b.terms_.size()) {
    bool same = true;
    auto it = b.terms_.begin();
    for (const auto& [l, c] : a.terms_) {
      if (!(it->first == l) || !(it->second == c)) {
        same = false;
        break;
      }
      ++it;
    }
    if (same) return true;
  }
  return (a - b).is_zero();
}

std::string Vec::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [l, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    s += c.str() + "*" + l.str();
  }
  return s;
}

Vec tensor(const Vec& x, const Vec& y) {
  Vec out;
  for (const auto& [lx, cx] : x.terms())
    for (const auto& [ly, cy] : y.terms()) out.add_term(concat(lx, ly), cx * cy);
  return out;
}

Vec tensor(const Vec& x, const Vec& y, const Vec& z) { return tensor(tensor(x, y), z); }

Vec permute_legs(const Vec& x, std::span<const std::size_t> perm) {
  Vec out;
  for (const auto& [l, c] : x.terms()) {
    Label m;
    for (std::size_t i : perm) m.push_back(l[i]);
    out.add_term(m, c);
  }
  return out;
}

Vec flip(const Vec& x, std::size_t k) {
  Vec out;
  for (const auto& [l, c] : x.terms()) out.add_term(concat(l.tail(k), l.head(k)), c);
  return out;
}

}  // namespace mhopf
