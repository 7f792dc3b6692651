#include "sunvac/grassmann.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace sunvac::grassmann {

Multivector Multivector::unit(int dim) {
  Multivector x(dim);
  x.terms_[0] = GaussRat(1);
  return x;
}

Multivector Multivector::basis_element(int dim, int a) {
  if (a < 0 || a >= dim) throw std::out_of_range("basis_element: index out of range");
  Multivector x(dim);
  x.terms_[Mask(1) << a] = GaussRat(1);
  return x;
}

GaussRat Multivector::coeff(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussRat(0) : it->second;
}

void Multivector::add_term(Mask m, const GaussRat& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Multivector::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int k = std::popcount(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (std::popcount(m) != k) return false;
  return true;
}

int Multivector::degree() const {
  if (terms_.empty()) return -1;
  if (!is_homogeneous()) throw std::logic_error("degree: multivector mixes degrees");
  return std::popcount(terms_.begin()->first);
}

Multivector Multivector::degree_part(int k) const {
  Multivector out(dim_);
  for (const auto& [m, c] : terms_)
    if (std::popcount(m) == k) out.terms_[m] = c;
  return out;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  if (o.is_zero()) return *this;
  if (is_zero())
    dim_ = o.dim_;
  else if (dim_ != o.dim_)
    throw std::invalid_argument("multivector dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  if (o.is_zero()) return *this;
  if (is_zero())
    dim_ = o.dim_;
  else if (dim_ != o.dim_)
    throw std::invalid_argument("multivector dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Multivector& Multivector::operator*=(const GaussRat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

int merge_sign(Multivector::Mask a, Multivector::Mask b) {
  int sign = 1;
  while (b) {
    const int bit = std::countr_zero(b);
    if (std::popcount(a >> (bit + 1)) & 1) sign = -sign;
    b &= b - 1;
  }
  return sign;
}

Multivector wedge(const Multivector& x, const Multivector& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("wedge: dimension mismatch");
  Multivector out(x.dim());
  for (const auto& [m1, c1] : x.terms()) {
    for (const auto& [m2, c2] : y.terms()) {
      if (m1 & m2) continue;
      GaussRat c = c1 * c2;
      if (merge_sign(m1, m2) < 0) c = -c;
      out.add_term(m1 | m2, c);
    }
  }
  return out;
}

Multivector create(int a, const Multivector& x) {
  if (a < 0 || a >= x.dim()) throw std::out_of_range("create: index out of range");
  return wedge(Multivector::basis_element(x.dim(), a), x);
}

Multivector annihilate(int a, const Multivector& x) {
  if (a < 0 || a >= x.dim()) throw std::out_of_range("annihilate: index out of range");
  const Multivector::Mask bit = Multivector::Mask(1) << a;
  Multivector out(x.dim());
  for (const auto& [m, c] : x.terms()) {
    if (!(m & bit)) continue;
    const int below = std::popcount(m & (bit - 1));
    out.add_term(m & ~bit, (below & 1) ? -c : c);
  }
  return out;
}

std::string Multivector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    Mask t = m;
    while (t) {
      const int bit = std::countr_zero(t);
      os << (t == m ? "*e" : "^e") << (bit + 1);
      t &= t - 1;
    }
  }
  return os.str();
}

}  // namespace sunvac::grassmann
