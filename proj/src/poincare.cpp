#include "sunvac/poincare.hpp"

#include <sstream>
#include <stdexcept>

namespace sunvac::poincare {

bool PoincarePolynomial::palindromic() const {
  const size_t m = b.size();
  for (size_t k = 0; k < m; ++k)
    if (b[k] != b[m - 1 - k]) return false;
  return true;
}

long long PoincarePolynomial::value_at_one() const {
  long long s = 0;
  for (long long v : b) s += v;
  return s;
}

std::string PoincarePolynomial::poly_str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < b.size(); ++k) {
    if (b[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << b[k];
      continue;
    }
    if (b[k] != 1) os << b[k] << "*";
    os << "t";
    if (k > 1) os << "^" << k;
  }
  if (first) os << "0";
  return os.str();
}

void validate(const PoincarePolynomial& p) {
  if (p.n < 2 || p.b.size() != static_cast<size_t>(p.n * p.n))
    throw std::logic_error("PoincarePolynomial: bad shape");
  for (long long v : p.b)
    if (v < 0) throw std::logic_error("PoincarePolynomial: negative coefficient");
  if (p.b.front() != 1 || p.b.back() != 1)
    throw std::logic_error("PoincarePolynomial: b_0 and b_top must be 1");
  if (!p.palindromic()) throw std::logic_error("PoincarePolynomial: not palindromic");
}

namespace {

std::vector<long long> odd_product_coeffs(int n) {
  std::vector<long long> c{1};
  for (int m = 3; m <= 2 * n - 1; m += 2) {
    std::vector<long long> nc(c.size() + m, 0);
    for (size_t k = 0; k < c.size(); ++k) {
      nc[k] += c[k];
      nc[k + m] += c[k];
    }
    c = std::move(nc);
  }
  c.resize(static_cast<size_t>(n) * n, 0);
  return c;
}

}  // namespace

std::string factored_str(const PoincarePolynomial& p) {
  if (p.b == odd_product_coeffs(p.n)) {
    std::ostringstream os;
    for (int m = 3; m <= 2 * p.n - 1; m += 2) os << "(1+t^" << m << ")";
    return os.str();
  }
  std::vector<long long> binom(static_cast<size_t>(p.n) * p.n, 0);
  binom[0] = 1;
  for (int step = 0; step < p.n * p.n - 1; ++step)
    for (int k = step + 1; k > 0; --k) binom[k] += binom[k - 1];
  if (p.b == binom) {
    std::ostringstream os;
    os << "(1+t)^" << (p.n * p.n - 1);
    return os.str();
  }
  return "-";
}

}  // namespace sunvac::poincare
