#ifndef SUNVAC_POINCARE_HPP
#define SUNVAC_POINCARE_HPP

#include <string>
#include <vector>

namespace sunvac::poincare {

/// Integer coefficient vector (b_0, ..., b_{N^2-1}) of per-degree counts.
struct PoincarePolynomial {
  int n = 0;  // SU(n)
  std::vector<long long> b;

  int top_degree() const { return n * n - 1; }
  bool palindromic() const;
  long long value_at_one() const;
  std::string poly_str() const;

  friend bool operator==(const PoincarePolynomial& x, const PoincarePolynomial& y) {
    return x.n == y.n && x.b == y.b;
  }
};

/// Throws std::logic_error unless b_0 = b_top = 1, all entries >= 0 and the
/// vector is palindromic.
void validate(const PoincarePolynomial& p);

/// "(1+t^3)(1+t^5)..." when p matches the product over odd degrees,
/// "(1+t)^{N^2-1}" for the binomial vector, otherwise "-".
std::string factored_str(const PoincarePolynomial& p);

}  // namespace sunvac::poincare

#endif  // SUNVAC_POINCARE_HPP
