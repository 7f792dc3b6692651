#ifndef SUNVAC_GRASSMANN_HPP
#define SUNVAC_GRASSMANN_HPP

#include <cstdint>
#include <map>
#include <string>

#include "sunvac/scalar.hpp"

namespace sunvac::grassmann {

/// Sparse element of the exterior algebra on `dim` anticommuting generators
/// e_0 .. e_{dim-1}. Terms are keyed by the bitmask of generators present;
/// the stored coefficient refers to the canonical ascending-index product.
/// Coefficients are exact Gaussian rationals; zero coefficients are never stored.
class Multivector {
 public:
  using Mask = std::uint64_t;
  using TermMap = std::map<Mask, GaussRat>;

  Multivector() = default;
  explicit Multivector(int dim) : dim_(dim) {}

  /// The scalar 1.
  static Multivector unit(int dim);
  /// The generator e_a.
  static Multivector basis_element(int dim, int a);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  GaussRat coeff(Mask m) const;

  /// Accumulates c on mask m, erasing the term if the sum cancels.
  void add_term(Mask m, const GaussRat& c);

  /// True when every stored term has popcount(mask) == k; degree of the zero
  /// multivector is reported as -1 via degree().
  bool is_homogeneous() const;
  int degree() const;
  Multivector degree_part(int k) const;

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(const GaussRat& c);
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(const GaussRat& c, Multivector x) { return x *= c; }
  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

  /// Canonical rendering in ascending mask order, e.g. "(12*i)*e1^e2^e3".
  /// Generator indices are printed 1-based.
  std::string str() const;

 private:
  int dim_ = 0;
  TermMap terms_;
};

/// Parity sign (+1/-1) of merging mask b past mask a into ascending order;
/// masks must be disjoint.
int merge_sign(Multivector::Mask a, Multivector::Mask b);

/// Exterior product; throws on dimension mismatch.
Multivector wedge(const Multivector& x, const Multivector& y);

/// e_a ^ x.
Multivector create(int a, const Multivector& x);

/// Interior product with the dual of e_a: the odd derivation with
/// annihilate(a, e_b) = delta_ab and annihilate(a, scalar) = 0.
Multivector annihilate(int a, const Multivector& x);

}  // namespace sunvac::grassmann

#endif  // SUNVAC_GRASSMANN_HPP
