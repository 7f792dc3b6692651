#ifndef SUNVAC_SCALAR_HPP
#define SUNVAC_SCALAR_HPP

#include <gmpxx.h>

#include <Eigen/Core>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace sunvac {

/// Exact rational scalar. All kernel/rank computations run on these (or on
/// integers obtained by clearing denominators), never on floating point.
using Rational = mpq_class;

std::string rational_str(const Rational& q);

/// Gaussian rational: re + im*i with exact rational parts.
class GaussRat {
 public:
  GaussRat() : re_(0), im_(0) {}
  GaussRat(int v) : re_(v), im_(0) {}                  // NOLINT: implicit by design
  GaussRat(long v) : re_(v), im_(0) {}                 // NOLINT
  GaussRat(const Rational& re) : re_(re), im_(0) {}    // NOLINT
  GaussRat(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRat i() { return GaussRat(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRat conj() const { return GaussRat(re_, -im_); }

  /// |z|^2 as an exact rational.
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  GaussRat& operator+=(const GaussRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) {
    Rational d = o.norm2();
    Rational r = (re_ * o.re_ + im_ * o.im_) / d;
    Rational i = (im_ * o.re_ - re_ * o.im_) / d;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }

  GaussRat operator-() const { return GaussRat(-re_, -im_); }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  /// Canonical rendering: "0", "p/q", "p/q*i", "re+im*i" / "re-im*i".
  std::string str() const;

 private:
  Rational re_, im_;
};

std::ostream& operator<<(std::ostream& os, const GaussRat& z);

}  // namespace sunvac

namespace Eigen {

// Opaque commutative-ring scalar: Eigen is used for storage, products and
// sums only; pivoted decompositions go through the exact solvers instead.
template <>
struct NumTraits<sunvac::GaussRat> : GenericNumTraits<sunvac::GaussRat> {
  typedef sunvac::GaussRat Real;
  typedef sunvac::GaussRat NonInteger;
  typedef sunvac::GaussRat Nested;
  typedef sunvac::GaussRat Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 80
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // SUNVAC_SCALAR_HPP
