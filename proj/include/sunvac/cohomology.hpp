#ifndef SUNVAC_COHOMOLOGY_HPP
#define SUNVAC_COHOMOLOGY_HPP

#include <vector>

#include "sunvac/algebra.hpp"
#include "sunvac/exact_linalg.hpp"
#include "sunvac/grassmann.hpp"
#include "sunvac/poincare.hpp"

namespace sunvac::cohomology {

using grassmann::Multivector;

/// Chevalley-Eilenberg differential of su(N) on the exterior algebra of the
/// rational generator coordinates: the odd derivation with
///   d e_a = -1/2 F_bc^a e_b ^ e_c.
/// d^2 = 0 is equivalent to the Jacobi identity and is covered by tests, not
/// assumed. Ranks of large degree slices are computed on the complexified
/// root-vector basis, where d preserves the torus weight and splits into
/// small blocks; dimensions agree because the two complexes differ by an
/// invertible change of coordinates (and a global scalar).
class CEDifferential {
 public:
  explicit CEDifferential(const Algebra& alg);

  int dim() const { return dim_; }

  /// d x for any multivector (derivation applied term by term).
  Multivector apply(const Multivector& x) const;

  /// Matrix of d_k : degree k -> degree k+1 in the ascending-mask charts.
  exactlin::SparseMatrix matrix(int k) const;

  /// Homogeneous x only (throws otherwise). is_cocycle <=> d x = 0;
  /// is_coboundary <=> x lies in the image of d on the degree below.
  bool is_cocycle(const Multivector& x) const;
  bool is_coboundary(const Multivector& x) const;

  /// Exact rank of d_k; out-of-range k gives 0.
  int rank_dk(int k) const;
  int rank_dk_direct(int k) const;  // rational-basis elimination
  int rank_dk_root(int k) const;    // weight-block elimination

  /// b_k = nullity(d_k) - rank(d_{k-1}); validated.
  poincare::PoincarePolynomial betti() const;

  /// Image of the rational-basis multivector under the substitution of
  /// root-vector coordinates (exposed for the cross-basis consistency tests).
  Multivector to_root_coordinates(const Multivector& x) const;
  /// Canonical root-basis differential; satisfies
  /// to_root(d_spec x) * i == d_root(to_root(x)).
  Multivector apply_root(const Multivector& x) const;

 private:
  int n_ = 0;
  int dim_ = 0;
  // Per generator a: entries (b, c, coeff) with b < c for d e_a = coeff e_b^e_c.
  struct DTerm {
    int b, c;
    Rational coeff;
  };
  std::vector<std::vector<DTerm>> de_;
  std::vector<std::vector<DTerm>> de_root_;
  std::vector<std::vector<int>> root_weight_;   // per root generator, length n
  std::vector<Multivector> subst_;              // e_a image in root coordinates
};

poincare::PoincarePolynomial betti_via_cohomology(const Algebra& alg);

}  // namespace sunvac::cohomology

#endif  // SUNVAC_COHOMOLOGY_HPP
