#ifndef SUNVAC_LIEALG_HPP
#define SUNVAC_LIEALG_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "sunvac/scalar.hpp"

namespace sunvac::liealg {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

enum class BasisKind { orthonormal, rational };

/// SU(N) generator family T_a, a = 0..N^2-2, in the fundamental representation.
///
/// Two concrete families are provided:
///  - orthonormal: generalized Gell-Mann matrices, Tr(T_a T_b) = 2 delta_ab,
///    floating complex entries (the diagonal members carry square roots);
///  - rational: symmetric pairs E_ij + E_ji, antisymmetric pairs -i(E_ij - E_ji)
///    and diagonal differences E_kk - E_k+1,k+1, all entries Gaussian rational.
template <typename Scalar>
struct LieBasis {
  int n = 0;
  BasisKind kind = BasisKind::orthonormal;
  std::vector<DenseMatrix<Scalar>> generators;

  int dim() const { return n * n - 1; }
};

using OrthonormalBasis = LieBasis<std::complex<double>>;
using RationalBasis = LieBasis<GaussRat>;

/// Throws std::invalid_argument for n < 2.
OrthonormalBasis build_su_basis_orthonormal(int n);
RationalBasis build_su_basis_rational(int n);

/// Structure data in the convention [T_a, T_b] = i F_ab^c T_c.
/// In Gell-Mann normalization F = 2 f with f the conventional tensor.
/// The anticommutator tensor d (orthonormal kind only) solves
/// {T_a, T_b} = (4/N) delta_ab + 2 d_ab^c T_c.
template <typename Real>
struct StructureTensors {
  int dim = 0;

  struct Entry {
    int b, c;
    Real val;
  };

  /// F_ab^c, dense; index with f(a,b,c).
  std::vector<Real> F_dense;
  /// Per a, the nonzero (b, c, F_ab^c).
  std::vector<std::vector<Entry>> F_rows;
  /// d_ab^c, dense; empty for the rational kind.
  std::vector<Real> d_dense;
  /// g_ab = Tr(T_a T_b).
  DenseMatrix<Real> metric;

  const Real& f(int a, int b, int c) const { return F_dense[(a * dim + b) * dim + c]; }
  const Real& d(int a, int b, int c) const { return d_dense[(a * dim + b) * dim + c]; }
  bool has_d() const { return !d_dense.empty(); }
};

StructureTensors<double> structure_constants(const OrthonormalBasis& basis);
StructureTensors<Rational> structure_constants(const RationalBasis& basis);

/// Tr(T_a1 ... T_ak) for a non-empty index list; throws on empty list or
/// out-of-range index.
template <typename Scalar>
Scalar trace_product(const LieBasis<Scalar>& basis, const std::vector<int>& indices);

std::vector<Eigen::MatrixXcd> to_complex(const OrthonormalBasis& basis);
std::vector<Eigen::MatrixXcd> to_complex(const RationalBasis& basis);

/// Tr((phi_a T_a)^n); the matrix is Hermitian so the result is real.
template <typename Scalar>
double eval_trace_polynomial(const LieBasis<Scalar>& basis, const Eigen::VectorXd& phi, int n);

/// Central-difference flat Laplacian sum_a d^2/dphi_a^2 of Tr(phi^n) at phi,
/// Richardson-refined from steps h and h/2.
template <typename Scalar>
double laplacian_fd(const LieBasis<Scalar>& basis, int n, const Eigen::VectorXd& phi,
                    double h = 1e-3);

namespace detail {
/// Dense exact linear solve A x = b over GaussRat; throws on singular A.
Eigen::Matrix<GaussRat, Eigen::Dynamic, 1> solve_exact(
    DenseMatrix<GaussRat> A, Eigen::Matrix<GaussRat, Eigen::Dynamic, 1> b);
/// Exact inverse; throws on singular input.
DenseMatrix<GaussRat> invert_exact(const DenseMatrix<GaussRat>& A);
}  // namespace detail

}  // namespace sunvac::liealg

#endif  // SUNVAC_LIEALG_HPP
