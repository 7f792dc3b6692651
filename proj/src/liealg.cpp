#include "sunvac/liealg.hpp"

#include <cmath>
#include <stdexcept>

namespace sunvac::liealg {

namespace {

void require_group(int n) {
  if (n < 2) throw std::invalid_argument("SU(N) requires N >= 2");
}

}  // namespace

OrthonormalBasis build_su_basis_orthonormal(int n) {
  require_group(n);
  using C = std::complex<double>;
  OrthonormalBasis out;
  out.n = n;
  out.kind = BasisKind::orthonormal;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      DenseMatrix<C> S = DenseMatrix<C>::Zero(n, n);
      S(i, j) = C(1, 0);
      S(j, i) = C(1, 0);
      out.generators.push_back(S);
      DenseMatrix<C> A = DenseMatrix<C>::Zero(n, n);
      A(i, j) = C(0, -1);
      A(j, i) = C(0, 1);
      out.generators.push_back(A);
    }
  }
  for (int l = 1; l < n; ++l) {
    // diag(1,..,1,-l,0,..)/sqrt(l(l+1)/2): Tr(D^2) = 2.
    DenseMatrix<C> D = DenseMatrix<C>::Zero(n, n);
    const double s = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int k = 0; k < l; ++k) D(k, k) = C(s, 0);
    D(l, l) = C(-l * s, 0);
    out.generators.push_back(D);
  }
  return out;
}

RationalBasis build_su_basis_rational(int n) {
  require_group(n);
  RationalBasis out;
  out.n = n;
  out.kind = BasisKind::rational;
  const GaussRat one(1), mi(Rational(0), Rational(-1)), pi(Rational(0), Rational(1));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      DenseMatrix<GaussRat> S = DenseMatrix<GaussRat>::Constant(n, n, GaussRat(0));
      S(i, j) = one;
      S(j, i) = one;
      out.generators.push_back(S);
      DenseMatrix<GaussRat> A = DenseMatrix<GaussRat>::Constant(n, n, GaussRat(0));
      A(i, j) = mi;
      A(j, i) = pi;
      out.generators.push_back(A);
    }
  }
  for (int k = 0; k + 1 < n; ++k) {
    DenseMatrix<GaussRat> H = DenseMatrix<GaussRat>::Constant(n, n, GaussRat(0));
    H(k, k) = GaussRat(1);
    H(k + 1, k + 1) = GaussRat(-1);
    out.generators.push_back(H);
  }
  return out;
}

namespace detail {

Eigen::Matrix<GaussRat, Eigen::Dynamic, 1> solve_exact(
    DenseMatrix<GaussRat> A, Eigen::Matrix<GaussRat, Eigen::Dynamic, 1> b) {
  const int m = static_cast<int>(A.rows());
  for (int col = 0; col < m; ++col) {
    int piv = -1;
    for (int r = col; r < m; ++r) {
      if (!A(r, col).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) throw std::runtime_error("solve_exact: singular matrix");
    if (piv != col) {
      A.row(piv).swap(A.row(col));
      std::swap(b(piv), b(col));
    }
    const GaussRat p = A(col, col);
    for (int c = col; c < m; ++c) A(col, c) = A(col, c) / p;
    b(col) = b(col) / p;
    for (int r = 0; r < m; ++r) {
      if (r == col || A(r, col).is_zero()) continue;
      const GaussRat f = A(r, col);
      for (int c = col; c < m; ++c) A(r, c) -= f * A(col, c);
      b(r) -= f * b(col);
    }
  }
  return b;
}

DenseMatrix<GaussRat> invert_exact(const DenseMatrix<GaussRat>& A) {
  const int m = static_cast<int>(A.rows());
  DenseMatrix<GaussRat> inv(m, m);
  for (int j = 0; j < m; ++j) {
    Eigen::Matrix<GaussRat, Eigen::Dynamic, 1> e =
        Eigen::Matrix<GaussRat, Eigen::Dynamic, 1>::Constant(m, GaussRat(0));
    e(j) = GaussRat(1);
    inv.col(j) = solve_exact(A, e);
  }
  return inv;
}

}  // namespace detail

StructureTensors<double> structure_constants(const OrthonormalBasis& basis) {
  const int d = basis.dim();
  StructureTensors<double> st;
  st.dim = d;
  st.F_dense.assign(static_cast<size_t>(d) * d * d, 0.0);
  st.d_dense.assign(static_cast<size_t>(d) * d * d, 0.0);
  st.F_rows.assign(d, {});
  st.metric = DenseMatrix<double>::Zero(d, d);
  const auto& T = basis.generators;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) st.metric(a, b) = (T[a] * T[b]).trace().real();
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      const Eigen::MatrixXcd comm = T[a] * T[b] - T[b] * T[a];
      const Eigen::MatrixXcd anti = T[a] * T[b] + T[b] * T[a];
      for (int c = 0; c < d; ++c) {
        // [T_a,T_b] = i F_ab^c T_c with Tr(T_c T_e) = 2 delta_ce.
        const std::complex<double> trc = (comm * T[c]).trace();
        const double F = trc.imag() / 2.0;
        st.F_dense[(a * static_cast<size_t>(d) + b) * d + c] = F;
        if (std::abs(F) > 1e-12) st.F_rows[a].push_back({b, c, F});
        st.d_dense[(a * static_cast<size_t>(d) + b) * d + c] = (anti * T[c]).trace().real() / 4.0;
      }
    }
  }
  return st;
}

StructureTensors<Rational> structure_constants(const RationalBasis& basis) {
  const int d = basis.dim();
  StructureTensors<Rational> st;
  st.dim = d;
  st.F_dense.assign(static_cast<size_t>(d) * d * d, Rational(0));
  st.F_rows.assign(d, {});
  st.metric = DenseMatrix<Rational>::Constant(d, d, Rational(0));
  const auto& T = basis.generators;

  DenseMatrix<GaussRat> gram = DenseMatrix<GaussRat>::Constant(d, d, GaussRat(0));
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      GaussRat g = (T[a] * T[b]).trace();
      if (sgn(g.im()) != 0)
        throw std::runtime_error("structure_constants: non-real metric entry");
      st.metric(a, b) = g.re();
      gram(a, b) = g;
    }
  }

  const GaussRat minus_i(Rational(0), Rational(-1));
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      if (a == b) continue;
      DenseMatrix<GaussRat> comm = T[a] * T[b] - T[b] * T[a];
      // Solve g x = Tr(T_e * (-i)[T_a,T_b]) so that [T_a,T_b] = i x_c T_c.
      Eigen::Matrix<GaussRat, Eigen::Dynamic, 1> rhs(d);
      bool all_zero = true;
      for (int e = 0; e < d; ++e) {
        rhs(e) = (T[e] * comm).trace() * minus_i;
        all_zero = all_zero && rhs(e).is_zero();
      }
      if (all_zero) continue;
      auto x = detail::solve_exact(gram, rhs);
      for (int c = 0; c < d; ++c) {
        if (x(c).is_zero()) continue;
        if (!x(c).is_real())
          throw std::runtime_error("structure_constants: non-real F entry");
        st.F_dense[(a * static_cast<size_t>(d) + b) * d + c] = x(c).re();
        st.F_rows[a].push_back({b, c, x(c).re()});
      }
    }
  }
  return st;
}

template <typename Scalar>
Scalar trace_product(const LieBasis<Scalar>& basis, const std::vector<int>& indices) {
  if (indices.empty()) throw std::invalid_argument("trace_product: empty index list");
  for (int a : indices)
    if (a < 0 || a >= basis.dim())
      throw std::out_of_range("trace_product: generator index out of range");
  DenseMatrix<Scalar> P = basis.generators[indices[0]];
  for (size_t k = 1; k < indices.size(); ++k) P = P * basis.generators[indices[k]];
  return P.trace();
}

template std::complex<double> trace_product(const OrthonormalBasis&, const std::vector<int>&);
template GaussRat trace_product(const RationalBasis&, const std::vector<int>&);

std::vector<Eigen::MatrixXcd> to_complex(const OrthonormalBasis& basis) {
  return basis.generators;
}

std::vector<Eigen::MatrixXcd> to_complex(const RationalBasis& basis) {
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(basis.generators.size());
  for (const auto& T : basis.generators) {
    Eigen::MatrixXcd M(basis.n, basis.n);
    for (int i = 0; i < basis.n; ++i)
      for (int j = 0; j < basis.n; ++j) M(i, j) = T(i, j).to_complex();
    out.push_back(M);
  }
  return out;
}

template <typename Scalar>
double eval_trace_polynomial(const LieBasis<Scalar>& basis, const Eigen::VectorXd& phi, int n) {
  if (n < 1) throw std::invalid_argument("eval_trace_polynomial: n >= 1 required");
  if (phi.size() != basis.dim())
    throw std::invalid_argument("eval_trace_polynomial: phi has wrong length");
  const auto gens = to_complex(basis);
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(basis.n, basis.n);
  for (int a = 0; a < basis.dim(); ++a) M += phi(a) * gens[a];
  Eigen::MatrixXcd P = M;
  for (int k = 1; k < n; ++k) P = P * M;
  return P.trace().real();
}

template double eval_trace_polynomial(const OrthonormalBasis&, const Eigen::VectorXd&, int);
template double eval_trace_polynomial(const RationalBasis&, const Eigen::VectorXd&, int);

namespace {

template <typename Scalar>
double laplacian_at_step(const LieBasis<Scalar>& basis, int n, const Eigen::VectorXd& phi,
                         double h) {
  const double f0 = eval_trace_polynomial(basis, phi, n);
  double acc = 0.0;
  Eigen::VectorXd p = phi;
  for (int a = 0; a < basis.dim(); ++a) {
    p(a) = phi(a) + h;
    const double fp = eval_trace_polynomial(basis, p, n);
    p(a) = phi(a) - h;
    const double fm = eval_trace_polynomial(basis, p, n);
    p(a) = phi(a);
    acc += (fp - 2.0 * f0 + fm) / (h * h);
  }
  return acc;
}

}  // namespace

template <typename Scalar>
double laplacian_fd(const LieBasis<Scalar>& basis, int n, const Eigen::VectorXd& phi, double h) {
  if (h <= 0) throw std::invalid_argument("laplacian_fd: h > 0 required");
  const double coarse = laplacian_at_step(basis, n, phi, h);
  const double fine = laplacian_at_step(basis, n, phi, h / 2.0);
  return (4.0 * fine - coarse) / 3.0;
}

template double laplacian_fd(const OrthonormalBasis&, int, const Eigen::VectorXd&, double);
template double laplacian_fd(const RationalBasis&, int, const Eigen::VectorXd&, double);

}  // namespace sunvac::liealg
