#include "sunvac/algebra.hpp"

#include "sunvac/vacuum.hpp"

namespace sunvac {

Algebra Algebra::make(int n) {
  Algebra alg;
  alg.basis = liealg::build_su_basis_rational(n);
  alg.st = liealg::structure_constants(alg.basis);
  const int d = alg.basis.dim();
  liealg::DenseMatrix<GaussRat> gbar(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) gbar(a, b) = GaussRat(alg.st.metric(a, b) / 2);
  liealg::DenseMatrix<GaussRat> inv = liealg::detail::invert_exact(gbar);
  alg.gbar_inv = liealg::DenseMatrix<Rational>(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) alg.gbar_inv(a, b) = inv(a, b).re();
  return alg;
}

const grassmann::Multivector& Algebra::trace_psi_cached(int n) const {
  auto it = trace_cache_.find(n);
  if (it == trace_cache_.end())
    it = trace_cache_.emplace(n, vacuum::trace_psi(basis, n)).first;
  return it->second;
}

}  // namespace sunvac
