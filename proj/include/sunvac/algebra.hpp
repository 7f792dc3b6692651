#ifndef SUNVAC_ALGEBRA_HPP
#define SUNVAC_ALGEBRA_HPP

#include <map>

#include "sunvac/grassmann.hpp"
#include "sunvac/liealg.hpp"

namespace sunvac {

/// Exact-basis bundle shared by the state operators and both counting
/// pipelines: rational generators, structure tensors and the inverse of the
/// normalized trace metric gbar_ab = Tr(T_a T_b)/2. Values are immutable
/// after make(); the trace cache is a single-thread convenience.
struct Algebra {
  liealg::RationalBasis basis;
  liealg::StructureTensors<Rational> st;
  liealg::DenseMatrix<Rational> gbar_inv;

  static Algebra make(int n);

  int n() const { return basis.n; }
  int dim() const { return basis.dim(); }

  /// Cached Tr(psibar^n); see vacuum::trace_psi.
  const grassmann::Multivector& trace_psi_cached(int n) const;

 private:
  mutable std::map<int, grassmann::Multivector> trace_cache_;
};

}  // namespace sunvac

#endif  // SUNVAC_ALGEBRA_HPP
