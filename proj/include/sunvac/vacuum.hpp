#ifndef SUNVAC_VACUUM_HPP
#define SUNVAC_VACUUM_HPP

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "sunvac/algebra.hpp"
#include "sunvac/exact_linalg.hpp"
#include "sunvac/grassmann.hpp"
#include "sunvac/poincare.hpp"

namespace sunvac::vacuum {

using grassmann::Multivector;

/// Coordinate chart for the degree-k slice of the exterior algebra:
/// masks in ascending numeric order plus the inverse lookup.
struct DegreeSpace {
  int dim = 0;
  int k = 0;
  std::vector<Multivector::Mask> masks;
  std::unordered_map<Multivector::Mask, int> index;

  int size() const { return static_cast<int>(masks.size()); }
};

DegreeSpace degree_space(int dim, int k);

/// Tr(psibar^n) = sum Tr(T_a1...T_an) e_a1^...^e_an, computed by raising the
/// N x N matrix Psi = T_a (x) e_a to the n-th power with wedge-valued entries
/// rather than summing (N^2-1)^n index tuples.
Multivector trace_psi(const liealg::RationalBasis& basis, int n);

/// Adjoint (Gauss-law) action of generator a:
///   G_a x = sum_{b,c} (-i F_ab^c) e_b ^ (i_c x),
/// sign and factor fixed by the closure test [G_a,G_b] = i F_ab^c G_c and by
/// invariance of the trace operators; degree-preserving.
Multivector gauss_action(const Algebra& alg, int a, const Multivector& x);

/// G_a = -i A_a with A_a real; enumerates the entries of A_a applied to one
/// basis monomial. Shared by the exact and floating-point rank pipelines.
template <typename Real, typename Sink>
void gauss_real_action_on_mask(const liealg::StructureTensors<Real>& st, int a,
                               Multivector::Mask m, Sink&& sink);

/// Coordinates of a multivector with purely real (rational) coefficients in
/// the given degree chart; throws if a coefficient has an imaginary part or a
/// term falls outside the chart.
exactlin::SparseVec real_coordinates(const Multivector& x, const DegreeSpace& space);

/// Re/Im coordinate pair of a Gaussian-rational multivector.
std::pair<exactlin::SparseVec, exactlin::SparseVec> complex_coordinates(const Multivector& x,
                                                                        const DegreeSpace& space);

/// Basis of the common kernel of all gauss actions on degree k, as primitive
/// rational coordinate vectors in degree_space(dim, k). Computed by
/// incremental exact elimination, diagonal (torus) generators first.
std::vector<exactlin::SparseVec> singlet_basis(const Algebra& alg, int k);

/// Dimension of the degree-k invariant subspace.
int singlet_dimension(const Algebra& alg, int k);

/// Per-degree invariant counts; validated (b_0 = b_top = 1, palindromic).
poincare::PoincarePolynomial betti_via_singlets(const Algebra& alg);

/// Floating-point orthonormal-basis replica of betti_via_singlets: stacked
/// Gauss constraint matrix per degree, rank by SVD with relative tolerance.
poincare::PoincarePolynomial betti_via_singlets_float(const liealg::OrthonormalBasis& basis,
                                                      double rank_tol = 1e-8);

/// Wedge products of distinct odd trace operators with total degree k.
/// Verifies internally that the returned family is linearly independent,
/// invariant and of size singlet_dimension(k); throws std::logic_error if not.
std::vector<Multivector> vacuum_basis(const Algebra& alg, int k);

/// Human-readable labels matching vacuum_basis order, e.g. "Tr(psibar^3)^Tr(psibar^5)".
std::vector<std::string> vacuum_basis_labels(const Algebra& alg, int k);

/// State (sum of phi-monomial (x) multivector) applied to the bosonic vacuum.
/// Exponent keys run over the N^2-1 real coordinates phi_a.
struct PolyGrassState {
  int dim = 0;
  std::map<std::vector<int>, Multivector> terms;

  static PolyGrassState zero(int dim) { return PolyGrassState{dim, {}}; }
  void add(const std::vector<int>& expo, const Multivector& mv);
  bool is_zero() const { return terms.empty(); }

  friend bool operator==(const PolyGrassState& a, const PolyGrassState& b) {
    return a.dim == b.dim && a.terms == b.terms;
  }
};

/// Qbar = psibar_a p_a realized as sum_a e_a ^ (-i gbar^{ab} d/dphi_b).
PolyGrassState apply_qbar(const Algebra& alg, const PolyGrassState& s);
/// Q = psi_a p_a realized as sum_a i_a (-i d/dphi_a).
PolyGrassState apply_q(const Algebra& alg, const PolyGrassState& s);
/// H = -1/2 gbar^{ab} d^2/dphi_a dphi_b, identity on the Grassmann factor.
PolyGrassState apply_hamiltonian(const Algebra& alg, const PolyGrassState& s);
/// Full Gauss generator: -i F_ab^c phi_b d/dphi_c plus the fermionic action.
PolyGrassState apply_gauss_full(const Algebra& alg, int a, const PolyGrassState& s);

/// Tr(phi^n) (x) 1.
PolyGrassState trace_phi_state(const Algebra& alg, int n);
/// Tr(phi^k psibar) with psibar = T^a e_a, T^a the gbar-dual generators.
PolyGrassState trace_phi_psibar_state(const Algebra& alg, int k);
/// p(phi) (x) m for a trace polynomial p = Tr(phi^n).
PolyGrassState trace_phi_times(const Algebra& alg, int n, const Multivector& m);

/// Decomposition of Tr(psibar^{2n+1}), n >= N, over wedge products of lower
/// odd traces of the same degree.
struct CayleyHamiltonReport {
  int target_power = 0;                       // 2n+1
  bool target_is_zero = false;                // Tr(psibar^{2n+1}) == 0 identically
  bool expressible = false;                   // a decomposition exists
  std::vector<std::vector<int>> candidates;   // odd powers per product term
  std::vector<GaussRat> coefficients;         // aligned with candidates
};

CayleyHamiltonReport verify_cayley_hamilton(const Algebra& alg, int n);

template <typename Real, typename Sink>
void gauss_real_action_on_mask(const liealg::StructureTensors<Real>& st, int a,
                               Multivector::Mask m, Sink&& sink) {
  using Mask = Multivector::Mask;
  for (const auto& e : st.F_rows[a]) {
    const Mask cbit = Mask(1) << e.c;
    if (!(m & cbit)) continue;
    const Mask rest = m & ~cbit;
    const Mask bbit = Mask(1) << e.b;
    if (rest & bbit) continue;
    int sign = grassmann::merge_sign(bbit, rest);
    if (std::popcount(m & (cbit - 1)) & 1) sign = -sign;
    sink(rest | bbit, sign > 0 ? e.val : -e.val);
  }
}

}  // namespace sunvac::vacuum

#endif  // SUNVAC_VACUUM_HPP
