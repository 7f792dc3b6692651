#include "sunvac/vacuum.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <bit>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace sunvac::vacuum {

using exactlin::SparseMatrix;
using exactlin::SparseVec;
using Mask = Multivector::Mask;

DegreeSpace degree_space(int dim, int k) {
  if (k < 0 || k > dim) throw std::invalid_argument("degree_space: k out of range");
  DegreeSpace space;
  space.dim = dim;
  space.k = k;
  if (k == 0) {
    space.masks = {Mask(0)};
  } else {
    Mask m = (Mask(1) << k) - 1;
    const Mask limit = dim < 64 ? (Mask(1) << dim) : ~Mask(0);
    while (m < limit) {
      space.masks.push_back(m);
      // Gosper's hack: next mask with the same popcount.
      const Mask c = m & -m;
      const Mask r = m + c;
      if (r >= limit || r < m) break;
      m = (((r ^ m) >> 2) / c) | r;
    }
  }
  space.index.reserve(space.masks.size());
  for (int i = 0; i < static_cast<int>(space.masks.size()); ++i)
    space.index.emplace(space.masks[i], i);
  return space;
}

Multivector trace_psi(const liealg::RationalBasis& basis, int n) {
  const int d = basis.dim();
  if (n < 1 || n > d) throw std::invalid_argument("trace_psi: n out of range");
  const int N = basis.n;
  // Psi_ij = sum_a (T_a)_ij e_a, powered with wedge-valued products.
  std::vector<std::vector<Multivector>> psi(N, std::vector<Multivector>(N, Multivector(d)));
  for (int a = 0; a < d; ++a)
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        const GaussRat& v = basis.generators[a](i, j);
        if (!v.is_zero()) psi[i][j].add_term(Mask(1) << a, v);
      }
  std::vector<std::vector<Multivector>> power = psi;
  for (int step = 1; step < n; ++step) {
    std::vector<std::vector<Multivector>> next(N, std::vector<Multivector>(N, Multivector(d)));
    for (int i = 0; i < N; ++i)
      for (int k = 0; k < N; ++k) {
        if (power[i][k].is_zero()) continue;
        for (int j = 0; j < N; ++j) {
          if (psi[k][j].is_zero()) continue;
          next[i][j] += grassmann::wedge(power[i][k], psi[k][j]);
        }
      }
    power = std::move(next);
  }
  Multivector tr(d);
  for (int i = 0; i < N; ++i) tr += power[i][i];
  return tr;
}

Multivector gauss_action(const Algebra& alg, int a, const Multivector& x) {
  const int d = alg.dim();
  if (a < 0 || a >= d) throw std::out_of_range("gauss_action: index out of range");
  Multivector out(d);
  if (x.is_zero()) return out;
  for (const auto& [m, coeff] : x.terms()) {
    gauss_real_action_on_mask(alg.st, a, m, [&](Mask nm, const Rational& rv) {
      // G_a = -i A_a.
      out.add_term(nm, coeff * GaussRat(Rational(0), -rv));
    });
  }
  return out;
}

exactlin::SparseVec real_coordinates(const Multivector& x, const DegreeSpace& space) {
  SparseVec v;
  for (const auto& [m, c] : x.terms()) {
    if (!c.is_real()) throw std::invalid_argument("real_coordinates: non-real coefficient");
    auto it = space.index.find(m);
    if (it == space.index.end())
      throw std::invalid_argument("real_coordinates: term outside degree chart");
    v.add(it->second, c.re());
  }
  return v;
}

std::pair<SparseVec, SparseVec> complex_coordinates(const Multivector& x,
                                                    const DegreeSpace& space) {
  SparseVec re, im;
  for (const auto& [m, c] : x.terms()) {
    auto it = space.index.find(m);
    if (it == space.index.end())
      throw std::invalid_argument("complex_coordinates: term outside degree chart");
    re.add(it->second, c.re());
    im.add(it->second, c.im());
  }
  return {re, im};
}

namespace {

std::vector<int> generator_order_diagonals_first(const Algebra& alg) {
  const int d = alg.dim();
  const int npairs = d - (alg.n() - 1);
  std::vector<int> order;
  order.reserve(d);
  for (int a = npairs; a < d; ++a) order.push_back(a);
  for (int a = 0; a < npairs; ++a) order.push_back(a);
  return order;
}

std::vector<SparseVec> combine_columns(const std::vector<SparseVec>& V,
                                       const std::vector<SparseVec>& K) {
  std::vector<SparseVec> out;
  out.reserve(K.size());
  for (const auto& kvec : K) {
    std::map<int, Rational> acc;
    for (const auto& [j, w] : kvec.entries) {
      for (const auto& [row, v] : V[j].entries) {
        auto [it, fresh] = acc.try_emplace(row, w * v);
        if (!fresh) {
          it->second += w * v;
          if (sgn(it->second) == 0) acc.erase(it);
        }
      }
    }
    SparseVec col;
    col.entries.assign(acc.begin(), acc.end());
    col.normalize();
    out.push_back(std::move(col));
  }
  return out;
}

}  // namespace

std::vector<SparseVec> singlet_basis(const Algebra& alg, int k) {
  const DegreeSpace space = degree_space(alg.dim(), k);
  const int D = space.size();
  std::vector<SparseVec> V(D);
  for (int i = 0; i < D; ++i) V[i].entries = {{i, Rational(1)}};

  for (int a : generator_order_diagonals_first(alg)) {
    SparseMatrix W(D, static_cast<int>(V.size()));
    for (int j = 0; j < static_cast<int>(V.size()); ++j) {
      for (const auto& [row, q] : V[j].entries) {
        gauss_real_action_on_mask(alg.st, a, space.masks[row],
                                  [&](Mask nm, const Rational& rv) {
                                    W.add(space.index.at(nm), j, q * rv);
                                  });
      }
    }
    std::vector<SparseVec> K = exactlin::kernel_basis(W);
    if (K.empty()) return {};
    if (static_cast<int>(K.size()) == static_cast<int>(V.size())) continue;
    V = combine_columns(V, K);
  }
  return V;
}

int singlet_dimension(const Algebra& alg, int k) {
  if (k < 0 || k > alg.dim()) throw std::invalid_argument("singlet_dimension: k out of range");
  return static_cast<int>(singlet_basis(alg, k).size());
}

poincare::PoincarePolynomial betti_via_singlets(const Algebra& alg) {
  poincare::PoincarePolynomial p;
  p.n = alg.n();
  p.b.resize(static_cast<size_t>(p.n) * p.n, 0);
  for (int k = 0; k <= alg.dim(); ++k) p.b[k] = singlet_dimension(alg, k);
  poincare::validate(p);
  return p;
}

poincare::PoincarePolynomial betti_via_singlets_float(const liealg::OrthonormalBasis& basis,
                                                      double rank_tol) {
  const auto st = liealg::structure_constants(basis);
  const int d = basis.dim();
  poincare::PoincarePolynomial p;
  p.n = basis.n;
  p.b.resize(static_cast<size_t>(p.n) * p.n, 0);
  for (int k = 0; k <= d; ++k) {
    const DegreeSpace space = degree_space(d, k);
    const int D = space.size();
    Eigen::MatrixXd stacked = Eigen::MatrixXd::Zero(static_cast<long>(d) * D, D);
    for (int a = 0; a < d; ++a)
      for (int col = 0; col < D; ++col)
        gauss_real_action_on_mask(st, a, space.masks[col], [&](Mask nm, double val) {
          stacked(static_cast<long>(a) * D + space.index.at(nm), col) += val;
        });
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked);
    const auto& sv = svd.singularValues();
    int rank = 0;
    if (sv.size() > 0 && sv(0) > 0)
      for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > rank_tol * sv(0)) ++rank;
    p.b[k] = D - rank;
  }
  poincare::validate(p);
  return p;
}

namespace {

std::vector<std::vector<int>> odd_power_subsets(int n, int k) {
  std::vector<int> odd;
  for (int m = 3; m <= 2 * n - 1; m += 2) odd.push_back(m);
  std::vector<std::vector<int>> out;
  const int count = static_cast<int>(odd.size());
  for (int mask = 0; mask < (1 << count); ++mask) {
    int sum = 0;
    std::vector<int> powers;
    for (int i = 0; i < count; ++i)
      if (mask >> i & 1) {
        sum += odd[i];
        powers.push_back(odd[i]);
      }
    if (sum == k) out.push_back(std::move(powers));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Complex linear independence of Gaussian-rational coordinate vectors:
/// realified rank of [v_j | i v_j] must be twice the count.
bool independent_over_c(const std::vector<std::pair<SparseVec, SparseVec>>& vecs, int D) {
  std::vector<SparseVec> cols;
  for (const auto& [re, im] : vecs) {
    SparseVec v1;  // [re; im]
    v1.entries = re.entries;
    for (const auto& [i, q] : im.entries) v1.entries.emplace_back(i + D, q);
    SparseVec v2;  // i*(re + i im) = -im + i re
    for (const auto& [i, q] : im.entries) v2.entries.emplace_back(i, -q);
    for (const auto& [i, q] : re.entries) v2.entries.emplace_back(i + D, q);
    cols.push_back(std::move(v1));
    cols.push_back(std::move(v2));
  }
  return exactlin::rank_of_columns(cols, 2 * D) == static_cast<int>(cols.size());
}

}  // namespace

std::vector<Multivector> vacuum_basis(const Algebra& alg, int k) {
  if (k < 0 || k > alg.dim()) throw std::invalid_argument("vacuum_basis: k out of range");
  std::vector<Multivector> out;
  for (const auto& powers : odd_power_subsets(alg.n(), k)) {
    Multivector prod = Multivector::unit(alg.dim());
    for (int m : powers) prod = grassmann::wedge(prod, alg.trace_psi_cached(m));
    if (prod.is_zero()) throw std::logic_error("vacuum_basis: vanishing trace product");
    out.push_back(std::move(prod));
  }

  for (const auto& v : out)
    for (int a = 0; a < alg.dim(); ++a)
      if (!gauss_action(alg, a, v).is_zero())
        throw std::logic_error("vacuum_basis: element not G-invariant");

  const DegreeSpace space = degree_space(alg.dim(), k);
  std::vector<std::pair<SparseVec, SparseVec>> coords;
  coords.reserve(out.size());
  for (const auto& v : out) coords.push_back(complex_coordinates(v, space));
  if (!independent_over_c(coords, space.size()))
    throw std::logic_error("vacuum_basis: dependent trace products");

  if (static_cast<int>(out.size()) != singlet_dimension(alg, k))
    throw std::logic_error("vacuum_basis: count mismatch with singlet dimension");
  return out;
}

std::vector<std::string> vacuum_basis_labels(const Algebra& alg, int k) {
  std::vector<std::string> labels;
  for (const auto& powers : odd_power_subsets(alg.n(), k)) {
    if (powers.empty()) {
      labels.emplace_back("1");
      continue;
    }
    std::ostringstream os;
    for (size_t i = 0; i < powers.size(); ++i) {
      if (i) os << "^";
      os << "Tr(psibar^" << powers[i] << ")";
    }
    labels.push_back(os.str());
  }
  return labels;
}

void PolyGrassState::add(const std::vector<int>& expo, const Multivector& mv) {
  if (mv.is_zero()) return;
  auto [it, fresh] = terms.try_emplace(expo, mv);
  if (!fresh) {
    it->second += mv;
    if (it->second.is_zero()) terms.erase(it);
  }
}

PolyGrassState apply_qbar(const Algebra& alg, const PolyGrassState& s) {
  const int d = alg.dim();
  PolyGrassState out = PolyGrassState::zero(d);
  const GaussRat minus_i(Rational(0), Rational(-1));
  for (const auto& [expo, mv] : s.terms) {
    for (int b = 0; b < d; ++b) {
      if (expo[b] == 0) continue;
      std::vector<int> e2 = expo;
      e2[b] -= 1;
      for (int a = 0; a < d; ++a) {
        const Rational& g = alg.gbar_inv(a, b);
        if (sgn(g) == 0) continue;
        Multivector piece = grassmann::create(a, mv);
        piece *= minus_i * GaussRat(g * expo[b]);
        out.add(e2, piece);
      }
    }
  }
  return out;
}

PolyGrassState apply_q(const Algebra& alg, const PolyGrassState& s) {
  const int d = alg.dim();
  PolyGrassState out = PolyGrassState::zero(d);
  const GaussRat minus_i(Rational(0), Rational(-1));
  for (const auto& [expo, mv] : s.terms) {
    for (int a = 0; a < d; ++a) {
      if (expo[a] == 0) continue;
      std::vector<int> e2 = expo;
      e2[a] -= 1;
      Multivector piece = grassmann::annihilate(a, mv);
      piece *= minus_i * GaussRat(Rational(expo[a]));
      out.add(e2, piece);
    }
  }
  return out;
}

PolyGrassState apply_hamiltonian(const Algebra& alg, const PolyGrassState& s) {
  const int d = alg.dim();
  PolyGrassState out = PolyGrassState::zero(d);
  for (const auto& [expo, mv] : s.terms) {
    for (int a = 0; a < d; ++a) {
      if (expo[a] == 0) continue;
      for (int b = 0; b < d; ++b) {
        const Rational& g = alg.gbar_inv(a, b);
        if (sgn(g) == 0) continue;
        // -1/2 gbar^{ab} d_a d_b
        if (a == b) {
          if (expo[a] < 2) continue;
          std::vector<int> e2 = expo;
          e2[a] -= 2;
          Multivector piece = mv;
          piece *= GaussRat(g * expo[a] * (expo[a] - 1) / -2);
          out.add(e2, piece);
        } else {
          if (expo[b] == 0) continue;
          std::vector<int> e2 = expo;
          e2[a] -= 1;
          e2[b] -= 1;
          Multivector piece = mv;
          piece *= GaussRat(g * expo[a] * expo[b] / -2);
          out.add(e2, piece);
        }
      }
    }
  }
  return out;
}

PolyGrassState apply_gauss_full(const Algebra& alg, int a, const PolyGrassState& s) {
  const int d = alg.dim();
  if (a < 0 || a >= d) throw std::out_of_range("apply_gauss_full: index out of range");
  PolyGrassState out = PolyGrassState::zero(d);
  for (const auto& [expo, mv] : s.terms) {
    // Bosonic rotation -i F_ab^c phi_b d/dphi_c.
    for (const auto& e : alg.st.F_rows[a]) {
      if (expo[e.c] == 0) continue;
      std::vector<int> e2 = expo;
      e2[e.c] -= 1;
      e2[e.b] += 1;
      Multivector piece = mv;
      piece *= GaussRat(Rational(0), -e.val * expo[e.c]);
      out.add(e2, piece);
    }
    // Fermionic adjoint action.
    out.add(expo, gauss_action(alg, a, mv));
  }
  return out;
}

namespace {

using Poly = std::map<std::vector<int>, GaussRat>;

Poly poly_mul(const Poly& p, const Poly& q, int d) {
  Poly r;
  std::vector<int> e(d);
  for (const auto& [e1, c1] : p)
    for (const auto& [e2, c2] : q) {
      for (int i = 0; i < d; ++i) e[i] = e1[i] + e2[i];
      GaussRat c = c1 * c2;
      auto [it, fresh] = r.try_emplace(e, c);
      if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) r.erase(it);
      }
    }
  return r;
}

/// Phi^n as an N x N matrix of polynomials in phi_1..phi_d.
std::vector<std::vector<Poly>> phi_matrix_power(const Algebra& alg, int n) {
  const int N = alg.n();
  const int d = alg.dim();
  std::vector<std::vector<Poly>> phi(N, std::vector<Poly>(N));
  for (int a = 0; a < d; ++a) {
    std::vector<int> e(d, 0);
    e[a] = 1;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        const GaussRat& v = alg.basis.generators[a](i, j);
        if (!v.is_zero()) {
          auto [it, fresh] = phi[i][j].try_emplace(e, v);
          if (!fresh) it->second += v;
        }
      }
  }
  std::vector<std::vector<Poly>> power = phi;
  for (int step = 1; step < n; ++step) {
    std::vector<std::vector<Poly>> next(N, std::vector<Poly>(N));
    for (int i = 0; i < N; ++i)
      for (int k = 0; k < N; ++k) {
        if (power[i][k].empty()) continue;
        for (int j = 0; j < N; ++j) {
          if (phi[k][j].empty()) continue;
          Poly prod = poly_mul(power[i][k], phi[k][j], d);
          for (auto& [e2, c] : prod) {
            auto [it, fresh] = next[i][j].try_emplace(e2, c);
            if (!fresh) {
              it->second += c;
              if (it->second.is_zero()) next[i][j].erase(it);
            }
          }
        }
      }
    power = std::move(next);
  }
  return power;
}

}  // namespace

PolyGrassState trace_phi_state(const Algebra& alg, int n) {
  if (n < 1) throw std::invalid_argument("trace_phi_state: n >= 1 required");
  const auto P = phi_matrix_power(alg, n);
  PolyGrassState out = PolyGrassState::zero(alg.dim());
  const Multivector one = Multivector::unit(alg.dim());
  for (int i = 0; i < alg.n(); ++i)
    for (const auto& [e, c] : P[i][i]) {
      Multivector mv = one;
      mv *= c;
      out.add(e, mv);
    }
  return out;
}

PolyGrassState trace_phi_psibar_state(const Algebra& alg, int k) {
  if (k < 1) throw std::invalid_argument("trace_phi_psibar_state: k >= 1 required");
  const int N = alg.n();
  const int d = alg.dim();
  const auto P = phi_matrix_power(alg, k);
  PolyGrassState out = PolyGrassState::zero(d);
  for (int a = 0; a < d; ++a) {
    // T^a = gbar^{ab} T_b.
    liealg::DenseMatrix<GaussRat> Ta =
        liealg::DenseMatrix<GaussRat>::Constant(N, N, GaussRat(0));
    for (int b = 0; b < d; ++b) {
      const Rational& g = alg.gbar_inv(a, b);
      if (sgn(g) == 0) continue;
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) Ta(i, j) += GaussRat(g) * alg.basis.generators[b](i, j);
    }
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        if (Ta(j, i).is_zero()) continue;
        for (const auto& [e, c] : P[i][j]) {
          Multivector mv = Multivector::basis_element(d, a);
          mv *= c * Ta(j, i);
          out.add(e, mv);
        }
      }
  }
  return out;
}

PolyGrassState trace_phi_times(const Algebra& alg, int n, const Multivector& m) {
  const auto P = phi_matrix_power(alg, n);
  PolyGrassState out = PolyGrassState::zero(alg.dim());
  for (int i = 0; i < alg.n(); ++i)
    for (const auto& [e, c] : P[i][i]) {
      Multivector mv = m;
      mv *= c;
      out.add(e, mv);
    }
  return out;
}

namespace {

/// Exact solve sum_j x_j cols[j] = target over Q; returns nullopt when
/// target is outside the span.
std::optional<std::vector<Rational>> solve_columns(const std::vector<SparseVec>& cols,
                                                   const SparseVec& target, int nrows) {
  SparseMatrix m = SparseMatrix::from_columns(cols, nrows);
  m.append_column(target);
  const int last = static_cast<int>(cols.size());
  for (const auto& kvec : exactlin::kernel_basis(m)) {
    const Rational klast = kvec.at(last);
    if (sgn(klast) == 0) continue;
    std::vector<Rational> x(cols.size(), Rational(0));
    for (const auto& [i, q] : kvec.entries)
      if (i < last) x[i] = -q / klast;
    return x;
  }
  return std::nullopt;
}

}  // namespace

CayleyHamiltonReport verify_cayley_hamilton(const Algebra& alg, int n) {
  const int N = alg.n();
  const int target_power = 2 * n + 1;
  if (n < N || target_power > alg.dim())
    throw std::invalid_argument("verify_cayley_hamilton: need n >= N and 2n+1 <= N^2-1");

  CayleyHamiltonReport rep;
  rep.target_power = target_power;
  const Multivector target = alg.trace_psi_cached(target_power);
  rep.target_is_zero = target.is_zero();

  // Products of distinct primitive traces Tr(psibar^{2m+1}), m < N, of total
  // degree 2n+1; the empty list means only the zero decomposition exists.
  for (const auto& powers : odd_power_subsets(N, target_power)) {
    if (powers.empty()) continue;
    rep.candidates.push_back(powers);
  }

  if (rep.candidates.empty()) {
    rep.expressible = rep.target_is_zero;
    return rep;
  }

  const DegreeSpace space = degree_space(alg.dim(), target_power);
  const int D = space.size();
  std::vector<SparseVec> cols;
  for (const auto& powers : rep.candidates) {
    Multivector prod = Multivector::unit(alg.dim());
    for (int m : powers) prod = grassmann::wedge(prod, alg.trace_psi_cached(m));
    auto [re, im] = complex_coordinates(prod, space);
    SparseVec v1;  // realified candidate and i*candidate
    v1.entries = re.entries;
    for (const auto& [i, q] : im.entries) v1.entries.emplace_back(i + D, q);
    SparseVec v2;
    for (const auto& [i, q] : im.entries) v2.entries.emplace_back(i, -q);
    for (const auto& [i, q] : re.entries) v2.entries.emplace_back(i + D, q);
    cols.push_back(std::move(v1));
    cols.push_back(std::move(v2));
  }
  auto [tre, tim] = complex_coordinates(target, space);
  SparseVec t;
  t.entries = tre.entries;
  for (const auto& [i, q] : tim.entries) t.entries.emplace_back(i + D, q);

  auto sol = solve_columns(cols, t, 2 * D);
  rep.expressible = sol.has_value();
  if (sol) {
    for (size_t j = 0; j < rep.candidates.size(); ++j)
      rep.coefficients.emplace_back((*sol)[2 * j], (*sol)[2 * j + 1]);
  }
  return rep;
}

}  // namespace sunvac::vacuum
