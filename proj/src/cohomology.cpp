#include "sunvac/cohomology.hpp"

#include <bit>
#include <map>
#include <stdexcept>

#include "sunvac/vacuum.hpp"

namespace sunvac::cohomology {

using exactlin::SparseMatrix;
using exactlin::SparseVec;
using Mask = Multivector::Mask;

namespace {

/// Root-vector generators of the complexified algebra: per (i<j) pair the two
/// matrix units E_ij, E_ji, then the diagonal differences. Same layout as the
/// rational basis, so index a/2, diagonal offsets line up.
std::vector<liealg::DenseMatrix<GaussRat>> root_generators(int n) {
  std::vector<liealg::DenseMatrix<GaussRat>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto Eij = liealg::DenseMatrix<GaussRat>::Constant(n, n, GaussRat(0));
      Eij(i, j) = GaussRat(1);
      out.push_back(Eij);
      auto Eji = liealg::DenseMatrix<GaussRat>::Constant(n, n, GaussRat(0));
      Eji(j, i) = GaussRat(1);
      out.push_back(Eji);
    }
  for (int k = 0; k + 1 < n; ++k) {
    auto H = liealg::DenseMatrix<GaussRat>::Constant(n, n, GaussRat(0));
    H(k, k) = GaussRat(1);
    H(k + 1, k + 1) = GaussRat(-1);
    out.push_back(H);
  }
  return out;
}

}  // namespace

CEDifferential::CEDifferential(const Algebra& alg) : n_(alg.n()), dim_(alg.dim()) {
  // d e_a = -1/2 F_bc^a e_b e_c; F is antisymmetric in (b,c), so the b<c
  // coefficient is -F_bc^a.
  de_.assign(dim_, {});
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b)
      for (int c = b + 1; c < dim_; ++c) {
        const Rational& F = alg.st.f(b, c, a);
        if (sgn(F) != 0) de_[a].push_back({b, c, -F});
      }

  // Root-vector complex: real structure constants of the complexified algebra.
  const auto roots = root_generators(n_);
  liealg::DenseMatrix<GaussRat> gram =
      liealg::DenseMatrix<GaussRat>::Constant(dim_, dim_, GaussRat(0));
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b) gram(a, b) = (roots[a] * roots[b]).trace();
  de_root_.assign(dim_, {});
  for (int b = 0; b < dim_; ++b)
    for (int c = b + 1; c < dim_; ++c) {
      liealg::DenseMatrix<GaussRat> comm = roots[b] * roots[c] - roots[c] * roots[b];
      Eigen::Matrix<GaussRat, Eigen::Dynamic, 1> rhs(dim_);
      bool all_zero = true;
      for (int e = 0; e < dim_; ++e) {
        rhs(e) = (roots[e] * comm).trace();
        all_zero = all_zero && rhs(e).is_zero();
      }
      if (all_zero) continue;
      auto x = liealg::detail::solve_exact(gram, rhs);
      for (int a = 0; a < dim_; ++a) {
        if (x(a).is_zero()) continue;
        if (!x(a).is_real())
          throw std::logic_error("root complex: non-real structure constant");
        // d eps_a picks up -c^a_bc.
        de_root_[a].push_back({b, c, -x(a).re()});
      }
    }

  // Torus weights: weight(E_ij) = u_i - u_j, Cartans weight zero.
  root_weight_.assign(dim_, std::vector<int>(n_, 0));
  {
    int idx = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        root_weight_[idx][i] = 1;
        root_weight_[idx][j] = -1;
        ++idx;
        root_weight_[idx][i] = -1;
        root_weight_[idx][j] = 1;
        ++idx;
      }
  }

  // Dual-coordinate substitution: e_a = sum_alpha M_{alpha a} eps_alpha where
  // T'_alpha = M_{alpha a} T_a expresses the root vectors in the rational
  // basis: E_ij = (S_ij + i A_ij)/2, E_ji = (S_ij - i A_ij)/2.
  subst_.assign(dim_, Multivector(dim_));
  {
    const Rational half(1, 2);
    int idx = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        const int s = idx, aa = idx + 1;  // S_ij, A_ij positions
        subst_[s].add_term(Mask(1) << s, GaussRat(half));
        subst_[s].add_term(Mask(1) << aa, GaussRat(half));
        // e_A = (i/2) eps_ij - (i/2) eps_ji; eps indices match s, aa slots.
        subst_[aa] = Multivector(dim_);
        subst_[aa].add_term(Mask(1) << s, GaussRat(Rational(0), half));
        subst_[aa].add_term(Mask(1) << aa, GaussRat(Rational(0), -half));
        idx += 2;
      }
    for (int k = 0; k + 1 < n_; ++k) {
      subst_[idx] = Multivector::basis_element(dim_, idx);
      ++idx;
    }
  }
}

namespace {

/// Shared derivation: x -> sum over set bits a of sign * de(a) ^ rest.
template <typename Table>
Multivector apply_derivation(const Table& de, int dim, const Multivector& x) {
  Multivector out(dim);
  for (const auto& [m, coeff] : x.terms()) {
    Mask t = m;
    while (t) {
      const int a = std::countr_zero(t);
      t &= t - 1;
      const Mask abit = Mask(1) << a;
      const Mask rest = m & ~abit;
      const int sign_a = (std::popcount(m & (abit - 1)) & 1) ? -1 : 1;
      for (const auto& term : de[a]) {
        const Mask bc = (Mask(1) << term.b) | (Mask(1) << term.c);
        if (bc & rest) continue;
        int sign = sign_a * grassmann::merge_sign(bc, rest);
        GaussRat c = coeff * GaussRat(term.coeff);
        if (sign < 0) c = -c;
        out.add_term(bc | rest, c);
      }
    }
  }
  return out;
}

}  // namespace

Multivector CEDifferential::apply(const Multivector& x) const {
  return apply_derivation(de_, dim_, x);
}

Multivector CEDifferential::apply_root(const Multivector& x) const {
  return apply_derivation(de_root_, dim_, x);
}

Multivector CEDifferential::to_root_coordinates(const Multivector& x) const {
  Multivector out(dim_);
  for (const auto& [m, coeff] : x.terms()) {
    Multivector piece = Multivector::unit(dim_);
    piece *= coeff;
    Mask t = m;
    while (t) {
      const int a = std::countr_zero(t);
      t &= t - 1;
      piece = grassmann::wedge(piece, subst_[a]);
    }
    out += piece;
  }
  return out;
}

SparseMatrix CEDifferential::matrix(int k) const {
  const auto dom = vacuum::degree_space(dim_, k);
  const auto img = vacuum::degree_space(dim_, k + 1);
  SparseMatrix m(img.size(), dom.size());
  for (int col = 0; col < dom.size(); ++col) {
    Multivector x(dim_);
    x.add_term(dom.masks[col], GaussRat(1));
    const Multivector dx = apply(x);
    for (const auto& [mask, c] : dx.terms()) {
      if (!c.is_real()) throw std::logic_error("CE matrix: non-real entry");
      m.add(img.index.at(mask), col, c.re());
    }
  }
  return m;
}

bool CEDifferential::is_cocycle(const Multivector& x) const {
  if (!x.is_homogeneous()) throw std::invalid_argument("is_cocycle: mixed degrees");
  return apply(x).is_zero();
}

int CEDifferential::rank_dk_direct(int k) const {
  if (k < 0 || k >= dim_) return 0;
  return exactlin::rank(matrix(k));
}

namespace {

using WeightKey = std::vector<int>;

WeightKey mask_weight(const std::vector<std::vector<int>>& w, Mask m, int n) {
  WeightKey key(n, 0);
  while (m) {
    const int a = std::countr_zero(m);
    m &= m - 1;
    for (int t = 0; t < n; ++t) key[t] += w[a][t];
  }
  return key;
}

}  // namespace

int CEDifferential::rank_dk_root(int k) const {
  if (k < 0 || k >= dim_) return 0;
  const auto dom = vacuum::degree_space(dim_, k);
  // Group domain monomials by weight; image indices assigned lazily per block.
  std::map<WeightKey, std::vector<Mask>> blocks;
  for (Mask m : dom.masks) blocks[mask_weight(root_weight_, m, n_)].push_back(m);

  int total_rank = 0;
  for (const auto& [key, masks] : blocks) {
    std::map<Mask, int> img_index;
    std::vector<std::pair<std::pair<int, int>, Rational>> entries;
    int rows = 0;
    for (int col = 0; col < static_cast<int>(masks.size()); ++col) {
      Multivector x(dim_);
      x.add_term(masks[col], GaussRat(1));
      const Multivector dx = apply_derivation(de_root_, dim_, x);
      for (const auto& [mask, c] : dx.terms()) {
        auto [it, fresh] = img_index.try_emplace(mask, rows);
        if (fresh) ++rows;
        if (!c.is_real()) throw std::logic_error("root complex: non-real d entry");
        entries.push_back({{it->second, col}, c.re()});
      }
    }
    SparseMatrix mat(rows, static_cast<int>(masks.size()));
    for (const auto& [rc, v] : entries) mat.add(rc.first, rc.second, v);
    total_rank += exactlin::rank(mat);
  }
  return total_rank;
}

int CEDifferential::rank_dk(int k) const {
  if (k < 0 || k >= dim_) return 0;
  const auto dom = vacuum::degree_space(dim_, k);
  // Small charts are cheapest head-on; large ones split into weight blocks.
  if (dom.size() <= 256 && vacuum::degree_space(dim_, k + 1).size() <= 256)
    return rank_dk_direct(k);
  return rank_dk_root(k);
}

bool CEDifferential::is_coboundary(const Multivector& x) const {
  if (!x.is_homogeneous()) throw std::invalid_argument("is_coboundary: mixed degrees");
  if (x.is_zero()) return true;
  const int k = x.degree();
  if (k == 0) return false;  // only the zero scalar is exact

  const Multivector xr = to_root_coordinates(x);
  // Split by weight; each component must be exact inside its own block.
  std::map<WeightKey, Multivector> comps;
  for (const auto& [mask, c] : xr.terms()) {
    auto key = mask_weight(root_weight_, mask, n_);
    auto [it, fresh] = comps.try_emplace(key, Multivector(dim_));
    it->second.add_term(mask, c);
  }

  const auto below = vacuum::degree_space(dim_, k - 1);
  for (auto& [key, comp] : comps) {
    // Columns: d(monomial) for every degree-(k-1) root monomial of this weight.
    std::map<Mask, int> img_index;
    int rows = 0;
    std::vector<SparseVec> cols;
    for (Mask m : below.masks) {
      if (mask_weight(root_weight_, m, n_) != key) continue;
      Multivector y(dim_);
      y.add_term(m, GaussRat(1));
      const Multivector dy = apply_derivation(de_root_, dim_, y);
      if (dy.is_zero()) continue;
      SparseVec col;
      for (const auto& [mask, c] : dy.terms()) {
        auto [it, fresh] = img_index.try_emplace(mask, rows);
        if (fresh) ++rows;
        col.add(it->second, c.re());
      }
      cols.push_back(std::move(col));
    }
    SparseVec re, im;
    for (const auto& [mask, c] : comp.terms()) {
      auto it = img_index.find(mask);
      if (it == img_index.end()) {
        // The component touches a monomial no image reaches.
        if (!c.is_zero()) return false;
        continue;
      }
      re.add(it->second, c.re());
      im.add(it->second, c.im());
    }
    if (!exactlin::in_column_span(cols, re, rows)) return false;
    if (!exactlin::in_column_span(cols, im, rows)) return false;
  }
  return true;
}

poincare::PoincarePolynomial CEDifferential::betti() const {
  poincare::PoincarePolynomial p;
  p.n = n_;
  p.b.assign(static_cast<size_t>(n_) * n_, 0);
  std::vector<int> ranks(dim_ + 1, 0);
  for (int k = 0; k < dim_; ++k) ranks[k] = rank_dk(k);
  const auto binom = [&](int k) {
    return static_cast<long long>(vacuum::degree_space(dim_, k).size());
  };
  for (int k = 0; k <= dim_; ++k) {
    const int prev = k == 0 ? 0 : ranks[k - 1];
    const int cur = k == dim_ ? 0 : ranks[k];
    p.b[k] = binom(k) - cur - prev;
  }
  poincare::validate(p);
  return p;
}

poincare::PoincarePolynomial betti_via_cohomology(const Algebra& alg) {
  return CEDifferential(alg).betti();
}

}  // namespace sunvac::cohomology
