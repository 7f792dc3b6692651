#include "sunvac/exact_linalg.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace sunvac::exactlin {

void SparseVec::add(int i, const Rational& v) {
  if (sgn(v) == 0) return;
  auto it = std::lower_bound(entries.begin(), entries.end(), i,
                             [](const auto& e, int idx) { return e.first < idx; });
  if (it != entries.end() && it->first == i) {
    it->second += v;
    if (sgn(it->second) == 0) entries.erase(it);
  } else {
    entries.insert(it, {i, v});
  }
}

Rational SparseVec::at(int i) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), i,
                             [](const auto& e, int idx) { return e.first < idx; });
  if (it != entries.end() && it->first == i) return it->second;
  return Rational(0);
}

void SparseVec::normalize() {
  if (entries.empty()) return;
  mpz_class den_lcm = 1;
  for (const auto& [i, v] : entries) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                                             v.get_den().get_mpz_t());
  mpz_class content = 0;
  std::vector<mpz_class> nums;
  nums.reserve(entries.size());
  for (const auto& [i, v] : entries) {
    mpz_class z = v.get_num() * (den_lcm / v.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    nums.push_back(std::move(z));
  }
  if (sgn(nums.front()) < 0) content = -content;
  for (size_t k = 0; k < entries.size(); ++k)
    entries[k].second = Rational(nums[k] / content);
}

void SparseMatrix::add(int r, int c, const Rational& v) {
  if (sgn(v) == 0) return;
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("SparseMatrix::add: index out of range");
  auto& row = data_[r];
  auto [it, fresh] = row.try_emplace(c, v);
  if (!fresh) {
    it->second += v;
    if (sgn(it->second) == 0) row.erase(it);
  }
}

void SparseMatrix::stack(const SparseMatrix& other) {
  if (other.cols_ != cols_) throw std::invalid_argument("stack: column count mismatch");
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
  rows_ += other.rows_;
}

void SparseMatrix::append_column(const SparseVec& col) {
  const int c = cols_++;
  for (const auto& [r, v] : col.entries) {
    if (r < 0 || r >= rows_) throw std::out_of_range("append_column: row out of range");
    data_[r][c] = v;
  }
}

SparseMatrix SparseMatrix::from_columns(const std::vector<SparseVec>& cols, int nrows) {
  SparseMatrix m(nrows, static_cast<int>(cols.size()));
  for (int c = 0; c < static_cast<int>(cols.size()); ++c)
    for (const auto& [r, v] : cols[c].entries) m.add(r, c, v);
  return m;
}

namespace {

using IRow = std::vector<std::pair<int, mpz_class>>;  // sorted by column

IRow integerize(const std::map<int, Rational>& row) {
  IRow out;
  if (row.empty()) return out;
  mpz_class den_lcm = 1;
  for (const auto& [c, v] : row)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
  mpz_class content = 0;
  out.reserve(row.size());
  for (const auto& [c, v] : row) {
    mpz_class z = v.get_num() * (den_lcm / v.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    out.emplace_back(c, std::move(z));
  }
  for (auto& [c, z] : out) z /= content;
  return out;
}

void reduce_content(IRow& row) {
  if (row.empty()) return;
  mpz_class content = 0;
  for (const auto& [c, z] : row) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    if (content == 1) return;
  }
  for (auto& [c, z] : row) z /= content;
}

/// row := p * row - v * piv, column-sorted merge, then content reduction.
IRow eliminate_row(const IRow& row, const mpz_class& v, const IRow& piv, const mpz_class& p,
                   int drop_col) {
  IRow out;
  out.reserve(row.size() + piv.size());
  size_t i = 0, j = 0;
  while (i < row.size() || j < piv.size()) {
    if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
      if (row[i].first != drop_col) out.emplace_back(row[i].first, p * row[i].second);
      ++i;
    } else if (i == row.size() || piv[j].first < row[i].first) {
      if (piv[j].first != drop_col) out.emplace_back(piv[j].first, -v * piv[j].second);
      ++j;
    } else {
      if (row[i].first != drop_col) {
        mpz_class z = p * row[i].second - v * piv[j].second;
        if (sgn(z) != 0) out.emplace_back(row[i].first, std::move(z));
      }
      ++i;
      ++j;
    }
  }
  reduce_content(out);
  return out;
}

struct Echelon {
  int rank = 0;
  // Pivot rows in elimination order with their pivot columns. Each pivot row
  // has all earlier pivot columns eliminated from it.
  std::vector<std::pair<int, IRow>> pivots;
  std::vector<char> pivot_col;  // flag per column
};

Echelon eliminate(const SparseMatrix& m) {
  Echelon ech;
  ech.pivot_col.assign(m.cols(), 0);

  std::vector<IRow> rows;
  rows.reserve(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    IRow row = integerize(m.row(r));
    if (!row.empty()) rows.push_back(std::move(row));
  }

  std::vector<std::unordered_set<int>> col_rows(m.cols());
  for (int r = 0; r < static_cast<int>(rows.size()); ++r)
    for (const auto& [c, z] : rows[r]) col_rows[c].insert(r);
  std::vector<char> active(rows.size(), 1);

  using HeapItem = std::pair<size_t, int>;  // (count, col)
  std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>> heap;
  for (int c = 0; c < m.cols(); ++c)
    if (!col_rows[c].empty()) heap.emplace(col_rows[c].size(), c);

  auto detach = [&](int r) {
    for (const auto& [c, z] : rows[r]) {
      col_rows[c].erase(r);
      if (!col_rows[c].empty() && !ech.pivot_col[c]) heap.emplace(col_rows[c].size(), c);
    }
  };
  auto attach = [&](int r) {
    for (const auto& [c, z] : rows[r]) {
      col_rows[c].insert(r);
      if (!ech.pivot_col[c]) heap.emplace(col_rows[c].size(), c);
    }
  };

  while (!heap.empty()) {
    auto [cnt, c] = heap.top();
    heap.pop();
    if (ech.pivot_col[c] || col_rows[c].empty() || col_rows[c].size() != cnt) continue;

    // Pivot row: fewest entries, then smallest pivot magnitude.
    int best = -1;
    for (int r : col_rows[c]) {
      if (best < 0 || rows[r].size() < rows[best].size()) {
        best = r;
      } else if (rows[r].size() == rows[best].size()) {
        auto val = [&](int rr) {
          for (const auto& [cc, z] : rows[rr])
            if (cc == c) return abs(z);
          return mpz_class(0);
        };
        if (val(r) < val(best)) best = r;
      }
    }

    IRow piv = rows[best];
    mpz_class p;
    for (const auto& [cc, z] : piv)
      if (cc == c) p = z;

    std::vector<int> victims(col_rows[c].begin(), col_rows[c].end());
    for (int r : victims) {
      if (r == best) continue;
      mpz_class v;
      for (const auto& [cc, z] : rows[r])
        if (cc == c) v = z;
      detach(r);
      rows[r] = eliminate_row(rows[r], v, piv, p, c);
      if (rows[r].empty())
        active[r] = 0;
      else
        attach(r);
    }

    detach(best);
    active[best] = 0;
    ech.pivot_col[c] = 1;
    ech.rank += 1;
    ech.pivots.emplace_back(c, std::move(piv));
  }
  return ech;
}

}  // namespace

int rank(const SparseMatrix& m) { return eliminate(m).rank; }

std::vector<SparseVec> kernel_basis(const SparseMatrix& m) {
  Echelon ech = eliminate(m);
  std::vector<SparseVec> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (ech.pivot_col[f]) continue;
    // x_f = 1; solve pivot rows in reverse elimination order. A pivot row
    // processed at step s contains no pivot column of steps < s.
    std::unordered_map<int, Rational> x;
    x[f] = Rational(1);
    for (auto it = ech.pivots.rbegin(); it != ech.pivots.rend(); ++it) {
      const auto& [pc, row] = *it;
      Rational acc(0);
      Rational pval(0);
      for (const auto& [c, z] : row) {
        if (c == pc) {
          pval = Rational(z);
          continue;
        }
        auto found = x.find(c);
        if (found != x.end()) acc += Rational(z) * found->second;
      }
      if (sgn(acc) != 0) x[pc] = -acc / pval;
    }
    SparseVec v;
    v.entries.reserve(x.size());
    for (const auto& [i, val] : x)
      if (sgn(val) != 0) v.entries.emplace_back(i, val);
    std::sort(v.entries.begin(), v.entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    v.normalize();
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank_of_columns(const std::vector<SparseVec>& cols, int nrows) {
  return rank(SparseMatrix::from_columns(cols, nrows));
}

bool in_column_span(const std::vector<SparseVec>& cols, const SparseVec& target, int nrows) {
  if (target.is_zero()) return true;
  SparseMatrix m = SparseMatrix::from_columns(cols, nrows);
  const int base = rank(m);
  m.append_column(target);
  return rank(m) == base;
}

}  // namespace sunvac::exactlin
