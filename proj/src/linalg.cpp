#include "aqecc/linalg.hpp"

#include <stdexcept>

namespace aqecc {

GfMat rref(const GfMat& m) {
  const FiniteField& F = *m.field;
  GfMat r = m;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < r.cols && pr < r.rows; ++c) {
    std::size_t pivot = pr;
    while (pivot < r.rows && r.at(pivot, c) == 0) ++pivot;
    if (pivot == r.rows) continue;
    if (pivot != pr)
      for (std::size_t j = 0; j < r.cols; ++j)
        std::swap(r.at(pivot, j), r.at(pr, j));
    GfElem scale = F.inv(r.at(pr, c));
    if (scale != 1)
      for (std::size_t j = c; j < r.cols; ++j)
        r.at(pr, j) = F.mul(r.at(pr, j), scale);
    for (std::size_t i = 0; i < r.rows; ++i) {
      if (i == pr) continue;
      GfElem f = r.at(i, c);
      if (f == 0) continue;
      for (std::size_t j = c; j < r.cols; ++j)
        r.at(i, j) = F.sub(r.at(i, j), F.mul(f, r.at(pr, j)));
    }
    ++pr;
  }
  r.a.resize(pr * r.cols);
  r.rows = pr;
  return r;
}

std::size_t gf_rank(const GfMat& m) { return rref(m).rows; }

std::vector<std::size_t> pivot_columns(const GfMat& r) {
  std::vector<std::size_t> pivots;
  std::size_t c = 0;
  for (std::size_t i = 0; i < r.rows; ++i) {
    while (c < r.cols && r.at(i, c) == 0) ++c;
    if (c == r.cols) break;
    pivots.push_back(c++);
  }
  return pivots;
}

GfMat right_nullspace(const GfMat& m) {
  const FiniteField& F = *m.field;
  GfMat r = rref(m);
  auto pivots = pivot_columns(r);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;

  GfMat ns(m.field, m.cols - pivots.size(), m.cols);
  std::size_t row = 0;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    ns.at(row, f) = 1;
    for (std::size_t j = 0; j < pivots.size(); ++j)
      ns.at(row, pivots[j]) = F.neg(r.at(j, f));
    ++row;
  }
  return rref(ns);
}

GfMat gf_mat_mul(const GfMat& a, const GfMat& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix shape mismatch");
  const FiniteField& F = *a.field;
  GfMat c(a.field, a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      GfElem v = a.at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j)
        c.at(i, j) = F.add(c.at(i, j), F.mul(v, b.at(k, j)));
    }
  return c;
}

std::optional<GfMat> gf_mat_inverse(const GfMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse of non-square matrix");
  const FiniteField& F = *m.field;
  GfMat aug(m.field, m.rows, 2 * m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols + i) = 1;
  }
  GfMat r = rref(aug);
  if (r.rows != m.rows) return std::nullopt;
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (r.at(i, j) != (i == j ? 1u : 0u)) return std::nullopt;
  GfMat inv(m.field, m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) inv.at(i, j) = r.at(i, m.cols + j);
  (void)F;
  return inv;
}

GfMat vstack(const GfMat& a, const GfMat& b) {
  if (a.cols != b.cols) throw std::invalid_argument("column count mismatch");
  GfMat c(a.field, a.rows + b.rows, a.cols);
  std::copy(a.a.begin(), a.a.end(), c.a.begin());
  std::copy(b.a.begin(), b.a.end(), c.a.begin() + static_cast<std::ptrdiff_t>(a.a.size()));
  return c;
}

GfMat transpose(const GfMat& m) {
  GfMat t(m.field, m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

bool in_row_space(const GfMat& r, std::span<const GfElem> v) {
  if (v.size() != r.cols) throw std::invalid_argument("vector length mismatch");
  const FiniteField& F = *r.field;
  std::vector<GfElem> w(v.begin(), v.end());
  auto pivots = pivot_columns(r);
  for (std::size_t j = 0; j < r.rows; ++j) {
    GfElem f = w[pivots[j]];
    if (f == 0) continue;
    for (std::size_t c = pivots[j]; c < r.cols; ++c)
      w[c] = F.sub(w[c], F.mul(f, r.at(j, c)));
  }
  return std::all_of(w.begin(), w.end(), [](GfElem x) { return x == 0; });
}

std::vector<GfElem> mat_vec(const GfMat& m, std::span<const GfElem> v) {
  if (v.size() != m.cols) throw std::invalid_argument("vector length mismatch");
  const FiniteField& F = *m.field;
  std::vector<GfElem> out(m.rows, 0);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0 && v[j] != 0)
        out[i] = F.add(out[i], F.mul(m.at(i, j), v[j]));
  return out;
}

}  // namespace aqecc
