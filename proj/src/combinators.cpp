#include "aqecc/combinators.hpp"

#include <stdexcept>

namespace aqecc {

LinearCode puncture(const LinearCode& c, std::size_t i) {
  if (c.n() < 2) throw std::invalid_argument("puncturing needs length >= 2");
  if (i >= c.n()) throw std::invalid_argument("coordinate out of range");
  GfMat m(c.field(), c.k(), c.n() - 1);
  for (std::size_t r = 0; r < c.k(); ++r) {
    std::size_t out = 0;
    for (std::size_t col = 0; col < c.n(); ++col) {
      if (col == i) continue;
      m.at(r, out++) = c.generator().at(r, col);
    }
  }
  return LinearCode::from_matrix(std::move(m));
}

LinearCode shorten(const LinearCode& c, std::size_t i) {
  if (c.n() < 2) throw std::invalid_argument("shortening needs length >= 2");
  if (i >= c.n()) throw std::invalid_argument("coordinate out of range");
  const FiniteField& F = *c.field();
  // eliminate column i, drop the eliminating row, then delete the column
  GfMat m = c.generator();
  std::size_t pivot = m.rows;
  for (std::size_t r = 0; r < m.rows; ++r)
    if (m.at(r, i) != 0) {
      pivot = r;
      break;
    }
  std::vector<std::vector<GfElem>> rows;
  for (std::size_t r = 0; r < m.rows; ++r) {
    if (r == pivot) continue;
    std::vector<GfElem> row;
    row.reserve(c.n() - 1);
    GfElem f = 0;
    if (pivot < m.rows && m.at(r, i) != 0)
      f = F.div(m.at(r, i), m.at(pivot, i));
    for (std::size_t col = 0; col < c.n(); ++col) {
      if (col == i) continue;
      GfElem v = m.at(r, col);
      if (f != 0) v = F.sub(v, F.mul(f, m.at(pivot, col)));
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  return LinearCode(c.field(), c.n() - 1, rows);
}

LinearCode extend(const LinearCode& c) {
  const FiniteField& F = *c.field();
  GfMat m(c.field(), c.k(), c.n() + 1);
  for (std::size_t r = 0; r < c.k(); ++r) {
    GfElem sum = 0;
    for (std::size_t col = 0; col < c.n(); ++col) {
      GfElem v = c.generator().at(r, col);
      m.at(r, col) = v;
      sum = F.add(sum, v);
    }
    m.at(r, c.n()) = F.neg(sum);
  }
  return LinearCode::from_matrix(std::move(m));
}

LinearCode direct_sum(const LinearCode& a, const LinearCode& b) {
  if (!a.field()->same_field(*b.field()))
    throw std::invalid_argument("direct sum requires a common field");
  GfMat m(a.field(), a.k() + b.k(), a.n() + b.n());
  for (std::size_t r = 0; r < a.k(); ++r)
    for (std::size_t col = 0; col < a.n(); ++col)
      m.at(r, col) = a.generator().at(r, col);
  for (std::size_t r = 0; r < b.k(); ++r)
    for (std::size_t col = 0; col < b.n(); ++col)
      m.at(a.k() + r, a.n() + col) = b.generator().at(r, col);
  return LinearCode::from_matrix(std::move(m));
}

LinearCode uuv(const LinearCode& c1, const LinearCode& c2) {
  if (!c1.field()->same_field(*c2.field()))
    throw std::invalid_argument("(u|u+v) requires a common field");
  if (c1.n() != c2.n())
    throw std::invalid_argument("(u|u+v) requires equal lengths");
  const std::size_t n = c1.n();
  GfMat m(c1.field(), c1.k() + c2.k(), 2 * n);
  for (std::size_t r = 0; r < c1.k(); ++r)
    for (std::size_t col = 0; col < n; ++col) {
      GfElem v = c1.generator().at(r, col);
      m.at(r, col) = v;
      m.at(r, n + col) = v;
    }
  for (std::size_t r = 0; r < c2.k(); ++r)
    for (std::size_t col = 0; col < n; ++col)
      m.at(c1.k() + r, n + col) = c2.generator().at(r, col);
  return LinearCode::from_matrix(std::move(m));
}

}  // namespace aqecc
