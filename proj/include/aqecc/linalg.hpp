#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "aqecc/galois.hpp"

namespace aqecc {

/// Dense row-major matrix over a finite field.
struct GfMat {
  FieldPtr field;
  std::size_t rows = 0, cols = 0;
  std::vector<GfElem> a;

  GfMat() = default;
  GfMat(FieldPtr f, std::size_t r, std::size_t c)
      : field(std::move(f)), rows(r), cols(c), a(r * c, 0) {}

  GfElem& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  GfElem at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
  std::span<const GfElem> row(std::size_t r) const {
    return std::span<const GfElem>(a).subspan(r * cols, cols);
  }

  bool operator==(const GfMat& o) const {
    return field->same_field(*o.field) && rows == o.rows && cols == o.cols &&
           a == o.a;
  }
};

/// Reduced row echelon form with zero rows dropped; unique for the row space.
GfMat rref(const GfMat& m);
std::size_t gf_rank(const GfMat& m);
/// Rows spanning {v : m v = 0}, in canonical (rref) form.
GfMat right_nullspace(const GfMat& m);
GfMat gf_mat_mul(const GfMat& a, const GfMat& b);
std::optional<GfMat> gf_mat_inverse(const GfMat& m);
GfMat vstack(const GfMat& a, const GfMat& b);
GfMat transpose(const GfMat& m);
std::vector<GfElem> mat_vec(const GfMat& m, std::span<const GfElem> v);
/// Pivot columns of a matrix already in rref.
std::vector<std::size_t> pivot_columns(const GfMat& r);
/// Membership of v in the row space of an rref matrix.
bool in_row_space(const GfMat& r, std::span<const GfElem> v);

}  // namespace aqecc
