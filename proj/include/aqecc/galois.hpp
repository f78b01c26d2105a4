#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace aqecc {

/// Element of GF(p^m), stored as its index in [0, q).  The base-p digits of
/// the index are the coefficients of the representing polynomial, lowest
/// degree first.
using GfElem = std::uint32_t;

/// Exact arithmetic for GF(p^m) under the canonical modulus: the monic
/// irreducible polynomial of degree m over GF(p) with primitive root x,
/// smallest in the base-p integer encoding of its coefficient tuple.
/// Two fields with equal (p, m) always share the same modulus, element
/// indexing and generator, so results are reproducible across runs.
class FiniteField {
 public:
  static constexpr std::uint64_t kDefaultFieldBudget = 256;

  /// Canonical field, memoized per (p, m). Throws std::invalid_argument for
  /// non-prime p, m == 0, or p^m > field_budget.
  static std::shared_ptr<const FiniteField> make(
      std::uint32_t p, std::uint32_t m,
      std::uint64_t field_budget = kDefaultFieldBudget);

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint64_t q() const { return q_; }

  /// Modulus coefficients, ascending degree, size m+1, monic.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  GfElem add(GfElem a, GfElem b) const { return add_[a * q_ + b]; }
  GfElem sub(GfElem a, GfElem b) const { return add_[a * q_ + neg_[b]]; }
  GfElem neg(GfElem a) const { return neg_[a]; }
  GfElem mul(GfElem a, GfElem b) const { return mul_[a * q_ + b]; }
  GfElem inv(GfElem a) const;  // throws std::domain_error on 0
  GfElem div(GfElem a, GfElem b) const { return mul(a, inv(b)); }
  GfElem pow(GfElem a, std::uint64_t e) const;
  GfElem frobenius(GfElem a) const { return frob_[a]; }  // a^p

  /// The class of x, a primitive element by construction.
  GfElem generator() const { return generator_; }
  std::uint64_t element_order(GfElem a) const;  // multiplicative order

  /// Base-p digits of the index = polynomial coefficients, ascending. Size m.
  std::vector<std::uint32_t> coeffs(GfElem a) const;
  GfElem from_coeffs(std::span<const std::uint32_t> c) const;

  /// tr_{q/p}(a) = sum of a^{p^i}, i < m.  Result is a constant (index < p).
  GfElem trace_to_prime(GfElem a) const;

  bool same_field(const FiniteField& o) const {
    return p_ == o.p_ && m_ == o.m_;
  }

 private:
  FiniteField(std::uint32_t p, std::uint32_t m);

  std::uint32_t p_, m_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  GfElem generator_;
  std::vector<GfElem> add_, mul_;         // q*q tables
  std::vector<GfElem> neg_, frob_, inv_;  // q tables
  std::vector<std::uint32_t> log_;        // log base generator, log_[0] unused
  std::vector<GfElem> exp_;               // generator powers, size q-1
};

using FieldPtr = std::shared_ptr<const FiniteField>;

/// Subfield relation GF(p^s) <= GF(p^m), s | m, both canonical. The embedding
/// sends the bottom generator to the smallest root of the bottom modulus in
/// the top field.
class FieldTower {
 public:
  static std::shared_ptr<const FieldTower> make(FieldPtr bottom, FieldPtr top);

  const FieldPtr& bottom() const { return bottom_; }
  const FieldPtr& top() const { return top_; }
  std::uint32_t degree() const { return degree_; }  // [top : bottom]

  GfElem embed(GfElem bottom_elem) const { return embed_[bottom_elem]; }
  /// Pull a top element back to the bottom field, if it lies in the image.
  std::optional<GfElem> restrict_to_bottom(GfElem top_elem) const;
  bool in_bottom(GfElem top_elem) const {
    return restrict_to_bottom(top_elem).has_value();
  }

  /// tr_{top/bottom}(a) = sum of a^{q_b^i}, i < degree. Returns a bottom
  /// element; throws std::logic_error if the sum escapes the subfield
  /// (impossible for a valid tower).
  GfElem trace(GfElem top_elem) const;

 private:
  FieldTower(FieldPtr bottom, FieldPtr top);
  FieldPtr bottom_, top_;
  std::uint32_t degree_;
  std::vector<GfElem> embed_;                   // size q_bottom
  std::vector<std::optional<GfElem>> restrict_; // size q_top
};

using TowerPtr = std::shared_ptr<const FieldTower>;

/// Ordered basis of the top field of a tower over its bottom field.
/// Construction verifies linear independence exhaustively (the coordinate
/// table is built by enumerating all q_bottom^degree combinations).
class FieldBasis {
 public:
  FieldBasis(TowerPtr tower, std::vector<GfElem> elements);

  /// {1, g, g^2, ...} with g the top-field generator.
  static FieldBasis polynomial(TowerPtr tower);
  /// Canonical normal basis (b, b^q) of a quadratic tower: smallest b that
  /// is independent of its conjugate.
  static FieldBasis normal(TowerPtr tower);

  const TowerPtr& tower() const { return tower_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(elements_.size()); }
  const std::vector<GfElem>& elements() const { return elements_; }

  /// Coordinates of a top element over the bottom field, length = size().
  std::vector<GfElem> coords(GfElem top_elem) const;
  GfElem combine(std::span<const GfElem> bottom_coords) const;

  /// Dual basis: tr(b_i * b*_j) = delta_ij. Involution.
  FieldBasis dual() const;
  /// Gram matrix M_ij = tr(b_i b_j) over the bottom field.
  std::vector<std::vector<GfElem>> gram() const;
  bool is_self_dual() const;

  bool operator==(const FieldBasis& o) const {
    return tower_ == o.tower_ && elements_ == o.elements_;
  }

 private:
  TowerPtr tower_;
  std::vector<GfElem> elements_;
  std::vector<std::uint32_t> combo_of_;  // element index -> coordinate combo
};

}  // namespace aqecc
