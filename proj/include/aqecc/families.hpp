#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "aqecc/css.hpp"
#include "aqecc/lincode.hpp"

namespace aqecc {

// --- Generalized Reed-Muller -----------------------------------------------

struct GrmSpec {
  std::uint64_t q = 0;
  std::uint32_t m = 0, alpha = 0;
  std::size_t predicted_k = 0;
  std::uint64_t predicted_d = 0;
  std::uint32_t alpha_dual = 0;  // m(q-1)-1-alpha
};

/// Dimension formula: sum_i (-1)^i C(m,i) C(m+alpha-iq, alpha-iq).
std::size_t grm_dimension(std::uint64_t q, std::uint32_t m, std::uint32_t alpha);
/// Distance formula: (t+1) q^u with m(q-1)-alpha = (q-1)u + t, 0 <= t < q-1.
std::uint64_t grm_distance(std::uint64_t q, std::uint32_t m, std::uint32_t alpha);

/// Evaluation code of m-variate polynomials of total degree <= alpha (each
/// exponent < q) at all q^m points; points ordered by index tuples, monomials
/// graded-lex.
std::pair<LinearCode, GrmSpec> grm(const FieldPtr& field, std::uint32_t m,
                                   std::uint32_t alpha);

/// Asymmetric quantum GRM code over GF(p) from nested GRM codes over
/// GF(q=p^t) expanded by `basis` (default: polynomial basis of GF(q)/GF(p)).
AqeccDerivation grm_aqecc(std::uint32_t p, std::uint32_t t, std::uint32_t m,
                          std::uint32_t alpha1, std::uint32_t alpha2,
                          const std::optional<FieldBasis>& basis = std::nullopt,
                          const Budget& budget = {});

// --- Character codes --------------------------------------------------------

/// s_m(r) = sum_{i<=r} C(m, i).
std::size_t character_dimension(std::uint32_t m, std::uint32_t r);

/// Span of the +-1 character vectors chi_y(x) = (-1)^{x.y} with wt(y) <= r,
/// over odd-characteristic GF(q): parameters [2^m, s_m(r), 2^{m-r}].
LinearCode character_code(const FieldPtr& field, std::uint32_t r,
                          std::uint32_t m);

AqeccDerivation character_aqecc(std::uint32_t p, std::uint32_t t,
                                std::uint32_t m, std::uint32_t r1,
                                std::uint32_t r2,
                                const std::optional<FieldBasis>& basis = std::nullopt,
                                const Budget& budget = {});

// --- BCH codes ---------------------------------------------------------------

struct BchSpec {
  std::uint64_t q = 0;
  std::size_t n = 0;
  std::uint32_t b = 1, delta = 2;
  std::uint32_t splitting_degree = 0;  // ord_n(q)
  std::vector<std::vector<std::uint32_t>> cosets;
  std::vector<GfElem> gen_poly;  // ascending, over GF(q)
};

std::vector<std::uint32_t> cyclotomic_coset(std::uint64_t q, std::size_t n,
                                            std::uint32_t e);
std::uint32_t multiplicative_order(std::uint64_t q, std::size_t n);

/// Cyclic code with g(x) = lcm of the minimal polynomials of
/// alpha^b .. alpha^{b+delta-2}; dimension n - deg g.
std::pair<LinearCode, BchSpec> bch(const FieldPtr& field, std::size_t n,
                                   std::uint32_t b, std::uint32_t delta,
                                   std::uint64_t field_budget = FiniteField::kDefaultFieldBudget);

/// Expanded AQECC from the nested narrow-sense pair C1perp inside C2;
/// hypothesis gates: delta ranges, distinct coset unions, nesting and the
/// dimension formulas.
AqeccDerivation bch_nested_aqecc(std::uint32_t p, std::uint32_t t, std::size_t n,
                                std::uint32_t delta1, std::uint32_t delta2,
                                const std::optional<FieldBasis>& basis = std::nullopt,
                                const Budget& budget = {});

/// The five parameter families over n = q^m - 1 (odd q); the nested pair is
/// reconstructed as narrow-sense BCH codes with the claimed distance bounds
/// as designed distances, and any dimension mismatch is reported as a failed
/// hypothesis rather than silently patched.
AqeccDerivation bch_abch1_aqecc(std::uint32_t p, std::uint32_t t,
                                std::uint32_t m, std::uint32_t bullet,
                                std::uint32_t c = 0, std::uint32_t l = 0,
                                const std::optional<FieldBasis>& basis = std::nullopt,
                                const Budget& budget = {});

// --- Quadratic residue codes -------------------------------------------------

struct QrCodes {
  std::uint32_t prime_len = 0;
  std::vector<LinearCode> codes;  // Q, Q_degree (x-1)q(x), C, C_degree
  const LinearCode& Q() const { return codes[0]; }
  const LinearCode& Qd() const { return codes[1]; }
  const LinearCode& C() const { return codes[2]; }
  const LinearCode& Cd() const { return codes[3]; }
};

bool is_quadratic_residue(std::uint64_t q, std::uint32_t p_len);

/// The four cyclic codes of prime length with generator polynomials q(x),
/// (x-1)q(x), c(x), (x-1)c(x) built from the square / non-square root sets.
QrCodes qr(std::uint32_t p_len, const FieldPtr& field,
           std::uint64_t field_budget = FiniteField::kDefaultFieldBudget);

/// Expanded AQECC of length t*p over GF(p_star): the p = 4k+1 route uses the
/// nesting C^perp inside Q, the p = 4k+3 route goes through the additive
/// expansion of the pair (Q, Q^perp).
AqeccDerivation qr_aqecc(std::uint32_t p_len, std::uint32_t p_star,
                         std::uint32_t t,
                         const std::optional<FieldBasis>& basis = std::nullopt,
                         const Budget& budget = {});

/// Smallest integer with d*d >= p.
std::uint32_t sqrt_bound(std::uint32_t p_len);
/// Smallest integer with d*d - d + 1 >= p.
std::uint32_t qr3_bound(std::uint32_t p_len);

/// Default expansion basis for q = p^t over its prime field.
FieldBasis prime_polynomial_basis(std::uint32_t p, std::uint32_t t);

}  // namespace aqecc
