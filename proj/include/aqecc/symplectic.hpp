#pragma once

#include <optional>
#include <vector>

#include "aqecc/css.hpp"
#include "aqecc/lincode.hpp"

namespace aqecc {

/// A vector (a|b) in GF(q)^{2n}: a carries the X part, b the Z part.
struct SympVec {
  std::vector<GfElem> a, b;
  std::size_t n() const { return a.size(); }
};

std::size_t swt(const SympVec& v);
std::size_t wt_x(const SympVec& v);
std::size_t wt_z(const SympVec& v);

/// tr_{q/p}(b . a* - b* . a); GF(p)-bilinear and alternating.
GfElem trace_symplectic_form(const FiniteField& F, const SympVec& x,
                             const SympVec& y);

/// Additive (GF(p)-linear) code in GF(q)^{2n}, represented by a canonical
/// GF(p) generator matrix over the 2tn prime coordinates (t digits per GF(q)
/// symbol, X block first).
class AdditiveCode {
 public:
  AdditiveCode(FieldPtr field, std::size_t n, const std::vector<SympVec>& gens);
  static AdditiveCode from_prime_rows(FieldPtr field, std::size_t n,
                                      const std::vector<std::vector<GfElem>>& rows);

  const FieldPtr& field() const { return field_; }
  FieldPtr prime_field() const;
  std::size_t n() const { return n_; }
  std::uint32_t t() const { return field_->m(); }
  std::size_t rank() const { return gens_.rows; }  // over GF(p)
  std::uint64_t size() const { return pow_sat(field_->p(), gens_.rows); }
  const GfMat& prime_generators() const { return gens_; }

  SympVec to_symp(std::span<const GfElem> prime_row) const;
  std::vector<GfElem> from_symp(const SympVec& v) const;
  bool contains(const SympVec& v) const;

  bool operator==(const AdditiveCode& o) const {
    return field_->same_field(*o.field_) && n_ == o.n_ && gens_ == o.gens_;
  }

 private:
  AdditiveCode(FieldPtr field, std::size_t n, GfMat gens);
  FieldPtr field_;
  std::size_t n_;
  GfMat gens_;  // rref over GF(p), 2tn columns
};

bool is_self_orthogonal(const AdditiveCode& c);
/// Trace-symplectic dual; |C| * |C_dual| = p^{2tn}.
AdditiveCode symplectic_dual(const AdditiveCode& c);
/// Standard CSS stabilizer image {(a|b) : a in C1^perp, b in C2}.
AdditiveCode css_to_additive(const CssPair& pair);
/// Coordinate deletion (both halves) at position i.
AdditiveCode puncture_additive(const AdditiveCode& c, std::size_t i);

/// phi_B of the expansion theorem: X symbols expand by basis coordinates,
/// Z symbols by Gram-matrix-twisted coordinates; preserves the
/// trace-symplectic form and self-orthogonality.
AdditiveCode phi_b_expand(const AdditiveCode& c, const FieldBasis& basis);

/// Asymmetric stabilizer parameters of a self-orthogonal additive code:
/// K = q^n/|C|; for K > 1, dz/dx are the minimum weights of undetectable
/// pure-Z/pure-X errors (vectors (0|b), (a|0) in C_dual \ C); for K = 1 the
/// minimums run over C_dual itself.
AqeccParams stabilizer_params(const AdditiveCode& c, const Budget& budget = {});

/// The trace-alternating companion space GF(q^2)^n with its canonical normal
/// basis (beta, beta^q); phi is the symplectic/Hamming weight isometry.
class AlternatingSpace {
 public:
  static AlternatingSpace make(FieldPtr q_field);

  const TowerPtr& tower() const { return tower_; }
  GfElem beta() const { return beta_; }
  GfElem beta_conj() const { return beta_conj_; }

  std::vector<GfElem> phi(const SympVec& vw) const;
  SympVec phi_inverse(std::span<const GfElem> x) const;
  /// tr_{q/p}((v.w^q - v^q.w) / (beta^{2q} - beta^2)) in GF(p).
  GfElem form(std::span<const GfElem> v, std::span<const GfElem> w) const;

 private:
  AlternatingSpace(TowerPtr tower, FieldBasis basis);
  TowerPtr tower_;
  FieldBasis basis_;
  GfElem beta_, beta_conj_, gamma_;
};

struct AdditiveDerivation {
  TheoremClaim claim;
  std::optional<AdditiveCode> code;
  std::optional<AqeccParams> params;
};

/// Expansion theorem at the stabilizer level: ((n,K,dz/dx))_{q^m} ->
/// ((nm,K,dz*/dx*))_q with dz* >= dz, dx* >= dx.
AdditiveDerivation expand_additive_aqecc(const AdditiveCode& c,
                                         const FieldBasis& basis,
                                         const Budget& budget = {});

/// Puncturing at the stabilizer level: a pure ((n,K,dz/dx)) code with
/// dz, dx >= 2 yields a pure ((n-1,K,>=dz-1/>=dx-1)) code.
AdditiveDerivation puncture_additive_aqecc(const AdditiveCode& c, std::size_t i,
                                           const Budget& budget = {});

}  // namespace aqecc
