#include "aqecc/css.hpp"

#include <stdexcept>

namespace aqecc {

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::verified_exact: return "verified-exact";
    case ClaimStatus::verified_bound: return "verified-bound";
    case ClaimStatus::budget_exceeded: return "budget-exceeded";
    case ClaimStatus::hypothesis_failed: return "hypothesis-failed";
    case ClaimStatus::violated: return "violated";
  }
  return "?";
}

CssPair::CssPair(LinearCode c1, LinearCode c2)
    : c1_(std::move(c1)), c2_(std::move(c2)) {
  if (!is_subcode(c2_, c1_))
    throw std::invalid_argument("CSS pair requires C2 nested in C1");
  if (c2_.k() >= c1_.k())
    throw std::invalid_argument("CSS pair requires strict nesting (k1 > k2)");
}

AqeccParams derive(const CssPair& pair, const Budget& budget) {
  AqeccParams p;
  p.q = pair.c1().field()->q();
  p.n = pair.n();
  p.k = pair.k();
  p.K = pow_sat(p.q, p.k);

  WeightReport dz = relative_min_weight(pair.c1(), pair.c2(), budget);
  LinearCode c2d = dual(pair.c2());
  LinearCode c1d = dual(pair.c1());
  WeightReport dx = relative_min_weight(c2d, c1d, budget);
  WeightReport d1 = min_distance(pair.c1(), budget);
  WeightReport d2perp = min_distance(c2d, budget);

  if (dz.exact())
    p.dz = {dz.value, true};
  else
    p.dz = {d1.exact() ? d1.value : 1, false};
  if (dx.exact())
    p.dx = {dx.value, true};
  else
    p.dx = {d2perp.exact() ? d2perp.value : 1, false};
  if (dz.exact() && dx.exact() && d1.exact() && d2perp.exact())
    p.pure = (dz.value == d1.value) && (dx.value == d2perp.value);
  return p;
}

void finish_claim(AqeccDerivation& d, const Budget& budget) {
  if (!d.pair) {
    if (d.claim.status != ClaimStatus::hypothesis_failed)
      d.claim.status = ClaimStatus::budget_exceeded;
    return;
  }
  if (d.claim.claimed_k && *d.claim.claimed_k != d.pair->k()) {
    d.claim.status = ClaimStatus::hypothesis_failed;
    d.claim.note = "constructed pair has k = " + std::to_string(d.pair->k()) +
                   ", claimed " + std::to_string(*d.claim.claimed_k);
    return;
  }
  AqeccParams p = derive(*d.pair, budget);
  if (p.dz.exact) d.claim.oracle_dz = p.dz.value;
  if (p.dx.exact) d.claim.oracle_dx = p.dx.value;
  if (!d.claim.bounds_hold()) {
    d.claim.status = ClaimStatus::violated;
  } else if (p.dz.exact && p.dx.exact) {
    d.claim.status = ClaimStatus::verified_exact;
  } else if (p.dz.exact || p.dx.exact) {
    d.claim.status = ClaimStatus::verified_bound;
  } else {
    d.claim.status = ClaimStatus::budget_exceeded;
  }
  // inexact sides report the theorem's bound, flagged as such
  if (!p.dz.exact && d.claim.claimed_dz && *d.claim.claimed_dz > p.dz.value)
    p.dz.value = *d.claim.claimed_dz;
  if (!p.dx.exact && d.claim.claimed_dx && *d.claim.claimed_dx > p.dx.value)
    p.dx.value = *d.claim.claimed_dx;
  d.params = p;
}

namespace {

void push_input(TheoremClaim& c, const std::string& key, std::uint64_t v) {
  c.inputs.emplace_back(key, std::to_string(v));
}

/// Fold a min over distances that exist; zero codes contribute nothing.
std::optional<std::uint32_t> fold_min(std::optional<std::uint32_t> acc,
                                      const WeightReport& rep,
                                      std::uint32_t scale = 1) {
  if (rep.status != OracleStatus::exact) return acc;
  std::uint32_t v = rep.value * scale;
  if (!acc || v < *acc) return v;
  return acc;
}

}  // namespace

AqeccDerivation expand_aqecc(const CssPair& pair, const FieldBasis& basis,
                             const Budget& budget) {
  AqeccDerivation d;
  d.claim.theorem = "MAINI";
  push_input(d.claim, "q_top", pair.c1().field()->q());
  push_input(d.claim, "q_bottom", basis.tower()->bottom()->q());
  push_input(d.claim, "n", pair.n());
  push_input(d.claim, "k1", pair.c1().k());
  push_input(d.claim, "k2", pair.c2().k());
  if (!basis.tower()->top()->same_field(*pair.c1().field()))
    throw std::invalid_argument("basis tower does not match the pair's field");

  const std::uint32_t m = basis.size();
  d.claim.claimed_n = m * pair.n();
  d.claim.claimed_k = m * pair.k();
  WeightReport d1 = min_distance(pair.c1(), budget);
  WeightReport d2perp = min_distance(dual(pair.c2()), budget);
  if (d1.exact()) d.claim.claimed_dz = d1.value;
  if (d2perp.exact()) d.claim.claimed_dx = d2perp.value;
  if (!d1.exact() || !d2perp.exact())
    d.claim.note = "source-code distance oracle out of budget";

  d.pair = CssPair(expand(pair.c1(), basis), expand(pair.c2(), basis));
  finish_claim(d, budget);
  return d;
}

AqeccDerivation direct_sum_aqecc(const CssPair& a, const CssPair& b,
                                 const Budget& budget) {
  AqeccDerivation d;
  d.claim.theorem = "MAINII";
  if (!a.c1().field()->same_field(*b.c1().field()))
    throw std::invalid_argument("direct sum requires a common field");
  push_input(d.claim, "q", a.c1().field()->q());
  push_input(d.claim, "n_a", a.n());
  push_input(d.claim, "n_b", b.n());
  d.claim.claimed_n = a.n() + b.n();
  d.claim.claimed_k = a.k() + b.k();

  std::optional<std::uint32_t> dz_bound, dx_bound;
  dz_bound = fold_min(dz_bound, min_distance(a.c1(), budget));
  dz_bound = fold_min(dz_bound, min_distance(b.c1(), budget));
  dx_bound = fold_min(dx_bound, min_distance(dual(a.c2()), budget));
  dx_bound = fold_min(dx_bound, min_distance(dual(b.c2()), budget));
  d.claim.claimed_dz = dz_bound;
  d.claim.claimed_dx = dx_bound;

  d.pair = CssPair(direct_sum(a.c1(), b.c1()), direct_sum(a.c2(), b.c2()));
  finish_claim(d, budget);
  return d;
}

AqeccDerivation puncture_aqecc(const CssPair& pair, std::size_t i,
                               const Budget& budget) {
  AqeccDerivation d;
  d.claim.theorem = "MAINIII";
  push_input(d.claim, "q", pair.c1().field()->q());
  push_input(d.claim, "n", pair.n());
  push_input(d.claim, "i", i);
  if (pair.n() < 2) throw std::invalid_argument("puncturing needs length >= 2");
  if (i >= pair.n()) throw std::invalid_argument("coordinate out of range");

  WeightReport d1 = min_distance(pair.c1(), budget);
  LinearCode c2d = dual(pair.c2());
  WeightReport d2perp = min_distance(c2d, budget);
  if (!d1.exact() || !d2perp.exact()) {
    d.claim.status = ClaimStatus::budget_exceeded;
    d.claim.note = "hypothesis oracles out of budget";
    return d;
  }
  if (d1.value < 2) {
    d.claim.status = ClaimStatus::hypothesis_failed;
    d.claim.note = "d(C1) < 2";
    return d;
  }
  if (d2perp.value < 2) {
    d.claim.status = ClaimStatus::hypothesis_failed;
    d.claim.note = "d(C2perp) < 2";
    return d;
  }
  if (!has_zero_coordinate_word(c2d, i)) {
    d.claim.status = ClaimStatus::hypothesis_failed;
    d.claim.note = "C2perp has no nonzero word with coordinate " +
                   std::to_string(i) + " zero";
    return d;
  }
  auto touches = has_min_weight_word_at(pair.c1(), i, budget);
  if (!touches) {
    d.claim.status = ClaimStatus::budget_exceeded;
    d.claim.note = "min-weight-word search out of budget";
    return d;
  }
  d.claim.inputs.emplace_back("case", *touches ? "i" : "ii");
  d.claim.claimed_n = pair.n() - 1;
  d.claim.claimed_k = pair.k();
  d.claim.claimed_dz = *touches ? d1.value - 1 : d1.value;
  d.claim.claimed_dx = d2perp.value;

  d.pair = CssPair(puncture(pair.c1(), i), puncture(pair.c2(), i));
  finish_claim(d, budget);
  return d;
}

AqeccDerivation extend_aqecc(const CssPair& pair, const Budget& budget) {
  AqeccDerivation d;
  d.claim.theorem = "MAINIV";
  push_input(d.claim, "q", pair.c1().field()->q());
  push_input(d.claim, "n", pair.n());

  EvenOddWeights eo = even_odd_weights(pair.c1(), budget);
  if (eo.status != OracleStatus::exact) {
    d.claim.status = ClaimStatus::budget_exceeded;
    d.claim.note = "even/odd-like weight oracle out of budget";
    return d;
  }
  std::uint32_t d1 = std::min(eo.even.value_or(UINT32_MAX),
                              eo.odd.value_or(UINT32_MAX));
  bool odd_strictly_smaller =
      eo.odd && (!eo.even || *eo.odd < *eo.even);
  d.claim.inputs.emplace_back("case", odd_strictly_smaller ? "b" : "a");
  d.claim.claimed_n = pair.n() + 1;
  d.claim.claimed_k = pair.k();
  d.claim.claimed_dz = odd_strictly_smaller ? d1 + 1 : d1;

  LinearCode c2e = extend(pair.c2());
  WeightReport d2e_perp = min_distance(dual(c2e), budget);
  if (d2e_perp.exact()) d.claim.claimed_dx = d2e_perp.value;

  d.pair = CssPair(extend(pair.c1()), std::move(c2e));
  finish_claim(d, budget);
  return d;
}

AqeccDerivation uuv_aqecc(const CssPair& a, const CssPair& b,
                          const Budget& budget) {
  AqeccDerivation d;
  d.claim.theorem = "MAINV";
  if (!a.c1().field()->same_field(*b.c1().field()))
    throw std::invalid_argument("(u|u+v) requires a common field");
  if (a.n() != b.n())
    throw std::invalid_argument("(u|u+v) requires equal lengths");
  push_input(d.claim, "q", a.c1().field()->q());
  push_input(d.claim, "n", a.n());
  d.claim.claimed_n = 2 * a.n();
  d.claim.claimed_k = a.k() + b.k();

  std::optional<std::uint32_t> dz_bound, dx_bound;
  dz_bound = fold_min(dz_bound, min_distance(a.c1(), budget), 2);
  dz_bound = fold_min(dz_bound, min_distance(b.c1(), budget));
  dx_bound = fold_min(dx_bound, min_distance(dual(b.c2()), budget), 2);
  dx_bound = fold_min(dx_bound, min_distance(dual(a.c2()), budget));
  d.claim.claimed_dz = dz_bound;
  d.claim.claimed_dx = dx_bound;

  d.pair = CssPair(uuv(a.c1(), b.c1()), uuv(a.c2(), b.c2()));
  finish_claim(d, budget);
  return d;
}

}  // namespace aqecc
