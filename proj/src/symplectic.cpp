#include "aqecc/symplectic.hpp"

#include <algorithm>
#include <stdexcept>

namespace aqecc {

std::size_t swt(const SympVec& v) {
  std::size_t w = 0;
  for (std::size_t i = 0; i < v.n(); ++i)
    if (v.a[i] != 0 || v.b[i] != 0) ++w;
  return w;
}

std::size_t wt_x(const SympVec& v) {
  return static_cast<std::size_t>(
      std::count_if(v.a.begin(), v.a.end(), [](GfElem e) { return e != 0; }));
}

std::size_t wt_z(const SympVec& v) {
  return static_cast<std::size_t>(
      std::count_if(v.b.begin(), v.b.end(), [](GfElem e) { return e != 0; }));
}

GfElem trace_symplectic_form(const FiniteField& F, const SympVec& x,
                             const SympVec& y) {
  if (x.n() != y.n()) throw std::invalid_argument("length mismatch");
  GfElem s = 0;
  for (std::size_t i = 0; i < x.n(); ++i)
    s = F.add(s, F.sub(F.mul(x.b[i], y.a[i]), F.mul(y.b[i], x.a[i])));
  return F.trace_to_prime(s);
}

AdditiveCode::AdditiveCode(FieldPtr field, std::size_t n, GfMat gens)
    : field_(std::move(field)), n_(n), gens_(std::move(gens)) {}

FieldPtr AdditiveCode::prime_field() const {
  return FiniteField::make(field_->p(), 1);
}

AdditiveCode::AdditiveCode(FieldPtr field, std::size_t n,
                           const std::vector<SympVec>& gens)
    : field_(std::move(field)), n_(n) {
  if (n == 0) throw std::invalid_argument("length must be >= 1");
  GfMat m(prime_field(), gens.size(), 2 * static_cast<std::size_t>(t()) * n);
  for (std::size_t r = 0; r < gens.size(); ++r) {
    if (gens[r].a.size() != n || gens[r].b.size() != n)
      throw std::invalid_argument("generator length mismatch");
    auto row = from_symp(gens[r]);
    for (std::size_t c = 0; c < row.size(); ++c) m.at(r, c) = row[c];
  }
  gens_ = rref(m);
}

AdditiveCode AdditiveCode::from_prime_rows(
    FieldPtr field, std::size_t n, const std::vector<std::vector<GfElem>>& rows) {
  AdditiveCode c(field, n, std::vector<SympVec>{});
  GfMat m(c.prime_field(), rows.size(), 2 * static_cast<std::size_t>(c.t()) * n);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols)
      throw std::invalid_argument("prime row length mismatch");
    for (std::size_t col = 0; col < m.cols; ++col) {
      if (rows[r][col] >= field->p())
        throw std::invalid_argument("entry outside GF(p)");
      m.at(r, col) = rows[r][col];
    }
  }
  c.gens_ = rref(m);
  return c;
}

SympVec AdditiveCode::to_symp(std::span<const GfElem> prime_row) const {
  const std::uint32_t p = field_->p(), tt = t();
  SympVec v;
  v.a.resize(n_);
  v.b.resize(n_);
  const std::size_t tn = static_cast<std::size_t>(tt) * n_;
  for (std::size_t i = 0; i < n_; ++i) {
    GfElem ea = 0, eb = 0;
    std::uint64_t w = 1;
    for (std::uint32_t j = 0; j < tt; ++j) {
      ea += static_cast<GfElem>(prime_row[i * tt + j] * w);
      eb += static_cast<GfElem>(prime_row[tn + i * tt + j] * w);
      w *= p;
    }
    v.a[i] = ea;
    v.b[i] = eb;
  }
  return v;
}

std::vector<GfElem> AdditiveCode::from_symp(const SympVec& v) const {
  const std::uint32_t tt = t();
  const std::size_t tn = static_cast<std::size_t>(tt) * n_;
  std::vector<GfElem> row(2 * tn);
  for (std::size_t i = 0; i < n_; ++i) {
    auto da = field_->coeffs(v.a[i]);
    auto db = field_->coeffs(v.b[i]);
    for (std::uint32_t j = 0; j < tt; ++j) {
      row[i * tt + j] = da[j];
      row[tn + i * tt + j] = db[j];
    }
  }
  return row;
}

bool AdditiveCode::contains(const SympVec& v) const {
  auto row = from_symp(v);
  return in_row_space(gens_, row);
}

bool is_self_orthogonal(const AdditiveCode& c) {
  const FiniteField& F = *c.field();
  std::vector<SympVec> gens;
  for (std::size_t r = 0; r < c.rank(); ++r)
    gens.push_back(c.to_symp(c.prime_generators().row(r)));
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j)
      if (trace_symplectic_form(F, gens[i], gens[j]) != 0) return false;
  return true;
}

AdditiveCode symplectic_dual(const AdditiveCode& c) {
  const FiniteField& F = *c.field();
  const std::size_t cols = c.prime_generators().cols;
  // form(E_j, gen_r) is GF(p)-linear in the first slot, so the dual is the
  // null space of the (rank x 2tn) matrix of unit-vector form values
  GfMat a(c.prime_field(), c.rank(), cols);
  std::vector<SympVec> gens;
  for (std::size_t r = 0; r < c.rank(); ++r)
    gens.push_back(c.to_symp(c.prime_generators().row(r)));
  std::vector<GfElem> unit(cols, 0);
  for (std::size_t j = 0; j < cols; ++j) {
    unit[j] = 1;
    SympVec ej = c.to_symp(unit);
    for (std::size_t r = 0; r < gens.size(); ++r)
      a.at(r, j) = trace_symplectic_form(F, ej, gens[r]);
    unit[j] = 0;
  }
  GfMat ns = right_nullspace(a);
  std::vector<std::vector<GfElem>> rows;
  rows.reserve(ns.rows);
  for (std::size_t r = 0; r < ns.rows; ++r) {
    auto row = ns.row(r);
    rows.emplace_back(row.begin(), row.end());
  }
  return AdditiveCode::from_prime_rows(c.field(), c.n(), rows);
}

AdditiveCode css_to_additive(const CssPair& pair) {
  const FieldPtr& field = pair.c1().field();
  const FiniteField& F = *field;
  LinearCode c1d = dual(pair.c1());
  std::vector<SympVec> gens;
  std::vector<GfElem> scaled(pair.n());
  auto push_scaled = [&](std::span<const GfElem> base, bool x_side) {
    GfElem s = 1;
    for (std::uint32_t j = 0; j < F.m(); ++j) {
      for (std::size_t col = 0; col < base.size(); ++col)
        scaled[col] = F.mul(s, base[col]);
      SympVec v;
      if (x_side) {
        v.a = scaled;
        v.b.assign(pair.n(), 0);
      } else {
        v.a.assign(pair.n(), 0);
        v.b = scaled;
      }
      gens.push_back(std::move(v));
      s = F.mul(s, F.generator());
    }
  };
  for (std::size_t r = 0; r < c1d.k(); ++r) push_scaled(c1d.row(r), true);
  for (std::size_t r = 0; r < pair.c2().k(); ++r)
    push_scaled(pair.c2().row(r), false);
  return AdditiveCode(field, pair.n(), gens);
}

AdditiveCode puncture_additive(const AdditiveCode& c, std::size_t i) {
  if (c.n() < 2) throw std::invalid_argument("puncturing needs length >= 2");
  if (i >= c.n()) throw std::invalid_argument("coordinate out of range");
  AdditiveCode shape(c.field(), c.n() - 1, std::vector<SympVec>{});
  std::vector<std::vector<GfElem>> rows;
  rows.reserve(c.rank());
  for (std::size_t r = 0; r < c.rank(); ++r) {
    SympVec v = c.to_symp(c.prime_generators().row(r));
    v.a.erase(v.a.begin() + static_cast<std::ptrdiff_t>(i));
    v.b.erase(v.b.begin() + static_cast<std::ptrdiff_t>(i));
    rows.push_back(shape.from_symp(v));
  }
  return AdditiveCode::from_prime_rows(c.field(), c.n() - 1, rows);
}

AdditiveCode phi_b_expand(const AdditiveCode& c, const FieldBasis& basis) {
  if (!basis.tower()->top()->same_field(*c.field()))
    throw std::invalid_argument("basis tower does not match the code's field");
  const FieldPtr& bottom = basis.tower()->bottom();
  const FiniteField& B = *bottom;
  const std::uint32_t m = basis.size();
  auto gram = basis.gram();
  std::vector<SympVec> image;
  for (std::size_t r = 0; r < c.rank(); ++r) {
    SympVec v = c.to_symp(c.prime_generators().row(r));
    SympVec out;
    out.a.reserve(c.n() * m);
    out.b.reserve(c.n() * m);
    for (std::size_t i = 0; i < c.n(); ++i) {
      auto ca = basis.coords(v.a[i]);
      out.a.insert(out.a.end(), ca.begin(), ca.end());
      auto cb = basis.coords(v.b[i]);
      for (std::uint32_t row = 0; row < m; ++row) {
        GfElem acc = 0;
        for (std::uint32_t col = 0; col < m; ++col)
          acc = B.add(acc, B.mul(gram[row][col], cb[col]));
        out.b.push_back(acc);
      }
    }
    image.push_back(std::move(out));
  }
  AdditiveCode result(bottom, static_cast<std::size_t>(c.n()) * m, image);
  return result;
}

namespace {

/// Visit every nonzero GF(p)-combination of the rows of `gens`.
/// Returns false when the span exceeds the budget.
template <typename Visit>
bool enumerate_span(const GfMat& gens, const Budget& budget, Visit&& visit) {
  const FiniteField& P = *gens.field;
  const std::uint32_t p = P.p();
  std::uint64_t total = pow_sat(p, gens.rows);
  if (total > budget.max_codewords) return false;
  std::vector<GfElem> row(gens.cols, 0);
  std::vector<GfElem> msg(gens.rows, 0);
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    std::size_t j = 0;
    while (true) {
      GfElem old = msg[j];
      GfElem nu = (old + 1 == p) ? 0 : old + 1;
      msg[j] = nu;
      GfElem delta = P.sub(nu, old);
      for (std::size_t col = 0; col < gens.cols; ++col)
        if (gens.at(j, col) != 0)
          row[col] = P.add(row[col], P.mul(delta, gens.at(j, col)));
      if (nu != 0) break;
      ++j;
    }
    visit(row);
  }
  return true;
}

/// Combinations of the rows of `mat` whose columns in [lo, hi) vanish.
GfMat zero_block_subspan(const GfMat& mat, std::size_t lo, std::size_t hi) {
  GfMat block(mat.field, mat.rows, hi - lo);
  for (std::size_t r = 0; r < mat.rows; ++r)
    for (std::size_t c = lo; c < hi; ++c) block.at(r, c - lo) = mat.at(r, c);
  GfMat lambda = right_nullspace(transpose(block));
  return rref(gf_mat_mul(lambda, mat));
}

std::size_t block_weight(std::span<const GfElem> row, std::size_t n,
                         std::uint32_t t, std::size_t offset) {
  std::size_t w = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool nz = false;
    for (std::uint32_t j = 0; j < t; ++j)
      if (row[offset + i * t + j] != 0) nz = true;
    w += nz;
  }
  return w;
}

}  // namespace

AqeccParams stabilizer_params(const AdditiveCode& c, const Budget& budget) {
  if (!is_self_orthogonal(c))
    throw std::invalid_argument("stabilizer parameters need C <= C_dual");
  const std::uint32_t t = c.t();
  const std::size_t tn = static_cast<std::size_t>(t) * c.n();
  AqeccParams out;
  out.q = c.field()->q();
  out.n = c.n();
  std::size_t log_p_k = tn - c.rank();
  if (log_p_k % t != 0)
    throw std::domain_error("code space dimension is not a power of q");
  out.k = log_p_k / t;
  out.K = pow_sat(c.field()->p(), log_p_k);

  AdditiveCode nrm = symplectic_dual(c);
  constexpr std::uint32_t kNone = UINT32_MAX;

  auto side = [&](bool x_side) -> std::pair<DistanceValue, std::uint32_t> {
    std::uint32_t rel = kNone, abs_min = kNone;
    bool in_budget;
    std::size_t off = x_side ? 0 : tn;
    if (out.K > 1) {
      // undetectable pure-X (resp. pure-Z) errors form the zero-Z
      // (resp. zero-X) subcode of the normalizer
      GfMat sub = x_side
                      ? zero_block_subspan(nrm.prime_generators(), tn, 2 * tn)
                      : zero_block_subspan(nrm.prime_generators(), 0, tn);
      in_budget =
          enumerate_span(sub, budget, [&](const std::vector<GfElem>& row) {
            auto w = static_cast<std::uint32_t>(
                block_weight(row, c.n(), t, off));
            if (w < abs_min) abs_min = w;
            if (w < rel && !in_row_space(c.prime_generators(), row)) rel = w;
          });
    } else {
      in_budget = enumerate_span(
          nrm.prime_generators(), budget, [&](const std::vector<GfElem>& row) {
            auto w = static_cast<std::uint32_t>(
                block_weight(row, c.n(), t, off));
            if (w > 0 && w < abs_min) abs_min = w;
          });
      rel = abs_min;
    }
    if (!in_budget) return {DistanceValue{1, false}, kNone};
    if (rel == kNone)
      throw std::domain_error(x_side ? "no undetectable pure-X error exists"
                                     : "no undetectable pure-Z error exists");
    return {DistanceValue{rel, true}, abs_min};
  };

  auto [dx, dx_abs] = side(true);
  auto [dz, dz_abs] = side(false);
  out.dx = dx;
  out.dz = dz;
  if (dx.exact && dz.exact)
    out.pure = (dx.value == dx_abs) && (dz.value == dz_abs);
  return out;
}

AlternatingSpace::AlternatingSpace(TowerPtr tower, FieldBasis basis)
    : tower_(std::move(tower)), basis_(std::move(basis)) {
  const FiniteField& T = *tower_->top();
  beta_ = basis_.elements()[0];
  beta_conj_ = basis_.elements()[1];
  gamma_ = T.sub(T.mul(beta_conj_, beta_conj_), T.mul(beta_, beta_));
  if (gamma_ == 0) throw std::logic_error("degenerate normal basis constant");
}

AlternatingSpace AlternatingSpace::make(FieldPtr q_field) {
  auto top = FiniteField::make(q_field->p(), 2 * q_field->m(),
                               q_field->q() * q_field->q());
  auto tower = FieldTower::make(q_field, top);
  return AlternatingSpace(tower, FieldBasis::normal(tower));
}

std::vector<GfElem> AlternatingSpace::phi(const SympVec& vw) const {
  const FiniteField& T = *tower_->top();
  std::vector<GfElem> out(vw.n());
  for (std::size_t i = 0; i < vw.n(); ++i)
    out[i] = T.add(T.mul(beta_, tower_->embed(vw.a[i])),
                   T.mul(beta_conj_, tower_->embed(vw.b[i])));
  return out;
}

SympVec AlternatingSpace::phi_inverse(std::span<const GfElem> x) const {
  SympVec out;
  out.a.resize(x.size());
  out.b.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto coords = basis_.coords(x[i]);
    out.a[i] = coords[0];
    out.b[i] = coords[1];
  }
  return out;
}

GfElem AlternatingSpace::form(std::span<const GfElem> v,
                              std::span<const GfElem> w) const {
  if (v.size() != w.size()) throw std::invalid_argument("length mismatch");
  const FiniteField& T = *tower_->top();
  const std::uint64_t qb = tower_->bottom()->q();
  GfElem s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    GfElem vwq = T.mul(v[i], T.pow(w[i], qb));
    GfElem vqw = T.mul(T.pow(v[i], qb), w[i]);
    s = T.add(s, T.sub(vwq, vqw));
  }
  GfElem ratio = T.div(s, gamma_);
  auto bottom_val = tower_->restrict_to_bottom(ratio);
  if (!bottom_val) throw std::logic_error("alternating form escaped GF(q)");
  return tower_->bottom()->trace_to_prime(*bottom_val);
}

namespace {

void push_input(TheoremClaim& c, const std::string& key, std::uint64_t v) {
  c.inputs.emplace_back(key, std::to_string(v));
}

void finish_additive_claim(AdditiveDerivation& d, const Budget& budget) {
  if (!d.code) {
    if (d.claim.status != ClaimStatus::hypothesis_failed)
      d.claim.status = ClaimStatus::budget_exceeded;
    return;
  }
  AqeccParams p = stabilizer_params(*d.code, budget);
  if (d.claim.claimed_k && *d.claim.claimed_k != p.k) {
    d.claim.status = ClaimStatus::hypothesis_failed;
    d.claim.note = "constructed code has k = " + std::to_string(p.k) +
                   ", claimed " + std::to_string(*d.claim.claimed_k);
    return;
  }
  if (p.dz.exact) d.claim.oracle_dz = p.dz.value;
  if (p.dx.exact) d.claim.oracle_dx = p.dx.value;
  if (!d.claim.bounds_hold())
    d.claim.status = ClaimStatus::violated;
  else if (p.dz.exact && p.dx.exact)
    d.claim.status = ClaimStatus::verified_exact;
  else if (p.dz.exact || p.dx.exact)
    d.claim.status = ClaimStatus::verified_bound;
  else
    d.claim.status = ClaimStatus::budget_exceeded;
  if (!p.dz.exact && d.claim.claimed_dz && *d.claim.claimed_dz > p.dz.value)
    p.dz.value = *d.claim.claimed_dz;
  if (!p.dx.exact && d.claim.claimed_dx && *d.claim.claimed_dx > p.dx.value)
    p.dx.value = *d.claim.claimed_dx;
  d.params = p;
}

}  // namespace

AdditiveDerivation expand_additive_aqecc(const AdditiveCode& c,
                                         const FieldBasis& basis,
                                         const Budget& budget) {
  AdditiveDerivation d;
  d.claim.theorem = "GenExpa";
  push_input(d.claim, "q_top", c.field()->q());
  push_input(d.claim, "q_bottom", basis.tower()->bottom()->q());
  push_input(d.claim, "n", c.n());
  if (!is_self_orthogonal(c)) {
    d.claim.status = ClaimStatus::hypothesis_failed;
    d.claim.note = "input code is not self-orthogonal";
    return d;
  }
  AqeccParams before = stabilizer_params(c, budget);
  d.claim.claimed_n = static_cast<std::size_t>(c.n()) * basis.size();
  // K is preserved; in the smaller alphabet log_q K picks up the tower degree
  d.claim.claimed_k = before.k * basis.size();
  if (before.dz.exact) d.claim.claimed_dz = before.dz.value;
  if (before.dx.exact) d.claim.claimed_dx = before.dx.value;

  AdditiveCode image = phi_b_expand(c, basis);
  if (!is_self_orthogonal(image)) {
    d.claim.status = ClaimStatus::violated;
    d.claim.note = "phi_B image lost self-orthogonality";
    return d;
  }
  d.code = std::move(image);
  finish_additive_claim(d, budget);
  return d;
}

AdditiveDerivation puncture_additive_aqecc(const AdditiveCode& c, std::size_t i,
                                           const Budget& budget) {
  AdditiveDerivation d;
  d.claim.theorem = "MAINNEW";
  push_input(d.claim, "q", c.field()->q());
  push_input(d.claim, "n", c.n());
  push_input(d.claim, "i", i);
  if (c.n() < 2) {
    d.claim.status = ClaimStatus::hypothesis_failed;
    d.claim.note = "length must be >= 2";
    return d;
  }
  if (i >= c.n()) throw std::invalid_argument("coordinate out of range");
  if (!is_self_orthogonal(c)) {
    d.claim.status = ClaimStatus::hypothesis_failed;
    d.claim.note = "input code is not self-orthogonal";
    return d;
  }
  AqeccParams before = stabilizer_params(c, budget);
  if (!before.dz.exact || !before.dx.exact) {
    d.claim.status = ClaimStatus::budget_exceeded;
    d.claim.note = "input distance oracles out of budget";
    return d;
  }
  if (before.dz.value < 2 || before.dx.value < 2) {
    d.claim.status = ClaimStatus::hypothesis_failed;
    d.claim.note = "requires dz, dx >= 2";
    return d;
  }
  if (!before.pure.value_or(false)) {
    d.claim.status = ClaimStatus::hypothesis_failed;
    d.claim.note = "requires a pure input code";
    return d;
  }
  // Restrict the normalizer to vectors with zero Z-symbol at i (that keeps
  // |N'| = |N|/q, so K survives), delete the coordinate, and take the new
  // stabilizer as the symplectic dual of the result.
  AdditiveCode nrm = symplectic_dual(c);
  const std::uint32_t t = c.t();
  const std::size_t tn = static_cast<std::size_t>(t) * c.n();
  GfMat constrained = zero_block_subspan(nrm.prime_generators(), tn + i * t,
                                         tn + (i + 1) * t);
  if (constrained.rows + t != nrm.rank()) {
    d.claim.status = ClaimStatus::hypothesis_failed;
    d.claim.note = "normalizer does not cover all Z-symbols at i";
    return d;
  }
  std::vector<std::vector<GfElem>> shortened_rows;
  {
    AdditiveCode shape(c.field(), c.n() - 1, std::vector<SympVec>{});
    AdditiveCode view(c.field(), c.n(), std::vector<SympVec>{});
    for (std::size_t r = 0; r < constrained.rows; ++r) {
      SympVec v = view.to_symp(constrained.row(r));
      v.a.erase(v.a.begin() + static_cast<std::ptrdiff_t>(i));
      v.b.erase(v.b.begin() + static_cast<std::ptrdiff_t>(i));
      shortened_rows.push_back(shape.from_symp(v));
    }
  }
  AdditiveCode nrm_p =
      AdditiveCode::from_prime_rows(c.field(), c.n() - 1, shortened_rows);
  if (nrm_p.rank() != constrained.rows) {
    d.claim.status = ClaimStatus::hypothesis_failed;
    d.claim.note = "coordinate deletion collapses the normalizer";
    return d;
  }
  AdditiveCode punctured = symplectic_dual(nrm_p);
  if (!is_self_orthogonal(punctured)) {
    d.claim.status = ClaimStatus::hypothesis_failed;
    d.claim.note = "punctured stabilizer is not self-orthogonal";
    return d;
  }
  d.claim.claimed_n = c.n() - 1;
  d.claim.claimed_k = before.k;
  d.claim.claimed_dz = before.dz.value - 1;
  d.claim.claimed_dx = before.dx.value - 1;
  d.code = std::move(punctured);
  finish_additive_claim(d, budget);
  if (d.params && d.claim.status == ClaimStatus::verified_exact &&
      !d.params->pure.value_or(false)) {
    d.claim.status = ClaimStatus::violated;
    d.claim.note = "result is not pure";
  }
  return d;
}

}  // namespace aqecc
