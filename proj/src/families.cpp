#include "aqecc/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "aqecc/symplectic.hpp"

namespace aqecc {
namespace {

std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t ceil_frac(std::uint64_t a, std::uint64_t b) {
  return (a + b - 1) / b;
}

void push_input(TheoremClaim& c, const std::string& key, std::uint64_t v) {
  c.inputs.emplace_back(key, std::to_string(v));
}

// dense polynomials over a finite field, ascending coefficients
using FPoly = std::vector<GfElem>;

FPoly fp_mul(const FiniteField& F, const FPoly& a, const FPoly& b) {
  if (a.empty() || b.empty()) return {};
  FPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
  }
  return c;
}

/// Rows of the cyclic code generated by g (degree r): x^i g(x), i < n - r.
LinearCode cyclic_code(const FieldPtr& field, std::size_t n, const FPoly& g) {
  std::size_t deg = g.size() - 1;
  if (deg >= n) throw std::invalid_argument("generator degree too large");
  std::vector<std::vector<GfElem>> rows;
  for (std::size_t i = 0; i + deg < n; ++i) {
    std::vector<GfElem> row(n, 0);
    for (std::size_t j = 0; j < g.size(); ++j) row[i + j] = g[j];
    rows.push_back(std::move(row));
  }
  return LinearCode(field, n, rows);
}

FieldBasis resolve_basis(std::uint32_t p, std::uint32_t t,
                         const std::optional<FieldBasis>& basis) {
  if (basis) {
    if (basis->tower()->top()->q() != pow_sat(p, t) ||
        basis->tower()->bottom()->q() != p)
      throw std::invalid_argument("basis tower does not match GF(p^t)/GF(p)");
    return *basis;
  }
  return prime_polynomial_basis(p, t);
}

}  // namespace

FieldBasis prime_polynomial_basis(std::uint32_t p, std::uint32_t t) {
  auto bottom = FiniteField::make(p, 1);
  auto top = FiniteField::make(p, t);
  return FieldBasis::polynomial(FieldTower::make(bottom, top));
}

// --- GRM ---------------------------------------------------------------------

std::size_t grm_dimension(std::uint64_t q, std::uint32_t m, std::uint32_t alpha) {
  std::int64_t k = 0;
  for (std::uint32_t i = 0; i <= m; ++i) {
    std::int64_t top = static_cast<std::int64_t>(alpha) -
                       static_cast<std::int64_t>(i) * static_cast<std::int64_t>(q);
    std::int64_t term = binom(m, i) * binom(m + top, top);
    k += (i % 2 == 0) ? term : -term;
  }
  if (k < 0) throw std::logic_error("negative GRM dimension");
  return static_cast<std::size_t>(k);
}

std::uint64_t grm_distance(std::uint64_t q, std::uint32_t m, std::uint32_t alpha) {
  std::uint64_t rem = static_cast<std::uint64_t>(m) * (q - 1) - alpha;
  std::uint64_t u = rem / (q - 1), t = rem % (q - 1);
  std::uint64_t d = t + 1;
  for (std::uint64_t i = 0; i < u; ++i) d *= q;
  return d;
}

std::pair<LinearCode, GrmSpec> grm(const FieldPtr& field, std::uint32_t m,
                                   std::uint32_t alpha) {
  const FiniteField& F = *field;
  const std::uint64_t q = F.q();
  if (alpha >= m * (q - 1))
    throw std::invalid_argument("GRM order must satisfy alpha < m(q-1)");
  // reduced monomials of total degree <= alpha, graded-lex
  std::vector<std::vector<std::uint32_t>> monomials;
  std::vector<std::uint32_t> exps(m, 0);
  std::uint64_t total = pow_sat(q, m);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t v = code;
    std::uint32_t deg = 0;
    for (std::uint32_t i = 0; i < m; ++i) {
      exps[m - 1 - i] = static_cast<std::uint32_t>(v % q);
      deg += exps[m - 1 - i];
      v /= q;
    }
    if (deg <= alpha) monomials.push_back(exps);
  }
  std::stable_sort(monomials.begin(), monomials.end(),
                   [](const auto& a, const auto& b) {
                     std::uint32_t da = std::accumulate(a.begin(), a.end(), 0u);
                     std::uint32_t db = std::accumulate(b.begin(), b.end(), 0u);
                     if (da != db) return da < db;
                     return a < b;
                   });
  // evaluation points ordered by index tuples (x_1 most significant)
  std::vector<std::vector<GfElem>> rows;
  rows.reserve(monomials.size());
  std::vector<GfElem> point(m);
  for (const auto& e : monomials) {
    std::vector<GfElem> row(total);
    for (std::uint64_t pt = 0; pt < total; ++pt) {
      std::uint64_t v = pt;
      for (std::uint32_t i = 0; i < m; ++i) {
        point[m - 1 - i] = static_cast<GfElem>(v % q);
        v /= q;
      }
      GfElem val = 1;
      for (std::uint32_t i = 0; i < m; ++i)
        if (e[i] != 0) val = F.mul(val, F.pow(point[i], e[i]));
      row[pt] = val;
    }
    rows.push_back(std::move(row));
  }
  GrmSpec spec;
  spec.q = q;
  spec.m = m;
  spec.alpha = alpha;
  spec.predicted_k = grm_dimension(q, m, alpha);
  spec.predicted_d = grm_distance(q, m, alpha);
  spec.alpha_dual = static_cast<std::uint32_t>(m * (q - 1) - 1 - alpha);
  return {LinearCode(field, total, rows), spec};
}

AqeccDerivation grm_aqecc(std::uint32_t p, std::uint32_t t, std::uint32_t m,
                          std::uint32_t alpha1, std::uint32_t alpha2,
                          const std::optional<FieldBasis>& basis_in,
                          const Budget& budget) {
  auto field = FiniteField::make(p, t);
  const std::uint64_t q = field->q();
  if (!(alpha1 <= alpha2 && alpha2 < m * (q - 1)))
    throw std::invalid_argument("need 0 <= alpha1 <= alpha2 < m(q-1)");
  if (alpha1 == alpha2)
    throw std::invalid_argument("alpha1 = alpha2 gives k = 0");
  FieldBasis basis = resolve_basis(p, t, basis_in);

  AqeccDerivation d;
  d.claim.theorem = "mainGRM";
  push_input(d.claim, "p", p);
  push_input(d.claim, "t", t);
  push_input(d.claim, "m", m);
  push_input(d.claim, "alpha1", alpha1);
  push_input(d.claim, "alpha2", alpha2);
  d.claim.claimed_n = static_cast<std::size_t>(t) * pow_sat(q, m);
  d.claim.claimed_k =
      t * (grm_dimension(q, m, alpha2) - grm_dimension(q, m, alpha1));
  d.claim.claimed_dz = static_cast<std::uint32_t>(grm_distance(q, m, alpha2));
  std::uint32_t alpha1_dual = static_cast<std::uint32_t>(m * (q - 1) - 1 - alpha1);
  d.claim.claimed_dx = static_cast<std::uint32_t>(grm_distance(q, m, alpha1_dual));

  auto [c2, s1] = grm(field, m, alpha1);
  auto [c1, s2] = grm(field, m, alpha2);
  d.pair = CssPair(expand(c1, basis), expand(c2, basis));
  finish_claim(d, budget);
  return d;
}

// --- character codes ----------------------------------------------------------

std::size_t character_dimension(std::uint32_t m, std::uint32_t r) {
  std::int64_t s = 0;
  for (std::uint32_t i = 0; i <= r && i <= m; ++i) s += binom(m, i);
  return static_cast<std::size_t>(s);
}

LinearCode character_code(const FieldPtr& field, std::uint32_t r,
                          std::uint32_t m) {
  if (field->p() == 2)
    throw std::invalid_argument("character codes need odd characteristic");
  if (r > m) throw std::invalid_argument("need r <= m");
  const FiniteField& F = *field;
  const std::size_t n = std::size_t{1} << m;
  const GfElem minus_one = F.neg(1);
  std::vector<std::vector<GfElem>> rows;
  for (std::size_t y = 0; y < n; ++y) {
    if (static_cast<std::uint32_t>(__builtin_popcountll(y)) > r) continue;
    std::vector<GfElem> row(n);
    for (std::size_t x = 0; x < n; ++x)
      row[x] = (__builtin_popcountll(x & y) % 2 == 0) ? 1 : minus_one;
    rows.push_back(std::move(row));
  }
  return LinearCode(field, n, rows);
}

AqeccDerivation character_aqecc(std::uint32_t p, std::uint32_t t,
                                std::uint32_t m, std::uint32_t r1,
                                std::uint32_t r2,
                                const std::optional<FieldBasis>& basis_in,
                                const Budget& budget) {
  if (p == 2) throw std::invalid_argument("character codes need odd p");
  if (!(r1 < r2 && r2 <= m)) throw std::invalid_argument("need r1 < r2 <= m");
  auto field = FiniteField::make(p, t);
  FieldBasis basis = resolve_basis(p, t, basis_in);

  AqeccDerivation d;
  d.claim.theorem = "lagchar";
  push_input(d.claim, "p", p);
  push_input(d.claim, "t", t);
  push_input(d.claim, "m", m);
  push_input(d.claim, "r1", r1);
  push_input(d.claim, "r2", r2);
  d.claim.claimed_n = static_cast<std::size_t>(t) << m;
  d.claim.claimed_k = t * (character_dimension(m, r2) - character_dimension(m, r1));
  d.claim.claimed_dz = static_cast<std::uint32_t>(1u << (m - r2));
  d.claim.claimed_dx = static_cast<std::uint32_t>(1u << (r1 + 1));

  LinearCode c1 = character_code(field, r2, m);
  LinearCode c2 = character_code(field, r1, m);
  d.pair = CssPair(expand(c1, basis), expand(c2, basis));
  finish_claim(d, budget);
  return d;
}

// --- BCH -----------------------------------------------------------------------

std::uint32_t multiplicative_order(std::uint64_t q, std::size_t n) {
  if (std::gcd(q, static_cast<std::uint64_t>(n)) != 1)
    throw std::invalid_argument("gcd(q, n) must be 1");
  std::uint64_t v = q % n;
  std::uint32_t ord = 1;
  while (v != 1) {
    v = v * (q % n) % n;
    ++ord;
    if (ord > n) throw std::logic_error("order computation overflow");
  }
  return ord;
}

std::vector<std::uint32_t> cyclotomic_coset(std::uint64_t q, std::size_t n,
                                            std::uint32_t e) {
  std::vector<std::uint32_t> out;
  std::uint64_t cur = e % n;
  do {
    out.push_back(static_cast<std::uint32_t>(cur));
    cur = cur * (q % n) % n;
  } while (cur != e % n);
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<LinearCode, BchSpec> bch(const FieldPtr& field, std::size_t n,
                                   std::uint32_t b, std::uint32_t delta,
                                   std::uint64_t field_budget) {
  const FiniteField& F = *field;
  const std::uint64_t q = F.q();
  if (n < 2) throw std::invalid_argument("length must be >= 2");
  if (std::gcd(q, static_cast<std::uint64_t>(n)) != 1)
    throw std::invalid_argument("gcd(q, n) must be 1");
  if (delta < 2 || delta > n)
    throw std::invalid_argument("designed distance must satisfy 2 <= delta <= n");

  std::uint32_t mm = multiplicative_order(q, n);
  auto top = FiniteField::make(F.p(), F.m() * mm, field_budget);
  auto tower = FieldTower::make(field, top);
  GfElem alpha = top->pow(top->generator(), (top->q() - 1) / n);

  std::set<std::vector<std::uint32_t>> coset_set;
  std::set<std::uint32_t> exponents;
  for (std::uint32_t e = b; e + 1 < b + delta; ++e) {
    auto coset = cyclotomic_coset(q, n, e % static_cast<std::uint32_t>(n));
    coset_set.insert(coset);
    exponents.insert(coset.begin(), coset.end());
  }
  if (exponents.size() >= n)
    throw std::invalid_argument("designed distance leaves no dimension");

  FPoly g{1};
  for (std::uint32_t e : exponents) {
    FPoly lin{top->neg(top->pow(alpha, e)), 1};
    g = fp_mul(*top, g, lin);
  }
  FPoly g_base(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto r = tower->restrict_to_bottom(g[i]);
    if (!r) throw std::logic_error("BCH generator coefficient outside GF(q)");
    g_base[i] = *r;
  }

  BchSpec spec;
  spec.q = q;
  spec.n = n;
  spec.b = b;
  spec.delta = delta;
  spec.splitting_degree = mm;
  spec.cosets.assign(coset_set.begin(), coset_set.end());
  spec.gen_poly = g_base;
  return {cyclic_code(field, n, g_base), spec};
}

AqeccDerivation bch_nested_aqecc(std::uint32_t p, std::uint32_t t, std::size_t n,
                                std::uint32_t delta1, std::uint32_t delta2,
                                const std::optional<FieldBasis>& basis_in,
                                const Budget& budget) {
  auto field = FiniteField::make(p, t);
  const std::uint64_t q = field->q();
  AqeccDerivation d;
  d.claim.theorem = "BCHNested";
  push_input(d.claim, "p", p);
  push_input(d.claim, "t", t);
  push_input(d.claim, "n", n);
  push_input(d.claim, "delta1", delta1);
  push_input(d.claim, "delta2", delta2);

  if (std::gcd(q, static_cast<std::uint64_t>(n)) != 1)
    throw std::invalid_argument("gcd(q, n) must be 1");
  std::uint32_t mm = multiplicative_order(q, n);
  push_input(d.claim, "m", mm);
  if (!(pow_sat(q, mm / 2) < n && n <= pow_sat(q, mm) - 1)) {
    d.claim.status = ClaimStatus::hypothesis_failed;
    d.claim.note = "length outside (q^(m/2), q^m - 1]";
    return d;
  }
  std::uint64_t delta_max =
      std::min<std::uint64_t>(n * pow_sat(q, (mm + 1) / 2) / (pow_sat(q, mm) - 1),
                              n);
  if (delta1 < 2 || delta2 < 2 || delta1 > delta_max || delta2 > delta_max) {
    d.claim.status = ClaimStatus::hypothesis_failed;
    d.claim.note = "designed distances outside [2, delta_max]";
    return d;
  }
  auto coset_union = [&](std::uint32_t delta) {
    std::set<std::uint32_t> u;
    for (std::uint32_t e = 1; e < delta; ++e) {
      auto cs = cyclotomic_coset(q, n, e);
      u.insert(cs.begin(), cs.end());
    }
    return u;
  };
  if (coset_union(delta1) == coset_union(delta2)) {
    d.claim.status = ClaimStatus::hypothesis_failed;
    d.claim.note = "coset unions S_1..S_{delta-1} coincide";
    return d;
  }

  auto [c1, s1] = bch(field, n, 1, delta1);
  auto [c2, s2] = bch(field, n, 1, delta2);
  LinearCode c1perp = dual(c1);
  std::uint64_t dim1 = mm * ceil_frac((delta1 - 1) * (q - 1), q);
  std::uint64_t dim2 = mm * ceil_frac((delta2 - 1) * (q - 1), q);
  if (c1perp.k() != dim1 || c2.k() != n - dim2) {
    d.claim.status = ClaimStatus::hypothesis_failed;
    d.claim.note = "dimension formula mismatch";
    return d;
  }
  if (!is_subcode(c1perp, c2) || c1perp.k() >= c2.k()) {
    d.claim.status = ClaimStatus::hypothesis_failed;
    d.claim.note = "C1perp is not strictly nested in C2";
    return d;
  }

  d.claim.claimed_n = t * n;
  d.claim.claimed_k = static_cast<std::size_t>(t) * (n - dim1 - dim2);
  d.claim.claimed_dz = delta2;
  d.claim.claimed_dx = delta1;

  FieldBasis basis = resolve_basis(p, t, basis_in);
  d.pair = CssPair(expand(c2, basis), expand(c1perp, basis));
  finish_claim(d, budget);
  return d;
}

AqeccDerivation bch_abch1_aqecc(std::uint32_t p, std::uint32_t t,
                                std::uint32_t m, std::uint32_t bullet,
                                std::uint32_t c, std::uint32_t l,
                                const std::optional<FieldBasis>& basis_in,
                                const Budget& budget) {
  if (p == 2) throw std::invalid_argument("this family needs odd p");
  auto field = FiniteField::make(p, t);
  const std::uint64_t q = field->q();
  if (m < 3 || (q == 3 && m < 4))
    throw std::invalid_argument("need m >= 3 (m >= 4 when q = 3)");
  const std::uint64_t n = pow_sat(q, m) - 1;

  std::uint32_t dz_b = 0, dx_b = 0;
  std::int64_t k_formula = 0;
  const std::int64_t nn = static_cast<std::int64_t>(n);
  const std::int64_t mq = static_cast<std::int64_t>(m);
  const std::int64_t qq = static_cast<std::int64_t>(q);
  switch (bullet) {
    case 1:
      dz_b = static_cast<std::uint32_t>(2 * q + 2);
      dx_b = static_cast<std::uint32_t>(2 * q);
      k_formula = nn - mq * (4 * qq - 5) - 2;
      break;
    case 2:
      if (c > q - 2) throw std::invalid_argument("need 0 <= c <= q-2");
      dz_b = static_cast<std::uint32_t>(2 * q + 2);
      dx_b = static_cast<std::uint32_t>(2 * q - c);
      k_formula = nn - mq * (4 * qq - c - 5) - 2;
      break;
    case 3:
      if (c < 2 || c > q || l > c - 2)
        throw std::invalid_argument("need 2 <= c <= q, 0 <= l <= c-2");
      dz_b = c;
      dx_b = c - l;
      k_formula = nn - mq * (2 * static_cast<std::int64_t>(c) - l - 4) - 2;
      break;
    case 4:
      if (c <= q + 2 || c > 2 * q || (c >= q + 3 && l + q + 3 > c))
        throw std::invalid_argument("need q+2 < c <= 2q, 0 <= l <= c-q-3");
      dz_b = c;
      dx_b = c - l;
      k_formula = nn - mq * (2 * static_cast<std::int64_t>(c) - l - 6) - 2;
      break;
    case 5:
      if (l > q - 2) throw std::invalid_argument("need 0 <= l <= q-2");
      dz_b = static_cast<std::uint32_t>(2 * q + 1);
      dx_b = static_cast<std::uint32_t>(2 * q - l);
      k_formula = nn - mq * (4 * qq - l - 5) - 1;
      break;
    default:
      throw std::invalid_argument("bullet must be 1..5");
  }

  AqeccDerivation d;
  d.claim.theorem = "ABCH1";
  push_input(d.claim, "p", p);
  push_input(d.claim, "t", t);
  push_input(d.claim, "m", m);
  push_input(d.claim, "bullet", bullet);
  push_input(d.claim, "c", c);
  push_input(d.claim, "l", l);
  push_input(d.claim, "n", n);
  d.claim.claimed_n = static_cast<std::size_t>(t) * n;
  d.claim.claimed_k = static_cast<std::size_t>(t * std::max<std::int64_t>(k_formula, 0));
  d.claim.claimed_dz = dz_b;
  d.claim.claimed_dx = dx_b;

  if (pow_sat(p, t * m) > 1024) {
    d.claim.status = ClaimStatus::budget_exceeded;
    d.claim.note = "splitting field beyond the field budget";
    return d;
  }
  // reconstruct the external nested pair as narrow-sense BCH codes with the
  // claimed bounds as designed distances
  auto [c1, s1] = bch(field, n, 1, dz_b, 1024);
  auto [c2src, s2] = bch(field, n, 1, dx_b, 1024);
  LinearCode c2 = dual(c2src);
  if (!is_subcode(c2, c1) || c2.k() >= c1.k()) {
    d.claim.status = ClaimStatus::hypothesis_failed;
    d.claim.note = "reconstructed pair is not nested";
    return d;
  }
  FieldBasis basis = resolve_basis(p, t, basis_in);
  d.pair = CssPair(expand(c1, basis), expand(c2, basis));
  finish_claim(d, budget);
  return d;
}

// --- quadratic residue ---------------------------------------------------------

bool is_quadratic_residue(std::uint64_t q, std::uint32_t p_len) {
  std::uint64_t r = q % p_len;
  if (r == 0) return false;
  for (std::uint64_t s = 1; s < p_len; ++s)
    if (s * s % p_len == r) return true;
  return false;
}

std::uint32_t sqrt_bound(std::uint32_t p_len) {
  std::uint32_t d = 1;
  while (d * d < p_len) ++d;
  return d;
}

std::uint32_t qr3_bound(std::uint32_t p_len) {
  std::uint32_t d = 1;
  while (d * d - d + 1 < p_len) ++d;
  return d;
}

QrCodes qr(std::uint32_t p_len, const FieldPtr& field,
           std::uint64_t field_budget) {
  const FiniteField& F = *field;
  const std::uint64_t q = F.q();
  if (p_len < 3 || p_len % 2 == 0)
    throw std::invalid_argument("length must be an odd prime");
  for (std::uint32_t dd = 2; dd * dd <= p_len; ++dd)
    if (p_len % dd == 0) throw std::invalid_argument("length must be prime");
  if (q % p_len == 0) throw std::invalid_argument("p must not divide q");
  if (!is_quadratic_residue(q, p_len))
    throw std::invalid_argument("q is not a quadratic residue modulo p");

  std::uint32_t mm = multiplicative_order(q, p_len);
  auto top = FiniteField::make(F.p(), F.m() * mm, field_budget);
  auto tower = FieldTower::make(field, top);
  GfElem alpha = top->pow(top->generator(), (top->q() - 1) / p_len);

  std::set<std::uint32_t> squares;
  for (std::uint32_t s = 1; s < p_len; ++s)
    squares.insert(static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(s) * s % p_len));

  auto root_product = [&](const std::set<std::uint32_t>& exps) {
    FPoly g{1};
    for (std::uint32_t e : exps) {
      FPoly lin{top->neg(top->pow(alpha, e)), 1};
      g = fp_mul(*top, g, lin);
    }
    FPoly base(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      auto r = tower->restrict_to_bottom(g[i]);
      if (!r) throw std::logic_error("QR generator coefficient outside GF(q)");
      base[i] = *r;
    }
    return base;
  };

  std::set<std::uint32_t> nonsquares;
  for (std::uint32_t s = 1; s < p_len; ++s)
    if (!squares.count(s)) nonsquares.insert(s);

  FPoly qx = root_product(squares);
  FPoly cx = root_product(nonsquares);
  const FiniteField& Fq = *field;
  FPoly xm1{Fq.neg(1), 1};  // x - 1

  QrCodes out;
  out.prime_len = p_len;
  out.codes.push_back(cyclic_code(field, p_len, qx));
  out.codes.push_back(cyclic_code(field, p_len, fp_mul(Fq, xm1, qx)));
  out.codes.push_back(cyclic_code(field, p_len, cx));
  out.codes.push_back(cyclic_code(field, p_len, fp_mul(Fq, xm1, cx)));
  if (out.Q().k() != (p_len + 1) / 2 || out.Qd().k() != (p_len - 1) / 2)
    throw std::logic_error("QR code dimensions off");
  return out;
}

AqeccDerivation qr_aqecc(std::uint32_t p_len, std::uint32_t p_star,
                         std::uint32_t t,
                         const std::optional<FieldBasis>& basis_in,
                         const Budget& budget) {
  auto field = FiniteField::make(p_star, t);
  AqeccDerivation d;
  const bool one_mod_4 = (p_len % 4 == 1);
  d.claim.theorem = one_mod_4 ? "qrexp1" : "qrexp2";
  push_input(d.claim, "p", p_len);
  push_input(d.claim, "p_star", p_star);
  push_input(d.claim, "t", t);
  d.claim.claimed_n = static_cast<std::size_t>(t) * p_len;
  d.claim.claimed_k = t;
  std::uint32_t bound = one_mod_4 ? sqrt_bound(p_len) : qr3_bound(p_len);
  d.claim.claimed_dz = bound;
  d.claim.claimed_dx = bound;

  std::uint64_t splitting = pow_sat(field->q(), multiplicative_order(field->q(), p_len));
  if (splitting > 1024) {
    d.claim.status = ClaimStatus::budget_exceeded;
    d.claim.note = "splitting field beyond the field budget";
    return d;
  }
  QrCodes codes = qr(p_len, field, 1024);
  FieldBasis basis = resolve_basis(p_star, t, basis_in);

  if (one_mod_4) {
    LinearCode c2 = dual(codes.C());
    if (!is_subcode(c2, codes.Q())) {
      d.claim.status = ClaimStatus::hypothesis_failed;
      d.claim.note = "C^perp is not nested in Q";
      return d;
    }
    d.pair = CssPair(expand(codes.Q(), basis), expand(c2, basis));
    finish_claim(d, budget);
    return d;
  }

  // p = 4k+3: Q^perp = Q_degree sits inside Q; go through the additive layer
  LinearCode qperp = dual(codes.Q());
  if (!is_subcode(qperp, codes.Q())) {
    d.claim.status = ClaimStatus::hypothesis_failed;
    d.claim.note = "Q^perp is not nested in Q";
    return d;
  }
  CssPair base_pair(codes.Q(), qperp);
  AdditiveCode adc = css_to_additive(base_pair);
  AdditiveDerivation expanded = expand_additive_aqecc(adc, basis, budget);
  d.claim.status = expanded.claim.status;
  d.claim.note = expanded.claim.note.empty()
                     ? "derived through the additive expansion"
                     : expanded.claim.note;
  if (expanded.params) {
    AqeccParams p = *expanded.params;
    if (p.dz.exact) d.claim.oracle_dz = p.dz.value;
    if (p.dx.exact) d.claim.oracle_dx = p.dx.value;
    if (!d.claim.bounds_hold()) d.claim.status = ClaimStatus::violated;
    if (!p.dz.exact && d.claim.claimed_dz && *d.claim.claimed_dz > p.dz.value)
      p.dz.value = *d.claim.claimed_dz;
    if (!p.dx.exact && d.claim.claimed_dx && *d.claim.claimed_dx > p.dx.value)
      p.dx.value = *d.claim.claimed_dx;
    d.params = p;
    if (p.k != t) {
      d.claim.status = ClaimStatus::hypothesis_failed;
      d.claim.note = "constructed code has k = " + std::to_string(p.k) +
                     ", claimed " + std::to_string(t);
    }
  }
  return d;
}

}  // namespace aqecc
