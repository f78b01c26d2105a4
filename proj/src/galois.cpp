#include "aqecc/galois.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "aqecc/linalg.hpp"

namespace aqecc {
namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// --- dense polynomial arithmetic over GF(p), coefficients ascending ---

using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
  // f monic
  trim(a);
  while (a.size() >= f.size()) {
    std::uint32_t lead = a.back();
    std::size_t shift = a.size() - f.size();
    if (lead != 0) {
      for (std::size_t i = 0; i < f.size(); ++i) {
        std::uint64_t sub = static_cast<std::uint64_t>(lead) * f[i] % p;
        a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
      }
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = static_cast<std::uint32_t>(
          (c[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  }
  return poly_mod(std::move(c), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly r{1};
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  // modular inverse in GF(p) by Fermat
  auto inv_mod = [p](std::uint32_t v) {
    std::uint64_t r = 1, base = v, e = p - 2;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
  };
  while (!b.empty()) {
    // make b monic, then a mod b
    std::uint32_t bi = inv_mod(b.back());
    Poly bm = b;
    for (auto& c : bm) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * bi % p);
    a = poly_mod(std::move(a), bm, p);
    std::swap(a, b);
  }
  return a;
}

// Rabin irreducibility: f of degree m is irreducible over GF(p) iff
// x^{p^m} = x mod f and gcd(x^{p^{m/l}} - x, f) = 1 for all prime l | m.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  std::size_t m = f.size() - 1;
  Poly x{0, 1};
  auto frob_iterate = [&](std::size_t times) {
    // x^{p^times} mod f
    Poly t = poly_mod(x, f, p);
    for (std::size_t i = 0; i < times; ++i) t = poly_powmod(t, p, f, p);
    return t;
  };
  Poly xm = frob_iterate(m);
  Poly diff = xm;
  diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
  diff[1] = (diff[1] + p - 1) % p;
  trim(diff);
  if (!diff.empty()) return false;
  for (std::uint64_t l : prime_divisors(m)) {
    Poly xl = frob_iterate(m / l);
    Poly d = xl;
    d.resize(std::max<std::size_t>(d.size(), 2), 0);
    d[1] = (d[1] + p - 1) % p;
    trim(d);
    Poly g = poly_gcd(f, d, p);
    if (g.size() != 1) return false;
  }
  return true;
}

bool root_is_primitive(const Poly& f, std::uint32_t p, std::uint64_t q) {
  Poly x{0, 1};
  if (poly_mod(x, f, p).empty()) return false;  // x = 0 mod f
  for (std::uint64_t l : prime_divisors(q - 1)) {
    Poly t = poly_powmod(x, (q - 1) / l, f, p);
    if (t.size() == 1 && t[0] == 1) return false;
  }
  if (q == 2) return true;  // q-1 = 1, trivial group
  Poly full = poly_powmod(x, q - 1, f, p);
  return full.size() == 1 && full[0] == 1;
}

Poly canonical_modulus(std::uint32_t p, std::uint32_t m, std::uint64_t q) {
  // enumerate monic degree-m polynomials by the base-p encoding of their
  // lower coefficients
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < m; ++i) count *= p;
  for (std::uint64_t c = 0; c < count; ++c) {
    Poly f(m + 1, 0);
    std::uint64_t v = c;
    for (std::uint32_t i = 0; i < m; ++i) {
      f[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    f[m] = 1;
    if (m == 1) {
      // x + c0: root p - c0 must generate GF(p)^*
      if (f[0] == 0) continue;
    } else if (!is_irreducible(f, p)) {
      continue;
    }
    if (root_is_primitive(f, p, q)) return f;
  }
  throw std::logic_error("no primitive irreducible polynomial found");
}

}  // namespace

FiniteField::FiniteField(std::uint32_t p, std::uint32_t m) : p_(p), m_(m) {
  q_ = 1;
  for (std::uint32_t i = 0; i < m; ++i) q_ *= p;
  modulus_ = canonical_modulus(p, m, q_);

  // element index <-> digit decomposition is implicit; build tables
  auto digits = [&](GfElem e) {
    std::vector<std::uint32_t> d(m_);
    for (std::uint32_t i = 0; i < m_; ++i) {
      d[i] = static_cast<std::uint32_t>(e % p_);
      e = static_cast<GfElem>(e / p_);
    }
    return d;
  };
  auto index_of = [&](const Poly& f) {
    GfElem e = 0;
    std::uint64_t w = 1;
    for (std::size_t i = 0; i < f.size(); ++i) {
      e += static_cast<GfElem>(f[i] * w);
      w *= p_;
    }
    return e;
  };

  add_.resize(q_ * q_);
  neg_.resize(q_);
  for (GfElem a = 0; a < q_; ++a) {
    auto da = digits(a);
    for (GfElem b = 0; b < q_; ++b) {
      auto db = digits(b);
      GfElem e = 0;
      std::uint64_t w = 1;
      for (std::uint32_t i = 0; i < m_; ++i) {
        e += static_cast<GfElem>(((da[i] + db[i]) % p_) * w);
        w *= p_;
      }
      add_[a * q_ + b] = e;
    }
    GfElem e = 0;
    std::uint64_t w = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
      e += static_cast<GfElem>(((p_ - da[i]) % p_) * w);
      w *= p_;
    }
    neg_[a] = e;
  }

  // generator = class of x
  {
    Poly x{0, 1};
    generator_ = index_of(poly_mod(x, modulus_, p_));
  }

  // multiplication through polynomial arithmetic
  mul_.resize(q_ * q_);
  for (GfElem a = 0; a < q_; ++a) {
    Poly fa = digits(a);
    trim(fa);
    for (GfElem b = a; b < q_; ++b) {
      Poly fb = digits(b);
      trim(fb);
      GfElem e = index_of(poly_mulmod(fa, fb, modulus_, p_));
      mul_[a * q_ + b] = e;
      mul_[b * q_ + a] = e;
    }
  }

  // discrete log / exp over the generator
  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  GfElem cur = 1;
  for (std::uint64_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = cur;
    log_[cur] = static_cast<std::uint32_t>(i);
    cur = mul(cur, generator_);
  }
  if (cur != 1) throw std::logic_error("generator order mismatch");

  inv_.resize(q_);
  inv_[0] = 0;
  for (GfElem a = 1; a < q_; ++a)
    inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];

  frob_.resize(q_);
  for (GfElem a = 0; a < q_; ++a) frob_[a] = pow(a, p_);
}

std::shared_ptr<const FiniteField> FiniteField::make(std::uint32_t p,
                                                     std::uint32_t m,
                                                     std::uint64_t field_budget) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (m == 0) throw std::invalid_argument("extension degree must be >= 1");
  long double qd = 1;
  for (std::uint32_t i = 0; i < m; ++i) qd *= p;
  if (qd > static_cast<long double>(field_budget) || qd > 1024.0L)
    throw std::invalid_argument("p^m exceeds the field enumeration budget");

  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>,
                  std::shared_ptr<const FiniteField>>
      registry;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, m);
  auto it = registry.find(key);
  if (it != registry.end()) return it->second;
  auto field = std::shared_ptr<const FiniteField>(new FiniteField(p, m));
  registry.emplace(key, field);
  return field;
}

GfElem FiniteField::inv(GfElem a) const {
  if (a == 0) throw std::domain_error("division by zero in GF(q)");
  return inv_[a];
}

GfElem FiniteField::pow(GfElem a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  std::uint64_t le = static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1)) % (q_ - 1);
  return exp_[le];
}

std::uint64_t FiniteField::element_order(GfElem a) const {
  if (a == 0) throw std::domain_error("0 has no multiplicative order");
  std::uint64_t ord = q_ - 1;
  for (std::uint64_t l : prime_divisors(q_ - 1))
    while (ord % l == 0 && pow(a, ord / l) == 1) ord /= l;
  return ord;
}

std::vector<std::uint32_t> FiniteField::coeffs(GfElem a) const {
  std::vector<std::uint32_t> d(m_);
  for (std::uint32_t i = 0; i < m_; ++i) {
    d[i] = static_cast<std::uint32_t>(a % p_);
    a = static_cast<GfElem>(a / p_);
  }
  return d;
}

GfElem FiniteField::from_coeffs(std::span<const std::uint32_t> c) const {
  if (c.size() > m_) throw std::invalid_argument("too many coefficients");
  GfElem e = 0;
  std::uint64_t w = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= p_) throw std::invalid_argument("coefficient out of range");
    e += static_cast<GfElem>(c[i] * w);
    w *= p_;
  }
  return e;
}

GfElem FiniteField::trace_to_prime(GfElem a) const {
  GfElem s = 0, t = a;
  for (std::uint32_t i = 0; i < m_; ++i) {
    s = add(s, t);
    t = frobenius(t);
  }
  if (s >= p_) throw std::logic_error("trace escaped the prime field");
  return s;
}

// ---------------------------------------------------------------------------

FieldTower::FieldTower(FieldPtr bottom, FieldPtr top)
    : bottom_(std::move(bottom)), top_(std::move(top)) {
  degree_ = top_->m() / bottom_->m();

  // smallest root of the bottom modulus in the top field
  const auto& f = bottom_->modulus();
  GfElem root = 0;
  bool found = false;
  for (GfElem cand = 0; cand < top_->q(); ++cand) {
    GfElem acc = 0, xp = 1;
    for (std::size_t i = 0; i < f.size(); ++i) {
      acc = top_->add(acc, top_->mul(f[i], xp));  // constants embed by index
      xp = top_->mul(xp, cand);
    }
    if (acc == 0) {
      root = cand;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("bottom modulus has no root in top field");

  embed_.resize(bottom_->q());
  restrict_.assign(top_->q(), std::nullopt);
  for (GfElem e = 0; e < bottom_->q(); ++e) {
    auto d = bottom_->coeffs(e);
    GfElem acc = 0, rp = 1;
    for (std::uint32_t i = 0; i < bottom_->m(); ++i) {
      acc = top_->add(acc, top_->mul(d[i], rp));
      rp = top_->mul(rp, root);
    }
    embed_[e] = acc;
    restrict_[acc] = e;
  }
}

std::shared_ptr<const FieldTower> FieldTower::make(FieldPtr bottom, FieldPtr top) {
  if (bottom->p() != top->p())
    throw std::invalid_argument("tower fields must share characteristic");
  if (top->m() % bottom->m() != 0)
    throw std::invalid_argument("bottom degree must divide top degree");

  static std::mutex mu;
  static std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>,
                  std::shared_ptr<const FieldTower>>
      registry;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(top->p(), bottom->m(), top->m());
  auto it = registry.find(key);
  if (it != registry.end()) return it->second;
  auto tower = std::shared_ptr<const FieldTower>(new FieldTower(bottom, top));
  registry.emplace(key, tower);
  return tower;
}

std::optional<GfElem> FieldTower::restrict_to_bottom(GfElem top_elem) const {
  return restrict_.at(top_elem);
}

GfElem FieldTower::trace(GfElem a) const {
  GfElem s = 0, t = a;
  for (std::uint32_t i = 0; i < degree_; ++i) {
    s = top_->add(s, t);
    t = top_->pow(t, bottom_->q());
  }
  auto r = restrict_to_bottom(s);
  if (!r) throw std::logic_error("trace escaped the bottom field");
  return *r;
}

// ---------------------------------------------------------------------------

FieldBasis::FieldBasis(TowerPtr tower, std::vector<GfElem> elements)
    : tower_(std::move(tower)), elements_(std::move(elements)) {
  const auto& top = *tower_->top();
  const std::uint32_t d = tower_->degree();
  if (elements_.size() != d)
    throw std::invalid_argument("basis must have [top:bottom] elements");
  const std::uint64_t qb = tower_->bottom()->q();

  std::uint64_t combos = 1;
  for (std::uint32_t i = 0; i < d; ++i) combos *= qb;
  combo_of_.assign(top.q(), UINT32_MAX);
  for (std::uint64_t c = 0; c < combos; ++c) {
    std::uint64_t v = c;
    GfElem acc = 0;
    for (std::uint32_t j = 0; j < d; ++j) {
      GfElem coeff = static_cast<GfElem>(v % qb);
      v /= qb;
      if (coeff != 0)
        acc = top.add(acc, top.mul(tower_->embed(coeff), elements_[j]));
    }
    if (combo_of_[acc] != UINT32_MAX)
      throw std::invalid_argument("basis elements are linearly dependent");
    combo_of_[acc] = static_cast<std::uint32_t>(c);
  }
}

FieldBasis FieldBasis::polynomial(TowerPtr tower) {
  std::vector<GfElem> elems;
  const auto& top = *tower->top();
  GfElem cur = 1;
  for (std::uint32_t i = 0; i < tower->degree(); ++i) {
    elems.push_back(cur);
    cur = top.mul(cur, top.generator());
  }
  return FieldBasis(std::move(tower), std::move(elems));
}

FieldBasis FieldBasis::normal(TowerPtr tower) {
  if (tower->degree() != 2)
    throw std::invalid_argument("normal basis provided for quadratic towers only");
  const auto& top = *tower->top();
  const std::uint64_t qb = tower->bottom()->q();
  for (GfElem b = 1; b < top.q(); ++b) {
    GfElem conj = top.pow(b, qb);
    if (conj == b) continue;
    // independence of {b, b^q}: b^q / b must lie outside the bottom field
    GfElem ratio = top.div(conj, b);
    if (!tower->in_bottom(ratio))
      return FieldBasis(tower, {b, conj});
  }
  throw std::logic_error("no normal basis found");
}

std::vector<GfElem> FieldBasis::coords(GfElem top_elem) const {
  std::uint64_t c = combo_of_.at(top_elem);
  const std::uint64_t qb = tower_->bottom()->q();
  std::vector<GfElem> out(size());
  for (std::uint32_t j = 0; j < size(); ++j) {
    out[j] = static_cast<GfElem>(c % qb);
    c /= qb;
  }
  return out;
}

GfElem FieldBasis::combine(std::span<const GfElem> bottom_coords) const {
  if (bottom_coords.size() != size())
    throw std::invalid_argument("coordinate count mismatch");
  const auto& top = *tower_->top();
  GfElem acc = 0;
  for (std::uint32_t j = 0; j < size(); ++j)
    acc = top.add(acc, top.mul(tower_->embed(bottom_coords[j]), elements_[j]));
  return acc;
}

std::vector<std::vector<GfElem>> FieldBasis::gram() const {
  const auto& top = *tower_->top();
  const std::uint32_t d = size();
  std::vector<std::vector<GfElem>> g(d, std::vector<GfElem>(d));
  for (std::uint32_t i = 0; i < d; ++i)
    for (std::uint32_t j = 0; j < d; ++j)
      g[i][j] = tower_->trace(top.mul(elements_[i], elements_[j]));
  return g;
}

FieldBasis FieldBasis::dual() const {
  // b*_j = sum_i (M^{-1})_{ji} b_i with M the Gram matrix
  const std::uint32_t d = size();
  GfMat gm(tower_->bottom(), d, d);
  auto g = gram();
  for (std::uint32_t i = 0; i < d; ++i)
    for (std::uint32_t j = 0; j < d; ++j) gm.at(i, j) = g[i][j];
  auto minv = gf_mat_inverse(gm);
  if (!minv) throw std::logic_error("singular Gram matrix for a valid basis");
  const auto& top = *tower_->top();
  std::vector<GfElem> duals(d);
  for (std::uint32_t j = 0; j < d; ++j) {
    GfElem acc = 0;
    for (std::uint32_t i = 0; i < d; ++i)
      acc = top.add(acc, top.mul(tower_->embed(minv->at(j, i)), elements_[i]));
    duals[j] = acc;
  }
  return FieldBasis(tower_, std::move(duals));
}

bool FieldBasis::is_self_dual() const { return dual().elements() == elements_; }

}  // namespace aqecc
